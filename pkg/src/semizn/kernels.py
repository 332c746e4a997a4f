"""Kernel backend selection: compiled extension if present, pure otherwise.

Set SEMIZN_PURE=1 to force the pure-Python kernels (used by the benchmark and
by tests that compare the two backends).
"""
import os

if os.environ.get("SEMIZN_PURE"):
    from semizn._fallback import BACKEND, add_terms, axpy_terms, mul_terms
else:
    try:
        from semizn._speedups import BACKEND, add_terms, axpy_terms, mul_terms
    except ImportError:
        from semizn._fallback import BACKEND, add_terms, axpy_terms, mul_terms

__all__ = ["BACKEND", "mul_terms", "add_terms", "axpy_terms"]
