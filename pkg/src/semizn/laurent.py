"""Exact sparse multivariate Laurent polynomials.

A polynomial in n variables is stored as a dict mapping exponent tuples
(length n, entries may be negative) to nonzero coefficients.  Coefficients
are Python ints or Fractions; all arithmetic is exact.  Weighted degrees,
initial forms and evaluation at positive rational points are the operations
the rest of the package is built on.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from semizn.kernels import add_terms, mul_terms

NEG_INF = float("-inf")  # order-only sentinel for deg of the zero polynomial


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def grlex_key(expo: Sequence[int]):
    """Graded-lexicographic sort key; used for determinism only."""
    return (sum(expo), tuple(expo))


class LaurentPoly:
    """Immutable sparse Laurent polynomial with exact coefficients."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for expo, c in items:
            expo = tuple(int(e) for e in expo)
            if len(expo) != n:
                raise ValueError(f"exponent vector {expo} has length {len(expo)}, expected {n}")
            c = _norm_coeff(c if isinstance(c, (int, Fraction)) else Fraction(c))
            if c:
                clean[expo] = clean.get(expo, 0) + c
                if not clean[expo]:
                    del clean[expo]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n, {})

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def constant(cls, n: int, c) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, expo: Sequence[int], c=1) -> "LaurentPoly":
        expo = tuple(int(e) for e in expo)
        return cls(len(expo), {expo: c})

    # -- structure ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset:
        return frozenset(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def coefficient(self, expo: Sequence[int]):
        return self.terms.get(tuple(expo), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def has_positive_coeffs(self) -> bool:
        return bool(self.terms) and all(c > 0 for c in self.terms.values())

    def height(self) -> int:
        """Max absolute coefficient (0 for the zero polynomial)."""
        return max((abs(c) for c in self.terms.values()), default=0)

    def sup_degree(self) -> int:
        """Max sup-norm of an exponent vector (0 for the zero polynomial)."""
        return max((max(map(abs, e), default=0) for e in self.terms), default=0)

    # -- ring ops ----------------------------------------------------------
    def _check(self, other: "LaurentPoly"):
        if self.n != other.n:
            raise ValueError(f"variable-count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        return LaurentPoly(self.n, add_terms(self.terms, other.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        return LaurentPoly(self.n, mul_terms(self.terms, other.terms))

    def scale(self, c) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def shift(self, z: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial X^z."""
        z = tuple(int(v) for v in z)
        if len(z) != self.n:
            raise ValueError("shift vector length mismatch")
        return LaurentPoly(
            self.n, {tuple(a + b for a, b in zip(e, z)): c for e, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly) and self.n == other.n and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, frozenset(self.terms.items()))))
        return self._hash

    # -- weighted degree machinery ------------------------------------------
    def weighted_degree(self, v: Sequence):
        """Max of v . a over the support; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        v = as_direction(v, self.n)
        return max(_dot(v, e) for e in self.terms)

    def initial(self, v: Sequence) -> "LaurentPoly":
        """Sub-sum of the terms attaining the maximal v-weighted degree."""
        if not self.terms:
            return self
        v = as_direction(v, self.n)
        deg = max(_dot(v, e) for e in self.terms)
        return LaurentPoly(
            self.n, {e: c for e, c in self.terms.items() if _dot(v, e) == deg}
        )

    def evaluate_positive(self, r: Sequence) -> Fraction:
        """Exact value at a strictly positive rational point."""
        r = [Fraction(x) for x in r]
        if len(r) != self.n:
            raise ValueError("evaluation point length mismatch")
        if any(x <= 0 for x in r):
            raise ValueError("evaluation point must be strictly positive")
        total = Fraction(0)
        for e, c in self.terms.items():
            val = Fraction(1)
            for base, exp in zip(r, e):
                val *= base ** exp
            total += c * val
        return total

    def __repr__(self):
        if not self.terms:
            return "LaurentPoly(0)"
        bits = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"X{i+1}^{k}" for i, k in enumerate(e) if k) or "1"
            bits.append(f"{c}*{mono}")
        return "LaurentPoly(" + " + ".join(bits) + ")"


def _dot(v, e) -> Fraction:
    return sum((a * b for a, b in zip(v, e)), Fraction(0))


def as_direction(v: Sequence, n: int):
    """Validate and normalize a nonzero rational direction vector."""
    vec = tuple(Fraction(x) for x in v)
    if len(vec) != n:
        raise ValueError(f"direction has length {len(vec)}, expected {n}")
    if all(x == 0 for x in vec):
        raise ValueError("direction must be nonzero")
    return vec
