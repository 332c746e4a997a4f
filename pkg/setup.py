"""Build script: compiles the optional term-arithmetic speedup extension.

The package is pure Python; the extension is a drop-in accelerator for the
sparse-term kernels and is skipped silently when Cython or a C compiler is
unavailable.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/semizn/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
