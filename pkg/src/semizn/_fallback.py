"""Pure-Python sparse-term kernels.

Terms are dicts mapping an exponent tuple (or any hashable key) to a nonzero
coefficient.  These three functions are the inner loops of polynomial
multiplication and Groebner reduction; `semizn._speedups` provides a compiled
twin with identical semantics.
"""

BACKEND = "pure"


def mul_terms(a, b):
    """Product of two term dicts keyed by exponent tuples."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(key, 0) + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def add_terms(a, b):
    """Sum of two term dicts (keys need not be tuples)."""
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def axpy_terms(dst, coef, shift, src):
    """In-place dst += coef * X^shift * src for keys of the form (pos, expo).

    `shift` is an exponent tuple added to the exponent part of each key; used
    by module-vector reduction where keys are (position, exponents) pairs.
    """
    for (pos, expo), c in src.items():
        key = (pos, tuple(x + y for x, y in zip(expo, shift)))
        s = dst.get(key, 0) + coef * c
        if s:
            dst[key] = s
        elif key in dst:
            del dst[key]
    return dst
