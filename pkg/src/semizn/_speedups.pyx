# cython: language_level=3
"""Compiled sparse-term kernels; semantics identical to semizn._fallback."""
from cpython.ref cimport Py_INCREF
from cpython.tuple cimport (PyTuple_GET_ITEM, PyTuple_GET_SIZE, PyTuple_New,
                            PyTuple_SET_ITEM)

BACKEND = "compiled"


cdef inline tuple _add_tuples(tuple a, tuple b):
    cdef Py_ssize_t i, n = PyTuple_GET_SIZE(a)
    cdef tuple out = PyTuple_New(n)
    cdef object v
    for i in range(n):
        v = (<object>PyTuple_GET_ITEM(a, i)) + (<object>PyTuple_GET_ITEM(b, i))
        Py_INCREF(v)
        PyTuple_SET_ITEM(out, i, v)
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, key
    cdef object ca, cb, c
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = _add_tuples(ea, eb)
            c = out.get(key)
            if c is None:
                c = ca * cb
            else:
                c = c + ca * cb
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object k, c, s
    for k, c in b.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def axpy_terms(dict dst, coef, tuple shift, dict src):
    cdef tuple expo, key, kk
    cdef object pos, c, s
    for kk, c in src.items():
        pos = <object>PyTuple_GET_ITEM(kk, 0)
        expo = <tuple>PyTuple_GET_ITEM(kk, 1)
        key = (pos, _add_tuples(expo, shift))
        s = dst.get(key)
        s = coef * c if s is None else s + coef * c
        if s:
            dst[key] = s
        elif key in dst:
            del dst[key]
    return dst
