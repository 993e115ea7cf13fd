# cython: language_level=3
"""Compiled term-map kernel.

Mirrors _kernel_py exactly; see that module for the data contract.
Term maps are dict[tuple[int, ...], Fraction] with no zero values.
"""

from fractions import Fraction

BACKEND = "cython"


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    for mono, coeff in b.items():
        cur = out.get(mono)
        if cur is None:
            out[mono] = coeff
        else:
            s = cur + coeff
            if s:
                out[mono] = s
            else:
                del out[mono]
    return out


def neg_terms(dict a):
    cdef dict out = {}
    for mono, coeff in a.items():
        out[mono] = -coeff
    return out


def scale_terms(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for mono, coeff in a.items():
        out[mono] = coeff * c
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef Py_ssize_t i, n
    if len(a) > len(b):
        a, b = b, a
    for am, ac in a.items():
        n = len(am)
        for bm, bc in b.items():
            mono = tuple([am[i] + bm[i] for i in range(n)])
            cur = out.get(mono)
            if cur is None:
                out[mono] = ac * bc
            else:
                s = cur + ac * bc
                if s:
                    out[mono] = s
                else:
                    del out[mono]
    return out


def pow_terms(dict a, k, nvars):
    if k < 0:
        raise ValueError("negative exponent")
    cdef dict result = {(0,) * nvars: Fraction(1)}
    cdef dict base = dict(a)
    cdef long long e = k
    while e:
        if e & 1:
            result = mul_terms(result, base)
        e >>= 1
        if e:
            base = mul_terms(base, base)
    return result


def partial_terms(dict a, var):
    cdef dict out = {}
    cdef Py_ssize_t i = var
    for mono, coeff in a.items():
        e = mono[i]
        if e:
            lowered = mono[:i] + (e - 1,) + mono[i + 1 :]
            out[lowered] = coeff * e
    return out
