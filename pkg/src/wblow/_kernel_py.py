"""Pure Python term-map kernel.

A term map is a dict sending exponent tuples (one int per variable) to
nonzero Fraction coefficients.  The empty dict is the zero polynomial.
These functions are the arithmetic inner loop of the whole package; the
Cython module _kernel_cy mirrors this file exactly and is preferred at
import time when it compiled.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

Term = Tuple[int, ...]
TermMap = Dict[Term, Fraction]

BACKEND = "python"


def add_terms(a: TermMap, b: TermMap) -> TermMap:
    out = dict(a)
    for mono, coeff in b.items():
        acc = out.get(mono)
        if acc is None:
            out[mono] = coeff
        else:
            acc = acc + coeff
            if acc:
                out[mono] = acc
            else:
                del out[mono]
    return out


def neg_terms(a: TermMap) -> TermMap:
    return {mono: -coeff for mono, coeff in a.items()}


def scale_terms(a: TermMap, c: Fraction) -> TermMap:
    if not c:
        return {}
    return {mono: coeff * c for mono, coeff in a.items()}


def mul_terms(a: TermMap, b: TermMap) -> TermMap:
    if len(a) > len(b):
        a, b = b, a
    out: TermMap = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            acc = out.get(mono)
            if acc is None:
                out[mono] = ca * cb
            else:
                acc = acc + ca * cb
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
    return out


def pow_terms(a: TermMap, k: int, nvars: int) -> TermMap:
    """k-th power by squaring; k = 0 gives the constant 1."""
    if k < 0:
        raise ValueError("negative exponent")
    result: TermMap = {(0,) * nvars: Fraction(1)}
    base = dict(a)
    while k:
        if k & 1:
            result = mul_terms(result, base)
        k >>= 1
        if k:
            base = mul_terms(base, base)
    return result


def partial_terms(a: TermMap, var: int) -> TermMap:
    out: TermMap = {}
    for mono, coeff in a.items():
        e = mono[var]
        if e:
            lowered = mono[:var] + (e - 1,) + mono[var + 1 :]
            out[lowered] = coeff * e
    return out
