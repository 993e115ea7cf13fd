"""Finitely generated ideals of Q[x1..xn], studied locally at the origin.

A LocalIdeal keeps a canonical generator list: zero generators removed,
duplicates and coefficient-times-monomial multiples of earlier generators
pruned, remaining generators sorted by graded lex leading monomial and then
by full term sequence.  The ascending scan makes the pruning complete
because any multiple c * x^delta * h has a leading monomial at least as
large as the one of h.

The derivative operations adjoin first order partials.  They drive both
the order computation (the smallest level that reaches the unit ideal)
and the coefficient ideal construction.  Ideals generated by monomials
take a staircase shortcut that keeps generators monic; mixed generator
lists keep their scalars as produced, so derivative lists of non-monomial
ideals show factors like 2*x.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .arith import INF, Polynomial, VariableMismatchError, grlex_key

Mono = Tuple[int, ...]


class IdealOrderError(ValueError):
    """Raised when a construction needs a finite positive order."""


def _is_term_multiple(g: Polynomial, h: Polynomial) -> bool:
    # g == c * x^delta * h for a scalar c and monomial shift delta >= 0
    if len(g.terms) != len(h.terms):
        return False
    lg, lh = g.leading_monomial(), h.leading_monomial()
    delta = tuple(a - b for a, b in zip(lg, lh))
    if any(d < 0 for d in delta):
        return False
    c = g.terms[lg] / h.terms[lh]
    for mono, coeff in h.terms.items():
        shifted = tuple(a + b for a, b in zip(mono, delta))
        if g.terms.get(shifted) != c * coeff:
            return False
    return True


class LocalIdeal:
    __slots__ = ("variables", "generators")

    def __init__(self, variables: Sequence[str], generators: Iterable[Polynomial]):
        vs = tuple(variables)
        polys = []
        for g in generators:
            if g.variables != vs:
                raise VariableMismatchError("generator lives in a different ring")
            if not g.is_zero():
                polys.append(g)
        polys.sort(key=Polynomial.sort_key)
        kept: List[Polynomial] = []
        for g in polys:
            if not any(_is_term_multiple(g, h) for h in kept):
                kept.append(g)
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "generators", tuple(kept))

    def __setattr__(self, name, value):
        raise AttributeError("LocalIdeal is immutable")

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LocalIdeal":
        return cls(variables, [])

    @classmethod
    def unit(cls, variables: Sequence[str]) -> "LocalIdeal":
        return cls(variables, [Polynomial.constant(variables, 1)])

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.constant_term() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(len(g.terms) == 1 for g in self.generators)

    def order(self):
        """Order of vanishing at the origin; INF for the zero ideal."""
        if not self.generators:
            return INF
        return min(g.ord_at_origin() for g in self.generators)

    def max_total_degree(self) -> int:
        return max((g.total_degree() for g in self.generators), default=0)

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "LocalIdeal") -> "LocalIdeal":
        if self.variables != other.variables:
            raise VariableMismatchError("ideal sum across different rings")
        return LocalIdeal(self.variables, self.generators + other.generators)

    def __mul__(self, other: "LocalIdeal") -> "LocalIdeal":
        if self.variables != other.variables:
            raise VariableMismatchError("ideal product across different rings")
        if self.is_monomial() and other.is_monomial():
            monos = minkowski_sum(
                [g.leading_monomial() for g in self.generators],
                [g.leading_monomial() for g in other.generators],
            )
            return _from_monomials(self.variables, monos)
        gens = [a * b for a in self.generators for b in other.generators]
        return LocalIdeal(self.variables, gens)

    def __pow__(self, k: int) -> "LocalIdeal":
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return LocalIdeal.unit(self.variables)
        if self.is_monomial():
            monos = monomial_power([g.leading_monomial() for g in self.generators], k)
            return _from_monomials(self.variables, monos)
        result = None
        base = self
        e = k
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- ring maps ---------------------------------------------------------

    def eliminate(self, name: str, image: Polynomial) -> "LocalIdeal":
        """Substitute image for one variable and remove it from the ring.

        The image must not involve the eliminated variable."""
        if image.uses_variable(name):
            raise ValueError("image of eliminated variable uses that variable")
        gens = [g.substitute_variable(name, image).drop_variable(name) for g in self.generators]
        vs = tuple(v for v in self.variables if v != name)
        return LocalIdeal(vs, gens)

    def embed(self, variables: Sequence[str]) -> "LocalIdeal":
        return LocalIdeal(variables, [g.embed(variables) for g in self.generators])

    # -- plumbing ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        # canonical generator list equality, not ideal equality
        if not isinstance(other, LocalIdeal):
            return NotImplemented
        return self.variables == other.variables and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.variables, self.generators))

    def __repr__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def _from_monomials(variables: Tuple[str, ...], monos: Iterable[Mono]) -> LocalIdeal:
    gens = [
        Polynomial(variables, {m: Fraction(1)}) for m in prune_dominated(list(monos))
    ]
    return LocalIdeal(variables, gens)


# -- monomial staircases ------------------------------------------------------


def prune_dominated(monos: List[Mono]) -> List[Mono]:
    """Minimal exponents under componentwise <= (the divisibility order)."""
    if not monos:
        return []
    if len(monos[0]) == 2:
        best = None
        out = []
        for a, b in sorted(set(monos)):
            if best is None or b < best:
                out.append((a, b))
                best = b
        return out
    kept: List[Mono] = []
    for m in sorted(set(monos)):
        if not any(all(a >= b for a, b in zip(m, h)) for h in kept):
            kept.append(m)
    return kept


def minkowski_sum(a: List[Mono], b: List[Mono]) -> List[Mono]:
    sums = {tuple(x + y for x, y in zip(ma, mb)) for ma in a for mb in b}
    return prune_dominated(list(sums))


def monomial_power(monos: List[Mono], k: int) -> List[Mono]:
    if k < 0:
        raise ValueError("negative power")
    if not monos:
        return [] if k else [(0,) * 0]
    n = len(monos[0])
    result = [(0,) * n]
    base = prune_dominated(monos)
    e = k
    while e:
        if e & 1:
            result = minkowski_sum(result, base)
        e >>= 1
        if e:
            base = minkowski_sum(base, base)
    return result


# -- derivative levels ----------------------------------------------------------


def derivative_ideal(ideal: LocalIdeal) -> LocalIdeal:
    """Adjoin all first order partial derivatives of the generators."""
    if ideal.is_monomial():
        monos = []
        for g in ideal.generators:
            m = g.leading_monomial()
            if sum(m) == 0:
                monos.append(m)
                continue
            monos.append(m)
            for i, e in enumerate(m):
                if e:
                    monos.append(m[:i] + (e - 1,) + m[i + 1 :])
        return _from_monomials(ideal.variables, monos)
    gens = list(ideal.generators)
    for g in ideal.generators:
        for v in ideal.variables:
            gens.append(g.partial(v))
    return LocalIdeal(ideal.variables, gens)


def derivative_tower(ideal: LocalIdeal, depth: int) -> List[LocalIdeal]:
    """Levels [D^0, ..., D^depth] where each step adjoins first partials."""
    levels = [ideal]
    for _ in range(depth):
        levels.append(derivative_ideal(levels[-1]))
    return levels


def ord_via_derivations(ideal: LocalIdeal):
    """Smallest number of derivative steps reaching the unit ideal.

    Agrees with LocalIdeal.order over Q; kept as an independent check and
    as the order notion that the center construction is phrased in."""
    if ideal.is_zero():
        return INF
    bound = 1 + ideal.max_total_degree()
    cur, d = ideal, 0
    while not cur.is_unit():
        cur = derivative_ideal(cur)
        d += 1
        if d > bound:
            raise AssertionError("derivative tower failed to reach the unit ideal")
    return d


def coefficient_ideal(ideal: LocalIdeal) -> LocalIdeal:
    """Sum over i < d of (D^i levels) raised to d!/(d-i), with d = order.

    Needs 0 < d < infinity; homogenizes the derivative levels to a common
    weight so the result scales correctly under further restrictions."""
    d = ideal.order()
    if d == INF:
        raise IdealOrderError("coefficient ideal of the zero ideal")
    if d == 0:
        raise IdealOrderError("coefficient ideal of the unit ideal")
    fact = math.factorial(d)
    total = None
    for i, level in enumerate(derivative_tower(ideal, d - 1)):
        piece = level ** (fact // (d - i))
        total = piece if total is None else total + piece
    return total


# -- division utilities ------------------------------------------------------------


def divide_remainder(f: Polynomial, divisors: Sequence[Polynomial]) -> Polynomial:
    """Remainder of multivariate division by graded lex leading terms.

    A zero remainder certifies membership in the ideal of the divisors;
    a nonzero remainder proves nothing."""
    leads = [(g.leading_monomial(), g) for g in divisors if not g.is_zero()]
    work: Dict[Mono, Fraction] = dict(f.terms)
    remainder: Dict[Mono, Fraction] = {}
    while work:
        m = max(work, key=grlex_key)
        c = work.pop(m)
        hit = None
        for lead, g in leads:
            if all(a >= b for a, b in zip(m, lead)):
                hit = (lead, g)
                break
        if hit is None:
            remainder[m] = c
            continue
        lead, g = hit
        delta = tuple(a - b for a, b in zip(m, lead))
        scale = c / g.terms[lead]
        for gm, gc in g.terms.items():
            if gm == lead:
                continue
            sm = tuple(a + b for a, b in zip(gm, delta))
            cur = work.get(sm)
            val = (cur if cur is not None else Fraction(0)) - scale * gc
            if val:
                work[sm] = val
            elif cur is not None:
                del work[sm]
    return Polynomial(f.variables, remainder)


def autoreduce(gens: Sequence[Polynomial]) -> List[Polynomial]:
    """Reduce every generator against the others until nothing changes.

    Preserves the generated ideal; terminates because each rewrite step
    trades a term for strictly smaller ones in graded lex order.  Results
    are scaled monic so repeated reductions cannot leak stray factors."""
    current = [g for g in gens if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(current)):
            others = current[:i] + current[i + 1 :]
            r = divide_remainder(current[i], others)
            if r != current[i]:
                changed = True
                if r.is_zero():
                    current.pop(i)
                else:
                    current[i] = r
                break
    monic = [g.scale(1 / g.terms[g.leading_monomial()]) for g in current]
    return sorted(monic, key=Polynomial.sort_key)
