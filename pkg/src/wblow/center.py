"""Weighted centers presented over triangular coordinate frames.

A weighted center is a formal ideal [t1^d1, ..., tk^dk].  Entry i of the
frame supplies the coordinate t_i = v_i + tail_i for an ambient variable
v_i; the tail has no constant term and avoids the frame variables of
positions <= i, so substituting the entries in order rewrites any ambient
polynomial in the frame coordinates.  Tails may use later frame variables
and complement variables.  The exponents d_i are positive rationals,
weakly increasing along the frame.

The center induces a valuation: rewrite a polynomial in the frame, give
the coordinate of entry i weight 1/d_i and complement variables weight
zero, and take the minimal weighted degree of a term.  An ideal is
admissible for the center when every generator has valuation at least 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as iter_product
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .arith import INF, Polynomial, VariableMismatchError
from .ideals import LocalIdeal, autoreduce, prune_dominated


class TriangularizationError(ValueError):
    """An element could not be brought to coordinate graph form."""

    def __init__(self, message: str, polynomial: Optional[Polynomial] = None):
        super().__init__(message)
        self.polynomial = polynomial


class FrameEntry(NamedTuple):
    variable: str
    tail: Polynomial


class WeightedCenter:
    __slots__ = ("variables", "entries", "exponents")

    def __init__(
        self,
        variables: Sequence[str],
        entries: Sequence[FrameEntry],
        exponents: Sequence[Fraction],
    ):
        vs = tuple(variables)
        ents = tuple(entries)
        exps = tuple(Fraction(e) for e in exponents)
        if not ents:
            raise ValueError("a weighted center needs at least one frame entry")
        if len(ents) != len(exps):
            raise ValueError("entry and exponent counts differ")
        if any(e <= 0 for e in exps):
            raise ValueError("exponents must be positive")
        if any(a > b for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be weakly increasing")
        seen: List[str] = []
        for ent in ents:
            if ent.variable not in vs:
                raise ValueError(f"unknown frame variable {ent.variable}")
            if ent.variable in seen:
                raise ValueError(f"repeated frame variable {ent.variable}")
            seen.append(ent.variable)
            if ent.tail.variables != vs:
                raise VariableMismatchError("tail lives in a different ring")
            if ent.tail.constant_term():
                raise ValueError("frame tail has a constant term")
            for used in seen:
                if ent.tail.uses_variable(used):
                    raise ValueError(
                        f"tail of {ent.variable} uses frame variable {used}"
                    )
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "entries", ents)
        object.__setattr__(self, "exponents", exps)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedCenter is immutable")

    # -- presentation -----------------------------------------------------

    def multiorder(self) -> Tuple[Fraction, ...]:
        return self.exponents

    def frame_parameter(self, i: int) -> Polynomial:
        ent = self.entries[i]
        return Polynomial.variable(self.variables, ent.variable) + ent.tail

    def parameters(self) -> List[Tuple[Polynomial, Fraction]]:
        return [(self.frame_parameter(i), d) for i, d in enumerate(self.exponents)]

    @property
    def weight_lcm(self) -> int:
        """Smallest N with N/d_i integral for every exponent."""
        n = 1
        for d in self.exponents:
            n = n * d.numerator // math.gcd(n, d.numerator)
        return n

    @property
    def weights(self) -> Tuple[int, ...]:
        n = self.weight_lcm
        out = []
        for d in self.exponents:
            w = Fraction(n) / d
            assert w.denominator == 1
            out.append(w.numerator)
        return tuple(out)

    # -- valuation ----------------------------------------------------------

    def _frame_names(self) -> Tuple[str, ...]:
        names = []
        for i in range(len(self.entries)):
            name = f"_t{i + 1}"
            while name in self.variables:
                name += "_"
            names.append(name)
        return tuple(names)

    def rewrite_in_frame(self, f: Polynomial) -> Polynomial:
        """Express f in frame coordinates.

        The result lives in the ring of complement variables plus one
        fresh name per frame entry, in that order."""
        if f.variables != self.variables:
            raise VariableMismatchError("polynomial lives in a different ring")
        tnames = self._frame_names()
        ext = self.variables + tnames
        g = f.embed(ext)
        for name, ent in zip(tnames, self.entries):
            image = Polynomial.variable(ext, name) - ent.tail.embed(ext)
            g = g.substitute_variable(ent.variable, image)
        for ent in self.entries:
            g = g.drop_variable(ent.variable)
        return g

    def nu(self, f: Polynomial):
        """Valuation of f: frame coordinate i weighs 1/d_i, complement
        variables weigh zero.  INF on the zero polynomial."""
        g = self.rewrite_in_frame(f)
        k = len(self.entries)
        complement = len(g.variables) - k
        weights = [Fraction(0)] * complement + [
            Fraction(1) / d for d in self.exponents
        ]
        return g.weighted_order(weights)

    def nu_ideal(self, ideal: LocalIdeal):
        if ideal.variables != self.variables:
            raise VariableMismatchError("ideal lives in a different ring")
        if ideal.is_zero():
            return INF
        return min(self.nu(g) for g in ideal.generators)

    def admissible(self, ideal: LocalIdeal) -> bool:
        """Whether every element of the ideal has valuation at least 1."""
        return self.nu_ideal(ideal) >= 1

    # -- rounding -------------------------------------------------------------

    def rounding(self) -> List[Polynomial]:
        """Generators of the smallest monomial ideal in the frame
        coordinates that the center dominates: minimal exponent vectors a
        with sum a_i/d_i >= 1, pushed down to the ambient ring and
        autoreduced.  Sorted by degree, then descending lex."""
        boxes = [range(math.ceil(d) + 1) for d in self.exponents]
        hits = [
            a
            for a in iter_product(*boxes)
            if sum((Fraction(ai) / d for ai, d in zip(a, self.exponents)), Fraction(0))
            >= 1
        ]
        ambient = []
        for a in prune_dominated(hits):
            m = Polynomial.constant(self.variables, 1)
            for i, ai in enumerate(a):
                if ai:
                    m = m * self.frame_parameter(i) ** ai
            ambient.append(m)
        reduced = autoreduce(ambient)
        return sorted(reduced, key=_presentation_key)

    # -- serialization ------------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "parameters": [
                {
                    "variable": ent.variable,
                    "tail": str(ent.tail),
                    "exponent": format_rational(d),
                }
                for ent, d in zip(self.entries, self.exponents)
            ],
            "lcm": self.weight_lcm,
            "weights": list(self.weights),
        }

    def __repr__(self) -> str:
        parts = [
            f"({self.frame_parameter(i)})^{d}" for i, d in enumerate(self.exponents)
        ]
        return "[" + ", ".join(parts) + "]"


def _presentation_key(p: Polynomial) -> tuple:
    lead = p.leading_monomial()
    return (sum(lead), tuple(-e for e in lead))


def format_rational(x) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class TransportedCenter:
    """A weighted center carried through an invertible change of
    coordinates, without rebuilding a triangular frame.

    to_base maps each variable of the new ring to its image in the ring
    of the wrapped center, so valuations pull back: nu(f) is the base
    valuation of f after substitution.  from_base goes the other way and
    carries the presentation parameters forward."""

    __slots__ = ("base", "to_base", "from_base")

    def __init__(
        self,
        base: WeightedCenter,
        to_base: Dict[str, Polynomial],
        from_base: Dict[str, Polynomial],
    ):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "to_base", dict(to_base))
        object.__setattr__(self, "from_base", dict(from_base))

    def __setattr__(self, name, value):
        raise AttributeError("TransportedCenter is immutable")

    def multiorder(self) -> Tuple[Fraction, ...]:
        return self.base.multiorder()

    def nu(self, f: Polynomial):
        return self.base.nu(f.substitute(self.to_base))

    def parameters(self) -> List[Tuple[Polynomial, Fraction]]:
        return [
            (p.substitute(self.from_base), d) for p, d in self.base.parameters()
        ]


def center_equal(a, b) -> bool:
    """Centers agree when their multiorders match and each presentation
    is admissible for the other: every parameter t_i of one side must
    have valuation at least 1/d_i under the other."""
    if tuple(a.multiorder()) != tuple(b.multiorder()):
        return False
    for p, d in a.parameters():
        if b.nu(p) < Fraction(1) / Fraction(d):
            return False
    for p, d in b.parameters():
        if a.nu(p) < Fraction(1) / Fraction(d):
            return False
    return True


# -- building frames from raw parameters -----------------------------------


def divide_by_monic_linear(
    p: Polynomial, var: str, psi: Polynomial
) -> Tuple[Polynomial, Polynomial]:
    """Synthetic division of p by (var - psi) with psi free of var.

    Returns (quotient, remainder); the remainder equals p at var = psi."""
    if psi.uses_variable(var):
        raise ValueError("divisor tail uses the divided variable")
    idx = p.variables.index(var)
    top = p.degree_in(var)
    zero = Polynomial.zero(p.variables)
    coeffs = [zero] * (top + 1)
    for mono, c in p.terms.items():
        k = mono[idx]
        rest = mono[:idx] + (0,) + mono[idx + 1 :]
        coeffs[k] = coeffs[k] + Polynomial(p.variables, {rest: c})
    x = Polynomial.variable(p.variables, var)
    quotient = zero
    b = coeffs[top] if top else zero
    for k in range(top, 0, -1):
        quotient = quotient + b * x ** (k - 1)
        b = coeffs[k - 1] + psi * b
    remainder = b if top else coeffs[0]
    return quotient, remainder


def graph_normalize(p: Polynomial, var: str) -> Optional[Polynomial]:
    """Try to write p as unit * (var + tail) with the tail free of var.

    Returns the tail, or None when the vanishing germ of p at the origin
    is not the graph of a polynomial in the other variables.  The
    candidate graph comes from iterating var -> -(p/c - var) to the
    degree of p; an exact division check then accepts or rejects it."""
    if p.constant_term():
        return None
    c = p.linear_coefficient(var)
    if not c:
        return None
    q = p.scale(1 / c)
    g = q - Polynomial.variable(q.variables, var)
    if g.is_zero():
        return Polynomial.zero(q.variables)
    bound = q.total_degree()
    phi = Polynomial.zero(q.variables)
    for _ in range(bound + 1):
        phi = (-g.substitute_variable(var, phi)).truncate_degree(bound)
    quotient, remainder = divide_by_monic_linear(q, var, phi)
    if not remainder.is_zero():
        return None
    if not quotient.constant_term():
        return None
    return -phi


def frame_from_parameters(
    variables: Sequence[str],
    params: Sequence[Tuple[Polynomial, Fraction]],
) -> WeightedCenter:
    """Build a center from parameter polynomials and their exponents.

    Each parameter must define a coordinate graph over a fresh variable:
    the lowest-index candidate that normalizes and whose tail avoids the
    frame variables chosen so far wins."""
    vs = tuple(variables)
    used: List[str] = []
    entries: List[FrameEntry] = []
    for p, _d in params:
        entry = None
        for v in vs:
            if v in used or not p.linear_coefficient(v):
                continue
            tail = graph_normalize(p, v)
            if tail is None:
                continue
            if any(tail.uses_variable(u) for u in used):
                continue
            entry = FrameEntry(v, tail)
            break
        if entry is None:
            raise TriangularizationError(
                "parameter does not define a triangular coordinate", p
            )
        used.append(entry.variable)
        entries.append(entry)
    return WeightedCenter(vs, entries, [Fraction(d) for _, d in params])
