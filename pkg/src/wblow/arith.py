"""Exact sparse polynomial arithmetic over Q.

A Polynomial is a variable list plus a term map {exponent tuple: Fraction}.
Zero coefficients are never stored; the zero polynomial has an empty map.
Monomials are plain exponent tuples whose length equals the number of
variables.  The canonical term order is graded lexicographic: compare
total degree first, then the exponent tuple.  Printing lists terms by
ascending degree and descending lex inside a degree, which matches the
text grammar accepted by parse_polynomial:

    poly   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := integer ['/' positive-integer] | variable ['^' positive-integer]

Whitespace is insignificant.  Example: x^2 + 1/2*x*y^2.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from . import kernel

INF = float("inf")

Term = Tuple[int, ...]
Rationalish = Union[int, Fraction]


class ParseError(ValueError):
    pass


class VariableMismatchError(ValueError):
    pass


def grlex_key(mono: Term) -> tuple:
    return (sum(mono), mono)


def _print_key(mono: Term) -> tuple:
    # ascending degree, descending lex within a degree
    return (sum(mono), tuple(-e for e in mono))


class Polynomial:
    """Immutable by convention; all operations return new objects."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[Term, Rationalish]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate variable names")
        clean: Dict[Term, Fraction] = {}
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if len(mono) != len(vs):
                raise ValueError("exponent tuple length does not match variables")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        object.__setattr__(self, "variables", vs)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], c: Rationalish) -> "Polynomial":
        return cls(variables, {(0,) * len(tuple(variables)): Fraction(c)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Polynomial":
        vs = tuple(variables)
        i = vs.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(vs)))
        return cls(vs, {mono: Fraction(1)})

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Term, Fraction]) -> "Polynomial":
        # internal: terms already canonical (no zeros, right arity)
        self = object.__new__(cls)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def ord_at_origin(self):
        """Minimal total degree of a term; INF for the zero polynomial."""
        if not self.terms:
            return INF
        return min(sum(m) for m in self.terms)

    def weighted_order(self, weights: Sequence[Fraction]):
        """min over terms of sum(e_i * w_i); INF for zero."""
        if not self.terms:
            return INF
        best = None
        for mono in self.terms:
            v = sum((w * e for w, e in zip(weights, mono)), Fraction(0))
            if best is None or v < best:
                best = v
        return best

    def leading_monomial(self) -> Term:
        """Largest monomial in graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def coefficient(self, mono: Term) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def linear_coefficient(self, name: str) -> Fraction:
        i = self.variables.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(self.variables)))
        return self.terms.get(mono, Fraction(0))

    def uses_variable(self, name: str) -> bool:
        i = self.variables.index(name)
        return any(m[i] for m in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((m[i] for m in self.terms), default=0)

    def sort_key(self) -> tuple:
        """Total order on polynomials in a fixed ring, used for canonical
        generator ordering: leading monomial first, then the term list."""
        if not self.terms:
            return ((0, ()), ())
        lead = self.leading_monomial()
        items = tuple(
            (grlex_key(m), c.numerator, c.denominator)
            for m, c in sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]))
        )
        return (grlex_key(lead), items)

    # -- ring operations -----------------------------------------------

    def _check_ring(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise VariableMismatchError(
                f"variable lists differ: {self.variables} vs {other.variables}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return Polynomial._raw(self.variables, kernel.add_terms(self.terms, other.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return Polynomial._raw(
            self.variables, kernel.add_terms(self.terms, kernel.neg_terms(other.terms))
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.variables, kernel.neg_terms(self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return Polynomial._raw(self.variables, kernel.mul_terms(self.terms, other.terms))

    def __pow__(self, k: int) -> "Polynomial":
        return Polynomial._raw(
            self.variables, kernel.pow_terms(self.terms, k, len(self.variables))
        )

    def scale(self, c: Rationalish) -> "Polynomial":
        return Polynomial._raw(self.variables, kernel.scale_terms(self.terms, Fraction(c)))

    def partial(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        return Polynomial._raw(self.variables, kernel.partial_terms(self.terms, i))

    # -- substitution family --------------------------------------------

    def substitute(self, images: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Ring morphism: every variable of self must have an image, and all
        images must share one target ring."""
        target = None
        for v in self.variables:
            if v not in images:
                raise ValueError(f"no image for variable {v}")
            img = images[v]
            if target is None:
                target = img.variables
            elif img.variables != target:
                raise VariableMismatchError("images live in different rings")
        assert target is not None or not self.variables
        if target is None:
            target = ()
        nv = len(target)
        acc: Dict[Term, Fraction] = {}
        pow_cache: Dict[Tuple[str, int], Dict[Term, Fraction]] = {}
        for mono, coeff in self.terms.items():
            piece: Dict[Term, Fraction] = {(0,) * nv: coeff}
            for v, e in zip(self.variables, mono):
                if not e:
                    continue
                key = (v, e)
                cached = pow_cache.get(key)
                if cached is None:
                    cached = kernel.pow_terms(images[v].terms, e, nv)
                    pow_cache[key] = cached
                piece = kernel.mul_terms(piece, cached)
            acc = kernel.add_terms(acc, piece)
        return Polynomial._raw(tuple(target), acc)

    def substitute_variable(self, name: str, image: "Polynomial") -> "Polynomial":
        """Substitute one variable, all others staying fixed.  The image
        must live in the same ring."""
        self._check_ring(image)
        i = self.variables.index(name)
        nv = len(self.variables)
        acc: Dict[Term, Fraction] = {}
        pow_cache: Dict[int, Dict[Term, Fraction]] = {}
        for mono, coeff in self.terms.items():
            e = mono[i]
            rest = mono[:i] + (0,) + mono[i + 1 :]
            piece: Dict[Term, Fraction] = {rest: coeff}
            if e:
                cached = pow_cache.get(e)
                if cached is None:
                    cached = kernel.pow_terms(image.terms, e, nv)
                    pow_cache[e] = cached
                piece = kernel.mul_terms(piece, cached)
            acc = kernel.add_terms(acc, piece)
        return Polynomial._raw(self.variables, acc)

    def translate(self, point: Sequence[Rationalish]) -> "Polynomial":
        """p(x + point), moving the marked point to the origin."""
        if len(point) != len(self.variables):
            raise ValueError("point arity does not match variables")
        images = {}
        for v, c in zip(self.variables, point):
            img = Polynomial.variable(self.variables, v)
            c = Fraction(c)
            if c:
                img = img + Polynomial.constant(self.variables, c)
            images[v] = img
        return self.substitute(images)

    def set_variable_zero(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        return Polynomial._raw(
            self.variables, {m: c for m, c in self.terms.items() if not m[i]}
        )

    def drop_variable(self, name: str) -> "Polynomial":
        """Remove an unused variable from the ring."""
        i = self.variables.index(name)
        if self.uses_variable(name):
            raise ValueError(f"polynomial still uses {name}")
        vs = self.variables[:i] + self.variables[i + 1 :]
        return Polynomial._raw(vs, {m[:i] + m[i + 1 :]: c for m, c in self.terms.items()})

    def embed(self, variables: Sequence[str]) -> "Polynomial":
        """Reinterpret in a larger ring containing all current variables."""
        vs = tuple(variables)
        idx = [vs.index(v) for v in self.variables]
        n = len(vs)
        out: Dict[Term, Fraction] = {}
        for mono, coeff in self.terms.items():
            big = [0] * n
            for pos, e in zip(idx, mono):
                big[pos] = e
            out[tuple(big)] = coeff
        return Polynomial._raw(vs, out)

    def truncate_degree(self, bound: int) -> "Polynomial":
        return Polynomial._raw(
            self.variables, {m: c for m, c in self.terms.items() if sum(m) <= bound}
        )

    # -- dunder plumbing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.variables, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"Polynomial({','.join(self.variables)}: {self})"

    def __str__(self) -> str:
        return format_polynomial(self)


# -- printing ------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    parts = []
    for mono in sorted(p.terms, key=_print_key):
        coeff = p.terms[mono]
        factors = []
        for v, e in zip(p.variables, mono):
            if e == 1:
                factors.append(v)
            elif e > 1:
                factors.append(f"{v}^{e}")
        mag = abs(coeff)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        parts.append((coeff < 0, body))
    first_neg, first_body = parts[0]
    out = ("-" if first_neg else "") + first_body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


# -- parsing ---------------------------------------------------------------


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_'"):
                j += 1
            tokens.append(("ident", text[i:j]))
            i = j
        elif ch in "+-*/^":
            tokens.append((ch, ch))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse the grammar from the module docstring into the given ring."""
    vs = tuple(variables)
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take(kind):
        nonlocal pos
        if pos >= len(tokens) or tokens[pos][0] != kind:
            got = tokens[pos][1] if pos < len(tokens) else "end of input"
            raise ParseError(f"expected {kind}, got {got}")
        val = tokens[pos][1]
        pos += 1
        return val

    def parse_factor() -> Polynomial:
        kind = peek()
        if kind == "int":
            num = int(take("int"))
            if peek() == "/":
                take("/")
                den = int(take("int"))
                if den <= 0:
                    raise ParseError("denominator must be positive")
                return Polynomial.constant(vs, Fraction(num, den))
            return Polynomial.constant(vs, num)
        if kind == "ident":
            name = take("ident")
            if name not in vs:
                raise ParseError(f"unknown variable {name}")
            p = Polynomial.variable(vs, name)
            if peek() == "^":
                take("^")
                e = int(take("int"))
                if e <= 0:
                    raise ParseError("exponent must be a positive integer")
                p = p**e
            return p
        got = tokens[pos][1] if pos < len(tokens) else "end of input"
        raise ParseError(f"expected a factor, got {got}")

    def parse_term() -> Polynomial:
        p = parse_factor()
        while peek() == "*":
            take("*")
            p = p * parse_factor()
        return p

    if not tokens:
        raise ParseError("empty input")
    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take(peek()) == "-" else 1
    result = parse_term()
    if sign < 0:
        result = -result
    while peek() in ("+", "-"):
        neg = take(peek()) == "-"
        t = parse_term()
        result = result - t if neg else result + t
    if pos != len(tokens):
        raise ParseError(f"trailing input starting at {tokens[pos][1]}")
    return result
