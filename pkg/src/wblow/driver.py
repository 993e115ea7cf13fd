"""Iterated weighted blowups driven by the canonical center.

principalize starts from an ideal at a marked rational point, computes
its canonical center, blows the center up, and repeats on the weighted
transform in every chart.  The weighted transform is the pullback with
the full exceptional power s^N removed, so it measures exactly the non
monomial part of the pulled back ideal; a study point is finished when
that transform is the unit ideal there.  embedded_resolve runs the same
loop on the strict transform of a hypersurface and stops at points where
the strict transform is smooth.

Study points on the exceptional divisor are found by restricting the
transform to each coordinate axis of the chart and solving for rational
roots; the origin is always studied, and extra points can be supplied
through RunConfig.  Positive dimensional rational loci on the divisor
are represented only by those points.  Every child invariant is checked
to drop strictly below its parent, which bounds the depth of the tree.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import Polynomial
from .blowup import all_charts, strict_transform_hypersurface, weighted_transform
from .canonical import canonical_center
from .center import format_rational
from .ideals import LocalIdeal

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class RunConfig:
    """Search budget and extra study points.

    max_steps caps the number of blowups across the whole tree.  Each
    entry of extra_points is tried in every chart whose dimension
    matches, provided its exceptional coordinate is zero."""

    max_steps: int = 64
    extra_points: Tuple[Point, ...] = ()


@dataclass
class Node:
    """One studied point: an ideal translated so the point is the origin."""

    id: str
    parent: Optional[str]
    depth: int
    variables: Tuple[str, ...]
    point: Point
    ideal: LocalIdeal
    invariant: tuple
    center: object
    status: str
    chart_variable: Optional[str] = None
    exceptional: Optional[str] = None
    exceptional_multiplicity: Optional[int] = None
    children: List[str] = field(default_factory=list)


class BlowupTree:
    """Result of a principalization or resolution run."""

    def __init__(self, mode: str, config: RunConfig):
        self.mode = mode
        self.config = config
        self.nodes: Dict[str, Node] = {}
        self.order: List[str] = []
        self.steps = 0
        self.status = "running"

    def add(self, node: Node) -> None:
        self.nodes[node.id] = node
        self.order.append(node.id)

    def leaves(self) -> List[Node]:
        return [self.nodes[i] for i in self.order if not self.nodes[i].children]

    def report(self) -> dict:
        nodes = []
        for node_id in self.order:
            n = self.nodes[node_id]
            nodes.append(
                {
                    "id": n.id,
                    "parent": n.parent,
                    "depth": n.depth,
                    "chart": n.chart_variable,
                    "exceptional": n.exceptional,
                    "exceptional_multiplicity": n.exceptional_multiplicity,
                    "variables": list(n.variables),
                    "point": [format_rational(c) for c in n.point],
                    "generators": [str(g) for g in n.ideal.generators],
                    "invariant": [format_rational(d) for d in n.invariant],
                    "center": None
                    if n.center is None
                    else [
                        [str(p), format_rational(d)]
                        for p, d in n.center.parameters()
                    ],
                    "status": n.status,
                    "children": list(n.children),
                }
            )
        return {
            "mode": self.mode,
            "status": self.status,
            "steps": self.steps,
            "max_steps": self.config.max_steps,
            "nodes": nodes,
        }

    def report_json(self) -> str:
        return json.dumps(self.report(), indent=2)


# -- candidate points --------------------------------------------------------


def _divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
    return sorted(out)


def _rational_roots(coeffs: List[Fraction]) -> List[Fraction]:
    """Nonzero rational roots of sum(coeffs[i] * v^i), exact."""
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    lo = 0
    while lo < len(coeffs) and coeffs[lo] == 0:
        lo += 1
    coeffs = coeffs[lo:]
    if len(coeffs) <= 1:
        return []
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    roots = []
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if sum(c * cand**i for i, c in enumerate(coeffs)) == 0:
                    roots.append(cand)
    return sorted(roots)


def _poly_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a = list(a)
    while len(a) >= len(b):
        f = a[-1] / b[-1]
        off = len(a) - len(b)
        for i, c in enumerate(b):
            a[off + i] -= f * c
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def _univariate_gcd(polys: List[List[Fraction]]) -> List[Fraction]:
    g: List[Fraction] = []
    for p in polys:
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        if not p:
            continue
        if not g:
            g = p
            continue
        while p:
            g, p = p, _poly_rem(g, p)
    return g


def _axis_coeffs(g: Polynomial, keep: int) -> List[Fraction]:
    top = g.degree_in(g.variables[keep])
    out = [Fraction(0)] * (top + 1)
    for mono, c in g.terms.items():
        if all(e == 0 for i, e in enumerate(mono) if i != keep):
            out[mono[keep]] += c
    return out


def _search_points(
    ideal: LocalIdeal, exceptional: str, config: RunConfig
) -> List[Point]:
    """Origin, rational axis roots on the divisor, then extras."""
    vs = ideal.variables
    exc = vs.index(exceptional)
    origin = tuple(Fraction(0) for _ in vs)
    points = [origin]
    for keep in range(len(vs)):
        if keep == exc:
            continue
        restrictions = [_axis_coeffs(g, keep) for g in ideal.generators]
        for root in _rational_roots(_univariate_gcd(restrictions)):
            pt = list(origin)
            pt[keep] = root
            pt = tuple(pt)
            if pt not in points:
                points.append(pt)
    for extra in config.extra_points:
        if len(extra) != len(vs):
            continue
        pt = tuple(Fraction(c) for c in extra)
        if pt[exc] == 0 and pt not in points:
            points.append(pt)
    return points


# -- the search loop ---------------------------------------------------------


def _is_done(mode: str, invariant: tuple) -> bool:
    if invariant == (0,):
        return True
    return mode == "resolve" and invariant[0] == 1


def _leaf_status(mode: str) -> str:
    return "principal" if mode == "principalize" else "smooth"


def _run(mode: str, ideal: LocalIdeal, point: Optional[Point], config: RunConfig):
    if ideal.is_zero():
        raise ValueError("the zero ideal cannot be made principal")
    if mode == "resolve" and len(ideal.generators) != 1:
        raise ValueError("embedded resolution expects a single hypersurface")
    if point is not None:
        shift = tuple(Fraction(c) for c in point)
        if len(shift) != len(ideal.variables):
            raise ValueError("point dimension does not match the ring")
        ideal = LocalIdeal(
            ideal.variables, [g.translate(shift) for g in ideal.generators]
        )
    else:
        shift = tuple(Fraction(0) for _ in ideal.variables)

    tree = BlowupTree(mode, config)
    result = canonical_center(ideal)
    root = Node(
        id="n0",
        parent=None,
        depth=0,
        variables=ideal.variables,
        point=shift,
        ideal=ideal,
        invariant=result.invariant,
        center=result.center,
        status="active",
    )
    tree.add(root)
    queue = []
    if _is_done(mode, root.invariant):
        root.status = _leaf_status(mode)
    else:
        queue.append(root.id)

    serial = 1
    while queue:
        if tree.steps >= config.max_steps:
            break
        node = tree.nodes[queue.pop(0)]
        tree.steps += 1
        node.status = "blown"
        for chart in all_charts(node.center):
            mult = None
            if mode == "resolve":
                gens = []
                for g in node.ideal.generators:
                    strict, mult = strict_transform_hypersurface(chart, g)
                    gens.append(strict)
                transform = LocalIdeal(chart.variables, gens)
            else:
                transform = weighted_transform(chart, node.ideal)
            for pt in _search_points(transform, chart.exceptional, config):
                moved = LocalIdeal(
                    transform.variables,
                    [g.translate(pt) for g in transform.generators],
                )
                res = canonical_center(moved)
                assert res.invariant < node.invariant
                child = Node(
                    id=f"n{serial}",
                    parent=node.id,
                    depth=node.depth + 1,
                    variables=chart.variables,
                    point=pt,
                    ideal=moved,
                    invariant=res.invariant,
                    center=res.center,
                    status="active",
                    chart_variable=chart.inverted_variable,
                    exceptional=chart.exceptional,
                    exceptional_multiplicity=mult,
                )
                serial += 1
                tree.add(child)
                node.children.append(child.id)
                if _is_done(mode, child.invariant):
                    child.status = _leaf_status(mode)
                else:
                    queue.append(child.id)

    if queue:
        for node_id in queue:
            tree.nodes[node_id].status = "exhausted"
        tree.status = "exhausted"
    else:
        tree.status = _leaf_status(mode)
    return tree


def principalize(
    ideal: LocalIdeal,
    point: Optional[Sequence[Fraction]] = None,
    config: Optional[RunConfig] = None,
) -> BlowupTree:
    """Blow up canonical centers until every studied point is trivial."""
    return _run("principalize", ideal, point, config or RunConfig())


def embedded_resolve(
    ideal: LocalIdeal,
    point: Optional[Sequence[Fraction]] = None,
    config: Optional[RunConfig] = None,
) -> BlowupTree:
    """Strict transform variant: stop where the hypersurface is smooth."""
    return _run("resolve", ideal, point, config or RunConfig())
