"""Analysis of edge-colored graphs: audits, a brute-force mc_r oracle, known bounds."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .blowup import uniform_blowup
from .designs import (
    RbibdDesign,
    check_resolvable,
    plane_excluded,
    plane_exists_known,
    rbibd_coloring_params,
)
from .errors import InvariantViolation, NotDivisible, PreconditionViolated, TooLarge
from .graphs import ColoredGraph, ComponentReport, analyze, cross_check  # noqa: F401
from .hypergraph import Hypergraph

DEFAULT_ORACLE_CAP = 10**8


def complete_graph(n: int) -> ColoredGraph:
    """K_n with every edge in color 0 (the oracle ignores colors)."""
    return ColoredGraph.from_edges(n, 1, [(0, u, v) for u, v in itertools.combinations(range(n), 2)])


def mc_oracle(G: ColoredGraph, r: int, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """min over all r-colorings of G of the largest monochromatic component.

    Exhaustive branch and bound over edges in order.  Colorings are
    enumerated up to permuting colors (an edge may only open the next
    unused color, so the first edge is always color 0), and a branch is
    cut as soon as its partial largest component reaches the best
    complete coloring found so far, since components only grow.
    """
    pairs = [(u, v) for _, u, v in G.edges()]
    required = r ** len(pairs)
    if required > cap:
        raise TooLarge(required, cap)
    if not pairs:
        return min(G.n, 1)

    # per-color union-find, union by size, no path compression; undone on backtrack
    parent = [list(range(G.n)) for _ in range(r)]
    size = [[1] * G.n for _ in range(r)]
    best = G.n

    def find(c: int, x: int) -> int:
        p = parent[c]
        while p[x] != x:
            x = p[x]
        return x

    def search(k: int, used: int, current: int) -> None:
        nonlocal best
        if current >= best:
            return
        if k == len(pairs):
            best = current
            return
        u, v = pairs[k]
        for c in range(min(used + 1, r)):
            a, b = find(c, u), find(c, v)
            if a == b:
                search(k + 1, max(used, c + 1), current)
                continue
            if size[c][a] < size[c][b]:
                a, b = b, a
            parent[c][b] = a
            size[c][a] += size[c][b]
            search(k + 1, max(used, c + 1), max(current, size[c][a]))
            size[c][a] -= size[c][b]
            parent[c][b] = b

    search(0, 0, 1)
    return best


@dataclass
class RbibdBound:
    k: int
    t: int
    v: int
    num_colors: int
    fraction: Fraction
    available: bool  # design data ships with the package
    divides: bool  # v | n


@dataclass
class BoundsReport:
    r: int
    n: int
    gyarfas_lower: Fraction
    q: int
    # "inapplicable": a plane of order r-1 exists;
    # "applicable": no plane of order r-1 can exist;
    # "conditional": existence of a plane of order r-1 is open
    furedi_status: str
    furedi_lower: Fraction | None  # None when inapplicable
    furedi_upper: int | None
    rbibd: list[RbibdBound] = field(default_factory=list)

    @property
    def best_upper(self) -> Fraction:
        """Smallest upper bound backed by a construction that exists."""
        best = Fraction(math.ceil(Fraction(self.n, self.q)))
        if self.furedi_status == "inapplicable" and self.n % ((self.r - 1) ** 2) == 0:
            best = min(best, self.gyarfas_lower)
        for b in self.rbibd:
            if b.available and b.divides:
                best = min(best, self.n * b.fraction)
        return best

    def to_json(self) -> dict:
        s = lambda x: f"{x.numerator}/{x.denominator}"  # noqa: E731
        return {
            "r": self.r,
            "n": self.n,
            "gyarfas_lower": s(self.gyarfas_lower),
            "q": self.q,
            "furedi_status": self.furedi_status,
            "furedi_lower": None if self.furedi_lower is None else s(self.furedi_lower),
            "furedi_upper": self.furedi_upper,
            "rbibd": [
                {
                    "k": b.k,
                    "t": b.t,
                    "v": b.v,
                    "colors": b.num_colors,
                    "fraction": s(b.fraction),
                    "available": b.available,
                    "divides": b.divides,
                }
                for b in self.rbibd
            ],
            "best_upper": s(self.best_upper),
        }


def _design_available(k: int, t: int) -> bool:
    return (t == 0 and plane_exists_known(k)) or (k, t) == (3, 1)


def known_bounds(r: int, n: int) -> BoundsReport:
    """Bounds on mc_r(K_n) from the plane and block-design constructions.

    Existence of planes is judged mathematically (prime powers exist;
    Bruck-Ryser and order 10 exclude), not by the construction cap.
    RBIBD rows list every (k, t) with at most r colors whose component
    fraction is at most 1/q; ``available`` marks designs shipped as data.
    """
    if r < 3:
        raise PreconditionViolated(f"r >= 3 required, got r={r}")
    q = max(x for x in range(2, r) if plane_exists_known(x))
    if n < q * q:
        raise PreconditionViolated(f"n >= q^2 required: {n} < {q * q}")
    if plane_exists_known(r - 1):
        status = "inapplicable"
    elif plane_excluded(r - 1):
        status = "applicable"
    else:
        status = "conditional"
    inapplicable = status == "inapplicable"
    rb = []
    for k in range(2, r):
        for t in itertools.count():
            params = rbibd_coloring_params(k, t)
            if params.num_colors > r:
                break
            if params.component_bound_fraction <= Fraction(1, q):
                rb.append(
                    RbibdBound(
                        k,
                        t,
                        params.v,
                        params.num_colors,
                        params.component_bound_fraction,
                        _design_available(k, t),
                        n % params.v == 0,
                    )
                )
    return BoundsReport(
        r=r,
        n=n,
        gyarfas_lower=Fraction(n, r - 1),
        q=q,
        furedi_status=status,
        furedi_lower=None if inapplicable else Fraction(n) / (r - 1 - Fraction(1, r - 1)),
        furedi_upper=None if inapplicable else math.ceil(Fraction(n, q)),
        rbibd=rb,
    )


def design_hypergraph(design: RbibdDesign) -> Hypergraph:
    colors = [0] * len(design.blocks)
    for c, members in enumerate(design.parallel_classes):
        for i in members:
            colors[i] = c
    return Hypergraph.from_edges(design.v, design.blocks, colors)


def fact_5_2_coloring(design: RbibdDesign, n: int, enumerate_pairs_up_to: int = 200) -> ColoredGraph:
    """Uniform blow-up of a resolvable design: a coloring of K_n.

    Completeness is checked by enumerating pairs when n is small, by class
    pairs otherwise; the component bound n/((t+1)k - t) is checked exactly.
    """
    check_resolvable(design)
    if n % design.v:
        raise NotDivisible(f"v = {design.v} does not divide n = {n}")
    G = uniform_blowup(design_hypergraph(design), n, len(design.parallel_classes))
    if n <= enumerate_pairs_up_to:
        covered = {(u, v) for _, u, v in G.edges()}
        complete = all(p in covered for p in itertools.combinations(range(n), 2))
        report = analyze(G)
    else:
        h = design.v
        complete = len(G.plan.pair_colors) == h * (h + 1) // 2
        report = analyze(G, "quotient")
    if not complete:
        raise InvariantViolation("blow-up of a resolvable design is not complete")
    bound = n * rbibd_coloring_params(design.k, design.t).component_bound_fraction
    if report.max_component > bound:
        raise InvariantViolation(f"component {report.max_component} exceeds {bound}")
    return G
