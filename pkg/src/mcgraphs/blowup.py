"""Blow-up constructions: uniform, weighted, and the perturbed H_r blow-up."""

from __future__ import annotations

from fractions import Fraction

from .designs import DEFAULT_ORDER_CAP, AffinePlane, affine_plane
from .errors import InvariantViolation, NotDivisible, PreconditionViolated
from .graphs import BlowupPlan, ColoredGraph, analyze
from .hypergraph import Hypergraph, WeightAssignment, build_hr, delete_from_plane


def plane_hypergraph(plane: AffinePlane, drop_class: int | None = None) -> Hypergraph:
    """The plane as a hypergraph colored by parallel class, optionally minus one class."""
    if drop_class is None:
        edges, colors = [], []
        for c, members in enumerate(plane.parallel_classes):
            for li in members:
                edges.append(plane.lines[li])
                colors.append(c)
        return Hypergraph(plane.q * plane.q, tuple(edges), tuple(colors))
    return delete_from_plane(plane, (), drop_class)


def uniform_blowup(H: Hypergraph, n: int, num_colors: int | None = None) -> ColoredGraph:
    if n % H.n:
        raise NotDivisible(f"n={n} is not divisible by the host order {H.n}")
    return ColoredGraph.from_plan(BlowupPlan(H, (n // H.n,) * H.n), num_colors)


def apportion(weights: WeightAssignment, n: int) -> tuple[int, ...]:
    """Largest-remainder rounding of ``alpha_i * n``; ties go to the lower id."""
    exact = [w * n for w in weights.weights]
    sizes = [int(x) for x in exact]  # floor, weights are nonnegative
    short = n - sum(sizes)
    order = sorted(range(len(exact)), key=lambda i: (-(exact[i] - sizes[i]), i))
    for i in order[:short]:
        sizes[i] += 1
    return tuple(sizes)


def weighted_blowup(H: Hypergraph, weights: WeightAssignment, n: int) -> ColoredGraph:
    if any(w <= 0 for w in weights.weights):
        raise PreconditionViolated("weighted blow-up needs strictly positive weights")
    sizes = apportion(weights, n)
    if min(sizes) < 1:
        raise PreconditionViolated(f"n={n} too small: some class would be empty")
    return ColoredGraph.from_plan(BlowupPlan(H, sizes))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PreconditionViolated(message)


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


def gyarfas_extremal(r: int, n: int, cap: int = DEFAULT_ORDER_CAP) -> ColoredGraph:
    """K_n colored with r colors: uniform blow-up of the plane of order r - 1."""
    q = r - 1
    if n % (q * q):
        raise NotDivisible(f"(r-1)^2 = {q * q} does not divide n = {n}")
    G = uniform_blowup(plane_hypergraph(affine_plane(q, cap)), n)
    report = analyze(G, "quotient")
    _check(report.min_degree == n - 1, "blow-up of a plane must be complete")
    _check(report.max_component == n // q, "largest component must be n/(r-1)")
    return G


def gys_construction(r: int, n: int, cap: int = DEFAULT_ORDER_CAP) -> ColoredGraph:
    """Uniform blow-up of the plane of order r with its column class removed."""
    plane = affine_plane(r, cap)
    if n % (r * r):
        raise NotDivisible(f"r^2 = {r * r} does not divide n = {n}")
    G = uniform_blowup(plane_hypergraph(plane, plane.vertical_class), n)
    report = analyze(G, "quotient")
    delta = (1 - Fraction(r - 1, r * r)) * n - 1
    _check(report.min_degree == delta, f"min degree {report.min_degree} != {delta}")
    _check(report.max_component == n // r, f"max component {report.max_component} != n/r")
    return G


def perturbed_plan(r: int, c: int, n: int, cap: int = DEFAULT_ORDER_CAP) -> BlowupPlan:
    """Class sizes of the perturbed H_r blow-up.

    The set A = {v_{r-1,i} : i < r} + {v_{r-2,r}} gets n/(r^2-r) + (r-2)c,
    every other vertex n/(r^2-r) - c.
    """
    _require(r >= 3, f"r >= 3 required, got r={r}")
    _require(c >= 1, f"c >= 1 required, got c={c}")
    if n % (r * r - r):
        raise NotDivisible(f"r^2-r = {r * r - r} does not divide n = {n}")
    floor_n = r * (r - 1) * ((r - 1) * (r - 2) + 1) * c
    _require(
        n >= floor_n,
        f"n < r(r-1)((r-1)(r-2)+1)c: {n} < {floor_n} for r={r}, c={c}",
    )
    host = build_hr(r, cap)
    A = {(r - 1, i) for i in range(1, r)} | {(r - 2, r)}
    base = n // (r * r - r)
    sizes = tuple(base + (r - 2) * c if lab in A else base - c for lab in host.labels)
    _check(sum(sizes) == n, "perturbed sizes do not sum to n")
    return BlowupPlan(host, sizes)


def perturbed_targets(r: int, c: int, n: int) -> tuple[int, int]:
    """(min degree, largest monochromatic component) the construction must hit."""
    delta = (1 - Fraction(r - 2, r * r - r)) * n - c - 1
    comp = Fraction(n, r - 1) - c
    return int(delta), int(comp)


def build_theorem_3_2_graph(
    r: int, c: int, n: int, cap: int = DEFAULT_ORDER_CAP, materialize: bool = False
) -> ColoredGraph:
    """r-colored graph with the stated min degree and components below n/(r-1).

    Postconditions are checked on the quotient; ``materialize=True`` also
    checks them on the explicit edge list.
    """
    plan = perturbed_plan(r, c, n, cap)
    G = ColoredGraph.from_plan(plan, r)
    delta, comp = perturbed_targets(r, c, n)
    methods = ["quotient", "materialized"] if materialize else ["quotient"]
    for method in methods:
        report = analyze(G, method)
        _check(report.min_degree == delta, f"{method}: min degree {report.min_degree} != {delta}")
        _check(report.max_component == comp, f"{method}: max component {report.max_component} != {comp}")
    return G


def column_degree(plan: BlowupPlan, v: int) -> int:
    """(n-1) minus the sizes of the other surviving classes in v's column."""
    col = plan.host.labels[v][1]
    others = [w for w, lab in enumerate(plan.host.labels) if lab[1] == col and w != v]
    return plan.n - 1 - sum(plan.class_sizes[w] for w in others)
