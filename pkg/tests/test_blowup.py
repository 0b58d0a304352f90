from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mcgraphs.blowup import (
    apportion,
    build_theorem_3_2_graph,
    column_degree,
    gyarfas_extremal,
    gys_construction,
    perturbed_plan,
    plane_hypergraph,
    perturbed_targets,
    uniform_blowup,
    weighted_blowup,
)
from mcgraphs.designs import affine_plane
from mcgraphs.errors import NotDivisible, PreconditionViolated
from mcgraphs.graphs import (
    BlowupPlan,
    ColoredGraph,
    analyze,
    cross_check,
    format_graph,
    parse_graph,
)
from mcgraphs.hypergraph import Hypergraph, WeightAssignment, build_hr

from oracles import components_bfs
from strategies import hypergraphs


def test_order_two_plane_gives_k4():
    G = uniform_blowup(plane_hypergraph(affine_plane(2)), 4)
    assert G.num_edges == 6
    report = analyze(G)
    assert report.min_degree == 3
    assert report.max_component == 2
    assert all(orders == [2, 2] for orders in report.per_color.values())


@pytest.mark.parametrize("r, s", [(3, 1), (3, 2), (4, 1)])
def test_gyarfas_extremal(r, s):
    n = (r - 1) ** 2 * s
    G = gyarfas_extremal(r, n)
    report = analyze(G)
    assert report.min_degree == n - 1
    assert report.max_component == (r - 1) * s
    assert all(set(o) == {n // (r - 1)} for o in report.per_color.values())


def test_gyarfas_needs_divisibility():
    with pytest.raises(NotDivisible):
        gyarfas_extremal(3, 6)


def test_hr_blowup_class_sizes():
    G = uniform_blowup(build_hr(3), 12)
    assert G.plan.class_sizes == (2,) * 6


@pytest.mark.parametrize("r, n, delta, comp", [(3, 18, 13, 6), (3, 9, 6, 3), (4, 16, 12, 4)])
def test_gys(r, n, delta, comp):
    report = analyze(gys_construction(r, n))
    assert (report.min_degree, report.max_component) == (delta, comp)


def test_perturbed_sizes_r3():
    plan = perturbed_plan(3, 1, 18)
    labels = plan.host.labels
    big = {(2, 1), (2, 2), (1, 3)}
    for lab, size in zip(labels, plan.class_sizes):
        assert size == (4 if lab in big else 2)
    assert plan.n == 18


def test_perturbed_sizes_r4():
    plan = perturbed_plan(4, 1, 84)
    assert sorted(plan.class_sizes) == [6] * 8 + [9] * 4


def test_perturbed_plan_floor():
    with pytest.raises(PreconditionViolated, match=r"n < r\(r-1\)"):
        perturbed_plan(3, 1, 12)
    with pytest.raises(NotDivisible):
        perturbed_plan(3, 1, 19)
    with pytest.raises(PreconditionViolated):
        perturbed_plan(3, 0, 18)


@pytest.mark.parametrize(
    "r, c, n, delta, comp",
    [(3, 1, 18, 13, 8), (3, 2, 42, 32, 19), (4, 1, 84, 68, 27), (3, 1, 24, 18, 11)],
)
def test_perturbed_blowup(r, c, n, delta, comp):
    assert perturbed_targets(r, c, n) == (delta, comp)
    G = build_theorem_3_2_graph(r, c, n, materialize=True)
    assert cross_check(G)
    report = analyze(G)
    assert report.min_degree == delta
    assert report.max_component == comp
    assert comp < Fraction(n, r - 1)


def test_perturbed_blowup_against_bfs():
    G = build_theorem_3_2_graph(3, 1, 18)
    bfs = components_bfs(G.n, G.edges())
    assert max(o[0] for o in bfs.values()) == 8
    assert bfs == {c: o for c, o in analyze(G).per_color.items() if o}


@pytest.mark.parametrize("r, c, n", [(3, 1, 18), (4, 1, 84)])
def test_column_degree_formula(r, c, n):
    G = build_theorem_3_2_graph(r, c, n)
    plan = G.plan
    deg = [0] * n
    for _, u, v in G.edges():
        deg[u] += 1
        deg[v] += 1
    for i in range(plan.host.n):
        for u in plan.members(i):
            assert deg[u] == column_degree(plan, i)


def test_apportion():
    assert apportion(WeightAssignment.of([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]), 6) == (3, 2, 1)
    assert apportion(WeightAssignment.of([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]), 4) == (2, 1, 1)
    assert apportion(WeightAssignment.uniform(3), 4) == (2, 1, 1)


def test_weighted_blowup():
    H = Hypergraph.from_edges(3, [(0, 1), (1, 2)], [0, 1])
    G = weighted_blowup(H, WeightAssignment.of([Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]), 6)
    assert G.plan.class_sizes == (3, 2, 1)
    with pytest.raises(PreconditionViolated):
        weighted_blowup(H, WeightAssignment.of([1, 0, 0]), 6)
    with pytest.raises(PreconditionViolated):
        weighted_blowup(H, WeightAssignment.of([Fraction(8, 10), Fraction(1, 10), Fraction(1, 10)]), 3)


def test_lowest_color_wins_inside_class():
    H = Hypergraph.from_edges(3, [(0, 1), (0, 2)], [1, 0])
    G = ColoredGraph.from_plan(BlowupPlan(H, (2, 1, 1)))
    assert (0, 0, 1) in G.edges()


def test_graph_format_roundtrip():
    G = build_theorem_3_2_graph(3, 1, 18)
    back = parse_graph(format_graph(G))
    assert back == G
    assert analyze(back).to_json() == analyze(G).to_json()


@given(hypergraphs(max_n=6, max_e=6), st.data())
@settings(max_examples=80)
def test_quotient_matches_materialized(H, data):
    colors = tuple(range(H.num_edges))  # distinct colors always form matchings
    host = Hypergraph(H.n, H.edges, colors)
    sizes = tuple(data.draw(st.lists(st.integers(1, 3), min_size=H.n, max_size=H.n)))
    G = ColoredGraph.from_plan(BlowupPlan(host, sizes))
    assert cross_check(G)
    bfs = components_bfs(G.n, G.edges())
    mat = analyze(G).per_color
    assert bfs == {c: o for c, o in mat.items() if o}
