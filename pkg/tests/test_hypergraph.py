from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mcgraphs.designs import point_id
from mcgraphs.errors import FormatError
from mcgraphs.hypergraph import (
    Hypergraph,
    WeightAssignment,
    build_h3_prime,
    build_hr,
    format_hypergraph,
    hr_deleted_set,
    parse_hypergraph,
    properties,
    top_level,
)

from strategies import hypergraphs


def row_sizes(H, r):
    return sorted(
        (len(e) for e, c in zip(H.edges, H.edge_colors) if c == 0), reverse=True
    )


def test_hr3_shape():
    H = build_hr(3)
    assert H.n == 6 and H.num_edges == 9
    assert row_sizes(H, 3) == [3, 2, 1]
    rows = {tuple(H.labels[v] for v in e) for e, c in zip(H.edges, H.edge_colors) if c == 0}
    assert rows == {((1, 1), (1, 2), (1, 3)), ((2, 1), (2, 2)), ((3, 3),)}


@pytest.mark.parametrize("r, rank, prank, dstar", [
    (3, 3, Fraction(1, 2), 5),
    (4, 4, Fraction(1, 3), 10),
    (5, 5, Fraction(1, 4), 17),
])
def test_hr_properties(r, rank, prank, dstar):
    H = build_hr(r)
    p = properties(H)
    assert H.n == r * r - r
    assert (p.rank, p.proportional_rank, p.delta_star) == (rank, prank, dstar)
    assert p.num_color_classes == r
    assert p.max_degree == r


@pytest.mark.parametrize("r", [3, 4, 5])
def test_hr_invariants(r):
    H = build_hr(r)
    S = set(hr_deleted_set(r))
    assert H.num_edges <= r * r
    for color in range(r):
        members = [e for e, c in zip(H.edges, H.edge_colors) if c == color]
        assert len(members) <= r
        flat = [v for e in members for v in e]
        assert len(flat) == len(set(flat))
    full = [e for e in H.edges if len(e) == r]
    # a full-size edge lost nothing to S; the original line avoided S
    assert all(len(e) < r for e in H.edges if e not in full)
    assert len(S) == r


def test_single_edge_properties():
    H = Hypergraph.from_edges(3, [(0, 1, 2)])
    p = properties(H)
    assert (p.rank, p.proportional_rank, p.delta_star) == (3, 1, 3)


def test_isolated_vertex_counts_itself():
    H = Hypergraph.from_edges(3, [(0, 1)])
    assert H.delta_star() == 1


def test_h3_prime():
    H = build_h3_prime()
    p = properties(H)
    assert H.n == 6
    assert p.num_color_classes == 3 and p.proportional_rank == Fraction(1, 2) and p.delta_star == 5
    top = top_level(H, WeightAssignment.uniform(6))
    assert top.num_edges == 2 and all(len(e) == 3 for e in top.edges)
    assert sorted(v for e in top.edges for v in e) == list(range(6))


def test_hr3_top_level():
    H = build_hr(3)
    top = top_level(H, WeightAssignment.uniform(6))
    labels = {tuple(H.labels[v] for v in e) for e in top.edges}
    v33 = (3, 3)
    assert ((1, 1), (1, 2), (1, 3)) in labels
    others = labels - {((1, 1), (1, 2), (1, 3))}
    assert len(others) == 2 and all(v33 in e for e in others)


def test_concentrated_weight():
    H = build_hr(3)
    w = WeightAssignment(tuple(Fraction(int(i == 0)) for i in range(6)))
    top = top_level(H, w)
    assert set(top.edges) == {e for e in H.edges if 0 in e}
    isolated = Hypergraph.from_edges(3, [(0, 1), (1,)])
    w = WeightAssignment.of([0, 0, 1])
    assert top_level(isolated, w).edges == isolated.edges


@given(hypergraphs())
def test_top_level_uniform_is_max_cardinality(H):
    top = top_level(H, WeightAssignment.uniform(H.n))
    assert set(top.edges) == {e for e in H.edges if len(e) == H.rank}


def test_weight_validation():
    with pytest.raises(ValueError):
        WeightAssignment.of([Fraction(1, 2), Fraction(1, 3)])
    with pytest.raises(ValueError):
        WeightAssignment.of([2, -1])


def test_improper_coloring_rejected():
    with pytest.raises(ValueError):
        Hypergraph.from_edges(3, [(0, 1), (1, 2)], [0, 0])


@pytest.mark.parametrize("H", [build_hr(3), build_hr(4), build_h3_prime(), Hypergraph.from_edges(4, [(0, 1), (2, 3)])])
def test_text_roundtrip(H):
    text = format_hypergraph(H)
    back = parse_hypergraph(text)
    assert back == H
    assert format_hypergraph(back) == text


def test_text_format_header():
    text = format_hypergraph(build_hr(3))
    assert text.splitlines()[0] == "H 6 9"
    assert text.splitlines()[1] == "0 0 1 2"


@pytest.mark.parametrize("bad", ["", "H 3\n", "G 3 1\n0 0 1\n", "H 3 2\n0 0 1\n", "H 2 1\n0 0 5\n"])
def test_malformed(bad):
    with pytest.raises(FormatError):
        parse_hypergraph(bad)


def test_labels_match_point_ids():
    r = 4
    H = build_hr(r)
    S = set(hr_deleted_set(r))
    kept = [p for p in range(r * r) if p not in S]
    assert [point_id(r, *lab) for lab in H.labels] == kept
