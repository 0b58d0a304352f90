"""Hypergraphs with a proper edge coloring, and the named instances H_r, H_3'."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .designs import DEFAULT_ORDER_CAP, AffinePlane, affine_plane, grid_label, point_id
from .errors import FormatError, PreconditionViolated

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Vertices are ``0..n-1``; edges are sorted vertex tuples.

    ``labels`` (1-based (row, col) grid positions for plane-derived
    hypergraphs) is metadata only: it is not part of equality and is not
    written by the text format.
    """

    n: int
    edges: tuple[Edge, ...]
    edge_colors: tuple[int, ...] | None = None
    labels: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise ValueError("empty edge")
            if list(e) != sorted(set(e)):
                raise ValueError(f"edge {e} is not a sorted set")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} has a vertex outside 0..{self.n - 1}")
        if self.edge_colors is not None:
            if len(self.edge_colors) != len(self.edges):
                raise ValueError("one color per edge required")
            used: dict[int, set[int]] = {}
            for e, c in zip(self.edges, self.edge_colors):
                seen = used.setdefault(c, set())
                if seen.intersection(e):
                    raise ValueError(f"color {c} is not a matching")
                seen.update(e)
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], colors=None, labels=None):
        edges = tuple(tuple(sorted(set(e))) for e in edges)
        return cls(n, edges, None if colors is None else tuple(colors), labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    def closed_neighborhood(self, v: int) -> set[int]:
        out = {v}
        for e in self.edges:
            if v in e:
                out.update(e)
        return out

    def delta_star(self) -> int:
        return min(len(self.closed_neighborhood(v)) for v in range(self.n))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def vertex_of_label(self, row: int, col: int) -> int:
        return self.labels.index((row, col))

    def edge_weight(self, e: Edge, w: WeightAssignment) -> Fraction:
        return sum((w.weights[v] for v in e), Fraction(0))


@dataclass(frozen=True)
class HypergraphProperties:
    rank: int
    proportional_rank: Fraction
    delta_star: int
    num_color_classes: int | None
    # vertex lying in max_degree edges, which pairwise meet there; so the
    # edge chromatic number is at least max_degree
    max_degree: int
    max_degree_vertex: int | None


def properties(H: Hypergraph) -> HypergraphProperties:
    degrees = [H.degree(v) for v in range(H.n)]
    max_degree = max(degrees, default=0)
    return HypergraphProperties(
        rank=H.rank,
        proportional_rank=Fraction(H.rank, H.n),
        delta_star=H.delta_star(),
        num_color_classes=None if H.edge_colors is None else len(set(H.edge_colors)),
        max_degree=max_degree,
        max_degree_vertex=degrees.index(max_degree) if degrees else None,
    )


@dataclass(frozen=True)
class WeightAssignment:
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")
        if sum(self.weights, Fraction(0)) != 1:
            raise ValueError("weights must sum to 1")

    @classmethod
    def uniform(cls, n: int) -> WeightAssignment:
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    @classmethod
    def of(cls, values: Sequence) -> WeightAssignment:
        return cls(tuple(Fraction(v) for v in values))


def top_level_indices(H: Hypergraph, w: WeightAssignment) -> list[int]:
    if len(w.weights) != H.n:
        raise ValueError("weight vector length does not match vertex count")
    weights = [H.edge_weight(e, w) for e in H.edges]
    if not weights:
        return []
    best = max(weights)
    return [i for i, x in enumerate(weights) if x == best]


def top_level(H: Hypergraph, w: WeightAssignment) -> Hypergraph:
    """Sub-hypergraph of the edges of maximum weight, on the same vertex set."""
    keep = top_level_indices(H, w)
    colors = None if H.edge_colors is None else tuple(H.edge_colors[i] for i in keep)
    return Hypergraph(H.n, tuple(H.edges[i] for i in keep), colors, H.labels)


def delete_from_plane(
    plane: AffinePlane, removed: Iterable[int], drop_class: int | None = None
) -> Hypergraph:
    """Drop one parallel class and delete a point set from every other line.

    Survivors are renumbered in increasing point-id order; empty edges are
    dropped, singleton edges kept.  Colors are the original class indices.
    """
    drop_class = plane.vertical_class if drop_class is None else drop_class
    removed = set(removed)
    keep = [p for p in plane.points if p not in removed]
    new_id = {p: i for i, p in enumerate(keep)}
    edges, colors = [], []
    for c, members in enumerate(plane.parallel_classes):
        if c == drop_class:
            continue
        for li in members:
            e = tuple(new_id[p] for p in plane.lines[li] if p not in removed)
            if e:
                edges.append(e)
                colors.append(c)
    labels = tuple(grid_label(plane.q, p) for p in keep)
    return Hypergraph(len(keep), tuple(edges), tuple(colors), labels)


def hr_deleted_set(r: int) -> list[int]:
    """Point ids of {v_{r,i} : i < r} and v_{r-1,r}."""
    return [point_id(r, r, i) for i in range(1, r)] + [point_id(r, r - 1, r)]


def build_hr(r: int, cap: int = DEFAULT_ORDER_CAP) -> Hypergraph:
    if r < 3:
        raise PreconditionViolated(f"r >= 3 required, got r={r}")
    return delete_from_plane(affine_plane(r, cap), hr_deleted_set(r))


def build_h3_prime() -> Hypergraph:
    """AG(2,3) minus the columns, with the bottom row's three points deleted."""
    return delete_from_plane(affine_plane(3), [point_id(3, 3, j) for j in (1, 2, 3)])


def format_hypergraph(H: Hypergraph) -> str:
    lines = [f"H {H.n} {H.num_edges}"]
    for i, e in enumerate(H.edges):
        c = "-" if H.edge_colors is None else str(H.edge_colors[i])
        lines.append(" ".join([c, *map(str, e)]))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    rows = text.splitlines()
    try:
        tag, n, m = rows[0].split()
        if tag != "H":
            raise ValueError
        n, m = int(n), int(m)
        body = rows[1 : 1 + m]
        if len(body) != m or any(r.strip() for r in rows[1 + m :]):
            raise ValueError
        colors, edges = [], []
        for r in body:
            c, *vs = r.split()
            colors.append(c)
            edges.append(tuple(int(v) for v in vs))
    except (ValueError, IndexError) as exc:
        raise FormatError("malformed hypergraph file") from exc
    if all(c == "-" for c in colors):
        edge_colors = None
    else:
        edge_colors = tuple(int(c) for c in colors)
    try:
        return Hypergraph(n, tuple(edges), edge_colors)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
