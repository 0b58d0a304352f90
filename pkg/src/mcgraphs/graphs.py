"""Edge-colored graphs, stored as a blow-up quotient, an explicit edge list, or both.

A blow-up replaces host vertex ``i`` by a class ``X_i`` of consecutive
graph vertices.  Vertices ``u in X_i`` and ``v in X_j`` (``i == j``
allowed) are adjacent iff some host edge contains ``{x_i, x_j}``; the pair
takes the lowest color among such edges.  So a class whose host vertex
lies on any edge is a clique.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .errors import FormatError
from .hypergraph import Hypergraph

ColoredEdge = tuple[int, int, int]  # (color, u, v) with u < v


class DisjointSet:
    def __init__(self, items=()):
        self.parent = {x: x for x in items}
        self.size = {x: 1 for x in items}

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


@dataclass(frozen=True)
class BlowupPlan:
    host: Hypergraph
    class_sizes: tuple[int, ...]

    def __post_init__(self):
        if self.host.edge_colors is None:
            raise ValueError("blow-up needs a colored host")
        if len(self.class_sizes) != self.host.n:
            raise ValueError("one class size per host vertex required")
        if any(s < 1 for s in self.class_sizes):
            raise ValueError("class sizes must be positive")

    @property
    def n(self) -> int:
        return sum(self.class_sizes)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self.class_sizes, initial=0))

    def members(self, i: int) -> range:
        return range(self.offsets[i], self.offsets[i + 1])

    def class_of(self, u: int) -> int:
        for i in range(self.host.n):
            if u < self.offsets[i + 1]:
                return i
        raise IndexError(u)

    @cached_property
    def pair_colors(self) -> dict[tuple[int, int], int]:
        """Color of each adjacent class pair ``(i, j)``, ``i <= j``."""
        out: dict[tuple[int, int], int] = {}
        for e, c in zip(self.host.edges, self.host.edge_colors):
            for i, j in itertools.combinations_with_replacement(e, 2):
                if (i, j) not in out or c < out[(i, j)]:
                    out[(i, j)] = c
        return out


@dataclass(eq=False)
class ColoredGraph:
    n: int
    num_colors: int
    plan: BlowupPlan | None = None
    _edges: list[ColoredEdge] | None = field(default=None, repr=False)

    @classmethod
    def from_plan(cls, plan: BlowupPlan, num_colors: int | None = None) -> ColoredGraph:
        if num_colors is None:
            num_colors = max(plan.host.edge_colors, default=-1) + 1
        return cls(plan.n, num_colors, plan)

    @classmethod
    def from_edges(cls, n: int, num_colors: int, edges) -> ColoredGraph:
        edges = sorted((c, min(u, v), max(u, v)) for c, u, v in edges)
        seen = set()
        for c, u, v in edges:
            if u == v or not 0 <= u < n or v >= n:
                raise ValueError(f"bad edge {u}-{v}")
            if not 0 <= c < num_colors:
                raise ValueError(f"color {c} outside 0..{num_colors - 1}")
            if (u, v) in seen:
                raise ValueError(f"pair {u}-{v} has more than one color")
            seen.add((u, v))
        return cls(n, num_colors, None, sorted(edges, key=lambda e: (e[1], e[2])))

    def edges(self) -> list[ColoredEdge]:
        """Materialized edge list, sorted by (u, v)."""
        if self._edges is None:
            plan = self.plan
            out = []
            for (i, j), c in plan.pair_colors.items():
                if i == j:
                    pairs = itertools.combinations(plan.members(i), 2)
                else:
                    pairs = itertools.product(plan.members(i), plan.members(j))
                out.extend((c, u, v) for u, v in pairs)
            out.sort(key=lambda e: (e[1], e[2]))
            self._edges = out
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self.edges())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n, self.num_colors, self.edges()) == (
            other.n,
            other.num_colors,
            other.edges(),
        )


@dataclass
class ComponentReport:
    n: int
    r: int
    min_degree: int
    per_color: dict[int, list[int]]  # component orders, descending

    @property
    def max_component(self) -> int:
        return max((o[0] for o in self.per_color.values() if o), default=0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "delta": self.min_degree,
            "per_color_component_orders": {
                str(c): orders for c, orders in sorted(self.per_color.items())
            },
            "max_component": self.max_component,
        }


def materialized_degrees(G: ColoredGraph) -> list[int]:
    deg = [0] * G.n
    for _, u, v in G.edges():
        deg[u] += 1
        deg[v] += 1
    return deg


def materialized_components(G: ColoredGraph) -> dict[int, list[int]]:
    """Component orders per color; vertices with no edge of a color are skipped."""
    forests = {c: DisjointSet() for c in range(G.num_colors)}
    for c, u, v in G.edges():
        f = forests[c]
        f.add(u)
        f.add(v)
        f.union(u, v)
    return {
        c: sorted((len(g) for g in f.groups()), reverse=True) for c, f in forests.items()
    }


def quotient_degrees(plan: BlowupPlan) -> list[int]:
    """Degree of each graph vertex from class sizes alone."""
    per_class = [0] * plan.host.n
    for (i, j) in plan.pair_colors:
        if i == j:
            per_class[i] += plan.class_sizes[i] - 1
        else:
            per_class[i] += plan.class_sizes[j]
            per_class[j] += plan.class_sizes[i]
    return [per_class[i] for i in range(plan.host.n) for _ in plan.members(i)]


def quotient_components(plan: BlowupPlan, num_colors: int) -> dict[int, list[int]]:
    forests = {c: DisjointSet() for c in range(num_colors)}
    for (i, j), c in plan.pair_colors.items():
        if i == j and plan.class_sizes[i] < 2:
            continue
        forests[c].add(i)
        forests[c].add(j)
        forests[c].union(i, j)
    return {
        c: sorted((sum(plan.class_sizes[i] for i in g) for g in f.groups()), reverse=True)
        for c, f in forests.items()
    }


def analyze(G: ColoredGraph, method: str = "materialized") -> ComponentReport:
    """Minimum degree and monochromatic component orders.

    ``method="quotient"`` works from the blow-up plan without listing edges.
    """
    if method == "quotient":
        if G.plan is None:
            raise ValueError("graph has no quotient form")
        deg = quotient_degrees(G.plan)
        comps = quotient_components(G.plan, G.num_colors)
    elif method == "materialized":
        deg = materialized_degrees(G)
        comps = materialized_components(G)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ComponentReport(G.n, G.num_colors, min(deg, default=0), comps)


def cross_check(G: ColoredGraph) -> bool:
    """Quotient and materialized forms agree on degrees and component orders."""
    if G.plan is None:
        return True
    if quotient_degrees(G.plan) != materialized_degrees(G):
        return False
    q = quotient_components(G.plan, G.num_colors)
    m = materialized_components(G)
    return all(Counter(q[c]) == Counter(m[c]) for c in range(G.num_colors))


def format_graph(G: ColoredGraph) -> str:
    lines = [f"G {G.n} {G.num_colors}"]
    lines.extend(f"{c} {u} {v}" for c, u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> ColoredGraph:
    rows = text.splitlines()
    try:
        tag, n, r = rows[0].split()
        if tag != "G":
            raise ValueError
        edges = []
        for row in rows[1:]:
            if not row.strip():
                continue
            c, u, v = (int(x) for x in row.split())
            edges.append((c, u, v))
        return ColoredGraph.from_edges(int(n), int(r), edges)
    except (ValueError, IndexError) as exc:
        raise FormatError(f"malformed graph file: {exc}") from exc
