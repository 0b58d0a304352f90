"""Exhaustive search over deletion sets S in AG(2, r).

For every r-subset S of the points, drop one parallel class (the columns
by default), delete S from the remaining lines and test the resulting
hypergraph for

* P1: the r surviving classes form a proper r-edge-coloring and some
  vertex lies on r edges (which pairwise meet there);
* P2: rank r, i.e. proportional rank 1/(r-1);
* P3: delta* = (r^2 - r) - (r - 2);
* perturbability of the top-level under uniform weights.

Valid choices are grouped into orbits of the affine maps of GF(r)^2 that
fix the dropped direction.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .designs import AffinePlane, affine_plane
from .errors import UnsupportedR
from .galois import field_new
from .hypergraph import WeightAssignment, delete_from_plane, hr_deleted_set, properties, top_level
from .lp import find_perturbation

DEFAULT_MAX_R = 5


@dataclass(frozen=True)
class SChoice:
    S: tuple[int, ...]
    p1: bool
    p2: bool
    p3: bool
    top_level_perturbable: bool
    orbit_id: int | None = None

    @property
    def valid(self) -> bool:
        return self.p1 and self.p2 and self.p3 and self.top_level_perturbable


def evaluate_s(plane: AffinePlane, S, drop_class: int | None = None) -> SChoice:
    r = plane.q
    H = delete_from_plane(plane, S, drop_class)
    props = properties(H)
    p1 = props.num_color_classes == r and props.max_degree >= r
    p2 = props.rank == r
    p3 = props.delta_star == (r * r - r) - (r - 2)
    top = top_level(H, WeightAssignment.uniform(H.n))
    perturbable = find_perturbation(top) is not None
    return SChoice(tuple(sorted(S)), p1, p2, p3, perturbable)


def _evaluate_chunk(args):
    r, cap, drop_class, subsets = args
    plane = affine_plane(r, cap)
    return [evaluate_s(plane, S, drop_class) for S in subsets]


def evaluate_all(
    r: int, max_r: int = DEFAULT_MAX_R, drop_class: int | None = None, workers: int = 1
) -> list[SChoice]:
    """Evaluate all C(r^2, r) deletion sets, in lexicographic order of S."""
    if r < 3 or r > max_r:
        raise UnsupportedR(f"r must be in 3..{max_r}, got {r}")
    plane = affine_plane(r, max(r, 9))
    subsets = list(itertools.combinations(plane.points, r))
    if workers <= 1:
        return [evaluate_s(plane, S, drop_class) for S in subsets]
    size = -(-len(subsets) // (workers * 8))
    chunks = [(r, max(r, 9), drop_class, subsets[i : i + size]) for i in range(0, len(subsets), size)]
    with ProcessPoolExecutor(workers) as pool:
        results = [c for part in pool.map(_evaluate_chunk, chunks) for c in part]
    return sorted(results, key=lambda c: c.S)


def enumerate_s_choices(r: int, max_r: int = DEFAULT_MAX_R, drop_class: int | None = None, workers: int = 1) -> list[SChoice]:
    return [c for c in evaluate_all(r, max_r, drop_class, workers) if c.valid]


def stabilizer_permutations(q: int, drop_class: int | None = None) -> list[tuple[int, ...]]:
    """Point permutations of x -> Mx + t with M fixing the dropped direction.

    Direction of class m (m < q) is (1, m); the vertical class q has (0, 1).
    """
    F = field_new(q)
    els = F.elements()
    zero, one = F.zero, F.one
    drop_class = q if drop_class is None else drop_class
    dx, dy = (zero, one) if drop_class == q else (one, els[drop_class])
    perms = []
    for a, b, c, d in itertools.product(els, repeat=4):
        if (a * d - b * c).is_zero():
            continue
        ix, iy = a * dx + b * dy, c * dx + d * dy
        if not (ix * dy - iy * dx).is_zero():
            continue
        for tx, ty in itertools.product(els, repeat=2):
            perm = [0] * (q * q)
            for x in els:
                for y in els:
                    nx = a * x + b * y + tx
                    ny = c * x + d * y + ty
                    perm[y.index * q + x.index] = ny.index * q + nx.index
            perms.append(tuple(perm))
    return perms


def canonical_form(S, perms) -> tuple[int, ...]:
    return min(tuple(sorted(g[p] for p in S)) for g in perms)


def reduce_by_isomorphism(
    choices: list[SChoice], q: int, drop_class: int | None = None
) -> list[list[SChoice]]:
    """Group choices into orbits; orbits are ordered by their minimal representative.

    Each returned choice carries its ``orbit_id``; the first member of each
    orbit list is the lexicographically smallest S in it.
    """
    perms = stabilizer_permutations(q, drop_class)
    by_form: dict[tuple[int, ...], list[SChoice]] = {}
    for ch in choices:
        by_form.setdefault(canonical_form(ch.S, perms), []).append(ch)
    orbits = []
    for oid, form in enumerate(sorted(by_form)):
        members = sorted(by_form[form], key=lambda c: c.S)
        orbits.append([replace(ch, orbit_id=oid) for ch in members])
    return orbits


@dataclass
class Survey:
    r: int
    total_candidates: int
    valid_count: int
    orbits: list[list[SChoice]]

    @property
    def orbit_count(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list[tuple[int, ...]]:
        return [orbit[0].S for orbit in self.orbits]

    def contains(self, S) -> bool:
        key = tuple(sorted(S))
        return any(ch.S == key for orbit in self.orbits for ch in orbit)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "total_candidates": self.total_candidates,
            "valid_count": self.valid_count,
            "orbit_count": self.orbit_count,
            "representatives": [list(s) for s in self.representatives],
            "orbit_sizes": [len(o) for o in self.orbits],
        }


def survey(r: int, max_r: int = DEFAULT_MAX_R, drop_class: int | None = None, workers: int = 1) -> Survey:
    everything = evaluate_all(r, max_r, drop_class, workers)
    valid = [c for c in everything if c.valid]
    return Survey(r, len(everything), len(valid), reduce_by_isomorphism(valid, r, drop_class))


def standard_s(r: int) -> tuple[int, ...]:
    """The deletion set used by H_r, as sorted point ids."""
    return tuple(sorted(hr_deleted_set(r)))
