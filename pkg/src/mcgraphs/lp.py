"""Exact rational linear programming over hypergraph incidence systems.

One engine does everything: a two-phase tableau simplex over ``Fraction``
with Bland's rule.  On top of it sit fractional matchings and covers,
perfect-fractional-matching feasibility with a Farkas witness when the
system is infeasible, and the perturbation built from that witness.
Every certificate is re-validated against its defining inequalities
before it is returned; nothing trusts tableau bookkeeping.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EpsilonTooLarge, InvariantViolation, NoEdges
from .hypergraph import Hypergraph, WeightAssignment

ZERO = Fraction(0)
ONE = Fraction(1)


# --------------------------------------------------------------------------
# simplex engine


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list[Fraction] | None = None
    objective: Fraction | None = None
    duals: list[Fraction] | None = None
    farkas: list[Fraction] | None = None
    pivots: int = 0


class _Tableau:
    """Rows ``[coefficients..., rhs]`` with an explicit reduced-cost row.

    Columns ``nvar..nvar+m-1`` are the artificials of the initial basis, so
    they always hold the current basis inverse.
    """

    def __init__(self, A: Sequence[Sequence], b: Sequence, nvar: int):
        m = len(A)
        self.m, self.nvar = m, nvar
        self.width = nvar + m
        self.sign = [(-1 if Fraction(bi) < 0 else 1) for bi in b]
        self.rows: list[list[Fraction]] = []
        for i in range(m):
            s = self.sign[i]
            row = [Fraction(a) * s for a in A[i]]
            row += [ONE if k == i else ZERO for k in range(m)]
            row.append(Fraction(b[i]) * s)
            self.rows.append(row)
        self.basis = [nvar + i for i in range(m)]
        self.z: list[Fraction] = []
        self.pivots = 0

    def set_costs(self, cost: Sequence[Fraction]) -> None:
        """Reduced costs z_j = c_j - c_B B^-1 A_j, last entry -c_B x_B."""
        z = list(cost) + [ZERO]
        for i, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                row = self.rows[i]
                for j in range(self.width + 1):
                    if row[j]:
                        z[j] -= cb * row[j]
        self.z = z

    def pivot(self, r: int, col: int) -> None:
        prow = self.rows[r]
        piv = prow[col]
        if piv != 1:
            prow = [x / piv for x in prow]
            self.rows[r] = prow
        nz = [j for j, x in enumerate(prow) if x]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[col]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        f = self.z[col]
        if f:
            for j in nz:
                self.z[j] -= f * prow[j]
        self.basis[r] = col
        self.pivots += 1

    def run(self, allowed: int) -> str:
        """Primal simplex with Bland's rule over columns ``< allowed``."""
        while True:
            col = next((j for j in range(allowed) if self.z[j] > 0), None)
            if col is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], col)

    def solution(self) -> list[Fraction]:
        x = [ZERO] * self.width
        for i, bv in enumerate(self.basis):
            x[bv] = self.rows[i][-1]
        return x

    def duals(self, cost: Sequence[Fraction]) -> list[Fraction]:
        """y = c_B B^-1 in the original row signs."""
        y = []
        for k in range(self.m):
            col = self.nvar + k
            yk = cost[col] - self.z[col]
            y.append(yk * self.sign[k])
        return y


def simplex(A: Sequence[Sequence], b: Sequence, c: Sequence) -> LPResult:
    """Maximize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly.

    Phase 1 minimizes the sum of one artificial per row.  If its optimum is
    positive the phase-1 duals give ``w`` with ``A^T w <= 0`` and
    ``b.w > 0`` (returned as ``farkas``).
    """
    m = len(A)
    nvar = len(c)
    if any(len(row) != nvar for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    T = _Tableau(A, b, nvar)
    if m == 0:
        if any(Fraction(cj) > 0 for cj in c):
            return LPResult("unbounded")
        return LPResult("optimal", [ZERO] * nvar, ZERO, [])

    cost1 = [ZERO] * nvar + [-ONE] * m
    T.set_costs(cost1)
    T.run(T.width)
    phase1 = -T.z[-1]
    if phase1 < 0:
        y = T.duals(cost1)
        return LPResult("infeasible", farkas=[-v for v in y], pivots=T.pivots)

    for i in range(m):
        if T.basis[i] >= nvar:
            col = next((j for j in range(nvar) if T.rows[i][j]), None)
            if col is not None:
                T.pivot(i, col)
    cost2 = [Fraction(cj) for cj in c] + [ZERO] * m
    T.set_costs(cost2)
    status = T.run(nvar)
    if status == "unbounded":
        return LPResult("unbounded", pivots=T.pivots)
    x = T.solution()[:nvar]
    return LPResult(
        "optimal",
        x=x,
        objective=-T.z[-1],
        duals=T.duals(cost2),
        pivots=T.pivots,
    )


# --------------------------------------------------------------------------
# certificates


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def incidence(H: Hypergraph) -> list[list[int]]:
    """n-by-e 0/1 matrix, rows vertices, columns edges."""
    A = [[0] * H.num_edges for _ in range(H.n)]
    for j, e in enumerate(H.edges):
        for v in e:
            A[v][j] = 1
    return A


def _cert(kind: str, values: Sequence[Fraction], objective: Fraction) -> dict:
    return {
        "kind": kind,
        "values": [fmt_rational(v) for v in values],
        "objective": fmt_rational(objective),
    }


@dataclass(frozen=True)
class FractionalMatching:
    values: tuple[Fraction, ...]  # one per edge

    @property
    def total(self) -> Fraction:
        return sum(self.values, ZERO)

    def loads(self, H: Hypergraph) -> list[Fraction]:
        load = [ZERO] * H.n
        for e, m in zip(H.edges, self.values):
            for v in e:
                load[v] += m
        return load

    def is_perfect(self, H: Hypergraph) -> bool:
        return all(x == 1 for x in self.loads(H))

    def validate(self, H: Hypergraph, perfect: bool = False) -> None:
        if len(self.values) != H.num_edges:
            raise InvariantViolation("matching length differs from edge count")
        if any(v < 0 for v in self.values):
            raise InvariantViolation("negative matching value")
        loads = self.loads(H)
        if any(x > 1 for x in loads):
            raise InvariantViolation("matching overloads a vertex")
        if perfect and any(x != 1 for x in loads):
            raise InvariantViolation("matching is not perfect")

    def certificate(self) -> dict:
        return _cert("matching", self.values, self.total)


@dataclass(frozen=True)
class FractionalCover:
    values: tuple[Fraction, ...]  # one per vertex

    @property
    def total(self) -> Fraction:
        return sum(self.values, ZERO)

    def validate(self, H: Hypergraph) -> None:
        if len(self.values) != H.n:
            raise InvariantViolation("cover length differs from vertex count")
        if any(v < 0 for v in self.values):
            raise InvariantViolation("negative cover value")
        for e in H.edges:
            if sum((self.values[v] for v in e), ZERO) < 1:
                raise InvariantViolation(f"edge {e} is under-covered")

    def certificate(self) -> dict:
        return _cert("cover", self.values, self.total)


@dataclass(frozen=True)
class FarkasWitness:
    """w with A^T w <= 0 and 1^T w > 0: no perfect fractional matching."""

    values: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.values, ZERO)

    def validate(self, H: Hypergraph) -> None:
        if len(self.values) != H.n:
            raise InvariantViolation("witness length differs from vertex count")
        for e in H.edges:
            if sum((self.values[v] for v in e), ZERO) > 0:
                raise InvariantViolation(f"A^T w > 0 on edge {e}")
        if self.total <= 0:
            raise InvariantViolation("1^T w is not positive")

    def certificate(self) -> dict:
        return _cert("farkas", self.values, self.total)


@dataclass(frozen=True)
class Perturbation:
    values: tuple[Fraction, ...]  # one per vertex

    def edge_change(self, e) -> Fraction:
        return sum((self.values[v] for v in e), ZERO)

    def validate(self, H: Hypergraph) -> None:
        if len(self.values) != H.n:
            raise InvariantViolation("perturbation length differs from vertex count")
        if sum(self.values, ZERO) != 0:
            raise InvariantViolation("perturbation does not sum to zero")
        for e in H.edges:
            if self.edge_change(e) >= 0:
                raise InvariantViolation(f"p(e) >= 0 on edge {e}")

    def certificate(self) -> dict:
        return _cert("perturbation", self.values, sum(self.values, ZERO))


_KINDS = {
    "matching": FractionalMatching,
    "cover": FractionalCover,
    "farkas": FarkasWitness,
    "perturbation": Perturbation,
}


def dump_certificate(cert) -> str:
    return json.dumps(cert.certificate(), indent=2)


def load_certificate(text: str):
    data = json.loads(text)
    cls = _KINDS[data["kind"]]
    obj = cls(tuple(parse_rational(v) for v in data["values"]))
    if parse_rational(obj.certificate()["objective"]) != parse_rational(data["objective"]):
        raise ValueError("certificate objective does not match its values")
    return obj


# --------------------------------------------------------------------------
# hypergraph LPs


def nu_star(H: Hypergraph) -> tuple[Fraction, FractionalMatching]:
    """Fractional matching number and an optimal matching.

    Solves max 1.m subject to A m + s = 1 with slack s >= 0.
    """
    if H.num_edges == 0:
        return ZERO, FractionalMatching(())
    A = incidence(H)
    e, n = H.num_edges, H.n
    rows = [A[v] + [1 if k == v else 0 for k in range(n)] for v in range(n)]
    res = simplex(rows, [1] * n, [1] * e + [0] * n)
    if res.status != "optimal":
        raise InvariantViolation(f"matching LP returned {res.status}")
    m = FractionalMatching(tuple(res.x[:e]))
    m.validate(H)
    if m.total != res.objective:
        raise InvariantViolation("matching value disagrees with the LP objective")
    return res.objective, m


def tau_star(H: Hypergraph) -> tuple[Fraction, FractionalCover]:
    """Fractional cover number, solved as its own LP and checked against nu*.

    Solves min 1.t subject to A^T t - s = 1 with surplus s >= 0.
    """
    if H.num_edges == 0:
        raise NoEdges("fractional cover LP needs at least one edge")
    A = incidence(H)
    e, n = H.num_edges, H.n
    rows = [[A[v][j] for v in range(n)] + [-1 if k == j else 0 for k in range(e)]
            for j in range(e)]
    res = simplex(rows, [1] * e, [-1] * n + [0] * e)
    if res.status != "optimal":
        raise InvariantViolation(f"cover LP returned {res.status}")
    t = FractionalCover(tuple(res.x[:n]))
    t.validate(H)
    value = -res.objective
    if t.total != value:
        raise InvariantViolation("cover value disagrees with the LP objective")
    nu, _ = nu_star(H)
    if nu != value:
        raise InvariantViolation(f"duality gap: nu* = {nu}, tau* = {value}")
    return value, t


def perfect_fractional_matching(
    H: Hypergraph,
) -> tuple[FractionalMatching | None, FarkasWitness | None]:
    """Solve A m = 1, m >= 0.  Exactly one of the two results is not None."""
    A = incidence(H)
    res = simplex(A, [1] * H.n, [0] * H.num_edges)
    if res.status == "optimal":
        m = FractionalMatching(tuple(res.x))
        m.validate(H, perfect=True)
        return m, None
    w = FarkasWitness(tuple(res.farkas))
    w.validate(H)
    return None, w


def perturbation_from_witness(H: Hypergraph, w: FarkasWitness) -> Perturbation:
    """p = w - (1.w / n) 1."""
    shift = w.total / H.n
    p = Perturbation(tuple(x - shift for x in w.values))
    p.validate(H)
    return p


def witness_from_perturbation(H: Hypergraph, p: Perturbation) -> FarkasWitness:
    """w = p + (alpha / n) 1, alpha = |largest entry of A^T p|."""
    alpha = -max(p.edge_change(e) for e in H.edges)
    w = FarkasWitness(tuple(x + alpha / H.n for x in p.values))
    w.validate(H)
    return w


def find_perturbation(H: Hypergraph) -> Perturbation | None:
    """A perturbation of H, or None when H has a perfect fractional matching."""
    if H.num_edges == 0:
        raise NoEdges("perturbation search needs at least one edge")
    m, w = perfect_fractional_matching(H)
    if m is not None:
        return None
    return perturbation_from_witness(H, w)


def epsilon_bound(w: WeightAssignment, p: Perturbation) -> Fraction:
    """min |w(v) / p(v)| over p(v) != 0."""
    return min(abs(wv / pv) for wv, pv in zip(w.weights, p.values) if pv)


def apply_perturbation(
    w: WeightAssignment, p: Perturbation, eps: Fraction | None = None
) -> WeightAssignment:
    if len(w.weights) != len(p.values):
        raise ValueError("weight and perturbation lengths differ")
    bound = epsilon_bound(w, p)
    if eps is None:
        eps = bound / 2
    eps = Fraction(eps)
    if not 0 < eps < bound:
        raise EpsilonTooLarge(f"need 0 < eps < {fmt_rational(bound)}, got {fmt_rational(eps)}")
    return WeightAssignment(tuple(wv + eps * pv for wv, pv in zip(w.weights, p.values)))


def hr_top_level_cover(H: Hypergraph, r: int) -> FractionalCover:
    """The explicit cover of value r - 2 + 1/(r-1) on the uniform top-level of H_r.

    Weight 1/(r-1) on v_{r,r} and on v_{i,j} for i <= r-2, j <= r-1.
    """
    if H.labels is None:
        raise ValueError("H_r cover needs grid labels")
    share = Fraction(1, r - 1)
    values = []
    for row, col in H.labels:
        hit = (row, col) == (r, r) or (row <= r - 2 and col <= r - 1)
        values.append(share if hit else ZERO)
    return FractionalCover(tuple(values))
