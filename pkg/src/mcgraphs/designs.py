"""Affine planes AG(2, q) and resolvable block designs.

Point convention for AG(2, q): the point ``(x, y)`` with field-element
indices ``x, y`` gets id ``y * q + x``.  The x-coordinate is the column and
the y-coordinate is the row, so the 1-based grid label ``v_{i,j}`` (row i,
column j) is point id ``(i - 1) * q + (j - 1)``.

Parallel classes are indexed by slope: class ``m`` (for the field element
with index m) holds the lines ``y = m x + b``; class ``q`` holds the
vertical lines ``x = c``.  Class 0 is therefore the rows and class ``q``
the columns.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotResolvable, PreconditionViolated, UnsupportedOrder
from .galois import field_new, prime_power

DEFAULT_ORDER_CAP = 9

Block = tuple[int, ...]


def point_id(q: int, row: int, col: int) -> int:
    """Point id of the 1-based grid label ``v_{row,col}``."""
    return (row - 1) * q + (col - 1)


def grid_label(q: int, pid: int) -> tuple[int, int]:
    return pid // q + 1, pid % q + 1


@dataclass(frozen=True)
class AffinePlane:
    q: int
    lines: tuple[Block, ...]
    parallel_classes: tuple[tuple[int, ...], ...]  # line indices per class

    @property
    def points(self) -> range:
        return range(self.q * self.q)

    @property
    def vertical_class(self) -> int:
        return self.q

    def class_of_line(self) -> list[int]:
        out = [0] * len(self.lines)
        for c, members in enumerate(self.parallel_classes):
            for li in members:
                out[li] = c
        return out

    def lines_through(self, pid: int) -> list[int]:
        return [i for i, line in enumerate(self.lines) if pid in line]

    def as_rbibd(self) -> RbibdDesign:
        return RbibdDesign(
            v=self.q * self.q,
            k=self.q,
            blocks=self.lines,
            parallel_classes=self.parallel_classes,
        )


def affine_plane(q: int, cap: int = DEFAULT_ORDER_CAP) -> AffinePlane:
    F = field_new(q)  # raises NotPrimePower
    if q > cap:
        raise UnsupportedOrder(f"order {q} exceeds the supported cap {cap}")
    elems = F.elements()
    lines: list[Block] = []
    classes: list[tuple[int, ...]] = []
    for m in elems:
        members = []
        for b in elems:
            pts = sorted(((m * x + b).index) * q + x.index for x in elems)
            members.append(len(lines))
            lines.append(tuple(pts))
        classes.append(tuple(members))
    members = []
    for c in range(q):
        members.append(len(lines))
        lines.append(tuple(y * q + c for y in range(q)))
    classes.append(tuple(members))
    plane = AffinePlane(q, tuple(lines), tuple(classes))
    report = verify_design(plane.lines, q * q, q, plane.parallel_classes)
    if not report.ok:
        raise AssertionError(f"AG(2,{q}) failed verification: {report}")
    return plane


@dataclass(frozen=True)
class RbibdDesign:
    v: int
    k: int
    blocks: tuple[Block, ...]
    parallel_classes: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        """The t in v = k^2 + t k (k - 1)."""
        t, rem = divmod(self.v - self.k * self.k, self.k * (self.k - 1))
        if rem or t < 0:
            raise ValueError(f"v={self.v} is not k^2 + t k(k-1) for k={self.k}")
        return t


@dataclass
class VerificationReport:
    v: int
    k: int
    num_blocks: int
    uncovered_pairs: list[tuple[int, int]] = field(default_factory=list)
    overcovered_pairs: list[tuple[int, int]] = field(default_factory=list)
    non_uniform_blocks: list[int] = field(default_factory=list)
    num_classes: int | None = None
    bad_classes: list[int] = field(default_factory=list)

    @property
    def pair_coverage_exact(self) -> bool:
        return not self.uncovered_pairs and not self.overcovered_pairs

    @property
    def uniform(self) -> bool:
        return not self.non_uniform_blocks

    @property
    def resolution_ok(self) -> bool | None:
        if self.num_classes is None:
            return None
        return not self.bad_classes

    @property
    def ok(self) -> bool:
        return self.pair_coverage_exact and self.uniform and self.resolution_ok is not False


def verify_design(blocks, v: int, k: int, classes=None) -> VerificationReport:
    """Check pair coverage, k-uniformity and (if given) the resolution.

    Failures are recorded in the report, never raised.  A resolution is
    accepted when every class partitions the point set and every block is
    in exactly one class.
    """
    blocks = [tuple(b) for b in blocks]
    report = VerificationReport(v=v, k=k, num_blocks=len(blocks))
    counts = Counter()
    for i, b in enumerate(blocks):
        if len(set(b)) != k:
            report.non_uniform_blocks.append(i)
        counts.update(itertools.combinations(sorted(set(b)), 2))
    for pair in itertools.combinations(range(v), 2):
        c = counts.get(pair, 0)
        if c == 0:
            report.uncovered_pairs.append(pair)
        elif c > 1:
            report.overcovered_pairs.append(pair)
    if classes is not None:
        report.num_classes = len(classes)
        seen = Counter(li for cls in classes for li in cls)
        for ci, cls in enumerate(classes):
            pts = [p for li in cls for p in blocks[li]]
            if sorted(pts) != list(range(v)):
                report.bad_classes.append(ci)
        if set(seen) != set(range(len(blocks))) or any(c != 1 for c in seen.values()):
            report.bad_classes.append(-1)
    return report


# A resolution of the 35 lines of PG(3, 2) into 7 spreads; points are the
# nonzero vectors of GF(2)^4 minus one.
_KIRKMAN_CLASSES = (
    ((0, 1, 2), (3, 7, 11), (4, 9, 14), (5, 10, 12), (6, 8, 13)),
    ((0, 3, 4), (1, 7, 9), (2, 12, 13), (5, 8, 14), (6, 10, 11)),
    ((0, 5, 6), (1, 8, 10), (2, 11, 14), (3, 9, 13), (4, 7, 12)),
    ((0, 7, 8), (1, 11, 13), (2, 4, 5), (3, 10, 14), (6, 9, 12)),
    ((0, 9, 10), (1, 12, 14), (2, 3, 6), (4, 8, 11), (5, 7, 13)),
    ((0, 11, 12), (1, 3, 5), (2, 8, 9), (4, 10, 13), (6, 7, 14)),
    ((0, 13, 14), (1, 4, 6), (2, 7, 10), (3, 8, 12), (5, 9, 11)),
)


def kirkman_15() -> RbibdDesign:
    """A resolvable Steiner triple system on 15 points (a (15,3,1)-RBIBD)."""
    blocks = tuple(b for cls in _KIRKMAN_CLASSES for b in cls)
    classes = tuple(tuple(range(5 * i, 5 * i + 5)) for i in range(7))
    report = verify_design(blocks, 15, 3, classes)
    if not report.ok:
        raise AssertionError(f"shipped Kirkman data failed verification: {report}")
    return RbibdDesign(15, 3, blocks, classes)


def check_resolvable(design: RbibdDesign) -> None:
    report = verify_design(design.blocks, design.v, design.k, design.parallel_classes)
    if not report.ok:
        raise NotResolvable(f"design fails verification: {report}")
    expected = (design.v - 1) // (design.k - 1)
    if len(design.parallel_classes) != expected:
        raise NotResolvable(
            f"{len(design.parallel_classes)} classes, expected (v-1)/(k-1) = {expected}"
        )


@dataclass(frozen=True)
class RbibdParams:
    v: int
    num_colors: int
    component_bound_fraction: Fraction


def rbibd_coloring_params(k: int, t: int) -> RbibdParams:
    if k < 2 or t < 0:
        raise PreconditionViolated("need k >= 2 and t >= 0")
    return RbibdParams(
        v=k * k + t * k * (k - 1),
        num_colors=(t + 1) * k + 1,
        component_bound_fraction=Fraction(1, (t + 1) * k - t),
    )


def plane_exists_known(q: int) -> bool:
    """True when an affine plane of order q is known to exist (q a prime power)."""
    return prime_power(q) is not None


def plane_excluded(q: int) -> bool:
    """True when no affine plane of order q can exist.

    Uses the Bruck-Ryser condition (q = 1, 2 mod 4 and q not a sum of two
    squares) plus the computer-verified nonexistence for q = 10.
    """
    if q == 10:
        return True
    if q % 4 in (1, 2):
        return not any(
            math.isqrt(q - a * a) ** 2 == q - a * a for a in range(math.isqrt(q) + 1)
        )
    return False


def format_design(blocks, classes=None) -> str:
    """One block per line, blank line between parallel classes."""
    groups = classes if classes is not None else [tuple(range(len(blocks)))]
    chunks = ["\n".join(" ".join(map(str, blocks[i])) for i in g) for g in groups]
    return "\n\n".join(chunks) + "\n"


def parse_design(text: str) -> tuple[tuple[Block, ...], tuple[tuple[int, ...], ...]]:
    """Inverse of ``format_design``: returns (blocks, classes)."""
    blocks: list[Block] = []
    classes: list[tuple[int, ...]] = []
    for chunk in text.strip("\n").split("\n\n"):
        members = []
        for line in chunk.split("\n"):
            members.append(len(blocks))
            blocks.append(tuple(int(x) for x in line.split()))
        classes.append(tuple(members))
    return tuple(blocks), tuple(classes)
