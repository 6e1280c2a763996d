"""Tower embeddings over the divisibility order and Cauchy approximation.

Levels are positive integers ordered by divisibility.  Boolean levels embed
by block inflation (member i of [k] becomes the n/k consecutive members of
[n] starting at (i-1)(n/k)+1); subspace levels embed by block-diagonal
repetition.  Both preserve the renormalized rank (rank over level) and the
up-down metric, and compose coherently, which is what makes the limit well
defined.  The completion itself is never materialized: it is witnessed by
inward grid approximants whose distances shrink like 1/level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import CheckResult, GradedLattice
from .errors import PreconditionViolation
from .finite import (
    DEFAULT_CAPS,
    BitSubset,
    EnumerationCaps,
    Subspace,
    _all_subspaces,
    boolean_lattice,
    subspace_lattice,
)
from .intervals import IntervalSet, measure, normalize, union
from .rank import Rank


def _require_divides(k: int, n: int) -> None:
    if k <= 0 or n <= 0 or n % k != 0:
        raise PreconditionViolation(f"{k} does not divide {n}")


def renormalized_rank(x: BitSubset | Subspace, level: int) -> Rank:
    """Standard rank divided by the level, so the top sits at 1."""
    if x.n != level:
        raise PreconditionViolation(f"element lives at level {x.n}, not {level}")
    if isinstance(x, BitSubset):
        return Rank(Fraction(x.cardinality(), level))
    if isinstance(x, Subspace):
        return Rank(Fraction(x.dimension(), level))
    raise PreconditionViolation(f"no renormalized rank for {type(x).__name__}")


@dataclass(frozen=True)
class MetricPoint:
    """An element paired with its renormalized rank."""

    element: object
    renormalized: Rank


def metric_point(x: BitSubset | Subspace, level: int) -> MetricPoint:
    return MetricPoint(x, renormalized_rank(x, level))


def embed_boolean(s: BitSubset, n: int) -> BitSubset:
    """Inflate a subset of [k] to the subset of [n] covering the same blocks."""
    _require_divides(s.n, n)
    width = n // s.n
    mask = 0
    block = (1 << width) - 1
    for i in range(s.n):
        if s.mask >> i & 1:
            mask |= block << (i * width)
    return BitSubset(n, mask)


def embed_subspace(w: Subspace, n: int) -> Subspace:
    """Repeat a subspace of F_p^k block-diagonally inside F_p^n."""
    _require_divides(w.n, n)
    copies = n // w.n
    rows = []
    for row in w.rows:
        for t in range(copies):
            wide = [0] * n
            wide[t * w.n : (t + 1) * w.n] = list(row)
            rows.append(wide)
    return Subspace.from_rows(w.p, n, rows)


@dataclass(frozen=True)
class EmbeddingFamily:
    """A tower of lattices (boolean or subspace) with its level embeddings."""

    kind: str
    p: int | None = None
    caps: EnumerationCaps = DEFAULT_CAPS

    def __post_init__(self):
        if self.kind not in ("boolean", "subspace"):
            raise PreconditionViolation(f"unknown tower kind {self.kind!r}")
        if self.kind == "subspace" and self.p is None:
            raise PreconditionViolation("subspace towers need a field size")

    def lattice(self, level: int) -> GradedLattice:
        if self.kind == "boolean":
            return boolean_lattice(level)
        return subspace_lattice(self.p, level)

    def elements(self, level: int) -> list:
        if self.kind == "boolean":
            if (1 << level) > self.caps.max_elements:
                raise PreconditionViolation(f"level {level} too large to exhaust")
            return [BitSubset(level, m) for m in range(1 << level)]
        return _all_subspaces(self.p, level, self.caps)

    def embed(self, x, n: int):
        if self.kind == "boolean":
            return embed_boolean(x, n)
        return embed_subspace(x, n)


def coherence_check(family: EmbeddingFamily, k: int, m: int, n: int) -> CheckResult:
    """Embedding k->n must agree with k->m->n on every level-k element."""
    _require_divides(k, m)
    _require_divides(m, n)
    checked = 0
    for x in family.elements(k):
        direct = family.embed(x, n)
        composed = family.embed(family.embed(x, m), n)
        if direct != composed:
            return CheckResult(False, checked, f"coherence fails at {x!r}")
        checked += 1
    return CheckResult(True, checked)


def updown_metric(x: BitSubset | Subspace, y: BitSubset | Subspace) -> Rank:
    """2 r(x v y) - r(x) - r(y) with renormalized ranks; a metric on each level."""
    if type(x) is not type(y) or x.n != y.n or getattr(x, "p", None) != getattr(y, "p", None):
        raise PreconditionViolation(f"metric needs one level, got {x!r} and {y!r}")
    if isinstance(x, BitSubset):
        lattice = boolean_lattice(x.n)
    else:
        lattice = subspace_lattice(x.p, x.n)
    j = renormalized_rank(lattice.join(x, y), x.n)
    return j + j - renormalized_rank(x, x.n) - renormalized_rank(y, x.n)


def boolean_to_interval(s: BitSubset) -> IntervalSet:
    """Identify member i of [n] with ((i-1)/n, i/n]; adjacent members merge."""
    n = s.n
    pairs = [(Fraction(i - 1, n), Fraction(i, n)) for i in s.members()]
    return normalize(pairs)


def interval_updown(u: IntervalSet, v: IntervalSet) -> Fraction:
    return 2 * measure(union(u, v)) - measure(u) - measure(v)


def _approximant(target: IntervalSet, level: int) -> IntervalSet:
    # Shrink inward: round left endpoints up and right endpoints down to the
    # 1/level grid, dropping slivers, so the approximant stays below target.
    pairs = []
    for a, b in target.intervals:
        lo = Fraction(math.ceil(a * level), level)
        hi = Fraction(math.floor(b * level), level)
        if lo < hi:
            pairs.append((lo, hi))
    return IntervalSet(tuple(pairs))


@dataclass(frozen=True)
class CauchyRow:
    level: int
    approximant: IntervalSet
    distance_to_target: Fraction
    distance_to_previous: Fraction | None


@dataclass(frozen=True)
class CauchyReport:
    """Distance table for grid approximants of a target set in (0, 1]."""

    target: IntervalSet
    rows: tuple[CauchyRow, ...]

    @property
    def bound_ok(self) -> bool:
        budget = 2 * len(self.target.endpoints())
        return all(r.distance_to_target <= Fraction(budget, r.level) for r in self.rows)


def cauchy_approx(target: IntervalSet, levels: Sequence[int]) -> CauchyReport:
    """Best inward approximants of the target at each level, with distances.

    Levels must strictly increase and each must divide the next.  Since the
    approximants sit below the target, the up-down distance reduces to the
    measure deficit, which is at most two grid cells per target interval.
    """
    for a, b in target.intervals:
        if not (0 <= a and b <= 1):
            raise PreconditionViolation("target must lie in (0, 1]")
    levels = list(levels)
    if not levels:
        raise PreconditionViolation("need at least one level")
    for lv in levels:
        if lv <= 0:
            raise PreconditionViolation("levels must be positive")
    for k, n in zip(levels, levels[1:]):
        if not k < n or n % k != 0:
            raise PreconditionViolation(
                f"levels must strictly increase along divisibility, got {k} then {n}"
            )
    rows = []
    prev: IntervalSet | None = None
    for lv in levels:
        approx = _approximant(target, lv)
        rows.append(
            CauchyRow(
                level=lv,
                approximant=approx,
                distance_to_target=interval_updown(approx, target),
                distance_to_previous=None if prev is None else interval_updown(approx, prev),
            )
        )
        prev = approx
    return CauchyReport(target=target, rows=tuple(rows))
