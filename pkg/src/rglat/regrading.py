"""Cutset projection and the regraded rank function.

Given a lattice with a chief chain and an antichain cutset A, every element
z determines a maximal chain (its meets and joins with the chief chain),
which crosses A at a unique element: the projection of z.  The regraded
rank of z is its rank minus the rank of its projection; it vanishes exactly
on A, is strictly increasing, and is surjective onto its range on every
maximal chain, so A becomes a level set.

Two engines share this logic: :class:`IntervalRegrader` solves the crossing
exactly on piecewise-linear profiles of the bounded interval lattice;
:class:`FiniteRegrader` scans the saturated chain of a finite family.  The
regraded rank in general destroys rank modularity of the original chief
chain; :func:`counterexample_report` pins the two-speed density instance
where that failure is visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import CheckResult, GradedLattice
from .errors import (
    AmbientMismatch,
    CutsetError,
    InputFormatError,
    PreconditionViolation,
)
from .finite import (
    FiniteFamily,
    chief_chain,
    element_from_json,
    element_to_json,
    enumerate_maximal_chains,
    product_plane_lattice,
    PlanePoint,
)
from .intervals import (
    EMPTY,
    Ambient,
    IntervalSet,
    ProfileBundle,
    StepDensity,
    chief_element,
    density_from_json,
    density_to_json,
    grade_value,
    intersect,
    join_profile,
    measure,
    meet_profile,
    profile_bundle,
    union,
)
from .rank import Rank, format_fraction, parse_fraction


@dataclass(frozen=True)
class LevelCutset:
    """The level set {x : grading(x) = value} of a second exact grading.

    ``density`` selects the grading on the interval lattice (``None`` means
    the lattice's own rank: measure there, natural rank on finite
    families).  The value must be strictly between the grading of bottom
    and top for the level set to be a nonempty antichain cutset.
    """

    value: Fraction
    density: StepDensity | None = None

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class ExplicitCutset:
    """A finite antichain given element by element (finite lattices only)."""

    elements: tuple


@dataclass(frozen=True)
class ChainPoint:
    """One point of the projection chain through z."""

    side: str  # "meet" | "join"
    level: Fraction
    element: object


@dataclass(frozen=True)
class ProjectionResult:
    """The cutset crossing of the projection chain through z.

    ``chief_level`` is the least chief parameter producing the crossing;
    the element itself does not depend on that choice.
    """

    element: object
    chief_level: Fraction
    side: str


@dataclass(frozen=True)
class SweepRow:
    side: str  # "chief" | "meet" | "join"
    level: Fraction
    rank: Fraction
    regraded: Fraction


def finite_good_chain(lattice: GradedLattice, chief_elements, z) -> tuple:
    """The saturated chain of meets and joins of z with the chief chain.

    Raises RuntimeError if the collected elements fail to form a saturated
    chain; with a rank-modular chief chain they always do.
    """
    top_rank = lattice.rank(lattice.top).fraction
    by_rank: dict[Fraction, object] = {}
    for m in chief_elements:
        for e in (lattice.meet(z, m), lattice.join(z, m)):
            r = lattice.rank(e).fraction
            if by_rank.setdefault(r, e) != e:
                raise RuntimeError(f"rank {r} reached by two distinct chain elements")
    expected = [Fraction(i) for i in range(int(top_rank) + 1)]
    if sorted(by_rank) != expected:
        raise RuntimeError(f"projection chain through {z!r} is not saturated")
    chain = tuple(by_rank[r] for r in expected)
    for a, b in zip(chain, chain[1:]):
        if not lattice.leq(a, b):
            raise RuntimeError(f"projection chain through {z!r} is not a chain")
    return chain


def reversed_chain_maximal(lattice: GradedLattice, m, chain_elements) -> CheckResult:
    """Meets and joins of a chief member along a maximal chain form a maximal chain.

    Finite form: the collected elements must hit every rank between bottom
    and top exactly once and be totally ordered.
    """
    by_rank: dict[Fraction, object] = {}
    for c in chain_elements:
        for e in (lattice.meet(m, c), lattice.join(m, c)):
            r = lattice.rank(e).fraction
            if by_rank.setdefault(r, e) != e:
                return CheckResult(False, len(by_rank), f"rank {r} reached by two elements")
    ranks = sorted(by_rank)
    if ranks != [ranks[0] + i for i in range(len(ranks))]:
        return CheckResult(False, len(by_rank), "ranks are not consecutive")
    chain = [by_rank[r] for r in ranks]
    for a, b in zip(chain, chain[1:]):
        if not lattice.leq(a, b):
            return CheckResult(False, len(chain), f"{a!r} and {b!r} are incomparable")
    if chain[0] != lattice.bottom or chain[-1] != lattice.top:
        return CheckResult(False, len(chain), "chain does not span bottom to top")
    return CheckResult(True, len(chain))


def affine_rescale(
    value: Fraction,
    source: tuple[Fraction, Fraction],
    target: tuple[Fraction, Fraction],
) -> Fraction:
    """Affine map of one interval onto another; preserves rank modularity."""
    s_lo, s_hi = Fraction(source[0]), Fraction(source[1])
    t_lo, t_hi = Fraction(target[0]), Fraction(target[1])
    if not s_lo < s_hi:
        raise PreconditionViolation("source interval must be nondegenerate")
    return t_lo + (Fraction(value) - s_lo) * (t_hi - t_lo) / (s_hi - s_lo)


def _grid(upper: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise PreconditionViolation("grid step must be positive")
    levels = []
    k = 0
    while True:
        v = k * step
        if v >= upper:
            break
        levels.append(v)
        k += 1
    levels.append(upper)
    return levels


class IntervalRegrader:
    """Regrading on the bounded interval lattice with the prefix chief chain."""

    def __init__(self, ambient: Ambient | Fraction, cutset: LevelCutset):
        if not isinstance(ambient, Ambient):
            ambient = Ambient(Fraction(ambient))
        if not ambient.bounded:
            raise AmbientMismatch("regrading runs on a bounded ambient")
        if cutset.density is not None and cutset.density.upper != ambient.upper:
            raise AmbientMismatch(
                f"cutset density ends at {cutset.density.upper}, ambient at {ambient.upper}"
            )
        self.ambient = ambient
        self.cutset = cutset
        self.top = IntervalSet(((Fraction(0), ambient.upper),))
        total = grade_value(self.top, cutset.density)
        if not 0 < cutset.value < total:
            raise CutsetError(
                f"level {cutset.value} is not strictly inside (0, {total}); "
                "the level set is not an antichain cutset"
            )

    @property
    def density(self) -> StepDensity | None:
        return self.cutset.density

    def grade(self, u: IntervalSet) -> Fraction:
        return grade_value(u, self.cutset.density)

    def chief(self, level: Fraction) -> IntervalSet:
        return chief_element(self.ambient, level)

    def chain_point(self, z: IntervalSet, level: Fraction, side: str) -> ChainPoint:
        level = Fraction(level)
        m = self.chief(level)
        if side == "meet":
            return ChainPoint("meet", level, intersect(z, m))
        if side == "join":
            return ChainPoint("join", level, union(z, m))
        raise PreconditionViolation(f"side must be 'meet' or 'join', got {side!r}")

    def _solve(self, bundle: ProfileBundle) -> tuple[Fraction, str]:
        if bundle.grade_of_element >= self.cutset.value:
            return bundle.grade_meet.min_level_at_value(self.cutset.value), "meet"
        return bundle.grade_join.min_level_at_value(self.cutset.value), "join"

    def project(self, z: IntervalSet) -> ProjectionResult:
        """Exact crossing of the projection chain through z with the cutset.

        Above or on the cutset the crossing lies on the meet side, below it
        on the join side; either way it is the root of a piecewise-linear
        profile, solved exactly, at the least solving level.
        """
        bundle = profile_bundle(self.ambient, z, self.cutset.density)
        level, side = self._solve(bundle)
        alpha = intersect(z, self.chief(level)) if side == "meet" else union(z, self.chief(level))
        if self.grade(alpha) != self.cutset.value:
            raise RuntimeError("projection missed the cutset level")
        return ProjectionResult(alpha, level, side)

    def regraded(self, z: IntervalSet) -> Fraction:
        """measure(z) minus measure of its projection; zero exactly on the cutset.

        The projection's measure is read off the parallel measure profile at
        the solved level, so no element is materialized.
        """
        bundle = profile_bundle(self.ambient, z, self.cutset.density)
        level, side = self._solve(bundle)
        if side == "meet":
            alpha_measure = bundle.measure_meet.value_at(level)
        else:
            alpha_measure = bundle.measure_join.value_at(level)
        return bundle.measure_of_element - alpha_measure

    def regraded_defect(self, m: IntervalSet, x: IntervalSet) -> Fraction:
        """Modular defect of the regraded rank; nonzero values are expected."""
        return (
            self.regraded(union(m, x))
            + self.regraded(intersect(m, x))
            - self.regraded(m)
            - self.regraded(x)
        )

    def rescaled(self, z: IntervalSet, target: tuple[Fraction, Fraction]) -> Fraction:
        lo = self.regraded(EMPTY)
        hi = self.regraded(self.top)
        return affine_rescale(self.regraded(z), (lo, hi), target)

    def chain_maximality(self, z: IntervalSet, density: StepDensity | None = None) -> CheckResult:
        """The projection chain through z covers the full grading range.

        Checked exactly: the meet and join profiles are continuous, weakly
        increasing, and splice at grading(z) while spanning grading(bottom)
        to grading(top).
        """
        meet_prof = meet_profile(self.ambient, z, density)
        join_prof = join_profile(self.ambient, z, density)
        gz = grade_value(z, density)
        top_value = grade_value(self.top, density)
        ok = (
            meet_prof.is_weakly_increasing
            and join_prof.is_weakly_increasing
            and meet_prof.values[0] == 0
            and meet_prof.values[-1] == gz
            and join_prof.values[0] == gz
            and join_prof.values[-1] == top_value
        )
        witness = None if ok else f"profiles of {z!r} do not cover [0, {top_value}]"
        return CheckResult(ok, len(meet_prof.breakpoints) + len(join_prof.breakpoints), witness)

    def reversed_chain_maximality(self, m: IntervalSet) -> CheckResult:
        # Meets and joins of m along the prefix chain: the same profiles with
        # the roles of m and the chain exchanged.
        return self.chain_maximality(m)

    def projection_order_check(self, w: IntervalSet, z: IntervalSet) -> CheckResult:
        """For w < z above or on the cutset: levels reverse or projections agree."""
        if not (intersect(w, z) == w and w != z):
            raise PreconditionViolation("need w strictly below z")
        if self.grade(w) < self.cutset.value or self.grade(z) < self.cutset.value:
            raise PreconditionViolation("both elements must be above or on the cutset")
        pw, pz = self.project(w), self.project(z)
        ok = pw.chief_level > pz.chief_level or pw.element == pz.element
        witness = None if ok else (
            f"levels {pw.chief_level} <= {pz.chief_level} with distinct projections"
        )
        return CheckResult(ok, 2, witness)

    def monotone_check(self, pairs: Iterable[tuple[IntervalSet, IntervalSet]]) -> CheckResult:
        checked = 0
        for w, z in pairs:
            if not (intersect(w, z) == w and w != z):
                raise PreconditionViolation("monotone check needs strict w < z pairs")
            if not self.regraded(w) < self.regraded(z):
                return CheckResult(False, checked, f"regraded rank not increasing at ({w!r}, {z!r})")
            checked += 1
        return CheckResult(True, checked)

    def sweep_chief(self, step: Fraction) -> list[SweepRow]:
        rows = []
        for level in _grid(self.ambient.upper, Fraction(step)):
            m = self.chief(level)
            rows.append(SweepRow("chief", level, measure(m), self.regraded(m)))
        return rows

    def sweep_through(self, z: IntervalSet, step: Fraction) -> list[SweepRow]:
        """Rank-ordered sweep of the projection chain through z.

        Consecutive duplicates are dropped: the chain parameter plateaus
        across the gaps of z, repeating the same element.  One profile
        bundle of z serves the whole sweep (see _SweepEvaluator).
        """
        evaluator = _SweepEvaluator(self, z)
        rows: list[SweepRow] = []
        for side in ("meet", "join"):
            row_fn = evaluator.meet_row if side == "meet" else evaluator.join_row
            for level in _grid(self.ambient.upper, Fraction(step)):
                rank, value = row_fn(level)
                row = SweepRow(side, level, rank, value)
                if rows and rows[-1].rank == row.rank:
                    continue
                rows.append(row)
        return rows


class _SweepEvaluator:
    """Closed-form regraded ranks along the projection chain through z.

    Every element of the chain is a meet or join of z with a prefix, so the
    exchange identities reduce each crossing to values of z's own four
    profiles plus the prefix grading and its inverse.  A sweep then costs a
    single profile bundle instead of one projection per grid point.
    """

    def __init__(self, regrader: "IntervalRegrader", z: IntervalSet):
        self.bundle = profile_bundle(regrader.ambient, z, regrader.cutset.density)
        self.density = regrader.cutset.density
        self.level = regrader.cutset.value
        self._meet_alpha: Fraction | None = None
        self._join_alpha: Fraction | None = None

    def _prefix_grade(self, level: Fraction) -> Fraction:
        return self.density.prefix_mass(level) if self.density is not None else level

    def _prefix_grade_inverse(self, value: Fraction) -> Fraction:
        return self.density.prefix_inverse(value) if self.density is not None else value

    def meet_row(self, level: Fraction) -> tuple[Fraction, Fraction]:
        b = self.bundle
        grade = b.grade_meet.value_at(level)
        rank = b.measure_meet.value_at(level)
        if grade >= self.level:
            # Above the cutset the crossing is shared with z itself.
            if self._meet_alpha is None:
                solved = b.grade_meet.min_level_at_value(self.level)
                self._meet_alpha = b.measure_meet.value_at(solved)
            return rank, rank - self._meet_alpha
        prefix = self._prefix_grade(level)
        if self.level <= prefix:
            # (z ^ m_level) v m_mu = (z v m_mu) ^ m_level for mu <= level.
            target = self.level - prefix + b.grade_join.value_at(level)
            mu = b.grade_join.min_level_at_value(target)
            alpha = b.measure_join.value_at(mu) + level - b.measure_join.value_at(level)
        else:
            # The crossing happens on the bare prefix chain above m_level.
            alpha = self._prefix_grade_inverse(self.level)
        return rank, rank - alpha

    def join_row(self, level: Fraction) -> tuple[Fraction, Fraction]:
        b = self.bundle
        grade = b.grade_join.value_at(level)
        rank = b.measure_join.value_at(level)
        if grade < self.level:
            # Below the cutset every join-side element shares z's crossing.
            if self._join_alpha is None:
                solved = b.grade_join.min_level_at_value(self.level)
                self._join_alpha = b.measure_join.value_at(solved)
            return rank, rank - self._join_alpha
        prefix = self._prefix_grade(level)
        if self.level <= prefix:
            alpha = self._prefix_grade_inverse(self.level)
        else:
            # (z v m_level) ^ m_mu = m_level v (z ^ m_mu) for mu >= level.
            target = self.level - prefix + b.grade_meet.value_at(level)
            mu = b.grade_meet.min_level_at_value(target)
            alpha = level + b.measure_meet.value_at(mu) - b.measure_meet.value_at(level)
        return rank, rank - alpha


class FiniteRegrader:
    """Regrading on a finite family along its canonical chief chain."""

    def __init__(self, family: FiniteFamily, cutset: LevelCutset | ExplicitCutset):
        self.family = family
        self.lattice: GradedLattice = family.lattice
        self.chief = tuple(chief_chain(family).elements())
        self.top_rank = self._rank(self.lattice.top)
        self.cutset = cutset
        if isinstance(cutset, LevelCutset):
            if cutset.density is not None:
                raise PreconditionViolation("finite families use their own rank for level sets")
            if not 0 < cutset.value < self.top_rank or cutset.value.denominator != 1:
                raise CutsetError(
                    f"level {cutset.value} is not an interior rank of {self.lattice.name}"
                )
            self._members: set | None = None
        else:
            members = tuple(cutset.elements)
            if not members:
                raise CutsetError("an explicit cutset cannot be empty")
            for i, x in enumerate(members):
                for y in members[i + 1 :]:
                    if self.lattice.comparable(x, y):
                        raise CutsetError(f"not an antichain: {x!r} and {y!r} are comparable")
            member_set = set(members)
            for chain in enumerate_maximal_chains(family):
                if not member_set.intersection(chain):
                    raise CutsetError(f"antichain misses the maximal chain {chain!r}")
            self._members = member_set

    def _rank(self, x) -> Fraction:
        return self.lattice.rank(x).fraction

    def in_cutset(self, x) -> bool:
        if self._members is not None:
            return x in self._members
        return self._rank(x) == self.cutset.value

    def good_chain(self, z) -> tuple:
        """The saturated chain of meets and joins of z with the chief chain."""
        return finite_good_chain(self.lattice, self.chief, z)

    def project(self, z) -> ProjectionResult:
        hits = [e for e in self.good_chain(z) if self.in_cutset(e)]
        if len(hits) != 1:
            raise CutsetError(
                f"cutset meets the chain through {z!r} in {len(hits)} points"
            )
        alpha = hits[0]
        if self.lattice.leq(alpha, z):
            side = "meet"
            levels = [
                self._rank(m) for m in self.chief if self.lattice.meet(z, m) == alpha
            ]
        else:
            side = "join"
            levels = [
                self._rank(m) for m in self.chief if self.lattice.join(z, m) == alpha
            ]
        return ProjectionResult(alpha, min(levels), side)

    def regraded(self, z) -> Fraction:
        return self._rank(z) - self._rank(self.project(z).element)

    def regraded_defect(self, m, x) -> Fraction:
        return (
            self.regraded(self.lattice.join(m, x))
            + self.regraded(self.lattice.meet(m, x))
            - self.regraded(m)
            - self.regraded(x)
        )

    def crosscheck(self) -> CheckResult:
        """The regraded rank is a grading with the cutset as zero level set.

        Exhaustive: strictly increasing along every maximal chain, one common
        value set across chains, and zero exactly on the cutset.
        """
        elems = self.family.elements()
        values = {e: self.regraded(e) for e in elems}
        zero_set = {e for e, v in values.items() if v == 0}
        expected = (
            set(self._members)
            if self._members is not None
            else {e for e in elems if self._rank(e) == self.cutset.value}
        )
        if zero_set != expected:
            return CheckResult(False, len(elems), "zero level set differs from the cutset")
        common: tuple | None = None
        checked = len(elems)
        for chain in enumerate_maximal_chains(self.family):
            vals = tuple(values[e] for e in chain)
            if any(a >= b for a, b in zip(vals, vals[1:])):
                return CheckResult(False, checked, f"not increasing along {chain!r}")
            if common is None:
                common = vals
            elif vals != common:
                return CheckResult(False, checked, f"value set differs along {chain!r}")
            checked += 1
        return CheckResult(True, checked)


# --- Monotone-limit hypotheses for unbounded gradings ------------------------

CONDITION_NAMES = (
    "chain-meet-sup",
    "chain-join-inf",
    "chief-meet-sup",
    "chief-join-inf",
)


@dataclass(frozen=True)
class LimitCondition:
    """One sup/inf condition evaluated by a monotone scan.

    ``vacuous`` marks conditions that hold because the grading codomain is
    bounded on the relevant side, so no scan is needed.
    """

    name: str
    holds: bool
    vacuous: bool
    scan_value: Rank | None = None
    target_value: Rank | None = None


@dataclass(frozen=True)
class HypothesisReport:
    stage: str
    conditions: tuple[LimitCondition, ...]

    @property
    def failing(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.conditions if not c.holds)

    @property
    def all_hold(self) -> bool:
        return not self.failing


def _sup_condition(name: str, scan: Sequence[Rank], target: Rank) -> LimitCondition:
    value = max(scan)
    return LimitCondition(name, value == target, False, value, target)


def _inf_condition(name: str, scan: Sequence[Rank], target: Rank) -> LimitCondition:
    value = min(scan)
    return LimitCondition(name, value == target, False, value, target)


def _vacuous(name: str) -> LimitCondition:
    return LimitCondition(name, True, True)


def hypothesis_bounded_interval(upper: Fraction) -> HypothesisReport:
    """Bounded gradings satisfy all four conditions with nothing to scan."""
    Ambient(Fraction(upper))  # validates
    return HypothesisReport(
        stage="bounded-interval",
        conditions=tuple(_vacuous(name) for name in CONDITION_NAMES),
    )


def hypothesis_line_sets(
    kappas: Sequence[Fraction] = (Fraction(1), Fraction(10), Fraction(1000)),
    chief_levels: Sequence[Fraction] = (Fraction(1), Fraction(2), Fraction(3), Fraction(4)),
) -> HypothesisReport:
    """Bounded measurable sets on the line: the far-away chain breaks one condition.

    The chain (1, 1+k] never reaches the chief member (-1, 1], so the meet
    scan along the chain is stuck at zero; the chief chain itself absorbs
    every bounded set, so the chief-side condition holds.  The grading is
    bounded below, making both inf conditions vacuous.
    """
    ambient = Ambient(None)
    m = chief_element(ambient, Fraction(2))  # (-1, 1]
    chain_scan = [
        Rank(measure(intersect(IntervalSet(((Fraction(1), 1 + Fraction(k)),)), m)))
        for k in kappas
    ]
    z = m
    chief_scan = [
        Rank(measure(intersect(chief_element(ambient, Fraction(lv)), z)))
        for lv in chief_levels
    ]
    return HypothesisReport(
        stage="line-sets",
        conditions=(
            _sup_condition("chain-meet-sup", chain_scan, Rank(measure(m))),
            _vacuous("chain-join-inf"),
            _sup_condition("chief-meet-sup", chief_scan, Rank(measure(z))),
            _vacuous("chief-join-inf"),
        ),
    )


def hypothesis_product_plane(
    b_values: Sequence[Fraction] = (Fraction(1), Fraction(10), Fraction(100)),
) -> HypothesisReport:
    """The product plane: meet with the vertical chain is discontinuous at +inf.

    The chief chain is the horizontal axis; the probe is its member (1, 0).
    Meets along the vertical chain plateau at the origin while the value at
    the top is the probe itself, so exactly the first condition fails.
    """
    lattice = product_plane_lattice()
    m = PlanePoint.point(1, 0)
    z = PlanePoint.point(1, 0)
    chain_up = [PlanePoint.point(0, Fraction(b)) for b in b_values]
    chain_down = [PlanePoint.point(0, -Fraction(b)) for b in b_values]
    chief_up = [PlanePoint.point(Fraction(b), 0) for b in b_values]
    chief_down = [PlanePoint.point(-Fraction(b), 0) for b in b_values]
    return HypothesisReport(
        stage="product-plane",
        conditions=(
            _sup_condition(
                "chain-meet-sup",
                [lattice.rank(lattice.meet(m, c)) for c in chain_up],
                lattice.rank(lattice.meet(m, lattice.top)),
            ),
            _inf_condition(
                "chain-join-inf",
                [lattice.rank(lattice.join(m, c)) for c in chain_down],
                lattice.rank(lattice.join(m, lattice.bottom)),
            ),
            _sup_condition(
                "chief-meet-sup",
                [lattice.rank(lattice.meet(mm, z)) for mm in chief_up],
                lattice.rank(z),
            ),
            _inf_condition(
                "chief-join-inf",
                [lattice.rank(lattice.join(mm, z)) for mm in chief_down],
                lattice.rank(z),
            ),
        ),
    )


# --- The two-speed density instance ------------------------------------------

def counterexample_stage() -> IntervalRegrader:
    """Ambient (0, 2], density 1 then 2, cutset at density value 1.

    The regraded rank here takes the chief member (0, 1] out of the
    rank-modular set, showing the construction need not preserve chief
    modularity.
    """
    density = StepDensity(
        (Fraction(0), Fraction(1), Fraction(2)),
        (Fraction(1), Fraction(2)),
    )
    return IntervalRegrader(Fraction(2), LevelCutset(Fraction(1), density))


@dataclass(frozen=True)
class CounterexampleReport:
    prefix_rows: tuple[tuple[Fraction, Fraction], ...]
    upper_half: Fraction
    full_interval: Fraction
    empty_set: Fraction
    modular_defect: Fraction

    @property
    def matches_expected(self) -> bool:
        return (
            all(v == t - 1 for t, v in self.prefix_rows)
            and self.upper_half == Fraction(1, 2)
            and self.full_interval == Fraction(1)
            and self.empty_set == Fraction(-1)
            and self.modular_defect == Fraction(-1, 2)
        )


def counterexample_report(
    prefix_points: Sequence[Fraction] = (
        Fraction(1),
        Fraction(5, 4),
        Fraction(3, 2),
        Fraction(2),
    ),
) -> CounterexampleReport:
    stage = counterexample_stage()
    lower = IntervalSet(((Fraction(0), Fraction(1)),))
    upper = IntervalSet(((Fraction(1), Fraction(2)),))
    prefix_rows = tuple(
        (Fraction(t), stage.regraded(IntervalSet(((Fraction(0), Fraction(t)),))))
        for t in prefix_points
    )
    return CounterexampleReport(
        prefix_rows=prefix_rows,
        upper_half=stage.regraded(upper),
        full_interval=stage.regraded(stage.top),
        empty_set=stage.regraded(EMPTY),
        modular_defect=stage.regraded_defect(lower, upper),
    )


# --- JSON forms --------------------------------------------------------------

def cutset_to_json(cutset: LevelCutset | ExplicitCutset) -> dict:
    if isinstance(cutset, LevelCutset):
        grading = "rank" if cutset.density is None else {"density": density_to_json(cutset.density)}
        return {"type": "level", "grading": grading, "value": format_fraction(cutset.value)}
    return {"type": "explicit", "elements": [element_to_json(e) for e in cutset.elements]}


def cutset_from_json(data: dict, family: FiniteFamily | None = None) -> LevelCutset | ExplicitCutset:
    try:
        kind = data["type"]
        if kind == "level":
            grading = data["grading"]
            if grading in ("rank", "lebesgue"):
                density = None
            elif isinstance(grading, dict) and "density" in grading:
                density = density_from_json(grading["density"])
            else:
                raise InputFormatError(f"unknown grading descriptor {grading!r}")
            return LevelCutset(parse_fraction(data["value"]), density)
        if kind == "explicit":
            if family is None:
                raise InputFormatError("explicit cutsets need a finite family context")
            return ExplicitCutset(
                tuple(element_from_json(family, e) for e in data["elements"])
            )
    except KeyError as exc:
        raise InputFormatError(f"bad cutset payload: {data!r}") from exc
    raise InputFormatError(f"unknown cutset type {data.get('type')!r}")
