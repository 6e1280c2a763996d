"""The measurable Boolean lattice at desk scale.

Elements are canonical finite unions of half-open intervals ``(a, b]`` with
exact rational endpoints; equality of canonical forms realizes equality up
to measure zero within this class.  The ambient space is either ``(0, T]``
(bounded mode, with bottom and top) or the whole line restricted to bounded
sets (no top until one is adjoined).

Gradings: Lebesgue measure, and step-density integrals ``u -> integral of f
over u`` for strictly positive piecewise-constant ``f``.  Along the prefix
chief chain ``(0, level]`` both gradings have exact piecewise-linear
profiles, which is what makes cutset projection solvable in closed form.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import GradedLattice
from .errors import AmbientMismatch, InputFormatError, PreconditionViolation
from .rank import Rank, format_fraction, parse_fraction

Pair = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Ambient:
    """Ambient space: ``(0, upper]`` when bounded, the whole line otherwise."""

    upper: Fraction | None = None

    def __post_init__(self):
        if self.upper is not None:
            object.__setattr__(self, "upper", Fraction(self.upper))
            if self.upper <= 0:
                raise PreconditionViolation("bounded ambient needs upper > 0")

    @property
    def bounded(self) -> bool:
        return self.upper is not None

    def require_contains(self, a: Fraction, b: Fraction) -> None:
        if self.bounded and not (0 <= a and b <= self.upper):
            raise AmbientMismatch(f"({a}, {b}] lies outside (0, {self.upper}]")


@dataclass(frozen=True)
class IntervalSet:
    """Canonical finite union of disjoint, non-adjacent half-open intervals."""

    intervals: tuple[Pair, ...] = ()

    def __post_init__(self):
        prev_hi: Fraction | None = None
        for a, b in self.intervals:
            if not isinstance(a, Fraction) or not isinstance(b, Fraction):
                raise ValueError("endpoints must be Fractions; use normalize()")
            if not a < b:
                raise ValueError(f"empty or reversed interval ({a}, {b}]")
            if prev_hi is not None and not prev_hi < a:
                raise ValueError("intervals must be disjoint and non-adjacent")
            prev_hi = b

    @classmethod
    def of(cls, *pairs) -> "IntervalSet":
        return normalize(pairs)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def endpoints(self) -> tuple[Fraction, ...]:
        out: list[Fraction] = []
        for a, b in self.intervals:
            out.append(a)
            out.append(b)
        return tuple(out)

    def __repr__(self) -> str:
        if not self.intervals:
            return "IntervalSet()"
        body = " u ".join(f"({a},{b}]" for a, b in self.intervals)
        return f"IntervalSet[{body}]"


EMPTY = IntervalSet()


def normalize(raw: Iterable[Sequence], ambient: Ambient | None = None) -> IntervalSet:
    """Sort, merge (overlaps and adjacencies), and validate raw (a, b] pairs."""
    items: list[list[Fraction]] = []
    for pair in raw:
        a, b = Fraction(pair[0]), Fraction(pair[1])
        if not a < b:
            raise PreconditionViolation(f"raw interval ({a}, {b}] is empty or reversed")
        if ambient is not None:
            ambient.require_contains(a, b)
        items.append([a, b])
    items.sort()
    merged: list[list[Fraction]] = []
    for a, b in items:
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1][1] = b
        else:
            merged.append([a, b])
    return IntervalSet(tuple((a, b) for a, b in merged))


def intersect(u: IntervalSet, v: IntervalSet) -> IntervalSet:
    out: list[Pair] = []
    i = j = 0
    ui, vi = u.intervals, v.intervals
    while i < len(ui) and j < len(vi):
        lo = max(ui[i][0], vi[j][0])
        hi = min(ui[i][1], vi[j][1])
        if lo < hi:
            out.append((lo, hi))
        if ui[i][1] <= vi[j][1]:
            i += 1
        else:
            j += 1
    return IntervalSet(tuple(out))


def union(u: IntervalSet, v: IntervalSet) -> IntervalSet:
    if u.is_empty:
        return v
    if v.is_empty:
        return u
    return normalize(list(u.intervals) + list(v.intervals))


def complement(u: IntervalSet, ambient: Ambient) -> IntervalSet:
    """Complement within (0, upper]; requires a bounded ambient."""
    if not ambient.bounded:
        raise AmbientMismatch("complement needs a bounded ambient")
    out: list[Pair] = []
    cursor = Fraction(0)
    for a, b in u.intervals:
        ambient.require_contains(a, b)
        if cursor < a:
            out.append((cursor, a))
        cursor = b
    if cursor < ambient.upper:
        out.append((cursor, ambient.upper))
    return IntervalSet(tuple(out))


def measure(u: IntervalSet) -> Fraction:
    return sum((b - a for a, b in u.intervals), Fraction(0))


def lebesgue(u: IntervalSet) -> Rank:
    """Exact Lebesgue measure as a rank value."""
    return Rank(measure(u))


@dataclass(frozen=True)
class StepDensity:
    """Strictly positive piecewise-constant density on (0, upper].

    ``breakpoints`` run from 0 to the ambient upper bound; ``values[j]`` is
    the density on ``(breakpoints[j], breakpoints[j+1]]``.  The induced
    grading ``mass`` is strictly increasing and modular, so it is a second
    exact rank function on the interval lattice.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "breakpoints", tuple(Fraction(t) for t in self.breakpoints))
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.breakpoints) != len(self.values) + 1 or not self.values:
            raise PreconditionViolation("need k+1 breakpoints for k density values")
        if self.breakpoints[0] != 0:
            raise PreconditionViolation("density must start at 0")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if not a < b:
                raise PreconditionViolation("density breakpoints must strictly increase")
        if any(v <= 0 for v in self.values):
            raise PreconditionViolation("density values must be strictly positive")

    @classmethod
    def uniform(cls, upper: Fraction, value: Fraction = Fraction(1)) -> "StepDensity":
        return cls((Fraction(0), Fraction(upper)), (Fraction(value),))

    @property
    def upper(self) -> Fraction:
        return self.breakpoints[-1]

    @property
    def total(self) -> Fraction:
        return sum(
            (v * (b - a) for v, a, b in zip(self.values, self.breakpoints, self.breakpoints[1:])),
            Fraction(0),
        )

    def mass(self, u: IntervalSet) -> Fraction:
        """Integral of the density over u; exact."""
        total = Fraction(0)
        for a, b in u.intervals:
            if not (0 <= a and b <= self.upper):
                raise AmbientMismatch(f"({a}, {b}] outside the density domain")
            for v, lo, hi in zip(self.values, self.breakpoints, self.breakpoints[1:]):
                cut_lo, cut_hi = max(a, lo), min(b, hi)
                if cut_lo < cut_hi:
                    total += v * (cut_hi - cut_lo)
        return total

    def prefix_mass(self, t: Fraction) -> Fraction:
        t = Fraction(t)
        if t <= 0:
            return Fraction(0)
        return self.mass(IntervalSet(((Fraction(0), min(t, self.upper)),)))

    def prefix_inverse(self, target: Fraction) -> Fraction:
        """The point t with prefix_mass(t) == target; exact piecewise-linear solve."""
        target = Fraction(target)
        if not 0 <= target <= self.total:
            raise PreconditionViolation(f"mass {target} outside [0, {self.total}]")
        acc = Fraction(0)
        for v, lo, hi in zip(self.values, self.breakpoints, self.breakpoints[1:]):
            piece = v * (hi - lo)
            if target <= acc + piece:
                return lo + (target - acc) / v
            acc += piece
        return self.upper


def nu_eval(density: StepDensity, u: IntervalSet) -> Rank:
    """The density grading of u as a rank value."""
    return Rank(density.mass(u))


def chief_element(ambient: Ambient, level: Fraction) -> IntervalSet:
    """The chief-chain member of the given measure.

    Bounded mode: the prefix ``(0, level]``.  Unbounded mode: the symmetric
    interval ``(-level/2, level/2]``, parameterized so its measure is the
    level.
    """
    level = Fraction(level)
    if ambient.bounded:
        if not 0 <= level <= ambient.upper:
            raise PreconditionViolation(f"level {level} outside [0, {ambient.upper}]")
        if level == 0:
            return EMPTY
        return IntervalSet(((Fraction(0), level),))
    if level < 0:
        raise PreconditionViolation(f"level {level} must be nonnegative")
    if level == 0:
        return EMPTY
    return IntervalSet(((-level / 2, level / 2),))


def interval_lattice(ambient: Ambient, density: StepDensity | None = None) -> GradedLattice:
    """The interval lattice graded by measure, or by a step density if given."""
    if density is not None:
        if not ambient.bounded:
            raise AmbientMismatch("density gradings need a bounded ambient")
        if density.upper != ambient.upper:
            raise AmbientMismatch(
                f"density ends at {density.upper}, ambient at {ambient.upper}"
            )
        rank = lambda u: Rank(density.mass(u))
        name = "interval-lattice/density"
    else:
        rank = lebesgue
        name = "interval-lattice"
    top = IntervalSet(((Fraction(0), ambient.upper),)) if ambient.bounded else None
    return GradedLattice(name=name, meet=intersect, join=union, rank=rank, bottom=EMPTY, top=top)


@dataclass(frozen=True)
class PiecewiseLinearProfile:
    """A continuous piecewise-linear function given by breakpoint samples.

    Exact between samples provided the underlying function is affine on each
    breakpoint gap, which holds for the meet/join profiles below by choice
    of breakpoints.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.breakpoints) != len(self.values) or len(self.breakpoints) < 2:
            raise PreconditionViolation("profile needs matching samples, at least two")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if not a < b:
                raise PreconditionViolation("profile breakpoints must strictly increase")

    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(
            (v2 - v1) / (x2 - x1)
            for (x1, v1), (x2, v2) in zip(
                zip(self.breakpoints, self.values),
                zip(self.breakpoints[1:], self.values[1:]),
            )
        )

    @property
    def is_weakly_increasing(self) -> bool:
        return all(v1 <= v2 for v1, v2 in zip(self.values, self.values[1:]))

    @property
    def total_rise(self) -> Fraction:
        return self.values[-1] - self.values[0]

    def value_at(self, x: Fraction) -> Fraction:
        x = Fraction(x)
        xs = self.breakpoints
        if not xs[0] <= x <= xs[-1]:
            raise PreconditionViolation(f"{x} outside profile domain [{xs[0]}, {xs[-1]}]")
        i = bisect.bisect_right(xs, x) - 1
        if i == len(xs) - 1:
            return self.values[-1]
        x1, x2 = xs[i], xs[i + 1]
        v1, v2 = self.values[i], self.values[i + 1]
        return v1 + (v2 - v1) * (x - x1) / (x2 - x1)

    def min_level_at_value(self, target: Fraction) -> Fraction:
        """Least argument where the profile attains target (profile must be increasing)."""
        target = Fraction(target)
        if not self.is_weakly_increasing:
            raise PreconditionViolation("min_level_at_value needs a weakly increasing profile")
        vs, xs = self.values, self.breakpoints
        if not vs[0] <= target <= vs[-1]:
            raise PreconditionViolation(f"value {target} not attained by profile")
        if target == vs[0]:
            return xs[0]
        for i in range(len(xs) - 1):
            if vs[i] < target <= vs[i + 1]:
                slope = (vs[i + 1] - vs[i]) / (xs[i + 1] - xs[i])
                return xs[i] + (target - vs[i]) / slope
        raise AssertionError("unreachable: increasing profile must attain the value")


def grade_value(u: IntervalSet, density: StepDensity | None = None) -> Fraction:
    """Grading of u: Lebesgue measure, or the density mass when one is given."""
    return density.mass(u) if density is not None else measure(u)


def _profile_breakpoints(ambient: Ambient, z: IntervalSet, density: StepDensity | None) -> tuple[Fraction, ...]:
    pts = {Fraction(0), ambient.upper}
    pts.update(z.endpoints())
    if density is not None:
        pts.update(density.breakpoints)
    return tuple(sorted(pts))


def _cumulative_profile_values(
    ambient: Ambient, z: IntervalSet, density: StepDensity | None
) -> tuple[tuple[Fraction, ...], list[Fraction], list[Fraction], list[Fraction], list[Fraction]]:
    # One left-to-right sweep accumulating the graded and plain measures of
    # z ^ (0, x] and of (0, x].  Every z endpoint and density breakpoint is a
    # profile breakpoint, so each segment lies wholly inside or outside z and
    # carries one density value; a midpoint probe decides both.
    xs = _profile_breakpoints(ambient, z, density)
    meet_vals = [Fraction(0)]
    prefix_vals = [Fraction(0)]
    meet_meas = [Fraction(0)]
    prefix_meas = [Fraction(0)]
    acc_meet = Fraction(0)
    acc_prefix = Fraction(0)
    acc_meet_meas = Fraction(0)
    z_index = 0
    d_index = 0
    for x1, x2 in zip(xs, xs[1:]):
        mid = (x1 + x2) / 2
        if density is None:
            value = Fraction(1)
        else:
            while density.breakpoints[d_index + 1] < mid:
                d_index += 1
            value = density.values[d_index]
        length = x2 - x1
        weight = value * length
        acc_prefix += weight
        while z_index < len(z.intervals) and z.intervals[z_index][1] < mid:
            z_index += 1
        if z_index < len(z.intervals) and z.intervals[z_index][0] < mid <= z.intervals[z_index][1]:
            acc_meet += weight
            acc_meet_meas += length
        meet_vals.append(acc_meet)
        prefix_vals.append(acc_prefix)
        meet_meas.append(acc_meet_meas)
        prefix_meas.append(x2)
    return xs, meet_vals, prefix_vals, meet_meas, prefix_meas


@dataclass(frozen=True)
class ProfileBundle:
    """All four prefix-chain profiles of one element in one sweep.

    ``grade_*`` use the requested grading, ``measure_*`` plain measure; when
    no density is given the two coincide.
    """

    grade_meet: PiecewiseLinearProfile
    grade_join: PiecewiseLinearProfile
    measure_meet: PiecewiseLinearProfile
    measure_join: PiecewiseLinearProfile

    @property
    def grade_of_element(self) -> Fraction:
        return self.grade_meet.values[-1]

    @property
    def measure_of_element(self) -> Fraction:
        return self.measure_meet.values[-1]


def profile_bundle(ambient: Ambient, z: IntervalSet, density: StepDensity | None = None) -> ProfileBundle:
    """Meet and join profiles of z for both the grading and plain measure.

    Join values come from the meet sweep through modularity:
    grade(z v prefix) = grade(z) + grade(prefix) - grade(z ^ prefix).
    """
    if not ambient.bounded:
        raise AmbientMismatch("profiles need a bounded ambient")
    xs, meet_vals, prefix_vals, meet_meas, prefix_meas = _cumulative_profile_values(
        ambient, z, density
    )
    gz = meet_vals[-1]
    mz = meet_meas[-1]
    grade_meet = PiecewiseLinearProfile(xs, tuple(meet_vals))
    grade_join = PiecewiseLinearProfile(
        xs, tuple(gz + p - m for p, m in zip(prefix_vals, meet_vals))
    )
    if density is None:
        return ProfileBundle(grade_meet, grade_join, grade_meet, grade_join)
    measure_meet = PiecewiseLinearProfile(xs, tuple(meet_meas))
    measure_join = PiecewiseLinearProfile(
        xs, tuple(mz + p - m for p, m in zip(prefix_meas, meet_meas))
    )
    return ProfileBundle(grade_meet, grade_join, measure_meet, measure_join)


def meet_profile(ambient: Ambient, z: IntervalSet, density: StepDensity | None = None) -> PiecewiseLinearProfile:
    """level -> grading(z meet (0, level]), exact on [0, upper].

    Breakpoints are exactly the endpoints of z together with the density
    breakpoints (0 and the upper bound included).  Measure profiles have
    slopes in {0, 1}.
    """
    return profile_bundle(ambient, z, density).grade_meet


def join_profile(ambient: Ambient, z: IntervalSet, density: StepDensity | None = None) -> PiecewiseLinearProfile:
    """level -> grading(z join (0, level]), exact on [0, upper]."""
    return profile_bundle(ambient, z, density).grade_join


@dataclass(frozen=True)
class LineScanReport:
    """Monotone scans in the lattice of bounded sets on the line.

    The far-away chain ``(1, 1+k]`` never touches the target, so its meet
    scan is stuck at zero; the symmetric chief chain absorbs the target and
    its scan attains the target measure.
    """

    target: IntervalSet
    target_measure: Fraction
    chain_rows: tuple[tuple[Fraction, Fraction], ...]
    chain_scan_sup: Fraction
    chief_rows: tuple[tuple[Fraction, Fraction], ...]
    chief_scan_sup: Fraction

    @property
    def chain_discontinuous(self) -> bool:
        return self.chain_scan_sup != self.target_measure

    @property
    def chief_attains(self) -> bool:
        return self.chief_scan_sup == self.target_measure


def bounded_chain_demo(
    kappas: Sequence[Fraction] = (Fraction(1), Fraction(10), Fraction(1000)),
    chief_levels: Sequence[Fraction] = (Fraction(1), Fraction(2), Fraction(3), Fraction(4)),
) -> LineScanReport:
    """Contrast the chain (1, 1+k] against the symmetric chief chain."""
    ambient = Ambient(None)
    target = IntervalSet(((Fraction(-1), Fraction(1)),))
    chain_rows = []
    for k in kappas:
        k = Fraction(k)
        if k <= 0:
            raise PreconditionViolation("chain parameters must be positive")
        c = IntervalSet(((Fraction(1), 1 + k),))
        chain_rows.append((k, measure(intersect(c, target))))
    chief_rows = []
    for lv in chief_levels:
        m = chief_element(ambient, Fraction(lv))
        chief_rows.append((Fraction(lv), measure(intersect(m, target))))
    return LineScanReport(
        target=target,
        target_measure=measure(target),
        chain_rows=tuple(chain_rows),
        chain_scan_sup=max(r for _, r in chain_rows),
        chief_rows=tuple(chief_rows),
        chief_scan_sup=max(r for _, r in chief_rows),
    )


# --- JSON forms (rationals as "p/q" strings, bit-exact round trip) ---

def interval_set_to_json(u: IntervalSet) -> dict:
    return {"intervals": [[format_fraction(a), format_fraction(b)] for a, b in u.intervals]}


def interval_set_from_json(data: dict, ambient: Ambient | None = None) -> IntervalSet:
    try:
        pairs = [(parse_fraction(a), parse_fraction(b)) for a, b in data["intervals"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad interval set payload: {data!r}") from exc
    return normalize(pairs, ambient)


def density_to_json(density: StepDensity) -> dict:
    return {
        "breakpoints": [format_fraction(t) for t in density.breakpoints],
        "values": [format_fraction(v) for v in density.values],
    }


def density_from_json(data: dict) -> StepDensity:
    try:
        return StepDensity(
            tuple(parse_fraction(t) for t in data["breakpoints"]),
            tuple(parse_fraction(v) for v in data["values"]),
        )
    except (KeyError, TypeError) as exc:
        raise InputFormatError(f"bad density payload: {data!r}") from exc
