"""Graded-lattice contract and family-independent identity checks.

A lattice is presented through its meet/join/rank callables; the order is
derived from meet (``x <= y`` iff ``meet(x, y) == x``).  The checks here are
the parts of rank-modularity theory that do not depend on any particular
family: the modular defect, the balance residuals, the diamond bounds, the
Lipschitz chain scan, and bound adjunction for unbounded lattices.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

from .errors import PreconditionViolation
from .rank import Rank, RankLike, as_rank

Element = Any

ZERO = Rank(0)


@dataclass(frozen=True)
class GradedLattice:
    """Bundle of meet/join/rank over one element domain.

    Equality of elements is plain ``==`` on canonical values.  ``bottom``
    and ``top`` are optional: unbounded families leave them ``None``.
    """

    name: str
    meet: Callable[[Element, Element], Element]
    join: Callable[[Element, Element], Element]
    rank: Callable[[Element], Rank]
    bottom: Element | None = None
    top: Element | None = None

    def leq(self, x: Element, y: Element) -> bool:
        return self.meet(x, y) == x

    def lt(self, x: Element, y: Element) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: Element, y: Element) -> bool:
        m = self.meet(x, y)
        return m == x or m == y


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a bulk check: pass/fail, how much was checked, a witness."""

    ok: bool
    checked: int
    witness: str | None = None


@dataclass(frozen=True)
class ChainSample:
    """A finite sample of a chain: (rank, element) pairs, strictly increasing."""

    points: tuple[tuple[Rank, Element], ...]

    def __post_init__(self):
        ranks = [r for r, _ in self.points]
        for a, b in zip(ranks, ranks[1:]):
            if not a < b:
                raise PreconditionViolation(
                    f"chain ranks must strictly increase, got {a} then {b}"
                )

    @classmethod
    def from_elements(cls, lattice: GradedLattice, elements: Iterable[Element]) -> "ChainSample":
        """Build a sample from lattice elements, validating the order as well."""
        points: list[tuple[Rank, Element]] = []
        prev: Element | None = None
        for e in elements:
            if prev is not None and not lattice.lt(prev, e):
                raise PreconditionViolation(
                    f"chain elements must strictly increase: {prev!r} then {e!r}"
                )
            points.append((lattice.rank(e), e))
            prev = e
        return cls(tuple(points))

    def elements(self) -> tuple[Element, ...]:
        return tuple(e for _, e in self.points)

    def ranks(self) -> tuple[Rank, ...]:
        return tuple(r for r, _ in self.points)

    def __len__(self) -> int:
        return len(self.points)


def rank_modular_defect(lattice: GradedLattice, m: Element, x: Element) -> Rank:
    """rank(x v m) + rank(x ^ m) - rank(x) - rank(m); zero iff the pair is balanced.

    Comparable pairs are settled before any arithmetic: there the identity
    holds by rearrangement, and this is the only place where opposite
    infinities could otherwise meet.
    """
    if lattice.comparable(m, x):
        return ZERO
    join_rank = lattice.rank(lattice.join(x, m))
    meet_rank = lattice.rank(lattice.meet(x, m))
    return join_rank + meet_rank - lattice.rank(x) - lattice.rank(m)


def is_rank_modular(lattice: GradedLattice, m: Element, probes: Iterable[Element]) -> bool:
    return all(rank_modular_defect(lattice, m, x) == ZERO for x in probes)


def _require_leq(lattice: GradedLattice, lo: Element, hi: Element, label: str) -> None:
    if not lattice.leq(lo, hi):
        raise PreconditionViolation(f"{label}: {lo!r} is not below {hi!r}")


def balance_residuals(
    lattice: GradedLattice,
    m: Element,
    m_small: Element,
    w: Element,
    z: Element,
) -> tuple[Rank, Rank]:
    """The two balance residuals for rank-modular m_small <= m and w <= z.

    First residual:  [rk(m^z)+rk(mvz)] - [rk(m^w)+rk(mvw)] - (rk(z)-rk(w)).
    Second residual: [rk(m^z)+rk(mvz)] - [rk(m_small^z)+rk(m_smallvz)]
                     - (rk(m)-rk(m_small)).
    Both are exactly zero when m and m_small are rank modular.
    """
    _require_leq(lattice, w, z, "balance residuals need w <= z")
    _require_leq(lattice, m_small, m, "balance residuals need m_small <= m")
    rk = lattice.rank
    big = rk(lattice.meet(m, z)) + rk(lattice.join(m, z))
    first = big - rk(lattice.meet(m, w)) - rk(lattice.join(m, w)) - (rk(z) - rk(w))
    second = (
        big
        - rk(lattice.meet(m_small, z))
        - rk(lattice.join(m_small, z))
        - (rk(m) - rk(m_small))
    )
    return first, second


@dataclass(frozen=True)
class BoundCheck:
    label: str
    lhs: Rank
    rhs: Rank

    @property
    def slack(self) -> Rank:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


@dataclass(frozen=True)
class DiamondReport:
    """The four diamond inequalities with their slacks.

    The two slacks in each row sum exactly to the row's right-hand side
    whenever the balance residuals vanish.
    """

    checks: tuple[BoundCheck, BoundCheck, BoundCheck, BoundCheck]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def row_slack_sums(self) -> tuple[Rank, Rank]:
        a, b, c, d = self.checks
        return (a.slack + b.slack, c.slack + d.slack)

    def row_rhs(self) -> tuple[Rank, Rank]:
        return (self.checks[0].rhs, self.checks[2].rhs)


def diamond_bounds(
    lattice: GradedLattice,
    m: Element,
    m_small: Element,
    w: Element,
    z: Element,
) -> DiamondReport:
    """Check the four rank-difference bounds for modular m_small <= m, w <= z."""
    _require_leq(lattice, w, z, "diamond bounds need w <= z")
    _require_leq(lattice, m_small, m, "diamond bounds need m_small <= m")
    rk = lattice.rank
    height = rk(z) - rk(w)
    drop = rk(m) - rk(m_small)
    checks = (
        BoundCheck("meet along w<z", rk(lattice.meet(m, z)) - rk(lattice.meet(m, w)), height),
        BoundCheck("join along w<z", rk(lattice.join(m, z)) - rk(lattice.join(m, w)), height),
        BoundCheck("meet along m_small<m", rk(lattice.meet(m, z)) - rk(lattice.meet(m_small, z)), drop),
        BoundCheck("join along m_small<m", rk(lattice.join(m, z)) - rk(lattice.join(m_small, z)), drop),
    )
    return DiamondReport(checks)


def lipschitz_scan(
    lattice: GradedLattice,
    chain: ChainSample,
    m: Element,
    mode: str,
) -> Rank:
    """Max |rk(m op c2) - rk(m op c1)| / (k2 - k1) over consecutive chain samples.

    ``mode`` selects meet or join.  For a rank-modular m the result never
    exceeds 1.  All sampled ranks must be finite.
    """
    if mode not in ("meet", "join"):
        raise PreconditionViolation(f"mode must be 'meet' or 'join', got {mode!r}")
    op = lattice.meet if mode == "meet" else lattice.join
    best = ZERO
    for (k1, c1), (k2, c2) in zip(chain.points, chain.points[1:]):
        if not (k1.is_finite and k2.is_finite):
            raise PreconditionViolation("lipschitz scan needs finite chain ranks")
        step = k2.fraction - k1.fraction
        if step == 0:
            raise PreconditionViolation("zero-length chain step")
        diff = abs(lattice.rank(op(m, c2)) - lattice.rank(op(m, c1)))
        ratio = Rank(diff.fraction / step)
        if ratio > best:
            best = ratio
    return best


class _Extremum:
    """Identity-equal marker adjoined above or below an unbounded lattice."""

    __slots__ = ("label",)

    def __init__(self, label: str):
        self.label = label

    def __repr__(self) -> str:
        return f"<{self.label}>"


ADJOINED_TOP = _Extremum("adjoined top")
ADJOINED_BOTTOM = _Extremum("adjoined bottom")


def adjoin_bounds(
    lattice: GradedLattice,
    top_rank: RankLike | None = None,
    bottom_rank: RankLike | None = None,
) -> GradedLattice:
    """Wrap a lattice with a synthetic top and/or bottom at the given ranks.

    The synthetic extrema are rank modular by construction (they are
    comparable with everything).  Adjoining over an existing extremum is
    refused.
    """
    if top_rank is None and bottom_rank is None:
        raise PreconditionViolation("nothing to adjoin")
    if top_rank is not None and lattice.top is not None:
        raise PreconditionViolation(f"{lattice.name} already has a top element")
    if bottom_rank is not None and lattice.bottom is not None:
        raise PreconditionViolation(f"{lattice.name} already has a bottom element")
    new_top = ADJOINED_TOP if top_rank is not None else lattice.top
    new_bottom = ADJOINED_BOTTOM if bottom_rank is not None else lattice.bottom
    top_r = as_rank(top_rank) if top_rank is not None else None
    bottom_r = as_rank(bottom_rank) if bottom_rank is not None else None

    def meet(x: Element, y: Element) -> Element:
        if x is ADJOINED_TOP:
            return y
        if y is ADJOINED_TOP:
            return x
        if x is ADJOINED_BOTTOM or y is ADJOINED_BOTTOM:
            return ADJOINED_BOTTOM
        return lattice.meet(x, y)

    def join(x: Element, y: Element) -> Element:
        if x is ADJOINED_BOTTOM:
            return y
        if y is ADJOINED_BOTTOM:
            return x
        if x is ADJOINED_TOP or y is ADJOINED_TOP:
            return ADJOINED_TOP
        return lattice.join(x, y)

    def rank(x: Element) -> Rank:
        if x is ADJOINED_TOP:
            return top_r
        if x is ADJOINED_BOTTOM:
            return bottom_r
        return lattice.rank(x)

    return GradedLattice(
        name=f"{lattice.name}+bounds",
        meet=meet,
        join=join,
        rank=rank,
        bottom=new_bottom,
        top=new_top,
    )


def updown_distance(lattice: GradedLattice, x: Element, y: Element) -> Rank:
    """2*rank(x v y) - rank(x) - rank(y): the up-down path length."""
    j = lattice.rank(lattice.join(x, y))
    return j + j - lattice.rank(x) - lattice.rank(y)


def check_lattice_axioms(
    lattice: GradedLattice,
    samples: Sequence[Element],
    rng: random.Random | None = None,
    max_pairs: int = 4000,
    max_triples: int = 4000,
) -> CheckResult:
    """Idempotence, commutativity, absorption, associativity, rank monotonicity.

    Pairs and triples are exhausted when small, sampled otherwise.
    """
    elems = list(samples)
    checked = 0
    for x in elems:
        if lattice.meet(x, x) != x or lattice.join(x, x) != x:
            return CheckResult(False, checked, f"idempotence fails at {x!r}")
        checked += 1

    pairs = list(itertools.combinations(range(len(elems)), 2))
    if len(pairs) > max_pairs:
        rng = rng or random.Random(0)
        pairs = [tuple(rng.sample(range(len(elems)), 2)) for _ in range(max_pairs)]
    for i, j in pairs:
        x, y = elems[i], elems[j]
        m1, m2 = lattice.meet(x, y), lattice.meet(y, x)
        j1, j2 = lattice.join(x, y), lattice.join(y, x)
        if m1 != m2 or j1 != j2:
            return CheckResult(False, checked, f"commutativity fails at ({x!r}, {y!r})")
        if lattice.meet(x, lattice.join(x, y)) != x or lattice.join(x, lattice.meet(x, y)) != x:
            return CheckResult(False, checked, f"absorption fails at ({x!r}, {y!r})")
        if lattice.lt(x, y) and not lattice.rank(x) < lattice.rank(y):
            return CheckResult(False, checked, f"rank not strictly increasing at ({x!r}, {y!r})")
        if lattice.lt(y, x) and not lattice.rank(y) < lattice.rank(x):
            return CheckResult(False, checked, f"rank not strictly increasing at ({y!r}, {x!r})")
        checked += 1

    n = len(elems)
    if n >= 3:
        triples = list(itertools.combinations(range(n), 3))
        if len(triples) > max_triples:
            rng = rng or random.Random(0)
            triples = [tuple(rng.sample(range(n), 3)) for _ in range(max_triples)]
        for i, j, k in triples:
            x, y, z = elems[i], elems[j], elems[k]
            if lattice.meet(lattice.meet(x, y), z) != lattice.meet(x, lattice.meet(y, z)):
                return CheckResult(False, checked, f"meet associativity fails at ({x!r}, {y!r}, {z!r})")
            if lattice.join(lattice.join(x, y), z) != lattice.join(x, lattice.join(y, z)):
                return CheckResult(False, checked, f"join associativity fails at ({x!r}, {y!r}, {z!r})")
            checked += 1
    return CheckResult(True, checked)
