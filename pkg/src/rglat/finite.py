"""Small exact lattices used as exhaustive oracles.

Four families: Boolean (bitmask subsets), set partitions under refinement,
subspaces of F_p^n in reduced row-echelon form, and the rational product
plane with symbolic extrema.  All canonical forms are structural, so ``==``
decides lattice equality.  Enumeration sizes are guarded by
:class:`EnumerationCaps`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import ChainSample, GradedLattice, rank_modular_defect
from .errors import (
    AmbientMismatch,
    InputFormatError,
    PreconditionViolation,
    SizeCapExceeded,
)
from .rank import NEG_INF, POS_INF, Rank, format_fraction, parse_fraction

MAX_BOOLEAN_GROUND = 24
MAX_PARTITION_GROUND = 7
MAX_SUBSPACE_DIM = 6


@dataclass(frozen=True)
class EnumerationCaps:
    """Limits for the exhaustive operations; exceeding them raises SizeCapExceeded."""

    max_elements: int = 6000
    max_chains: int = 250_000
    cutset_base: int = 16


DEFAULT_CAPS = EnumerationCaps()


# --- Boolean lattice -------------------------------------------------------

@dataclass(frozen=True)
class BitSubset:
    """Subset of {1..n} as a bitmask; rank is cardinality."""

    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_BOOLEAN_GROUND:
            raise PreconditionViolation(f"ground size {self.n} outside 1..{MAX_BOOLEAN_GROUND}")
        if not 0 <= self.mask < (1 << self.n):
            raise PreconditionViolation(f"mask {self.mask} outside the ground set of size {self.n}")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "BitSubset":
        mask = 0
        for i in members:
            if not 1 <= i <= n:
                raise PreconditionViolation(f"member {i} outside 1..{n}")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def cardinality(self) -> int:
        return self.mask.bit_count()

    def __repr__(self) -> str:
        return f"BitSubset({self.n}, {{{','.join(map(str, self.members()))}}})"


def _check_boolean_pair(x: BitSubset, y: BitSubset) -> None:
    if not isinstance(x, BitSubset) or not isinstance(y, BitSubset):
        raise AmbientMismatch("expected BitSubset operands")
    if x.n != y.n:
        raise AmbientMismatch(f"ground sets differ: {x.n} vs {y.n}")


def boolean_lattice(n: int) -> GradedLattice:
    def meet(x: BitSubset, y: BitSubset) -> BitSubset:
        _check_boolean_pair(x, y)
        return BitSubset(x.n, x.mask & y.mask)

    def join(x: BitSubset, y: BitSubset) -> BitSubset:
        _check_boolean_pair(x, y)
        return BitSubset(x.n, x.mask | y.mask)

    return GradedLattice(
        name=f"boolean-{n}",
        meet=meet,
        join=join,
        rank=lambda x: Rank(x.cardinality()),
        bottom=BitSubset(n, 0),
        top=BitSubset(n, (1 << n) - 1),
    )


# --- Partition lattice -----------------------------------------------------

@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n} in canonical form; rank is n minus the block count.

    Blocks are sorted tuples, ordered by least member; the canonical form is
    the unique representative, so structural equality is partition equality.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_PARTITION_GROUND:
            raise PreconditionViolation(f"ground size {self.n} outside 1..{MAX_PARTITION_GROUND}")
        seen: set[int] = set()
        prev_min = 0
        for block in self.blocks:
            if not block or list(block) != sorted(block):
                raise PreconditionViolation(f"non-canonical block {block!r}")
            if block[0] <= prev_min:
                raise PreconditionViolation("blocks must be sorted by least member")
            prev_min = block[0]
            seen.update(block)
        if seen != set(range(1, self.n + 1)):
            raise PreconditionViolation(f"blocks do not partition 1..{self.n}")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))
        return cls(n, canon)

    @classmethod
    def discrete(cls, n: int) -> "SetPartition":
        return cls.from_blocks(n, [[i] for i in range(1, n + 1)])

    @classmethod
    def full(cls, n: int) -> "SetPartition":
        return cls.from_blocks(n, [range(1, n + 1)])

    def block_count(self) -> int:
        return len(self.blocks)

    def rank_int(self) -> int:
        return self.n - len(self.blocks)

    def __repr__(self) -> str:
        body = "|".join("".join(map(str, b)) for b in self.blocks)
        return f"SetPartition({self.n}, {body})"


def _check_partition_pair(x: SetPartition, y: SetPartition) -> None:
    if not isinstance(x, SetPartition) or not isinstance(y, SetPartition):
        raise AmbientMismatch("expected SetPartition operands")
    if x.n != y.n:
        raise AmbientMismatch(f"ground sets differ: {x.n} vs {y.n}")


def _partition_meet(x: SetPartition, y: SetPartition) -> SetPartition:
    _check_partition_pair(x, y)
    y_sets = [set(b) for b in y.blocks]
    blocks = []
    for bx in x.blocks:
        for by in y_sets:
            common = [i for i in bx if i in by]
            if common:
                blocks.append(common)
    return SetPartition.from_blocks(x.n, blocks)


def _partition_join(x: SetPartition, y: SetPartition) -> SetPartition:
    _check_partition_pair(x, y)
    parent = list(range(x.n + 1))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def unite(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri

    for p in (x, y):
        for block in p.blocks:
            for i in block[1:]:
                unite(block[0], i)
    groups: dict[int, list[int]] = {}
    for i in range(1, x.n + 1):
        groups.setdefault(find(i), []).append(i)
    return SetPartition.from_blocks(x.n, groups.values())


def partition_lattice(n: int) -> GradedLattice:
    return GradedLattice(
        name=f"partition-{n}",
        meet=_partition_meet,
        join=_partition_join,
        rank=lambda x: Rank(x.rank_int()),
        bottom=SetPartition.discrete(n),
        top=SetPartition.full(n),
    )


def _all_partitions(n: int) -> list[SetPartition]:
    out: list[SetPartition] = []

    def rec(i: int, blocks: list[list[int]]) -> None:
        if i > n:
            out.append(SetPartition.from_blocks(n, [list(b) for b in blocks]))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        rec(i + 1, blocks)
        blocks.pop()

    rec(1, [])
    return out


# --- Subspace lattice over a prime field -----------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def _rref(rows: Sequence[Sequence[int]], width: int, p: int) -> tuple[tuple[int, ...], ...]:
    work = [list(r) for r in rows]
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(work)) if work[i][c] % p), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c] % p, p - 2, p)
        work[r] = [(v * inv) % p for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] % p:
                f = work[i][c]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return tuple(tuple(v % p for v in row) for row in work[:r])


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_p^n with basis in reduced row-echelon form."""

    p: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not _is_prime(self.p):
            raise PreconditionViolation(f"{self.p} is not prime")
        if not 1 <= self.n <= MAX_SUBSPACE_DIM:
            raise PreconditionViolation(f"dimension {self.n} outside 1..{MAX_SUBSPACE_DIM}")
        if self.rows != _rref(self.rows, self.n, self.p):
            raise PreconditionViolation("basis must be in reduced row-echelon form")

    @classmethod
    def from_rows(cls, p: int, n: int, rows: Iterable[Sequence[int]]) -> "Subspace":
        return cls(p, n, _rref(list(rows), n, p))

    @classmethod
    def zero(cls, p: int, n: int) -> "Subspace":
        return cls(p, n, ())

    @classmethod
    def full(cls, p: int, n: int) -> "Subspace":
        return cls.from_rows(p, n, [[1 if j == i else 0 for j in range(n)] for i in range(n)])

    def dimension(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"Subspace(F{self.p}^{self.n}, dim={self.dimension()})"


def _check_subspace_pair(x: Subspace, y: Subspace) -> None:
    if not isinstance(x, Subspace) or not isinstance(y, Subspace):
        raise AmbientMismatch("expected Subspace operands")
    if x.p != y.p or x.n != y.n:
        raise AmbientMismatch(f"ambient spaces differ: F{x.p}^{x.n} vs F{y.p}^{y.n}")


def _subspace_join(x: Subspace, y: Subspace) -> Subspace:
    _check_subspace_pair(x, y)
    return Subspace.from_rows(x.p, x.n, list(x.rows) + list(y.rows))


def _subspace_meet(x: Subspace, y: Subspace) -> Subspace:
    # Zassenhaus: reduce [[A|A],[B|0]]; rows with zero left half carry the
    # intersection in their right half.
    _check_subspace_pair(x, y)
    n, p = x.n, x.p
    stacked = [list(r) + list(r) for r in x.rows] + [list(r) + [0] * n for r in y.rows]
    reduced = _rref(stacked, 2 * n, p)
    inter = [row[n:] for row in reduced if not any(row[:n])]
    return Subspace.from_rows(p, n, inter)


def subspace_lattice(p: int, n: int) -> GradedLattice:
    return GradedLattice(
        name=f"subspace-F{p}^{n}",
        meet=_subspace_meet,
        join=_subspace_join,
        rank=lambda x: Rank(x.dimension()),
        bottom=Subspace.zero(p, n),
        top=Subspace.full(p, n),
    )


def _all_subspaces(p: int, n: int, caps: EnumerationCaps) -> list[Subspace]:
    vectors = [v for v in itertools.product(range(p), repeat=n) if any(v)]
    zero = Subspace.zero(p, n)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for s in frontier:
            for v in vectors:
                t = Subspace.from_rows(p, n, list(s.rows) + [list(v)])
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
                    if len(seen) > caps.max_elements:
                        raise SizeCapExceeded(
                            f"more than {caps.max_elements} subspaces of F{p}^{n}"
                        )
        frontier = nxt
    return sorted(seen, key=lambda s: (s.dimension(), s.rows))


# --- Product plane with symbolic extrema ------------------------------------

@dataclass(frozen=True)
class PlanePoint:
    """Point of the rational product plane, or a symbolic bottom/top.

    Meet and join are entrywise min and max; the rank of a point is the
    coordinate sum, with the symbols at -inf and +inf.
    """

    kind: int  # -1 bottom, 0 point, +1 top
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    @classmethod
    def point(cls, a, b) -> "PlanePoint":
        return cls(0, Fraction(a), Fraction(b))

    @classmethod
    def bottom(cls) -> "PlanePoint":
        return cls(-1)

    @classmethod
    def top(cls) -> "PlanePoint":
        return cls(1)

    def __repr__(self) -> str:
        if self.kind < 0:
            return "PlanePoint(bottom)"
        if self.kind > 0:
            return "PlanePoint(top)"
        return f"PlanePoint({self.a}, {self.b})"


def _plane_meet(x: PlanePoint, y: PlanePoint) -> PlanePoint:
    if x.kind < 0 or y.kind < 0:
        return PlanePoint.bottom()
    if x.kind > 0:
        return y
    if y.kind > 0:
        return x
    return PlanePoint.point(min(x.a, y.a), min(x.b, y.b))


def _plane_join(x: PlanePoint, y: PlanePoint) -> PlanePoint:
    if x.kind > 0 or y.kind > 0:
        return PlanePoint.top()
    if x.kind < 0:
        return y
    if y.kind < 0:
        return x
    return PlanePoint.point(max(x.a, y.a), max(x.b, y.b))


def _plane_rank(x: PlanePoint) -> Rank:
    if x.kind < 0:
        return NEG_INF
    if x.kind > 0:
        return POS_INF
    return Rank(x.a + x.b)


def product_plane_lattice() -> GradedLattice:
    return GradedLattice(
        name="product-plane",
        meet=_plane_meet,
        join=_plane_join,
        rank=_plane_rank,
        bottom=PlanePoint.bottom(),
        top=PlanePoint.top(),
    )


@dataclass(frozen=True)
class PlaneLimitReport:
    """Meet/join scans along the vertical chain against fixed probes.

    The meet scan against (1, 0) plateaus at rank 0 while the value at the
    top is 1; dually the join scan against (-1, 0) plateaus at 0 while the
    value at the bottom is -1.
    """

    meet_rows: tuple[tuple[Fraction, Rank], ...]
    meet_scan_sup: Rank
    meet_limit_value: Rank
    join_rows: tuple[tuple[Fraction, Rank], ...]
    join_scan_inf: Rank
    join_limit_value: Rank

    @property
    def meet_discontinuous(self) -> bool:
        return self.meet_scan_sup != self.meet_limit_value

    @property
    def join_discontinuous(self) -> bool:
        return self.join_scan_inf != self.join_limit_value


def product_plane_limit_demo(
    b_values: Sequence[Fraction] = (Fraction(1), Fraction(10), Fraction(100)),
) -> PlaneLimitReport:
    bs = [Fraction(b) for b in b_values]
    if any(b2 <= b1 for b1, b2 in zip(bs, bs[1:])):
        raise PreconditionViolation("scan parameters must strictly increase")
    lattice = product_plane_lattice()
    meet_probe = PlanePoint.point(1, 0)
    join_probe = PlanePoint.point(-1, 0)
    meet_rows = tuple(
        (b, lattice.rank(lattice.meet(PlanePoint.point(0, b), meet_probe))) for b in bs
    )
    join_rows = tuple(
        (b, lattice.rank(lattice.join(PlanePoint.point(0, -b), join_probe))) for b in bs
    )
    return PlaneLimitReport(
        meet_rows=meet_rows,
        meet_scan_sup=max(r for _, r in meet_rows),
        meet_limit_value=lattice.rank(lattice.meet(lattice.top, meet_probe)),
        join_rows=join_rows,
        join_scan_inf=min(r for _, r in join_rows),
        join_limit_value=lattice.rank(lattice.join(lattice.bottom, join_probe)),
    )


# --- Family bundles and exhaustive operations --------------------------------

@dataclass(frozen=True)
class FiniteFamily:
    """One finite lattice instance together with its enumerations."""

    kind: str
    lattice: GradedLattice
    caps: EnumerationCaps
    n: int
    p: int | None
    _elements: Callable[[], list] = field(repr=False)
    _chief: Callable[[], list] = field(repr=False)

    def elements(self) -> list:
        out = self._elements()
        if len(out) > self.caps.max_elements:
            raise SizeCapExceeded(
                f"{self.lattice.name} has {len(out)} elements, cap {self.caps.max_elements}"
            )
        return out

    def chief_elements(self) -> list:
        return self._chief()


def boolean_family(n: int, caps: EnumerationCaps = DEFAULT_CAPS) -> FiniteFamily:
    if (1 << n) > caps.max_elements:
        raise SizeCapExceeded(f"2^{n} elements exceed the cap {caps.max_elements}")
    return FiniteFamily(
        kind="boolean",
        lattice=boolean_lattice(n),
        caps=caps,
        n=n,
        p=None,
        _elements=lambda: [BitSubset(n, m) for m in range(1 << n)],
        _chief=lambda: [BitSubset(n, (1 << i) - 1) for i in range(n + 1)],
    )


def partition_family(n: int, caps: EnumerationCaps = DEFAULT_CAPS) -> FiniteFamily:
    def chief() -> list[SetPartition]:
        out = []
        for i in range(n):
            blocks = [list(range(1, i + 2))] + [[j] for j in range(i + 2, n + 1)]
            out.append(SetPartition.from_blocks(n, blocks))
        return out

    return FiniteFamily(
        kind="partition",
        lattice=partition_lattice(n),
        caps=caps,
        n=n,
        p=None,
        _elements=lambda: _all_partitions(n),
        _chief=chief,
    )


def subspace_family(p: int, n: int, caps: EnumerationCaps = DEFAULT_CAPS) -> FiniteFamily:
    def chief() -> list[Subspace]:
        return [
            Subspace.from_rows(p, n, [[1 if j == i else 0 for j in range(n)] for i in range(k)])
            for k in range(n + 1)
        ]

    return FiniteFamily(
        kind="subspace",
        lattice=subspace_lattice(p, n),
        caps=caps,
        n=n,
        p=p,
        _elements=lambda: _all_subspaces(p, n, caps),
        _chief=chief,
    )


def family_meet_join_rank(lattice: GradedLattice, x, y) -> tuple:
    """(meet, join, rank x, rank y) in one call; ambient mismatches propagate."""
    return (lattice.meet(x, y), lattice.join(x, y), lattice.rank(x), lattice.rank(y))


def _int_rank(lattice: GradedLattice, x) -> int:
    r = lattice.rank(x).fraction
    if r.denominator != 1:
        raise PreconditionViolation(f"expected an integer rank, got {r}")
    return r.numerator


def enumerate_maximal_chains(family: FiniteFamily, caps: EnumerationCaps | None = None) -> list[tuple]:
    """All saturated bottom-to-top chains, as element tuples."""
    caps = caps or family.caps
    lattice = family.lattice
    elems = family.elements()
    by_rank: dict[int, list] = {}
    for e in elems:
        by_rank.setdefault(_int_rank(lattice, e), []).append(e)
    top_rank = max(by_rank)
    chains: list[tuple] = []
    bottoms = by_rank.get(0, ())
    if len(bottoms) != 1 or bottoms[0] != lattice.bottom:
        raise PreconditionViolation(f"{lattice.name} has no unique bottom")

    def extend(prefix: list) -> None:
        last = prefix[-1]
        r = _int_rank(lattice, last)
        if r == top_rank:
            chains.append(tuple(prefix))
            if len(chains) > caps.max_chains:
                raise SizeCapExceeded(f"more than {caps.max_chains} maximal chains")
            return
        for e in by_rank.get(r + 1, ()):
            if lattice.leq(last, e):
                prefix.append(e)
                extend(prefix)
                prefix.pop()

    extend([lattice.bottom])
    return chains


def antichain_cutsets_exhaustive(
    family: FiniteFamily, caps: EnumerationCaps | None = None
) -> list[tuple]:
    """All antichains meeting every maximal chain, by bitmask brute force."""
    caps = caps or family.caps
    elems = family.elements()
    if len(elems) > caps.cutset_base:
        raise SizeCapExceeded(
            f"{len(elems)} elements exceed the antichain search cap {caps.cutset_base}"
        )
    lattice = family.lattice
    index = {e: i for i, e in enumerate(elems)}
    chains = enumerate_maximal_chains(family, caps)
    chain_masks = []
    for chain in chains:
        mask = 0
        for e in chain:
            mask |= 1 << index[e]
        chain_masks.append(mask)
    cmp_mask = [0] * len(elems)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            if i != j and lattice.comparable(x, y):
                cmp_mask[i] |= 1 << j
    out: list[tuple] = []
    for s in range(1, 1 << len(elems)):
        probe = s
        is_antichain = True
        while probe:
            low = probe & -probe
            if cmp_mask[low.bit_length() - 1] & s:
                is_antichain = False
                break
            probe ^= low
        if not is_antichain:
            continue
        if all(mask & s for mask in chain_masks):
            out.append(tuple(elems[i] for i in range(len(elems)) if s >> i & 1))
    return out


def rank_modular_elements(family: FiniteFamily) -> list:
    """All elements with zero rank-modular defect against every element."""
    lattice = family.lattice
    elems = family.elements()
    zero = Rank(0)
    return [
        m for m in elems
        if all(rank_modular_defect(lattice, m, x) == zero for x in elems)
    ]


def chief_chain(family: FiniteFamily) -> ChainSample:
    """The canonical maximal chain of rank-modular elements for the family.

    Membership in the exhaustively computed modular set is verified whenever
    the instance is small enough to enumerate; a failure is an internal
    error, not a user error.
    """
    elems_for_check: list | None
    try:
        elems_for_check = family.elements()
    except SizeCapExceeded:
        elems_for_check = None
    chain = family.chief_elements()
    sample = ChainSample.from_elements(family.lattice, chain)
    ranks = [r.fraction for r in sample.ranks()]
    if ranks != [Fraction(i) for i in range(len(ranks))]:
        raise RuntimeError(f"chief chain of {family.lattice.name} is not saturated")
    if elems_for_check is not None:
        zero = Rank(0)
        for m in chain:
            for x in elems_for_check:
                if rank_modular_defect(family.lattice, m, x) != zero:
                    raise RuntimeError(
                        f"chief chain member {m!r} is not rank modular against {x!r}"
                    )
    return sample


# --- JSON forms --------------------------------------------------------------

def element_to_json(x):
    if isinstance(x, BitSubset):
        return list(x.members())
    if isinstance(x, SetPartition):
        return [list(b) for b in x.blocks]
    if isinstance(x, Subspace):
        return [list(r) for r in x.rows]
    if isinstance(x, PlanePoint):
        if x.kind < 0:
            return "bottom"
        if x.kind > 0:
            return "top"
        return [format_fraction(x.a), format_fraction(x.b)]
    raise InputFormatError(f"unknown element type {type(x).__name__}")


def element_from_json(family: FiniteFamily, data):
    try:
        if family.kind == "boolean":
            return BitSubset.from_members(family.n, data)
        if family.kind == "partition":
            return SetPartition.from_blocks(family.n, data)
        if family.kind == "subspace":
            return Subspace.from_rows(family.p, family.n, data)
    except (TypeError, ValueError, PreconditionViolation) as exc:
        raise InputFormatError(f"bad {family.kind} element payload: {data!r}") from exc
    raise InputFormatError(f"unknown family kind {family.kind!r}")


def plane_point_from_json(data) -> PlanePoint:
    if data == "bottom":
        return PlanePoint.bottom()
    if data == "top":
        return PlanePoint.top()
    try:
        a, b = data
        return PlanePoint.point(parse_fraction(a), parse_fraction(b))
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"bad plane point payload: {data!r}") from exc
