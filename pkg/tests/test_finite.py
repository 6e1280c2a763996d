import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from rglat.errors import AmbientMismatch, PreconditionViolation, SizeCapExceeded
from rglat.finite import (
    BitSubset,
    EnumerationCaps,
    PlanePoint,
    SetPartition,
    Subspace,
    antichain_cutsets_exhaustive,
    boolean_family,
    chief_chain,
    element_from_json,
    element_to_json,
    enumerate_maximal_chains,
    family_meet_join_rank,
    partition_family,
    product_plane_lattice,
    product_plane_limit_demo,
    rank_modular_elements,
    subspace_family,
)
from rglat.rank import NEG_INF, POS_INF, Rank

from oracle_helpers import (
    blocks_of,
    boolean_cutsets_bruteforce,
    count_maximal_chains,
    oracle_partition_join,
    refines,
    rgs_partitions,
)
from strategies import set_partitions

ZERO = Rank(0)


def part(*blocks):
    return SetPartition.from_blocks(4, blocks)


class TestMeetJoinRank:
    def test_partition_join_example(self):
        lattice = partition_family(4).lattice
        x = part([1, 3], [2], [4])
        y = part([1, 2], [3], [4])
        meet, join, rx, ry = family_meet_join_rank(lattice, x, y)
        oracle = oracle_partition_join(rgs_partitions(4), blocks_of(x), blocks_of(y))
        assert blocks_of(join) == oracle
        assert join == part([1, 2, 3], [4])
        assert (rx, ry) == (Rank(1), Rank(1))

    def test_independent_lines_meet_in_zero(self):
        lattice = subspace_family(2, 3).lattice
        e1 = Subspace.from_rows(2, 3, [[1, 0, 0]])
        e2 = Subspace.from_rows(2, 3, [[0, 1, 0]])
        meet, join, *_ = family_meet_join_rank(lattice, e1, e2)
        assert meet == Subspace.zero(2, 3)
        assert join.dimension() == 2

    def test_boolean_set_algebra(self):
        lattice = boolean_family(4).lattice
        x = BitSubset.from_members(4, [1, 2])
        y = BitSubset.from_members(4, [2, 3])
        meet, join, *_ = family_meet_join_rank(lattice, x, y)
        assert meet.members() == (2,)
        assert join.members() == (1, 2, 3)

    def test_ambient_mismatch_is_reported(self):
        lattice = boolean_family(4).lattice
        with pytest.raises(AmbientMismatch):
            lattice.meet(BitSubset(4, 1), BitSubset(3, 1))
        with pytest.raises(AmbientMismatch):
            partition_family(4).lattice.join(part([1, 2, 3, 4]), SetPartition.discrete(3))
        with pytest.raises(AmbientMismatch):
            subspace_family(2, 2).lattice.meet(Subspace.zero(2, 2), Subspace.zero(3, 2))


class TestCanonicalForms:
    @given(p=set_partitions())
    def test_partition_canonicalization_is_idempotent(self, p):
        assert SetPartition.from_blocks(p.n, p.blocks) == p

    def test_partition_blocks_sorted_by_minimum(self):
        p = SetPartition.from_blocks(4, [[4, 2], [3, 1]])
        assert p.blocks == ((1, 3), (2, 4))

    def test_rref_is_idempotent(self):
        w = Subspace.from_rows(2, 3, [[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert Subspace.from_rows(2, 3, w.rows) == w
        assert w.dimension() == 2

    def test_non_canonical_inputs_rejected(self):
        with pytest.raises(PreconditionViolation):
            SetPartition(4, ((2, 1), (3, 4)))
        with pytest.raises(PreconditionViolation):
            Subspace(2, 2, ((1, 1), (1, 0)))
        with pytest.raises(PreconditionViolation):
            Subspace(4, 2, ())  # composite field size


class TestEnumerations:
    def test_boolean_chain_counts(self):
        assert len(enumerate_maximal_chains(boolean_family(3))) == 6
        assert len(enumerate_maximal_chains(boolean_family(4))) == 24

    def test_partition_chain_counts_match_order_oracle(self):
        for n, expected in ((3, 3), (4, 18)):
            fam = partition_family(n)
            got = len(enumerate_maximal_chains(fam))
            oracle = count_maximal_chains(
                fam.elements(), lambda x, y: refines(blocks_of(x), blocks_of(y))
            )
            assert got == oracle
            assert got == expected

    def test_chains_are_saturated(self):
        fam = partition_family(4)
        for chain in enumerate_maximal_chains(fam):
            ranks = [fam.lattice.rank(e).fraction for e in chain]
            assert ranks == [Fraction(i) for i in range(4)]

    def test_chain_cap_is_enforced(self):
        caps = EnumerationCaps(max_chains=5)
        with pytest.raises(SizeCapExceeded):
            enumerate_maximal_chains(boolean_family(4), caps)

    def test_element_cap_is_enforced(self):
        with pytest.raises(SizeCapExceeded):
            boolean_family(13, EnumerationCaps(max_elements=4096))


class TestAntichainCutsets:
    def test_b2_matches_bruteforce_oracle(self):
        fam = boolean_family(2)
        got = {
            frozenset(frozenset(e.members()) for e in cutset)
            for cutset in antichain_cutsets_exhaustive(fam)
        }
        assert got == boolean_cutsets_bruteforce(2)
        assert len(got) == 3

    def test_level_sets_are_always_returned(self):
        fam = boolean_family(3)
        cutsets = antichain_cutsets_exhaustive(fam)
        as_sets = [set(c) for c in cutsets]
        for r in range(4):
            level = {e for e in fam.elements() if e.cardinality() == r}
            assert level in as_sets

    def test_every_cutset_meets_every_chain(self):
        fam = boolean_family(3)
        chains = [set(c) for c in enumerate_maximal_chains(fam)]
        for cutset in antichain_cutsets_exhaustive(fam):
            members = set(cutset)
            assert all(members & chain for chain in chains)

    def test_cutset_base_cap(self):
        with pytest.raises(SizeCapExceeded):
            antichain_cutsets_exhaustive(boolean_family(5))


class TestRankModularElements:
    def test_boolean_everything_is_modular(self):
        fam = boolean_family(4)
        assert len(rank_modular_elements(fam)) == 16

    def test_subspace_lattice_is_modular(self):
        fam = subspace_family(2, 3)
        assert rank_modular_elements(fam) == fam.elements()

    def test_partition_modular_set_is_the_twelve(self):
        mods = rank_modular_elements(partition_family(4))
        assert len(mods) == 12
        for m in mods:
            assert sum(1 for b in m.blocks if len(b) > 1) <= 1
        crossing = part([1, 2], [3, 4])
        assert crossing not in mods


class TestChiefChains:
    def test_boolean_prefixes(self):
        chain = chief_chain(boolean_family(3))
        assert [e.members() for e in chain.elements()] == [(), (1,), (1, 2), (1, 2, 3)]

    def test_partition_single_block_growth(self):
        chain = chief_chain(partition_family(4))
        expected = [
            SetPartition.discrete(4),
            part([1, 2], [3], [4]),
            part([1, 2, 3], [4]),
            part([1, 2, 3, 4]),
        ]
        assert list(chain.elements()) == expected

    def test_subspace_flag_ranks(self):
        chain = chief_chain(subspace_family(2, 3))
        assert [r.fraction for r in chain.ranks()] == [0, 1, 2, 3]


class TestProductPlane:
    def test_limit_demo_discontinuity(self):
        report = product_plane_limit_demo()
        assert [v for _, v in report.meet_rows] == [ZERO, ZERO, ZERO]
        assert report.meet_scan_sup == ZERO
        assert report.meet_limit_value == Rank(1)
        assert report.meet_discontinuous

    def test_dual_scan_discontinuity_below(self):
        report = product_plane_limit_demo()
        assert report.join_scan_inf == ZERO
        assert report.join_limit_value == Rank(-1)
        assert report.join_discontinuous

    def test_negative_parameter_sits_below_the_plateau(self):
        lattice = product_plane_lattice()
        meet = lattice.meet(PlanePoint.point(0, -7), PlanePoint.point(1, 0))
        assert lattice.rank(meet) == Rank(-7)

    def test_symbolic_extrema_ranks(self):
        lattice = product_plane_lattice()
        assert lattice.rank(lattice.bottom) is NEG_INF
        assert lattice.rank(lattice.top) is POS_INF

    def test_demo_requires_increasing_scan(self):
        with pytest.raises(PreconditionViolation):
            product_plane_limit_demo((Fraction(2), Fraction(1)))


class TestSubspaceOps:
    def _span(self, w: Subspace) -> frozenset:
        vectors = set()
        rows = [list(r) for r in w.rows]
        for coeffs in itertools.product(range(w.p), repeat=len(rows)):
            vec = tuple(
                sum(c * r[j] for c, r in zip(coeffs, rows)) % w.p for j in range(w.n)
            )
            vectors.add(vec)
        return frozenset(vectors)

    def test_meet_is_the_set_intersection_of_spans(self):
        fam = subspace_family(2, 3)
        elems = fam.elements()
        assert len(elems) == 16
        for x in elems:
            for y in elems:
                meet = fam.lattice.meet(x, y)
                assert self._span(meet) == self._span(x) & self._span(y)

    def test_join_spans_the_union(self):
        fam = subspace_family(3, 2)
        elems = fam.elements()
        for x in elems:
            for y in elems:
                join = fam.lattice.join(x, y)
                assert self._span(join) >= self._span(x) | self._span(y)
                assert join.dimension() <= x.dimension() + y.dimension()


@settings(max_examples=60)
@given(x=set_partitions(), y=set_partitions())
def test_partition_ops_match_refinement_oracle(x, y):
    lattice = partition_family(4).lattice
    parts = rgs_partitions(4)
    assert blocks_of(lattice.join(x, y)) == oracle_partition_join(parts, blocks_of(x), blocks_of(y))


def test_element_json_round_trip_shapes():
    assert element_to_json(BitSubset.from_members(4, [3, 1])) == [1, 3]
    assert element_to_json(part([1, 2], [3], [4])) == [[1, 2], [3], [4]]
    assert element_to_json(Subspace.from_rows(2, 2, [[1, 0]])) == [[1, 0]]
    assert element_to_json(PlanePoint.point("1/2", 1)) == ["1/2", "1/1"]
    assert element_to_json(PlanePoint.top()) == "top"
    fam = boolean_family(4)
    assert element_from_json(fam, [1, 3]) == BitSubset.from_members(4, [1, 3])
