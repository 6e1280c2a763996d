"""Shared hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from rglat.finite import SetPartition
from rglat.intervals import IntervalSet, StepDensity, normalize

DENOMINATORS = (4, 8, 16, 32)


@st.composite
def interval_sets(draw, upper: Fraction = Fraction(2), max_pieces: int = 3) -> IntervalSet:
    den = draw(st.sampled_from(DENOMINATORS))
    k = draw(st.integers(0, min(max_pieces, (den + 1) // 2)))
    if k == 0:
        return IntervalSet()
    cuts = sorted(draw(st.lists(st.integers(0, den), min_size=2 * k, max_size=2 * k, unique=True)))
    pairs = [
        (upper * lo / den, upper * hi / den)
        for lo, hi in zip(cuts[::2], cuts[1::2])
        if lo < hi
    ]
    return normalize(pairs)


@st.composite
def step_densities(draw, upper: Fraction = Fraction(2), max_pieces: int = 3) -> StepDensity:
    den = draw(st.sampled_from(DENOMINATORS))
    k = draw(st.integers(1, max_pieces))
    interior = sorted(draw(st.lists(st.integers(1, den - 1), min_size=k - 1, max_size=k - 1, unique=True)))
    breakpoints = [Fraction(0)] + [upper * c / den for c in interior] + [upper]
    values = [
        Fraction(draw(st.integers(1, 6)), draw(st.integers(1, 3)))
        for _ in range(k)
    ]
    return StepDensity(tuple(breakpoints), tuple(values))


@st.composite
def set_partitions(draw, n: int = 4) -> SetPartition:
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    groups: dict[int, list[int]] = {}
    for i, lab in enumerate(labels, start=1):
        groups.setdefault(lab, []).append(i)
    return SetPartition.from_blocks(n, groups.values())


def rationals(lo: int = -4, hi: int = 4, max_den: int = 12):
    return st.fractions(min_value=lo, max_value=hi, max_denominator=max_den)
