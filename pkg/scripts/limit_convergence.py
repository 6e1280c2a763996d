#!/usr/bin/env python3
"""Tower approximation of a few targets; prints the distance tables as CSV."""

from fractions import Fraction

from rglat.intervals import IntervalSet
from rglat.limits import cauchy_approx
from rglat.rank import format_fraction

TARGETS = {
    "third": IntervalSet.of((0, Fraction(1, 3))),
    "middle-third": IntervalSet.of((Fraction(1, 3), Fraction(2, 3))),
    "two-pieces": IntervalSet.of((Fraction(1, 5), Fraction(2, 5)), (Fraction(3, 5), Fraction(9, 10))),
}


def main() -> None:
    levels = [2 ** i for i in range(1, 11)]
    print("target,level,distance_to_target,distance_to_previous")
    for name, target in TARGETS.items():
        for row in cauchy_approx(target, levels).rows:
            prev = "" if row.distance_to_previous is None else format_fraction(row.distance_to_previous)
            print(f"{name},{row.level},{format_fraction(row.distance_to_target)},{prev}")


if __name__ == "__main__":
    main()
