#!/usr/bin/env python3
"""Print the two-speed density instance: regraded ranks and the broken defect."""

from fractions import Fraction

from rglat.regrading import counterexample_report, counterexample_stage


def main() -> int:
    report = counterexample_report()
    print("ambient (0, 2], density 1 on (0, 1] and 2 on (1, 2], cutset at density value 1")
    for t, value in report.prefix_rows:
        print(f"  regraded (0, {t}]  = {value}")
    print(f"  regraded (1, 2]  = {report.upper_half}")
    print(f"  regraded (0, 2]  = {report.full_interval}")
    print(f"  regraded empty   = {report.empty_set}")
    print(f"  defect of (0,1] vs (1,2] = {report.modular_defect}")
    stage = counterexample_stage()
    print("chief sweep at step 1/4:")
    for row in stage.sweep_chief(Fraction(1, 4)):
        print(f"  level {str(row.level):>4}  rank {str(row.rank):>4}  regraded {row.regraded}")
    return 0 if report.matches_expected else 1


if __name__ == "__main__":
    raise SystemExit(main())
