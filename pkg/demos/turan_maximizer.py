"""Check by brute force that the Turan graph maximizes rho among connected rank-r graphs.

Usage: python3 demos/turan_maximizer.py [n]   (2 <= n <= 7, default 6)
"""

import sys

from spectral_rank import theorem1_report, turan, turan_radius_closed_form
from spectral_rank.extremal import enumeration_data


def main(n: int) -> None:
    data = enumeration_data(n)
    print(f"{len(data.masks)} connected labeled graphs on {n} vertices")
    print(" r  graphs   max rho     T(n,r) rho   closed form  gap to next   unique")
    for r in range(2, n + 1):
        rep = theorem1_report(n, r)
        print(f"{r:>2}  {rep.candidates:>6}   {rep.extreme_radius:.6f}    {rep.expected_radius:.6f}"
              f"     {turan_radius_closed_form(n, r):.6f}     {rep.gap:.6f}      {rep.passed}")
    t = turan(n, n // 2)
    print(f"\nT({n},{n // 2}) has {t.m} edges and degrees {sorted(t.degrees())}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
