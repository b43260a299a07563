"""Walk through the rank-5 minimum-radius problem for one vertex count.

Usage: python3 demos/minimum_radius_family.py [n]   (n >= 12, default 23)
"""

import math
import sys

from spectral_rank import alpha, min_radius_bounds, min_rank5_extremal, search_family
from spectral_rank.extremal import alpha_floor_ceil, f_parts, f_radius, identity_terms


def main(n: int) -> None:
    print(f"n = {n}")
    for base in ("G1", "G7", "G10"):
        res = search_family(base, n, "min")
        print(f"  best {base} blow-up: {base}{res.argbest}  rho = {res.best_radius:.6f}  "
              f"({res.evaluated} compositions)")

    a = alpha(n)
    lo, hi = alpha_floor_ceil(n)
    print(f"\n  alpha(n) = {a:.6f}, candidates i = {lo}, {hi}")
    print("  i  parts                 rho        (rho^2-n+i+3)(rho^2-rho-2i-2)")
    for i in range(1, (n - 4) // 2 + 1):
        _, x, y = identity_terms(n, i)
        mark = " <" if i in (lo, hi) else ""
        print(f"  {i:<2} {str(f_parts(n, i)):<21} {f_radius(n, i):.6f}   {x * y:.12f}{mark}")

    verdict = min_rank5_extremal(n)
    lower, upper = min_radius_bounds(n)
    print(f"\n  minimizer: {verdict.base}{verdict.parts}, rho = {verdict.radius:.9f}")
    print(f"  bounds: {lower:.9f} <= rho <= {upper:.9f}")
    print(f"  sqrt(n) for scale: {math.sqrt(n):.6f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 23)
