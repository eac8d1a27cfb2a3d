"""Walk every chamber of a weight vector and tabulate the quotient invariants.

    python scripts/chamber_scan.py 0 1 3 4 --class "h^2"

For each chamber (a_k, a_{k+1}) the level is its midpoint.  Printed columns:
level, number of fixed points above, freeness, chi, Todd genus, Kalkman value
of the class (degree dim P(V) - 1).
"""

import argparse
from fractions import Fraction

from algcut.arith import format_rational
from algcut.charnum import quotient_numbers
from algcut.localization import kalkman_report
from algcut.scenario import parse_class
from algcut.weights import AmbientWeights


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("weights", nargs="+", type=int)
    ap.add_argument("--class", dest="cls", default=None, help="class in h, t; default h^(n-1)")
    args = ap.parse_args()
    w = AmbientWeights(args.weights)
    w.require_distinct()
    spec = args.cls or f"h^{w.dim - 1}"
    c = parse_class(spec, w)
    ws = sorted(w.weights)
    print(f"weights {ws}, class {spec}")
    print(f"{'level':>8} {'upper':>5} {'free':>5} {'chi':>8} {'todd':>8} {'kalkman':>8}")
    for lo, hi in zip(ws, ws[1:]):
        q = Fraction(lo + hi, 2)
        nums = quotient_numbers(w, q)
        k = kalkman_report(w, q, c)
        upper = sum(a > q for a in ws)
        print(
            f"{format_rational(q):>8} {upper:>5} {str(nums.free):>5} {format_rational(nums.chi):>8}"
            f" {format_rational(nums.todd):>8} {format_rational(k.value):>8}"
        )


if __name__ == "__main__":
    main()
