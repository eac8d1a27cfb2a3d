"""Compare the series residue of 1/prod(1 - exp(-a_i t)) with the short closed form.

Enumerates tangent-weight tuples with entries in [-B, B] \\ {0} and prints
the tuples where the two disagree, plus a summary count.

    python scripts/todd_discrepancy.py --bound 3 --max-len 3
"""

import argparse
from itertools import combinations_with_replacement

from algcut.arith import format_rational
from algcut.charnum import todd_closed_form_comparator
from algcut.cut import FixedPointDatum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=3)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--quiet", action="store_true")
    args = ap.parse_args()
    vals = [a for a in range(-args.bound, args.bound + 1) if a]
    agree = total = 0
    for n in range(1, args.max_len + 1):
        for ws in combinations_with_replacement(vals, n):
            c = todd_closed_form_comparator([FixedPointDatum("p", ws)])
            total += 1
            agree += c.agree
            if not c.agree and not args.quiet:
                print(f"{ws}: series {format_rational(c.series_value)}  closed {format_rational(c.closed_form_value)}")
    print(f"agree on {agree}/{total} single-point weight tuples")


if __name__ == "__main__":
    main()
