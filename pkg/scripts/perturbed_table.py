"""Print min degree and largest monochromatic component of the perturbed H_r blow-ups.

    python3 scripts/perturbed_table.py --r 3 4 5 --c 1 2
"""

import argparse
import time
from fractions import Fraction

from mcgraphs.blowup import build_theorem_3_2_graph
from mcgraphs.errors import PreconditionError
from mcgraphs.graphs import analyze


def smallest_n(r: int, c: int) -> int:
    return r * (r - 1) * ((r - 1) * (r - 2) + 1) * c


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[3, 4, 5])
    ap.add_argument("--c", type=int, nargs="+", default=[1])
    ap.add_argument("--materialize", action="store_true")
    args = ap.parse_args()

    print(f"{'r':>2} {'c':>2} {'n':>5} {'delta':>6} {'comp':>5} {'n/(r-1)':>8} {'secs':>6}")
    for r in args.r:
        for c in args.c:
            n = smallest_n(r, c)
            start = time.perf_counter()
            try:
                G = build_theorem_3_2_graph(r, c, n, cap=max(r, 9), materialize=args.materialize)
            except PreconditionError as exc:
                print(f"{r:>2} {c:>2} skipped: {exc}")
                continue
            rep = analyze(G, "materialized" if args.materialize else "quotient")
            secs = time.perf_counter() - start
            print(
                f"{r:>2} {c:>2} {n:>5} {rep.min_degree:>6} {rep.max_component:>5}"
                f" {str(Fraction(n, r - 1)):>8} {secs:>6.2f}"
            )


if __name__ == "__main__":
    main()
