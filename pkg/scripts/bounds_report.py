"""Tabulate the known lower and upper bounds on mc_r(K_n) for a range of r."""

import argparse

from mcgraphs.colorgraph import known_bounds


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rmax", type=int, default=12)
    ap.add_argument("--n", type=int, default=3465)
    args = ap.parse_args()

    for r in range(3, args.rmax + 1):
        b = known_bounds(r, args.n)
        lower = b.furedi_lower if b.furedi_lower is not None else b.gyarfas_lower
        designs = ", ".join(f"({x.k},{x.t})" for x in b.rbibd if x.available and x.divides) or "-"
        print(
            f"r={r:>2} q={b.q:>2} {b.furedi_status:<12} lower={str(lower):>10}"
            f" best_upper={str(b.best_upper):>6} designs {designs}"
        )


if __name__ == "__main__":
    main()
