"""Enumerate deletion sets S for r = 3, 4, 5 and report orbit counts.

r = 5 visits 53130 sets and takes a few minutes on one core; pass
--workers to spread it over processes.
"""

import argparse
import json
import time

from mcgraphs.search import standard_s, survey


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="dump full survey records")
    args = ap.parse_args()

    for r in args.r:
        start = time.perf_counter()
        s = survey(r, workers=args.workers)
        secs = time.perf_counter() - start
        if args.json:
            print(json.dumps(s.to_json()))
            continue
        print(
            f"r={r}: {s.total_candidates} candidates, {s.valid_count} valid, "
            f"{s.orbit_count} orbit(s) of sizes {[len(o) for o in s.orbits]}, "
            f"standard S included: {s.contains(standard_s(r))} ({secs:.1f}s)"
        )
        for rep in s.representatives:
            print("   ", rep)


if __name__ == "__main__":
    main()
