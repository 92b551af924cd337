"""Run every desk-scale sweep and print one summary line each.

    python scripts/run_sweeps.py --jobs 4
"""

import argparse
import json

from rrlab.verify import POR1, POR2, sweep_main, sweep_porubsky, sweep_proof_identities, sweep_reduction, sweep_voronoi


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    primes = [2, 3, 5, 7, 11, 13]
    runs = {
        "main k=1": lambda: sweep_main(range(2, 9), range(1, 65), [1], True, args.jobs),
        "main k<=6": lambda: sweep_main(range(2, 9), range(1, 65), range(1, 7), True, args.jobs),
        "main composite (exploratory)": lambda: sweep_main(range(2, 9), range(2, 37), range(1, 7), False, args.jobs),
        "voronoi": lambda: sweep_voronoi(primes, 4, range(1, 21), range(1, 9), args.jobs),
        "porubsky por2 odd N": lambda: sweep_porubsky(range(1, 100, 2), range(1, 13), range(1, 6), POR2, args.jobs),
        "porubsky por2 even N": lambda: sweep_porubsky(range(2, 65, 2), range(1, 13), range(1, 6), POR2, args.jobs),
        "porubsky por1": lambda: sweep_porubsky(range(1, 100), range(1, 13), range(1, 6), POR1, args.jobs),
        "identities a>=1": lambda: sweep_proof_identities(primes, 4, range(1, 21), range(1, 9), args.jobs),
        "reduction on data": lambda: sweep_reduction(range(2, 9), range(1, 65), range(1, 7), args.jobs),
    }
    failed = False
    for name, fn in runs.items():
        rep = fn()
        failed |= not rep.ok
        if args.json:
            print(json.dumps({"run": name, **rep.summary()}, sort_keys=True))
        else:
            first = f"  first failure: {rep.failures[0].witness}" if rep.failures else ""
            print(f"{name:30s} {rep.total:6d} cases {len(rep.failures):4d} failures {rep.elapsed:7.2f}s{first}")
    raise SystemExit(2 if failed else 0)


if __name__ == "__main__":
    main()
