"""Tabulate where Porubsky's congruences break at k = 1.

For even N the leading term (c^2 - 1)/12 needs 2 to be invertible mod N. The
failures are exactly c = 3 (mod 4) for eq-por1, and 4 | N with c = 3 (mod 4)
for eq-por2. Multiplying through by 2k = 2 always restores the congruence.
"""

import argparse
from math import gcd

from rrlab.verify import POR1, POR2, porubsky_side_condition, porubsky_terms, verify_porubsky


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=32)
    parser.add_argument("--c-max", type=int, default=12)
    args = parser.parse_args()

    print("N\tc\tpor1\tpor2\tlead\tcorrection\trhs\t2k*difference mod N")
    for N in range(2, args.n_max + 1, 2):
        for c in range(1, args.c_max + 1):
            if gcd(c, N) != 1:
                continue
            r1 = verify_porubsky(N, c, 1, POR1)
            r2 = verify_porubsky(N, c, 1, POR2) if porubsky_side_condition(N, c) else None
            if r1.holds and (r2 is None or r2.holds):
                continue
            lead, corr, rhs = porubsky_terms(N, c, 1)
            scaled = (2 * (lead + corr - rhs)).numerator % N
            por2 = "-" if r2 is None else ("holds" if r2.holds else "FAILS")
            print(f"{N}\t{c}\t{'holds' if r1.holds else 'FAILS'}\t{por2}\t{lead}\t{corr}\t{rhs}\t{scaled}")


if __name__ == "__main__":
    main()
