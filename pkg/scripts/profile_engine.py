"""Timing and size profile of the rewriting engine on one composition.

Usage:
    python3 scripts/profile_engine.py --lambda 2,2,2

For each weight r this reports the number of normal-form terms of z_r,
the time to build it, and the time to verify centrality against every
generator, plus the final size of the normal-form memo table.
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from nilcent.centralizer import basis_list
from nilcent.composition import Composition, invariant_degrees
from nilcent.enveloping import central_element, pbw_algebra, verify_central


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lambda", dest="lam", required=True,
                    help="comma separated parts, e.g. 2,2,2")
    args = ap.parse_args()

    lam = Composition.from_string(args.lam)
    alg = pbw_algebra(lam)
    dim = len(basis_list(lam))
    degrees = invariant_degrees(lam)
    print(f"lambda={lam}  N={lam.N}  dim={dim}  degrees={' '.join(map(str, degrees))}")

    total = 0.0
    for r in range(1, lam.N + 1):
        t0 = time.time()
        z = central_element(lam, r)
        build = time.time() - t0
        t0 = time.time()
        rep = verify_central(lam, r)
        check = time.time() - t0
        total += build + check
        status = "ok" if rep.ok else "FAILED"
        print(f"  r={r:2d}  d_r={degrees[r - 1]}  terms={len(z.terms):6d}  "
              f"build={build:6.2f}s  centrality={check:6.2f}s  {status}")
    print(f"memo entries: {len(alg._nf_memo)}")
    print(f"total: {total:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
