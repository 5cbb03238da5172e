"""Run the full verification sweep and write a machine-readable summary.

Usage:
    python3 scripts/run_sweep.py --max-N 6 --out sweep.json

Prints one line per composition with wall time and check counts; the JSON
file carries every row so a failing check can be located afterwards.
"""

import argparse
import json
import sys
import time

sys.path.insert(0, "src")

from nilcent.cli import sweep_composition
from nilcent.composition import monotone_compositions
from nilcent.enveloping import pbw_algebra


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-N", dest="max_n", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default=None, help="path for the JSON summary")
    args = ap.parse_args()

    lams = sorted(
        (lam for total in range(1, args.max_n + 1)
         for lam in monotone_compositions(total)),
        key=lambda c: (c.N, c.parts),
    )
    all_rows = []
    t0 = time.time()
    for lam in lams:
        t1 = time.time()
        rows = sweep_composition(lam, seed=args.seed)
        pbw_algebra.cache_clear()
        bad = [r for r in rows if not r["ok"]]
        all_rows.extend(rows)
        print(f"lambda={lam.to_string():<12} N={lam.N}  "
              f"checks={len(rows):3d}  failed={len(bad)}  "
              f"{time.time() - t1:6.2f}s")
    ok = all(r["ok"] for r in all_rows)
    print(f"total: {len(lams)} compositions, {len(all_rows)} checks, "
          f"{time.time() - t0:.2f}s, {'all ok' if ok else 'FAILURES'}")

    if args.out:
        obj = {"schema": 1, "max_N": args.max_n, "seed": args.seed,
               "ok": ok, "rows": all_rows}
        with open(args.out, "w") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
        print(f"wrote {args.out}")
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
