#!/usr/bin/env python3
"""Time the two enumeration kernels against each other.

The jitted scalar scan and the vectorized numpy fallback produce identical
code arrays; this script checks that and reports wall times.  The first
numba call includes compilation, so it is reported separately.
"""

import argparse
import time

import numpy as np

from magmoves import _kernels


def best_of(fn, n: int, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(n)
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=5, help="node count (default 5)")
    ap.add_argument(
        "--repeat", type=int, default=3, help="timed repetitions (default 3)"
    )
    args = ap.parse_args()

    ref = _kernels.mag_codes_numpy(args.n)
    print(f"n={args.n}: {len(ref)} MAGs out of {4 ** (args.n * (args.n - 1) // 2)} codes")

    rows = [("numpy", best_of(_kernels.mag_codes_numpy, args.n, args.repeat), "")]
    if _kernels.USING_NUMBA:
        t0 = time.perf_counter()
        first = _kernels.mag_codes_jit(args.n)
        cold = time.perf_counter() - t0
        if not np.array_equal(first, ref):
            raise SystemExit("kernel mismatch: numba and numpy codes differ")
        warm = best_of(_kernels.mag_codes_jit, args.n, args.repeat)
        rows.append(("numba", warm, f"first call {cold:.3f}s incl. compile"))
    else:
        print("numba kernel disabled or unavailable; timing numpy only")

    width = max(len(name) for name, _, _ in rows)
    for name, secs, note in rows:
        extra = f"  ({note})" if note else ""
        print(f"{name:<{width}}  {secs * 1000:10.1f} ms{extra}")


if __name__ == "__main__":
    main()
