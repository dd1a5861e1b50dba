"""Compare the compiled convolution kernel against the pure-Python fallback.

The hot path of every exact identity check is big-integer polynomial
convolution (exact products clear denominators first).  Run with:

    python benchmarks/bench_kernels.py [--degrees 64 128 256] [--repeat 5]

The pure-Python numbers come from a subprocess with SIEVED_OPS_PURE_PYTHON=1
so each backend is timed in a cleanly imported interpreter.
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKER = """
import json, sys, time, random
from sievedops import kernels

degrees = json.loads(sys.argv[1])
repeat = int(sys.argv[2])
rng = random.Random(0x5EED)
out = {"backend": kernels.BACKEND, "timings": {}}
for deg in degrees:
    # big-integer coefficients of the size denominator clearing produces
    a = [rng.getrandbits(64 + deg) for _ in range(deg + 1)]
    b = [rng.getrandbits(64 + deg) for _ in range(deg + 1)]
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        kernels.convolve(a, b)
        best = min(best, time.perf_counter() - t0)
    out["timings"][str(deg)] = best
print(json.dumps(out))
"""


def run_backend(pure_python, degrees, repeat):
    env = dict(os.environ)
    env["SIEVED_OPS_PURE_PYTHON"] = "1" if pure_python else "0"
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, json.dumps(degrees), str(repeat)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", type=int, nargs="+", default=[32, 64, 128, 256])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    compiled = run_backend(False, args.degrees, args.repeat)
    fallback = run_backend(True, args.degrees, args.repeat)

    print(f"{'degree':>8} {compiled['backend']:>12} {fallback['backend']:>12} "
          f"{'speedup':>8}")
    for deg in args.degrees:
        tc = compiled["timings"][str(deg)]
        tp = fallback["timings"][str(deg)]
        print(f"{deg:>8} {tc * 1e3:>10.3f}ms {tp * 1e3:>10.3f}ms {tp / tc:>7.2f}x")

    if compiled["backend"] == fallback["backend"]:
        print("note: compiled extension unavailable, both runs used the "
              "pure-Python kernel")


if __name__ == "__main__":
    main()
