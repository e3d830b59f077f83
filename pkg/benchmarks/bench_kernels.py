"""Compiled vs pure-Python integer kernels.

Runs the determinant and LP kernels of both backends on the same seeded
inputs, checks that they agree, and times them; then times an end-to-end
verifier campaign under each backend in a subprocess.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import os
import subprocess
import sys
import timeit

from linkgeom import _kernels_py
from linkgeom.kernel import SplitMix64

try:
    from linkgeom import _ckernels
except ImportError:
    _ckernels = None


def det_inputs(count, n, bits, seed=1):
    rng = SplitMix64(seed)
    half = 1 << (bits - 1)
    return [[[rng.randint(-half, half) for _ in range(n)] for _ in range(n)] for _ in range(count)]


def lp_inputs(count, rows, cols, seed=2):
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        A = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        x = [rng.randint(0, 5) for _ in range(cols)]
        b = [sum(a * v for a, v in zip(row, x)) for row in A]
        c = [rng.randint(-5, 5) for _ in range(cols)]
        out.append((A, b, c))
    return out


CAMPAIGN = ("from linkgeom.trials import run_trials; "
            "run_trials('vkf', 40, 1); run_trials('cgs', 200, 1); "
            "from linkgeom.kernel import random_configuration as R; from linkgeom.realizability import is_embedded; "
            "from itertools import combinations as C; "
            "[is_embedded(R(7, 4, s), list(C(range(7), 3))) for s in range(20)]")


def campaign_time(pure):
    env = dict(os.environ)
    if pure:
        env["LINKGEOM_PURE_PYTHON"] = "1"
    else:
        env.pop("LINKGEOM_PURE_PYTHON", None)
    code = f"import time; t = time.perf_counter(); {CAMPAIGN}; print(time.perf_counter() - t)"
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(res.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the pure-Python backend is available")
        return 1

    cases = [
        ("det 5x5, 20-bit", "det_int", [(m,) for m in det_inputs(2000, 5, 20)]),
        ("det 8x8, 40-bit", "det_int", [(m,) for m in det_inputs(500, 8, 40)]),
        ("lp 6x12", "lp_max_int", lp_inputs(300, 6, 12)),
        ("lp 12x30", "lp_max_int", lp_inputs(60, 12, 30)),
    ]
    print(f"{'kernel':<18}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for label, fn, inputs in cases:
        py, cy = getattr(_kernels_py, fn), getattr(_ckernels, fn)
        if [py(*a) for a in inputs] != [cy(*a) for a in inputs]:
            print(f"{label}: backends disagree")
            return 1
        tp = min(timeit.repeat(lambda: [py(*a) for a in inputs], number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: [cy(*a) for a in inputs], number=1, repeat=args.repeat))
        print(f"{label:<18}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x")

    tp, tc = campaign_time(True), campaign_time(False)
    print(f"{'campaign':<18}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
