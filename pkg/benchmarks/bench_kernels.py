"""Compare the numba-compiled kernels with the plain-Python fallback.

Each path runs in its own interpreter (the fallback via MODK_DISABLE_NUMBA=1)
so that module-level compilation choices can't leak between them. Compile
time is paid in a warm-up call and excluded from the timings.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from modk import graph as gr
from modk._numba_utils import NUMBA_ENABLED
from modk.colouring import exact_chi
from modk.divisible import find_divisible
from modk.pipeline import colour_graph

repeat = int(sys.argv[1])

def timed(fn):
    fn()  # warm-up / compile
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best * 1000.0

big = gr.gnp(400, 0.1, 0)
dense = gr.gnp(30, 0.6, 1)
small = gr.gnp(8, 0.8, 0)
cases = {
    "peel gnp(400,0.1)": lambda: gr.degeneracy_order(big),
    "exact gnp(8,0.8) k=4": lambda: exact_chi(small, 4, 12, 10**6),
    "divisible gnp(30,0.6) k=7": lambda: find_divisible(dense, 7, 10**6),
    "pipeline gnp(60,0.3) k=3": lambda: colour_graph(gr.gnp(60, 0.3, 2), 3),
}
print(json.dumps({"numba": NUMBA_ENABLED, "ms": {name: timed(fn) for name, fn in cases.items()}}))
"""


def run(disable, repeat):
    env = dict(os.environ)
    env.pop("MODK_DISABLE_NUMBA", None)
    if disable:
        env["MODK_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    fast = run(False, args.repeat)
    pure = run(True, args.repeat)
    if not fast["numba"]:
        print("numba is not importable; both columns use the fallback")
    print(f"{'case':<28}{'numba ms':>12}{'python ms':>12}{'speedup':>10}")
    for name, ms in fast["ms"].items():
        slow = pure["ms"][name]
        print(f"{name:<28}{ms:>12.2f}{slow:>12.2f}{slow / ms:>9.1f}x")


if __name__ == "__main__":
    main()
