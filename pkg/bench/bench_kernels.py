"""Time the compiled kernels against the pure-Python fallback.

    python bench/bench_kernels.py [--repeat N] [--quick]
"""

import argparse
import statistics
import time

from monext import kernels
from monext.enumeration import candidate_systems
from monext.monoid import enumerate_monoids


def timed(fn, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - start)
    return statistics.median(runs)


def workloads(quick):
    m3 = enumerate_monoids(3)
    m4 = enumerate_monoids(4)
    pairs3 = [(X, B) for X in m3 for B in m3]
    if quick:
        pairs3 = pairs3[:6]
    cand = [T for X in enumerate_monoids(2) for B in m3 for T in candidate_systems(X, B)]
    if quick:
        cand = cand[:2000]

    def act07(backend):
        for T in cand:
            kernels.act07_witness(*T.components(), backend=backend)

    def systems(backend):
        for X, B in pairs3:
            kernels.action_systems(X.table, B.table, backend=backend)

    def assoc(backend):
        for M in m4:
            kernels.assoc_witness(M.table, backend=backend)

    return [
        (f"act07 check, {len(cand)} candidates over 2x3", act07),
        (f"action-system search, {len(pairs3)} pairs of order-3 monoids", systems),
        ("unital table search, order 4", lambda b: kernels.unital_tables(4, backend=b)),
        ("associativity, 35 order-4 tables", assoc),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels unavailable (not built, or MONEXT_PURE is set)")
    tail = f"{'speedup':>10}" if "cython" in backends else ""
    print(f"{'workload':<56}" + "".join(f"{b:>12}" for b in backends) + tail)
    for name, fn in workloads(args.quick):
        times = {b: timed(lambda: fn(b), args.repeat) for b in backends}
        row = f"{name:<56}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if "cython" in times:
            row += f"{times['python'] / max(times['cython'], 1e-9):>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
