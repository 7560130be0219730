"""Benchmark: compiled kernels versus the pure-Python fallback.

Times the three hot loops — rank/elimination, positive-circuit enumeration
and brute-force facet scans — on representative workloads, plus one
end-to-end reliability decision.  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

import random
import time
from itertools import product

from shadowcover.kernels import _speedups as compiled  # noqa: F401 (import check)
from shadowcover.kernels import pure


def _workloads():
    rng = random.Random(2024)

    matrices = [
        [tuple(rng.randint(-20, 20) for _ in range(5)) for _ in range(4)]
        for _ in range(3000)
    ]

    # direction sets: the 12-vector configuration in R^4 and a dense
    # 26-direction symmetric configuration
    base = [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1),
            (0, 1, 1, 0), (0, 1, 0, 1), (0, 0, 1, 1)]
    twelve = [u for v in base for u in (v, tuple(-x for x in v))]
    dense = []
    while len(dense) < 26:
        v = tuple(rng.randint(-3, 3) for _ in range(4))
        if any(v) and v not in dense and tuple(-x for x in v) not in dense:
            dense.append(v)
            dense.append(tuple(-x for x in v))
    dense = dense[:26]

    cube4 = [tuple(c) for c in product((0, 1), repeat=4)]
    cloud = sorted({tuple(rng.randint(-6, 6) for _ in range(3)) for _ in range(40)})

    return matrices, twelve, dense, cube4, cloud


def bench(label, fn, repeat=3):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return label, min(times)


def run(backend):
    matrices, twelve, dense, cube4, cloud = _workloads()
    results = [
        bench("rank 3000x (4x5)", lambda: [backend.int_rank(m) for m in matrices]),
        bench("circuits 12-dir R^4", lambda: backend.circuits(twelve, 2, 5)),
        bench("circuits 26-dir R^4 (positive)",
              lambda: backend.circuits(dense, 3, 5, positive_only=True)),
        bench("hull facets 4-cube", lambda: backend.hull_facets(cube4)),
        bench("hull facets 40 pts R^3", lambda: backend.hull_facets(cloud)),
    ]
    return results


def main():
    pure_results = run(pure)
    fast_results = run(compiled)
    width = max(len(label) for label, _ in pure_results)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>7}")
    for (label, tp), (_, tc) in zip(pure_results, fast_results):
        print(f"{label:<{width}}  {tp * 1000:8.1f}ms  {tc * 1000:8.1f}ms  "
              f"{tp / tc:6.1f}x")


if __name__ == "__main__":
    main()
