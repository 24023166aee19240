"""Time the compiled and pure-Python GF(p) kernels on workloads the pipeline runs.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

from __future__ import annotations

import argparse
import random
import timeit

import numpy as np

from arrangement_spectra import kernels
from arrangement_spectra.oracle import build_arrangement_graph
from arrangement_spectra.primes import random_prime
from arrangement_spectra.quotient import build_quotient, evaluate

P = random_prime(random.Random(0))


def workloads(quick: bool):
    a63 = build_arrangement_graph(6, 3).matrix().toarray().astype(np.int64)
    yield "rank_mod  A(6,3)+3I  120x120", kernels.rank_mod, a63 + 3 * np.eye(120, dtype=np.int64)
    q6 = evaluate(build_quotient(6), 14)
    yield "charpoly_mod  Q k=6  65x65", kernels.charpoly_mod, q6
    q5 = evaluate(build_quotient(5), 12)
    shifted = [[x - (2 if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(q5)]
    yield "rref_mod  Q k=5 - 2I  36x36", kernels.rref_mod, shifted
    if not quick:
        a73 = build_arrangement_graph(7, 3).matrix().toarray().astype(np.int64)
        yield "rank_mod  A(7,3)+3I  210x210", kernels.rank_mod, a73 + 3 * np.eye(210, dtype=np.int64)
        q7 = evaluate(build_quotient(7), 16)
        yield "charpoly_mod  Q k=7  110x110", kernels.charpoly_mod, q7


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the larger workloads")
    args = parser.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'workload':<32}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, fn, matrix in workloads(args.quick):
        best = {}
        results = {}
        for b in backends:
            with kernels.use_backend(b):
                results[b] = fn(matrix, P)
                best[b] = min(timeit.repeat(lambda: fn(matrix, P), number=1, repeat=args.repeat))
        assert all(r == results[backends[0]] for r in results.values()), name
        line = f"{name:<32}" + "".join(f"{best[b] * 1e3:>10.1f}ms" for b in backends)
        if len(backends) > 1:
            line += f"{best['python'] / best['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
