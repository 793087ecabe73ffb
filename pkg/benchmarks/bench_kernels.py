"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--n 11] [--repeat 3]

Each workload is the search graph the oracle builds for a one-edge graph at
length ``n``: class labelling, adjacency bitsets, maximum clique and the
lexicographically least optimum.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from zecap import _pykernels
from zecap.channel import single_edge
from zecap.oracle import all_words, label_array

try:
    from zecap import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

EDGES = [("000", "001"), ("001", "100"), ("000", "011"), ("010", "101")]


def workload(u: str, v: str, n: int):
    g = single_edge(u, v)
    labels = label_array(all_words(2, n), g)
    _, first = np.unique(labels, axis=0, return_index=True)
    reps = labels[np.sort(first)]
    _, emat = g.edge_matrix()
    # same degree ordering as the oracle, so both backends see its search graph
    degree = _pykernels.distinguishability_matrix(reps, emat).sum(axis=1)
    order = np.lexsort((np.arange(len(reps)), -degree))
    return np.ascontiguousarray(reps[order]), emat, order


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def run(backend, reps, emat, order, repeat):
    bits = backend.adjacency_bitsets(reps, emat)
    t_bits = best_of(lambda: backend.adjacency_bitsets(reps, emat), repeat)
    clique, nodes, _ = backend.max_clique(bits)
    t_clique = best_of(lambda: backend.max_clique(bits), repeat)
    rank = np.empty_like(order)
    rank[order] = np.arange(len(order))
    t_first = best_of(lambda: backend.first_clique(bits, len(clique), visit=rank), repeat)
    return len(clique), nodes, t_bits, t_clique, t_first


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    print(f"{'graph':<10} {'classes':>7} {'backend':<9} {'size':>4} {'nodes':>8} {'bitsets':>9} {'clique':>9} {'lexmin':>9}")
    for u, v in EDGES:
        reps, emat, order = workload(u, v, args.n)
        base = None
        for name, mod in backends:
            size, nodes, tb, tc, tf = run(mod, reps, emat, order, args.repeat)
            speed = "" if base is None else f"  x{(base / max(tb + tc + tf, 1e-9)):.1f}"
            base = base or (tb + tc + tf)
            print(
                f"{u}-{v:<6} {len(reps):>7} {name:<9} {size:>4} {nodes:>8} "
                f"{tb * 1e3:>7.2f}ms {tc * 1e3:>7.2f}ms {tf * 1e3:>7.2f}ms{speed}"
            )


if __name__ == "__main__":
    main()
