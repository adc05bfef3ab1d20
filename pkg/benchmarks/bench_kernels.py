"""Time each kernel on the pure-Python and compiled backends.

Usage: python3 benchmarks/bench_kernels.py [--graphs 300] [--seed 1]

Both backends run on the same seeded batch of connected graphs and their
results are compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import timeit

from equimatch.enumeration import claw_free_chain, random_graph
from equimatch.kernels import backend


def batch(count: int, seed: int):
    rng = random.Random(seed)
    dense = [random_graph(rng.randint(8, 14), rng, 0.6) for _ in range(count)]
    claw_free = list(claw_free_chain(11, count, seed))
    return dense, claw_free


CASES = [
    ("components", "dense", ()),
    ("find_claw", "dense", ()),
    ("find_independent_triple", "dense", ()),
    ("find_bad_triple", "claw_free", ()),
    ("matching_profile", "claw_free", (10**6, False)),
    ("vertex_connectivity", "dense", (3,)),
]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py, cy = backend("python"), backend("cython")
    dense, claw_free = batch(args.graphs, args.seed)
    sets = {"dense": dense, "claw_free": claw_free}
    print(f"{'kernel':26} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, which, extra in CASES:
        graphs = sets[which]
        fp, fc = getattr(py, name), getattr(cy, name)
        for g in graphs:
            a, b = fp(g.n, g.adj, *extra), fc(g.n, g.adj, *extra)
            if a != b:
                raise SystemExit(f"{name}: backends disagree on {g!r}: {a} vs {b}")

        def run(f):
            return lambda: [f(g.n, g.adj, *extra) for g in graphs]

        tp = min(timeit.repeat(run(fp), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(run(fc), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:26} {tp:10.2f} {tc:10.2f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
