"""Compare the compiled and pure-Python echelon kernels on real workloads.

    python benchmarks/bench_echelon.py [--repeat N] [--bound B]

Workloads: the Hilbert-oracle matrices of the K4 ideal for every bidegree
a+b <= bound, random sparse integer matrices over Q and GF(32003),
and every subset rank of the K4 matroid.
"""
import argparse
import random
import time
from itertools import combinations

from enbc_kit import _echelon_py
from enbc_kit.algebra import gamma_ideal_generators
from enbc_kit.algebra.hilbert import bidegree_matrix
from enbc_kit.inputs import load_input

try:
    from enbc_kit import _echelon as _compiled
except ImportError:
    _compiled = None


def hilbert_matrices(bound):
    ideal = gamma_ideal_generators(load_input("k4").matroid())
    out = []
    for a in range(bound + 1):
        for b in range(bound + 1 - a):
            rows, _ = bidegree_matrix(ideal, a, b)
            if rows:
                out.append(rows)
    return out


def random_matrices(count=30, nrows=120, ncols=100, density=0.04, seed=1):
    rng = random.Random(seed)
    mats = []
    for _ in range(count):
        rows = []
        for _ in range(nrows):
            cols = sorted(rng.sample(range(ncols), max(1, int(density * ncols))))
            rows.append([(c, rng.randint(-5, 5) or 1) for c in cols])
        mats.append(rows)
    return mats


def subset_rank_matrices():
    M = load_input("k4").matroid()
    cols = [M.matrix.column(j) for j in range(M.size)]
    mats = []
    for k in range(1, M.size + 1):
        for S in combinations(range(M.size), k):
            mats.append([[(i, int(v)) for i, v in enumerate(cols[j]) if v] for j in S])
    return mats


class Dispatch:
    """The compiled kernel with the big-int fallback, counting fallbacks."""

    def __init__(self):
        self.fallbacks = 0

    def __call__(self, rows, modulus):
        try:
            return _compiled.echelon_rank(rows, modulus)
        except OverflowError:
            self.fallbacks += 1
            return _echelon_py.echelon_rank(rows, modulus)


def timeit(fn, mats, modulus, repeat):
    best = float("inf")
    ranks = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        ranks = [fn(m, modulus) for m in mats]
        best = min(best, time.perf_counter() - t0)
    return best, ranks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--bound", type=int, default=6)
    args = ap.parse_args()
    workloads = [
        ("K4 Hilbert oracle, a+b<=%d" % args.bound, hilbert_matrices(args.bound), 0),
        ("random sparse 120x100 over Q", random_matrices(), 0),
        ("random denser 120x100 over Q", random_matrices(density=0.1), 0),
        ("random denser 120x100 over GF(32003)", random_matrices(density=0.1), 32003),
        ("K4 subset ranks", subset_rank_matrices(), 0),
    ]
    print("%-40s %8s %12s %12s %8s  %s" % ("workload", "matrices", "python (s)", "compiled (s)", "speedup",
                                           "fallbacks"))
    for name, mats, p in workloads:
        t_py, r_py = timeit(_echelon_py.echelon_rank, mats, p, args.repeat)
        if _compiled is None:
            print("%-40s %8d %12.4f %12s %8s" % (name, len(mats), t_py, "n/a", "n/a"))
            continue
        fn = Dispatch()
        t_c, r_c = timeit(fn, mats, p, args.repeat)
        assert r_py == r_c, "backends disagree on %s" % name
        print("%-40s %8d %12.4f %12.4f %7.1fx  %d/%d" % (name, len(mats), t_py, t_c, t_py / t_c,
                                                         fn.fallbacks // args.repeat, len(mats)))


if __name__ == "__main__":
    main()
