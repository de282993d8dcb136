"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_engines.py [--repeat 3]
"""
import argparse
import random
import time

from quandlelink import corpus
from quandlelink.homcount import BACKENDS, count_oracle, count_propagate
from quandlelink.quandle import make_dihedral, make_xn
from quandlelink.wirtinger import presentation


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def cases():
    ex = presentation(corpus.load("paper_example"))
    yield "oracle  paper example, X_2..X_7", count_oracle, ex, [make_xn(n) for n in range(2, 8)]
    yield "propagate paper example, X_2..X_64", count_propagate, ex, [make_xn(n) for n in range(2, 65)]
    rng = random.Random(5)
    big = presentation(corpus.random_code(rng, 14, 2))
    yield "propagate 14 crossings, R_3..R_9", count_propagate, big, [make_dihedral(n) for n in range(3, 10)]
    yield "oracle  torus(2,6), R_3..R_9", count_oracle, presentation(corpus.load("torus_2_6")), \
        [make_dihedral(n) for n in range(3, 10)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = sorted(BACKENDS)
    if "compiled" not in BACKENDS:
        print("compiled extension not built; timing the fallback only")
    print(f"{'case':42s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    for label, fn, p, targets in cases():
        times, totals = [], []
        for name in names:
            t, total = best_of(args.repeat, lambda: sum(fn(p, q, engine=name).count for q in targets))
            times.append(t)
            totals.append(total)
        assert len(set(totals)) == 1, f"backends disagree on {label}: {totals}"
        speed = f"{times[names.index('fallback')] / times[0]:9.1f}x" if len(names) > 1 else ""
        print(f"{label:42s}" + "".join(f"{t:11.3f}s" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
