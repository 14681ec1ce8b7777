"""Benchmark the compiled trace kernel against the pure-Python fallback.

Both kernels compute the mu-weighted trace of the braid representation,
the single hot step behind every Jones polynomial. Cost grows roughly as
word length times 4^strands, so strand count dominates. Run with:

    python benchmarks/bench_jones.py --strands 4,6,8,9 --length 12
"""
import argparse
import random
import time

from cryptocomb._kernel import _fast, _pure
from cryptocomb.braids import random_knot_braid


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--strands", default="2,4,6,8,9", help="comma-separated list")
    parser.add_argument("--length", type=int, default=12, help="braid word length")
    parser.add_argument("--repeats", type=int, default=3, help="best-of repeats")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    print(f"{'strands':>7} {'letters':>7} {'pure':>12} {'compiled':>12} {'speedup':>8}")
    for n in (int(s) for s in args.strands.split(",")):
        word = random_knot_braid(n, args.length, rng)
        letters = list(word.letters())
        t_pure, want = best_of(args.repeats, _pure.trace_part_q, n, letters, None)
        if _fast is None:
            print(f"{n:>7} {len(letters):>7} {t_pure * 1e3:>10.2f}ms {'not built':>12}")
            continue
        t_fast, got = best_of(args.repeats, _fast.trace_part_q, n, letters, None)
        if got != want:
            raise SystemExit(f"kernel mismatch at {n} strands")
        print(
            f"{n:>7} {len(letters):>7} {t_pure * 1e3:>10.2f}ms "
            f"{t_fast * 1e3:>10.2f}ms {t_pure / t_fast:>7.1f}x"
        )


if __name__ == "__main__":
    main()
