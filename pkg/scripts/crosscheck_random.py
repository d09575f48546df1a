"""Cross-validate the exact copositivity test against the subdivision falsifier.

Draws random rational symmetric matrices, runs the exact support-scan verdict
and the one-sided simplex-subdivision falsifier on each, and reports agreement
statistics.  Any contradiction (falsifier finds a negative point on a matrix
the exact test certified) is a bug and exits nonzero.

    python3 scripts/crosscheck_random.py --count 500 --seed 7 --depth 6
"""

import argparse
import random
import time
from fractions import Fraction

from copocert.copositivity import is_copositive, subdivision_falsifier
from copocert.linalg import SymMatrix, eval_quadratic


def random_symmetric(rng, n: int) -> SymMatrix:
    """Symmetric matrix with small rational entries, diagonal nonnegative."""
    entries = []
    for i in range(n):
        for j in range(i, n):
            if i == j:
                entries.append(Fraction(rng.randint(0, 8),
                                        rng.randint(1, 3)))
            else:
                entries.append(Fraction(rng.randint(-6, 6),
                                        rng.randint(1, 3)))
    return SymMatrix(n, tuple(entries))


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=200,
                        help="number of random matrices (default 200)")
    parser.add_argument("--seed", type=int, default=0,
                        help="random seed (default 0)")
    parser.add_argument("--min-order", type=int, default=1)
    parser.add_argument("--max-order", type=int, default=5)
    parser.add_argument("--depth", type=int, default=6,
                        help="subdivision depth (default 6)")
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    rng = random.Random(args.seed)
    copositive = 0
    refuted = 0
    falsifier_hits = 0
    contradictions = 0
    start = time.monotonic()
    for k in range(args.count):
        n = rng.randint(args.min_order, args.max_order)
        A = random_symmetric(rng, n)
        verdict = is_copositive(A)
        point = subdivision_falsifier(A, args.depth)
        if verdict.copositive:
            copositive += 1
            if point is not None:
                contradictions += 1
                print(f"CONTRADICTION at instance {k}: "
                      f"falsifier point {point} on certified matrix "
                      f"{A.rows()}")
        else:
            refuted += 1
            assert eval_quadratic(A, verdict.violator) < 0
            if point is not None:
                falsifier_hits += 1
                assert eval_quadratic(A, point) < 0
    elapsed = time.monotonic() - start

    print(f"{args.count} matrices (orders {args.min_order}..{args.max_order}, "
          f"seed {args.seed}, depth {args.depth}) in {elapsed:.2f}s")
    print(f"  copositive:        {copositive}")
    print(f"  not copositive:    {refuted}")
    if refuted:
        rate = 100.0 * falsifier_hits / refuted
        print(f"  falsifier caught:  {falsifier_hits}/{refuted} ({rate:.1f}%)")
    print(f"  contradictions:    {contradictions}")
    return 1 if contradictions else 0


if __name__ == "__main__":
    raise SystemExit(main())
