"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R]
"""

import argparse
import random
import timeit

from arspace import _pykernels

try:
    from arspace import _ckernels
except ImportError:
    _ckernels = None


def _matrix(rng, n):
    # shaped like a hom system: each row equates two unknowns up to sign
    rows = []
    for _ in range(n):
        row = [0] * n
        a, b = rng.sample(range(n), 2)
        row[a], row[b] = 1, rng.choice((-1, 1))
        rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    rng = random.Random(0)
    mats = [_matrix(rng, args.size) for _ in range(8)]
    w = [rng.randint(0, 1) for _ in range(args.size)]
    v = [rng.randint(0, 1) for _ in range(args.size)]
    arrows = [rng.choice((-1, 1)) for _ in range(args.size - 1)]

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    ranks = {name: [k.int_rank(m, args.size) for m in mats] for name, k in backends}
    if len({tuple(r) for r in ranks.values()}) != 1:
        raise SystemExit("backends disagree on int_rank: %s" % ranks)

    for name, k in backends:
        t_rank = timeit.timeit(lambda: [k.int_rank(m, args.size) for m in mats], number=args.repeat)
        t_euler = timeit.timeit(lambda: k.euler_form(w, v, arrows), number=args.repeat * 100)
        print("%-7s int_rank %8.2f us/matrix   euler_form %6.2f us/call" % (
            name, 1e6 * t_rank / (args.repeat * len(mats)), 1e6 * t_euler / (args.repeat * 100)))


if __name__ == "__main__":
    main()
