"""Compare the compiled and pure-Python window-extremum kernels.

    python benchmarks/bench_kernels.py [--impulses N] [--durations M] [--repeat R]

Builds one scaled instance (N impulses, M mask lengths), checks both
backends agree, and reports the best of R runs for each plus an
end-to-end interval-transformation graph.
"""

import argparse
from itertools import accumulate
import random
import time

from shirac import hyperperiod, interference, offset, periodic_train, transform_graph
from shirac import kernels
from shirac._pykernels import extremum_scan as py_scan


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--impulses", type=int, default=5000)
    ap.add_argument("--durations", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    pos = sorted(rng.sample(range(10 * args.impulses), args.impulses))
    csum = [0] + list(accumulate(rng.randint(0, 9) for _ in pos))
    ds = sorted(rng.randint(0, pos[-1] // 4) for _ in range(args.durations))
    w1, w2 = pos[0], pos[-1] // 2
    flags = (True, True, False, True)

    print(f"kernel: {args.impulses} impulses x {args.durations} durations, "
          f"best of {args.repeat}")
    t_py = best_of(args.repeat, lambda: py_scan(pos, csum, w1, w2, ds, *flags))
    print(f"  python  {t_py:8.3f} s")
    if kernels._ckernels is None:
        print("  cython  not built (pip install -e . --no-build-isolation)")
        return
    want = py_scan(pos, csum, w1, w2, ds, *flags)
    got = kernels.extremum_scan(pos, csum, w1, w2, ds, *flags, backend="cython")
    assert tuple(map(list, got)) == tuple(map(list, want)), "backends disagree"
    t_c = best_of(args.repeat, lambda: kernels.extremum_scan(pos, csum, w1, w2, ds, *flags,
                                                              backend="cython"))
    print(f"  cython  {t_c:8.3f} s   ({t_py / t_c:.1f}x)")

    x = (interference(periodic_train(3, (2, 1, 4)))
         + offset(interference(periodic_train(5, (3, 1))), 1)
         + offset(interference(periodic_train(7)), 2))
    period = hyperperiod(x)
    window = (0, period)
    print(f"graph over one hyperperiod ({period}) of three periodic streams")
    for backend in ("python", "cython"):
        t = best_of(args.repeat, lambda: transform_graph(x, window, backend=backend))
        print(f"  {backend:7s} {t:8.3f} s")


if __name__ == "__main__":
    main()
