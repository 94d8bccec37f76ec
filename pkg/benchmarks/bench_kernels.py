"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--max 2]

Times the raw kernels on one ideal, then the full H^1 oracle sweep over all
tuples with 0 <= a_i <= MAX, once per backend.
"""
import argparse
import itertools
import time

from tetrahedral import _kernels, _pykernels, takayama
from tetrahedral.monomial_ideal import max_exponents, tetra_ideal
from tetrahedral.tetra import normalize_star

try:
    from tetrahedral import _speedups
except ImportError:
    _speedups = None


def timed(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def sweep(max_a):
    for a in itertools.product(range(max_a + 1), repeat=6):
        if any(a):
            takayama.h1_table(tetra_ideal(normalize_star(a)[0]))


def use(backend):
    for name in ("delta_mask", "delta_masks_box", "enumerate_s"):
        setattr(_kernels, name, getattr(backend, name))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max", type=int, default=2)
    args = parser.parse_args()

    backends = [("python", _pykernels)]
    if _speedups is not None:
        backends.append(("cython", _speedups))
    else:
        print("compiled kernels not built; timing the fallback only")

    ideal = tetra_ideal((3, 2, 1, 2, 1, 3))
    gens = sorted(ideal.generators)
    lows, highs = [-1] * 4, [r - 1 for r in max_exponents(ideal)]
    results = {}
    for name, mod in backends:
        use(mod)
        results[name] = (
            timed(lambda: mod.delta_masks_box(gens, lows, highs)),
            timed(lambda: mod.enumerate_s((9, 2, 3, 1, 4, 9))),
            timed(lambda: sweep(args.max), repeat=1),
        )
    print(f"{'backend':<8} {'box scan':>10} {'enumerate S':>12} {f'sweep a_i<={args.max}':>14}")
    for name, (box, enum, full) in results.items():
        print(f"{name:<8} {box * 1e3:>8.2f}ms {enum * 1e3:>10.2f}ms {full:>13.2f}s")
    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        print("speedup  " + "  ".join(f"{p / c:>10.1f}x" for p, c in zip(py, cy)))


if __name__ == "__main__":
    main()
