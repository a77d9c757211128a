"""Compare the pure-Python and compiled normal-ordering kernels.

    python3 benchmarks/bench_kernel.py [--repeat 3]

Each workload is run on both backends; the script checks that the two
results are identical and prints the best wall time of each.
"""

import argparse
import time

from lieembed.algebra.kernel import CompiledKernel, PythonKernel
from lieembed.embedding import (AntiDeSitterImages, build_deformed, compute_casimir_c2,
                                verify_closure, verify_theorem41)
from lieembed.presets import PrimedCasimirs


def closure_all(kernel):
    out = []
    for p, q, sign in ((0, 2, 1), (0, 3, 1), (0, 3, -1), (1, 2, 1)):
        ctx = build_deformed(p, q, sign, kernel_class=kernel)
        out.append(verify_closure(ctx).to_text())
    return out


def casimir_square(kernel):
    ctx = build_deformed(0, 3, 1, kernel_class=kernel)
    c, _ = compute_casimir_c2(ctx)
    return (c * c).terms()


def quartic_casimir(kernel):
    ctx = build_deformed(0, 3, 1, kernel_class=kernel)
    c4 = AntiDeSitterImages(ctx).c4()
    return c4.power, c4.numerator.terms()


def convention_search(kernel):
    ctx = build_deformed(0, 3, 1, kernel_class=kernel)
    rep, _, _ = verify_theorem41(ctx, PrimedCasimirs.sign_corrected())
    return rep.to_text()


WORKLOADS = {"closure": closure_all, "casimir-square": casimir_square,
             "quartic-casimir": quartic_casimir, "convention-search": convention_search}


def best_time(fn, kernel, repeat):
    best, result = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(kernel)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", choices=sorted(WORKLOADS))
    args = ap.parse_args(argv)
    if CompiledKernel is None:
        print("compiled kernel not built; only the Python backend is timed")
    print(f"{'workload':<18}{'python (s)':>12}{'compiled (s)':>14}{'speedup':>10}  agree")
    for name, fn in WORKLOADS.items():
        if args.only and name != args.only:
            continue
        tp, rp = best_time(fn, PythonKernel, args.repeat)
        if CompiledKernel is None:
            print(f"{name:<18}{tp:>12.3f}{'-':>14}{'-':>10}  -")
            continue
        tc, rc = best_time(fn, CompiledKernel, args.repeat)
        print(f"{name:<18}{tp:>12.3f}{tc:>14.3f}{tp / tc:>9.2f}x  {rp == rc}")


if __name__ == "__main__":
    main()
