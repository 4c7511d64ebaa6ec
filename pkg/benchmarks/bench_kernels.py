"""Compare the compiled and pure-Python kernels.

Runs micro-benchmarks on the raw kernel functions and an end-to-end
master-equation workload, once per backend, and prints a table.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction


def load_backends():
    from gradedq import _kernel_py
    backends = [("python", _kernel_py)]
    try:
        from gradedq import _kernel_c
        backends.append(("c", _kernel_c))
    except ImportError:
        print("compiled kernel not built; benchmarking pure Python only")
    return backends


def make_poly_inputs(rng: random.Random, d: int = 4, terms: int = 12):
    def poly():
        out = {}
        for _ in range(terms):
            exp = tuple(rng.randint(0, 3) for _ in range(d))
            out[exp] = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 7))
        return out
    return [(poly(), poly()) for _ in range(40)]


def make_mono_inputs(rng: random.Random, n_gens: int = 12):
    parity = tuple(rng.randint(0, 1) for _ in range(n_gens))
    def mono():
        gens = sorted(rng.sample(range(n_gens), rng.randint(0, 6)))
        return tuple((g, 1 if parity[g] else rng.randint(1, 3)) for g in gens)
    return parity, [(mono(), mono()) for _ in range(200)]


def bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def master_workload(d: int, p: int):
    """End-to-end: (Theta_beta, Theta_beta) with a polynomial twist."""
    from gradedq import DiffForm, Poly, make_chart, master_equation, theta_vinogradov
    chart = make_chart("vinogradov", d, p)
    beta = DiffForm(d, p + 1)
    idx = tuple(range(1, p + 2))
    beta.add_term(idx, Poly.var(d, d) * Poly.var(d, d - 1) + Poly.const(d, 2))
    theta = theta_vinogradov(chart, beta)
    def run():
        master_equation(theta)
    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(42)
    poly_inputs = make_poly_inputs(rng)
    parity, mono_inputs = make_mono_inputs(rng)

    results: dict[str, dict[str, float]] = {}
    for name, impl in load_backends():
        res = {}
        res["poly_mul"] = bench(
            lambda: [impl.poly_mul(a, b) for a, b in poly_inputs], args.repeat)
        res["mono_mul"] = bench(
            lambda: [impl.mono_mul(a, b, parity) for a, b in mono_inputs],
            args.repeat)
        elems = [({m1: p1}, {m2: p2})
                 for (m1, m2), (p1, p2) in zip(mono_inputs, poly_inputs * 5)]
        res["element_mul"] = bench(
            lambda: [impl.element_mul(f, g, parity) for f, g in elems],
            args.repeat)
        results[name] = res

    # end-to-end runs swap the backend via the environment knob
    import os
    import subprocess
    import sys
    for name, _ in load_backends():
        code = ("from benchmarks.bench_kernels import master_workload, bench;"
                "print(bench(master_workload(6, 3), %d))" % args.repeat)
        out = subprocess.run(
            [sys.executable, "-c", code],
            env={**os.environ, "GRADEDQ_KERNEL": "py" if name == "python" else "c",
                 "PYTHONPATH": os.path.dirname(os.path.dirname(os.path.abspath(__file__)))},
            capture_output=True, text=True, check=True)
        results[name]["master_eq(6,3)"] = float(out.stdout.strip().splitlines()[-1])

    names = list(results)
    rows = sorted(results[names[0]])
    print(f"{'benchmark':<16}" + "".join(f"{n:>12}" for n in names) +
          ("     speedup" if len(names) == 2 else ""))
    for row in rows:
        line = f"{row:<16}" + "".join(f"{results[n][row] * 1e3:>10.2f}ms" for n in names)
        if len(names) == 2:
            line += f"{results['python'][row] / results['c'][row]:>10.2f}x"
        print(line)


if __name__ == "__main__":
    main()
