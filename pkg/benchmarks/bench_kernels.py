"""Compare the compiled and pure-Python kernels.

Workloads are apartments of random line arrangements in the plane; topes
are collected from a dense grid of sample points, so the tope set is valid
(if not always complete) for any seed.

    python benchmarks/bench_kernels.py --lines 8 10 12 --repeat 3
"""
import argparse
import math
import random
import statistics
import time
from fractions import Fraction

from comtope import Arrangement, Hyperplane, SignSystem, TopeSet, kernels
from comtope.arrangement import arrangement_sign
from comtope.reconstruction import reconstruct_com


def random_tope_set(n_lines, seed, radius=1e-6):
    """Complete tope set of a random line arrangement in the plane.

    Every chamber of a non-parallel line arrangement has a vertex on its
    boundary, so probing each angular sector around each vertex finds them all.
    """
    rng = random.Random(seed)
    lines = []
    while len(lines) < n_lines:
        a, b = rng.randint(-6, 6), rng.randint(-6, 6)
        if a == 0 and b == 0:
            continue
        lines.append(Hyperplane((a, b), Fraction(rng.randint(-12, 12), 2), f"h{len(lines) + 1}"))
    arrangement = Arrangement(tuple(lines), 2)
    angles = sorted({math.atan2(-h.coeffs[0], h.coeffs[1]) % math.pi for h in lines})
    cuts = angles + [angles[0] + math.pi]
    probes = [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]
    probes += [p + math.pi for p in probes]
    topes = set()
    for i, g in enumerate(lines):
        for h in lines[i + 1:]:
            det = g.coeffs[0] * h.coeffs[1] - g.coeffs[1] * h.coeffs[0]
            if det == 0:
                continue
            vx = (g.offset * h.coeffs[1] - g.coeffs[1] * h.offset) / det
            vy = (g.coeffs[0] * h.offset - g.offset * h.coeffs[0]) / det
            for t in probes:
                p = (float(vx) + radius * math.cos(t), float(vy) + radius * math.sin(t))
                sign = arrangement_sign(arrangement, p, epsilon=1e-13)
                if 0 not in sign:
                    topes.add(sign)
    return TopeSet.from_system(SignSystem(arrangement.ground, tuple(topes)))


def timed(fn, repeat):
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), result


def run_backend(backend, fn, repeat):
    saved = kernels.backend
    kernels.backend = backend
    try:
        return timed(fn, repeat)
    finally:
        kernels.backend = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lines", type=int, nargs="+", default=[6, 8, 10, 12])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    backends = [kernels.python_backend]
    if kernels.compiled_backend is not None:
        backends.insert(0, kernels.compiled_backend)
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    header = f"{'lines':>5} {'topes':>6} {'covectors':>9} {'COM':>5} {'kernel':>12}"
    header += "".join(f" {b.NAME:>10}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for n in args.lines:
        topes = random_tope_set(n, args.seed)
        com = None
        cases = [("reconstruct", lambda: reconstruct_com(topes))]
        times = {}
        for name, fn in cases:
            row = []
            for b in backends:
                t, com = run_backend(b, fn, args.repeat)
                row.append(t)
            times[name] = row
        plus, minus = com.masks()
        se = [
            run_backend(b, lambda: b.first_elimination_violation(plus, minus), args.repeat)[0]
            for b in backends
        ]
        times["strong elim."] = se
        is_com = kernels.backend.first_elimination_violation(plus, minus) is None
        for name, row in times.items():
            line = f"{n:>5} {len(topes):>6} {len(com):>9} {is_com!s:>5} {name:>12}"
            line += "".join(f" {t * 1e3:>8.1f}ms" for t in row)
            if len(row) == 2:
                line += f" {row[1] / row[0]:>7.1f}x"
            print(line)


if __name__ == "__main__":
    main()
