"""Independent oracles and instance generators for the test suite.

Nothing here calls into the reconstruction kernels: face sets come from
linear-programming feasibility over the arrangement itself, and the naive
reconstruction scans all of {-1, 0, 1}^E literally.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from comtope import Arrangement, Hyperplane, SignSystem

# Covector list printed for the worked apartment example (23 vectors).
PAPER_COVECTORS = {
    (1, -1, -1, -1, 1), (1, 0, -1, -1, 1), (1, 1, 0, -1, 1), (0, 1, 1, -1, 1),
    (-1, 1, 0, -1, 1), (1, 0, 0, -1, 1), (1, -1, 1, 0, 1), (1, 1, 1, -1, 1),
    (1, -1, 0, -1, 1), (0, 1, -1, -1, 1), (1, -1, 1, -1, 1), (1, 0, 1, -1, 1),
    (-1, 1, 1, -1, 1), (-1, 1, -1, -1, 0), (0, -1, -1, -1, 1), (0, 0, -1, -1, 1),
    (0, 1, 0, -1, 1), (1, -1, 1, 1, 1), (1, 1, -1, -1, 1), (-1, 0, -1, -1, 1),
    (-1, 1, -1, -1, -1), (-1, -1, -1, -1, 1), (-1, 1, -1, -1, 1),
}
PAPER_FORMS = [((0, 1), 0), ((1, -1), 0), ((1, 1), 1), ((0, 1), 3), ((0, 1), -2)]
PAPER_POINTS = [
    ("0", "4"), ("0", "1.5"), ("0", "0.5"), ("0.5", "0.2"), ("1", "0.2"),
    ("-1", "-0.2"), ("0", "-0.5"), ("1.5", "-0.2"), ("0", "-3"),
]

BOX = 1e4
SLACK_TOL = 1e-7


def naive_reconstruct(topes, opposite=True):
    """Literal scan of all 3^|E| candidates; test-only oracle."""
    members = set(map(tuple, topes))
    n = len(next(iter(members)))
    out = []
    for x in itertools.product((-1, 0, 1), repeat=n):
        ok = True
        for t in members:
            other = tuple(-a for a in t) if opposite else t
            if tuple(a if a else b for a, b in zip(x, other)) not in members:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def naive_covers(elements):
    """O(n^3) transitive reduction of the conformal order."""
    def lt(x, y):
        return x != y and all(a == 0 or a == b for a, b in zip(x, y))

    covers = set()
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            if lt(x, y) and not any(lt(x, z) and lt(z, y) for z in elements):
                covers.add((i, j))
    return covers


def _face_point(forms, signs):
    """Point maximizing the slack of the sign conditions, or None if infeasible.

    Variables are (x_1..x_n, t); maximize t subject to sign * (a.x - b) >= t on
    nonzero signs, a.x = b on zero signs, t <= 1, |x_i| <= BOX.
    """
    n = len(forms[0][0])
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for (coeffs, offset), s in zip(forms, signs):
        if s == 0:
            a_eq.append(list(coeffs) + [0.0])
            b_eq.append(offset)
        else:
            a_ub.append([-s * c for c in coeffs] + [1.0])
            b_ub.append(-s * offset)
    res = linprog(
        c=[0.0] * n + [-1.0],
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.array(b_eq) if b_eq else None,
        bounds=[(-BOX, BOX)] * n + [(None, 1.0)],
        method="highs",
    )
    if res.status != 0:
        return None
    if a_ub and -res.fun <= SLACK_TOL:
        return None
    return res.x[:n]


def enumerate_faces(arrangement, fixed=None):
    """Sign vectors of all faces of ``arrangement``, optionally inside the
    open region where coordinate ``i`` has sign ``fixed[i]``.

    Refines hyperplane by hyperplane; returns {sign vector: sample point}.
    """
    forms = [
        ([float(c) for c in h.coeffs], float(h.offset)) for h in arrangement.hyperplanes
    ]
    fixed = fixed or {}
    order = sorted(range(len(forms)), key=lambda i: i not in fixed)
    faces = {(): None}
    used = []
    for idx in order:
        used.append(idx)
        sub = [forms[i] for i in used]
        choices = (fixed[idx],) if idx in fixed else (-1, 0, 1)
        refined = {}
        for partial in faces:
            for s in choices:
                signs = partial + (s,)
                point = _face_point(sub, signs)
                if point is not None:
                    refined[signs] = point
        faces = refined
    out = {}
    for signs, point in faces.items():
        vec = [0] * len(forms)
        for i, s in zip(order, signs):
            vec[i] = s
        out[tuple(vec)] = point
    return out


def exact_point(arrangement, point, target):
    """Rationalize an LP point and confirm its exact sign vector."""
    for denom in (10**4, 10**6, 10**9):
        cand = tuple(Fraction(float(c)).limit_denominator(denom) for c in point)
        signs = tuple(
            (v > 0) - (v < 0)
            for v in (
                sum(a * x for a, x in zip(h.coeffs, cand)) - h.offset
                for h in arrangement.hyperplanes
            )
        )
        if signs == target:
            return cand
    return None


@dataclass
class Instance:
    arrangement: Arrangement
    points: list          # exact chamber sample points, one per chamber
    faces: SignSystem     # geometric face sign vectors inside the apartment
    walls: dict           # hyperplane index -> fixed sign defining the apartment
    central: bool


def _random_rational(rng, lo=-4, hi=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, 3))


def random_arrangement(rng, n, m, central=False):
    hyperplanes = []
    while len(hyperplanes) < m:
        coeffs = tuple(_random_rational(rng) for _ in range(n))
        if all(c == 0 for c in coeffs):
            continue
        offset = Fraction(0) if central else _random_rational(rng)
        hyperplanes.append(Hyperplane(coeffs, offset, f"h{len(hyperplanes) + 1}"))
    return Arrangement(tuple(hyperplanes), n)


def random_instance(rng, n=None, m=None, central=False, walls=None):
    """Random apartment: a chamber of a few 'wall' hyperplanes, with every
    face of the full arrangement inside it and one exact point per chamber."""
    n = n or rng.choice((2, 3))
    m = m or rng.choice((1, 2, 3, 4, 4, 5, 5, 6, 6, 6))
    arrangement = random_arrangement(rng, n, m, central)
    if walls is None:
        walls = 0 if central else rng.choice((0, 0, 1, 2))
    fixed = {}
    if walls:
        wall_idx = rng.sample(range(m), min(walls, m))
        wall_arr = Arrangement(tuple(arrangement.hyperplanes[i] for i in wall_idx), n)
        chambers = [v for v in enumerate_faces(wall_arr) if 0 not in v]
        chosen = rng.choice(sorted(chambers))
        fixed = dict(zip(wall_idx, chosen))
    faces = enumerate_faces(arrangement, fixed)
    points = []
    for vec, point in sorted(faces.items()):
        if 0 in vec:
            continue
        exact = exact_point(arrangement, point, vec)
        assert exact is not None, f"could not certify a chamber point for {vec}"
        points.append(exact)
    system = SignSystem(arrangement.ground, tuple(faces))
    return Instance(arrangement, points, system, fixed, central)


def instance_pool(seed, count, central=False):
    rng = random.Random(seed)
    return [random_instance(rng, central=central) for _ in range(count)]
