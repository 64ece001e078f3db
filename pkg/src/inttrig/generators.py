"""Seeded random generators for cones, angles, simplices and unimodular maps.

Shared by the property-test suites and the CLI's ``verify --random`` mode, so
reports are reproducible from a seed alone.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np

from .hnf_arctan import is_simple
from .lattice_invariants import Cone, Simplex, cone, simplex
from .trig2d import Angle2D, angle

__all__ = [
    "random_unimodular",
    "random_cone",
    "random_simple_cone",
    "random_nonsimple_cone3",
    "random_angle",
    "random_triangle",
    "random_rational",
    "random_unit_simplex",
]


def random_unimodular(rng: random.Random, n: int, steps: int = 10) -> np.ndarray:
    """Random element of GL(n, Z) as a short product of elementary matrices
    (shears, swaps, negations), so the determinant is +-1 without any search."""
    m = np.eye(n, dtype=object)
    for _ in range(rng.randint(1, steps)):
        kind = rng.randrange(3) if n > 1 else 2
        if kind == 0:
            i, j = rng.sample(range(n), 2)
            m[i] = m[i] + rng.choice([-3, -2, -1, 1, 2, 3]) * m[j]
        elif kind == 1:
            i, j = rng.sample(range(n), 2)
            m[[i, j]] = m[[j, i]]
        else:
            i = rng.randrange(n)
            m[i] = -m[i]
    return m


def _apply_map(m: np.ndarray, vec) -> tuple[int, ...]:
    return tuple(int(sum(m[r, c] * v for c, v in enumerate(vec))) for r in range(m.shape[0]))


def transform_cone(c: Cone, m: np.ndarray, shift=None) -> Cone:
    """Image of a cone under an affine map with linear part ``m``."""
    n = c.ambient_dim
    shift = tuple(shift) if shift is not None else tuple([0] * n)
    vertex = tuple(a + b for a, b in zip(_apply_map(m, c.vertex), shift))
    return cone([_apply_map(m, e) for e in c.edges], vertex)


def transform_angle(a: Angle2D, m: np.ndarray, shift=(0, 0)) -> Angle2D:
    vertex = tuple(x + b for x, b in zip(_apply_map(m, a.vertex), shift))
    return angle(_apply_map(m, a.first), _apply_map(m, a.second), vertex)


def random_cone(rng: random.Random, n: int, k: int, entry_bound: int = 50) -> Cone:
    """Random nondegenerate k-cone in R^n with edge entries in [-bound, bound]."""
    while True:
        edges = [
            tuple(rng.randint(-entry_bound, entry_bound) for _ in range(n))
            for _ in range(k)
        ]
        try:
            return cone(edges, tuple(rng.randint(-entry_bound, entry_bound) for _ in range(n)))
        except Exception:
            continue


def _coprime_residue(rng: random.Random, s: int) -> int:
    while True:
        c = rng.randrange(1, s)
        if math.gcd(c, s) == 1:
            return c


def random_simple_cone(
    rng: random.Random,
    k: int,
    sine_bound: int = 10**6,
    conjugate: bool = True,
    translate: bool = True,
) -> Cone:
    """Random simple k-cone with isin_k up to ``sine_bound``.

    Built from a normal form diag(1, ..., 1, s) whose last-column cosines are
    coprime to s: that coprimality is exactly what makes the diagonal shape
    simple (the (k-1)-subcone dropping edge i has sine gcd(cosine_i, s)).
    """
    s = rng.randint(2, sine_bound)
    grid = np.eye(k, dtype=object)
    for i in range(k - 1):
        grid[i, k - 1] = _coprime_residue(rng, s)
    grid[k - 1, k - 1] = s
    base = cone([tuple(int(x) for x in grid[:, j]) for j in range(k)])
    if not conjugate:
        return base
    m = random_unimodular(rng, k)
    shift = tuple(rng.randint(-20, 20) for _ in range(k)) if translate else None
    return transform_cone(base, m, shift)


def random_nonsimple_cone3(rng: random.Random, sine_bound: int = 60) -> Cone:
    """Random 3-cone whose middle sine exceeds 1 (hence not simple)."""
    s2 = rng.randint(2, 20)
    s3 = rng.randint(2, sine_bound)
    c12 = _coprime_residue(rng, s2)
    while True:
        c13 = rng.randrange(s3)
        c23 = rng.randrange(s3)
        if math.gcd(math.gcd(c13, c23), s3) == 1:
            break
    base = cone([(1, 0, 0), (c12, s2, 0), (c13, c23, s3)])
    m = random_unimodular(rng, 3)
    return transform_cone(base, m, tuple(rng.randint(-20, 20) for _ in range(3)))


def random_angle(rng: random.Random, sine_bound: int = 200, conjugate: bool = True) -> Angle2D:
    """Random non-trivial planar angle with isin up to ``sine_bound``."""
    s = rng.randint(1, sine_bound)
    if s == 1:
        base = angle((1, 0), (1, 1))
    else:
        base = angle((1, 0), (_coprime_residue(rng, s), s))
    if not conjugate:
        return base
    m = random_unimodular(rng, 2)
    shift = (rng.randint(-20, 20), rng.randint(-20, 20))
    return transform_angle(base, m, shift)


def random_triangle(rng: random.Random, coord_bound: int = 15) -> Simplex:
    while True:
        pts = [
            (rng.randint(-coord_bound, coord_bound), rng.randint(-coord_bound, coord_bound))
            for _ in range(3)
        ]
        try:
            return simplex(pts)
        except Exception:
            continue


def random_rational(rng: random.Random, den_bound: int = 500, num_bound: int | None = None) -> Fraction:
    den = rng.randint(1, den_bound)
    num_bound = num_bound if num_bound is not None else 3 * den_bound
    return Fraction(rng.randint(-num_bound, num_bound), den)


def random_unit_simplex(rng: random.Random, k: int = 3, coord_bound: int = 8) -> Simplex:
    """Rejection-sampled simplex with all edges of integer length 1 and simple
    cones at its first two vertices."""
    from .cone_ops import simplex_partner_check  # local: avoid import cycle
    from .errors import IntTrigError

    while True:
        pts = [
            tuple(rng.randint(-coord_bound, coord_bound) for _ in range(k))
            for _ in range(k + 1)
        ]
        try:
            s = simplex(pts)
            simplex_partner_check(s)  # validates unit edges + simplicity
        except IntTrigError:
            continue
        return s
