"""Index-based invariants of lattice geometry.

Integer lengths, integer areas and volumes, integer sines of cones, and the
classical planar checks (sine rule, Pick's formula).  All values are indices
of sublattices and therefore invariant under unimodular affine maps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .core_arith import determinantal_divisor, intmat, mat_from_columns
from .errors import (
    Collinear,
    Degenerate,
    DegenerateCone,
    DegenerateSegment,
    RankDeficient,
    ZeroVector,
)

__all__ = [
    "Point",
    "Simplex",
    "Cone",
    "simplex",
    "triangle",
    "cone",
    "primitive",
    "integer_length",
    "integer_area_triangle",
    "integer_volume",
    "integer_sine",
    "sine_rule_check",
    "pick_check",
]

Point = tuple[int, ...]


def _point(p: Iterable[int]) -> Point:
    t = tuple(int(x) for x in p)
    if not t:
        raise ValueError("points need dimension >= 1")
    return t


def _sub(a: Point, b: Point) -> Point:
    if len(a) != len(b):
        raise ValueError("dimension mismatch")
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class Simplex:
    """Ordered integer simplex ``A_0 A_1 ... A_k`` in R^n (k <= n)."""

    vertices: tuple[Point, ...]

    @property
    def order(self) -> int:
        return len(self.vertices) - 1

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def edge_vectors(self) -> list[Point]:
        a0 = self.vertices[0]
        return [_sub(v, a0) for v in self.vertices[1:]]


@dataclass(frozen=True)
class Cone:
    """Ordered simplicial cone: integer vertex plus independent integer edges."""

    vertex: Point
    edges: tuple[Point, ...]

    @property
    def k(self) -> int:
        return len(self.edges)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertex)

    def edge_matrix(self) -> np.ndarray:
        """n x k exact matrix whose columns are the ordered edges."""
        return mat_from_columns(self.edges)


def _full_column_rank(columns: Sequence[Point]) -> bool:
    m = mat_from_columns(columns)
    try:
        determinantal_divisor(m, len(columns))
    except RankDeficient:
        return False
    except ValueError:
        return False
    return True


def simplex(points: Iterable[Iterable[int]]) -> Simplex:
    """Validated simplex; raises ``Degenerate`` on dependent edge vectors."""
    verts = tuple(_point(p) for p in points)
    if len(verts) < 2:
        raise Degenerate("a simplex needs at least two vertices")
    n = len(verts[0])
    if any(len(v) != n for v in verts):
        raise Degenerate("vertices of mixed dimension")
    if len(verts) - 1 > n:
        raise Degenerate("more edge vectors than the ambient dimension")
    s = Simplex(verts)
    if not _full_column_rank(s.edge_vectors()):
        raise Degenerate("edge vectors are linearly dependent")
    return s


def triangle(a: Iterable[int], b: Iterable[int], c: Iterable[int]) -> Simplex:
    """Nondegenerate planar triangle as a simplex."""
    t = simplex([a, b, c])
    if t.ambient_dim != 2:
        raise Degenerate("triangle checks are planar")
    return t


def cone(edges: Iterable[Iterable[int]], vertex: Iterable[int] | None = None) -> Cone:
    """Validated ordered cone; raises ``DegenerateCone`` on dependent edges."""
    edge_list = [_point(e) for e in edges]
    if not edge_list:
        raise DegenerateCone("a cone needs at least one edge")
    n = len(edge_list[0])
    if any(len(e) != n for e in edge_list):
        raise DegenerateCone("edges of mixed dimension")
    if len(edge_list) > n:
        raise DegenerateCone("more edges than the ambient dimension")
    if any(all(x == 0 for x in e) for e in edge_list):
        raise DegenerateCone("zero edge vector")
    v = _point(vertex) if vertex is not None else tuple([0] * n)
    if len(v) != n:
        raise DegenerateCone("vertex dimension differs from edges")
    if not _full_column_rank(edge_list):
        raise DegenerateCone("edges are linearly dependent")
    return Cone(v, tuple(edge_list))


def primitive(v: Iterable[int]) -> tuple[Point, int]:
    """Primitive direction and integer length of a nonzero vector.

    Returns ``(unit, length)`` with ``v == length * unit`` and the coordinate
    gcd of ``unit`` equal to 1.
    """
    vec = _point(v)
    g = math.gcd(*vec) if len(vec) > 1 else abs(vec[0])
    if g == 0:
        raise ZeroVector("zero vector has no primitive direction")
    return tuple(x // g for x in vec), g


def integer_length(a: Iterable[int], b: Iterable[int]) -> int:
    """Integer length of segment ``ab``: lattice points on it, minus one."""
    pa, pb = _point(a), _point(b)
    d = _sub(pb, pa)
    if all(x == 0 for x in d):
        raise DegenerateSegment("segment endpoints coincide")
    return primitive(d)[1]


def integer_area_triangle(a: Iterable[int], b: Iterable[int], c: Iterable[int]) -> int:
    """Integer area |det(AB, BC)| of a planar triangle (twice Euclidean)."""
    pa, pb, pc = _point(a), _point(b), _point(c)
    if not len(pa) == len(pb) == len(pc) == 2:
        raise ValueError("integer_area_triangle is planar")
    (ux, uy), (wx, wy) = _sub(pb, pa), _sub(pc, pb)
    d = ux * wy - uy * wx
    if d == 0:
        raise Collinear("triangle vertices are collinear")
    return abs(d)


def integer_volume(s: Simplex) -> int:
    """Index of the edge lattice inside the primitive lattice of its span."""
    m = mat_from_columns(s.edge_vectors())
    try:
        return determinantal_divisor(m, s.order)
    except RankDeficient:
        raise Degenerate("degenerate simplex") from None


def integer_sine(c: Cone) -> int:
    """Index of the lattice of integer points on the edges of ``c``.

    Edges are replaced by their primitive directions first; 1-cones have
    integer sine 1 by convention.
    """
    units = [primitive(e)[0] for e in c.edges]
    if c.k == 1:
        return 1
    m = mat_from_columns(units)
    try:
        return determinantal_divisor(m, c.k)
    except RankDeficient:
        raise DegenerateCone("degenerate cone") from None


def sine_rule_check(s: Simplex) -> bool:
    """Exact integer sine rule on a triangle.

    Verifies isin(ABC)/il(AC) = isin(BCA)/il(AB) = isin(CAB)/il(BC)
    = is(ABC)/(il(AB) il(AC) il(BC)).
    """
    if s.order != 2 or s.ambient_dim != 2:
        raise ValueError("sine rule check needs a planar triangle")
    a, b, c = s.vertices
    area = integer_area_triangle(a, b, c)
    il_ab = integer_length(a, b)
    il_ac = integer_length(a, c)
    il_bc = integer_length(b, c)
    sin_b = integer_sine(cone([_sub(a, b), _sub(c, b)]))
    sin_c = integer_sine(cone([_sub(b, c), _sub(a, c)]))
    sin_a = integer_sine(cone([_sub(c, a), _sub(b, a)]))
    common = Fraction(area, il_ab * il_ac * il_bc)
    return (
        Fraction(sin_b, il_ac) == common
        and Fraction(sin_c, il_ab) == common
        and Fraction(sin_a, il_bc) == common
    )


def pick_check(t: Simplex, max_box_points: int = 10**6) -> bool:
    """Brute-force check of Pick's formula S = I + E/2 - 1 on a triangle."""
    if t.order != 2 or t.ambient_dim != 2:
        raise ValueError("pick_check needs a planar triangle")
    a, b, c = t.vertices
    area2 = integer_area_triangle(a, b, c)
    # orient counterclockwise so "inside" means all cross products positive
    (ux, uy), (wx, wy) = _sub(b, a), _sub(c, a)
    if ux * wy - uy * wx < 0:
        b, c = c, b
    xs = [a[0], b[0], c[0]]
    ys = [a[1], b[1], c[1]]
    width = max(xs) - min(xs) + 1
    height = max(ys) - min(ys) + 1
    if width * height > max_box_points:
        raise ValueError("bounding box too large for brute-force counting")
    interior = boundary = 0
    verts = (a, b, c)
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            sides = []
            for i in range(3):
                px, py = verts[i]
                qx, qy = verts[(i + 1) % 3]
                sides.append((qx - px) * (y - py) - (qy - py) * (x - px))
            if all(s > 0 for s in sides):
                interior += 1
            elif all(s >= 0 for s in sides):
                boundary += 1
    return Fraction(area2, 2) == interior + Fraction(boundary, 2) - 1
