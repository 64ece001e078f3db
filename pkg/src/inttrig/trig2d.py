"""Complete planar integer trigonometry.

Sails of rational angles, their LLS sequences, tangent/sine/cosine, transpose
and adjacent angles, angle summation, the triangle criterion, strong best
approximations of rationals, and the reduction step that walks an angle down
its strong-best-approximation chain.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core_arith import (
    ProjRat,
    adjugate,
    cf_convergents,
    cf_eval,
    cf_expand,
    det,
)
from .errors import (
    BranchAmbiguity,
    NonPositive,
    NonPositiveTangent,
    NoReduction,
    StraightAngle,
    TrivialAngle,
)
from .hnf_arctan import ArctanForm, arctan_form
from .lattice_invariants import Cone, cone, integer_length, integer_sine, primitive

__all__ = [
    "Angle2D",
    "AngleSumResult",
    "TriangleResult",
    "angle",
    "angle_congruent",
    "angle_from_lls",
    "iarctan2",
    "sail",
    "lls",
    "itan2",
    "isin2",
    "icos2",
    "transpose2",
    "adjacent2",
    "angle_sum",
    "bracket_eval",
    "triangle_exists",
    "sba_classical",
    "sba_oracle",
    "sba_step",
    "is_right_angle2",
]


@dataclass(frozen=True)
class Angle2D:
    """Ordered rational angle in the plane.

    ``trivial`` marks the zero angle (coincident edge rays); a trivial angle
    is not a simplicial cone, so geometric operations reject it.
    """

    vertex: tuple[int, int]
    first: tuple[int, int]
    second: tuple[int, int]
    trivial: bool

    @property
    def cone(self) -> Cone:
        if self.trivial:
            raise TrivialAngle("the zero angle spans no cone")
        return cone([self.first, self.second], self.vertex)


def angle(first: Iterable[int], second: Iterable[int],
          vertex: Iterable[int] = (0, 0)) -> Angle2D:
    """Angle from two edge vectors; coincident rays give the trivial angle."""
    e1 = tuple(int(x) for x in first)
    e2 = tuple(int(x) for x in second)
    v = tuple(int(x) for x in vertex)
    if len(e1) != 2 or len(e2) != 2 or len(v) != 2:
        raise ValueError("angles are planar")
    p1, _ = primitive(e1)
    p2, _ = primitive(e2)
    if p1 == p2:
        return Angle2D(v, e1, e2, trivial=True)
    if p1 == tuple(-x for x in p2):
        raise StraightAngle("edge rays are opposite")
    return Angle2D(v, e1, e2, trivial=False)


def iarctan2(q: Fraction | int | str) -> Angle2D:
    """Integer arctangent of a positive rational.

    For q = m/n >= 1 this is the angle at the origin with edges through
    (1, 0) and (n, m).  Rationals in (0, 1) are accepted too and mapped to
    the congruent representative with tangent >= 1.
    """
    q = Fraction(q)
    if q <= 0:
        raise NonPositive(f"iarctan2 needs q > 0, got {q}")
    m, n = q.numerator, q.denominator
    if m >= n:
        return angle((1, 0), (n, m))
    s, c = m, n % m
    if s == 1:
        return angle((1, 0), (1, 1))
    return angle((1, 0), (c, s))


def _form(a: Angle2D) -> ArctanForm:
    if a.trivial:
        raise TrivialAngle("trivial angle has no normal form")
    return arctan_form(a.cone)


def _grid_entries(a: Angle2D) -> tuple[int, int]:
    """(icos, isin) grid entries a_{1,2}, a_{2,2} of the angle's normal form."""
    g = _form(a).grid
    return int(g[0, 1]), int(g[1, 1])


def angle_congruent(a: Angle2D, b: Angle2D) -> bool:
    if a.trivial or b.trivial:
        return a.trivial and b.trivial
    return _grid_entries(a) == _grid_entries(b)


def isin2(a: Angle2D) -> int:
    """Integer sine; 0 for the trivial angle."""
    if a.trivial:
        return 0
    return _grid_entries(a)[1]


def icos2(a: Angle2D) -> int:
    """Integer cosine; 1 for the trivial angle.

    For angles congruent to iarctan 1 the Hermite form is the identity but
    sine, cosine and tangent all equal 1.
    """
    if a.trivial:
        return 1
    c, s = _grid_entries(a)
    return 1 if s == 1 else c


def itan2(a: Angle2D) -> Fraction:
    """Integer tangent; 0 for the trivial angle."""
    if a.trivial:
        return Fraction(0)
    c, s = _grid_entries(a)
    return Fraction(1) if s == 1 else Fraction(s, c)


def sail(a: Angle2D) -> list[tuple[int, int]]:
    """Vertices of the sail, from the first edge's primitive point to the
    second's.

    Computed in canonical coordinates from the even-indexed convergents of
    the odd continued fraction of the tangent, then carried back through the
    inverse of the normalising transform.
    """
    f = _form(a)
    c, s = int(f.grid[0, 1]), int(f.grid[1, 1])
    if s == 1:
        canonical = [(1, 0), (0, 1)]
    else:
        conv = cf_convergents(cf_expand(Fraction(s, c), "odd"))
        canonical = [(1, 0)] + [(qd, pn) for pn, qd in conv[0::2]]
    u_inv = adjugate(f.transform) * det(f.transform)
    vx, vy = a.vertex
    out = []
    for x, y in canonical:
        px = int(u_inv[0, 0]) * x + int(u_inv[0, 1]) * y + vx
        py = int(u_inv[1, 0]) * x + int(u_inv[1, 1]) * y + vy
        out.append((px, py))
    return out


def lls(a: Angle2D) -> tuple[int, ...]:
    """Lattice length sine sequence, read off the sail geometrically.

    Odd position 2k holds the integer length of the k-th sail segment, even
    position 2k-1 the integer sine at the k-th sail vertex; the value of the
    sequence as a continued fraction is the integer tangent.
    """
    pts = sail(a)
    out: list[int] = []
    for i in range(len(pts) - 1):
        if i > 0:
            prev_dir = tuple(p - q for p, q in zip(pts[i - 1], pts[i]))
            next_dir = tuple(p - q for p, q in zip(pts[i + 1], pts[i]))
            out.append(integer_sine(cone([prev_dir, next_dir], pts[i])))
        out.append(integer_length(pts[i], pts[i + 1]))
    return tuple(out)


def angle_from_lls(seq: Sequence[int]) -> Angle2D:
    """Angle whose LLS sequence is the given odd, positive sequence."""
    elems = [int(x) for x in seq]
    if len(elems) % 2 != 1 or any(x < 1 for x in elems):
        raise ValueError("an LLS sequence is odd-length with entries >= 1")
    return iarctan2(cf_eval(elems).as_fraction())


def transpose2(a: Angle2D) -> Angle2D:
    """Transpose angle: the same rays with the edge order swapped."""
    if a.trivial:
        raise TrivialAngle("transpose of the trivial angle is undefined")
    return Angle2D(a.vertex, a.second, a.first, trivial=False)


def adjacent2(a: Angle2D) -> Angle2D:
    """Adjacent angle: first edge becomes the old second, second the negated
    old first (the classical supplement pi - alpha)."""
    if a.trivial:
        raise TrivialAngle("adjacent of the trivial angle is undefined")
    return angle(a.second, tuple(-x for x in a.first), a.vertex)


@dataclass(frozen=True)
class AngleSumResult:
    """Concatenated LLS data of an angle sum.

    ``angle`` is a congruence representative when the sequence evaluates to a
    positive finite tangent, else None (straight or re-entrant sums)."""

    sequence: tuple[int, ...]
    value: ProjRat
    angle: Angle2D | None


def angle_sum(a: Angle2D, b: Angle2D, s: int) -> AngleSumResult:
    """Sum of two angles with joining parameter ``s``.

    The raw sequence ``lls(a) + (s,) + lls(b)`` is always returned; a
    geometric representative exists only when its continued-fraction value is
    finite and positive.
    """
    seq = lls(a) + (int(s),) + lls(b)
    value = cf_eval(seq)
    geo = None
    if not value.is_infinite and value.as_fraction() > 0:
        geo = iarctan2(value.as_fraction())
    return AngleSumResult(seq, value, geo)


def bracket_eval(tangents: Sequence[Fraction | int | str],
                 separators: Sequence[int]) -> ProjRat:
    """Evaluate ]q_1 : m_1 : q_2 : ... : q_k[ by splicing the odd regular
    expansions of the tangents with the separators."""
    tans = [Fraction(t) for t in tangents]
    seps = [int(m) for m in separators]
    if len(seps) != len(tans) - 1 or not tans:
        raise ValueError("need one separator between consecutive tangents")
    seq: list[int] = []
    for i, t in enumerate(tans):
        if t < 1:
            raise NonPositiveTangent(
                f"{t} has no odd regular expansion with positive entries"
            )
        seq.extend(cf_expand(t, "odd"))
        if i < len(seps):
            seq.append(seps[i])
    return cf_eval(seq)


@dataclass(frozen=True)
class TriangleResult:
    exists: bool
    ordering: tuple[int, int, int] | None
    bracket_full: ProjRat
    bracket_pair: ProjRat


def _bracket_pair_outside(pair: ProjRat, tan_alpha: Fraction) -> bool:
    # extended-rational interval test: infinity lies outside every [0, t]
    if pair.is_infinite:
        return True
    v = pair.as_fraction()
    return v < 0 or v > tan_alpha


def triangle_exists(a: Angle2D, b: Angle2D, c: Angle2D) -> TriangleResult:
    """Criterion for three angles to be the angles of an integer triangle.

    Some ordering (alpha, beta, gamma) must satisfy both
    ]tan a : -1 : tan b : -1 : tan c[ = 0  and
    ]tan a : -1 : tan b[ outside [0, tan a]; the first such ordering is
    returned together with its two bracket values.
    """
    angles = (a, b, c)
    if any(x.trivial for x in angles):
        raise TrivialAngle("triangle angles must be non-trivial")
    tans = [itan2(x) for x in angles]
    first_vals: tuple[ProjRat, ProjRat] | None = None
    for perm in itertools.permutations(range(3)):
        ta, tb, tc = (tans[i] for i in perm)
        full = bracket_eval([ta, tb, tc], [-1, -1])
        pair = bracket_eval([ta, tb], [-1])
        if first_vals is None:
            first_vals = (full, pair)
        if full == ProjRat(0, 1) and _bracket_pair_outside(pair, ta):
            return TriangleResult(True, perm, full, pair)
    assert first_vals is not None
    return TriangleResult(False, None, first_vals[0], first_vals[1])


def sba_classical(q: Fraction | int | str) -> list[Fraction]:
    """Strong best approximations of a rational via continued-fraction
    prefixes.

    Uses the regular expansion whose last element exceeds 1.  The integer
    prefix is dropped whenever the fractional part of q is >= 1/2: at
    denominator 1 the next integer then approximates at least as well, so
    floor(q) is not a strong best approximation (equality is the classical
    half-integer tie)."""
    q = Fraction(q)
    seq: list[int] = []
    num, den = q.numerator, q.denominator
    while True:
        a = num // den
        seq.append(a)
        num -= a * den
        if num == 0:
            break
        num, den = den, num
    vals = [Fraction(p, d) for p, d in cf_convergents(seq)]
    if q - (q.numerator // q.denominator) >= Fraction(1, 2):
        vals = vals[1:]
    return vals


def sba_oracle(q: Fraction | int | str) -> list[Fraction]:
    """Strong best approximations by brute force over denominators.

    Denominator d qualifies when its best |d q - p| strictly beats every
    smaller denominator's best error; an exact tie between two p's
    disqualifies d but still bounds later denominators."""
    q = Fraction(q)
    out: list[Fraction] = []
    best: Fraction | None = None
    for d in range(1, q.denominator + 1):
        t = q * d
        fl = t.numerator // t.denominator
        frac = t - fl
        if frac == Fraction(1, 2):
            err = Fraction(1, 2)
            p = None
        else:
            p = fl if frac < Fraction(1, 2) else fl + 1
            err = abs(t - p)
        if (best is None or err < best) and p is not None:
            out.append(Fraction(p, d))
        if best is None or err < best:
            best = err
    return out


def _canonical_angle_from_grid(c: int, s: int) -> Angle2D:
    if s == 1:
        return angle((1, 0), (1, 1))
    return angle((1, 0), (c, s))


def _reduce_once(a: Angle2D) -> Angle2D:
    """Euclidean reduction E_1 on the class level: swap cosine and sine in
    the normal form, then renormalise."""
    c, s = _grid_entries(a)
    return _canonical_angle_from_grid(s % c, c)


def sba_step(a: Angle2D) -> Angle2D:
    """One step down the strong-best-approximation chain of an angle.

    Exactly one of the transpose or the adjacent angle admits a shortening
    Euclidean reduction; the result's tangent is the previous strong best
    approximation of the angle's tangent."""
    if a.trivial:
        raise TrivialAngle("cannot reduce the trivial angle")
    _, s = _grid_entries(a)
    if s == 1:
        raise NoReduction("integer tangent 1 admits no reduction")
    tr = transpose2(a)
    adj = adjacent2(a)
    c_tr, s_tr = _grid_entries(tr)
    c_adj, s_adj = _grid_entries(adj)
    chi_tr = s_tr // c_tr
    chi_adj = s_adj // c_adj
    if (chi_tr > 1) == (chi_adj > 1):
        raise BranchAmbiguity(
            f"chi(transpose)={chi_tr}, chi(adjacent)={chi_adj} for tangent {itan2(a)}"
        )
    if chi_tr > 1:
        return adjacent2(_reduce_once(tr))
    return transpose2(_reduce_once(adj))


def is_right_angle2(a: Angle2D) -> bool:
    """Right angle: congruent to both its transpose and its adjacent angle
    (exactly the classes of iarctan 1 and iarctan 2)."""
    if a.trivial:
        raise TrivialAngle("the trivial angle is not an angle class")
    return angle_congruent(a, transpose2(a)) and angle_congruent(a, adjacent2(a))
