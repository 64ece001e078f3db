"""Exact integer kernels shared by every other module.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so all
arithmetic is arbitrary precision; nothing here touches floating point.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import NotInvertible, NotSquare, RankDeficient

__all__ = [
    "intmat",
    "mat_from_columns",
    "identity_mat",
    "gcd_ext",
    "mod_inverse",
    "det",
    "adjugate",
    "determinantal_divisor",
    "ProjRat",
    "cf_eval",
    "cf_expand",
    "cf_convergents",
]


def intmat(rows: Iterable[Iterable[int]]) -> np.ndarray:
    """Build an exact integer matrix (``dtype=object``) from nested iterables."""
    data = [[int(x) for x in row] for row in rows]
    if not data or not data[0]:
        raise ValueError("matrix needs at least one row and one column")
    width = len(data[0])
    if any(len(row) != width for row in data):
        raise ValueError("ragged rows")
    return np.array(data, dtype=object)


def mat_from_columns(cols: Iterable[Iterable[int]]) -> np.ndarray:
    """Matrix whose columns are the given vectors."""
    return intmat(cols).T.copy()


def identity_mat(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def gcd_ext(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``.

    ``gcd_ext(0, 0)`` is ``(0, 0, 0)``.
    """
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        return 0, 0, 0
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """Inverse of ``a`` modulo ``m``, in ``[0, m)``; ``m == 1`` gives 0."""
    m = int(m)
    if m < 1:
        raise ValueError("modulus must be >= 1")
    g, x, _ = gcd_ext(int(a) % m, m)
    if g != 1:
        raise NotInvertible(f"gcd({a}, {m}) = {g}")
    return x % m


def det(m: np.ndarray | Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss (fraction-free) elimination."""
    a = [[int(x) for x in row] for row in np.asarray(m, dtype=object)]
    n = len(a)
    if any(len(row) != n for row in a):
        raise NotSquare(f"{len(a)} rows, {len(a[0])} columns")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # division is exact: Bareiss one-step identity
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(m: np.ndarray) -> np.ndarray:
    """Adjugate matrix: ``adjugate(M) @ M == det(M) * I``, all entries exact."""
    a = np.asarray(m, dtype=object)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise NotSquare(f"shape {a.shape}")
    if n == 1:
        return np.array([[1]], dtype=object)
    out = np.empty((n, n), dtype=object)
    rows = list(range(n))
    cols = list(range(n))
    for i in range(n):
        for j in range(n):
            minor = a[np.ix_([r for r in rows if r != j], [c for c in cols if c != i])]
            out[i, j] = (-1) ** (i + j) * det(minor)
    return out


def determinantal_divisor(m: np.ndarray | Sequence[Sequence[int]], k: int) -> int:
    """gcd of the absolute values of all ``k x k`` minors.

    For an integer matrix of full column rank ``k`` this equals the index of
    the column lattice inside the primitive lattice of its span (the product
    of the invariant factors).
    """
    a = np.asarray(m, dtype=object)
    rows, cols = a.shape
    if not 1 <= k <= min(rows, cols):
        raise ValueError(f"k={k} out of range for shape {a.shape}")
    g = 0
    for rsel in itertools.combinations(range(rows), k):
        for csel in itertools.combinations(range(cols), k):
            g = math.gcd(g, det(a[np.ix_(rsel, csel)]))
            if g == 1:
                return 1
    if g == 0:
        raise RankDeficient(f"all {k}x{k} minors vanish")
    return g


class ProjRat:
    """Rational value up to positive scaling; ``(1, 0)`` is infinity.

    Stored normalised: ``gcd(|p|, q) == 1``, ``q >= 0``, and ``p == 1`` when
    ``q == 0``.  Instances are immutable and hashable.
    """

    __slots__ = ("p", "q")

    def __init__(self, p: int, q: int):
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise ValueError("projective value (0, 0) is undefined")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    def __setattr__(self, name, value):  # pragma: no cover - defensive
        raise AttributeError("ProjRat is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q == 0:
            raise ValueError("infinite projective value")
        return Fraction(self.p, self.q)

    @classmethod
    def from_fraction(cls, f: Fraction | int) -> "ProjRat":
        f = Fraction(f)
        return cls(f.numerator, f.denominator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjRat):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __repr__(self) -> str:
        return f"ProjRat({self.p}, {self.q})"

    def __str__(self) -> str:
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


def cf_eval(seq: Sequence[int]) -> ProjRat:
    """Value of ``[a0; a1 : ... : an]`` as a projective rational.

    Evaluated by left-to-right 2x2 integer matrix products, so zero
    denominators occurring mid-sequence are ordinary projective states, never
    errors; the final value may itself be the infinite class.
    """
    elems = [int(a) for a in seq]
    if not elems:
        raise ValueError("empty continued fraction")
    p, pp = elems[0], 1
    q, qq = 1, 0
    for a in elems[1:]:
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
    return ProjRat(p, q)


def cf_convergents(seq: Sequence[int]) -> list[tuple[int, int]]:
    """``(numerator, denominator)`` of every prefix of a continued fraction."""
    out = []
    p, pp = 1, 0
    q, qq = 0, 1
    for a in seq:
        a = int(a)
        p, pp = a * p + pp, p
        q, qq = a * q + qq, q
        out.append((p, q))
    return out


def cf_expand(q: Fraction | int | str, parity: str = "odd") -> list[int]:
    """Regular continued fraction of ``q`` with the requested length parity.

    Elements after the first are always >= 1.  The canonical expansion ends
    with an element > 1 (unless it has length 1), so the other parity is
    always reachable through the split rewrite ``[..., a] = [..., a-1, 1]``.
    """
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    seq = []
    while True:
        a = num // den
        seq.append(a)
        num -= a * den
        if num == 0:
            break
        num, den = den, num
    if (len(seq) % 2 == 1) != (parity == "odd"):
        seq[-1] -= 1
        seq.append(1)
    return seq
