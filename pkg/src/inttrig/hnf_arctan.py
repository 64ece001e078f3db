"""Normalised Hermite forms of rational cones and the trigonometry they carry.

The normalised Hermite form of an ordered rational cone (its integer
arctangent) is the unique upper-triangular matrix, with positive diagonal,
off-diagonal entries reduced below the diagonal, and primitive columns, that
a unimodular change of lattice basis brings the primitivised edge matrix to.
It is a complete invariant of the cone's integer congruence class; its
entries are the integer sines and cosines.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core_arith import gcd_ext, mat_from_columns
from .errors import DegenerateCone, DimensionMismatch, IndexOutOfRange
from .lattice_invariants import Cone, cone, integer_sine, primitive

__all__ = [
    "ArctanForm",
    "arctan_form",
    "isin_i",
    "icos_ji",
    "itan_i",
    "is_simple",
    "congruent",
]


@dataclass(frozen=True, eq=False)
class ArctanForm:
    """Normalised Hermite form of a cone plus the transform realising it.

    ``transform @ primitivised_edges == grid`` extended by zero rows; the
    transform has determinant +-1.  ``grid`` and ``transform`` are read-only.
    """

    grid: np.ndarray
    transform: np.ndarray
    k: int
    ambient_dim: int

    def grid_tuple(self) -> tuple[tuple[int, ...], ...]:
        """Hashable grid representation (used for congruence-class keys)."""
        return tuple(tuple(int(x) for x in row) for row in self.grid)

    @property
    def iv(self) -> int:
        """Integer volume of the normalised cone: product of the diagonal."""
        out = 1
        for i in range(self.k):
            out *= int(self.grid[i, i])
        return out

    def last_column(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.grid[:, self.k - 1])


def _swapless_rowop(E: np.ndarray, U: np.ndarray, pivot: int, row: int) -> None:
    """Unimodular 2-row combination zeroing ``E[row, pivot]`` into the pivot row."""
    a, b = int(E[pivot, pivot]), int(E[row, pivot])
    g, x, y = gcd_ext(a, b)
    new_pivot_E = x * E[pivot] + y * E[row]
    new_row_E = (-(b // g)) * E[pivot] + (a // g) * E[row]
    E[pivot], E[row] = new_pivot_E, new_row_E
    new_pivot_U = x * U[pivot] + y * U[row]
    new_row_U = (-(b // g)) * U[pivot] + (a // g) * U[row]
    U[pivot], U[row] = new_pivot_U, new_row_U


def arctan_form(c: Cone) -> ArctanForm:
    """Normalised Hermite form of an ordered rational cone.

    Edges are primitivised, then reduced by left-unimodular row operations
    only: the column order is fixed because cones are ordered, and integer
    congruence acts on the ambient lattice.  The vertex plays no role.
    """
    units = [primitive(e)[0] for e in c.edges]
    E = mat_from_columns(units)
    n, k = E.shape
    U = np.eye(n, dtype=object)
    for col in range(k):
        for row in range(col + 1, n):
            if E[row, col] != 0:
                _swapless_rowop(E, U, col, row)
        if E[col, col] == 0:
            raise DegenerateCone("edges are linearly dependent")
        if E[col, col] < 0:
            E[col] = -E[col]
            U[col] = -U[col]
        for row in range(col):
            q = E[row, col] // E[col, col]
            if q != 0:
                E[row] = E[row] - q * E[col]
                U[row] = U[row] - q * U[col]
    grid = E[:k].copy()
    grid.flags.writeable = False
    U.flags.writeable = False
    return ArctanForm(grid=grid, transform=U, k=k, ambient_dim=n)


def isin_i(f: ArctanForm, i: int) -> int:
    """i-th integer sine: diagonal entry ``a_{i,i}`` (1-based)."""
    if not 1 <= i <= f.k:
        raise IndexOutOfRange(f"i={i} outside 1..{f.k}")
    return int(f.grid[i - 1, i - 1])


def icos_ji(f: ArctanForm, j: int, i: int) -> int:
    """(j, i)-th integer cosine: entry ``a_{j,i}`` with j < i (1-based)."""
    if not 1 <= j < i <= f.k:
        raise IndexOutOfRange(f"(j, i)=({j}, {i}) needs 1 <= j < i <= {f.k}")
    return int(f.grid[j - 1, i - 1])


def itan_i(f: ArctanForm, i: int) -> tuple[int, ...]:
    """i-th integer tangent: column i truncated to its first i entries,
    as a projective class (coordinate gcd 1, last entry positive)."""
    if not 1 <= i <= f.k:
        raise IndexOutOfRange(f"i={i} outside 1..{f.k}")
    col = [int(x) for x in f.grid[:i, i - 1]]
    unit, _ = primitive(col)
    if unit[-1] < 0:
        unit = tuple(-x for x in unit)
    return unit


def is_simple(c: Cone) -> bool:
    """True iff every (k-1)-subcone has integer sine 1 (always true k <= 2)."""
    k = c.k
    if k <= 2:
        return True
    for drop in range(k):
        sub = cone([e for i, e in enumerate(c.edges) if i != drop], c.vertex)
        if integer_sine(sub) != 1:
            return False
    return True


def congruent(a: Cone, b: Cone) -> bool:
    """Integer congruence test: the normalised Hermite forms must coincide."""
    if a.k != b.k or a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"({a.k}-cone in R^{a.ambient_dim}) vs ({b.k}-cone in R^{b.ambient_dim})"
        )
    return arctan_form(a).grid_tuple() == arctan_form(b).grid_tuple()
