"""Multidimensional cone operations and congruence checks.

Edge permutations (transposes), adjacent cones, canonical-point coordinates,
simplex partner relations, Euclidean reductions and partial quotients, the
strong-best-approximation step and closure, the cyclic cosine matrix, and
Pluecker coordinates of the truncated normal form.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

import numpy as np

from .core_arith import (
    adjugate,
    det,
    determinantal_divisor,
    mat_from_columns,
    mod_inverse,
)
from .errors import (
    BranchAmbiguity,
    CosineNotInvertible,
    CosineTooSmall,
    IndexOutOfRange,
    InputError,
    NonUnitEdgeLengths,
    NotACycle,
    NotSimple,
    SizeMismatch,
    TooSmall,
    ZeroCosine,
)
from .hnf_arctan import ArctanForm, arctan_form, icos_ji, is_simple, isin_i
from .lattice_invariants import Cone, Simplex, cone, integer_length, primitive

__all__ = [
    "AlphaCoords",
    "perm_identity",
    "perm_compose",
    "perm_inverse",
    "perm_from_cycles",
    "perm_parse",
    "is_k_cycle",
    "permute",
    "adjacent",
    "verify_transpose_relations",
    "verify_cycle_products",
    "special_matrix",
    "special_matrix_det_check",
    "canonical_point_coords",
    "simplex_partner_check",
    "euclid_reduce",
    "partial_quotient",
    "sba_step_cone",
    "sba_cones",
    "plucker",
    "verify_plucker_transpose",
]

Permutation = tuple[int, ...]


# -- permutations (1-based images: p[j-1] = p(j)) ----------------------------

def perm_identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def _validate_perm(p, k: int) -> Permutation:
    t = tuple(int(x) for x in p)
    if len(t) != k or sorted(t) != list(range(1, k + 1)):
        raise SizeMismatch(f"{t} is not a permutation of 1..{k}")
    return t


def perm_compose(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(x) = p(q(x)); permuting edges by p then by q composes this way."""
    return tuple(p[x - 1] for x in q)


def perm_inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x - 1] = i + 1
    return tuple(out)


def perm_from_cycles(cycles: str, k: int) -> Permutation:
    """Permutation of 1..k from cycle notation like ``(1,3)`` or ``(1,2)(3,4)``."""
    groups = re.findall(r"\(([^()]*)\)", cycles)
    if not groups or re.sub(r"[\s()0-9,]", "", cycles):
        raise InputError(f"cannot parse cycle notation: {cycles!r}")
    image = list(range(1, k + 1))
    seen: set[int] = set()
    for g in groups:
        members = [int(x) for x in g.replace(" ", "").split(",") if x]
        if any(not 1 <= x <= k for x in members) or len(set(members)) != len(members):
            raise InputError(f"bad cycle {g!r} for k={k}")
        if seen & set(members):
            raise InputError("cycles must be disjoint")
        seen |= set(members)
        for i, x in enumerate(members):
            image[x - 1] = members[(i + 1) % len(members)]
    return tuple(image)


def perm_parse(text: str, k: int) -> Permutation:
    """Accepts cycle notation ``(1,3)`` or one-line notation ``[3,2,1]``."""
    text = text.strip()
    if text.startswith("["):
        body = text.strip("[]")
        return _validate_perm([int(x) for x in body.split(",") if x.strip()], k)
    return perm_from_cycles(text, k)


def is_k_cycle(p: Permutation) -> bool:
    k = len(p)
    seen = 1
    x = p[0]
    while x != 1:
        x = p[x - 1]
        seen += 1
        if seen > k:
            return False
    return seen == k


# -- basic cone operations ---------------------------------------------------

def permute(c: Cone, s) -> Cone:
    """s-transpose: edge j of the result is edge s(j) of the input."""
    p = _validate_perm(s, c.k)
    return Cone(c.vertex, tuple(c.edges[x - 1] for x in p))


def adjacent(c: Cone, i: int) -> Cone:
    """i-th adjacent cone: edge i negated, order unchanged."""
    if not 1 <= i <= c.k:
        raise IndexOutOfRange(f"i={i} outside 1..{c.k}")
    edges = list(c.edges)
    edges[i - 1] = tuple(-x for x in edges[i - 1])
    return Cone(c.vertex, tuple(edges))


def _require_simple(c: Cone) -> ArctanForm:
    if not is_simple(c):
        raise NotSimple("operation needs a simple cone")
    return arctan_form(c)


def _last_col(f: ArctanForm) -> list[int]:
    return [int(x) for x in f.grid[:, f.k - 1]]


# -- transpose / cycle congruences -------------------------------------------

def verify_transpose_relations(c: Cone, i: int, j: int) -> bool:
    """Cosine relations between a simple cone and its (i, j)-transpose.

    For j < k the cosines simply swap places.  For j = k the i-th cosine of
    the transpose is the modular inverse of the i-th cosine, and every other
    cosine x becomes -icos_x * icos_i^(-1), all modulo the common sine.
    """
    f = _require_simple(c)
    k = f.k
    if not 1 <= i < j <= k:
        raise IndexOutOfRange(f"need 1 <= i < j <= {k}, got ({i}, {j})")
    swap = list(perm_identity(k))
    swap[i - 1], swap[j - 1] = j, i
    fs = arctan_form(permute(c, swap))
    s = isin_i(f, k)
    if isin_i(fs, k) != s:
        return False
    if j < k:
        for x in range(1, k):
            sx = j if x == i else (i if x == j else x)
            if icos_ji(fs, x, k) != icos_ji(f, sx, k):
                return False
        return True
    ci = icos_ji(f, i, k)
    if s > 1 and math.gcd(ci, s) != 1:
        raise CosineNotInvertible(f"gcd(icos_{i}{k}, isin_{k}) = {math.gcd(ci, s)}")
    inv = mod_inverse(ci, s) if s > 1 else 0
    for x in range(1, k):
        expected = inv if x == i else (-icos_ji(f, x, k) * inv) % s
        if icos_ji(fs, x, k) != expected % s:
            return False
    return True


def verify_cycle_products(c: Cone, tau) -> bool:
    """Cyclic cosine products of a simple cone.

    For any k-cycle tau and every cosine position j, the product of the
    (j, k) cosines over all k powers of tau is (-1)^k modulo the sine.  For
    the standard cycle (1, 2, ..., k) the individual residues are also pinned
    against the canonical-point formula.
    """
    f = _require_simple(c)
    k = f.k
    p = _validate_perm(tau, k)
    if not is_k_cycle(p):
        raise NotACycle(f"{p} is not a single {k}-cycle")
    s = isin_i(f, k)
    grids = []
    power = p
    for _ in range(k):
        grids.append(arctan_form(permute(c, power)))
        power = perm_compose(p, power)
    for j in range(1, k):
        prod = 1
        for g in grids:
            prod *= icos_ji(g, j, k)
        if prod % s != (-1) ** k % s:
            return False
    if p == tuple(list(range(2, k + 1)) + [1]):
        # c_k := -1 folds the sine position into one uniform formula
        cos = [icos_ji(f, x, k) for x in range(1, k)] + [-1]
        power = p
        for m in range(k - 1):
            fm = grids[m]
            t_inv = mod_inverse(cos[power[k - 1] - 1], s) if s > 1 else 0
            for x in range(1, k):
                expected = (-cos[power[x - 1] - 1] * t_inv) % s
                if icos_ji(fm, x, k) != expected:
                    return False
            power = perm_compose(p, power)
    return True


def special_matrix(c: Cone) -> np.ndarray:
    """Cyclic cosine matrix with zero diagonal.

    Row j (0-based) reads the cosines of the cone permuted by the j-th power
    of (1, 2, ..., k), placed cyclically so the diagonal stays zero; its
    determinant is 1 - k modulo the sine.
    """
    f = _require_simple(c)
    k = f.k
    out = np.zeros((k, k), dtype=object)
    tau = tuple(list(range(2, k + 1)) + [1])
    current = c
    for j in range(k):
        fj = arctan_form(current) if j else f
        for r in range(1, k):
            out[j, (j + r) % k] = icos_ji(fj, r, k)
        current = permute(current, tau)
    return out


def special_matrix_det_check(c: Cone) -> bool:
    f = _require_simple(c)
    s = isin_i(f, f.k)
    return det(special_matrix(c)) % s == (1 - f.k) % s


# -- canonical point ----------------------------------------------------------

@dataclass(frozen=True)
class AlphaCoords:
    """Residues of a point in the (1/iv)-scaled edge basis of a cone."""

    coords: tuple[int, ...]
    modulus: int


def canonical_point_coords(c: Cone) -> AlphaCoords:
    """Edge-basis coordinates, mod iv, of the point that is all-ones in the
    cone's canonical coordinates.

    Computed as the exact integer solve iv * grid^(-1) * (1, ..., 1); for a
    simple cone this equals (-icos_1k, ..., -icos_(k-1)k, 1) mod iv.
    """
    f = _require_simple(c)
    ones = np.ones(f.k, dtype=object)
    raw = adjugate(f.grid) @ ones
    iv = f.iv
    return AlphaCoords(tuple(int(x) % iv for x in raw), iv)


# -- simplex partners ---------------------------------------------------------

def simplex_partner_check(s: Simplex) -> bool:
    """Relations between the cones at the first two vertices of a unit-edge
    simplex: equal sines, cosines matching except the first, and
    icos_1k(beta) + sum_i icos_ik(alpha) = 1 modulo the sine.
    """
    verts = s.vertices
    k = s.order
    for a, b in itertools.combinations(range(k + 1), 2):
        if integer_length(verts[a], verts[b]) != 1:
            raise NonUnitEdgeLengths(
                f"edge A_{a}A_{b} has integer length "
                f"{integer_length(verts[a], verts[b])}"
            )
    a0, a1 = verts[0], verts[1]
    sub = lambda p, q: tuple(x - y for x, y in zip(p, q))
    alpha = cone([sub(v, a0) for v in verts[1:]], a0)
    beta = cone([sub(a0, a1)] + [sub(v, a1) for v in verts[2:]], a1)
    fa = _require_simple(alpha)
    fb = _require_simple(beta)
    sk = isin_i(fa, k)
    if isin_i(fb, k) != sk:
        return False
    total = icos_ji(fb, 1, k) + sum(icos_ji(fa, x, k) for x in range(1, k))
    if total % sk != 1 % sk:
        return False
    for x in range(2, k):
        if icos_ji(fb, x, k) != icos_ji(fa, x, k):
            return False
    return True


# -- Euclidean reduction and the strong-best-approximation step ---------------

def partial_quotient(c: Cone, i: int) -> int:
    """i-th partial quotient: floor(a_k / a_i) of the normal form."""
    f = _require_simple(c)
    k = f.k
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"i={i} outside 1..{k - 1}")
    col = _last_col(f)
    if col[i - 1] == 0:
        raise ZeroCosine(f"icos_{i}{k} = 0")
    return col[k - 1] // col[i - 1]


def euclid_reduce(c: Cone, i: int) -> Cone:
    """i-th Euclidean reduction: swap the i-th cosine with the sine in the
    normal form and renormalise (which reduces the rest modulo the new sine).

    The resulting sine is the old i-th cosine, strictly smaller than the old
    sine, which is what drives the strong-best-approximation walk to
    terminate."""
    f = _require_simple(c)
    k = f.k
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"i={i} outside 1..{k - 1}")
    col = _last_col(f)
    if col[i - 1] == 0:
        raise ZeroCosine(f"icos_{i}{k} = 0")
    new_col = list(col)
    new_col[i - 1] = col[k - 1]
    new_col[k - 1] = col[i - 1]
    edges = [tuple(int(x) for x in np.eye(k, dtype=object)[:, j]) for j in range(k - 1)]
    edges.append(tuple(new_col))
    return cone(edges)


def _chi(c: Cone, i: int) -> int:
    f = arctan_form(c)
    col = _last_col(f)
    return col[f.k - 1] // col[i - 1]


def sba_step_cone(c: Cone, i: int) -> Cone:
    """One strong-best-approximation step on a simple cone, in direction i.

    Exactly one of the (i, k)-transpose or the transposed i-th adjacent cone
    admits a shortening Euclidean reduction; the step composes the reduction
    with the matching transpose/adjacent moves so that for k = 2 it coincides
    with the planar reduction step.  The sine strictly decreases.
    """
    f = _require_simple(c)
    k = f.k
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"i={i} outside 1..{k - 1}")
    ci = icos_ji(f, i, k)
    if ci < 2:
        raise CosineTooSmall(f"icos_{i}{k} = {ci} < 2")
    swap = list(perm_identity(k))
    swap[i - 1], swap[k - 1] = k, i
    cand_t = permute(c, swap)
    cand_a = permute(adjacent(c, i), swap)
    chi_t = _chi(cand_t, i)
    chi_a = _chi(cand_a, i)
    if (chi_t > 1) == (chi_a > 1):
        raise BranchAmbiguity(f"chi(transpose)={chi_t}, chi(adjacent)={chi_a}")
    if chi_t > 1:
        return permute(adjacent(euclid_reduce(cand_t, i), i), swap)
    return permute(euclid_reduce(cand_a, i), swap)


def sba_cones(c: Cone, max_steps: int) -> list[ArctanForm]:
    """Closure of a simple cone's permutations under all applicable
    strong-best-approximation steps, up to ``max_steps`` applications.

    Cones are deduplicated by their normal-form grids; the result lists the
    congruence classes reached, sorted by grid for determinism.  Inapplicable
    step directions (small cosine, non-simple intermediate) are skipped.
    """
    k = c.k
    seen: dict[tuple, tuple[ArctanForm, Cone]] = {}
    frontier: list[Cone] = []
    for p in sorted(itertools.permutations(range(1, k + 1))):
        pc = permute(c, p)
        f = arctan_form(pc)
        key = f.grid_tuple()
        if key not in seen:
            seen[key] = (f, pc)
            frontier.append(pc)
    for _ in range(max_steps):
        if not frontier:
            break
        frontier.sort(key=lambda cc: arctan_form(cc).grid_tuple())
        next_frontier: list[Cone] = []
        for current in frontier:
            for i in range(1, k):
                try:
                    stepped = sba_step_cone(current, i)
                except (CosineTooSmall, NotSimple, BranchAmbiguity, ZeroCosine):
                    continue
                f = arctan_form(stepped)
                key = f.grid_tuple()
                if key not in seen:
                    seen[key] = (f, stepped)
                    next_frontier.append(stepped)
        frontier = next_frontier
    return [seen[key][0] for key in sorted(seen)]


# -- Pluecker coordinates ------------------------------------------------------

def plucker(c: Cone) -> list[int]:
    """Signed maximal minors of the normal form with its last row deleted.

    Sign convention: p_i = (-1)^(i-1) times the minor omitting column i, so
    that in 3D (p_1, p_2, p_3) = (c12*c23 - s2*c13, -c23, s2).
    """
    f = arctan_form(c)
    k = f.k
    if k < 2:
        raise TooSmall("Pluecker coordinates need k >= 2")
    trunc = f.grid[: k - 1, :]
    out = []
    for i in range(k):
        cols = [j for j in range(k) if j != i]
        out.append((-1) ** i * det(trunc[:, cols]))
    return out


def verify_plucker_transpose(c: Cone, i: int) -> bool:
    """Pluecker congruences between a cone and its (i, k)-transpose.

    Checks p_i(a) p_i(a_s) = p_k(a) p_k(a_s) = (iv/isin_k a)(iv/isin_k a_s)
    modulo iv, and that iv/isin_k equals the product of the lower sines, with
    iv verified independently against the gcd-of-minors index of the
    primitivised edges.
    """
    f = arctan_form(c)
    k = f.k
    if k < 2:
        raise TooSmall("Pluecker coordinates need k >= 2")
    if not 1 <= i <= k - 1:
        raise IndexOutOfRange(f"i={i} outside 1..{k - 1}")
    swap = list(perm_identity(k))
    swap[i - 1], swap[k - 1] = k, i
    cs = permute(c, swap)
    fs = arctan_form(cs)
    iv = f.iv
    if fs.iv != iv:
        return False
    units = mat_from_columns([primitive(e)[0] for e in c.edges])
    if determinantal_divisor(units, k) != iv:
        return False
    r = iv // isin_i(f, k)
    rs = iv // isin_i(fs, k)
    prod = 1
    prods = 1
    for x in range(1, k):
        prod *= isin_i(f, x)
        prods *= isin_i(fs, x)
    if r != prod or rs != prods:
        return False
    p = plucker(c)
    ps = plucker(cs)
    rhs = (r * rs) % iv
    return (p[i - 1] * ps[i - 1]) % iv == rhs and (p[k - 1] * ps[k - 1]) % iv == rhs
