"""Scratch validation against paper goldens (not part of the deliverable)."""
import random
from fractions import Fraction

from inttrig import *
from inttrig.cone_ops import _chi  # noqa
from inttrig.generators import (
    random_simple_cone, random_nonsimple_cone3, random_angle, random_unimodular,
    transform_cone, random_unit_simplex,
)

def show(name, val):
    print(f"{name}: {val}")

# --- sec 2.2 example ---
c22 = cone([(13, 8, 4), (7, -3, 11), (19, 16, -5)])  # sign-corrected
f22 = arctan_form(c22)
show("sec2.2 grid", f22.grid_tuple())
assert f22.grid_tuple() == ((1, 4, 67), (0, 5, 59), (0, 0, 107)), f22.grid_tuple()

# --- ex1 ---
ex1 = cone([(123, 234, 655), (13, -347, 341), (19, 156, -456)])
f1 = arctan_form(ex1)
show("ex1 grid", f1.grid_tuple())
assert f1.last_column() == (9719300, 8781600, 21469421), f1.last_column()

# transpose (1,3)
s13 = perm_parse("(1,3)", 3)
f13 = arctan_form(permute(ex1, s13))
show("ex1 (1,3) last col", f13.last_column())
assert f13.last_column() == (11154342, 18378882, 21469421), f13.last_column()
assert (9719300 * 11154342) % 21469421 == 1
assert (8781600 * 11154342) % 21469421 == (-18378882) % 21469421
show("verify_transpose ex1 (1,3)", verify_transpose_relations(ex1, 1, 3))
assert verify_transpose_relations(ex1, 1, 3)

# cycle tau=(1,2,3)
tau = perm_parse("(1,2,3)", 3)
show("tau tuple", tau)
ft = arctan_form(permute(ex1, tau))
ft2 = arctan_form(permute(permute(ex1, tau), tau))
show("ex1 tau last col", ft.last_column())
show("ex1 tau^2 last col", ft2.last_column())
assert ft.last_column() == (18378882, 11154342, 21469421), ft.last_column()
assert ft2.last_column() == (20652409, 18802856, 21469421), ft2.last_column()
p1 = (9719300 * 18378882 * 20652409) % 21469421
p2 = (8781600 * 11154342 * 18802856) % 21469421
show("cycle products", (p1, p2))
assert p1 == p2 == 21469421 - 1
show("verify_cycle ex1", verify_cycle_products(ex1, tau))
assert verify_cycle_products(ex1, tau)

# adjacent ex3
fa = arctan_form(adjacent(ex1, 1))
show("ex1 adjacent_1 last col", fa.last_column())
assert fa.last_column() == (11750121, 8781600, 21469421)
assert 9719300 + 11750121 == 21469421

# special matrix
show("special det check ex1", special_matrix_det_check(ex1))
assert special_matrix_det_check(ex1)

# canonical point
cp = canonical_point_coords(ex1)
show("canonical point ex1", cp)
assert cp.coords == ((-9719300) % 21469421, (-8781600) % 21469421, 1)

# ex4 simplex: printed A3 has -457
A0 = (0, 0, 0); A1 = (123, 234, 655); A2 = (13, -347, 341); A3p = (19, 156, -457); A3c = (19, 156, -456)
print("ex4 printed A3=-457:")
try:
    simplex_partner_check(simplex([A0, A1, A2, A3p]))
    print("  check ran")
except IntTrigError as e:
    print("  raises", type(e).__name__, e)
print("ex4 with A3=-456 (matches ex1):")
sx = simplex([A0, A1, A2, A3c])
show("  partner check", simplex_partner_check(sx))
a0, a1 = sx.vertices[0], sx.vertices[1]
sub = lambda p, q: tuple(x - y for x, y in zip(p, q))
beta = cone([sub(a0, a1)] + [sub(v, a1) for v in sx.vertices[2:]], a1)
fb = arctan_form(beta)
show("  beta last col", fb.last_column())
assert (9719300 + (2968522 + 8781600)) % 21469421 == 1

# hmm, wait -- ex1 uses A2 = (13,-347,341) but ex4 prints A2=(13,-347,156)!
print("NOTE ex1 col2:", (13, -347, 341), " ex4 A2:", (13, -347, 156))

# --- 2D chain 43/30 ---
a = iarctan2(Fraction(43, 30))
chain = [itan2(a)]
x = a
for _ in range(3):
    x = sba_step(x)
    chain.append(itan2(x))
show("43/30 chain", chain)
assert chain == [Fraction(43, 30), Fraction(10, 7), Fraction(3, 2), Fraction(1)]
show("sba_classical 43/30", sba_classical(Fraction(43, 30)))
assert sba_classical(Fraction(43, 30)) == list(reversed(chain))
assert sba_oracle(Fraction(43, 30)) == sba_classical(Fraction(43, 30))

# euclid reduce 2D grid (1,10;0,43)
beta2 = cone([(1, 0), (10, 43)])
fr = arctan_form(euclid_reduce(beta2, 1))
show("E_1 of (1,10;0,43)", fr.grid_tuple())
assert fr.grid_tuple() == ((1, 3), (0, 10))
assert partial_quotient(beta2, 1) == 4

# sba_step_cone on 2D matches sba_step
c2 = iarctan2(Fraction(43, 30)).cone
r1 = sba_step_cone(c2, 1)
show("T_1 cone of 43/30 grid", arctan_form(r1).grid_tuple())
assert arctan_form(r1).grid_tuple() == ((1, 7), (0, 10))

# sba_cones on 43/30, depth 3
forms = sba_cones(c2, 3)
itans = sorted(str(Fraction(isin_i(f, 2), icos_ji(f, 1, 2)) if icos_ji(f, 1, 2) else 1) for f in forms)
show("sba_cones(43/30, 3) tangents", itans)

# --- randomized: strictcycle, propp, special-det, transpose rels, simplex, plucker ---
rng = random.Random(12345)
for t in range(300):
    k = rng.choice([2, 3, 4])
    c = random_simple_cone(rng, k, sine_bound=10**6)
    assert is_simple(c)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            assert verify_transpose_relations(c, i, j), (t, i, j, arctan_form(c).grid_tuple())
    tau_std = tuple(list(range(2, k + 1)) + [1])
    assert verify_cycle_products(c, tau_std), (t, arctan_form(c).grid_tuple())
    # random k-cycle
    perm = list(range(1, k + 1))
    while True:
        rng.shuffle(perm)
        pp = tuple(perm)
        if is_k_cycle(pp):
            break
    assert verify_cycle_products(c, pp), (t, pp)
    assert special_matrix_det_check(c), t
    cp = canonical_point_coords(c)
    f = arctan_form(c)
    s = isin_i(f, k)
    expected = tuple((-icos_ji(f, x, k)) % s for x in range(1, k)) + (1 % s,)
    assert cp.coords == expected and cp.modulus == s, (cp, expected)
print("300 random simple cones: transpose/cycle/strictcycle/special/propp all OK")

for t in range(300):
    c = random_nonsimple_cone3(rng)
    for i in (1, 2):
        assert verify_plucker_transpose(c, i), (t, i, arctan_form(c).grid_tuple())
print("300 random non-simple 3-cones: plucker transpose OK")

# ex1 plucker instantiation
for i in (1, 2):
    assert verify_plucker_transpose(ex1, i)
print("ex1 plucker OK")

for t in range(100):
    s = random_unit_simplex(rng, 3, 6)
    assert simplex_partner_check(s), s
print("100 random unit simplices: partner relation OK")

# T_i 3D monotonicity
count = 0
tries = 0
while count < 100 and tries < 3000:
    tries += 1
    c = random_simple_cone(rng, 3, sine_bound=10**4)
    f = arctan_form(c)
    i = rng.choice([1, 2])
    if icos_ji(f, i, 3) < 2:
        continue
    try:
        r = sba_step_cone(c, i)
    except BranchAmbiguity as e:
        print("AMBIGUITY", e, f.grid_tuple()); continue
    fr2 = arctan_form(r)
    assert isin_i(fr2, 3) < isin_i(f, 3), (f.grid_tuple(), fr2.grid_tuple())
    count += 1
print(f"T_i monotonicity OK on {count} random simple 3-cones")

# sail vs brute oracle quick check
from itertools import product as iproduct
def brute_sail_canonical(cgrid, sgrid):
    P1 = (1, 0); P2 = (cgrid, sgrid)
    A = (2 * P1[0], 2 * P1[1]); B = (2 * P2[0], 2 * P2[1])
    pts = []
    xmax = max(A[0], B[0]); ymax = max(A[1], B[1])
    for x in range(0, xmax + 1):
        for y in range(0, ymax + 1):
            if (x, y) == (0, 0):
                continue
            # inside triangle(0, A, B): left of 0->A? A=(2,0): cross(A,P)=A_x*y-A_y*x
            c1 = A[0] * y - A[1] * x        # >=0 left of 0->A .. careful orientation
            c2 = B[0] * y - B[1] * x        # <=0 right of 0->B
            c3 = (B[0] - A[0]) * (y - A[1]) - (B[1] - A[1]) * (x - A[0])
            if c1 >= 0 and c2 <= 0 and c3 >= 0:
                pts.append((x, y))
    # monotone chain hull
    pts = sorted(set(pts))
    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]  # CCW
    # extract chain from P1 to P2 with origin strictly on the right of each edge
    m = len(hull)
    i1 = hull.index(P1);
    chain = [P1]
    idx = i1
    while hull[idx] != P2:
        nxt = (idx + 1) % m
        a_, b_ = hull[idx], hull[nxt]
        side = (b_[0] - a_[0]) * (0 - a_[1]) - (b_[1] - a_[1]) * (0 - a_[0])
        if side >= 0:
            raise AssertionError("walked the far chain")
        chain.append(hull[nxt]); idx = nxt
    return chain

for t in range(60):
    s = rng.randint(2, 120)
    import math as _m
    while True:
        cc = rng.randrange(1, s)
        if _m.gcd(cc, s) == 1:
            break
    a = angle((1, 0), (cc, s))
    got = sail(a)
    want = brute_sail_canonical(cc, s)
    assert got == want, (cc, s, got, want)
print("60 canonical sails match brute hull oracle")

# triangle criterion on real triangles
from inttrig.generators import random_triangle
for t in range(60):
    tri = random_triangle(rng, 12)
    A, B, C = tri.vertices
    sub2 = lambda p, q: (p[0] - q[0], p[1] - q[1])
    angs = [angle(sub2(B, A), sub2(C, A)), angle(sub2(A, B), sub2(C, B)), angle(sub2(A, C), sub2(B, C))]
    res = triangle_exists(*angs)
    assert res.exists, (tri, [itan2(x) for x in angs])
print("60 real triangles accepted by criterion")
print("ALL SCRATCH VALIDATION PASSED")
