"""Exact integer trigonometry of rational simplicial cones.

Lattice invariants (integer lengths, areas, volumes, sines), normalised
Hermite-form arctangents and their sine/cosine/tangent entries, planar sail
and continued-fraction trigonometry, transpose/adjacent/cycle congruences,
strong best approximations, and Pluecker relations -- all in exact integer
arithmetic.
"""

from .core_arith import (
    ProjRat,
    cf_convergents,
    cf_eval,
    cf_expand,
    det,
    determinantal_divisor,
    gcd_ext,
    identity_mat,
    intmat,
    mat_from_columns,
    mod_inverse,
)
from .errors import *  # noqa: F401,F403 -- the error names are the API
from .lattice_invariants import (
    Cone,
    Simplex,
    cone,
    integer_area_triangle,
    integer_length,
    integer_sine,
    integer_volume,
    pick_check,
    primitive,
    simplex,
    sine_rule_check,
    triangle,
)
from .hnf_arctan import (
    ArctanForm,
    arctan_form,
    congruent,
    icos_ji,
    is_simple,
    isin_i,
    itan_i,
)
from .trig2d import (
    Angle2D,
    AngleSumResult,
    TriangleResult,
    adjacent2,
    angle,
    angle_congruent,
    angle_from_lls,
    angle_sum,
    bracket_eval,
    iarctan2,
    icos2,
    is_right_angle2,
    isin2,
    itan2,
    lls,
    sail,
    sba_classical,
    sba_oracle,
    sba_step,
    transpose2,
    triangle_exists,
)
from .cone_ops import (
    AlphaCoords,
    adjacent,
    canonical_point_coords,
    euclid_reduce,
    is_k_cycle,
    partial_quotient,
    perm_compose,
    perm_from_cycles,
    perm_identity,
    perm_inverse,
    perm_parse,
    permute,
    plucker,
    sba_cones,
    sba_step_cone,
    simplex_partner_check,
    special_matrix,
    special_matrix_det_check,
    verify_cycle_products,
    verify_plucker_transpose,
    verify_transpose_relations,
)

__version__ = "0.1.0"
