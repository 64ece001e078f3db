"""Exception types shared across the library.

Every domain failure raises a subclass of :class:`IntTrigError`.  The class
name is the stable machine-readable identifier: the CLI reports it verbatim
when exiting with code 3 (inapplicable operator) or 2 (invalid input).
"""


class IntTrigError(ValueError):
    """Base class for all library errors."""


class InputError(IntTrigError):
    """Malformed document, file, or literal (CLI exit code 2)."""


# -- exact arithmetic -------------------------------------------------------

class NotInvertible(IntTrigError):
    """No modular inverse exists (gcd of argument and modulus is not 1)."""


class NotSquare(IntTrigError):
    """Determinant requested for a non-square matrix."""


class RankDeficient(IntTrigError):
    """All k x k minors vanish; the matrix has rank below k."""


class NoSuchExpansion(IntTrigError):
    """Requested continued-fraction parity cannot be realised.

    Defined for API completeness: every rational admits both parities via the
    split rewrite [..., a] = [..., a-1, 1], so this is never raised in
    practice.
    """


# -- lattice objects --------------------------------------------------------

class ZeroVector(IntTrigError):
    """Primitive direction of the zero vector is undefined."""


class DegenerateSegment(IntTrigError):
    """Segment endpoints coincide."""


class Collinear(IntTrigError):
    """Triangle vertices lie on one line."""


class Degenerate(IntTrigError):
    """Simplex with linearly dependent edge vectors."""


class DegenerateCone(IntTrigError):
    """Cone edges are linearly dependent (or an edge is zero)."""


class IndexOutOfRange(IntTrigError):
    """Edge or grid index outside 1..k."""


class DimensionMismatch(IntTrigError):
    """Operands live in incompatible dimensions."""


# -- planar trigonometry ----------------------------------------------------

class TrivialAngle(IntTrigError):
    """Operation undefined for the zero angle (coincident edge rays)."""


class StraightAngle(IntTrigError):
    """Edge rays are opposite; the pair bounds a half-plane, not a cone."""


class NonPositive(IntTrigError):
    """Integer arctangent requires a positive rational."""


class NonPositiveTangent(IntTrigError):
    """Tangent has no odd regular expansion with positive entries."""


class NoReduction(IntTrigError):
    """Reduction step undefined: the angle already has integer tangent 1."""


class BranchAmbiguity(IntTrigError):
    """Neither or both reduction branches apply.

    Surfaced instead of silently choosing: a report of this error on a valid
    simple cone would be a counterexample worth studying, not hiding.
    """


# -- cone operations --------------------------------------------------------

class SizeMismatch(IntTrigError):
    """Permutation size differs from the number of cone edges."""


class NotSimple(IntTrigError):
    """Operation requires a simple cone (all (k-1)-subcone sines equal 1)."""


class NotACycle(IntTrigError):
    """Permutation is not a single k-cycle."""


class CosineNotInvertible(IntTrigError):
    """Integer cosine shares a factor with the integer sine.

    Unreachable for genuinely simple cones (simplicity forces every cosine to
    be coprime to the sine); kept as a distinct reported outcome.
    """


class NonUnitEdgeLengths(IntTrigError):
    """Simplex has an edge of integer length greater than 1."""


class ZeroCosine(IntTrigError):
    """Euclidean reduction by a zero cosine is undefined."""


class CosineTooSmall(IntTrigError):
    """Strong-best-approximation step requires the chosen cosine to be >= 2."""


class TooSmall(IntTrigError):
    """Pluecker coordinates need a cone of dimension at least 2."""
