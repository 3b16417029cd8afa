"""Exception types raised across the package."""


class GrasslieError(Exception):
    """Base class for every error the library raises on purpose."""


class ZeroDivisor(GrasslieError):
    """Inversion of a scalar whose norm is below tolerance."""


class WrongField(GrasslieError):
    """Operation applied to a value over the wrong scalar field."""


class ShapeMismatch(GrasslieError):
    """Matrix operands with incompatible shapes."""


class RankDeficient(GrasslieError):
    """Input had lower numerical rank than the operation requires."""


class NotOrthonormal(GrasslieError):
    """A frame failed its Gram-matrix check."""


class NotHermitian(GrasslieError):
    """A matrix expected to equal its conjugate transpose does not."""


class NotPositiveDefinite(GrasslieError):
    """A Hermitian matrix expected to be positive definite is not."""


class Singular(GrasslieError):
    """A matrix that must be invertible is numerically singular."""


class SingularShift(Singular):
    """Cayley transform of a matrix with -1 in its spectrum."""


class NoForm(GrasslieError):
    """A form-dependent operation was applied to a general linear group."""


class NotGroupElement(GrasslieError):
    """A matrix failed the membership test of its declared group."""


class BoundaryPoint(GrasslieError):
    """A subspace meets V1 or V2 nontrivially where a graph is required."""


class AmbientMismatch(GrasslieError):
    """Subspaces of different ambient spaces (or fields) were combined."""


class NoIsotropicVectors(GrasslieError):
    """The requested boundary stratum does not exist for this form."""


class NotInMXY(GrasslieError):
    """A subspace lies outside the double graph-like locus of a frame."""


class BadSignature(GrasslieError):
    """A signature (p, q) is inconsistent with the ambient dimension."""


class InvalidGroupCode(GrasslieError, ValueError):
    """A group code string could not be parsed."""


class InvalidConfig(GrasslieError, ValueError):
    """A campaign configuration failed validation."""
