"""The ten classical matrix group families as automorphisms of forms.

Each family is a GroupSpec: the scalar field, the matrix size n, and
(except for the three general linear families) an invertible form
matrix B with membership condition conj(g)^t B g = B, where the
conjugation is applied only for sesquilinear forms.  Lie algebra data
is obtained numerically as the real nullspace of the linearized
condition conj(A)^t B + B A = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import MEMBERSHIP_TOL, RANK_TOL
from .errors import (BadSignature, InvalidConfig, InvalidGroupCode,
                     NotGroupElement, NotPositiveDefinite, ShapeMismatch,
                     WrongField)
from .matgeom import (FMatrix, from_real_coords, inverse, matrix_exp,
                      min_eigen_hermitian, numeric_rank, real_matrix_of_map,
                      real_nullspace_basis, to_real_coords)
from .scalar import COMPLEX, QUATERNION, REAL, real_dim

GL_R, GL_C, GL_H = "gl_r", "gl_c", "gl_h"
O_PQ, U_PQ, SP_PQ = "o", "u", "sp"
SP_R, SP_C = "sp_r", "sp_c"
O_C, O_STAR = "o_c", "o_star"

FAMILIES = (GL_R, GL_C, GL_H, O_PQ, U_PQ, SP_PQ, SP_R, SP_C, O_C, O_STAR)

_FIELD_OF = {GL_R: REAL, GL_C: COMPLEX, GL_H: QUATERNION,
             O_PQ: REAL, U_PQ: COMPLEX, SP_PQ: QUATERNION,
             SP_R: REAL, SP_C: COMPLEX, O_C: COMPLEX, O_STAR: QUATERNION}

# conjugate-transpose (rather than plain transpose) in the membership test
_SESQUILINEAR = {U_PQ, SP_PQ, O_STAR}

_SIGNATURE_FAMILIES = (O_PQ, U_PQ, SP_PQ)
_GL_FAMILIES = (GL_R, GL_C, GL_H)


@dataclass(frozen=True)
class GroupSpec:
    """One group: family code, size n over its field, optional signature.

    For sp_r / sp_c the size n = 2m is even; for o_star, n is the
    quaternionic dimension and the conventional name carries 2n.
    """

    family: str
    n: int
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidGroupCode(f"unknown family {self.family!r}")
        if self.n < 1:
            raise BadSignature(f"need n >= 1, got {self.n}")
        if self.family in _SIGNATURE_FAMILIES:
            if self.p is None or self.q is None or self.p < 0 or self.q < 0:
                raise BadSignature("signature families need p, q >= 0")
            if self.p + self.q != self.n:
                raise BadSignature(f"p + q = {self.p + self.q} != n = {self.n}")
        elif self.p is not None or self.q is not None:
            raise BadSignature(f"family {self.family} takes no signature")
        if self.family in (SP_R, SP_C) and self.n % 2:
            raise BadSignature(f"family {self.family} needs even size, got {self.n}")

    @property
    def field(self) -> str:
        return _FIELD_OF[self.family]

    @property
    def sesquilinear(self) -> bool:
        return self.family in _SESQUILINEAR

    @property
    def has_form(self) -> bool:
        return self.family not in _GL_FAMILIES

    @property
    def is_gl(self) -> bool:
        return self.family in _GL_FAMILIES

    @property
    def real_matrix_dim(self) -> int:
        """Real dimension of the space of n x n matrices over the field."""
        return real_dim(self.field) * self.n * self.n

    def code(self) -> str:
        if self.family in _SIGNATURE_FAMILIES:
            return f"{self.family}:{self.p},{self.q}"
        if self.family == O_STAR:
            return f"{self.family}:{2 * self.n}"
        return f"{self.family}:{self.n}"

    def __str__(self):
        return self.code()


# -- constructors --------------------------------------------------------


def gl(field: str, n: int) -> GroupSpec:
    fam = {REAL: GL_R, COMPLEX: GL_C, QUATERNION: GL_H}.get(field)
    if fam is None:
        raise WrongField(f"no general linear family over {field!r}")
    return GroupSpec(fam, n)


def o_pq(p: int, q: int) -> GroupSpec:
    return GroupSpec(O_PQ, p + q, p, q)


def u_pq(p: int, q: int) -> GroupSpec:
    return GroupSpec(U_PQ, p + q, p, q)


def sp_pq(p: int, q: int) -> GroupSpec:
    return GroupSpec(SP_PQ, p + q, p, q)


def sp_r(size: int) -> GroupSpec:
    return GroupSpec(SP_R, size)


def sp_c(size: int) -> GroupSpec:
    return GroupSpec(SP_C, size)


def o_c(n: int) -> GroupSpec:
    return GroupSpec(O_C, n)


def o_star(size: int) -> GroupSpec:
    """O*(size) with size = 2n; matrices are n x n over H."""
    if size % 2:
        raise BadSignature(f"o_star size must be even, got {size}")
    return GroupSpec(O_STAR, size // 2)


def parse_group_code(code: str) -> GroupSpec:
    """Parse codes like "gl_r:3", "o:2,1", "sp_r:4", "o_star:4"."""
    try:
        family, _, args = code.strip().partition(":")
        if not args:
            raise ValueError("missing size")
        if family in _SIGNATURE_FAMILIES:
            p_str, _, q_str = args.partition(",")
            return GroupSpec(family, int(p_str) + int(q_str), int(p_str), int(q_str))
        if family == O_STAR:
            return o_star(int(args))
        if family in FAMILIES:
            return GroupSpec(family, int(args))
        raise ValueError(f"unknown family {family!r}")
    except (ValueError, BadSignature) as exc:
        raise InvalidGroupCode(f"cannot parse group code {code!r}: {exc}") from exc


def standard_specs() -> list[GroupSpec]:
    """One noncompact representative per family, used as campaign default."""
    return [gl(REAL, 2), gl(COMPLEX, 2), gl(QUATERNION, 2),
            o_pq(1, 1), u_pq(1, 1), sp_pq(1, 1),
            sp_r(2), sp_c(2), o_c(2), o_star(4)]


# -- defining forms ------------------------------------------------------


def _signature_matrix(field: str, p: int, q: int) -> FMatrix:
    diag = np.concatenate([np.ones(p), -np.ones(q)])
    if field == REAL:
        return FMatrix.from_real(np.diag(diag))
    if field == COMPLEX:
        return FMatrix.from_complex(np.diag(diag).astype(complex))
    return FMatrix.from_quat_parts(np.diag(diag).astype(complex),
                                   np.zeros((p + q, p + q)))


def symplectic_matrix(field: str, size: int) -> FMatrix:
    """J = [[0, I], [-I, 0]] of the given even size."""
    m = size // 2
    j = np.block([[np.zeros((m, m)), np.eye(m)], [-np.eye(m), np.zeros((m, m))]])
    if field == REAL:
        return FMatrix.from_real(j)
    if field == COMPLEX:
        return FMatrix.from_complex(j.astype(complex))
    return FMatrix.from_quat_parts(j.astype(complex), np.zeros((size, size)))


@lru_cache(maxsize=None)
def form_matrix(spec: GroupSpec) -> FMatrix:
    """The invertible matrix of the defining form; NoForm for GL families."""
    if spec.is_gl:
        from .errors import NoForm
        raise NoForm(f"{spec} preserves no form")
    if spec.family in _SIGNATURE_FAMILIES:
        return _signature_matrix(spec.field, spec.p, spec.q)
    if spec.family in (SP_R, SP_C):
        return symplectic_matrix(spec.field, spec.n)
    if spec.family == O_C:
        return FMatrix.eye(COMPLEX, spec.n)
    # O*(2n): the skew-Hermitian form u -> conj(u)^t (i I) v on H^n
    return FMatrix.from_quat_parts(1j * np.eye(spec.n), np.zeros((spec.n, spec.n)))


def _twist(spec: GroupSpec, a: FMatrix) -> FMatrix:
    """conj(a)^t for sesquilinear membership, plain transpose otherwise."""
    return a.H if spec.sesquilinear else a.transpose()


# -- membership and Lie algebra ------------------------------------------


def membership_defect(spec: GroupSpec, g: FMatrix) -> float:
    """Relative Frobenius defect of the membership condition."""
    if g.field != spec.field:
        raise WrongField(f"{spec} lives over {spec.field}, matrix over {g.field}")
    if g.shape != (spec.n, spec.n):
        raise ShapeMismatch(f"{spec} needs {spec.n}x{spec.n}, got {g.shape}")
    if spec.is_gl:
        return 0.0 if numeric_rank(g) == spec.n else 1.0
    b = form_matrix(spec)
    return (_twist(spec, g) @ b @ g - b).norm() / b.norm()


def is_group_element(spec: GroupSpec, g: FMatrix, tol: float = MEMBERSHIP_TOL) -> bool:
    return membership_defect(spec, g) <= tol


def algebra_defect(spec: GroupSpec, a: FMatrix) -> float:
    if a.field != spec.field:
        raise WrongField(f"{spec} lives over {spec.field}, matrix over {a.field}")
    if a.shape != (spec.n, spec.n):
        raise ShapeMismatch(f"{spec} needs {spec.n}x{spec.n}, got {a.shape}")
    if spec.is_gl:
        return 0.0
    b = form_matrix(spec)
    return (_twist(spec, a) @ b + b @ a).norm() / (b.norm() * max(1.0, a.norm()))


def is_algebra_element(spec: GroupSpec, a: FMatrix, tol: float = MEMBERSHIP_TOL) -> bool:
    return algebra_defect(spec, a) <= tol


@lru_cache(maxsize=None)
def algebra_constraint_matrix(spec: GroupSpec) -> np.ndarray:
    """Real matrix of A -> conj(A)^t B + B A (empty for GL families)."""
    if spec.is_gl:
        return np.zeros((0, spec.real_matrix_dim))
    b = form_matrix(spec)
    return real_matrix_of_map(lambda a: _twist(spec, a) @ b + b @ a,
                              spec.field, spec.n, spec.n)


@lru_cache(maxsize=None)
def algebra_nullspace(spec: GroupSpec) -> np.ndarray:
    """Orthonormal real-coordinate basis of the Lie algebra."""
    basis = real_nullspace_basis(algebra_constraint_matrix(spec), RANK_TOL)
    basis.setflags(write=False)
    return basis


def algebra_dim(spec: GroupSpec) -> int:
    return algebra_nullspace(spec).shape[1]


def project_to_algebra(spec: GroupSpec, a: FMatrix) -> FMatrix:
    """Frobenius-orthogonal projection onto the Lie algebra."""
    basis = algebra_nullspace(spec)
    coords = to_real_coords(a)
    proj = basis @ (basis.T @ coords)
    return from_real_coords(spec.field, spec.n, spec.n, proj)


# -- elements --------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupElement:
    """A matrix tagged with the group it is supposed to belong to."""

    spec: GroupSpec
    mat: FMatrix

    def defect(self) -> float:
        return membership_defect(self.spec, self.mat)


def random_algebra_element(spec: GroupSpec, seed: int) -> FMatrix:
    """Standard-normal real coordinates projected onto the algebra."""
    rng = np.random.default_rng(seed)
    coords = rng.standard_normal(spec.real_matrix_dim)
    basis = algebra_nullspace(spec)
    proj = basis @ (basis.T @ coords)
    return from_real_coords(spec.field, spec.n, spec.n, proj)


def random_element(spec: GroupSpec, seed: int, scale: float = 0.5) -> GroupElement:
    """exp(scale * A) for a seeded random Lie algebra element A.

    Deterministic per seed; scale = 0 gives the identity.
    """
    if scale < 0:
        raise InvalidConfig(f"scale must be >= 0, got {scale}")
    a = random_algebra_element(spec, seed)
    return GroupElement(spec, matrix_exp(a * scale))


def identity_element(spec: GroupSpec) -> GroupElement:
    return GroupElement(spec, FMatrix.eye(spec.field, spec.n))


def require_member(spec: GroupSpec, g: FMatrix, tol: float = MEMBERSHIP_TOL) -> GroupElement:
    defect = membership_defect(spec, g)
    if defect > tol:
        raise NotGroupElement(f"membership defect {defect:.3e} > {tol:.1e} for {spec}")
    return GroupElement(spec, g)


# -- group-level involutions ----------------------------------------------


def cartan_rho(g: GroupElement) -> GroupElement:
    """g -> (conj(g)^t)^{-1}, the Cartan involution at the identity."""
    return GroupElement(g.spec, inverse(g.mat.H))


def eta(g: GroupElement) -> GroupElement:
    """g -> conj(g)^t; an anti-automorphism fixing Hermitian members."""
    return GroupElement(g.spec, g.mat.H)


def cartan_rho_p(g: GroupElement, p: FMatrix) -> GroupElement:
    """g -> P^{-1} (conj(g)^t)^{-1} P for Hermitian positive-definite P."""
    if min_eigen_hermitian(p) <= 0.0:
        raise NotPositiveDefinite("generalized involution needs P > 0")
    return GroupElement(g.spec, inverse(p) @ inverse(g.mat.H) @ p)
