"""Involutions of the compactified groups realized as form complements.

Each involution is "take the orthogonal complement with respect to an
auxiliary ambient form" on the doubled space.  With F the form matrix,

    sesquilinear:  L  |->  F^{-1} (L-perp)
    bilinear:      L  |->  F^{-1} ((conj L)-perp)

where perp is the standard Hermitian complement.  On graph points L_g
the three named forms act by

    h = diag(I, -I):   L_g |-> L_{(g*)^{-1}}      (Cartan involution)
    w = [[0,I],[-I,0]]: L_g |-> L_{g*}
    b + (-b):          fixes every isotropic point of the group

and diag(P, -P) for a positive member P gives g |-> P^{-1}(g*)^{-1}P.
The Cayley transform is included here as the subspace map
[top; bottom] |-> span[top + bottom; top - bottom], which restricts to
g |-> (I - g)(I + g)^{-1} on graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .config import MEMBERSHIP_TOL, RANK_TOL
from .errors import AmbientMismatch, NotPositiveDefinite, SingularShift, WrongField
from .grassmann import Subspace, big_form
from .groups import GroupSpec
from .matgeom import (FMatrix, hstack, inverse, min_eigen_hermitian,
                      numeric_rank, orthocomplement, vstack)


@dataclass(frozen=True)
class AmbientForm:
    """A nondegenerate form on the doubled space, tagged by linearity type."""

    name: str
    matrix: FMatrix
    sesquilinear: bool


def _block_diag_pm(b: FMatrix) -> FMatrix:
    zero = FMatrix.zeros(b.field, b.rows, b.cols)
    return vstack(hstack(b, zero), hstack(zero, -b))


@lru_cache(maxsize=None)
def h_form(field: str, n: int) -> AmbientForm:
    return AmbientForm("h", _block_diag_pm(FMatrix.eye(field, n)), True)


@lru_cache(maxsize=None)
def w_form(field: str, n: int) -> AmbientForm:
    eye = FMatrix.eye(field, n)
    zero = FMatrix.zeros(field, n, n)
    return AmbientForm("w", vstack(hstack(zero, eye), hstack(-eye, zero)), True)


def b_form(spec: GroupSpec) -> AmbientForm:
    return AmbientForm("b", big_form(spec), spec.sesquilinear)


def hp_form(p: FMatrix) -> AmbientForm:
    """diag(P, -P) for Hermitian positive definite P."""
    if min_eigen_hermitian(p) <= 0.0:
        raise NotPositiveDefinite("hp forms need a positive definite matrix")
    return AmbientForm("hp", _block_diag_pm(p), True)


def form_complement(form: AmbientForm, l: Subspace) -> Subspace:
    """The complement of l with respect to the ambient form."""
    if form.matrix.rows != l.ambient:
        raise AmbientMismatch(
            f"form on dimension {form.matrix.rows}, subspace in {l.ambient}")
    if form.matrix.field != l.field:
        raise WrongField(f"form over {form.matrix.field}, subspace over {l.field}")
    frame = l.frame
    if not form.sesquilinear:
        if l.field == "H":
            raise WrongField("bilinear complements are not defined over H")
        frame = frame.conj()
    return Subspace.from_span(inverse(form.matrix) @ orthocomplement(frame))


def rho_bar(l: Subspace) -> Subspace:
    """Cartan involution: graphs of g go to graphs of (g*)^{-1}."""
    return form_complement(h_form(l.field, l.ambient // 2), l)


def eta_bar(l: Subspace) -> Subspace:
    """The transpose involution: graphs of g go to graphs of g*."""
    return form_complement(w_form(l.field, l.ambient // 2), l)


def sigma_bar(spec: GroupSpec, l: Subspace) -> Subspace:
    """Complement for the doubled group form; fixes isotropic points."""
    return form_complement(b_form(spec), l)


def rho_bar_p(p: FMatrix, l: Subspace) -> Subspace:
    """Cartan involution twisted by a positive member P."""
    return form_complement(hp_form(p), l)


# -- the Cayley transform ---------------------------------------------------


def cayley_matrix(g: FMatrix, tol: float = RANK_TOL) -> FMatrix:
    """(I - g)(I + g)^{-1}; raises SingularShift when -1 is an eigenvalue."""
    eye = FMatrix.eye(g.field, g.rows)
    if numeric_rank(eye + g, tol) < g.rows:
        raise SingularShift("I + g is singular; the Cayley transform blows up")
    return (eye - g) @ inverse(eye + g)


def cayley_frame(l: Subspace) -> FMatrix:
    """The raw (non-orthonormal) frame [top + bottom; top - bottom]."""
    top = l.top_block()
    bottom = l.bottom_block()
    return vstack(top + bottom, top - bottom)


def cayley_grass(l: Subspace) -> Subspace:
    """Subspace Cayley transform; involutive on the whole Grassmannian."""
    return Subspace.from_span(cayley_frame(l))


# -- the bounded realization ------------------------------------------------


def w_gram(l: Subspace) -> FMatrix:
    w = w_form(l.field, l.ambient // 2)
    return l.frame.H @ w.matrix @ l.frame


def w_isotropy_defect(l: Subspace) -> float:
    """Frobenius norm of the w-form Gram matrix of the orthonormal frame."""
    return w_gram(l).norm()


def is_w_isotropic(l: Subspace, tol: float = MEMBERSHIP_TOL) -> bool:
    return w_isotropy_defect(l) <= tol


def h_gram(l: Subspace) -> FMatrix:
    h = h_form(l.field, l.ambient // 2)
    return l.frame.H @ h.matrix @ l.frame


def is_spacelike(l: Subspace, tol: float = RANK_TOL) -> bool:
    """True when the h-form restricted to the subspace is positive definite."""
    return min_eigen_hermitian(h_gram(l)) > tol
