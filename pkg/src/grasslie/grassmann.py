"""Subspaces of V + V, graph embeddings of group elements, isotropy for
the doubled form b + (-b), and constructive boundary strata.

A group element g acts as the graph subspace span[I; g] inside the
doubled space V + V.  For the seven form families these graphs are
maximal isotropic subspaces of the doubled form; the boundary of the
group inside the Grassmannian consists of isotropic subspaces meeting
V1 = V + 0 and V2 = 0 + V nontrivially, and is sampled stratum by
stratum from explicit null vectors of the defining form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import MEMBERSHIP_TOL, RANK_TOL
from .errors import (AmbientMismatch, BoundaryPoint, NoIsotropicVectors,
                     NotGroupElement, ShapeMismatch, WrongField)
from .groups import (GL_C, GL_H, GL_R, O_C, O_PQ, O_STAR, SP_C, SP_PQ, SP_R,
                     U_PQ, GroupElement, GroupSpec, form_matrix, gl,
                     membership_defect, o_c, o_pq, o_star, random_element,
                     sp_c, sp_pq, sp_r, u_pq)
from .matgeom import (FMatrix, fmatrix_from_json, fmatrix_to_json, hstack,
                      inverse, numeric_rank, orthonormalize, random_fmatrix,
                      vstack)
from .scalar import COMPLEX, QUATERNION, REAL


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace carried by a canonical orthonormal frame (columns)."""

    frame: FMatrix

    @property
    def field(self) -> str:
        return self.frame.field

    @property
    def ambient(self) -> int:
        return self.frame.rows

    @property
    def dim(self) -> int:
        return self.frame.cols

    @classmethod
    def from_span(cls, m: FMatrix, rank_tol: float = RANK_TOL) -> "Subspace":
        """Canonicalize a full-column-rank spanning set."""
        return cls(orthonormalize(m, rank_tol))

    def top_block(self) -> FMatrix:
        return self.frame.rows_slice(0, self.ambient // 2)

    def bottom_block(self) -> FMatrix:
        return self.frame.rows_slice(self.ambient // 2, self.ambient)

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "frame": fmatrix_to_json(self.frame)}

    @classmethod
    def from_json(cls, doc: dict) -> "Subspace":
        frame = fmatrix_from_json(doc["frame"])
        if frame.rows != int(doc["ambient"]):
            raise ShapeMismatch("ambient does not match frame rows")
        return cls(frame)


def check_same_ambient(l1: Subspace, l2: Subspace):
    if l1.field != l2.field:
        raise AmbientMismatch(f"fields differ: {l1.field} vs {l2.field}")
    if l1.ambient != l2.ambient:
        raise AmbientMismatch(f"ambients differ: {l1.ambient} vs {l2.ambient}")


def v1_subspace(field: str, n: int) -> Subspace:
    """V1 = V + 0 inside the doubled space."""
    return Subspace(vstack(FMatrix.eye(field, n), FMatrix.zeros(field, n, n)))


def v2_subspace(field: str, n: int) -> Subspace:
    """V2 = 0 + V inside the doubled space."""
    return Subspace(vstack(FMatrix.zeros(field, n, n), FMatrix.eye(field, n)))


def diagonal_subspace(field: str, n: int) -> Subspace:
    """The graph of the identity, span[I; I]."""
    return graph_subspace(FMatrix.eye(field, n))


def graph_subspace(g: FMatrix) -> Subspace:
    """span[I; g] for any square matrix g (no group check)."""
    if g.rows != g.cols:
        raise ShapeMismatch(f"graphs need square matrices, got {g.shape}")
    return Subspace.from_span(vstack(FMatrix.eye(g.field, g.rows), g))


def random_subspace(field: str, ambient: int, dim: int, seed: int) -> Subspace:
    """Seeded Gaussian subspace (canonical frame of a random spanning set)."""
    rng = np.random.default_rng(seed)
    return Subspace.from_span(random_fmatrix(field, ambient, dim, rng))


def intersection_dim(l1: Subspace, l2: Subspace, tol: float = RANK_TOL) -> int:
    """dim(L1 ^ L2) = dim L1 + dim L2 - rank[frame1 | frame2]."""
    check_same_ambient(l1, l2)
    return l1.dim + l2.dim - numeric_rank(hstack(l1.frame, l2.frame), tol)


# -- the doubled form and isotropy ---------------------------------------


@lru_cache(maxsize=None)
def big_form(spec: GroupSpec) -> FMatrix:
    """Matrix of b + (-b) on the doubled space (NoForm for GL families)."""
    b = form_matrix(spec)
    n = spec.n
    zero = FMatrix.zeros(spec.field, n, n)
    return vstack(hstack(b, zero), hstack(zero, -b))


def isotropy_defect(spec: GroupSpec, l: Subspace) -> float:
    """Frobenius norm of the doubled-form Gram matrix of the frame."""
    if l.field != spec.field:
        raise WrongField(f"{spec} lives over {spec.field}, subspace over {l.field}")
    if l.ambient != 2 * spec.n:
        raise AmbientMismatch(f"{spec} doubles to ambient {2 * spec.n}, got {l.ambient}")
    w = big_form(spec)
    z = l.frame
    left = z.H if spec.sesquilinear else z.transpose()
    return (left @ w @ z).norm()


def is_isotropic(spec: GroupSpec, l: Subspace, tol: float = MEMBERSHIP_TOL) -> bool:
    return isotropy_defect(spec, l) <= tol


@dataclass(frozen=True, eq=False)
class IsotropicPoint:
    """A point of the compactified group: a subspace tagged with its group."""

    spec: GroupSpec
    subspace: Subspace

    @property
    def frame(self) -> FMatrix:
        return self.subspace.frame

    def defect(self) -> float:
        return isotropy_defect(self.spec, self.subspace) if self.spec.has_form else 0.0

    def to_json(self) -> dict:
        doc = self.subspace.to_json()
        doc["group"] = self.spec.code()
        doc["isotropy_defect"] = self.defect()
        return doc


# -- graphs ----------------------------------------------------------------


def graph_embed(g: GroupElement, tol: float = MEMBERSHIP_TOL) -> IsotropicPoint:
    """The graph point L_g = span[I; g] of a verified group element."""
    defect = membership_defect(g.spec, g.mat)
    if defect > tol:
        raise NotGroupElement(f"membership defect {defect:.3e} > {tol:.1e} for {g.spec}")
    return IsotropicPoint(g.spec, graph_subspace(g.mat))


def graph_extract(l: Subspace, tol: float = RANK_TOL) -> FMatrix:
    """Recover g from a graph subspace: frame [A; B] -> B A^{-1}.

    Raises BoundaryPoint when the subspace meets V1 or V2, i.e. when a
    block of the frame is rank deficient.
    """
    if l.ambient % 2 or 2 * l.dim != l.ambient:
        raise ShapeMismatch(f"graphs are half-dimensional, got {l.dim} in {l.ambient}")
    top = l.top_block()
    bottom = l.bottom_block()
    if numeric_rank(top, tol) < l.dim:
        raise BoundaryPoint("subspace meets V2: top block rank deficient")
    if numeric_rank(bottom, tol) < l.dim:
        raise BoundaryPoint("subspace meets V1: bottom block rank deficient")
    return bottom @ inverse(top)


def tangent_param(spec: GroupSpec, a: FMatrix) -> Subspace:
    """span[I + A; I - A], a chart around the identity graph."""
    if a.field != spec.field or a.shape != (spec.n, spec.n):
        raise ShapeMismatch(f"{spec} needs a {spec.n}x{spec.n} matrix over {spec.field}")
    eye = FMatrix.eye(spec.field, spec.n)
    return Subspace.from_span(vstack(eye + a, eye - a))


# -- boundary strata -------------------------------------------------------


def witt_index(spec: GroupSpec) -> int:
    """Largest dimension of an isotropic subspace compatible with equal
    intersection dimensions (k columns on each side needs 2k <= n)."""
    if spec.family in (O_PQ, U_PQ, SP_PQ):
        return min(spec.p, spec.q)
    return spec.n // 2


def admissible_strata(spec: GroupSpec) -> list[int]:
    return list(range(witt_index(spec) + 1))


def _standard_columns(field: str, n: int, indices) -> FMatrix:
    eye = FMatrix.eye(field, n)
    return FMatrix(field, eye.data[:, list(indices)]) if indices else FMatrix.zeros(field, n, 0)


def _null_pair_data(spec: GroupSpec, k: int):
    """Null vectors u_t, partners u*_t, leftover coordinates and the
    group of the restricted form on them.

    Returns (u, ustar, d_frame, sub_spec) with u, ustar n x k frames of
    isotropic subspaces paired nondegenerately, and d_frame the frame of
    their form-orthogonal complement on which the form restricts to the
    standard form of sub_spec (sub_spec is None when nothing is left).
    """
    field, n = spec.field, spec.n
    fam = spec.family

    def cols(vecs: list[np.ndarray]) -> FMatrix:
        if not vecs:
            return FMatrix.zeros(field, n, 0)
        arr = np.stack(vecs, axis=1)
        if field == REAL:
            return FMatrix.from_real(arr.real)
        if field == COMPLEX:
            return FMatrix.from_complex(arr)
        raise WrongField("quaternionic families build columns from parts")

    if fam in (GL_R, GL_C, GL_H):
        u = _standard_columns(field, n, range(k))
        ustar = _standard_columns(field, n, range(k, 2 * k))
        rest = list(range(2 * k, n))
        sub = gl(field, n - 2 * k) if rest else None
        return u, ustar, _standard_columns(field, n, rest), sub

    if fam in (O_PQ, U_PQ, SP_PQ):
        p, q = spec.p, spec.q
        e = np.eye(n)
        u_vecs = [e[:, t] + e[:, p + t] for t in range(k)]
        us_vecs = [e[:, t] - e[:, p + t] for t in range(k)]
        rest = list(range(k, p)) + list(range(p + k, n))
        maker = {O_PQ: o_pq, U_PQ: u_pq, SP_PQ: sp_pq}[fam]
        sub = maker(p - k, q - k) if rest else None
        if field == QUATERNION:
            u = FMatrix.from_quat_parts(np.stack(u_vecs, axis=1) if k else np.zeros((n, 0)),
                                        np.zeros((n, k)))
            ustar = FMatrix.from_quat_parts(np.stack(us_vecs, axis=1) if k else np.zeros((n, 0)),
                                            np.zeros((n, k)))
        else:
            u, ustar = cols(u_vecs), cols(us_vecs)
        return u, ustar, _standard_columns(field, n, rest), sub

    if fam in (SP_R, SP_C):
        m = n // 2
        u = _standard_columns(field, n, range(k))
        ustar = _standard_columns(field, n, range(m, m + k))
        rest = list(range(k, m)) + list(range(m + k, n))
        maker = sp_r if fam == SP_R else sp_c
        sub = maker(n - 2 * k) if rest else None
        return u, ustar, _standard_columns(field, n, rest), sub

    if fam == O_C:
        e = np.eye(n, dtype=complex)
        u_vecs = [e[:, 2 * t] + 1j * e[:, 2 * t + 1] for t in range(k)]
        us_vecs = [e[:, 2 * t] - 1j * e[:, 2 * t + 1] for t in range(k)]
        rest = list(range(2 * k, n))
        sub = o_c(n - 2 * k) if rest else None
        return cols(u_vecs), cols(us_vecs), _standard_columns(field, n, rest), sub

    # O*(2n): e_{2t} + e_{2t+1} j is null for the form conj(u)^t (iI) v
    e = np.eye(n, dtype=complex)
    a_cols = np.stack([e[:, 2 * t] for t in range(k)], axis=1) if k else np.zeros((n, 0))
    b_cols = np.stack([e[:, 2 * t + 1] for t in range(k)], axis=1) if k else np.zeros((n, 0))
    u = FMatrix.from_quat_parts(a_cols, b_cols)
    ustar = FMatrix.from_quat_parts(a_cols, -b_cols)
    rest = list(range(2 * k, n))
    sub = o_star(2 * (n - 2 * k)) if rest else None
    return u, ustar, _standard_columns(field, n, rest), sub


@dataclass(frozen=True, eq=False)
class StratumSample:
    """A sampled boundary point together with its construction data.

    Outside the symplectic families the same null vectors u_i sit on both
    sides, span{(u_i, 0), (0, u_i)}, and the interior shear moves along
    the partner vectors, span{(u, d u*), (d u*, u)} — isotropic because
    the form takes equal values on (u, u*) and (u*, u).  An antisymmetric
    form breaks that cancellation, so sp_r / sp_c use the asymmetric
    layout span{(u*, 0), (0, u)} with shear span{(d u, u), (u*, d u*)}.
    """

    spec: GroupSpec
    k: int
    u: FMatrix          # n x k null vectors carried by the V2 side
    ustar: FMatrix      # n x k partner null vectors
    d_frame: FMatrix    # n x (n - 2k) coordinates of the graph part
    graph_mat: FMatrix | None   # isometry of the restricted form, or None

    def _graph_cols(self) -> FMatrix | None:
        if self.d_frame.cols == 0:
            return None
        bottom = self.d_frame @ self.graph_mat
        return vstack(self.d_frame, bottom)

    def _symmetric(self) -> bool:
        return self.spec.family not in (SP_R, SP_C)

    def point(self) -> IsotropicPoint:
        n, field = self.spec.n, self.spec.field
        zero = FMatrix.zeros(field, n, self.k)
        pieces = []
        if self.k:
            v1_side = self.u if self._symmetric() else self.ustar
            pieces.append(vstack(v1_side, zero))
            pieces.append(vstack(zero, self.u))
        graph = self._graph_cols()
        if graph is not None:
            pieces.append(graph)
        return IsotropicPoint(self.spec, Subspace.from_span(hstack(*pieces)))

    def interior_point(self, delta: float) -> IsotropicPoint:
        """An isotropic point at distance O(delta) from point() with
        trivial V1/V2 intersections."""
        if not (0.0 < abs(delta) < 1.0):
            raise ValueError(f"delta must lie in (0, 1), got {delta}")
        pieces = []
        if self.k:
            if self._symmetric():
                pieces.append(vstack(self.u, self.ustar * delta))
                pieces.append(vstack(self.ustar * delta, self.u))
            else:
                pieces.append(vstack(self.u * delta, self.u))
                pieces.append(vstack(self.ustar, self.ustar * delta))
        graph = self._graph_cols()
        if graph is not None:
            pieces.append(graph)
        return IsotropicPoint(self.spec, Subspace.from_span(hstack(*pieces)))


def sample_stratum(spec: GroupSpec, k: int, seed: int) -> StratumSample:
    """Construct a boundary point with dim(L ^ V1) = dim(L ^ V2) = k."""
    if k < 0:
        raise NoIsotropicVectors(f"stratum index must be >= 0, got {k}")
    cap = witt_index(spec)
    if k > cap:
        if cap == 0:
            raise NoIsotropicVectors(
                f"{spec} is definite: the form admits no isotropic vectors")
        raise NoIsotropicVectors(f"{spec} admits strata only up to k = {cap}")
    u, ustar, d_frame, sub = _null_pair_data(spec, k)
    graph_mat = random_element(sub, seed).mat if sub is not None else None
    return StratumSample(spec, k, u, ustar, d_frame, graph_mat)


def boundary_sample(spec: GroupSpec, k: int, seed: int) -> IsotropicPoint:
    """A boundary point of stratum k; k = 0 reduces to a random graph."""
    return sample_stratum(spec, k, seed).point()
