"""Cartan decompositions, fixed-component samples, and dimension audits.

The Lie algebra of each family splits as g = k + m with k the
skew-Hermitian members (tangent to the maximal compact subgroup) and m
the Hermitian members.  All dimensions here are real dimensions,
computed as nullities of stacked real constraint matrices and checked
against closed-form counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .config import RANK_TOL
from .errors import BadSignature, InvalidConfig
from .grassmann import IsotropicPoint, graph_subspace
from .groups import (GroupSpec, algebra_constraint_matrix, gl, o_c, o_pq,
                     o_star, random_element, sp_c, sp_pq, sp_r, u_pq)
from .involutions import w_isotropy_defect
from .matgeom import (FMatrix, from_real_coords, hermitian_eigenvalues,
                      matrix_exp, nullspace_real_dim, real_matrix_of_map,
                      real_nullspace_basis, re_trace_product)


@dataclass(frozen=True)
class CartanSplit:
    spec: GroupSpec
    dim_g: int
    dim_k: int
    dim_m: int


@lru_cache(maxsize=None)
def _hermitian_part_matrix(field: str, n: int) -> np.ndarray:
    """Real matrix of A -> A + A*; its nullspace is the skew-Hermitians."""
    return real_matrix_of_map(lambda a: a + a.H, field, n, n)


@lru_cache(maxsize=None)
def _skew_part_matrix(field: str, n: int) -> np.ndarray:
    """Real matrix of A -> A - A*; its nullspace is the Hermitians."""
    return real_matrix_of_map(lambda a: a - a.H, field, n, n)


@lru_cache(maxsize=None)
def k_nullspace(spec: GroupSpec) -> np.ndarray:
    """Orthonormal real-coordinate basis of k = {A in g : A* = -A}."""
    stacked = np.vstack([algebra_constraint_matrix(spec),
                         _hermitian_part_matrix(spec.field, spec.n)])
    basis = real_nullspace_basis(stacked, RANK_TOL)
    basis.setflags(write=False)
    return basis


@lru_cache(maxsize=None)
def m_nullspace(spec: GroupSpec) -> np.ndarray:
    """Orthonormal real-coordinate basis of m = {A in g : A* = A}."""
    stacked = np.vstack([algebra_constraint_matrix(spec),
                         _skew_part_matrix(spec.field, spec.n)])
    basis = real_nullspace_basis(stacked, RANK_TOL)
    basis.setflags(write=False)
    return basis


def cartan_split(spec: GroupSpec) -> CartanSplit:
    dim_g = nullspace_real_dim(algebra_constraint_matrix(spec), RANK_TOL)
    return CartanSplit(spec, dim_g, k_nullspace(spec).shape[1],
                       m_nullspace(spec).shape[1])


def expected_cartan_dims(spec: GroupSpec) -> tuple[int, int, int]:
    """Closed-form (dim_g, dim_k, dim_m) in real dimensions."""
    n, p, q = spec.n, spec.p, spec.q
    if spec.family == "gl_r":
        return n * n, n * (n - 1) // 2, n * (n + 1) // 2
    if spec.family == "gl_c":
        return 2 * n * n, n * n, n * n
    if spec.family == "gl_h":
        return 4 * n * n, n * (2 * n + 1), n * (2 * n - 1)
    if spec.family == "o":
        return (n * (n - 1) // 2,
                (p * (p - 1) + q * (q - 1)) // 2, p * q)
    if spec.family == "u":
        return n * n, p * p + q * q, 2 * p * q
    if spec.family == "sp":
        return (n * (2 * n + 1),
                p * (2 * p + 1) + q * (2 * q + 1), 4 * p * q)
    if spec.family == "sp_r":
        m = n // 2
        return m * (2 * m + 1), m * m, m * (m + 1)
    if spec.family == "sp_c":
        m = n // 2
        return 2 * m * (2 * m + 1), m * (2 * m + 1), m * (2 * m + 1)
    if spec.family == "o_c":
        return n * (n - 1), n * (n - 1) // 2, n * (n - 1) // 2
    # o_star with quaternionic size n
    return n * (2 * n - 1), n * n, n * (n - 1)


def k_sample(spec: GroupSpec, seed: int) -> FMatrix:
    """Seeded Gaussian element of k in the orthonormal nullspace basis."""
    basis = k_nullspace(spec)
    coords = np.random.default_rng(seed).standard_normal(basis.shape[1])
    return from_real_coords(spec.field, spec.n, spec.n, basis @ coords)


def m_sample(spec: GroupSpec, seed: int) -> FMatrix:
    """Seeded Gaussian element of m in the orthonormal nullspace basis."""
    basis = m_nullspace(spec)
    coords = np.random.default_rng(seed).standard_normal(basis.shape[1])
    return from_real_coords(spec.field, spec.n, spec.n, basis @ coords)


def unitary_member(spec: GroupSpec, seed: int, scale: float = 0.5) -> FMatrix:
    """exp(scale * k-sample): a member of the maximal compact subgroup."""
    return matrix_exp(k_sample(spec, seed) * scale)


def frobenius_orthogonality_defect(spec: GroupSpec) -> float:
    """max |Re trace(k* m)| over the computed basis pairs of k and m."""
    kb = k_nullspace(spec)
    mb = m_nullspace(spec)
    worst = 0.0
    for i in range(kb.shape[1]):
        kmat = from_real_coords(spec.field, spec.n, spec.n, kb[:, i])
        for j in range(mb.shape[1]):
            mmat = from_real_coords(spec.field, spec.n, spec.n, mb[:, j])
            worst = max(worst, abs(re_trace_product(kmat, mmat)))
    return worst


# -- component samples -------------------------------------------------------


def hermitian_signature(h: FMatrix, tol: float = RANK_TOL) -> tuple[int, int]:
    """(positive, negative) eigenvalue counts of a Hermitian matrix."""
    vals = hermitian_eigenvalues(h)
    cutoff = tol * max(float(np.max(np.abs(vals))), 1.0)
    return int(np.sum(vals > cutoff)), int(np.sum(vals < -cutoff))


def eta_fixed_component_sample(spec: GroupSpec, seed: int) -> IsotropicPoint:
    """The graph of g g* for a seeded random g; Hermitian positive definite."""
    g = random_element(spec, seed)
    return IsotropicPoint(spec, graph_subspace(g.mat @ g.mat.H))


def _signature_diag(field: str, p: int, q: int) -> FMatrix:
    diag = FMatrix.eye(field, p + q).data.copy()
    if field == "H":
        diag[p:, :, 0] *= -1.0
    else:
        diag[p:, :] *= -1.0
    return FMatrix(field, diag)


def other_component_sample(spec: GroupSpec, p: int, q: int, seed: int) -> IsotropicPoint:
    """The graph of g I_{p,q} g*: Hermitian with signature (p, q).

    Samples the non-identity components fixed by the transpose
    involution; intended for the general linear families.
    """
    if p < 0 or q < 0 or p + q != spec.n:
        raise BadSignature(f"need p + q = {spec.n} with p, q >= 0, got ({p}, {q})")
    g = random_element(spec, seed)
    h = g.mat @ _signature_diag(spec.field, p, q) @ g.mat.H
    return IsotropicPoint(spec, graph_subspace(h))


def borel_embedding_check(spec: GroupSpec, trials: int, seed: int) -> float:
    """Max w-isotropy defect over seeded graph-of-g-g* samples."""
    if trials < 1:
        raise InvalidConfig(f"trials must be >= 1, got {trials}")
    sub_seeds = np.random.SeedSequence(seed).generate_state(trials)
    return max(w_isotropy_defect(
        eta_fixed_component_sample(spec, int(s)).subspace) for s in sub_seeds)


# -- the dimension audit ------------------------------------------------------


@dataclass(frozen=True)
class DimensionAuditRow:
    spec: GroupSpec
    dim_g: int
    dim_k: int
    dim_m: int
    expected_g: int
    expected_k: int
    expected_m: int

    @property
    def passed(self) -> bool:
        return (self.dim_g == self.expected_g
                and self.dim_k == self.expected_k
                and self.dim_m == self.expected_m
                and self.dim_g == self.dim_k + self.dim_m)


def audit_specs(max_n: int) -> list[GroupSpec]:
    """Every family at every admissible size up to max_n."""
    if max_n < 2:
        raise InvalidConfig(f"max_n must be >= 2, got {max_n}")
    specs = []
    for n in range(2, max_n + 1):
        for field in ("R", "C", "H"):
            specs.append(gl(field, n))
    for n in range(2, max_n + 1):
        for q in range(0, n // 2 + 1):
            specs.extend([o_pq(n - q, q), u_pq(n - q, q), sp_pq(n - q, q)])
    for m in range(1, max_n // 2 + 1):
        specs.extend([sp_r(2 * m), sp_c(2 * m)])
    for n in range(2, max_n + 1):
        specs.append(o_c(n))
    for n in range(1, max_n // 2 + 1):
        specs.append(o_star(2 * n))
    return specs


def table2_audit(max_n: int) -> list[DimensionAuditRow]:
    rows = []
    for spec in audit_specs(max_n):
        split = cartan_split(spec)
        exp_g, exp_k, exp_m = expected_cartan_dims(spec)
        rows.append(DimensionAuditRow(spec, split.dim_g, split.dim_k,
                                      split.dim_m, exp_g, exp_k, exp_m))
    return rows
