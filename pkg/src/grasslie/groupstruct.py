"""Group structure on double graph-like subspaces.

A frame (X, Y, L0) of pairwise compatible n-dimensional subspaces of a
2n-dimensional space turns M_XY = {L : L ^ X-perp = L ^ Y-perp = 0}
into a group with identity L0: each L determines an isomorphism
phi_L = (project to Y) o (project to X restricted to L)^{-1} from X to
Y, and composition multiplies these maps through the base point.

Computation moves to a normal form by the unitary change of basis
U = [frame(X) | frame(X-perp)], in which X = span[I; 0], Y = span[A; I]
and every L in M_XY is span[I; B]; the composite is then

    B' = (A* + B2) (A* + B0)^{-1} (A* + B1) - A*

with A* the conjugate transpose (plain transpose over R).
"""

from __future__ import annotations

from functools import lru_cache

from .config import RANK_TOL
from .errors import BoundaryPoint, NotInMXY
from .grassmann import (IsotropicPoint, Subspace, check_same_ambient,
                        diagonal_subspace, intersection_dim, v1_subspace,
                        v2_subspace)
from .groups import GroupSpec
from .matgeom import (FMatrix, hstack, inverse, numeric_rank, orthocomplement,
                      vstack)


class GraphFrame:
    """The data (X, Y, L0) plus the cached normal-form change of basis."""

    def __init__(self, x: Subspace, y: Subspace, base: Subspace):
        check_same_ambient(x, y)
        check_same_ambient(x, base)
        if x.ambient != 2 * x.dim or y.dim != x.dim or base.dim != x.dim:
            raise NotInMXY("frame subspaces must be half-dimensional")
        if intersection_dim(x, y) != 0:
            raise NotInMXY("X and Y intersect nontrivially")
        self.x = x
        self.y = y
        self.base = base
        self.n = x.dim
        self.field = x.field
        qxp = orthocomplement(x.frame)
        self.u_basis = hstack(x.frame, qxp)
        ytil = self.u_basis.H @ y.frame
        ybot = ytil.rows_slice(self.n, 2 * self.n)
        if numeric_rank(ybot) < self.n:
            raise NotInMXY("Y intersects X inside the chosen frame")
        self.a_mat = ytil.rows_slice(0, self.n) @ inverse(ybot)
        self.a_star = self.a_mat.H
        self.b0 = self.coords(base)

    def coords(self, l: Subspace) -> FMatrix:
        """B with L = span(U [I; B]); requires L in M_XY."""
        check_same_ambient(self.x, l)
        if l.dim != self.n:
            raise NotInMXY(f"expected dimension {self.n}, got {l.dim}")
        ltil = self.u_basis.H @ l.frame
        top = ltil.rows_slice(0, self.n)
        if numeric_rank(top) < self.n:
            raise NotInMXY("subspace meets the orthocomplement of X")
        b = ltil.rows_slice(self.n, 2 * self.n) @ inverse(top)
        if numeric_rank(self.a_star + b) < self.n:
            raise NotInMXY("subspace meets the orthocomplement of Y")
        return b

    def from_coords(self, b: FMatrix) -> Subspace:
        return Subspace.from_span(self.u_basis @ vstack(FMatrix.eye(self.field, self.n), b))


def phi_map(frame: GraphFrame, l: Subspace) -> FMatrix:
    """Matrix of phi_L : X -> Y in the orthonormal frames of X and Y."""
    x_coords = frame.x.frame.H @ l.frame
    if numeric_rank(x_coords) < frame.n:
        raise NotInMXY("subspace meets the orthocomplement of X")
    y_coords = frame.y.frame.H @ l.frame
    phi = y_coords @ inverse(x_coords)
    if numeric_rank(phi) < frame.n:
        raise NotInMXY("subspace meets the orthocomplement of Y")
    return phi


def compose(frame: GraphFrame, l1: Subspace, l2: Subspace) -> Subspace:
    """The unique L with phi_L = phi_L2 o phi_L0^{-1} o phi_L1."""
    b1 = frame.coords(l1)
    b2 = frame.coords(l2)
    astar = frame.a_star
    middle = inverse(astar + frame.b0)
    bprime = (astar + b2) @ middle @ (astar + b1) - astar
    return frame.from_coords(bprime)


def invert(frame: GraphFrame, l: Subspace) -> Subspace:
    """The unique L' with phi_L' = phi_L0 o phi_L^{-1} o phi_L0."""
    b = frame.coords(l)
    astar = frame.a_star
    edge = astar + frame.b0
    bprime = edge @ inverse(astar + b) @ edge - astar
    return frame.from_coords(bprime)


@lru_cache(maxsize=None)
def standard_frame(field: str, n: int) -> GraphFrame:
    """(V1, V2, diagonal): the frame under which M_{V1 V2} is the group."""
    return GraphFrame(v1_subspace(field, n), v2_subspace(field, n),
                      diagonal_subspace(field, n))


def _require_interior(spec: GroupSpec, l: Subspace):
    v1 = v1_subspace(spec.field, spec.n)
    v2 = v2_subspace(spec.field, spec.n)
    if intersection_dim(l, v1) or intersection_dim(l, v2):
        raise BoundaryPoint("boundary points do not compose")


def group_compose(spec: GroupSpec, p1: IsotropicPoint, p2: IsotropicPoint) -> IsotropicPoint:
    """Compose two graph-like points; extracts to g2 g1 on graphs."""
    _require_interior(spec, p1.subspace)
    _require_interior(spec, p2.subspace)
    frame = standard_frame(spec.field, spec.n)
    return IsotropicPoint(spec, compose(frame, p1.subspace, p2.subspace))


def group_invert(spec: GroupSpec, p: IsotropicPoint) -> IsotropicPoint:
    """Inverse for the standard frame; extracts to g^{-1} on graphs."""
    _require_interior(spec, p.subspace)
    frame = standard_frame(spec.field, spec.n)
    return IsotropicPoint(spec, invert(frame, p.subspace))


def group_identity(spec: GroupSpec) -> IsotropicPoint:
    return IsotropicPoint(spec, diagonal_subspace(spec.field, spec.n))
