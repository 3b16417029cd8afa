"""Dense matrices over R, C and H with the spectral helpers the rest of
the package needs: canonical orthonormalization, principal angles,
numerical rank, matrix exponentials and real nullspace dimensions.

Quaternionic matrices are stored as a pair of complex parts (q = a + b*j)
and every spectral computation routes through the complex embedding, in
which each entry becomes the 2x2 block [[a, b], [-conj(b), conj(a)]].
"""

from __future__ import annotations

import numpy as np
import scipy.linalg

from .config import RANK_TOL
from .errors import (NotHermitian, NotOrthonormal, NotPositiveDefinite,
                     RankDeficient, ShapeMismatch, Singular, WrongField)
from .scalar import COMPLEX, QUATERNION, REAL, Quaternion, check_field, real_dim

# Frames count as orthonormal when their Gram matrix is within this of I.
FRAME_TOL = 1e-8


class FMatrix:
    """Immutable dense matrix over one of the three fields.

    data layout: (rows, cols) float64 for R, (rows, cols) complex128 for
    C, and (rows, cols, 2) complex128 for H where [..., 0] and [..., 1]
    are the two complex parts of q = a + b*j.
    """

    __slots__ = ("field", "data")

    def __init__(self, field: str, data: np.ndarray):
        check_field(field)
        if field == REAL:
            arr = np.array(data, dtype=np.float64)
            if arr.ndim != 2:
                raise ShapeMismatch(f"real matrix needs 2 axes, got {arr.ndim}")
        elif field == COMPLEX:
            arr = np.array(data, dtype=np.complex128)
            if arr.ndim != 2:
                raise ShapeMismatch(f"complex matrix needs 2 axes, got {arr.ndim}")
        else:
            arr = np.array(data, dtype=np.complex128)
            if arr.ndim != 3 or arr.shape[2] != 2:
                raise ShapeMismatch("quaternion matrix needs shape (rows, cols, 2)")
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("FMatrix is immutable")

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, field: str, rows: int, cols: int) -> "FMatrix":
        check_field(field)
        if field == QUATERNION:
            return cls(field, np.zeros((rows, cols, 2), dtype=np.complex128))
        dtype = np.float64 if field == REAL else np.complex128
        return cls(field, np.zeros((rows, cols), dtype=dtype))

    @classmethod
    def eye(cls, field: str, n: int) -> "FMatrix":
        check_field(field)
        if field == QUATERNION:
            data = np.zeros((n, n, 2), dtype=np.complex128)
            data[np.arange(n), np.arange(n), 0] = 1.0
            return cls(field, data)
        dtype = np.float64 if field == REAL else np.complex128
        return cls(field, np.eye(n, dtype=dtype))

    @classmethod
    def from_real(cls, arr) -> "FMatrix":
        return cls(REAL, np.atleast_2d(np.asarray(arr, dtype=np.float64)))

    @classmethod
    def from_complex(cls, arr) -> "FMatrix":
        return cls(COMPLEX, np.atleast_2d(np.asarray(arr, dtype=np.complex128)))

    @classmethod
    def from_quat_parts(cls, a, b) -> "FMatrix":
        """Quaternionic matrix a + b*j from two complex arrays."""
        a = np.atleast_2d(np.asarray(a, dtype=np.complex128))
        b = np.atleast_2d(np.asarray(b, dtype=np.complex128))
        if a.shape != b.shape:
            raise ShapeMismatch(f"part shapes differ: {a.shape} vs {b.shape}")
        return cls(QUATERNION, np.stack([a, b], axis=2))

    @classmethod
    def from_rows(cls, field: str, rows) -> "FMatrix":
        """Build from nested lists of numbers / Quaternions."""
        check_field(field)
        r = len(rows)
        c = len(rows[0]) if r else 0
        out = cls.zeros(field, r, c).data.copy()
        for i, row in enumerate(rows):
            if len(row) != c:
                raise ShapeMismatch("ragged rows")
            for j, value in enumerate(row):
                if field == REAL:
                    out[i, j] = float(value)
                elif field == COMPLEX:
                    out[i, j] = complex(value)
                else:
                    q = value if isinstance(value, Quaternion) else Quaternion(
                        value.real, value.imag) if isinstance(value, complex) else Quaternion(float(value))
                    out[i, j, 0], out[i, j, 1] = q.as_complex_pair()
        return cls(field, out)

    # -- shape and entry access ---------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[0], self.data.shape[1]

    def entry(self, i: int, j: int):
        if self.field == REAL:
            return float(self.data[i, j])
        if self.field == COMPLEX:
            return complex(self.data[i, j])
        return Quaternion.from_complex_pair(self.data[i, j, 0], self.data[i, j, 1])

    def rows_slice(self, r0: int, r1: int) -> "FMatrix":
        return FMatrix(self.field, self.data[r0:r1])

    def cols_slice(self, c0: int, c1: int) -> "FMatrix":
        return FMatrix(self.field, self.data[:, c0:c1])

    # -- algebra -------------------------------------------------------

    def conj(self) -> "FMatrix":
        if self.field == REAL:
            return self
        if self.field == COMPLEX:
            return FMatrix(COMPLEX, np.conj(self.data))
        # conj(a + b j) = conj(a) - b j
        return FMatrix(QUATERNION,
                       np.stack([np.conj(self.data[..., 0]), -self.data[..., 1]], axis=2))

    def transpose(self) -> "FMatrix":
        if self.field == QUATERNION:
            return FMatrix(QUATERNION, self.data.transpose(1, 0, 2))
        return FMatrix(self.field, self.data.T)

    @property
    def H(self) -> "FMatrix":
        """Conjugate transpose."""
        return self.conj().transpose()

    def _check_same_field(self, other: "FMatrix"):
        if not isinstance(other, FMatrix):
            raise WrongField(f"expected FMatrix, got {type(other).__name__}")
        if self.field != other.field:
            raise WrongField(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.field == QUATERNION:
            a1, b1 = self.data[..., 0], self.data[..., 1]
            a2, b2 = other.data[..., 0], other.data[..., 1]
            a = a1 @ a2 - b1 @ np.conj(b2)
            b = a1 @ b2 + b1 @ np.conj(a2)
            return FMatrix(QUATERNION, np.stack([a, b], axis=2))
        return FMatrix(self.field, self.data @ other.data)

    def __add__(self, other: "FMatrix") -> "FMatrix":
        self._check_same_field(other)
        if self.data.shape != other.data.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        return FMatrix(self.field, self.data + other.data)

    def __sub__(self, other: "FMatrix") -> "FMatrix":
        return self + (-other)

    def __neg__(self) -> "FMatrix":
        return FMatrix(self.field, -self.data)

    def __mul__(self, scalar) -> "FMatrix":
        if isinstance(scalar, (int, float)):
            return FMatrix(self.field, self.data * float(scalar))
        if isinstance(scalar, complex) and self.field == COMPLEX:
            return FMatrix(self.field, self.data * scalar)
        raise WrongField(f"unsupported scalar {scalar!r} for field {self.field}")

    __rmul__ = __mul__

    def norm(self) -> float:
        """Frobenius norm (quaternionic entries contribute all four parts)."""
        return float(np.linalg.norm(self.data))

    def __repr__(self):
        return f"FMatrix({self.field}, {self.rows}x{self.cols})"


def hstack(*mats: FMatrix) -> FMatrix:
    first = mats[0]
    for m in mats[1:]:
        first._check_same_field(m)
    return FMatrix(first.field, np.concatenate([m.data for m in mats], axis=1))


def vstack(*mats: FMatrix) -> FMatrix:
    first = mats[0]
    for m in mats[1:]:
        first._check_same_field(m)
    return FMatrix(first.field, np.concatenate([m.data for m in mats], axis=0))


def conj_transpose(a: FMatrix) -> FMatrix:
    """Entrywise conjugate of the transpose; plain transpose over R."""
    return a.H


def frob_dist(a: FMatrix, b: FMatrix) -> float:
    return (a - b).norm()


def random_fmatrix(field: str, rows: int, cols: int, rng: np.random.Generator,
                   scale: float = 1.0) -> FMatrix:
    """Entries with independent standard-normal real coordinates."""
    check_field(field)
    coords = rng.standard_normal(real_dim(field) * rows * cols) * scale
    return from_real_coords(field, rows, cols, coords)


# -- complex embedding of quaternionic matrices ------------------------


def complex_embed(a: FMatrix) -> FMatrix:
    """Embed an H-matrix into C^(2r x 2c), one 2x2 block per entry."""
    if a.field != QUATERNION:
        raise WrongField("complex_embed expects a quaternionic matrix")
    return FMatrix(COMPLEX, _embed_arr(a.data))


def _embed_arr(data: np.ndarray) -> np.ndarray:
    r, c = data.shape[0], data.shape[1]
    out = np.zeros((2 * r, 2 * c), dtype=np.complex128)
    pa, pb = data[..., 0], data[..., 1]
    out[0::2, 0::2] = pa
    out[0::2, 1::2] = pb
    out[1::2, 0::2] = -np.conj(pb)
    out[1::2, 1::2] = np.conj(pa)
    return out


def complex_unembed(m: FMatrix | np.ndarray) -> FMatrix:
    """Inverse of complex_embed, averaging away floating-point asymmetry."""
    arr = m.data if isinstance(m, FMatrix) else np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] % 2 or arr.shape[1] % 2:
        raise ShapeMismatch("unembed expects an even-sized complex matrix")
    a = 0.5 * (arr[0::2, 0::2] + np.conj(arr[1::2, 1::2]))
    b = 0.5 * (arr[0::2, 1::2] - np.conj(arr[1::2, 0::2]))
    return FMatrix.from_quat_parts(a, b)


def _numeric(a: FMatrix) -> np.ndarray:
    """A plain 2-D array carrying the spectral data of a."""
    if a.field == QUATERNION:
        return _embed_arr(a.data)
    return a.data


# -- rank and singular values ------------------------------------------


def singular_values(a: FMatrix) -> np.ndarray:
    """Descending singular values (doubled multiplicities over H)."""
    return np.linalg.svd(_numeric(a), compute_uv=False)


def numeric_rank(a: FMatrix, tol: float = RANK_TOL) -> int:
    """Singular values above tol * (largest singular value); halved over H."""
    svals = singular_values(a)
    if svals.size == 0:
        return 0
    smax = float(svals[0])
    if smax == 0.0:
        return 0
    count = int(np.count_nonzero(svals > tol * smax))
    if a.field == QUATERNION:
        return (count + 1) // 2
    return count


# -- column helpers for the Gram-Schmidt engine -------------------------


def _col(a: FMatrix, j: int) -> np.ndarray:
    return a.data[:, j].copy()


def _col_norm(u: np.ndarray) -> float:
    return float(np.linalg.norm(u))


def _col_inner(field: str, u: np.ndarray, v: np.ndarray):
    """<u, v> = conj(u)^t v; a complex pair (a, b) over H."""
    if field == QUATERNION:
        a1, b1 = u[:, 0], u[:, 1]
        a2, b2 = v[:, 0], v[:, 1]
        sa = np.sum(np.conj(a1) * a2 + b1 * np.conj(b2))
        sb = np.sum(np.conj(a1) * b2 - b1 * np.conj(a2))
        return sa, sb
    return np.vdot(u, v)


def _col_scale(field: str, u: np.ndarray, s) -> np.ndarray:
    """Right-multiply a column by a field scalar."""
    if field == QUATERNION:
        sa, sb = s
        a, b = u[:, 0], u[:, 1]
        return np.stack([a * sa - b * np.conj(sb), a * sb + b * np.conj(sa)], axis=1)
    return u * s


def _phase_fix(field: str, u: np.ndarray) -> np.ndarray:
    """Right-multiply a unit column so its first sizable entry is real > 0."""
    if field == QUATERNION:
        mags = np.sqrt(np.abs(u[:, 0]) ** 2 + np.abs(u[:, 1]) ** 2)
    else:
        mags = np.abs(u)
    anchors = np.nonzero(mags > RANK_TOL)[0]
    if anchors.size == 0:
        return u
    i = int(anchors[0])
    if field == QUATERNION:
        m = mags[i]
        s = (np.conj(u[i, 0]) / m, -u[i, 1] / m)
        return _col_scale(field, u, s)
    e = u[i]
    return u * (np.conj(e) / abs(e))


def _mgs_pick(field: str, fixed: list[np.ndarray], cand: list[np.ndarray],
              n_pick: int, rank_tol: float) -> list[np.ndarray]:
    """Column-pivoted modified Gram-Schmidt.

    fixed columns are assumed orthonormal and are never modified; cand
    columns are orthogonalized against them and against the growing
    basis, picking the largest residual first.  Residual norms within a
    relative 1e-12 of the maximum count as tied and the earliest source
    column wins, so already-orthonormal inputs keep their column order.
    The picked columns are returned in source order.  Raises
    RankDeficient when no candidate carries enough independent mass.
    """
    residual = [c.copy() for c in cand]
    for k, r in enumerate(residual):
        for b in fixed:
            r = r - _col_scale(field, b, _col_inner(field, b, r))
        residual[k] = r
    ref = max((_col_norm(c) for c in cand), default=0.0)
    basis = list(fixed)
    picked: list[tuple[int, np.ndarray]] = []
    alive = list(range(len(residual)))
    for _ in range(n_pick):
        if not alive:
            raise RankDeficient("ran out of candidate columns")
        norms = [_col_norm(residual[i]) for i in alive]
        top = max(norms)
        jmax = min(k for k, nk in enumerate(norms) if nk >= top * (1.0 - 1e-12))
        if ref == 0.0 or norms[jmax] <= rank_tol * ref:
            raise RankDeficient(
                f"residual norm {norms[jmax]:.3e} below rank tolerance")
        src = alive[jmax]
        v = residual[src]
        del alive[jmax]
        # a second projection pass keeps the basis orthonormal to machine
        # precision even for badly scaled inputs
        for b in basis:
            v = v - _col_scale(field, b, _col_inner(field, b, v))
        v = v / _col_norm(v)
        v = _phase_fix(field, v)
        basis.append(v)
        picked.append((src, v))
        for i in alive:
            residual[i] = residual[i] - _col_scale(
                field, v, _col_inner(field, v, residual[i]))
    return [v for _, v in sorted(picked, key=lambda t: t[0])]


def _assemble(field: str, cols: list[np.ndarray]) -> FMatrix:
    return FMatrix(field, np.stack(cols, axis=1))


def orthonormalize(a: FMatrix, rank_tol: float = RANK_TOL) -> FMatrix:
    """Canonical orthonormal frame spanning the columns of a.

    Deterministic for a fixed input: columns are picked largest residual
    first but returned in source-column order, and each output column is
    normalized so its first sizable coefficient is real and positive.
    Already-orthonormal inputs come back unchanged up to phase.  Raises
    RankDeficient when the columns are dependent.
    """
    if a.cols == 0:
        return a
    cols = [_col(a, j) for j in range(a.cols)]
    return _assemble(a.field, _mgs_pick(a.field, [], cols, a.cols, rank_tol))


def orthonormal_range(a: FMatrix, dim: int, rank_tol: float = RANK_TOL) -> FMatrix:
    """Orthonormal frame for the best dim-dimensional piece of colspan(a)."""
    cols = [_col(a, j) for j in range(a.cols)]
    return _assemble(a.field, _mgs_pick(a.field, [], cols, dim, rank_tol))


def check_frame(q: FMatrix, tol: float = FRAME_TOL):
    gram = q.H @ q
    if frob_dist(gram, FMatrix.eye(q.field, q.cols)) > tol * max(1.0, q.norm()):
        raise NotOrthonormal(f"Gram defect {frob_dist(gram, FMatrix.eye(q.field, q.cols)):.3e}")


def orthocomplement(q: FMatrix, rank_tol: float = RANK_TOL) -> FMatrix:
    """Orthonormal frame of the standard orthogonal complement of colspan(q).

    q must already be orthonormal; the complement is produced by
    completing q with pivoted Gram-Schmidt over the identity columns.
    """
    check_frame(q)
    fixed = [_col(q, j) for j in range(q.cols)]
    ident = FMatrix.eye(q.field, q.rows)
    cand = [_col(ident, j) for j in range(q.rows)]
    picked = _mgs_pick(q.field, fixed, cand, q.rows - q.cols, rank_tol)
    return _assemble(q.field, picked)


# -- principal angles ---------------------------------------------------


def principal_angles(q1: FMatrix, q2: FMatrix) -> np.ndarray:
    """Ascending principal angles between two orthonormal frames.

    Large angles come from arccos of the singular values of
    conj_transpose(q1) @ q2; angles below pi/4 are recomputed from the
    singular values of (I - q1 q1*) q2, which stays accurate where the
    cosine saturates at 1.  Over H the doubled values of the complex
    embedding are deduplicated so each quaternionic angle appears once.
    """
    if q1.field != q2.field:
        raise WrongField(f"field mismatch: {q1.field} vs {q2.field}")
    if q1.rows != q2.rows or q1.cols != q2.cols:
        raise ShapeMismatch(f"frame shapes differ: {q1.shape} vs {q2.shape}")
    check_frame(q1)
    check_frame(q2)
    a1 = _numeric(q1)
    a2 = _numeric(q2)
    cross = a1.conj().T @ a2
    cosines = np.clip(np.linalg.svd(cross, compute_uv=False), 0.0, 1.0)
    sines = np.clip(np.sort(np.linalg.svd(a2 - a1 @ cross, compute_uv=False)),
                    0.0, 1.0)
    angles = np.arccos(cosines)
    small = cosines > np.sqrt(0.5)
    angles[small] = np.arcsin(sines[small])
    if q1.field == QUATERNION:
        angles = angles[0::2]
    return angles


# -- matrix functions ---------------------------------------------------


def matrix_exp(a: FMatrix) -> FMatrix:
    """exp(a) by scaling and squaring; over H through the embedding."""
    if a.rows != a.cols:
        raise ShapeMismatch("matrix_exp needs a square matrix")
    if a.field == QUATERNION:
        return complex_unembed(scipy.linalg.expm(_embed_arr(a.data)))
    return FMatrix(a.field, scipy.linalg.expm(a.data))


def inverse(a: FMatrix) -> FMatrix:
    if a.rows != a.cols:
        raise ShapeMismatch("only square matrices invert")
    try:
        if a.field == QUATERNION:
            return complex_unembed(np.linalg.inv(_embed_arr(a.data)))
        return FMatrix(a.field, np.linalg.inv(a.data))
    except np.linalg.LinAlgError as exc:
        raise Singular(str(exc)) from exc


def condition_number(a: FMatrix) -> float:
    svals = singular_values(a)
    if svals.size == 0 or svals[-1] == 0.0:
        return np.inf
    return float(svals[0] / svals[-1])


def _check_hermitian(h: FMatrix, tol: float = FRAME_TOL):
    if h.rows != h.cols:
        raise ShapeMismatch("hermitian test needs a square matrix")
    defect = frob_dist(h, h.H)
    if defect > tol * max(1.0, h.norm()):
        raise NotHermitian(f"|H - H*| = {defect:.3e}")


def hermitian_eigenvalues(h: FMatrix) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix.

    Over H the complex embedding doubles each eigenvalue; the doubled
    list is deduplicated so each quaternionic eigenvalue appears once.
    """
    _check_hermitian(h)
    sym = (h + h.H) * 0.5
    vals = np.linalg.eigvalsh(_numeric(sym))
    if h.field == QUATERNION:
        vals = vals[0::2]
    return vals


def min_eigen_hermitian(h: FMatrix) -> float:
    """Smallest eigenvalue of a Hermitian matrix (real by construction)."""
    return float(hermitian_eigenvalues(h)[0])


def hermitian_sqrt(h: FMatrix) -> FMatrix:
    """Positive-definite square root of a Hermitian positive-definite matrix."""
    _check_hermitian(h)
    sym = (h + h.H) * 0.5
    w, v = np.linalg.eigh(_numeric(sym))
    if w[0] <= 0.0:
        raise NotPositiveDefinite(f"min eigenvalue {w[0]:.3e}")
    root = (v * np.sqrt(w)) @ np.conj(v.T)
    if h.field == QUATERNION:
        return complex_unembed(root)
    if h.field == REAL:
        return FMatrix(REAL, root.real)
    return FMatrix(COMPLEX, root)


# -- real coordinates and nullspaces ------------------------------------


def to_real_coords(a: FMatrix) -> np.ndarray:
    """Flatten to real coordinates, orthogonal for Re trace(A* B)."""
    if a.field == REAL:
        return a.data.ravel().copy()
    if a.field == COMPLEX:
        return np.concatenate([a.data.real.ravel(), a.data.imag.ravel()])
    pa, pb = a.data[..., 0], a.data[..., 1]
    return np.concatenate([pa.real.ravel(), pa.imag.ravel(),
                           pb.real.ravel(), pb.imag.ravel()])


def from_real_coords(field: str, rows: int, cols: int, coords: np.ndarray) -> FMatrix:
    coords = np.asarray(coords, dtype=np.float64)
    n = rows * cols
    if coords.size != real_dim(field) * n:
        raise ShapeMismatch(f"expected {real_dim(field) * n} coordinates, got {coords.size}")
    if field == REAL:
        return FMatrix(REAL, coords.reshape(rows, cols))
    if field == COMPLEX:
        return FMatrix(COMPLEX, coords[:n].reshape(rows, cols)
                       + 1j * coords[n:].reshape(rows, cols))
    parts = coords.reshape(4, rows, cols)
    return FMatrix.from_quat_parts(parts[0] + 1j * parts[1], parts[2] + 1j * parts[3])


def real_matrix_of_map(fn, field: str, rows: int, cols: int) -> np.ndarray:
    """Matrix of a real-linear map on (rows x cols) F-matrices.

    fn maps FMatrix -> FMatrix; the result acts on the real coordinate
    vectors produced by to_real_coords.
    """
    d_in = real_dim(field) * rows * cols
    columns = []
    for k in range(d_in):
        e = np.zeros(d_in)
        e[k] = 1.0
        columns.append(to_real_coords(fn(from_real_coords(field, rows, cols, e))))
    return np.stack(columns, axis=1)


def nullspace_real_dim(t: np.ndarray, tol: float = RANK_TOL) -> int:
    """Nullity of a real matrix under the relative singular-value cutoff."""
    t = np.asarray(t, dtype=np.float64)
    if t.size == 0:
        return t.shape[1] if t.ndim == 2 else 0
    svals = np.linalg.svd(t, compute_uv=False)
    smax = float(svals[0]) if svals.size else 0.0
    if smax == 0.0:
        return t.shape[1]
    return t.shape[1] - int(np.count_nonzero(svals > tol * smax))


def real_nullspace_basis(t: np.ndarray, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the nullspace of a real matrix."""
    t = np.asarray(t, dtype=np.float64)
    dim = nullspace_real_dim(t, tol)
    if dim == t.shape[1]:
        return np.eye(t.shape[1])
    _, _, vt = np.linalg.svd(t)
    return vt[t.shape[1] - dim:].T.copy()


def re_trace_product(a: FMatrix, b: FMatrix) -> float:
    """Re trace(conj_transpose(a) @ b), the real Frobenius pairing."""
    prod = a.H @ b
    if prod.field == QUATERNION:
        diag = prod.data[np.arange(prod.rows), np.arange(prod.rows), 0]
    else:
        diag = np.diagonal(prod.data)
    return float(np.sum(diag).real)


# -- JSON serialization --------------------------------------------------


def _scalar_to_json(a: FMatrix, i: int, j: int):
    if a.field == REAL:
        return float(a.data[i, j])
    if a.field == COMPLEX:
        z = a.data[i, j]
        return [z.real, z.imag]
    pa, pb = a.data[i, j, 0], a.data[i, j, 1]
    return [pa.real, pa.imag, pb.real, pb.imag]


def fmatrix_to_json(a: FMatrix) -> dict:
    """{"field", "rows", "cols", "data"} with row-major scalar entries."""
    return {
        "field": a.field,
        "rows": a.rows,
        "cols": a.cols,
        "data": [_scalar_to_json(a, i, j) for i in range(a.rows) for j in range(a.cols)],
    }


def fmatrix_from_json(doc: dict) -> FMatrix:
    field = check_field(doc["field"])
    rows, cols = int(doc["rows"]), int(doc["cols"])
    flat = doc["data"]
    if len(flat) != rows * cols:
        raise ShapeMismatch(f"expected {rows * cols} entries, got {len(flat)}")
    out = FMatrix.zeros(field, rows, cols).data.copy()
    for idx, value in enumerate(flat):
        i, j = divmod(idx, cols)
        if field == REAL:
            out[i, j] = float(value)
        elif field == COMPLEX:
            out[i, j] = complex(value[0], value[1])
        else:
            w, x, y, z = (float(t) for t in value)
            out[i, j, 0] = complex(w, x)
            out[i, j, 1] = complex(y, z)
    return FMatrix(field, out)
