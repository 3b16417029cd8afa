import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grasslie.errors import (NotHermitian, NotOrthonormal, NotPositiveDefinite,
                             RankDeficient, ShapeMismatch, Singular, WrongField)
from grasslie.matgeom import (FMatrix, complex_embed, complex_unembed,
                              condition_number, conj_transpose, frob_dist,
                              fmatrix_from_json, fmatrix_to_json,
                              hermitian_eigenvalues, hermitian_sqrt, hstack,
                              inverse, matrix_exp, min_eigen_hermitian,
                              nullspace_real_dim, numeric_rank,
                              orthocomplement, orthonormal_range,
                              orthonormalize, principal_angles, random_fmatrix,
                              real_matrix_of_map, real_nullspace_basis,
                              re_trace_product, singular_values,
                              to_real_coords, from_real_coords, vstack)
from grasslie.scalar import QI, QJ, QK, Quaternion

TOL = 1e-12
FIELDS = ("R", "C", "H")


def rand(field, rows, cols, seed):
    return random_fmatrix(field, rows, cols, np.random.default_rng(seed))


# -- construction and entry access -------------------------------------------


def test_construction_shapes():
    a = FMatrix.from_real([[1.0, 2.0], [3.0, 4.0]])
    assert a.shape == (2, 2) and a.field == "R"
    with pytest.raises(ShapeMismatch):
        FMatrix("R", np.zeros(3))
    with pytest.raises(ShapeMismatch):
        FMatrix("H", np.zeros((2, 2)))
    with pytest.raises(WrongField):
        FMatrix.zeros("X", 1, 1)


def test_immutability():
    a = FMatrix.eye("C", 2)
    with pytest.raises(AttributeError):
        a.field = "R"
    with pytest.raises(ValueError):
        a.data[0, 0] = 5.0


def test_entry_round_trip():
    q = Quaternion(1, 2, 3, 4)
    m = FMatrix.from_rows("H", [[q, 0], [1j, 2.0]])
    assert m.entry(0, 0) == q
    assert m.entry(1, 0).isclose(Quaternion(0, 1))
    assert m.entry(1, 1).isclose(Quaternion(2))
    r = FMatrix.from_rows("R", [[1, 2]])
    assert r.entry(0, 1) == 2.0


def test_conj_transpose_examples():
    a = FMatrix.from_real([[1, 2], [3, 4]])
    assert np.array_equal(conj_transpose(a).data, [[1, 3], [2, 4]])
    c = FMatrix.from_complex([[1j]])
    assert conj_transpose(c).data[0, 0] == -1j
    h = FMatrix.from_rows("H", [[QJ, QK], [Quaternion(0), Quaternion(1)]])
    ht = conj_transpose(h)
    assert ht.entry(0, 0).isclose(-QJ)
    assert ht.entry(0, 1).isclose(Quaternion(0))
    assert ht.entry(1, 0).isclose(-QK)
    assert ht.entry(1, 1).isclose(Quaternion(1))


def test_conj_transpose_involutive():
    for field in FIELDS:
        a = rand(field, 3, 2, 5)
        assert frob_dist(conj_transpose(conj_transpose(a)), a) == 0.0


def test_matmul_shapes_and_fields():
    a = FMatrix.eye("R", 2)
    b = FMatrix.zeros("R", 3, 2)
    with pytest.raises(ShapeMismatch):
        a @ b
    with pytest.raises(WrongField):
        a @ FMatrix.eye("C", 2)


# -- quaternion embedding ------------------------------------------------------


def test_embed_examples():
    one = FMatrix.from_rows("H", [[Quaternion(1)]])
    assert np.allclose(complex_embed(one).data, np.eye(2))
    j = FMatrix.from_rows("H", [[QJ]])
    assert np.allclose(complex_embed(j).data, [[0, 1], [-1, 0]])
    with pytest.raises(WrongField):
        complex_embed(FMatrix.eye("C", 1))


def test_embed_homomorphism():
    i = FMatrix.from_rows("H", [[QI]])
    j = FMatrix.from_rows("H", [[QJ]])
    lhs = complex_embed(i @ j).data
    rhs = (complex_embed(i) @ complex_embed(j)).data
    assert np.allclose(lhs, rhs)
    # and on random matrices, both routes to the product agree
    a = rand("H", 3, 3, 1)
    b = rand("H", 3, 3, 2)
    d = np.max(np.abs(complex_embed(a @ b).data
                      - (complex_embed(a) @ complex_embed(b)).data))
    assert d < 1e-13


def test_embed_respects_conj_transpose_exactly():
    a = rand("H", 4, 3, 7)
    lhs = complex_embed(a.H).data
    rhs = complex_embed(a).H.data
    assert np.array_equal(lhs, rhs)


def test_unembed_inverts_embed():
    a = rand("H", 3, 2, 9)
    assert frob_dist(complex_unembed(complex_embed(a)), a) < 1e-15


# -- rank and singular values --------------------------------------------------


def test_numeric_rank_examples():
    assert numeric_rank(FMatrix.eye("R", 3)) == 3
    assert numeric_rank(FMatrix.zeros("R", 3, 3)) == 0
    assert numeric_rank(FMatrix.from_real([[1, 1], [1, 1]])) == 1
    assert singular_values(FMatrix.from_real([[1, 1], [1, 1]]))[0] == pytest.approx(2.0)


def test_numeric_rank_quaternionic():
    # a rank-1 quaternionic matrix: second column is the first times j
    col = rand("H", 3, 1, 3)
    two = hstack(col, col @ FMatrix.from_rows("H", [[QJ]]))
    assert numeric_rank(two) == 1
    assert numeric_rank(FMatrix.eye("H", 3)) == 3


def test_rank_plus_nullity():
    t = np.random.default_rng(4).standard_normal((6, 4))
    assert numeric_rank(FMatrix.from_real(t)) + nullspace_real_dim(t) == 4


# -- orthonormalization ---------------------------------------------------------


def test_orthonormalize_scaling_example():
    a = FMatrix.from_real(np.vstack([np.diag([2.0, 3.0]), np.zeros((2, 2))]))
    q = orthonormalize(a)
    want = np.vstack([np.eye(2), np.zeros((2, 2))])
    assert np.allclose(q.data, want)


def test_orthonormalize_single_column():
    q = orthonormalize(FMatrix.from_real([[1.0], [1.0]]))
    assert np.allclose(q.data, [[1 / math.sqrt(2)], [1 / math.sqrt(2)]])


def test_orthonormalize_idempotent_up_to_phase():
    for field in FIELDS:
        q = orthonormalize(rand(field, 5, 3, 11))
        again = orthonormalize(q)
        assert frob_dist(again, q) < 1e-13


def test_orthonormalize_deterministic():
    a = rand("C", 5, 3, 13)
    q1 = orthonormalize(a)
    q2 = orthonormalize(FMatrix("C", a.data.copy()))
    assert np.array_equal(q1.data, q2.data)


def test_orthonormalize_rank_deficient():
    a = FMatrix.from_real([[1.0, 2.0], [2.0, 4.0]])
    with pytest.raises(RankDeficient):
        orthonormalize(a)
    assert orthonormal_range(a, 1).cols == 1


def test_phase_normalization():
    # first sizable entry of each column comes out real-positive
    for field, scalar in (("C", -1j), ("H", QJ)):
        base = orthonormalize(rand(field, 4, 2, 17))
        if field == "C":
            twisted = base * scalar
        else:
            twisted = base @ FMatrix.from_rows("H", [[QJ, 0], [0, QJ]])
        fixed = orthonormalize(twisted)
        assert frob_dist(fixed, base) < 1e-13


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_projector_stability(seed):
    """Any two spanning sets of one subspace give the same projector."""
    rng = np.random.default_rng(seed)
    field = FIELDS[seed % 3]
    a = random_fmatrix(field, 6, 3, rng)
    mix = random_fmatrix(field, 3, 3, rng)
    q1 = orthonormalize(a)
    q2 = orthonormalize(a @ mix)
    p1 = q1 @ q1.H
    p2 = q2 @ q2.H
    assert frob_dist(p1, p2) < 1e-9


def test_orthocomplement():
    for field in FIELDS:
        q = orthonormalize(rand(field, 6, 2, 19))
        comp = orthocomplement(q)
        assert comp.cols == 4
        assert (q.H @ comp).norm() < 1e-13
        gram = comp.H @ comp
        assert frob_dist(gram, FMatrix.eye(field, 4)) < 1e-13


# -- principal angles -----------------------------------------------------------


def test_angles_identical_frames():
    q = orthonormalize(rand("C", 6, 3, 23))
    assert np.all(principal_angles(q, q) < 1e-14)


def test_angles_orthogonal_subspaces():
    n = 3
    for field in FIELDS:
        eye = FMatrix.eye(field, 2 * n)
        v1 = eye.cols_slice(0, n)
        v2 = eye.cols_slice(n, 2 * n)
        angles = principal_angles(v1, v2)
        assert angles.shape == (n,)
        assert np.allclose(angles, math.pi / 2)


def test_angles_rotation_example():
    for t in (0.0, 0.3, 1.0, math.pi / 2):
        q1 = FMatrix.from_real([[1.0], [0.0]])
        q2 = FMatrix.from_real([[math.cos(t)], [math.sin(t)]])
        assert principal_angles(q1, q2)[0] == pytest.approx(t, abs=1e-12)


def test_angles_symmetric():
    q1 = orthonormalize(rand("H", 4, 2, 29))
    q2 = orthonormalize(rand("H", 4, 2, 31))
    d = np.max(np.abs(principal_angles(q1, q2) - principal_angles(q2, q1)))
    assert d < 1e-10


def test_angles_small_angle_accuracy():
    # the arccos of a saturated cosine would read ~1e-8 here; the sine
    # branch must do far better
    a = rand("R", 8, 4, 37)
    mix = rand("R", 4, 4, 41)
    q1 = orthonormalize(a)
    q2 = orthonormalize(a @ mix)
    assert np.max(principal_angles(q1, q2)) < 1e-12


def test_angles_requires_orthonormal():
    with pytest.raises(NotOrthonormal):
        principal_angles(FMatrix.from_real([[2.0], [0.0]]),
                         FMatrix.from_real([[1.0], [0.0]]))


# -- matrix functions ------------------------------------------------------------


def test_exp_examples():
    z = FMatrix.zeros("R", 2, 2)
    assert frob_dist(matrix_exp(z), FMatrix.eye("R", 2)) < 1e-15
    d = matrix_exp(FMatrix.from_real(np.diag([1.0, -1.0])))
    assert np.allclose(d.data, np.diag([math.e, 1.0 / math.e]))
    n = matrix_exp(FMatrix.from_real([[0.0, 1.0], [0.0, 0.0]]))
    assert np.allclose(n.data, [[1.0, 1.0], [0.0, 1.0]])


def test_exp_quaternionic_series_oracle():
    """exp over H agrees with a directly summed power series."""
    a = rand("H", 3, 3, 43) * 0.4
    series = FMatrix.eye("H", 3)
    term = FMatrix.eye("H", 3)
    for k in range(1, 24):
        term = term @ a * (1.0 / k)
        series = series + term
    assert frob_dist(matrix_exp(a), series) < 1e-12


def test_exp_of_skew_is_unitary():
    for field in FIELDS:
        a = rand(field, 3, 3, 47)
        skew = a - a.H
        u = matrix_exp(skew)
        assert frob_dist(u.H @ u, FMatrix.eye(field, 3)) < 1e-13


def test_inverse():
    for field in FIELDS:
        a = rand(field, 3, 3, 53) + FMatrix.eye(field, 3) * 3.0
        assert frob_dist(a @ inverse(a), FMatrix.eye(field, 3)) < 1e-13
        assert frob_dist(inverse(a) @ a, FMatrix.eye(field, 3)) < 1e-13
    with pytest.raises(Singular):
        inverse(FMatrix.from_real([[1.0, 1.0], [1.0, 1.0]]))


def test_condition_number():
    assert condition_number(FMatrix.from_real(np.diag([4.0, 2.0]))) == pytest.approx(2.0)


def test_min_eigen_examples():
    assert min_eigen_hermitian(FMatrix.eye("R", 3)) == pytest.approx(1.0)
    assert min_eigen_hermitian(FMatrix.from_real(np.diag([3.0, -2.0]))) == pytest.approx(-2.0)
    assert min_eigen_hermitian(FMatrix.from_real([[2.0, 1.0], [1.0, 2.0]])) == pytest.approx(1.0)
    with pytest.raises(NotHermitian):
        min_eigen_hermitian(FMatrix.from_real([[0.0, 1.0], [0.0, 0.0]]))


def test_hermitian_eigenvalues_quaternionic():
    h = FMatrix.from_rows("H", [[Quaternion(2), QJ], [-QJ, Quaternion(2)]])
    assert np.allclose(hermitian_eigenvalues(h), [1.0, 3.0])


def test_hermitian_sqrt():
    r = hermitian_sqrt(FMatrix.from_real(np.diag([4.0, 9.0])))
    assert np.allclose(r.data, np.diag([2.0, 3.0]))
    for field in FIELDS:
        a = rand(field, 3, 3, 59)
        pos = a @ a.H + FMatrix.eye(field, 3) * 0.1
        root = hermitian_sqrt(pos)
        assert frob_dist(root @ root, pos) < 1e-12
    with pytest.raises(NotPositiveDefinite):
        hermitian_sqrt(FMatrix.from_real(np.diag([1.0, -1.0])))


# -- real coordinates -------------------------------------------------------------


def test_real_coords_roundtrip():
    for field in FIELDS:
        a = rand(field, 3, 2, 61)
        coords = to_real_coords(a)
        back = from_real_coords(field, 3, 2, coords)
        assert frob_dist(back, a) == 0.0


def test_real_coords_preserve_frobenius_pairing():
    """The flattening is orthogonal for Re trace(A* B)."""
    for field in FIELDS:
        a = rand(field, 3, 3, 67)
        b = rand(field, 3, 3, 71)
        direct = re_trace_product(a, b)
        flat = float(np.dot(to_real_coords(a), to_real_coords(b)))
        assert direct == pytest.approx(flat, abs=1e-12)


def test_nullspace_examples():
    assert nullspace_real_dim(np.zeros((4, 4))) == 4
    assert nullspace_real_dim(np.eye(4)) == 0
    skew_constraint = real_matrix_of_map(lambda m: m + m.transpose(), "R", 2, 2)
    assert nullspace_real_dim(skew_constraint) == 1
    basis = real_nullspace_basis(skew_constraint)
    assert basis.shape == (4, 1)
    mat = from_real_coords("R", 2, 2, basis[:, 0])
    assert frob_dist(mat, -mat.transpose()) < 1e-12


# -- serialization ------------------------------------------------------------------


def test_json_roundtrip_all_fields():
    for field in FIELDS:
        a = rand(field, 2, 3, 73)
        doc = fmatrix_to_json(a)
        assert doc["field"] == field
        assert doc["rows"] == 2 and doc["cols"] == 3
        back = fmatrix_from_json(doc)
        assert back.field == field
        assert frob_dist(back, a) == 0.0


def test_json_scalar_shapes():
    doc = fmatrix_to_json(FMatrix.from_rows("H", [[Quaternion(1, 2, 3, 4)]]))
    assert doc["data"] == [[1.0, 2.0, 3.0, 4.0]]
    doc_r = fmatrix_to_json(FMatrix.from_real([[1.5]]))
    assert doc_r["data"] == [1.5]
    doc_c = fmatrix_to_json(FMatrix.from_complex([[1 + 2j]]))
    assert doc_c["data"] == [[1.0, 2.0]]
    with pytest.raises(WrongField):
        fmatrix_from_json({"field": "X", "rows": 1, "cols": 1, "data": [1]})


def test_stack_helpers():
    a = FMatrix.eye("R", 2)
    assert hstack(a, a).shape == (2, 4)
    assert vstack(a, a).shape == (4, 2)
    with pytest.raises(WrongField):
        hstack(a, FMatrix.eye("C", 2))
