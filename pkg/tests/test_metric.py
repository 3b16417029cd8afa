import math

import numpy as np
import pytest

from grasslie.errors import AmbientMismatch, ShapeMismatch, WrongField
from grasslie.grassmann import (Subspace, diagonal_subspace, random_subspace,
                                v1_subspace, v2_subspace)
from grasslie.involutions import cayley_grass, eta_bar, rho_bar, sigma_bar
from grasslie.groups import sp_r
from grasslie.matgeom import FMatrix
from grasslie.metric import distance, isometry_defect

ISO_TOL = 1e-8


def pairs(field, ambient, dim, count, base_seed):
    return [(random_subspace(field, ambient, dim, base_seed + 2 * t),
             random_subspace(field, ambient, dim, base_seed + 2 * t + 1))
            for t in range(count)]


# -- the distance itself ---------------------------------------------------


def test_distance_to_self_is_exact_zero():
    for field in ("R", "C", "H"):
        l = random_subspace(field, 6, 3, seed=4)
        assert distance(l, l) == 0.0


def test_distance_v1_v2_maximal():
    for field in ("R", "C", "H"):
        for n in (1, 2, 3):
            d = distance(v1_subspace(field, n), v2_subspace(field, n))
            assert d == pytest.approx(math.sqrt(n) * math.pi / 2, rel=1e-15)


def test_distance_quarter_turn():
    e1 = Subspace.from_span(FMatrix.from_real([[1.0], [0.0]]))
    diag = Subspace.from_span(FMatrix.from_real([[1.0], [1.0]]))
    assert distance(e1, diag) == pytest.approx(math.pi / 4, abs=1e-12)


def test_distance_nearly_identical_subspaces():
    # same plane reached through two different spanning sets: the sine
    # branch keeps the measured distance at roundoff level
    raw = FMatrix.from_real(np.random.default_rng(5).standard_normal((6, 3)))
    mix = FMatrix.from_real(np.random.default_rng(6).standard_normal((3, 3)))
    d = distance(Subspace.from_span(raw), Subspace.from_span(raw @ mix))
    assert d < 1e-12


def test_distance_bounds():
    for seed in range(25):
        l1 = random_subspace("C", 6, 3, 2 * seed)
        l2 = random_subspace("C", 6, 3, 2 * seed + 1)
        d = distance(l1, l2)
        assert 0.0 <= d <= math.sqrt(3) * math.pi / 2 + 1e-12


def test_distance_symmetric_to_the_bit():
    worst = 0.0
    for field in ("R", "C", "H"):
        for l1, l2 in pairs(field, 6, 3, 30, base_seed=100):
            worst = max(worst, abs(distance(l1, l2) - distance(l2, l1)))
    assert worst == 0.0


def test_triangle_inequality():
    worst = -np.inf
    for t in range(500):
        l1 = random_subspace("R", 4, 2, 3 * t)
        l2 = random_subspace("R", 4, 2, 3 * t + 1)
        l3 = random_subspace("R", 4, 2, 3 * t + 2)
        violation = distance(l1, l3) - distance(l1, l2) - distance(l2, l3)
        worst = max(worst, violation)
    assert worst <= 1e-10


def test_distance_error_cases():
    l = random_subspace("R", 4, 2, seed=1)
    with pytest.raises(WrongField):
        distance(l, random_subspace("C", 4, 2, seed=1))
    with pytest.raises(AmbientMismatch):
        distance(l, random_subspace("R", 6, 2, seed=1))
    with pytest.raises(ShapeMismatch):
        distance(l, random_subspace("R", 4, 3, seed=1))


def test_quaternionic_angles_count_once():
    # one quaternionic line against another: a single angle, not the
    # doubled pair from the complex embedding
    l1 = v1_subspace("H", 1)
    l2 = diagonal_subspace("H", 1)
    assert distance(l1, l2) == pytest.approx(math.pi / 4, abs=1e-12)


# -- isometries ----------------------------------------------------------------


def test_isometry_defect_identity():
    assert isometry_defect(lambda l: l, pairs("R", 4, 2, 10, 0)) == 0.0


def test_involutions_are_isometries():
    for field in ("R", "C", "H"):
        sample = pairs(field, 4, 2, 50, base_seed=300)
        assert isometry_defect(rho_bar, sample) < ISO_TOL
        assert isometry_defect(eta_bar, sample) < ISO_TOL
        assert isometry_defect(cayley_grass, sample) < ISO_TOL


def test_sigma_bar_is_isometry():
    spec = sp_r(2)
    sample = pairs("R", 4, 2, 50, base_seed=700)
    assert isometry_defect(lambda l: sigma_bar(spec, l), sample) < ISO_TOL


def test_non_unitary_map_is_not_isometry():
    squash = FMatrix.from_real(np.diag([1.0, 1.0, 1.0, 0.2]))

    def crush(l):
        return Subspace.from_span(squash @ l.frame)

    assert isometry_defect(crush, pairs("R", 4, 2, 20, base_seed=900)) > 0.01


def test_unitary_frame_map_is_isometry():
    """Any ambient unitary acting on frames preserves all distances."""
    rng = np.random.default_rng(11)
    raw = rng.standard_normal((4, 4))
    q, _ = np.linalg.qr(raw)
    u = FMatrix.from_real(q)

    def rotate(l):
        return Subspace.from_span(u @ l.frame)

    assert isometry_defect(rotate, pairs("R", 4, 2, 20, base_seed=1100)) < ISO_TOL
