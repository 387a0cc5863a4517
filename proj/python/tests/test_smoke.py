import math

import numpy as np
import pytest

import fockspace as fs


def test_ground_state_momentum_amplitude():
    v = fs.psi_momentum(1, 0, 0, [0.0, 0.0, 0.0])
    assert abs(v) == pytest.approx(2 * math.sqrt(2) / math.pi, rel=1e-12)


def test_position_origin_and_node():
    assert abs(fs.psi_position(1, 0, 0, [0, 0, 0])) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-12)
    assert abs(fs.psi_position(2, 1, 1, [0, 0, 1])) < 1e-15


def test_phase_conventions_differ_by_sign_for_odd_l():
    p = [0.1, 0.2, 0.3]
    a = fs.psi_momentum(2, 1, 0, p, "printed")
    b = fs.psi_momentum(2, 1, 0, p, "fourier")
    assert a == pytest.approx(-b, rel=1e-13)


def test_fock_map_unit_norm():
    y = fs.fock_map([0.3, -1.2, 0.4], 0.5)
    assert np.linalg.norm(y) == pytest.approx(1.0, abs=1e-14)


def test_ks_norm_and_integral():
    u = [0.3, -0.7, 1.1, 0.2]
    assert np.linalg.norm(fs.ks_map(u)) == pytest.approx(np.dot(u, u), rel=1e-13)
    value, _ = fs.ks_integral(lambda x: math.exp(-math.sqrt(x[0] ** 2 + x[1] ** 2 + x[2] ** 2)))
    assert value == pytest.approx(8 * math.pi, rel=5e-3)


def test_clifford_matrix_and_determinant():
    a = fs.build_A(3, [0.1, 0.2, -0.3, 0.4, 0.5, -0.6])
    assert a.shape == (4, 4)
    r2 = 0.01 + 0.04 + 0.09 + 0.16 + 0.25 + 0.36
    assert np.allclose(a @ a.conj().T, r2 * np.eye(4), atol=1e-14)
    value, closed, _ = fs.det_identity(3, [0.1, 0.2, -0.3, 0.4, 0.5, -0.6], 0.3)
    assert value == pytest.approx(closed, rel=1e-12)


def test_bad_quantum_numbers_raise():
    with pytest.raises(ValueError):
        fs.psi_position(1, 1, 0, [1.0, 0.0, 0.0])


def test_duplication_printed_factor_two():
    ratio, corrected = fs.duplication_check(1)
    assert ratio == pytest.approx(2.0, rel=1e-14)
    assert corrected < 1e-13


def test_clifford_suite_report():
    report = fs.run_suite("clifford", seed=7)
    assert report["failed"] == 0
    assert report["passed"] >= 1000
    assert report["seed"] == 7
    assert len(report["discrepancies"]) > 0
