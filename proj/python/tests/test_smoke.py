import json

import numpy as np
import pytest

import poincare

ETA = np.diag([1.0, -1.0, -1.0, -1.0])


def random_sl2c(rng):
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    return a / np.sqrt(np.linalg.det(a))


def test_covering_map_is_a_lorentz_homomorphism():
    rng = np.random.default_rng(3)
    a, b = random_sl2c(rng), random_sl2c(rng)
    la, lb = poincare.covering_map(a), poincare.covering_map(b)
    assert np.allclose(la.T @ ETA @ la, ETA, atol=1e-10)
    assert np.allclose(poincare.covering_map(a @ b), la @ lb, atol=1e-10)
    assert np.allclose(poincare.covering_map(-a), la)


def test_spin_rep_and_wigner_rotation():
    rng = np.random.default_rng(4)
    a = random_sl2c(rng)
    assert np.allclose(poincare.spin_rep(1, a), a)
    assert poincare.spin_rep(3, a).shape == (4, 4)
    p = [np.sqrt(1 + 0.3**2 + 0.4**2 + 1.2**2), 0.3, 0.4, 1.2]
    for section in ("canonical", "helicity"):
        w = poincare.wigner_rotation(1.0, p, a, section)
        assert np.allclose(w.conj().T @ w, np.eye(2), atol=1e-10)
        assert abs(np.linalg.det(w) - 1) < 1e-10
    with pytest.raises(poincare.DomainError):
        poincare.boost(1.0, p, "sideways")


def test_mackey_builtin_and_custom():
    assert "D4" in poincare.builtin_groups()
    d4 = poincare.mackey("D4")
    assert d4["passed"] and d4["sum_dim_squared"] == 8
    assert sorted(c["dim"] for c in d4["classes"]) == [1, 1, 1, 1, 2]
    s3 = {"A": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "H": [[0, 1], [1, 0]], "action": [[0, 1, 2], [0, 2, 1]]}
    assert poincare.mackey_custom(json.dumps(s3))["sum_dim_squared"] == 6
    with pytest.raises(poincare.DomainError):
        poincare.mackey_custom('{"A": [[0]]')
    with pytest.raises(ValueError):
        poincare.mackey("Q8")


def test_spin_statistics_verdict_single_point():
    report = poincare.bracket_verdict(twice_spins=[0, 1], points=[[0.3, 1.2, 0.5, 0.4]])
    assert report["verdict"] == "PASS"


def test_jordan_pauli_vanishes_outside_light_cone():
    spacelike = poincare.jordan_pauli_delta(1.0, [0.2, 1.0, 0.5, 0.0])
    timelike = poincare.jordan_pauli_delta(1.0, [2.0, 0.0, 0.0, 0.0])
    assert abs(spacelike["value"]) < 1e-3 * abs(timelike["value"])


def test_verify_and_negative_control():
    assert "minkowski.hat_inverse_adjoint" in poincare.verify_invariants()
    bad = poincare.verify(samples=20, corrupt_epsilon=True)
    assert not bad["passed"]
    assert "minkowski.hat_inverse_adjoint" in bad["failures"]
