import math

import numpy as np
import pytest

import dephase_lab as dl


def test_gue_sample_is_hermitian_and_reproducible():
    a = dl.sample_gue(6, seed=3, index=1)
    b = dl.sample_gue(6, seed=3, index=1)
    assert np.array_equal(a, b)
    assert np.allclose(a, a.conj().T)


def test_haar_unitary():
    u = dl.sample_haar_unitary(4, seed=1)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-10)


def test_pure_state_rate_is_twice_variance():
    sz = np.diag([1.0, -1.0]).astype(complex)
    plus = np.array([1, 1], dtype=complex) / math.sqrt(2)
    assert dl.decoherence_rate(plus, [(0.5, sz)]) == pytest.approx(1.0)
    assert dl.decoherence_rate(np.eye(2, dtype=complex) / 2, [(0.5, sz)]) == pytest.approx(0.0)


def test_closed_forms():
    assert dl.rate_gue_paper(4, 1.0) == pytest.approx(16 / 5)
    assert dl.rate_gue_wick(4, 1.0) == pytest.approx(3.0)
    assert dl.calibrate_epsilon_sq() == pytest.approx(2 / 3)
    assert dl.rate_kbody_bound(4, 2, 1.0, 1.0, "paper") == pytest.approx(128.0)
    assert dl.rate_kbody_bound(4, 2, 1.0, 1.0, "exact-binomial") == pytest.approx(72.0)
    assert dl.rate_lmg(6, 1.0, 0.0, 1.0) == pytest.approx(60.0)
    assert dl.crossover_min_n(3, 2 / 3, "exact-binomial") == 22


def test_tfd_purity_forms_agree():
    e = [-1.3, -0.2, 0.4, 1.1]
    for t in (0.05, 0.5, 2.0):
        assert dl.purity_tfd_hs(e, 0.5, 1.0, t) == pytest.approx(dl.purity_tfd(e, 0.5, 1.0, t), abs=1e-9)
    assert dl.purity_tfd(e, 0.0, 1.0, 1e4) == pytest.approx(0.25, abs=1e-12)


def test_semicircle_high_temperature_limit():
    d = 2.0**50
    b = dl.tfd_crossover_beta(d) / 100
    assert dl.rate_tfd_gue_semicircle(b, d) / (2 * d) == pytest.approx(1.0, rel=1e-3)


def test_monte_carlo_rate_reports_stderr():
    est = dl.rate_gue_mc(4, n_samples=2000, seed=5)
    assert est["std_error"] > 0
    assert abs(est["mean"] - 3.0) < 5 * est["std_error"]


def test_csv_commands():
    out = dl.cmd_fig1(ks=[1, 2], n_max=16)
    assert out.splitlines()[0] == "# dephase-lab schema v1"
    assert "# inset" in out
    tfd = dl.cmd_tfd(n_qubits=50, betas=[0.01, 1.0], formula_only=True)
    assert "rate_semicircle_F3" in tfd


def test_bad_input_raises():
    with pytest.raises(ValueError):
        dl.rate_kbody_bound(3, 4, 1.0)
    with pytest.raises(ValueError):
        dl.cmd_rate_gue(dims=[2], n_samples=1)


def test_validation_criterion():
    r = dl.run_criterion(9)
    assert r["pass"], r["detail"]
