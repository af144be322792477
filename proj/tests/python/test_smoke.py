import math

import numpy as np
import pytest

import rieszcheck


def test_validate_params_derived_exponents():
    P = rieszcheck.validate_params(2, 0.5, 2.0, 4.0)
    assert P["r_conj"] == pytest.approx(2.0)
    assert P["p0"] == pytest.approx(3.0)
    assert P["p1"] == pytest.approx(2.5)
    assert P["gamma"] == pytest.approx(1.0)


def test_invalid_params_raise():
    with pytest.raises(rieszcheck.RieszcheckError, match="p <= r"):
        rieszcheck.validate_params(2, 1.0, 2.0, 2.0)


def test_lattice_zeta_one_dimension():
    assert rieszcheck.lattice_zeta(1, 0.5) == pytest.approx(-2.92070901761917, abs=1e-12)


def test_riesz_fft_matches_direct():
    rng = np.random.default_rng(3)
    f = rng.random((32, 32))
    fast = rieszcheck.riesz(f, 2.0, 0.5)
    slow = rieszcheck.riesz(f, 2.0, 0.5, method="direct")
    assert fast.shape == f.shape
    assert np.max(np.abs(fast - slow)) <= 1e-10 * np.max(np.abs(slow))


def test_maximal_of_constant_is_constant():
    f = np.full(64, 1.5)
    assert np.allclose(rieszcheck.maximal(f, 2.0), 1.5, rtol=0, atol=1e-12)


def test_morrey_of_indicator():
    x = -2.0 + np.arange(512) * (4.0 / 512)
    b = (np.abs(x) <= 1.0).astype(float)
    r = rieszcheck.morrey(b, 4.0, 2.0, 0.25)
    assert r["A"] == pytest.approx(1.0, rel=0.03)
    assert len(r["center"]) == 1


def test_frac_laplacian_of_gaussian_at_alpha_two():
    n, extent, s = 256, 4.0, 0.15
    x = -extent / 2 + np.arange(n) * (extent / n)
    u = np.exp(-x * x / (2 * s * s))
    exact = (1 / s**2 - x * x / s**4) * u
    v = rieszcheck.frac_laplacian(u, extent, 2.0)
    assert np.max(np.abs(v - exact)) <= 1e-8 * np.max(np.abs(exact))


def test_frac_laplacian_needs_padding():
    n = 128
    x = -math.pi + np.arange(n) * (2 * math.pi / n)
    u = np.sin(3 * x)
    with pytest.raises(rieszcheck.RieszcheckError, match="insufficient padding"):
        rieszcheck.frac_laplacian(u, 2 * math.pi, 0.5)


def test_oracle_gate_small():
    r = rieszcheck.oracle_gate(n1=64, n2=16, seeds=2, points=5)
    assert r["pass"]
    assert len(r["entries"]) == 4


def test_cli_usage_error():
    code, out, err = rieszcheck.run_cli(["no-such-command"])
    assert code == 2
