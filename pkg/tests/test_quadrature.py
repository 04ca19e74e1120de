"""Adaptive Gauss-Legendre integrator against scipy.integrate.quad."""

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.stats import norm

from hybridpower.quadrature import integrate


def test_polynomial_exact_on_single_panel():
    # order-15 Gauss-Legendre is exact through degree 29
    coeffs = np.arange(1, 13, dtype=float)

    def f(x):
        return np.polyval(coeffs, x)

    exact = np.polyint(coeffs)
    val = integrate(f, -1.3, 2.7, rel_tol=1e-12)
    ref = np.polyval(exact, 2.7) - np.polyval(exact, -1.3)
    assert val == pytest.approx(ref, rel=1e-13)


@pytest.mark.parametrize("a,b", [(0.0, 1.0), (-2.0, 3.0), (0.05, 0.7)])
def test_smooth_integrands_match_scipy(a, b):
    cases = [
        lambda x: np.exp(-x * x) * np.cos(3 * x),
        lambda x: 1.0 / (1.0 + x * x),
        lambda x: norm.cdf(5 * x - 1) * norm.pdf((x - 0.2) / 0.3),
    ]
    for f in cases:
        ref, _ = quad(f, a, b, epsabs=1e-14, epsrel=1e-13, limit=200)
        assert integrate(f, a, b, rel_tol=1e-10) == pytest.approx(ref, rel=1e-9)


def test_sharply_peaked_integrand():
    # prior-like peak with sd 0.05 inside a much wider interval
    f = lambda x: norm.pdf((x - 0.5) / 0.05) / 0.05
    ref, _ = quad(f, -0.3, 0.7, epsabs=1e-14, epsrel=1e-13, limit=300)
    assert integrate(f, -0.3, 0.7, rel_tol=1e-10) == pytest.approx(ref, rel=1e-9)


def test_empty_interval_is_exact_zero():
    calls = []

    def f(x):
        calls.append(x)
        return x

    assert integrate(f, 1.0, 1.0) == 0.0
    assert integrate(f, 2.0, 1.0) == 0.0
    assert calls == []
