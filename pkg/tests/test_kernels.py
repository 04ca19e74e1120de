"""Backend parity: the numba fast path and the numpy fallback must agree."""

import json
import os
import subprocess
import sys

import numpy as np
from scipy.special import ndtr, ndtri

from hybridpower import _kernels


def test_backend_flag_is_reported():
    assert _kernels.BACKEND in ("numba", "numpy")


def test_vector_cdf_matches_scipy():
    x = np.linspace(-9, 9, 2001)
    assert np.max(np.abs(_kernels.norm_cdf(x) - ndtr(x))) < 1e-13


def test_vector_ppf_matches_scipy():
    p = np.linspace(1e-9, 1 - 1e-9, 2001)
    ours = _kernels.norm_ppf(p)
    ref = ndtri(p)
    assert np.max(np.abs(ndtr(ours) - p)) < 1e-12
    assert np.max(np.abs(ours - ref)) < 1e-9


def test_scalar_ppf_newton_refinement_accuracy():
    for p in (1e-12, 1e-4, 0.02425, 0.3, 0.5, 0.9, 1 - 1e-10):
        q = _kernels.norm_ppf_scalar(p)
        assert abs(_kernels.norm_cdf_scalar(q) - p) <= 1e-12 * max(p, 1 - p, 1e-3)


def test_reject_prob_composition():
    theta = np.linspace(-0.3, 0.7, 101)
    scale, shift = 3.7, -1.2
    assert np.allclose(_kernels.reject_prob(theta, scale, shift),
                       ndtr(scale * theta + shift), atol=1e-14)


def test_tn_quantile_matches_formula():
    u = np.linspace(0.001, 0.999, 999)
    mu, tau = 0.2, 0.2
    cdf_lo, span = 0.00621, 0.98758
    ref = mu + tau * ndtri(cdf_lo + u * span)
    assert np.max(np.abs(_kernels.tn_quantile(u, mu, tau, cdf_lo, span) - ref)) < 1e-9


_PROBE = r"""
import json
import numpy as np
from hybridpower import _kernels
from hybridpower import TestSetup, TruncatedNormalPrior, expected_power, solve_sample_size, ExpectedPower

prior = TruncatedNormalPrior(mu=0.2, tau=0.2, lo=-0.3, hi=0.7)
setup = TestSetup(alpha=0.025, mcid=0.05)
x = np.linspace(-6, 6, 101)
print(json.dumps({
    "backend": _kernels.BACKEND,
    "cdf": _kernels.norm_cdf(x).tolist(),
    "ppf": _kernels.norm_ppf(np.linspace(0.01, 0.99, 41)).tolist(),
    "ep218": expected_power(setup, prior, 218),
    "n_ep": solve_sample_size(setup, prior, ExpectedPower(target=0.8)).n,
}))
"""


def _run_with_backend(backend: str) -> dict:
    env = dict(os.environ, HYBRIDPOWER_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", _PROBE], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_backends_agree_end_to_end():
    numpy_res = _run_with_backend("numpy")
    numba_res = _run_with_backend("numba")
    assert numpy_res["backend"] == "numpy"
    assert numba_res["backend"] == "numba"
    assert np.allclose(numpy_res["cdf"], numba_res["cdf"], atol=1e-14)
    assert np.allclose(numpy_res["ppf"], numba_res["ppf"], atol=1e-11)
    assert abs(numpy_res["ep218"] - numba_res["ep218"]) < 1e-11
    assert numpy_res["n_ep"] == numba_res["n_ep"] == 218
