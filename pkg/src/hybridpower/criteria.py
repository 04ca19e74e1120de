"""Scalar design criteria: expected power, probability of success, and the
marginal probability to reject with its decomposition.

For a prior density w over effects and rejection probability r_n(theta):

    PoS(n)  = integral of r_n * w over the relevance region [mcid, hi]
    EP(n)   = same integral against w conditioned on Theta >= mcid,
              so PoS(n) = EP(n) * Pr[Theta >= mcid]
    PoS'(n) = integral of r_n * w over the whole support; it splits into a
              type-I part (Theta <= theta0), a rejection-under-irrelevant-
              effect part (theta0 < Theta < mcid), and PoS(n)

Integrals are adaptive Gauss-Legendre (order 15) with limits clipped to the
truncation interval so the integrands stay smooth; intervals of zero length
return exactly 0 without evaluating anything.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .design import TestSetup, _check_n
from .errors import InvalidInputError
from .gauss import ConditionalPrior, TruncatedNormalPrior, prior_mass_relevant
from .quadrature import integrate

QUAD_REL_TOL = 1e-9

# The normal pdf underflows to exactly 0.0 beyond ~39 standard deviations, so
# clipping integration windows to +-40 tau loses nothing in double arithmetic
# while keeping panels on the scale of needle-like priors (tau -> 0).
_TAIL_SDS = 40.0


def _power_coeffs(setup: TestSetup, n: float) -> tuple[float, float]:
    scale = math.sqrt(n) / setup.sigma
    return scale, -scale * setup.theta0 - setup.z_alpha


def _density_window(prior: TruncatedNormalPrior, lo: float, hi: float) -> tuple[float, float]:
    lo = max(lo, prior.lo, prior.mu - _TAIL_SDS * prior.tau)
    hi = min(hi, prior.hi, prior.mu + _TAIL_SDS * prior.tau)
    return lo, hi


def _reject_integral(setup: TestSetup, prior: TruncatedNormalPrior,
                     n: float, lo: float, hi: float) -> float:
    """Integral of prob_reject * prior pdf over [lo, hi] clipped to the support."""
    lo, hi = _density_window(prior, lo, hi)
    if not hi > lo:
        return 0.0
    scale, shift = _power_coeffs(setup, n)

    def f(theta):
        return _kernels.reject_prob(theta, scale, shift) * prior.pdf_vec(theta)

    return integrate(f, lo, hi, rel_tol=QUAD_REL_TOL)


def _expected_power_real(setup: TestSetup, prior: TruncatedNormalPrior, n: float) -> float:
    cond = ConditionalPrior(prior, setup.mcid)  # degenerate conditional raises here
    val = _reject_integral(setup, prior, n, cond.lower, prior.hi) / cond.mass
    return min(val, 1.0)


def expected_power(setup: TestSetup, prior: TruncatedNormalPrior, n: int) -> float:
    """EP(n): mean rejection probability given a relevant effect."""
    return _expected_power_real(setup, prior, _check_n(n))


def _pos_real(setup: TestSetup, prior: TruncatedNormalPrior, n: float) -> float:
    return _reject_integral(setup, prior, n, max(setup.mcid, prior.lo), prior.hi)


def pos(setup: TestSetup, prior: TruncatedNormalPrior, n: int) -> float:
    """PoS(n): joint probability of rejection and a relevant effect."""
    return _pos_real(setup, prior, _check_n(n))


@dataclass(frozen=True)
class PosDecomposition:
    """Additive split of the marginal rejection probability PoS'(n)."""

    type1: float       # rejection with Theta <= theta0
    irrelevant: float  # rejection with theta0 < Theta < mcid
    relevant: float    # rejection with Theta >= mcid, equals PoS(n)

    @property
    def total(self) -> float:
        return self.type1 + self.irrelevant + self.relevant


def pos_prime(setup: TestSetup, prior: TruncatedNormalPrior, n: int) -> PosDecomposition:
    """PoS'(n) split over (-inf, theta0], (theta0, mcid), [mcid, inf)."""
    n = _check_n(n)
    type1 = _reject_integral(setup, prior, n, prior.lo, setup.theta0)
    irrelevant = _reject_integral(setup, prior, n, setup.theta0, setup.mcid)
    relevant = _reject_integral(setup, prior, n, setup.mcid, prior.hi)
    return PosDecomposition(type1=type1, irrelevant=irrelevant, relevant=relevant)


@dataclass(frozen=True)
class ConvertedThreshold:
    """Threshold mapped between the EP and PoS scales.

    EP-direction results above 1 are unreachable; they are returned with
    feasible=False rather than clipped, so callers can report the bound.
    """

    value: float
    feasible: bool


def ep_pos_threshold(value: float, mass_relevant: float, to_ep: bool) -> ConvertedThreshold:
    """Convert a PoS threshold to the equivalent EP threshold (to_ep=True)
    or an EP threshold to the PoS scale (to_ep=False)."""
    value = float(value)
    mass = float(mass_relevant)
    if not 0.0 < value < 1.0:
        raise InvalidInputError(f"threshold must be in (0, 1), got {value}")
    if not 0.0 < mass <= 1.0:
        raise InvalidInputError(f"mass_relevant must be in (0, 1], got {mass}")
    if to_ep:
        converted = value / mass
        return ConvertedThreshold(value=converted, feasible=converted <= 1.0)
    return ConvertedThreshold(value=value * mass, feasible=True)


def ep_tradeoff_ratio(prior: TruncatedNormalPrior, mcid: float,
                      theta_a: float, theta_b: float) -> float:
    """Density ratio w(theta_a)/w(theta_b): the percentage-point gain in
    rejection probability at theta_b that offsets a one-point loss at
    theta_a while keeping expected power constant.  Truncation constants
    cancel, so the ratio is computed in log space from the untruncated
    normal kernel."""
    theta_a, theta_b, mcid = float(theta_a), float(theta_b), float(mcid)
    region_lo = max(mcid, prior.lo)
    for name, t in (("theta_a", theta_a), ("theta_b", theta_b)):
        if not region_lo <= t <= prior.hi:
            raise InvalidInputError(
                f"{name}={t} is outside the relevance region [{region_lo}, {prior.hi}]"
            )
    ua = (theta_a - prior.mu) / prior.tau
    ub = (theta_b - prior.mu) / prior.tau
    return math.exp(0.5 * (ub * ub - ua * ua))


def _pos_derivative_real(setup: TestSetup, prior: TruncatedNormalPrior, n: float) -> float:
    """d PoS / dn at real-valued n, differentiated under the integral sign:
    integrand phi(sqrt(n)(theta-theta0)/sigma - z) * (theta-theta0) / (2 sigma sqrt(n))."""
    lo, hi = _density_window(prior, setup.mcid, prior.hi)
    if not hi > lo:
        return 0.0
    scale, shift = _power_coeffs(setup, n)
    denom = 2.0 * setup.sigma * math.sqrt(n)

    def f(theta):
        return (
            _kernels.norm_pdf(scale * theta + shift)
            * (theta - setup.theta0) / denom
            * prior.pdf_vec(theta)
        )

    return integrate(f, lo, hi, rel_tol=QUAD_REL_TOL)


def pos_derivative(setup: TestSetup, prior: TruncatedNormalPrior, n: float) -> float:
    """Analytic marginal gain in PoS per additional observation."""
    n = float(n)
    if not n >= 1.0:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    return _pos_derivative_real(setup, prior, n)
