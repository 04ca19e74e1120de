"""One-arm Z-test frame and the a-priori distributions of its rejection probability.

`prob_reject(setup, n, theta)` is the frequentist probability to reject the
null at a fixed effect theta:

    Phi(sqrt(n) * (theta - theta0) / sigma - z_{1-alpha})

Viewing theta as a draw from the effect prior turns this into a random
variable; `PowerDistribution` exposes its exact distribution, either
unconditional (random probability to reject) or conditional on a relevant
effect Theta >= mcid (random power).  All distribution functions are closed
form through monotone inversion of the power curve, never quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError
from .gauss import (
    ConditionalPrior,
    TruncatedNormalPrior,
    std_norm_cdf,
    std_norm_quantile,
)


@dataclass(frozen=True)
class TestSetup:
    """Null boundary, known sd, one-sided level, and relevance threshold."""

    theta0: float = 0.0
    sigma: float = 1.0
    alpha: float = 0.025
    mcid: float = 0.0
    z_alpha: float = field(init=False, repr=False)

    def __post_init__(self):
        for name in ("theta0", "sigma", "alpha", "mcid"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise InvalidInputError(f"setup.{name} must be a finite number, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.sigma <= 0.0:
            raise InvalidInputError(f"setup.sigma must be > 0, got {self.sigma}")
        if not 0.0 < self.alpha < 0.5:
            raise InvalidInputError(f"setup.alpha must be in (0, 0.5), got {self.alpha}")
        if self.mcid < self.theta0:
            raise InvalidInputError(
                f"setup.mcid must be >= theta0 ({self.theta0}), got {self.mcid}"
            )
        object.__setattr__(self, "z_alpha", std_norm_quantile(1.0 - self.alpha))


def _check_n(n) -> int:
    if not (isinstance(n, (int, np.integer)) and not isinstance(n, bool)) or n < 1:
        raise InvalidInputError(f"sample size must be an integer >= 1, got {n!r}")
    return int(n)


def _reject_prob_real(setup: TestSetup, n: float, theta: float) -> float:
    # real-valued n is reserved for the solvers' continuous relaxations
    return std_norm_cdf(math.sqrt(n) * (theta - setup.theta0) / setup.sigma - setup.z_alpha)


def prob_reject(setup: TestSetup, n: int, theta: float) -> float:
    """Probability to reject the null for sample size n at effect theta."""
    return _reject_prob_real(setup, _check_n(n), float(theta))


def power_exceed_threshold_theta(setup: TestSetup, n: int, x: float) -> float:
    """Smallest effect whose rejection probability reaches x (inverse power curve)."""
    n = _check_n(n)
    x = float(x)
    if not 0.0 < x < 1.0:
        raise InvalidInputError(f"power level must be in (0, 1), got {x}")
    return setup.theta0 + setup.sigma * (setup.z_alpha + std_norm_quantile(x)) / math.sqrt(n)


@dataclass(frozen=True)
class PowerDistribution:
    """Distribution of the rejection probability under the effect prior.

    conditional=True conditions on a relevant effect (random power);
    conditional=False is the unconditional random probability to reject.
    """

    setup: TestSetup
    prior: TruncatedNormalPrior
    n: int
    conditional: bool = True

    def __post_init__(self):
        object.__setattr__(self, "n", _check_n(self.n))
        if self.conditional:
            # raises DegenerateConditionalError when the relevance region is empty
            ConditionalPrior(self.prior, self.setup.mcid)

    def _cond(self) -> ConditionalPrior:
        return ConditionalPrior(self.prior, self.setup.mcid)


def power_dist_survival(dist: PowerDistribution, x: float) -> float:
    """Pr[rejection probability >= x] under the (conditional) prior."""
    x = float(x)
    if x <= 0.0:
        return 1.0
    if x >= 1.0:
        return 0.0
    theta_x = power_exceed_threshold_theta(dist.setup, dist.n, x)
    if dist.conditional:
        cut = max(dist.setup.mcid, dist.prior.lo)
        num = dist.prior.survival(max(theta_x, cut))
        return num / dist.prior.survival(cut)
    return dist.prior.survival(theta_x)


def power_dist_quantile(dist: PowerDistribution, p: float) -> float:
    """p-quantile of the rejection probability; reduces to the power curve at
    the matching prior quantile because the curve is increasing in theta."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise InvalidInputError(f"quantile level must be in (0, 1), got {p}")
    if dist.conditional:
        theta_p = conditional_point(dist.setup, dist.prior, p)
    else:
        theta_p = dist.prior.quantile(p)
    return prob_reject(dist.setup, dist.n, theta_p)


def conditional_point(setup: TestSetup, prior: TruncatedNormalPrior, p: float) -> float:
    """p-quantile of the prior conditional on a relevant effect."""
    return ConditionalPrior(prior, setup.mcid).quantile(p)


def power_dist_histogram(dist: PowerDistribution, bins: int):
    """Exact bin masses on an equal-width grid over [0, 1].

    Returns (edges, masses): edges has bins+1 entries, masses sums to 1.
    Masses come from survival-function differences, not sampling.
    """
    if not (isinstance(bins, (int, np.integer)) and bins >= 1):
        raise InvalidInputError(f"bins must be an integer >= 1, got {bins!r}")
    edges = np.linspace(0.0, 1.0, int(bins) + 1)
    surv = np.array([power_dist_survival(dist, float(e)) for e in edges])
    masses = surv[:-1] - surv[1:]
    return edges, masses
