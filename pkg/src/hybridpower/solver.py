"""Constrained integer sample-size search and expected-utility maximisation.

Every criterion value is strictly increasing in n, so the minimal feasible n
is found by exponential bracket doubling from n=1 followed by binary search,
with the minimality certificate (criterion at n-1 below target) returned
alongside the solution.

The utility U(n) = lambda * PoS(n) - n is maximised over integers; the
implied-reward curve inverts that relationship through the first-order
condition lambda * dPoS/dn = 1 at the continuous-relaxation root of
EP(n) = target (integer matching would only pin lambda to an interval).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from scipy.optimize import brentq

from .criteria import (
    _expected_power_real,
    _pos_derivative_real,
    _pos_real,
    expected_power,
    pos,
)
from .design import TestSetup, prob_reject
from .errors import (
    InfeasibleCriterionError,
    InvalidInputError,
    SampleSizeCapError,
)
from .gauss import ConditionalPrior, TruncatedNormalPrior, prior_mass_relevant

DEFAULT_N_MAX = 10**6


def _check_target(target: float) -> float:
    target = float(target)
    if not 0.0 < target < 1.0:
        raise InvalidInputError(f"target must be in (0, 1), got {target}")
    return target


@dataclass(frozen=True)
class PointAlternative:
    """Power the trial at a fixed effect theta_alt > theta0."""
    theta_alt: float
    target: float

    def __post_init__(self):
        object.__setattr__(self, "target", _check_target(self.target))
        object.__setattr__(self, "theta_alt", float(self.theta_alt))


@dataclass(frozen=True)
class PriorQuantile:
    """Meet the target power with a-priori probability gamma, given a
    relevant effect; equivalent to powering at the conditional
    (1-gamma)-quantile of the effect prior."""
    gamma: float
    target: float

    def __post_init__(self):
        object.__setattr__(self, "target", _check_target(self.target))
        gamma = float(self.gamma)
        if not 0.0 < gamma <= 1.0:
            raise InvalidInputError(f"gamma must be in (0, 1], got {gamma}")
        object.__setattr__(self, "gamma", gamma)


@dataclass(frozen=True)
class ExpectedPower:
    """Constrain the mean rejection probability given a relevant effect."""
    target: float

    def __post_init__(self):
        object.__setattr__(self, "target", _check_target(self.target))


@dataclass(frozen=True)
class ProbabilityOfSuccess:
    """Constrain the joint probability of rejection and a relevant effect."""
    target: float

    def __post_init__(self):
        object.__setattr__(self, "target", _check_target(self.target))


Criterion = Union[PointAlternative, PriorQuantile, ExpectedPower, ProbabilityOfSuccess]


@dataclass(frozen=True)
class SampleSizeResult:
    n: int
    achieved: float
    achieved_below: Optional[float]  # criterion at n-1; None when n == 1
    criterion: Criterion


def _criterion_fn(setup: TestSetup, prior: TruncatedNormalPrior, criterion: Criterion):
    """Monotone evaluation function n -> criterion value, with feasibility checks."""
    if isinstance(criterion, PointAlternative):
        theta_alt = criterion.theta_alt
        if theta_alt <= setup.theta0:
            raise InvalidInputError(
                f"point alternative {theta_alt} must exceed theta0 = {setup.theta0}"
            )
        return lambda n: prob_reject(setup, n, theta_alt)

    if isinstance(criterion, PriorQuantile):
        cond = ConditionalPrior(prior, setup.mcid)
        theta_alt = cond.quantile(1.0 - criterion.gamma)
        if theta_alt <= setup.theta0:
            raise InfeasibleCriterionError(
                f"conditional prior quantile {theta_alt} does not exceed theta0 = "
                f"{setup.theta0}; the rejection probability is capped at alpha",
                bound=setup.alpha,
            )
        return lambda n: prob_reject(setup, n, theta_alt)

    if isinstance(criterion, ExpectedPower):
        ConditionalPrior(prior, setup.mcid)  # degenerate prior raises here
        return lambda n: expected_power(setup, prior, n)

    if isinstance(criterion, ProbabilityOfSuccess):
        mass = prior_mass_relevant(prior, setup.mcid)
        if criterion.target >= mass:
            raise InfeasibleCriterionError(
                f"success-probability target {criterion.target} is not attainable: it "
                f"cannot reach the a-priori probability of a relevant effect, {mass:.6f}",
                bound=mass,
            )
        return lambda n: pos(setup, prior, n)

    raise InvalidInputError(f"unknown criterion {criterion!r}")


def solve_sample_size(
    setup: TestSetup,
    prior: TruncatedNormalPrior,
    criterion: Criterion,
    n_max: int = DEFAULT_N_MAX,
) -> SampleSizeResult:
    """Smallest integer n <= n_max whose criterion value reaches the target."""
    if not (isinstance(n_max, int) and n_max >= 1):
        raise InvalidInputError(f"n_max must be an integer >= 1, got {n_max!r}")
    f = _criterion_fn(setup, prior, criterion)
    target = criterion.target

    if f(1) >= target:
        return SampleSizeResult(n=1, achieved=f(1), achieved_below=None, criterion=criterion)

    # exponential bracket: f(lo) < target, then binary search in (lo, hi]
    lo = 1
    hi = 2
    while hi < n_max and f(hi) < target:
        lo = hi
        hi = min(hi * 2, n_max)
    achieved_hi = f(hi)
    if achieved_hi < target:
        raise SampleSizeCapError(
            f"criterion reaches only {achieved_hi:.6f} < {target} at n_max = {n_max}",
            n_max=n_max,
            achieved=achieved_hi,
        )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f(mid) >= target:
            hi = mid
        else:
            lo = mid
    return SampleSizeResult(
        n=hi, achieved=f(hi), achieved_below=f(hi - 1), criterion=criterion
    )


@dataclass(frozen=True)
class UtilityParams:
    """Expected reward for a correct rejection, in average per-patient costs."""
    lam: float

    def __post_init__(self):
        lam = float(self.lam)
        if not (math.isfinite(lam) and lam >= 0.0):
            raise InvalidInputError(f"lambda must be finite and >= 0, got {lam}")
        object.__setattr__(self, "lam", lam)


def utility(setup: TestSetup, prior: TruncatedNormalPrior, n: int,
            params: UtilityParams) -> float:
    """Expected trial utility lambda * PoS(n) - n, in per-patient cost units."""
    return params.lam * pos(setup, prior, n) - n


@dataclass(frozen=True)
class UtilityResult:
    n_opt: int
    utility: float
    ep_at_opt: float
    pos_at_opt: float
    warning: Optional[str] = None


def solve_utility(
    setup: TestSetup,
    prior: TruncatedNormalPrior,
    params: UtilityParams,
    n_max: int = DEFAULT_N_MAX,
) -> UtilityResult:
    """Integer argmax of the expected utility over [1, n_max], ties to smaller n.

    Strategy: utility can drop by at most 1 per extra observation, so a coarse
    scan cannot hide a peak taller than its spacing; the grid argmax is then
    refined by exhaustive scans of the windows around the best grid points.
    The marginal condition lambda * (PoS(n+1) - PoS(n)) - 1 still being
    positive at n_max means the optimum lies beyond the cap and raises.
    """
    if not (isinstance(n_max, int) and n_max >= 1):
        raise InvalidInputError(f"n_max must be an integer >= 1, got {n_max!r}")
    lam = params.lam
    if lam == 0.0:
        p1 = pos(setup, prior, 1)
        return UtilityResult(
            n_opt=1,
            utility=-1.0,
            ep_at_opt=expected_power(setup, prior, 1),
            pos_at_opt=p1,
            warning="lambda = 0 makes utility strictly decreasing; n_opt = 1 is degenerate",
        )

    mass = prior_mass_relevant(prior, setup.mcid)
    # beyond lam * mass + 1 the utility is certainly below U(1) >= lam*PoS(1) - 1
    n_cap = min(n_max, max(1, int(math.floor(lam * mass)) + 1))

    pos_cache: dict[int, float] = {}

    def pos_at(n: int) -> float:
        if n not in pos_cache:
            pos_cache[n] = pos(setup, prior, n)
        return pos_cache[n]

    def u(n: int) -> float:
        return lam * pos_at(n) - n

    # geometric + linear coarse grid over [1, n_cap]
    grid = {1, n_cap}
    g = 1.0
    while g < n_cap:
        grid.add(int(round(g)))
        g *= 1.25
    step = max(1, n_cap // 256)
    grid.update(range(1, n_cap + 1, step))
    grid = sorted(grid)

    values = [u(n) for n in grid]
    order = sorted(range(len(grid)), key=lambda i: (-values[i], grid[i]))

    best_n, best_u = 1, u(1)
    for i in order[:3]:
        w_lo = grid[i - 1] if i > 0 else 1
        w_hi = grid[i + 1] if i + 1 < len(grid) else n_cap
        for n in range(w_lo, w_hi + 1):
            un = u(n)
            if un > best_u or (un == best_u and n < best_n):
                best_n, best_u = n, un

    if best_n == n_max and n_max > 1:
        marginal = lam * (pos_at(n_max) - pos_at(n_max - 1)) - 1.0
        if marginal > 0.0:
            raise SampleSizeCapError(
                f"utility marginal condition still positive at n_max = {n_max}",
                n_max=n_max,
                achieved=best_u,
            )

    return UtilityResult(
        n_opt=best_n,
        utility=best_u,
        ep_at_opt=expected_power(setup, prior, best_n),
        pos_at_opt=pos_at(best_n),
    )


def implied_reward(setup: TestSetup, prior: TruncatedNormalPrior, ep_target: float,
                   n_max: int = DEFAULT_N_MAX) -> float:
    """Reward lambda under which the utility-maximising design matches the
    expected-power-constrained one, via lambda = 1 / (dPoS/dn) at the
    continuous root of EP(n) = ep_target."""
    ep_target = _check_target(ep_target)
    result = solve_sample_size(setup, prior, ExpectedPower(target=ep_target), n_max=n_max)
    n_int = result.n
    if n_int == 1:
        n_real = 1.0
    else:
        n_real = brentq(
            lambda n: _expected_power_real(setup, prior, n) - ep_target,
            n_int - 1,
            n_int,
            xtol=1e-9,
            rtol=1e-13,
        )
    return 1.0 / _pos_derivative_real(setup, prior, n_real)
