"""Shared request schema and report builders for the CLI and the HTTP service.

Both front ends validate input through the same pydantic models and build
responses through the same report functions, so a CLI run with --format json
and a service call on the same scenario are value-identical by construction.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .criteria import expected_power, pos_prime
from .design import (
    PowerDistribution,
    TestSetup,
    power_dist_quantile,
    power_dist_survival,
    prob_reject,
)
from .gauss import TruncatedNormalPrior, prior_mass_relevant
from .solver import (
    DEFAULT_N_MAX,
    Criterion,
    ExpectedPower,
    PointAlternative,
    PriorQuantile,
    ProbabilityOfSuccess,
    SampleSizeResult,
    UtilityParams,
    UtilityResult,
    implied_reward,
    solve_sample_size,
    solve_utility,
)

GRID_MAX_POINTS = 10_000


class PriorSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mean: float
    sd: float = Field(gt=0)
    lo: float
    hi: float

    @model_validator(mode="after")
    def _ordered_bounds(self):
        if not self.lo < self.hi:
            raise ValueError(f"lo must be below hi, got [{self.lo}, {self.hi}]")
        return self

    def to_domain(self) -> TruncatedNormalPrior:
        return TruncatedNormalPrior(mu=self.mean, tau=self.sd, lo=self.lo, hi=self.hi)


class SetupSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    alpha: float = Field(default=0.025, gt=0, lt=0.5)
    theta0: float = 0.0
    sigma: float = Field(default=1.0, gt=0)
    mcid: float = 0.0

    @model_validator(mode="after")
    def _mcid_above_null(self):
        if self.mcid < self.theta0:
            raise ValueError(f"mcid must be >= theta0 ({self.theta0}), got {self.mcid}")
        return self

    def to_domain(self) -> TestSetup:
        return TestSetup(theta0=self.theta0, sigma=self.sigma, alpha=self.alpha, mcid=self.mcid)


class CriterionSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: Literal["point", "quantile", "ep", "pos"]
    target: float = Field(gt=0, lt=1)
    gamma: Optional[float] = Field(default=None, gt=0, le=1)
    theta_alt: Optional[float] = None

    @model_validator(mode="after")
    def _fields_match_type(self):
        if self.type == "point" and self.theta_alt is None:
            raise ValueError("criterion type 'point' requires theta_alt")
        if self.type == "quantile" and self.gamma is None:
            raise ValueError("criterion type 'quantile' requires gamma")
        if self.type != "point" and self.theta_alt is not None:
            raise ValueError("theta_alt is only valid for criterion type 'point'")
        if self.type != "quantile" and self.gamma is not None:
            raise ValueError("gamma is only valid for criterion type 'quantile'")
        return self

    def to_domain(self) -> Criterion:
        if self.type == "point":
            return PointAlternative(theta_alt=self.theta_alt, target=self.target)
        if self.type == "quantile":
            return PriorQuantile(gamma=self.gamma, target=self.target)
        if self.type == "ep":
            return ExpectedPower(target=self.target)
        return ProbabilityOfSuccess(target=self.target)


class GridSpec(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    from_: float = Field(alias="from")
    to: float
    points: int = Field(ge=2, le=GRID_MAX_POINTS)

    @model_validator(mode="after")
    def _ordered(self):
        if not self.from_ < self.to:
            raise ValueError(f"grid 'from' must be below 'to', got [{self.from_}, {self.to}]")
        return self

    def values(self) -> list[float]:
        step = (self.to - self.from_) / (self.points - 1)
        return [self.from_ + i * step for i in range(self.points)]


class ApiScenario(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    prior: PriorSpec
    setup: SetupSpec = SetupSpec()
    n: Optional[int] = Field(default=None, ge=1)
    criterion: Optional[CriterionSpec] = None
    lam: Optional[float] = Field(default=None, alias="lambda", ge=0)
    conditional: bool = True
    grid: Optional[GridSpec] = None
    n_max: int = Field(default=DEFAULT_N_MAX, ge=1, le=DEFAULT_N_MAX)


def criterion_to_json(criterion: Criterion) -> dict:
    if isinstance(criterion, PointAlternative):
        return {"type": "point", "target": criterion.target, "theta_alt": criterion.theta_alt}
    if isinstance(criterion, PriorQuantile):
        return {"type": "quantile", "target": criterion.target, "gamma": criterion.gamma}
    if isinstance(criterion, ExpectedPower):
        return {"type": "ep", "target": criterion.target}
    return {"type": "pos", "target": criterion.target}


def evaluate_report(setup: TestSetup, prior: TruncatedNormalPrior, n: int) -> dict:
    decomp = pos_prime(setup, prior, n)
    return {
        "power_at_mcid": prob_reject(setup, n, setup.mcid),
        "ep": expected_power(setup, prior, n),
        "pos": decomp.relevant,
        "pos_prime": decomp.total,
        "decomposition": {
            "type1": decomp.type1,
            "irrelevant": decomp.irrelevant,
            "relevant": decomp.relevant,
        },
        "mass_relevant": prior_mass_relevant(prior, setup.mcid),
    }


def sample_size_report(result: SampleSizeResult) -> dict:
    report = {"n": result.n, "achieved": result.achieved}
    if result.achieved_below is not None:
        report["achieved_below"] = result.achieved_below
    report["criterion"] = criterion_to_json(result.criterion)
    return report


def solve_report(setup: TestSetup, prior: TruncatedNormalPrior,
                 criterion: Criterion, n_max: int) -> dict:
    return sample_size_report(solve_sample_size(setup, prior, criterion, n_max=n_max))


def distribution_report(setup: TestSetup, prior: TruncatedNormalPrior, n: int,
                        conditional: bool, grid: Optional[GridSpec]) -> dict:
    dist = PowerDistribution(setup=setup, prior=prior, n=n, conditional=conditional)
    xs = grid.values() if grid is not None else [i / 100.0 for i in range(101)]
    return {
        "x": xs,
        "survival": [power_dist_survival(dist, x) for x in xs],
        "quantiles": {
            f"p{int(100 * p)}": power_dist_quantile(dist, p)
            for p in (0.1, 0.25, 0.5, 0.75, 0.9)
        },
    }


def utility_report(setup: TestSetup, prior: TruncatedNormalPrior,
                   lam: float, n_max: int) -> dict:
    result: UtilityResult = solve_utility(setup, prior, UtilityParams(lam=lam), n_max=n_max)
    report = {
        "n_opt": result.n_opt,
        "utility": result.utility,
        "ep_at_opt": result.ep_at_opt,
        "pos_at_opt": result.pos_at_opt,
    }
    if result.warning is not None:
        report["warning"] = result.warning
    return report


def implied_reward_report(setup: TestSetup, prior: TruncatedNormalPrior,
                          grid: Optional[GridSpec], n_max: int) -> dict:
    targets = grid.values() if grid is not None else [0.5 + 0.01 * i for i in range(46)]
    bad = [t for t in targets if not 0.0 < t < 1.0]
    if bad:
        raise ValueError(f"ep_target grid values must lie in (0, 1), got {bad[0]}")
    return {
        "ep_target": targets,
        "lambda": [implied_reward(setup, prior, t, n_max=n_max) for t in targets],
    }
