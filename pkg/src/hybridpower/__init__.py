"""Sample-size derivation for one-arm Z-tests under effect-size uncertainty.

A truncated normal prior on the standardised effect induces a distribution
over the trial's rejection probability; this package derives sample sizes
from point alternatives, conditional prior quantiles, expected power,
success-probability constraints, and expected-utility maximisation, and
serves the results through a CLI and a JSON HTTP API.
"""

from ._kernels import BACKEND
from .criteria import (
    ConvertedThreshold,
    PosDecomposition,
    ep_pos_threshold,
    ep_tradeoff_ratio,
    expected_power,
    pos,
    pos_derivative,
    pos_prime,
)
from .design import (
    PowerDistribution,
    TestSetup,
    power_dist_histogram,
    power_dist_quantile,
    power_dist_survival,
    power_exceed_threshold_theta,
    prob_reject,
)
from .errors import (
    DegenerateConditionalError,
    HybridPowerError,
    InfeasibleCriterionError,
    InvalidInputError,
    SampleSizeCapError,
)
from .gauss import (
    ConditionalPrior,
    TruncatedNormalPrior,
    conditional_quantile,
    prior_cdf,
    prior_mass_relevant,
    prior_sample,
    std_norm_cdf,
    std_norm_quantile,
)
from .oracle import McEstimate, mc_criterion, mc_power_survival, uniform_stream
from .solver import (
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
    utility,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConditionalPrior",
    "ConvertedThreshold",
    "Criterion",
    "DegenerateConditionalError",
    "ExpectedPower",
    "HybridPowerError",
    "InfeasibleCriterionError",
    "InvalidInputError",
    "McEstimate",
    "PointAlternative",
    "PosDecomposition",
    "PowerDistribution",
    "PriorQuantile",
    "ProbabilityOfSuccess",
    "SampleSizeCapError",
    "SampleSizeResult",
    "TestSetup",
    "TruncatedNormalPrior",
    "UtilityParams",
    "UtilityResult",
    "conditional_quantile",
    "ep_pos_threshold",
    "ep_tradeoff_ratio",
    "expected_power",
    "implied_reward",
    "mc_criterion",
    "mc_power_survival",
    "pos",
    "pos_derivative",
    "pos_prime",
    "power_dist_histogram",
    "power_dist_quantile",
    "power_dist_survival",
    "power_exceed_threshold_theta",
    "prior_cdf",
    "prior_mass_relevant",
    "prior_sample",
    "prob_reject",
    "solve_sample_size",
    "solve_utility",
    "std_norm_cdf",
    "std_norm_quantile",
    "uniform_stream",
    "utility",
]
