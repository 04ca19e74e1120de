"""Naive Monte Carlo cross-check for every criterion and distribution.

The deterministic path never calls into this module; it exists so tests can
compare closed-form and quadrature results against brute-force estimates.

Sampling is inversion only: a counter-based (Philox) uniform stream is mapped
through the prior quantile function, so a single (seed, index) pair fully
determines every draw.  `uniform_stream(seed, start, count)` returns the
exact slice [start, start+count) of the serial stream regardless of how work
is partitioned, which makes multi-worker estimates independent of the worker
count by construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.random import Generator, Philox

from . import _kernels
from .design import TestSetup, _check_n
from .errors import InvalidInputError
from .gauss import ConditionalPrior, TruncatedNormalPrior

# numpy's Philox counter advances in 128-bit blocks = 4 doubles
_BLOCK = 4


def uniform_stream(seed: int, start: int, count: int) -> np.ndarray:
    """Doubles [start, start+count) of the uniform stream keyed by `seed`."""
    if start < 0 or count < 0:
        raise InvalidInputError("start and count must be nonnegative")
    block, offset = divmod(start, _BLOCK)
    gen = Generator(Philox(key=seed).advance(block))
    return gen.random(offset + count)[offset:]


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    draws: int
    seed: int


def _estimate(values: np.ndarray, draws: int, seed: int) -> McEstimate:
    mean = float(values.mean())
    if draws > 1:
        se = float(values.std(ddof=1)) / math.sqrt(draws)
    else:
        se = 0.0
    return McEstimate(value=mean, std_error=se, draws=draws, seed=seed)


CriterionKind = Literal["ep", "pos", "pos_prime", "decomposition"]


def _powers(setup: TestSetup, n: int, theta: np.ndarray) -> np.ndarray:
    scale = math.sqrt(n) / setup.sigma
    shift = -scale * setup.theta0 - setup.z_alpha
    return _kernels.reject_prob(theta, scale, shift)


def mc_criterion(
    setup: TestSetup,
    prior: TruncatedNormalPrior,
    n: int,
    which: CriterionKind,
    draws: int,
    seed: int,
):
    """MC estimate of a criterion; returns an McEstimate, or a dict of three
    (type1, irrelevant, relevant) estimates for which="decomposition"."""
    n = _check_n(n)
    if not (isinstance(draws, (int, np.integer)) and draws >= 1):
        raise InvalidInputError(f"draws must be an integer >= 1, got {draws!r}")
    draws = int(draws)
    u = uniform_stream(seed, 0, draws)

    if which == "ep":
        cond = ConditionalPrior(prior, setup.mcid)
        theta = cond.quantile_vec(u)
        return _estimate(_powers(setup, n, theta), draws, seed)

    theta = prior.quantile_vec(u)
    powers = _powers(setup, n, theta)
    if which == "pos":
        return _estimate(powers * (theta >= setup.mcid), draws, seed)
    if which == "pos_prime":
        return _estimate(powers, draws, seed)
    if which == "decomposition":
        return {
            "type1": _estimate(powers * (theta <= setup.theta0), draws, seed),
            "irrelevant": _estimate(
                powers * ((theta > setup.theta0) & (theta < setup.mcid)), draws, seed
            ),
            "relevant": _estimate(powers * (theta >= setup.mcid), draws, seed),
        }
    raise InvalidInputError(f"unknown criterion kind {which!r}")


def mc_power_survival(
    setup: TestSetup,
    prior: TruncatedNormalPrior,
    n: int,
    x: float,
    conditional: bool,
    draws: int,
    seed: int,
) -> McEstimate:
    """Fraction of prior draws whose rejection probability reaches x."""
    n = _check_n(n)
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise InvalidInputError(f"power level must be in [0, 1], got {x}")
    draws = int(draws)
    u = uniform_stream(seed, 0, draws)
    if conditional:
        theta = ConditionalPrior(prior, setup.mcid).quantile_vec(u)
    else:
        theta = prior.quantile_vec(u)
    hits = (_powers(setup, n, theta) >= x).astype(np.float64)
    return _estimate(hits, draws, seed)
