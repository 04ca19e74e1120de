"""Invariant suite over a randomized scenario grid (seeded, >= 200 scenarios)
plus hypothesis property tests for the distribution primitives."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hybridpower import (
    ConditionalPrior,
    ExpectedPower,
    PointAlternative,
    PowerDistribution,
    PriorQuantile,
    TestSetup,
    TruncatedNormalPrior,
    conditional_quantile,
    expected_power,
    pos,
    pos_prime,
    power_dist_quantile,
    power_dist_survival,
    prior_mass_relevant,
    prob_reject,
    solve_sample_size,
)

N_SCENARIOS = 220


def random_scenarios(seed=20240613, count=N_SCENARIOS):
    """Deterministic scenario stream with non-degenerate relevance regions."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        theta0 = rng.uniform(-0.1, 0.1)
        sigma = rng.uniform(0.5, 2.0)
        alpha = rng.uniform(0.01, 0.2)
        mu = rng.uniform(-0.3, 0.5)
        tau = rng.uniform(0.05, 0.5)
        lo = mu - rng.uniform(0.3, 1.5) * tau
        hi = mu + rng.uniform(0.5, 2.5) * tau
        mcid = theta0 + rng.uniform(0.0, 0.6) * max(hi - theta0, 0.1)
        if mcid >= hi - 0.05 * (hi - lo):
            continue
        prior = TruncatedNormalPrior(mu=mu, tau=tau, lo=lo, hi=hi)
        if prior_mass_relevant(prior, mcid) < 1e-6:
            continue
        setup = TestSetup(theta0=theta0, sigma=sigma, alpha=alpha, mcid=mcid)
        n = int(rng.integers(1, 600))
        out.append((setup, prior, n))
    return out


SCENARIOS = random_scenarios()


def test_scenario_count():
    assert len(SCENARIOS) >= 200


def test_pos_equals_ep_times_mass_everywhere():
    for setup, prior, n in SCENARIOS:
        mass = prior_mass_relevant(prior, setup.mcid)
        gap = abs(pos(setup, prior, n) - expected_power(setup, prior, n) * mass)
        assert gap <= 1e-8


def test_decomposition_sums_and_type1_bound():
    for setup, prior, n in SCENARIOS:
        d = pos_prime(setup, prior, n)
        assert abs(d.total - (d.type1 + d.irrelevant + d.relevant)) <= 1e-8
        assert d.type1 <= setup.alpha + 1e-10
        assert min(d.type1, d.irrelevant, d.relevant) >= 0.0


def test_criteria_monotone_in_n():
    for setup, prior, n in SCENARIOS[::4]:
        n2 = n + 7
        assert expected_power(setup, prior, n2) > expected_power(setup, prior, n) - 1e-12
        assert pos(setup, prior, n2) > pos(setup, prior, n) - 1e-12
        # the relevant component grows with n unconditionally; the total only
        # does once no prior mass sits below theta0 (the type-I part decays)
        d1, d2 = pos_prime(setup, prior, n), pos_prime(setup, prior, n2)
        assert d2.relevant > d1.relevant - 1e-12
        if prior.lo >= setup.theta0:
            assert d2.total > d1.total - 1e-12


def test_quantile_rule_equals_point_rule():
    rng = np.random.default_rng(7)
    for setup, prior, _ in SCENARIOS[::3]:
        gamma = float(rng.uniform(0.2, 0.95))
        target = float(rng.uniform(0.5, 0.9))
        theta = conditional_quantile(ConditionalPrior(prior, setup.mcid), 1 - gamma)
        if theta <= setup.theta0 + 1e-9:
            continue
        lhs = solve_sample_size(setup, prior, PriorQuantile(gamma=gamma, target=target),
                                n_max=10**6)
        rhs = solve_sample_size(setup, prior, PointAlternative(theta_alt=theta, target=target),
                                n_max=10**6)
        assert lhs.n == rhs.n


def test_cdf_quantile_inverse_pairs():
    ps = (0.02, 0.2, 0.5, 0.8, 0.98)
    for setup, prior, _ in SCENARIOS:
        for p in ps:
            assert prior.cdf(prior.quantile(p)) == pytest.approx(p, abs=1e-8)
        cond = ConditionalPrior(prior, setup.mcid)
        for p in ps:
            assert cond.cdf(cond.quantile(p)) == pytest.approx(p, abs=1e-8)


def test_survival_quantile_inverse_pairs():
    # saturated power values (within ~1e-4 of 0 or 1) cannot carry enough
    # theta resolution in a double for the roundtrip; skip those points
    for setup, prior, n in SCENARIOS[::5]:
        dist = PowerDistribution(setup, prior, n, conditional=True)
        for p in (0.1, 0.5, 0.9):
            q = power_dist_quantile(dist, p)
            if not 1e-4 <= q <= 1 - 1e-4:
                continue
            assert power_dist_survival(dist, q) == pytest.approx(1 - p, abs=1e-8)


def test_pos_bounded_by_mass():
    for setup, prior, n in SCENARIOS:
        assert pos(setup, prior, n) <= prior_mass_relevant(prior, setup.mcid) + 1e-12


def test_ep_dominates_power_at_mcid():
    for setup, prior, n in SCENARIOS[::4]:
        if prior_mass_relevant(prior, setup.mcid) < 1e-3:
            continue
        assert expected_power(setup, prior, n) >= prob_reject(setup, n, setup.mcid) - 1e-10


prior_strategy = st.builds(
    lambda mu, tau, w_lo, w_hi: TruncatedNormalPrior(
        mu=mu, tau=tau, lo=mu - w_lo * tau, hi=mu + w_hi * tau),
    mu=st.floats(-0.5, 0.5),
    tau=st.floats(0.02, 1.0),
    w_lo=st.floats(0.2, 4.0),
    w_hi=st.floats(0.2, 4.0),
)


@settings(max_examples=80, deadline=None)
@given(prior=prior_strategy, p=st.floats(0.001, 0.999))
def test_prior_quantile_roundtrip_hypothesis(prior, p):
    x = prior.quantile(p)
    assert prior.lo <= x <= prior.hi
    assert prior.cdf(x) == pytest.approx(p, abs=1e-8)


@settings(max_examples=60, deadline=None)
@given(prior=prior_strategy, mcid=st.floats(-0.5, 0.5))
def test_mass_relevant_bounds_hypothesis(prior, mcid):
    mass = prior_mass_relevant(prior, mcid)
    assert 0.0 <= mass <= 1.0
    if mcid <= prior.lo:
        assert mass == 1.0
    if mcid >= prior.hi:
        assert mass == 0.0


@settings(max_examples=60, deadline=None)
@given(
    theta=st.floats(-1.0, 1.0),
    n=st.integers(1, 5000),
    alpha=st.floats(0.005, 0.45),
)
def test_prob_reject_level_and_range_hypothesis(theta, n, alpha):
    setup = TestSetup(theta0=0.0, sigma=1.0, alpha=alpha, mcid=0.0)
    val = prob_reject(setup, n, theta)
    assert 0.0 <= val <= 1.0
    at_null = prob_reject(setup, n, 0.0)
    assert at_null == pytest.approx(alpha, abs=1e-10)
    if theta > 0:
        assert val >= at_null
