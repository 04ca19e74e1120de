"""Deterministic datasets behind the reference figures (fig2..fig7).

Each generator returns {file name: (header, rows)}; the CLI serialises the
rows with a fixed 10-significant-digit float format so repeated runs emit
byte-identical CSVs.  Settings that the figure captions leave open (grid
resolutions, histogram bin counts) are pinned here and documented in the
README.
"""

from __future__ import annotations

import numpy as np

from .criteria import pos_prime
from .design import (
    PowerDistribution,
    TestSetup,
    power_dist_histogram,
    power_dist_survival,
    prob_reject,
)
from .errors import InfeasibleCriterionError, SampleSizeCapError
from .gauss import ConditionalPrior, TruncatedNormalPrior
from .solver import (
    ExpectedPower,
    PointAlternative,
    PriorQuantile,
    ProbabilityOfSuccess,
    implied_reward,
    solve_sample_size,
)

TRUNCATION = (-0.3, 0.7)

FIG2_SETUP = TestSetup(alpha=0.025, mcid=0.1)
FIG2_TARGET = 0.8
FIG2_N_MAX = 1000
FIG2_MEANS = [round(-0.1 + 0.05 * i, 10) for i in range(13)]   # -0.1 .. 0.5
FIG2_SDS = [round(0.05 * i, 10) for i in range(1, 11)]         # 0.05 .. 0.5

FIG3_SETUP = TestSetup(alpha=0.025, mcid=0.1)  # caption's alpha=0.25 read as a typo
FIG3_N = 150
FIG3_MEANS = [round(-0.2 + 0.1 * i, 10) for i in range(7)]     # -0.2 .. 0.4
FIG3_SDS = [0.05, 0.1, 0.2, 0.3, 0.4]

# Relevance threshold 0 reproduces the published sample sizes {854, 126, 32}
# (a threshold of 0.1 is impossible for the first panel: powering at 0.1
# itself would already need only n = 785).
FIG4_SETUP = TestSetup(alpha=0.025, mcid=0.0)
FIG4_PRIORS = [(-0.25, 0.4), (0.3, 0.125), (0.5, 0.05)]
FIG4_TARGET = 0.8

FIG5_SETUP = TestSetup(alpha=0.025, mcid=0.1)
FIG5_PRIOR = (0.3, 0.2)  # figure caption's sd, not the 0.125 of the panel study
FIG5_DESIGNS = [(0.5, 0.7), (0.5, 0.8), (0.9, 0.7), (0.9, 0.8)]

CLINICAL_SETUP = TestSetup(alpha=0.025, mcid=0.05)
CLINICAL_PRIOR = (0.2, 0.2)

THETA_POINTS = 201
CDF_POINTS = 201
HIST_BINS = 10
FIG7_TARGETS = [round(0.5 + 0.01 * i, 10) for i in range(46)]  # 0.50 .. 0.95


def _prior(mean: float, sd: float) -> TruncatedNormalPrior:
    return TruncatedNormalPrior(mu=mean, tau=sd, lo=TRUNCATION[0], hi=TRUNCATION[1])


def _theta_grid() -> np.ndarray:
    return np.linspace(TRUNCATION[0], TRUNCATION[1], THETA_POINTS)


def _solve_or_na(setup, prior, criterion) -> int | None:
    try:
        return solve_sample_size(setup, prior, criterion, n_max=FIG2_N_MAX).n
    except (InfeasibleCriterionError, SampleSizeCapError):
        return None


def fig2() -> dict:
    """Required n against prior parameters for the four derivation methods."""
    rows = []
    for mean in FIG2_MEANS:
        for sd in FIG2_SDS:
            prior = _prior(mean, sd)
            methods = [
                ("ep", ExpectedPower(target=FIG2_TARGET)),
                ("pos", ProbabilityOfSuccess(target=FIG2_TARGET)),
                ("quantile_0.5", PriorQuantile(gamma=0.5, target=FIG2_TARGET)),
                ("quantile_0.9", PriorQuantile(gamma=0.9, target=FIG2_TARGET)),
            ]
            for label, criterion in methods:
                rows.append((mean, sd, label, _solve_or_na(FIG2_SETUP, prior, criterion)))
    return {"fig2.csv": (("prior_mean", "prior_sd", "method", "n"), rows)}


def fig3() -> dict:
    """Composition of the marginal rejection probability at fixed n."""
    rows = []
    for mean in FIG3_MEANS:
        for sd in FIG3_SDS:
            decomp = pos_prime(FIG3_SETUP, _prior(mean, sd), FIG3_N)
            total = decomp.total
            rows.append((
                mean, sd,
                decomp.type1 / total,
                decomp.irrelevant / total,
                decomp.relevant / total,
                total,
            ))
    return {"fig3.csv": (("prior_mean", "prior_sd", "share_A", "share_B", "share_C", "pos_prime"), rows)}


def _panel_rows(setup: TestSetup, prior: TruncatedNormalPrior, n: int, panel: str):
    cond = ConditionalPrior(prior, setup.mcid)
    curves = [
        (panel, th, prior.pdf(th), cond.pdf(th), prob_reject(setup, n, th))
        for th in _theta_grid()
    ]
    hists = []
    for kind, conditional in (("rpow", True), ("rpr", False)):
        dist = PowerDistribution(setup=setup, prior=prior, n=n, conditional=conditional)
        edges, masses = power_dist_histogram(dist, HIST_BINS)
        hists.extend(
            (panel, kind, edges[i], edges[i + 1], masses[i]) for i in range(HIST_BINS)
        )
    return curves, hists


def _curves_and_hists(panels) -> dict:
    curves, hists = [], []
    for setup, prior, n, label in panels:
        c, h = _panel_rows(setup, prior, n, label)
        curves.extend(c)
        hists.extend(h)
    return curves, hists


def fig4() -> dict:
    """Priors, power curves, and rejection-probability histograms for the
    three expected-power designs."""
    panels = []
    for mean, sd in FIG4_PRIORS:
        prior = _prior(mean, sd)
        n = solve_sample_size(FIG4_SETUP, prior, ExpectedPower(target=FIG4_TARGET)).n
        panels.append((FIG4_SETUP, prior, n, f"mean_{mean}_sd_{sd}_n_{n}"))
    curves, hists = _curves_and_hists(panels)
    return {
        "fig4_curves.csv": (("panel", "theta", "pdf_uncond", "pdf_cond", "power"), curves),
        "fig4_histograms.csv": (("panel", "kind", "bin_lo", "bin_hi", "mass"), hists),
    }


def fig5() -> dict:
    """Same layout as fig4 for the quantile designs on the intermediate prior."""
    prior = _prior(*FIG5_PRIOR)
    panels = []
    for gamma, target in FIG5_DESIGNS:
        n = solve_sample_size(FIG5_SETUP, prior, PriorQuantile(gamma=gamma, target=target)).n
        panels.append((FIG5_SETUP, prior, n, f"gamma_{gamma}_target_{target}_n_{n}"))
    curves, hists = _curves_and_hists(panels)
    return {
        "fig5_curves.csv": (("panel", "theta", "pdf_uncond", "pdf_cond", "power"), curves),
        "fig5_histograms.csv": (("panel", "kind", "bin_lo", "bin_hi", "mass"), hists),
    }


def clinical_designs() -> list[tuple[str, int]]:
    """(method, n) for the worked one-arm example used across fig6 and the docs."""
    setup = CLINICAL_SETUP
    prior = _prior(*CLINICAL_PRIOR)
    return [
        ("mcid", solve_sample_size(setup, prior, PointAlternative(theta_alt=setup.mcid, target=0.8)).n),
        ("quantile_0.9", solve_sample_size(setup, prior, PriorQuantile(gamma=0.9, target=0.8)).n),
        ("quantile_0.5", solve_sample_size(setup, prior, PriorQuantile(gamma=0.5, target=0.8)).n),
        ("ep", solve_sample_size(setup, prior, ExpectedPower(target=0.8)).n),
    ]


def fig6() -> dict:
    """Prior densities, the four design power curves, and the random-power CDF."""
    setup = CLINICAL_SETUP
    prior = _prior(*CLINICAL_PRIOR)
    cond = ConditionalPrior(prior, setup.mcid)
    prior_rows = [(th, prior.pdf(th), cond.pdf(th)) for th in _theta_grid()]
    power_rows = []
    cdf_rows = []
    xs = np.linspace(0.0, 1.0, CDF_POINTS)
    for method, n in clinical_designs():
        power_rows.extend((method, th, prob_reject(setup, n, th)) for th in _theta_grid())
        dist = PowerDistribution(setup=setup, prior=prior, n=n, conditional=True)
        cdf_rows.extend((method, x, 1.0 - power_dist_survival(dist, float(x))) for x in xs)
    return {
        "fig6_prior.csv": (("theta", "pdf", "pdf_cond"), prior_rows),
        "fig6_power.csv": (("method", "theta", "power"), power_rows),
        "fig6_cdf.csv": (("method", "x", "cdf"), cdf_rows),
    }


def fig7() -> dict:
    """Implied reward against the expected-power constraint level."""
    setup = CLINICAL_SETUP
    prior = _prior(*CLINICAL_PRIOR)
    rows = [(t, implied_reward(setup, prior, t)) for t in FIG7_TARGETS]
    return {"fig7.csv": (("ep_target", "lambda"), rows)}


FIGURES = {
    "fig2": fig2,
    "fig3": fig3,
    "fig4": fig4,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
}
