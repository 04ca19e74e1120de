import pytest

from hybridpower import TestSetup, TruncatedNormalPrior


@pytest.fixture(scope="session")
def clinical_prior() -> TruncatedNormalPrior:
    # worked one-arm example used throughout the docs
    return TruncatedNormalPrior(mu=0.2, tau=0.2, lo=-0.3, hi=0.7)


@pytest.fixture(scope="session")
def clinical_setup() -> TestSetup:
    return TestSetup(theta0=0.0, sigma=1.0, alpha=0.025, mcid=0.05)
