"""Standard-normal and truncated-normal primitives.

Everything downstream (rejection probabilities, design criteria, solvers,
the Monte Carlo oracle) is built from the operations in this module:

* `std_norm_cdf` / `std_norm_quantile`: erfc-based cdf (abs. error well below
  1e-12) and its inverse (rational guess + one Newton step, |cdf(q(p)) - p|
  far below 1e-9).
* `TruncatedNormalPrior`: a normal density with PRE-truncation mean `mu` and
  standard deviation `tau`, restricted and renormalised to [lo, hi].
* `ConditionalPrior`: the same prior conditioned on exceeding a relevance
  threshold, i.e. renormalised to [max(cut, lo), hi].

All values are immutable after construction and every operation is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from ._kernels import norm_cdf_scalar, norm_pdf_scalar, norm_ppf_scalar
from .errors import DegenerateConditionalError, InvalidInputError

# Conditional masses at or below this are treated as degenerate (0/0 guards).
DEGENERATE_MASS = 1e-12


def std_norm_cdf(x: float) -> float:
    """Standard normal cdf Phi(x)."""
    return norm_cdf_scalar(float(x))


def std_norm_pdf(x: float) -> float:
    """Standard normal density phi(x)."""
    return norm_pdf_scalar(float(x))


def std_norm_quantile(p: float) -> float:
    """Inverse standard normal cdf; domain error outside (0, 1)."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise InvalidInputError(f"quantile level must be in (0, 1), got {p}")
    return norm_ppf_scalar(p)


@dataclass(frozen=True)
class TruncatedNormalPrior:
    """Effect-size prior: N(mu, tau^2) truncated to [lo, hi].

    `mu` and `tau` are the parameters of the untruncated normal; the density
    is renormalised so it integrates to one over [lo, hi] and is zero outside.
    """

    mu: float
    tau: float
    lo: float
    hi: float
    # standardised bounds and truncation mass, fixed at construction
    _a: float = field(init=False, repr=False)
    _b: float = field(init=False, repr=False)
    _cdf_a: float = field(init=False, repr=False)
    _cdf_b: float = field(init=False, repr=False)
    _z: float = field(init=False, repr=False)

    def __post_init__(self):
        for name in ("mu", "tau", "lo", "hi"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v)):
                raise InvalidInputError(f"prior.{name} must be a finite number, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.tau <= 0.0:
            raise InvalidInputError(f"prior.tau must be > 0, got {self.tau}")
        if not self.lo < self.hi:
            raise InvalidInputError(f"prior bounds must satisfy lo < hi, got [{self.lo}, {self.hi}]")
        a = (self.lo - self.mu) / self.tau
        b = (self.hi - self.mu) / self.tau
        cdf_a = norm_cdf_scalar(a)
        cdf_b = norm_cdf_scalar(b)
        z = cdf_b - cdf_a
        if z <= 0.0:
            raise InvalidInputError(
                f"truncation interval [{self.lo}, {self.hi}] carries no representable "
                f"normal mass for mu={self.mu}, tau={self.tau}"
            )
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_cdf_a", cdf_a)
        object.__setattr__(self, "_cdf_b", cdf_b)
        object.__setattr__(self, "_z", z)

    def pdf(self, x: float) -> float:
        x = float(x)
        if x < self.lo or x > self.hi:
            return 0.0
        return norm_pdf_scalar((x - self.mu) / self.tau) / (self.tau * self._z)

    def cdf(self, x: float) -> float:
        x = float(x)
        if x <= self.lo:
            return 0.0
        if x >= self.hi:
            return 1.0
        return (norm_cdf_scalar((x - self.mu) / self.tau) - self._cdf_a) / self._z

    def survival(self, x: float) -> float:
        """Pr[Theta >= x], computed from the upper tail for precision."""
        x = float(x)
        if x <= self.lo:
            return 1.0
        if x >= self.hi:
            return 0.0
        u = (x - self.mu) / self.tau
        # complementary cdf difference avoids cancellation in the upper tail
        sf_u = 0.5 * math.erfc(u / math.sqrt(2.0))
        sf_b = 0.5 * math.erfc(self._b / math.sqrt(2.0))
        return (sf_u - sf_b) / self._z

    def quantile(self, p: float) -> float:
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise InvalidInputError(f"prior quantile level must be in [0, 1], got {p}")
        if p == 0.0:
            return self.lo
        if p == 1.0:
            return self.hi
        x = self.mu + self.tau * norm_ppf_scalar(self._cdf_a + p * self._z)
        return min(max(x, self.lo), self.hi)

    def pdf_vec(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        out = _kernels.norm_pdf((x - self.mu) / self.tau) / (self.tau * self._z)
        return np.where((x >= self.lo) & (x <= self.hi), out, 0.0)

    def quantile_vec(self, u) -> np.ndarray:
        """Vectorised inversion; u in (0, 1)."""
        th = _kernels.tn_quantile(u, self.mu, self.tau, self._cdf_a, self._z)
        return np.clip(th, self.lo, self.hi)

    def mean(self) -> float:
        """Exact truncated-normal mean (used as an oracle for sampling tests)."""
        return self.mu + self.tau * (
            norm_pdf_scalar(self._a) - norm_pdf_scalar(self._b)
        ) / self._z


def prior_cdf(prior: TruncatedNormalPrior, x: float) -> float:
    """Pr[Theta <= x]; clamps to 0 below lo and 1 above hi."""
    return prior.cdf(x)


def prior_mass_relevant(prior: TruncatedNormalPrior, mcid: float) -> float:
    """A-priori probability of a relevant effect, Pr[Theta >= mcid]."""
    return prior.survival(mcid)


def prior_sample(prior: TruncatedNormalPrior, u: float) -> float:
    """u-quantile of the prior; streaming u ~ U(0,1) yields prior draws."""
    u = float(u)
    if not 0.0 < u < 1.0:
        raise InvalidInputError(f"uniform input must be in (0, 1), got {u}")
    return prior.quantile(u)


@dataclass(frozen=True)
class ConditionalPrior:
    """`base` conditioned on Theta >= cut, renormalised to [max(cut, lo), hi].

    Construction fails when the conditional is degenerate: cut at or above
    the upper truncation bound, or a conditioning mass at the 0/0 guard.
    """

    base: TruncatedNormalPrior
    cut: float
    lower: float = field(init=False)
    mass: float = field(init=False)

    def __post_init__(self):
        cut = float(self.cut)
        if not math.isfinite(cut):
            raise InvalidInputError(f"conditioning threshold must be finite, got {cut!r}")
        object.__setattr__(self, "cut", cut)
        if cut >= self.base.hi:
            raise DegenerateConditionalError(
                f"conditioning threshold {cut} is not below the upper truncation bound {self.base.hi}"
            )
        lower = max(cut, self.base.lo)
        mass = self.base.survival(cut)
        if mass <= DEGENERATE_MASS:
            raise DegenerateConditionalError(
                f"conditional mass Pr[Theta >= {cut}] = {mass:.3e} is numerically zero"
            )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "mass", mass)

    def pdf(self, x: float) -> float:
        x = float(x)
        if x < self.lower or x > self.base.hi:
            return 0.0
        return self.base.pdf(x) / self.mass

    def cdf(self, x: float) -> float:
        x = float(x)
        if x <= self.lower:
            return 0.0
        if x >= self.base.hi:
            return 1.0
        return (self.base.cdf(x) - self.base.cdf(self.lower)) / self.mass

    def quantile(self, p: float) -> float:
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise InvalidInputError(f"conditional quantile level must be in [0, 1], got {p}")
        if p == 0.0:
            return self.lower
        if p == 1.0:
            return self.base.hi
        base = self.base
        cdf_lower = base._cdf_a + base.cdf(self.lower) * base._z
        span = base._cdf_b - cdf_lower
        x = base.mu + base.tau * norm_ppf_scalar(cdf_lower + p * span)
        return min(max(x, self.lower), base.hi)

    def quantile_vec(self, u) -> np.ndarray:
        base = self.base
        cdf_lower = base._cdf_a + base.cdf(self.lower) * base._z
        span = base._cdf_b - cdf_lower
        th = _kernels.tn_quantile(u, base.mu, base.tau, cdf_lower, span)
        return np.clip(th, self.lower, base.hi)


def conditional_quantile(cond: ConditionalPrior, p: float) -> float:
    """(p)-quantile of Theta given Theta >= cut; p=0 gives max(cut, lo), p=1 gives hi."""
    return cond.quantile(p)
