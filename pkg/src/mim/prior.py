"""Two-step estimate of a minority prior known only to lie in an interval.

Step one picks the importance coefficient at which the two interval endpoints
carry (approximately) equal binary MIM; step two reads the prior estimate off
as the peak ``1/w`` of the importance kernel.  The result is the logarithmic
mean of the endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .distributions import bernoulli
from .errors import DegenerateInterval, OutOfRange
from .measures import ImportanceCoefficient, Provenance, _omega, mim


@dataclass(frozen=True)
class PriorBounds:
    """Interval ``lower <= P(H0) <= upper`` for the minority hypothesis, with ``upper < 0.5``."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        lo, hi = float(self.lower), float(self.upper)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise OutOfRange("prior bounds must be finite")
        if not 0.0 < lo <= hi < 0.5:
            raise OutOfRange(f"need 0 < lower <= upper < 0.5, got ({lo!r}, {hi!r})")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def degenerate(self) -> bool:
        return self.lower == self.upper


def _log_ratio_slope(a: float, b: float) -> float:
    # (log b - log a) / (b - a), with log1p keeping precision for b close to a
    return math.log1p((b - a) / a) / (b - a)


def select_omega(b: PriorBounds) -> ImportanceCoefficient:
    """Importance coefficient balancing the two endpoints: ``(log u - log l) / (u - l)``."""
    if b.degenerate:
        raise DegenerateInterval("lower == upper; use estimate_prior for the point limit")
    return ImportanceCoefficient(_log_ratio_slope(b.lower, b.upper), Provenance.BALANCING)


def estimate_prior(b: PriorBounds) -> float:
    """Logarithmic mean of the bounds; returns the common value for a point interval."""
    if b.degenerate:
        return b.upper
    return 1.0 / _log_ratio_slope(b.lower, b.upper)


def balanced_importance_residual(b: PriorBounds, w) -> float:
    """``mim(bernoulli(lower), w) - mim(bernoulli(upper), w)`` without the small-p approximation."""
    w = _omega(w)
    if b.degenerate:
        return 0.0
    return mim(bernoulli(b.lower), w) - mim(bernoulli(b.upper), w)
