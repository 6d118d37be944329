"""Scalar information measures on finite distributions.

All logarithms are natural.  The message importance measure (MIM)

    L(p, w) = log sum_i p_i exp(w (1 - p_i))

is evaluated as ``w + logsumexp(log p_i - w p_i)`` so it stays finite for any
finite importance coefficient ``w``; the naive sum overflows near ``w ~ 710``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import logsumexp

from .distributions import Distribution
from .errors import OutOfRange


class Provenance(str, Enum):
    USER = "user"
    THEOREM1 = "theorem1"
    THEOREM3 = "theorem3"
    CROSSING = "crossing"
    BALANCING = "balancing"


@dataclass(frozen=True)
class ImportanceCoefficient:
    """Non-negative importance coefficient together with where it came from."""

    value: float
    provenance: Provenance = Provenance.USER

    def __post_init__(self) -> None:
        v = float(self.value)
        if not math.isfinite(v) or v < 0:
            raise OutOfRange(f"importance coefficient must be finite and >= 0, got {self.value!r}")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "provenance", Provenance(self.provenance))

    def __float__(self) -> float:
        return self.value


def _omega(w) -> float:
    if isinstance(w, ImportanceCoefficient):
        return w.value
    return ImportanceCoefficient(w).value


def mim(d: Distribution, w) -> float:
    """Message importance measure of ``d`` at importance coefficient ``w``."""
    w = _omega(w)
    if w == 0.0:
        return 0.0
    p = d.probs
    val = w + float(logsumexp(np.log(p) - w * p))
    # rounding can leave -1e-17 where the exact value is 0
    return max(val, 0.0)


def shannon(d: Distribution) -> float:
    p = d.probs
    return float(-np.sum(p * np.log(p)))


def renyi(d: Distribution, alpha: float) -> float:
    """Renyi entropy of order ``alpha`` (``alpha > 0``, ``alpha != 1``)."""
    alpha = float(alpha)
    if not alpha > 0 or not math.isfinite(alpha):
        raise OutOfRange(f"Renyi order must be positive, got {alpha!r}")
    if abs(alpha - 1.0) < 1e-9:
        raise OutOfRange("Renyi order 1 is the Shannon limit; call shannon() instead")
    return float(logsumexp(alpha * np.log(d.probs))) / (1.0 - alpha)


def mim_lower_bound(d: Distribution, w) -> float:
    """``w (1 - sum p_i^2)``; never exceeds :func:`mim`, equal on the uniform distribution."""
    w = _omega(w)
    return w * (1.0 - float(np.dot(d.probs, d.probs)))


def mim_asymptote(d: Distribution, w) -> float:
    """Large-``w`` approximation ``w (1 - p_min) + log p_min`` dominated by the rarest event."""
    w = _omega(w)
    pm = d.p_min
    return w * (1.0 - pm) + math.log(pm)


def binary_mim_approx(p: float, w) -> float:
    """Approximate MIM of ``(p, 1 - p)`` for small ``p``: ``log(1 + p e^{w(1-2p)}) + w p``.

    Drops the ``1 - p`` factor inside the logarithm, so the absolute error
    against the exact value is at most ``|log(1 - p)|``.
    """
    w = _omega(w)
    if not 0.0 < p < 0.5:
        raise OutOfRange(f"p must lie in (0, 0.5), got {p!r}")
    # log(1 + e^t) with t = log p + w(1-2p), stable for large t
    t = math.log(p) + w * (1.0 - 2.0 * p)
    return float(np.logaddexp(0.0, t)) + w * p


def importance_weight(x: float, w) -> float:
    """Kernel ``x e^{w(1-x)}``; for ``w > 1`` it peaks at ``x = 1/w``."""
    w = _omega(w)
    if not 0.0 < x < 1.0:
        raise OutOfRange(f"x must lie in (0, 1), got {x!r}")
    return x * math.exp(w * (1.0 - x))
