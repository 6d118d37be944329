"""Choosing the importance coefficient.

Closed-form lower thresholds on ``w`` beyond which a distribution's MIM is at
least that of the uniform distribution of the same size, the small-``w``
regime where the uniform distribution wins instead, and a numerical search
for the exact crossover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import brentq
from scipy.special import logsumexp

from .distributions import Distribution
from .errors import DegenerateDistribution, NoCrossing, OutOfRange
from .measures import _omega, mim

# p_min within this distance of 1/n counts as uniform; the threshold diverges there
DEGENERATE_GAP = 1e-12
GRID_STEP = 0.01
BISECT_TOL = 1e-6


class Rule(str, Enum):
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"


@dataclass(frozen=True)
class ThresholdReport:
    """Selected lower bound on ``w`` and the probability that determined it.

    ``binary_extension`` is set for two-event distributions, where the
    threshold formulas are applied although the guarantee was stated for
    ``n > 2``.
    """

    threshold: float
    witness_prob: float
    rule: Rule
    n: int
    binary_extension: bool = False

    def as_dict(self) -> dict:
        return {
            "threshold": self.threshold,
            "witness_prob": self.witness_prob,
            "rule": self.rule.value,
            "n": self.n,
            "binary_extension": self.binary_extension,
        }


def theorem2_threshold(p_s: float, n: int) -> float:
    """``-log(p_s) / (1/n - p_s)`` for a single probability ``p_s < 1/n``."""
    if n < 2:
        raise OutOfRange(f"n must be >= 2, got {n!r}")
    gap = 1.0 / n - p_s
    if not p_s > 0 or gap <= DEGENERATE_GAP:
        raise OutOfRange(f"p_s must lie in (0, 1/n) = (0, {1.0 / n!r}), got {p_s!r}")
    return -math.log(p_s) / gap


def theorem1_threshold(d: Distribution) -> ThresholdReport:
    pm = d.p_min
    if 1.0 / d.n - pm <= DEGENERATE_GAP:
        raise DegenerateDistribution("p_min equals 1/n: no finite threshold exists")
    return ThresholdReport(theorem2_threshold(pm, d.n), pm, Rule.THEOREM1, d.n, d.n == 2)


def theorem3_threshold(d: Distribution) -> ThresholdReport:
    """Smallest per-event threshold over all events rarer than ``1/n``."""
    cut = 1.0 / d.n - DEGENERATE_GAP
    candidates = [float(p) for p in d.probs if p < cut]
    if not candidates:
        raise DegenerateDistribution("no event has probability below 1/n")
    values = [theorem2_threshold(p, d.n) for p in candidates]
    k = int(np.argmin(values))
    return ThresholdReport(values[k], candidates[k], Rule.THEOREM3, d.n, d.n == 2)


def max_value_condition(d: Distribution, w) -> bool:
    """True iff ``w * max p_i < 2``, the regime where the uniform MIM dominates."""
    return _omega(w) * d.p_max < 2.0


def mim_gap(d: Distribution, w: float) -> float:
    """``mim(d, w) - mim(uniform(n), w)``."""
    return mim(d, w) - w * (1.0 - 1.0 / d.n)


def crossing_coefficient(d: Distribution, search_max: float = 100.0) -> float:
    """Smallest ``w`` in ``(0, search_max]`` where ``d`` and the uniform distribution tie.

    Scans a grid of step 0.01 for the first sign change from non-positive to
    positive gap, then bisects to 1e-6.  The gap is zero at ``w = 0`` and
    negative just after it, so the origin itself is not a crossing.
    """
    if search_max <= 0:
        raise OutOfRange(f"search_max must be positive, got {search_max!r}")
    if 1.0 / d.n - d.p_min <= DEGENERATE_GAP:
        raise DegenerateDistribution("uniform distribution has no crossing")
    grid = np.arange(1, int(math.floor(search_max / GRID_STEP + 1e-9)) + 1) * GRID_STEP
    if grid.size == 0 or grid[-1] < search_max:
        grid = np.append(grid, search_max)
    logp = np.log(d.probs)
    gaps = grid * (1.0 / d.n) + logsumexp(logp[None, :] - grid[:, None] * d.probs[None, :], axis=1)
    pos = np.nonzero(gaps > 0)[0]
    if pos.size == 0:
        raise NoCrossing(f"MIM of d never exceeds the uniform MIM on (0, {search_max}]")
    k = int(pos[0])
    if k == 0:
        # gap already positive at the first grid point; bracket from just above 0
        lo = GRID_STEP * 1e-3
        if mim_gap(d, lo) > 0:
            raise NoCrossing("gap positive arbitrarily close to 0")
    else:
        lo = float(grid[k - 1])
    hi = float(grid[k])
    return float(brentq(lambda w: mim_gap(d, w), lo, hi, xtol=BISECT_TOL * 1e-3))
