"""Finite probability distributions with strictly positive entries.

A :class:`Distribution` is immutable.  Structural operations (split, merge,
independent product) return new instances and never touch their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import IndexOutOfRange, NonPositiveEntry, NotNormalized, OutOfRange, TooFewEvents

SUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Distribution:
    """Validated probability vector ``p = (p_1, ..., p_n)``.

    Use :func:`make_distribution` (or the other constructors) rather than
    calling this directly with unchecked data.
    """

    probs: np.ndarray

    def __post_init__(self) -> None:
        p = np.array(self.probs, dtype=float).ravel()
        _check(p)
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    @property
    def n(self) -> int:
        return int(self.probs.size)

    @property
    def p_min(self) -> float:
        return float(self.probs.min())

    @property
    def p_max(self) -> float:
        return float(self.probs.max())

    def is_uniform(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.abs(self.probs - 1.0 / self.n) <= tol))

    def tolist(self) -> list[float]:
        return self.probs.tolist()

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.probs.tolist())

    def __getitem__(self, i):
        return float(self.probs[i])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Distribution):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.probs, other.probs))

    def __hash__(self) -> int:
        return hash(self.probs.tobytes())

    def __repr__(self) -> str:
        return f"Distribution({self.tolist()!r})"


def _check(p: np.ndarray) -> None:
    if p.size < 2:
        raise TooFewEvents(f"need at least 2 events, got {p.size}")
    if not np.all(np.isfinite(p)):
        raise NonPositiveEntry("entries must be finite")
    if np.any(p <= 0):
        bad = float(p[p <= 0][0])
        raise NonPositiveEntry(f"entry {bad!r} is not strictly positive")
    total = float(np.sum(p))
    if abs(total - 1.0) > SUM_TOL:
        raise NotNormalized(f"entries sum to {total!r}, expected 1 within {SUM_TOL}")


def make_distribution(values: Iterable[float], normalize: bool = False) -> Distribution:
    """Build a :class:`Distribution` from raw values.

    With ``normalize`` the entries are divided by their sum first; positivity
    and the event count are still enforced.
    """
    p = np.array(list(values), dtype=float)
    if p.size < 2:
        raise TooFewEvents(f"need at least 2 events, got {p.size}")
    if np.any(~np.isfinite(p)) or np.any(p <= 0):
        bad = float(p[~(np.isfinite(p) & (p > 0))][0])
        raise NonPositiveEntry(f"entry {bad!r} is not strictly positive")
    if normalize:
        p = p / p.sum()
    return Distribution(p)


def uniform(n: int) -> Distribution:
    if n < 2:
        raise TooFewEvents(f"need at least 2 events, got {n}")
    return Distribution(np.full(n, 1.0 / n))


def bernoulli(p: float) -> Distribution:
    """Two-event distribution ``(p, 1 - p)``."""
    if not 0.0 < p < 1.0:
        raise OutOfRange(f"Bernoulli parameter must lie in (0, 1), got {p!r}")
    return Distribution(np.array([p, 1.0 - p]))


def _index(d: Distribution, i: int) -> int:
    if not isinstance(i, (int, np.integer)) or not 0 <= i < d.n:
        raise IndexOutOfRange(f"index {i!r} out of range for {d.n} events")
    return int(i)


def split_event(d: Distribution, i: int, fraction: float) -> Distribution:
    """Replace event ``i`` by two children of mass ``fraction*p_i`` and ``(1-fraction)*p_i``.

    The children sit at positions ``i`` and ``i + 1``.
    """
    i = _index(d, i)
    if not 0.0 < fraction < 1.0:
        raise OutOfRange(f"fraction must lie in (0, 1), got {fraction!r}")
    pi = d.probs[i]
    a = fraction * pi
    children = [a, pi - a]
    return Distribution(np.concatenate([d.probs[:i], children, d.probs[i + 1:]]))


def merge_events(d: Distribution, i: int, j: int) -> Distribution:
    """Merge events ``i`` and ``j``; the merged mass lands at ``min(i, j)``."""
    i, j = _index(d, i), _index(d, j)
    if i == j:
        raise IndexOutOfRange("cannot merge an event with itself")
    if d.n <= 2:
        raise TooFewEvents("merging would leave fewer than 2 events")
    lo, hi = sorted((i, j))
    p = d.probs.copy()
    p[lo] = p[lo] + p[hi]
    return Distribution(np.delete(p, hi))


def product(d: Distribution, q: Distribution) -> Distribution:
    """Joint distribution of two independent sources, row-major in ``(i, j)``."""
    return Distribution(np.outer(d.probs, q.probs).ravel())


def mixture(d: Distribution, q: Distribution, weight: float) -> Distribution:
    """Convex combination ``weight*d + (1-weight)*q`` of two same-length distributions."""
    if d.n != q.n:
        raise OutOfRange(f"length mismatch: {d.n} vs {q.n}")
    if not 0.0 <= weight <= 1.0:
        raise OutOfRange(f"weight must lie in [0, 1], got {weight!r}")
    return Distribution(weight * d.probs + (1.0 - weight) * q.probs)


def parse_distribution(text: str, normalize: bool = False) -> Distribution:
    """Parse ``"0.1,0.9"`` into a distribution."""
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise NonPositiveEntry(f"cannot parse distribution {text!r}: {exc}") from None
    return make_distribution(values, normalize=normalize)

