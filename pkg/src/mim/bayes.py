"""Decision-error machinery for detecting a minority hypothesis.

Exact Bayes errors are computed by adaptive quadrature of the pointwise
minimum of prior-weighted likelihoods, split at the points where the two
competing terms cross so each piece is smooth.  The Chernoff-style bounds
relax ``min(a, b) <= a^alpha b^(1-alpha)`` and minimise over ``alpha``.

Only Gaussian likelihoods are supported.  The closed-form exponent requires a
shared sigma; the quadrature routes accept per-class sigmas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate
from scipy.optimize import brentq
from scipy.special import logsumexp

from .errors import ModelMismatch, OutOfRange

ALPHA_EPS = 1e-9
WINDOW_SIGMAS = 10.0
SIMPSON_PANELS = 2 ** 14
ALPHA_GRID = 512
ALPHA_TOL = 1e-6
QUAD_EPSABS = 1e-11
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GaussianHypothesis:
    mean: float
    sigma: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mean) and math.isfinite(self.sigma)) or self.sigma <= 0:
            raise OutOfRange(f"need finite mean and sigma > 0, got ({self.mean!r}, {self.sigma!r})")

    def logpdf(self, x):
        z = (np.asarray(x, dtype=float) - self.mean) / self.sigma
        return -0.5 * z * z - math.log(self.sigma) - _LOG_SQRT_2PI

    def pdf(self, x):
        return np.exp(self.logpdf(x))


@dataclass(frozen=True)
class HypothesisEnsemble:
    """``M >= 2`` Gaussian hypotheses with priors; one of them is the minority class."""

    priors: tuple[float, ...]
    hypotheses: tuple[GaussianHypothesis, ...]
    minority_index: int = 0

    def __post_init__(self) -> None:
        priors = tuple(float(w) for w in self.priors)
        hyps = tuple(self.hypotheses)
        object.__setattr__(self, "priors", priors)
        object.__setattr__(self, "hypotheses", hyps)
        if len(priors) < 2 or len(priors) != len(hyps):
            raise OutOfRange(f"need M >= 2 priors matching {len(hyps)} hypotheses, got {len(priors)}")
        if any(not (w > 0 and math.isfinite(w)) for w in priors):
            raise OutOfRange("priors must be strictly positive")
        if abs(sum(priors) - 1.0) > 1e-9:
            raise OutOfRange(f"priors sum to {sum(priors)!r}, expected 1")
        if not 0 <= self.minority_index < len(priors):
            raise OutOfRange(f"minority_index {self.minority_index!r} out of range")

    @property
    def omega0(self) -> float:
        return self.priors[self.minority_index]

    @property
    def rest(self) -> list[tuple[float, GaussianHypothesis]]:
        return [(w, h) for k, (w, h) in enumerate(zip(self.priors, self.hypotheses))
                if k != self.minority_index]

    def window(self) -> tuple[float, float]:
        return _window(self.hypotheses)

    def log_minority(self, x):
        return math.log(self.omega0) + self.hypotheses[self.minority_index].logpdf(x)

    def log_rest(self, x):
        """Log of ``sum_{k != minority} w_k p_k(x)``."""
        terms = [math.log(w) + h.logpdf(x) for w, h in self.rest]
        return logsumexp(np.stack(terms), axis=0)


@dataclass(frozen=True)
class ChernoffExponent:
    """Minimising exponent ``alpha`` in ``(0, 1)``; ``clamped`` if the free minimiser fell outside."""

    alpha: float
    clamped: bool = False


def _window(hyps: Sequence[GaussianHypothesis]) -> tuple[float, float]:
    s = max(h.sigma for h in hyps)
    return (min(h.mean for h in hyps) - WINDOW_SIGMAS * s,
            max(h.mean for h in hyps) + WINDOW_SIGMAS * s)


def _check_prior(omega0: float) -> None:
    if not 0.0 < omega0 < 1.0:
        raise OutOfRange(f"omega0 must lie in (0, 1), got {omega0!r}")


def golden_section(f: Callable[[float], float], a: float, b: float,
                   tol: float = 1e-10) -> tuple[float, float]:
    """Minimise a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def separation(h0: GaussianHypothesis, h1: GaussianHypothesis) -> float:
    """``beta = (mu0 - mu1)^2 / (2 sigma^2)`` for a shared sigma."""
    if not math.isclose(h0.sigma, h1.sigma, rel_tol=1e-12, abs_tol=0.0):
        raise ModelMismatch(f"closed form needs equal sigmas, got {h0.sigma!r} and {h1.sigma!r}")
    return (h0.mean - h1.mean) ** 2 / (2.0 * h0.sigma ** 2)


def k_alpha(alpha: float, omega0: float, beta: float) -> float:
    """Gaussian Chernoff exponent ``a log w0 + (1-a) log w1 - a(1-a) beta``."""
    if not 0.0 < alpha < 1.0:
        raise OutOfRange(f"alpha must lie in (0, 1), got {alpha!r}")
    _check_prior(omega0)
    if beta < 0:
        raise OutOfRange(f"beta must be >= 0, got {beta!r}")
    return (alpha * math.log(omega0) + (1.0 - alpha) * math.log1p(-omega0)
            - alpha * (1.0 - alpha) * beta)


def optimal_alpha_gaussian(omega0: float, beta: float) -> ChernoffExponent:
    """Stationary point ``1/2 + (log w1 - log w0) / (2 beta)``, clamped into ``[eps, 1-eps]``.

    ``K`` is a convex quadratic in ``alpha``, so when the stationary point lies
    outside the interval the constrained minimum sits at the nearer end.
    """
    _check_prior(omega0)
    if not beta > 0:
        raise OutOfRange(f"beta must be > 0 for an interior minimiser, got {beta!r}")
    a = 0.5 + (math.log1p(-omega0) - math.log(omega0)) / (2.0 * beta)
    if a < ALPHA_EPS:
        return ChernoffExponent(ALPHA_EPS, True)
    if a > 1.0 - ALPHA_EPS:
        return ChernoffExponent(1.0 - ALPHA_EPS, True)
    return ChernoffExponent(a, False)


def chernoff_alpha(omega0: float, beta: float) -> ChernoffExponent:
    """Like :func:`optimal_alpha_gaussian`, but also handles ``beta == 0`` (linear ``K``)."""
    if beta > 0:
        return optimal_alpha_gaussian(omega0, beta)
    _check_prior(omega0)
    lo, hi = ALPHA_EPS, 1.0 - ALPHA_EPS
    a = lo if k_alpha(lo, omega0, 0.0) <= k_alpha(hi, omega0, 0.0) else hi
    return ChernoffExponent(a, True)


def chernoff_bound_gaussian(omega0: float, h0: GaussianHypothesis,
                            h1: GaussianHypothesis) -> float:
    """Minimised Chernoff upper bound ``exp(K(alpha))`` on the binary Bayes error."""
    _check_prior(omega0)
    beta = separation(h0, h1)
    a = chernoff_alpha(omega0, beta)
    return math.exp(k_alpha(a.alpha, omega0, beta))


def _quadratic_crossings(la: float, ha: GaussianHypothesis,
                         lb: float, hb: GaussianHypothesis) -> list[float]:
    """Real roots of ``la + log pa(x) = lb + log pb(x)`` (``la``, ``lb`` are log weights)."""
    va, vb = ha.sigma ** 2, hb.sigma ** 2
    qa = 0.5 / vb - 0.5 / va
    qb = ha.mean / va - hb.mean / vb
    qc = (la - math.log(ha.sigma) - lb + math.log(hb.sigma)
          - ha.mean ** 2 / (2 * va) + hb.mean ** 2 / (2 * vb))
    scale = max(abs(qb), abs(qc), 1e-300)
    if abs(qa) <= 1e-14 * scale:
        return [] if qb == 0 else [-qc / qb]
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return []
    r = math.sqrt(disc)
    # numerically stable pair of roots
    q = -0.5 * (qb + math.copysign(r, qb)) if qb != 0 else -0.5 * r
    roots = {q / qa}
    if q != 0:
        roots.add(qc / q)
    return sorted(roots)


def _piecewise_quad(f: Callable[[float], float], lo: float, hi: float,
                    breaks: Sequence[float]) -> float:
    edges = [lo] + sorted(b for b in breaks if lo < b < hi) + [hi]
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = integrate.quad(f, a, b, epsabs=QUAD_EPSABS, epsrel=1e-10, limit=200)
        total += val
    return total


def bayes_error_oracle_binary(omega0: float, h0: GaussianHypothesis,
                              h1: GaussianHypothesis) -> float:
    """Bayes error ``int min(w0 p0, w1 p1) dx`` by quadrature."""
    _check_prior(omega0)
    l0, l1 = math.log(omega0), math.log1p(-omega0)
    lo, hi = _window((h0, h1))
    breaks = _quadratic_crossings(l0, h0, l1, h1)

    def f(x: float) -> float:
        return math.exp(min(l0 + float(h0.logpdf(x)), l1 + float(h1.logpdf(x))))

    return _piecewise_quad(f, lo, hi, breaks)


def plugin_decision_error(omega_true: float, omega_design: float,
                          h0: GaussianHypothesis, h1: GaussianHypothesis) -> float:
    """Error rate under prior ``omega_true`` of the likelihood-ratio rule built for ``omega_design``.

    Equals :func:`bayes_error_oracle_binary` when the two priors coincide.
    """
    _check_prior(omega_true)
    _check_prior(omega_design)
    l0, l1 = math.log(omega_true), math.log1p(-omega_true)
    d0, d1 = math.log(omega_design), math.log1p(-omega_design)
    lo, hi = _window((h0, h1))
    breaks = _quadratic_crossings(d0, h0, d1, h1)

    def f(x: float) -> float:
        g0, g1 = float(h0.logpdf(x)), float(h1.logpdf(x))
        # decide H0 where the designed rule favours it; pay the other class's mass
        if d0 + g0 > d1 + g1:
            return math.exp(l1 + g1)
        return math.exp(l0 + g0)

    return _piecewise_quad(f, lo, hi, breaks)


def _sign_change_roots(g: Callable, lo: float, hi: float, points: int = 4097) -> list[float]:
    xs = np.linspace(lo, hi, points)
    vals = np.asarray(g(xs), dtype=float)
    roots = []
    for k in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        roots.append(brentq(lambda x: float(g(np.array([x]))[0]), xs[k], xs[k + 1], xtol=1e-14))
    roots.extend(float(xs[k]) for k in np.nonzero(vals == 0)[0])
    return roots


def mary_error_oracle(e: HypothesisEnsemble) -> float:
    """Error of the Bayes rule separating the minority class from the rest."""
    lo, hi = e.window()
    breaks = _sign_change_roots(lambda x: e.log_minority(x) - e.log_rest(x), lo, hi)

    def f(x: float) -> float:
        xa = np.array([x])
        return math.exp(min(float(e.log_minority(xa)[0]), float(e.log_rest(xa)[0])))

    return _piecewise_quad(f, lo, hi, breaks)


def _simpson_log_weights(lo: float, hi: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    xs = np.linspace(lo, hi, panels + 1)
    w = np.full(panels + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    w *= (hi - lo) / (3.0 * panels)
    return xs, np.log(w)


def mary_error_bound(e: HypothesisEnsemble) -> float:
    """Chernoff bound of the minority class against the normalised mixture of the rest.

    ``min_a w0^a (1-w0)^(1-a) int p0^a (sum_k w_k/(1-w0) p_k)^(1-a) dx``, with the
    integral on a fixed composite Simpson grid, ``a`` scanned on 512 points of
    ``[eps, 1-eps]`` and the best point refined by golden section.
    """
    w0 = e.omega0
    lw0, lw1 = math.log(w0), math.log1p(-w0)
    lo, hi = e.window()
    xs, logw = _simpson_log_weights(lo, hi, SIMPSON_PANELS)
    lp0 = e.hypotheses[e.minority_index].logpdf(xs)
    lmix = e.log_rest(xs) - lw1

    def log_bound(a: float) -> float:
        return a * lw0 + (1.0 - a) * lw1 + float(logsumexp(logw + a * lp0 + (1.0 - a) * lmix))

    grid = np.linspace(ALPHA_EPS, 1.0 - ALPHA_EPS, ALPHA_GRID)
    vals = np.array([log_bound(float(a)) for a in grid])
    k = int(np.argmin(vals))
    best = float(vals[k])
    a_lo, a_hi = float(grid[max(k - 1, 0)]), float(grid[min(k + 1, grid.size - 1)])
    _, refined = golden_section(log_bound, a_lo, a_hi, tol=ALPHA_TOL)
    return math.exp(min(best, refined))
