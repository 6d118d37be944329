"""Tabular sweeps behind the figure-reproduction commands, plus CSV/JSON emission."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bayes import GaussianHypothesis, bayes_error_oracle_binary, plugin_decision_error
from .distributions import Distribution, bernoulli, uniform
from .errors import OutOfRange
from .measures import mim, mim_asymptote, mim_lower_bound
from .prior import PriorBounds, estimate_prior

PAPER_FIVE_POINT = (0.0925, 0.3156, 0.3887, 0.1484, 0.0549)


@dataclass
class SweepTable:
    columns: list[str]
    rows: list[tuple[float, ...]] = field(default_factory=list)
    meta: dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(f"row {row!r} does not match columns {self.columns!r}")
        xs = [r[0] for r in self.rows]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("abscissa must be strictly increasing")

    def column(self, name: str) -> np.ndarray:
        k = self.columns.index(name)
        return np.array([r[k] for r in self.rows])

    def to_csv(self) -> str:
        buf = io.StringIO()
        for key, value in self.meta.items():
            buf.write(f"# {key}={value}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(["%.17g" % v for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"columns": self.columns, "rows": [list(r) for r in self.rows],
                           "meta": self.meta}, indent=2) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "SweepTable":
        meta: dict[str, object] = {}
        body = []
        for line in text.splitlines():
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = value
            elif line:
                body.append(line)
        reader = csv.reader(body)
        columns = next(reader)
        rows = [tuple(float(v) for v in r) for r in reader]
        return cls(columns, rows, meta)


def parse_range(text: str) -> np.ndarray:
    """``"a:b:step"`` to the grid ``a, a+step, ...`` up to and including ``b``."""
    try:
        a, b, step = (float(t) for t in text.split(":"))
    except ValueError:
        raise OutOfRange(f"range must look like start:stop:step, got {text!r}") from None
    return make_grid(a, b, step)


def make_grid(a: float, b: float, step: float) -> np.ndarray:
    if not (np.isfinite(a) and np.isfinite(b) and np.isfinite(step)):
        raise OutOfRange("range bounds must be finite")
    if not a < b:
        raise OutOfRange(f"need start < stop, got {a!r}:{b!r}")
    if not step > 0:
        raise OutOfRange(f"step must be positive, got {step!r}")
    count = int(np.floor((b - a) / step + 1e-9))
    return a + step * np.arange(count + 1)


def sweep_omega(d: Distribution, omegas: Sequence[float]) -> SweepTable:
    omegas = np.asarray(omegas, dtype=float)
    if omegas.size and omegas[0] < 0:
        raise OutOfRange("importance coefficients must be >= 0")
    u = uniform(d.n)
    rows = [(w, mim(d, w), mim(u, w), mim_lower_bound(d, w), mim_asymptote(d, w))
            for w in map(float, omegas)]
    return SweepTable(["omega", "mim", "mim_uniform", "lower_bound", "asymptote"], rows,
                      {"dist": ",".join(repr(p) for p in d)})


def sweep_p(omega: float, ps: Sequence[float]) -> SweepTable:
    ps = np.asarray(ps, dtype=float)
    if ps.size and not (ps[0] > 0 and ps[-1] < 1):
        raise OutOfRange("p grid must lie inside (0, 1)")
    ref = mim(uniform(2), omega)
    rows = [(p, mim(bernoulli(p), omega), ref) for p in map(float, ps)]
    return SweepTable(["p0", "mim_bernoulli", "mim_uniform_binary"], rows, {"omega": omega})


def compare_worstcase(bounds: PriorBounds, h0: GaussianHypothesis, h1: GaussianHypothesis,
                      points: int = 50, spacing: str = "geometric") -> SweepTable:
    """Excess decision error of designing for the worst-case prior versus the MIM estimate.

    For each true minority prior on a grid over the bounds, the rule is built
    with the upper bound, with the MIM estimate, and with the true prior.
    The default grid is geometric, giving each decade of an order-of-magnitude
    uncertain prior equal weight; ``spacing="linear"`` spaces it evenly.
    """
    if spacing not in ("geometric", "linear"):
        raise OutOfRange(f"spacing must be 'geometric' or 'linear', got {spacing!r}")
    if points < 2:
        raise OutOfRange(f"need at least 2 grid points, got {points}")
    if bounds.degenerate:
        raise OutOfRange("bounds must span a non-empty interval")
    p_hat = estimate_prior(bounds)
    rows = []
    space = np.geomspace if spacing == "geometric" else np.linspace
    for w in space(bounds.lower, bounds.upper, points):
        w = float(w)
        rows.append((w,
                     plugin_decision_error(w, bounds.upper, h0, h1),
                     plugin_decision_error(w, p_hat, h0, h1),
                     bayes_error_oracle_binary(w, h0, h1)))
    table = SweepTable(["omega_true", "err_worstcase", "err_mim", "err_ideal"], rows,
                       {"lower": bounds.lower, "upper": bounds.upper, "p_hat": repr(p_hat),
                        "mu0": h0.mean, "mu1": h1.mean, "sigma": h0.sigma,
                        "spacing": spacing})
    ideal = table.column("err_ideal")
    table.meta["mean_excess_worstcase"] = repr(float(np.mean(table.column("err_worstcase") - ideal)))
    table.meta["mean_excess_mim"] = repr(float(np.mean(table.column("err_mim") - ideal)))
    return table
