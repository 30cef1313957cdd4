"""Grid-based monotonicity analysis and ageing-class verdicts.

A verdict is grid-relative: NonMonotone comes with an explicit witness
triple and is therefore a certificate, while Increasing/Decreasing/
Constant are evidence on the scanned grid, not proofs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .ageing import Convention, hazard_ai, profile
from .quadrature import DEFAULT_CONFIG, QuadConfig

__all__ = [
    "Grid",
    "Kind",
    "MonotonicityVerdict",
    "scan_monotonicity",
    "classify_mrl",
    "classify_mrla",
    "classify_mrlai",
    "classify_hazard_ai",
]

DEFAULT_TOL = 1e-7


class Kind(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"
    NON_MONOTONE = "non_monotone"


@dataclass(frozen=True)
class Grid:
    """Evaluation grid on (t_min, t_max], linear or logarithmic spacing."""

    t_min: float
    t_max: float
    n_points: int = 512
    spacing: str = "linear"

    def __post_init__(self):
        if not (self.t_min < self.t_max):
            raise ValueError("t_min must be below t_max")
        if self.n_points < 16:
            raise ValueError("n_points must be at least 16")
        if self.spacing not in ("linear", "log"):
            raise ValueError("spacing must be 'linear' or 'log'")
        if self.spacing == "log" and self.t_min <= 0:
            raise ValueError("log spacing needs t_min > 0")

    def points(self):
        n = self.n_points
        if self.spacing == "log":
            la, lb = math.log(self.t_min), math.log(self.t_max)
            return [math.exp(la + (lb - la) * i / (n - 1)) for i in range(n)]
        return [self.t_min + (self.t_max - self.t_min) * i / (n - 1) for i in range(n)]


@dataclass(frozen=True)
class MonotonicityVerdict:
    """Outcome of a scan.  For NON_MONOTONE, ``witness`` is a triple of
    (t, value) pairs forming a peak or a valley; ``margin`` is the smaller
    of its two jumps.  For CONSTANT, ``level`` is the common value."""

    kind: Kind
    level: float | None = None
    witness: tuple | None = None
    margin: float = 0.0

    def __str__(self):
        if self.kind is Kind.CONSTANT:
            return f"constant({self.level:.9g})"
        if self.kind is Kind.NON_MONOTONE and self.witness:
            pts = ", ".join(f"({t:.6g}, {v:.9g})" for t, v in self.witness)
            return f"non_monotone[{pts}]"
        return self.kind.value


def scan_monotonicity(ts, values, tol: float = DEFAULT_TOL) -> MonotonicityVerdict:
    """Classify a sampled function as constant, monotone, or non-monotone.

    The comparison threshold is tol times the median absolute sample,
    because L is dimensionless near 1 while mu carries time units.
    Witness search returns the largest-margin violating triple, which
    keeps regression tests deterministic.
    """
    ts = list(ts)
    vals = [float(v) for v in values]
    if len(vals) != len(ts):
        raise ValueError("ts and values must have equal length")
    if len(vals) < 2:
        raise ValueError("need at least two samples")
    if any(not math.isfinite(v) for v in vals):
        raise ValueError("values must be finite")

    scale = _median(sorted(abs(v) for v in vals)) or max(abs(v) for v in vals) or 1.0
    eps = tol * scale

    diffs = [b - a for a, b in zip(vals, vals[1:])]
    total_variation = sum(abs(dv) for dv in diffs)
    if total_variation < eps:
        return MonotonicityVerdict(Kind.CONSTANT, level=_median(sorted(vals)))

    inc_ok = all(dv >= -eps for dv in diffs)
    dec_ok = all(dv <= eps for dv in diffs)
    if inc_ok and dec_ok:
        # every step is inside the noise band but the drift is real
        kind = Kind.INCREASING if vals[-1] >= vals[0] else Kind.DECREASING
        return MonotonicityVerdict(kind)
    if inc_ok:
        return MonotonicityVerdict(Kind.INCREASING)
    if dec_ok:
        return MonotonicityVerdict(Kind.DECREASING)

    witness, margin = _best_witness(ts, vals)
    return MonotonicityVerdict(Kind.NON_MONOTONE, witness=witness, margin=margin)


def _median(sorted_vals):
    n = len(sorted_vals)
    mid = n // 2
    if n % 2:
        return sorted_vals[mid]
    return 0.5 * (sorted_vals[mid - 1] + sorted_vals[mid])


def _best_witness(ts, vals):
    """Largest-margin triple i < j < k with a peak or a valley at j.

    The margin of a triple is the smaller of its two jumps; prefix/suffix
    extrema give the global optimum in one pass.
    """
    n = len(vals)
    pre_max, pre_min = [0] * n, [0] * n
    for j in range(1, n):
        pre_max[j] = j - 1 if vals[j - 1] > vals[pre_max[j - 1]] else pre_max[j - 1]
        pre_min[j] = j - 1 if vals[j - 1] < vals[pre_min[j - 1]] else pre_min[j - 1]
    pre_max[0] = pre_min[0] = 0
    suf_max, suf_min = [n - 1] * n, [n - 1] * n
    for j in range(n - 2, -1, -1):
        suf_max[j] = j + 1 if vals[j + 1] > vals[suf_max[j + 1]] else suf_max[j + 1]
        suf_min[j] = j + 1 if vals[j + 1] < vals[suf_min[j + 1]] else suf_min[j + 1]

    best = None
    best_margin = -math.inf
    for j in range(1, n - 1):
        i, k = pre_max[j], suf_max[j]
        valley = min(vals[i] - vals[j], vals[k] - vals[j])
        if valley > best_margin:
            best_margin, best = valley, (i, j, k)
        i, k = pre_min[j], suf_min[j]
        peak = min(vals[j] - vals[i], vals[j] - vals[k])
        if peak > best_margin:
            best_margin, best = peak, (i, j, k)
    i, j, k = best
    witness = ((ts[i], vals[i]), (ts[j], vals[j]), (ts[k], vals[k]))
    return witness, best_margin


def classify_mrl(
    d,
    grid: Grid,
    tol: float = DEFAULT_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> MonotonicityVerdict:
    """Verdict on the mean residual life itself."""
    prof = profile(d, grid.points(), Convention.ZERO, cfg, method)
    return scan_monotonicity(prof.grid, prof.mu, tol)


def classify_mrla(
    d,
    grid: Grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> MonotonicityVerdict:
    """Verdict on the running average (1/t) int mu."""
    prof = profile(d, grid.points(), conv, cfg, method)
    return scan_monotonicity(prof.grid, prof.mu_avg, tol)


def classify_mrlai(
    d,
    grid: Grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> MonotonicityVerdict:
    """Verdict on the ageing intensity L."""
    prof = profile(d, grid.points(), conv, cfg, method)
    return scan_monotonicity(prof.grid, prof.L, tol)


def classify_hazard_ai(
    d, grid: Grid, tol: float = DEFAULT_TOL
) -> MonotonicityVerdict:
    """Verdict on the hazard-based ageing intensity (needs a density)."""
    ts = grid.points()
    return scan_monotonicity(ts, [hazard_ai(d, t) for t in ts], tol)
