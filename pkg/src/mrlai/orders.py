"""Pairwise stochastic-order checks.

The central one is the MRLAI order: X is below Y when L_X(t) <= L_Y(t)
for all t > 0.  An equivalent test scans the ratio of the running MRL
integrals G_X/G_Y for monotone decrease.  The likelihood-ratio,
increasing-convex, variance-residual-life and mean-residual-life orders
are provided as comparison baselines, plus the proven sufficiency
shortcuts (monotone MRL, monotone MRL average, linear-MRL determinant)
and the scale-transform preservation check.

A Holds verdict is grid evidence, not a proof; the verdict records the
grid and which rule decided it so a consumer can demand refinement.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .ageing import Convention, mrl, profile
from .classify import Grid, Kind, classify_mrl, classify_mrla, scan_monotonicity
from .distributions import Dist, Pareto
from .errors import UnsupportedCapability
from .quadrature import DEFAULT_CONFIG, QuadConfig, integrate_tail

__all__ = [
    "Relation",
    "Witness",
    "OrderVerdict",
    "mrlai_order",
    "ratio_test",
    "lr_order",
    "icx_order",
    "vrl_order",
    "mrl_order",
    "linear_mrl_order",
    "sufficient_conditions",
    "weibull_rule",
    "check_scale_preservation",
    "ScaleReport",
]

DEFAULT_ORDER_TOL = 1e-9


class Relation(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    """Location of the largest violation: lhs > rhs at t by ``margin``."""

    t: float
    lhs: float
    rhs: float

    @property
    def margin(self) -> float:
        return self.lhs - self.rhs


@dataclass(frozen=True)
class OrderVerdict:
    relation: Relation
    decided_by: str
    witness: Witness | None = None
    grid: tuple = ()
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.relation is Relation.HOLDS

    def __str__(self):
        s = f"{self.relation.value} (by {self.decided_by})"
        if self.witness is not None:
            w = self.witness
            s += f" witness t={w.t:.6g}: {w.lhs:.9g} vs {w.rhs:.9g}"
        return s


def _pointwise_leq(ts, lhs, rhs, tol, decided_by) -> OrderVerdict:
    if len(ts) < 2:
        return OrderVerdict(Relation.INCONCLUSIVE, decided_by, grid=tuple(ts))
    worst = max(range(len(ts)), key=lambda i: lhs[i] - rhs[i])
    if lhs[worst] - rhs[worst] <= tol:
        return OrderVerdict(Relation.HOLDS, decided_by, grid=tuple(ts))
    return OrderVerdict(
        Relation.FAILS,
        decided_by,
        witness=Witness(ts[worst], lhs[worst], rhs[worst]),
        grid=tuple(ts),
    )


def _ratio_nonincreasing(ts, ratios, tol, decided_by) -> OrderVerdict:
    if len(ts) < 2:
        return OrderVerdict(Relation.INCONCLUSIVE, decided_by, grid=tuple(ts))
    verdict = scan_monotonicity(ts, ratios, tol)
    if verdict.kind in (Kind.DECREASING, Kind.CONSTANT):
        return OrderVerdict(Relation.HOLDS, decided_by, grid=tuple(ts))
    # report the largest single increase
    worst = max(range(len(ts) - 1), key=lambda i: ratios[i + 1] - ratios[i])
    return OrderVerdict(
        Relation.FAILS,
        decided_by,
        witness=Witness(ts[worst + 1], ratios[worst + 1], ratios[worst]),
        grid=tuple(ts),
    )


def _grid_points(grid):
    return grid.points() if isinstance(grid, Grid) else [float(t) for t in grid]


def mrlai_order(
    X: Dist,
    Y: Dist,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> OrderVerdict:
    """X below Y in ageing intensity: L_X <= L_Y at every grid point."""
    ts = _grid_points(grid)
    lx = profile(X, ts, conv, cfg).L
    ly = profile(Y, ts, conv, cfg).L
    return _pointwise_leq(ts, lx, ly, tol, "grid")


def ratio_test(
    X: Dist,
    Y: Dist,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> OrderVerdict:
    """Equivalent criterion: int_0^t mu_X / int_0^t mu_Y non-increasing."""
    ts = _grid_points(grid)
    gx = [a * t for a, t in zip(profile(X, ts, conv, cfg).mu_avg, ts)]
    gy = [a * t for a, t in zip(profile(Y, ts, conv, cfg).mu_avg, ts)]
    ratios = [a / b for a, b in zip(gx, gy)]
    return _ratio_nonincreasing(ts, ratios, tol, "ratio_test")


def lr_order(
    X: Dist, Y: Dist, grid, tol: float = DEFAULT_ORDER_TOL
) -> OrderVerdict:
    """Likelihood-ratio order: f_X/f_Y non-increasing where both are positive."""
    if not (X.has_density and Y.has_density):
        raise UnsupportedCapability("lr order needs densities on both sides")
    ts, ratios = [], []
    for t in _grid_points(grid):
        fy = Y.density(t)
        fx = X.density(t)
        if fy > 0.0 and fx > 0.0:
            ts.append(t)
            ratios.append(fx / fy)
    return _ratio_nonincreasing(ts, ratios, tol, "grid")


def _tail_value(d, t, conv, cfg):
    if conv is Convention.FORMAL and d.formal is not None:
        return d.formal.tail(t)
    return d.tail(t, cfg)


def icx_order(
    X: Dist,
    Y: Dist,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> OrderVerdict:
    """Increasing-convex order: int_t^inf surv_X <= int_t^inf surv_Y for all t."""
    ts = _grid_points(grid)
    sx = [_tail_value(X, t, conv, cfg) for t in ts]
    sy = [_tail_value(Y, t, conv, cfg) for t in ts]
    return _pointwise_leq(ts, sx, sy, tol, "grid")


def _double_tail(d, t, conv, cfg):
    """int_t^inf of the (possibly formal) tail integral."""
    if conv is Convention.FORMAL and d.formal is not None:
        spec = d.spec
        # a formally continued power tail integrates in closed form when it decays
        if isinstance(spec, Pareto) and spec.shape > 2.0:
            a, b = spec.shape, spec.scale
            return b**a * t ** (2.0 - a) / ((a - 1.0) * (a - 2.0))
        return integrate_tail(lambda u: d.formal.tail(u), t, cfg)
    return integrate_tail(lambda u: d.tail(u, cfg), t, cfg)


def vrl_order(
    X: Dist,
    Y: Dist,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> OrderVerdict:
    """Variance-residual-life order via the ratio of double tail integrals.

    The ratio of int_t^inf int_u^inf surv_X over the same for Y must be
    non-increasing.
    """
    ts = _grid_points(grid)
    ratios = [_double_tail(X, t, conv, cfg) / _double_tail(Y, t, conv, cfg) for t in ts]
    return _ratio_nonincreasing(ts, ratios, tol, "grid")


def mrl_order(
    X: Dist,
    Y: Dist,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> OrderVerdict:
    """Mean-residual-life order: mu_X <= mu_Y pointwise."""
    ts = _grid_points(grid)

    def mu(d, t):
        if conv is Convention.FORMAL and d.formal is not None and t < d.support[0]:
            return d.formal.mrl(t)
        return mrl(d, t, cfg)

    mx = [mu(X, t) for t in ts]
    my = [mu(Y, t) for t in ts]
    return _pointwise_leq(ts, mx, my, tol, "grid")


def linear_mrl_order(a: float, b: float, c: float, d: float) -> OrderVerdict:
    """Order between linear-MRL lifetimes mu_X = a + b t and mu_Y = c + d t.

    L_X <= L_Y everywhere exactly when the determinant a*d - b*c is
    non-negative.
    """
    for name, v in (("a", a), ("c", c)):
        if not v > 0:
            raise ValueError(f"{name} must be positive")
    for name, v in (("b", b), ("d", d)):
        if v < 0:
            raise ValueError(f"{name} must be non-negative")
    det = a * d - b * c
    if det >= 0.0:
        return OrderVerdict(Relation.HOLDS, "thm_4_4", note=f"determinant {det:g}")
    # any positive t witnesses the reversal; quote t = 1
    lx = (a + b) / (a + 0.5 * b)
    ly = (c + d) / (c + 0.5 * d)
    return OrderVerdict(
        Relation.FAILS,
        "thm_4_4",
        witness=Witness(1.0, lx, ly),
        note=f"determinant {det:g}",
    )


def sufficient_conditions(
    X: Dist,
    Y: Dist,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
):
    """Shortcut verdicts from proven sufficiency theorems, or None.

    X decreasing in MRL with Y increasing settles the order outright; so
    does X decreasing in MRL average with Y increasing.  Hypotheses are
    verified on the grid, and the stricter pair is preferred when both
    apply.
    """
    g = grid if isinstance(grid, Grid) else None
    if g is None:
        ts = _grid_points(grid)
        g = Grid(ts[0], ts[-1], max(16, len(ts)))
    vx = classify_mrl(X, g, cfg=cfg)
    vy = classify_mrl(Y, g, cfg=cfg)
    if vx.kind is Kind.DECREASING and vy.kind is Kind.INCREASING:
        return OrderVerdict(
            Relation.HOLDS,
            "thm_4_3",
            grid=tuple(g.points()),
            note="X decreasing in MRL, Y increasing in MRL",
        )
    ax = classify_mrla(X, g, conv, cfg=cfg)
    ay = classify_mrla(Y, g, conv, cfg=cfg)
    if ax.kind is Kind.DECREASING and ay.kind is Kind.INCREASING:
        return OrderVerdict(
            Relation.HOLDS,
            "thm_4_2",
            grid=tuple(g.points()),
            note="X decreasing in MRL average, Y increasing in MRL average",
        )
    return None


def weibull_rule(shape_x: float, shape_y: float):
    """Published shape-ordering rule for two Weibull lifetimes, or None.

    The rule asserts the order from shape_x <= shape_y alone and is
    one-directional; a larger first shape yields no verdict.  It is kept
    as a standalone advisory and never used as a shortcut, because the
    grid check is the arbiter.
    """
    if not (shape_x > 0 and shape_y > 0):
        raise ValueError("shapes must be positive")
    if shape_x <= shape_y:
        return OrderVerdict(
            Relation.HOLDS,
            "weibull_rule",
            note=f"shape {shape_x:g} <= {shape_y:g}",
        )
    return None


@dataclass(frozen=True)
class ScaleReport:
    """Outcome of checking that rescaling both sides preserves the order."""

    factor: float
    base: OrderVerdict
    scaled: OrderVerdict
    max_margin: float

    @property
    def preserved(self) -> bool:
        return self.base.holds and self.scaled.holds


def check_scale_preservation(
    X: Dist,
    Y: Dist,
    factor: float,
    grid,
    conv: Convention = Convention.ZERO,
    tol: float = DEFAULT_ORDER_TOL,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> ScaleReport:
    """Verify that X below Y implies factor*X below factor*Y.

    The scaled pair is compared on the correspondingly scaled grid, where
    the identity L_{aX}(a t) = L_X(t) makes preservation exact.
    """
    from .ops import scale

    base = mrlai_order(X, Y, grid, conv, tol, cfg)
    ts = _grid_points(grid)
    scaled_ts = [factor * t for t in ts]
    scaled = mrlai_order(scale(X, factor), scale(Y, factor), scaled_ts, conv, tol, cfg)
    lx = profile(scale(X, factor), scaled_ts, conv, cfg).L
    ly = profile(scale(Y, factor), scaled_ts, conv, cfg).L
    max_margin = max(a - b for a, b in zip(lx, ly))
    return ScaleReport(factor, base, scaled, max_margin)
