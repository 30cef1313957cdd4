"""Reliability operations that build composite distributions.

Finite mixtures, convolutions of independent summands, k-out-of-n order
statistics of iid components (series and parallel systems as the k = 1
and k = n cases), and positive rescaling.  Closed forms are used where
an operation lands back inside a known family (sums of same-rate
exponential/Erlang variables, minima of iid exponentials, rescalings of
every built-in family); everything else synthesises the survival
function and lets quadrature do the rest.
"""

from __future__ import annotations

import math

from .distributions import (
    Convolution,
    Dist,
    Erlang,
    Exponential,
    MrlExponential,
    MrlLinear,
    MrlPiecewise,
    MrlReciprocalLinear,
    Mixture,
    OrderStatistic,
    Pareto,
    PieceExpAffine,
    PieceLinear,
    PieceRecipLinear,
    PieceSqrtAffine,
    Scaled,
    Uniform,
    Weibull,
    build,
)
from .errors import SpecError, UnsupportedCapability
from .quadrature import DEFAULT_CONFIG, QuadConfig, integrate_finite

__all__ = ["mixture", "convolution", "order_statistic", "parallel", "scale"]


def mixture(weights, components) -> Dist:
    """Finite mixture: survival is the weighted sum of component survivals."""
    ws = [float(w) for w in weights]
    if len(ws) < 2:
        raise SpecError("mixture.weights", "a mixture needs at least two components")
    if len(ws) != len(components):
        raise SpecError("mixture.components", "weights and components must have equal length")
    if any(w <= 0 for w in ws):
        raise SpecError("mixture.weights", "must be positive")
    if abs(sum(ws) - 1.0) > 1e-12:
        raise SpecError("mixture.weights", f"must sum to 1 (got {sum(ws)!r})")

    comps = list(components)
    spec = Mixture(tuple(ws), tuple(c.spec for c in comps))
    s0 = min(c.support[0] for c in comps)
    s1 = max(c.support[1] for c in comps)
    density = None
    if all(c.has_density for c in comps):
        density = lambda t: sum(w * c.density(t) for w, c in zip(ws, comps))
    return Dist(
        spec,
        lambda t: sum(w * c.survival(t) for w, c in zip(ws, comps)),
        (s0, s1),
        density=density,
        tail=lambda t: sum(w * c.tail(t) for w, c in zip(ws, comps)),
        mean=sum(w * c.mean for w, c in zip(ws, comps)),
        lineage="mixture(" + ", ".join(c.lineage for c in comps) + ")",
    )


def convolution(
    x: Dist, y: Dist, cfg: QuadConfig = DEFAULT_CONFIG, closed_forms: bool = True
) -> Dist:
    """Distribution of the sum of two independent lifetimes.

    Same-rate exponential/Erlang summands merge into a closed-form
    Erlang.  Otherwise the survival is synthesised as

        S_c(t) = S_x(t) + int_0^t f_x(u) S_y(t - u) du

    with the roles swapped if only y carries a density.
    """
    if closed_forms:
        merged = _erlang_merge(x.spec, y.spec)
        if merged is not None:
            d = build(merged, validated=True)
            return Dist(
                Convolution((x.spec, y.spec)),
                d._survival,
                d.support,
                density=d._density,
                tail=d._tail,
                mean=d.mean,
                mrl=d._mrl,
                mrl_integral=d._mrl_integral,
                lineage=f"convolution[{d.lineage}]({x.lineage}, {y.lineage})",
            )
    if not x.has_density and not y.has_density:
        raise UnsupportedCapability(
            "convolution needs a density on at least one summand "
            f"({x.lineage}, {y.lineage})"
        )
    if not x.has_density:
        x, y = y, x

    spec = Convolution((x.spec, y.spec))
    cache = {}

    def survival(t):
        hit = cache.get(t)
        if hit is None:
            lo = x.support[0]
            hi = min(t, x.support[1])
            inner = 0.0
            if hi > lo:
                inner = integrate_finite(
                    lambda u: x.density(u) * y.survival(t - u), lo, hi, cfg
                )
            hit = x.survival(t) + inner
            cache[t] = hit
        return hit

    density = None
    if y.has_density:

        def density(t):
            lo = max(x.support[0], t - y.support[1])
            hi = min(t - y.support[0], x.support[1])
            if hi <= lo:
                return 0.0
            return integrate_finite(lambda u: x.density(u) * y.density(t - u), lo, hi, cfg)

    return Dist(
        spec,
        survival,
        (x.support[0] + y.support[0], x.support[1] + y.support[1]),
        density=density,
        mean=x.mean + y.mean,
        lineage=f"convolution({x.lineage}, {y.lineage})",
    )


def _erlang_merge(a, b):
    def as_erlang(s):
        if isinstance(s, Exponential):
            return 1, s.rate
        if isinstance(s, Erlang):
            return s.k, s.rate
        return None

    ea, eb = as_erlang(a), as_erlang(b)
    if ea and eb and math.isclose(ea[1], eb[1], rel_tol=1e-12):
        return Erlang(ea[0] + eb[0], ea[1])
    return None


def order_statistic(base: Dist, k: int, n: int) -> Dist:
    """k-th smallest of n iid copies; the lifetime of an (n-k+1)-out-of-n system."""
    if not (isinstance(k, int) and isinstance(n, int)) or n < 1 or not 1 <= k <= n:
        raise SpecError("order_statistic.k", f"k must lie in [1, n], got k={k!r} n={n!r}")
    if n == 1:
        return base
    if k == 1 and isinstance(base.spec, Exponential):
        # minimum of iid exponentials is exponential with n times the rate
        d = build(Exponential(base.spec.rate * n), validated=True)
        return Dist(
            OrderStatistic(base.spec, k, n),
            d._survival,
            d.support,
            density=d._density,
            tail=d._tail,
            mean=d.mean,
            mrl=d._mrl,
            mrl_integral=d._mrl_integral,
            lineage=f"series[{d.lineage}]({base.lineage} x{n})",
        )

    spec = OrderStatistic(base.spec, k, n)

    def survival(t):
        # at least n-k+1 of the n components still alive
        sv = base.survival(t)
        q = 1.0 - sv
        return sum(
            math.comb(n, j) * sv**j * q ** (n - j) for j in range(n - k + 1, n + 1)
        )

    density = None
    if base.has_density:
        coeff = math.factorial(n) / (math.factorial(k - 1) * math.factorial(n - k))

        def density(t):
            sv = base.survival(t)
            return coeff * (1.0 - sv) ** (k - 1) * sv ** (n - k) * base.density(t)

    return Dist(
        spec,
        survival,
        base.support,
        density=density,
        lineage=f"os({k}:{n})({base.lineage})",
    )


def parallel(base: Dist, n: int) -> Dist:
    """Parallel system of n iid components: the maximum, i.e. k = n."""
    return order_statistic(base, n, n)


def scale(base: Dist, factor: float, rewrite: bool = True) -> Dist:
    """Distribution of factor * X for factor > 0.

    Every built-in family is closed under positive rescaling, so by
    default the spec is rewritten into the same family with adjusted
    parameters.  ``rewrite=False`` forces the generic change-of-variables
    wrapper instead (useful for exercising the scaling identity through
    the numeric pipeline).
    """
    a = float(factor)
    if not (a > 0) or not math.isfinite(a):
        raise SpecError("scaled.factor", f"must be positive and finite, got {factor!r}")
    if a == 1.0:
        return base
    if rewrite:
        rewritten = _rescale_spec(base.spec, a)
        if rewritten is not None:
            d = build(rewritten, validated=True)
            return Dist(
                Scaled(base.spec, a),
                d._survival,
                d.support,
                density=d._density,
                tail=d._tail,
                mean=d.mean,
                mrl=d._mrl,
                mrl_integral=d._mrl_integral,
                formal=d.formal,
                lineage=f"scaled[{a:g}]({base.lineage})",
            )

    s0, s1 = base.support
    density = None
    if base.has_density:
        density = lambda t: base.density(t / a) / a
    return Dist(
        Scaled(base.spec, a),
        lambda t: base.survival(t / a),
        (a * s0, a * s1),
        density=density,
        tail=lambda t: a * base.tail(t / a),
        mean=a * base.mean,
        lineage=f"scaled[{a:g}]({base.lineage})",
    )


def _rescale_spec(spec, a):
    """Map a spec to the same family with the scale folded in, or None."""
    if isinstance(spec, Exponential):
        return Exponential(spec.rate / a)
    if isinstance(spec, Weibull):
        return Weibull(spec.shape, a * spec.scale)
    if isinstance(spec, Pareto):
        return Pareto(spec.shape, a * spec.scale)
    if isinstance(spec, Erlang):
        return Erlang(spec.k, spec.rate / a)
    if isinstance(spec, Uniform):
        return Uniform(a * spec.lo, a * spec.hi)
    if isinstance(spec, MrlLinear):
        return MrlLinear(a * spec.a, spec.b)
    if isinstance(spec, MrlReciprocalLinear):
        return MrlReciprocalLinear(spec.a / a, spec.b / (a * a))
    if isinstance(spec, MrlExponential):
        return MrlExponential(spec.a + math.log(a), spec.b / a)
    if isinstance(spec, MrlPiecewise):
        return MrlPiecewise(
            tuple(a * bp for bp in spec.breakpoints),
            tuple(_rescale_piece(p, a) for p in spec.pieces),
        )
    if isinstance(spec, Mixture):
        comps = tuple(_rescale_spec(c, a) for c in spec.components)
        return None if any(c is None for c in comps) else Mixture(spec.weights, comps)
    if isinstance(spec, OrderStatistic):
        inner = _rescale_spec(spec.base, a)
        return None if inner is None else OrderStatistic(inner, spec.k, spec.n)
    return None


def _rescale_piece(p, a):
    # mu_{aX}(t) = a * mu_X(t / a)
    if isinstance(p, PieceLinear):
        return PieceLinear(a * p.a, p.b)
    if isinstance(p, PieceExpAffine):
        return PieceExpAffine(a * p.p, a * p.q, p.r / a)
    if isinstance(p, PieceSqrtAffine):
        return PieceSqrtAffine(a * p.p, math.sqrt(a) * p.q)
    if isinstance(p, PieceRecipLinear):
        return PieceRecipLinear(p.a / a, p.b / (a * a))
    raise SpecError("scaled.base", f"cannot rescale piece {type(p).__name__}")
