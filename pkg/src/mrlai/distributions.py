"""Lifetime distribution specifications and their evaluatable realisations.

A spec is a small frozen dataclass describing a distribution declaratively:
either a closed-form family (exponential, Weibull, Pareto, Erlang, uniform),
a distribution specified through its mean residual life function (linear,
reciprocal-linear, exponential, or piecewise MRL), or a composite
(mixture, convolution, order statistic, positive scaling).  Specs
round-trip through a JSON grammar tagged by a ``family`` key.

``build`` turns a validated spec into a ``Dist``: an immutable object
exposing the survival function, an optional density, the support, the
mean, and whatever closed forms the family admits (tail integral, mean
residual life and its running integral).  Everything a family cannot
supply in closed form falls back to adaptive quadrature.

MRL-specified families realise their survival via the classical
inversion  F(t) = (mu(0)/mu(t)) * exp(-int_0^t du/mu(u));  parameter
choices with mu'(t) < -1 (which appear in the source material's own
counterexamples) yield a quasi-survival that is not monotone.  Such
specs are accepted and evaluated as the formulas dictate, but the
probabilistic invariants obviously do not apply to them.
"""

from __future__ import annotations

import bisect
import json
import math
from dataclasses import dataclass, fields, replace
from functools import cached_property

from .errors import SpecError, UnsupportedCapability
from .quadrature import DEFAULT_CONFIG, QuadConfig, integrate_tail

__all__ = [
    "Exponential",
    "Weibull",
    "Pareto",
    "Erlang",
    "Uniform",
    "MrlLinear",
    "MrlReciprocalLinear",
    "MrlExponential",
    "MrlPiecewise",
    "PieceLinear",
    "PieceExpAffine",
    "PieceSqrtAffine",
    "PieceRecipLinear",
    "Mixture",
    "Convolution",
    "OrderStatistic",
    "Scaled",
    "Dist",
    "FormalExtension",
    "validate",
    "build",
    "spec_to_dict",
    "spec_from_dict",
    "dump_spec",
    "load_spec",
    "load_spec_file",
]


# ---------------------------------------------------------------------------
# spec grammar
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Exponential:
    rate: float
    family = "exponential"


@dataclass(frozen=True)
class Weibull:
    shape: float
    scale: float
    family = "weibull"


@dataclass(frozen=True)
class Pareto:
    shape: float
    scale: float
    family = "pareto"


@dataclass(frozen=True)
class Erlang:
    k: int
    rate: float
    family = "erlang"


@dataclass(frozen=True)
class Uniform:
    lo: float
    hi: float
    family = "uniform"


@dataclass(frozen=True)
class MrlLinear:
    """Mean residual life a + b*t with a > 0, b >= 0."""

    a: float
    b: float
    family = "mrl_linear"


@dataclass(frozen=True)
class MrlReciprocalLinear:
    """Mean residual life 1/(a + b*t) with a > 0, b > 0."""

    a: float
    b: float
    family = "mrl_reciprocal_linear"


@dataclass(frozen=True)
class MrlExponential:
    """Mean residual life exp(a + b*t) with b != 0."""

    a: float
    b: float
    family = "mrl_exponential"


# Piece kinds for MrlPiecewise.  Each knows its own value, slope and the
# closed antiderivatives of mu and 1/mu, so the piecewise survival and the
# ageing-intensity denominator never need numerical integration.


@dataclass(frozen=True)
class PieceLinear:
    """mu(t) = a + b*t on the piece, in absolute time coordinates."""

    a: float
    b: float
    kind = "linear"

    def mu(self, t):
        return self.a + self.b * t

    def mu_prime(self, t):
        return self.b

    def int_mu(self, s, t):
        return self.a * (t - s) + 0.5 * self.b * (t * t - s * s)

    def int_inv_mu(self, s, t):
        if self.b == 0.0:
            return (t - s) / self.a
        return math.log(self.mu(t) / self.mu(s)) / self.b


@dataclass(frozen=True)
class PieceExpAffine:
    """mu(t) = p + q*exp(r*t)."""

    p: float
    q: float
    r: float
    kind = "exp_affine"

    def mu(self, t):
        return self.p + self.q * math.exp(self.r * t)

    def mu_prime(self, t):
        return self.q * self.r * math.exp(self.r * t)

    def int_mu(self, s, t):
        return self.p * (t - s) + self.q / self.r * (
            math.exp(self.r * t) - math.exp(self.r * s)
        )

    def int_inv_mu(self, s, t):
        # d/dt [r*t - ln(p + q e^{rt})] = r*p / (p + q e^{rt})
        if self.p == 0.0:
            return (math.exp(-self.r * s) - math.exp(-self.r * t)) / (self.q * self.r)
        anti = lambda u: (self.r * u - math.log(self.mu(u))) / (self.r * self.p)
        return anti(t) - anti(s)


@dataclass(frozen=True)
class PieceSqrtAffine:
    """mu(t) = p + q*sqrt(t)."""

    p: float
    q: float
    kind = "sqrt_affine"

    def mu(self, t):
        return self.p + self.q * math.sqrt(t)

    def mu_prime(self, t):
        return 0.5 * self.q / math.sqrt(t) if t > 0 else math.inf

    def int_mu(self, s, t):
        return self.p * (t - s) + (2.0 * self.q / 3.0) * (t**1.5 - s**1.5)

    def int_inv_mu(self, s, t):
        if self.q == 0.0:
            return (t - s) / self.p
        anti = lambda u: (2.0 / self.q**2) * (
            self.q * math.sqrt(u) - self.p * math.log(self.mu(u))
        )
        return anti(t) - anti(s)


@dataclass(frozen=True)
class PieceRecipLinear:
    """mu(t) = 1/(a + b*t)."""

    a: float
    b: float
    kind = "recip_linear"

    def mu(self, t):
        return 1.0 / (self.a + self.b * t)

    def mu_prime(self, t):
        d = self.a + self.b * t
        return -self.b / (d * d)

    def int_mu(self, s, t):
        if self.b == 0.0:
            return (t - s) / self.a
        return math.log((self.a + self.b * t) / (self.a + self.b * s)) / self.b

    def int_inv_mu(self, s, t):
        return self.a * (t - s) + 0.5 * self.b * (t * t - s * s)


_PIECE_KINDS = {
    "linear": PieceLinear,
    "exp_affine": PieceExpAffine,
    "sqrt_affine": PieceSqrtAffine,
    "recip_linear": PieceRecipLinear,
}


@dataclass(frozen=True)
class MrlPiecewise:
    """MRL given piecewise: pieces[i] applies on [breakpoints[i-1], breakpoints[i])."""

    breakpoints: tuple
    pieces: tuple
    family = "mrl_piecewise"


@dataclass(frozen=True)
class Mixture:
    weights: tuple
    components: tuple
    family = "mixture"


@dataclass(frozen=True)
class Convolution:
    components: tuple
    family = "convolution"


@dataclass(frozen=True)
class OrderStatistic:
    base: object
    k: int
    n: int
    family = "order_statistic"


@dataclass(frozen=True)
class Scaled:
    base: object
    factor: float
    family = "scaled"


_FAMILIES = {
    cls.family: cls
    for cls in (
        Exponential,
        Weibull,
        Pareto,
        Erlang,
        Uniform,
        MrlLinear,
        MrlReciprocalLinear,
        MrlExponential,
        MrlPiecewise,
        Mixture,
        Convolution,
        OrderStatistic,
        Scaled,
    )
}


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _require(condition, path, message):
    if not condition:
        raise SpecError(path, message)


def _finite(x, path):
    _require(isinstance(x, (int, float)) and not isinstance(x, bool), path, "must be a number")
    _require(math.isfinite(x), path, "must be finite")
    return float(x)


def validate(spec, path: str = "spec"):
    """Check all parameter constraints; return a normalised copy of the spec.

    Normalisation flattens nested Scaled wrappers and sorts mixture
    components into a deterministic order.
    """
    if isinstance(spec, Exponential):
        rate = _finite(spec.rate, f"{path}.rate")
        _require(rate > 0, f"{path}.rate", "must be positive")
        return Exponential(rate)
    if isinstance(spec, Weibull):
        shape = _finite(spec.shape, f"{path}.shape")
        scale = _finite(spec.scale, f"{path}.scale")
        _require(shape > 0, f"{path}.shape", "must be positive")
        _require(scale > 0, f"{path}.scale", "must be positive")
        return Weibull(shape, scale)
    if isinstance(spec, Pareto):
        shape = _finite(spec.shape, f"{path}.shape")
        scale = _finite(spec.scale, f"{path}.scale")
        _require(
            shape > 1, f"{path}.shape", "must exceed 1 (shape <= 1 means an infinite mean)"
        )
        _require(scale > 0, f"{path}.scale", "must be positive")
        return Pareto(shape, scale)
    if isinstance(spec, Erlang):
        _require(
            isinstance(spec.k, int) and not isinstance(spec.k, bool) and spec.k >= 1,
            f"{path}.k",
            "must be a positive integer",
        )
        rate = _finite(spec.rate, f"{path}.rate")
        _require(rate > 0, f"{path}.rate", "must be positive")
        return Erlang(spec.k, rate)
    if isinstance(spec, Uniform):
        lo = _finite(spec.lo, f"{path}.lo")
        hi = _finite(spec.hi, f"{path}.hi")
        _require(lo >= 0, f"{path}.lo", "must be non-negative")
        _require(hi > lo, f"{path}.hi", "must exceed lo")
        return Uniform(lo, hi)
    if isinstance(spec, MrlLinear):
        a = _finite(spec.a, f"{path}.a")
        b = _finite(spec.b, f"{path}.b")
        _require(a > 0, f"{path}.a", "must be positive")
        _require(b >= 0, f"{path}.b", "must be non-negative")
        return MrlLinear(a, b)
    if isinstance(spec, MrlReciprocalLinear):
        a = _finite(spec.a, f"{path}.a")
        b = _finite(spec.b, f"{path}.b")
        _require(a > 0, f"{path}.a", "must be positive")
        _require(b > 0, f"{path}.b", "must be positive")
        return MrlReciprocalLinear(a, b)
    if isinstance(spec, MrlExponential):
        a = _finite(spec.a, f"{path}.a")
        b = _finite(spec.b, f"{path}.b")
        _require(b != 0, f"{path}.b", "must be non-zero")
        return MrlExponential(a, b)
    if isinstance(spec, MrlPiecewise):
        return _validate_piecewise(spec, path)
    if isinstance(spec, Mixture):
        return _validate_mixture(spec, path)
    if isinstance(spec, Convolution):
        comps = tuple(
            validate(c, f"{path}.components[{i}]") for i, c in enumerate(spec.components)
        )
        _require(len(comps) >= 2, f"{path}.components", "needs at least two summands")
        return Convolution(comps)
    if isinstance(spec, OrderStatistic):
        base = validate(spec.base, f"{path}.base")
        _require(
            isinstance(spec.n, int) and not isinstance(spec.n, bool) and spec.n >= 1,
            f"{path}.n",
            "must be a positive integer",
        )
        _require(
            isinstance(spec.k, int) and not isinstance(spec.k, bool) and 1 <= spec.k <= spec.n,
            f"{path}.k",
            f"must lie in [1, n={spec.n}]",
        )
        return OrderStatistic(base, spec.k, spec.n)
    if isinstance(spec, Scaled):
        factor = _finite(spec.factor, f"{path}.factor")
        _require(factor > 0, f"{path}.factor", "must be positive")
        base = validate(spec.base, f"{path}.base")
        # flatten nested scalings
        while isinstance(base, Scaled):
            factor *= base.factor
            base = base.base
        return Scaled(base, factor)
    raise SpecError(path, f"unknown spec type {type(spec).__name__}")


def _validate_mixture(spec, path):
    weights = tuple(_finite(w, f"{path}.weights[{i}]") for i, w in enumerate(spec.weights))
    _require(len(weights) >= 2, f"{path}.weights", "a mixture needs at least two components")
    _require(
        len(weights) == len(spec.components),
        f"{path}.components",
        "weights and components must have equal length",
    )
    for i, w in enumerate(weights):
        _require(w > 0, f"{path}.weights[{i}]", "must be positive")
    _require(
        abs(sum(weights) - 1.0) <= 1e-12,
        f"{path}.weights",
        f"must sum to 1 (got {sum(weights)!r})",
    )
    comps = tuple(
        validate(c, f"{path}.components[{i}]") for i, c in enumerate(spec.components)
    )
    # deterministic component order: sort by serialised form, weights riding along
    pairs = sorted(
        zip(weights, comps), key=lambda wc: (json.dumps(spec_to_dict(wc[1]), sort_keys=True), wc[0])
    )
    return Mixture(tuple(w for w, _ in pairs), tuple(c for _, c in pairs))


def _validate_piecewise(spec, path):
    bps = tuple(_finite(b, f"{path}.breakpoints[{i}]") for i, b in enumerate(spec.breakpoints))
    _require(all(b > 0 for b in bps), f"{path}.breakpoints", "must be positive")
    _require(
        all(b2 > b1 for b1, b2 in zip(bps, bps[1:])),
        f"{path}.breakpoints",
        "must be strictly increasing",
    )
    pieces = tuple(spec.pieces)
    _require(
        len(pieces) == len(bps) + 1,
        f"{path}.pieces",
        f"need exactly {len(bps) + 1} pieces for {len(bps)} breakpoints",
    )
    for i, piece in enumerate(pieces):
        _require(
            type(piece) in _PIECE_KINDS.values(),
            f"{path}.pieces[{i}]",
            f"unknown piece type {type(piece).__name__}",
        )
        for f in fields(piece):
            _finite(getattr(piece, f.name), f"{path}.pieces[{i}].{f.name}")
        lo = 0.0 if i == 0 else bps[i - 1]
        hi = bps[i] if i < len(bps) else math.inf
        _require(
            _piece_positive_on(piece, lo, hi),
            f"{path}.pieces[{i}]",
            f"mean residual life must stay positive on [{lo!r}, {hi!r})",
        )
    return MrlPiecewise(bps, pieces)


def _piece_positive_on(piece, lo, hi):
    # every supported piece kind is monotone in t, so endpoint checks suffice
    if piece.mu(lo) <= 0:
        return False
    if math.isinf(hi):
        if isinstance(piece, PieceLinear):
            return piece.b >= 0
        if isinstance(piece, PieceExpAffine):
            limit = piece.p if piece.r < 0 else (math.inf if piece.q > 0 else -math.inf)
            return (limit > 0) if piece.q * piece.r != 0 else piece.mu(lo) > 0
        if isinstance(piece, PieceSqrtAffine):
            return piece.q >= 0
        return True  # recip_linear with positive a, b stays positive
    return piece.mu(hi) >= 0


# ---------------------------------------------------------------------------
# JSON grammar
# ---------------------------------------------------------------------------


def spec_to_dict(spec) -> dict:
    if isinstance(spec, Mixture):
        return {
            "family": spec.family,
            "weights": list(spec.weights),
            "components": [spec_to_dict(c) for c in spec.components],
        }
    if isinstance(spec, Convolution):
        return {"family": spec.family, "components": [spec_to_dict(c) for c in spec.components]}
    if isinstance(spec, OrderStatistic):
        return {"family": spec.family, "base": spec_to_dict(spec.base), "k": spec.k, "n": spec.n}
    if isinstance(spec, Scaled):
        return {"family": spec.family, "base": spec_to_dict(spec.base), "factor": spec.factor}
    if isinstance(spec, MrlPiecewise):
        return {
            "family": spec.family,
            "breakpoints": list(spec.breakpoints),
            "pieces": [
                {"kind": p.kind, **{f.name: getattr(p, f.name) for f in fields(p)}}
                for p in spec.pieces
            ],
        }
    return {"family": spec.family, **{f.name: getattr(spec, f.name) for f in fields(spec)}}


def _from_dict_scalar(cls, d, path):
    names = [f.name for f in fields(cls)]
    extra = set(d) - {"family", *names}
    if extra:
        raise SpecError(path, f"unknown keys {sorted(extra)} for family '{cls.family}'")
    missing = [n for n in names if n not in d]
    if missing:
        raise SpecError(path, f"missing keys {missing} for family '{cls.family}'")
    return cls(**{n: d[n] for n in names})


def spec_from_dict(d, path: str = "spec"):
    """Parse one spec node from its JSON dict form.  Unknown keys are rejected."""
    if not isinstance(d, dict):
        raise SpecError(path, "expected a JSON object")
    family = d.get("family")
    if family not in _FAMILIES:
        raise SpecError(f"{path}.family", f"unknown family {family!r}")
    cls = _FAMILIES[family]
    if cls is Mixture:
        extra = set(d) - {"family", "weights", "components"}
        if extra:
            raise SpecError(path, f"unknown keys {sorted(extra)} for family 'mixture'")
        comps = tuple(
            spec_from_dict(c, f"{path}.components[{i}]")
            for i, c in enumerate(d.get("components", ()))
        )
        return Mixture(tuple(d.get("weights", ())), comps)
    if cls is Convolution:
        extra = set(d) - {"family", "components"}
        if extra:
            raise SpecError(path, f"unknown keys {sorted(extra)} for family 'convolution'")
        comps = tuple(
            spec_from_dict(c, f"{path}.components[{i}]")
            for i, c in enumerate(d.get("components", ()))
        )
        return Convolution(comps)
    if cls is OrderStatistic:
        extra = set(d) - {"family", "base", "k", "n"}
        if extra:
            raise SpecError(path, f"unknown keys {sorted(extra)} for family 'order_statistic'")
        return OrderStatistic(spec_from_dict(d.get("base", {}), f"{path}.base"), d.get("k"), d.get("n"))
    if cls is Scaled:
        extra = set(d) - {"family", "base", "factor"}
        if extra:
            raise SpecError(path, f"unknown keys {sorted(extra)} for family 'scaled'")
        return Scaled(spec_from_dict(d.get("base", {}), f"{path}.base"), d.get("factor"))
    if cls is MrlPiecewise:
        extra = set(d) - {"family", "breakpoints", "pieces"}
        if extra:
            raise SpecError(path, f"unknown keys {sorted(extra)} for family 'mrl_piecewise'")
        pieces = []
        for i, pd in enumerate(d.get("pieces", ())):
            ppath = f"{path}.pieces[{i}]"
            if not isinstance(pd, dict):
                raise SpecError(ppath, "expected a JSON object")
            kind = pd.get("kind")
            if kind not in _PIECE_KINDS:
                raise SpecError(f"{ppath}.kind", f"unknown piece kind {kind!r}")
            pcls = _PIECE_KINDS[kind]
            names = [f.name for f in fields(pcls)]
            extra = set(pd) - {"kind", *names}
            if extra:
                raise SpecError(ppath, f"unknown keys {sorted(extra)} for piece kind '{kind}'")
            missing = [n for n in names if n not in pd]
            if missing:
                raise SpecError(ppath, f"missing keys {missing} for piece kind '{kind}'")
            pieces.append(pcls(**{n: pd[n] for n in names}))
        return MrlPiecewise(tuple(d.get("breakpoints", ())), tuple(pieces))
    return _from_dict_scalar(cls, d, path)


def dump_spec(spec) -> str:
    return json.dumps(spec_to_dict(spec), indent=2, sort_keys=True)


def load_spec(text: str):
    return validate(spec_from_dict(json.loads(text)))


def load_spec_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return load_spec(fh.read())


# ---------------------------------------------------------------------------
# Dist
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormalExtension:
    """Analytic continuation of the on-support formulas below the support start.

    Used by the 'formal' integration convention, which evaluates the
    MRLAI denominator with the on-support MRL formula continued down to
    zero (the treatment the Pareto characterisation implicitly applies).
    """

    survival: object
    tail: object
    mrl: object
    mrl_integral: object


class Dist:
    """Evaluatable lifetime distribution.  Immutable after construction.

    Scalar callables cover the survival function and, where available, the
    density, the closed tail integral S(t) = int_t^inf survival, the closed
    mean residual life, and the closed running integral int_0^t mu(u) du
    (with the true conditional MRL, mean - u, below the support start).
    Anything missing falls back to quadrature in the callers.
    """

    def __init__(
        self,
        spec,
        survival,
        support,
        *,
        density=None,
        tail=None,
        mean=None,
        mrl=None,
        mrl_integral=None,
        formal=None,
        lineage="",
    ):
        self.spec = spec
        self._survival = survival
        self.support = (float(support[0]), float(support[1]))
        self._density = density
        self._tail = tail
        self._mean = mean
        self._mrl = mrl
        self._mrl_integral = mrl_integral
        self.formal = formal
        self.lineage = lineage or (spec.family if spec is not None else "")
        self._tail_cache = {}

    # -- basic evaluation ---------------------------------------------------

    # Arithmetic overflow in a family formula only happens at the
    # astronomically large arguments probed by the improper-tail
    # substitution, where the true value has long underflowed to zero.

    def survival(self, t: float) -> float:
        s0, s1 = self.support
        if t < s0:
            return 1.0
        if t >= s1:
            return 0.0
        try:
            return self._survival(t)
        except OverflowError:
            return 0.0

    @property
    def has_density(self) -> bool:
        return self._density is not None

    def density(self, t: float) -> float:
        if self._density is None:
            raise UnsupportedCapability(
                f"{self.lineage}: no density available (survival is defined "
                "numerically or the construction does not preserve one)"
            )
        s0, s1 = self.support
        if t < s0 or t >= s1:
            return 0.0
        try:
            return self._density(t)
        except OverflowError:
            return 0.0

    def tail(self, t: float, cfg: QuadConfig = DEFAULT_CONFIG, numeric: bool = False) -> float:
        """S(t) = integral of the survival function over [t, infinity).

        ``numeric=True`` bypasses the closed form so callers can exercise
        the pure quadrature route.
        """
        s0, s1 = self.support
        if t >= s1:
            return 0.0
        if self._tail is not None and not numeric:
            try:
                return self._tail(t)
            except OverflowError:
                return 0.0
        if t < s0:
            return self.mean - t
        key = (t, cfg.abs_tol, cfg.rel_tol)
        hit = self._tail_cache.get(key)
        if hit is None:
            hit = self._tail_numeric(t, s1, cfg)
            if 0.0 < abs(hit) < 1e3 * cfg.abs_tol:
                # the absolute floor dominated; go again for relative accuracy
                tight = replace(cfg, abs_tol=max(abs(hit) * cfg.rel_tol, 1e-280))
                hit = self._tail_numeric(t, s1, tight)
            self._tail_cache[key] = hit
        return hit

    def _tail_numeric(self, t, s1, cfg):
        if math.isfinite(s1):
            from .quadrature import integrate_finite

            return integrate_finite(self.survival, t, s1, cfg)
        return integrate_tail(self.survival, t, cfg)

    @cached_property
    def mean(self) -> float:
        if self._mean is not None:
            return float(self._mean)
        s0 = self.support[0]
        if s0 > 0.0:
            # survival is identically 1 below the support start
            return s0 + self.tail(s0)
        return self.tail(0.0)

    # -- closed forms (None when the family has none) ------------------------

    @property
    def has_closed_mrl(self) -> bool:
        return self._mrl is not None

    def mrl_closed(self, t: float):
        """Closed-form MRL on the support, or None."""
        if self._mrl is None:
            return None
        return self._mrl(t)

    def mrl_integral_closed(self, t: float):
        """Closed-form int_0^t mu(u) du (true MRL below the support), or None."""
        if self._mrl_integral is None:
            return None
        return self._mrl_integral(t)

    def __repr__(self):
        return f"Dist({self.lineage})"


# ---------------------------------------------------------------------------
# family builders
# ---------------------------------------------------------------------------


def build(spec, *, validated: bool = False) -> Dist:
    """Realise a spec as an evaluatable Dist."""
    if not validated:
        spec = validate(spec)
    if isinstance(spec, Exponential):
        return _build_exponential(spec)
    if isinstance(spec, Weibull):
        return _build_weibull(spec)
    if isinstance(spec, Pareto):
        return _build_pareto(spec)
    if isinstance(spec, Erlang):
        return _build_erlang(spec)
    if isinstance(spec, Uniform):
        return _build_uniform(spec)
    if isinstance(spec, MrlLinear):
        return _build_mrl_linear(spec)
    if isinstance(spec, MrlReciprocalLinear):
        return _build_mrl_reciprocal(spec)
    if isinstance(spec, MrlExponential):
        return _build_mrl_exponential(spec)
    if isinstance(spec, MrlPiecewise):
        return _build_mrl_piecewise(spec)

    from . import ops  # composites are assembled by the reliability operations

    if isinstance(spec, Mixture):
        return ops.mixture(list(spec.weights), [build(c, validated=True) for c in spec.components])
    if isinstance(spec, Convolution):
        dists = [build(c, validated=True) for c in spec.components]
        out = dists[0]
        for d in dists[1:]:
            out = ops.convolution(out, d)
        return out
    if isinstance(spec, OrderStatistic):
        return ops.order_statistic(build(spec.base, validated=True), spec.k, spec.n)
    if isinstance(spec, Scaled):
        return ops.scale(build(spec.base, validated=True), spec.factor)
    raise SpecError("spec", f"cannot build {type(spec).__name__}")


def _build_exponential(spec: Exponential) -> Dist:
    lam = spec.rate
    return Dist(
        spec,
        lambda t: math.exp(-lam * t),
        (0.0, math.inf),
        density=lambda t: lam * math.exp(-lam * t),
        tail=lambda t: math.exp(-lam * t) / lam,
        mean=1.0 / lam,
        mrl=lambda t: 1.0 / lam,
        mrl_integral=lambda t: t / lam,
    )


def _build_weibull(spec: Weibull) -> Dist:
    alpha, beta = spec.shape, spec.scale

    def survival(t):
        return math.exp(-((t / beta) ** alpha))

    def density(t):
        if t == 0.0:
            if alpha > 1:
                return 0.0
            return 1.0 / beta if alpha == 1 else math.inf
        z = (t / beta) ** alpha
        return alpha / t * z * math.exp(-z)

    return Dist(
        spec,
        survival,
        (0.0, math.inf),
        density=density,
        mean=beta * math.gamma(1.0 + 1.0 / alpha),
    )


def _build_pareto(spec: Pareto) -> Dist:
    a, b = spec.shape, spec.scale
    mean = a * b / (a - 1.0)

    def tail(t):
        if t < b:
            return mean - t
        return t * (b / t) ** a / (a - 1.0)

    def mrl_integral(t):
        # int_0^t of the true MRL: (mean - u) below the support start
        if t <= b:
            return mean * t - 0.5 * t * t
        on_support = (t * t - b * b) / (2.0 * (a - 1.0))
        return mean * b - 0.5 * b * b + on_support

    formal = FormalExtension(
        survival=lambda t: (b / t) ** a,
        tail=lambda t: b**a * t ** (1.0 - a) / (a - 1.0),
        mrl=lambda t: t / (a - 1.0),
        mrl_integral=lambda t: t * t / (2.0 * (a - 1.0)),
    )
    return Dist(
        spec,
        lambda t: (b / t) ** a,
        (b, math.inf),
        density=lambda t: a * b**a / t ** (a + 1.0),
        tail=tail,
        mean=mean,
        mrl=lambda t: t / (a - 1.0),
        mrl_integral=mrl_integral,
        formal=formal,
    )


def _erlang_terms(k, lam, t):
    """Cumulants e^{-lam t} (lam t)^i / i! for i < k."""
    terms = []
    p = math.exp(-lam * t)
    for i in range(k):
        terms.append(p)
        p *= lam * t / (i + 1)
    return terms


def _build_erlang(spec: Erlang) -> Dist:
    k, lam = spec.k, spec.rate
    logc = (k - 1) * math.log(lam) + math.log(lam) - math.lgamma(k)

    def survival(t):
        return math.fsum(_erlang_terms(k, lam, t))

    def density(t):
        if t == 0.0:
            return lam if k == 1 else 0.0
        return math.exp(logc + (k - 1) * math.log(t) - lam * t)

    def tail(t):
        terms = _erlang_terms(k, lam, t)
        return math.fsum((k - i) * p for i, p in enumerate(terms)) / lam

    def mrl(t):
        return tail(t) / survival(t)

    mrl_integral = None
    if k == 1:
        mrl_integral = lambda t: t / lam
    elif k == 2:
        mrl_integral = lambda t: (lam * t + math.log1p(lam * t)) / (lam * lam)
    elif k == 3:
        # antiderivative of ((lam t)^2 + 4 lam t + 6) / (lam ((lam t)^2 + 2 lam t + 2))
        def mrl_integral(t):
            s = lam * t
            val = (
                math.log(s * s + 2.0 * s + 2.0)
                + 2.0 * math.atan(s + 1.0)
                + s
                - math.log(2.0)
                - math.pi / 2.0
            )
            return val / (lam * lam)

    return Dist(
        spec,
        survival,
        (0.0, math.inf),
        density=density,
        tail=tail,
        mean=k / lam,
        mrl=mrl,
        mrl_integral=mrl_integral,
    )


def _build_uniform(spec: Uniform) -> Dist:
    lo, hi = spec.lo, spec.hi
    width = hi - lo
    mean = 0.5 * (lo + hi)

    def tail(t):
        if t < lo:
            return mean - t
        if t >= hi:
            return 0.0
        return (hi - t) ** 2 / (2.0 * width)

    def mrl_integral(t):
        if t <= lo:
            return mean * t - 0.5 * t * t
        below = mean * lo - 0.5 * lo * lo
        u = min(t, hi)
        return below + 0.5 * (hi * (u - lo) - 0.5 * (u * u - lo * lo))

    return Dist(
        spec,
        lambda t: (hi - t) / width,
        (lo, hi),
        density=lambda t: 1.0 / width,
        tail=tail,
        mean=mean,
        mrl=lambda t: 0.5 * (hi - t),
        mrl_integral=mrl_integral,
    )


def _build_mrl_linear(spec: MrlLinear) -> Dist:
    a, b = spec.a, spec.b
    if b == 0.0:
        d = _build_exponential(Exponential(1.0 / a))
        return Dist(
            spec,
            d._survival,
            d.support,
            density=d._density,
            tail=d._tail,
            mean=a,
            mrl=d._mrl,
            mrl_integral=d._mrl_integral,
        )
    c = 1.0 + 1.0 / b

    return Dist(
        spec,
        lambda t: (a / (a + b * t)) ** c,
        (0.0, math.inf),
        density=lambda t: (b + 1.0) * a**c / (a + b * t) ** (c + 1.0),
        tail=lambda t: a * (a / (a + b * t)) ** (1.0 / b),
        mean=a,
        mrl=lambda t: a + b * t,
        mrl_integral=lambda t: a * t + 0.5 * b * t * t,
    )


def _build_mrl_reciprocal(spec: MrlReciprocalLinear) -> Dist:
    a, b = spec.a, spec.b

    def survival(t):
        return (a + b * t) / a * math.exp(-(a * t + 0.5 * b * t * t))

    return Dist(
        spec,
        survival,
        (0.0, math.inf),
        density=lambda t: ((a + b * t) ** 2 - b) / a * math.exp(-(a * t + 0.5 * b * t * t)),
        tail=lambda t: math.exp(-(a * t + 0.5 * b * t * t)) / a,
        mean=1.0 / a,
        mrl=lambda t: 1.0 / (a + b * t),
        mrl_integral=lambda t: math.log((a + b * t) / a) / b,
    )


def _build_mrl_exponential(spec: MrlExponential) -> Dist:
    # For b > 0 the defining formula exp(a + bt) is not a realisable MRL:
    # the inversion integral int 1/mu stays bounded, so mu(t) * survival(t)
    # tends to the positive constant K below instead of 0.  The closed
    # mrl/mrl_integral keep the defining formulas (which is what the
    # published intensity bt e^{bt}/(e^{bt}-1) is built from), while tail
    # and mean describe the reconstructed survival itself.
    a, b = spec.a, spec.b

    def survival(t):
        return math.exp(math.exp(-a) * math.expm1(-b * t) / b - b * t)

    def density(t):
        return survival(t) * (math.exp(-a - b * t) + b)

    offset = math.exp(a) * math.exp(-math.exp(-a) / b) if b > 0 else 0.0

    def tail(t):
        return math.exp(a + b * t) * survival(t) - offset

    return Dist(
        spec,
        survival,
        (0.0, math.inf),
        density=density,
        tail=tail,
        mean=math.exp(a) - offset,
        mrl=lambda t: math.exp(a + b * t),
        mrl_integral=lambda t: math.exp(a) * math.expm1(b * t) / b,
    )


def _build_mrl_piecewise(spec: MrlPiecewise) -> Dist:
    bps = spec.breakpoints
    pieces = spec.pieces
    starts = (0.0,) + bps

    # prefix constants so per-point evaluation is O(log pieces)
    int_mu_at = [0.0]
    int_inv_at = [0.0]
    for i, bp in enumerate(bps):
        int_mu_at.append(int_mu_at[-1] + pieces[i].int_mu(starts[i], bp))
        int_inv_at.append(int_inv_at[-1] + pieces[i].int_inv_mu(starts[i], bp))

    def _index(t):
        return bisect.bisect_right(bps, t)

    def mu(t):
        return pieces[_index(t)].mu(t)

    def mrl_integral(t):
        i = _index(t)
        return int_mu_at[i] + pieces[i].int_mu(starts[i], t)

    def inv_integral(t):
        i = _index(t)
        return int_inv_at[i] + pieces[i].int_inv_mu(starts[i], t)

    mu0 = pieces[0].mu(0.0)

    def survival(t):
        return mu0 / mu(t) * math.exp(-inv_integral(t))

    def density(t):
        i = _index(t)
        return survival(t) * (pieces[i].mu_prime(t) + 1.0) / pieces[i].mu(t)

    return Dist(
        spec,
        survival,
        (0.0, math.inf),
        density=density,
        tail=lambda t: mu(t) * survival(t),
        mean=mu0,
        mrl=mu,
        mrl_integral=mrl_integral,
    )
