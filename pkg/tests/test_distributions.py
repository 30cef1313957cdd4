"""Spec grammar, validation, JSON round trips, and family realisations."""

import json
import math
import random

import pytest
from scipy.special import gammaincc
from scipy.special import gamma as gamma_fn

from mrlai.distributions import (
    Convolution,
    Erlang,
    Exponential,
    Mixture,
    MrlExponential,
    MrlLinear,
    MrlPiecewise,
    MrlReciprocalLinear,
    OrderStatistic,
    Pareto,
    PieceExpAffine,
    PieceLinear,
    PieceSqrtAffine,
    Scaled,
    Uniform,
    Weibull,
    build,
    dump_spec,
    load_spec,
    spec_from_dict,
    validate,
)
from mrlai.errors import SpecError, UnsupportedCapability
from mrlai.quadrature import QuadConfig, integrate_finite, integrate_tail

E = math.e

# families wholly inside the probability axioms (no quasi-survival corner)
VALID_SPECS = [
    Exponential(2.0),
    Exponential(0.4),
    Weibull(0.7, 1.3),
    Weibull(2.5, 0.8),
    Pareto(2.5, 1.0),
    Pareto(4.0, 0.5),
    Erlang(2, 2.0),
    Erlang(3, 1.0),
    Erlang(5, 0.7),
    Uniform(0.0, 2.0),
    Uniform(0.5, 3.0),
    MrlLinear(1.0, 8.0),
    MrlLinear(1.0, 0.0),
    MrlReciprocalLinear(1.0, 1.0),
    MrlExponential(0.0, 1.0),
    MrlExponential(0.5, -0.2),
    MrlPiecewise((1.0,), (PieceLinear(0.5, 0.0), PieceLinear(-0.5, 1.0))),
    MrlPiecewise(
        (1.0, 2.0),
        (PieceExpAffine(1.0, -0.4 / E, 1.0), PieceLinear(0.0, 0.6), PieceLinear(1.2, 0.0)),
    ),
    MrlPiecewise((), (PieceSqrtAffine(2.0, 2.0),)),
]


class TestSurvivalExamples:
    def test_exponential(self):
        d = build(Exponential(2.0))
        assert d.survival(1.0) == pytest.approx(math.exp(-2.0), abs=1e-15)
        assert d.survival(1.0) == pytest.approx(0.1353353, abs=5e-8)

    def test_pareto(self):
        d = build(Pareto(2.0, 1.0))
        assert d.survival(2.0) == pytest.approx(0.25, abs=1e-15)
        assert d.survival(0.5) == 1.0

    def test_mrl_linear_matches_inversion_formula(self):
        d = build(MrlLinear(1.0, 8.0))
        assert d.survival(1.0) == pytest.approx((1.0 / 9.0) ** (9.0 / 8.0), rel=1e-14)

    def test_convolution_of_unit_exponentials(self):
        d = build(Convolution((Exponential(1.0), Exponential(1.0))))
        for t in (0.2, 1.0, 3.7):
            assert d.survival(t) == pytest.approx((1 + t) * math.exp(-t), rel=1e-13)

    def test_uniform_edges(self):
        d = build(Uniform(0.0, 2.0))
        assert d.survival(2.0) == 0.0
        assert d.survival(0.0) == 1.0

    def test_erlang_survival(self):
        d = build(Erlang(2, 2.0))
        assert d.survival(1.0) == pytest.approx(3 * math.exp(-2.0), rel=1e-14)


class TestMeans:
    def test_exponential(self):
        assert build(Exponential(2.0)).mean == pytest.approx(0.5, abs=1e-14)

    def test_erlang(self):
        assert build(Erlang(2, 2.0)).mean == pytest.approx(1.0, abs=1e-14)

    def test_pareto(self):
        # a b / (a - 1)
        assert build(Pareto(2.0, 1.0)).mean == pytest.approx(2.0, abs=1e-12)

    def test_weibull(self):
        d = build(Weibull(0.5, 1.0))
        assert d.mean == pytest.approx(gamma_fn(3.0), rel=1e-12)

    @pytest.mark.parametrize("spec", VALID_SPECS, ids=lambda s: s.family + repr(s)[:24])
    def test_mean_equals_tail_from_zero(self, spec):
        d = build(spec)
        cfg = QuadConfig(abs_tol=1e-14, rel_tol=1e-11)
        direct = integrate_tail(d.survival, 0.0, cfg) if math.isinf(d.support[1]) else (
            integrate_finite(d.survival, 0.0, d.support[1], cfg)
        )
        assert d.mean == pytest.approx(direct, rel=1e-8)


class TestDensity:
    def test_erlang_density(self):
        d = build(Erlang(2, 2.0))
        assert d.density(1.0) == pytest.approx(4 * math.exp(-2.0), rel=1e-14)
        assert d.density(1.0) == pytest.approx(0.5413411, abs=5e-8)

    def test_order_statistic_density(self):
        d = build(OrderStatistic(MrlLinear(1.0, 1.0), 2, 3))
        for t in (0.3, 1.0, 2.2):
            want = 12 * t * (t + 2) / (t + 1) ** 7
            assert d.density(t) == pytest.approx(want, rel=1e-12)

    def test_below_support_is_zero(self):
        d = build(Pareto(2.0, 1.0))
        assert d.density(0.5) == 0.0

    def test_numeric_survival_has_no_density(self):
        x = build(Weibull(1.7, 1.0))
        y = build(MrlPiecewise((), (PieceSqrtAffine(2.0, 2.0),)))
        from mrlai.ops import convolution

        c = convolution(x, y, closed_forms=False)
        # x carries a density so the convolution synthesises one; dropping
        # both densities must raise
        assert c.has_density
        bare = object.__new__(type(y))
        bare.__dict__.update(y.__dict__)
        bare._density = None
        with pytest.raises(UnsupportedCapability):
            convolution(bare, bare, closed_forms=False)

    @pytest.mark.parametrize(
        "spec",
        [s for s in VALID_SPECS if not isinstance(s, (Weibull,))],
        ids=lambda s: s.family + repr(s)[:24],
    )
    def test_density_integrates_to_one(self, spec):
        d = build(spec)
        if not d.has_density:
            pytest.skip("no density")
        s0, s1 = d.support
        if math.isinf(s1):
            total = integrate_tail(d.density, s0)
        else:
            total = integrate_finite(d.density, s0, s1)
        assert total == pytest.approx(1.0, rel=1e-8)

    @pytest.mark.parametrize(
        "spec", [Erlang(2, 2.0), MrlLinear(1.0, 8.0), MrlReciprocalLinear(1.0, 1.0)]
    )
    def test_density_matches_survival_slope(self, spec):
        d = build(spec)
        h = 1e-6
        for t in (0.4, 1.1, 2.3):
            slope = (d.survival(t - h) - d.survival(t + h)) / (2 * h)
            assert d.density(t) == pytest.approx(slope, rel=1e-5)


class TestMonotoneSurvival:
    @pytest.mark.parametrize("spec", VALID_SPECS, ids=lambda s: s.family + repr(s)[:24])
    def test_survival_non_increasing(self, spec):
        d = build(spec)
        rng = random.Random(20240811)
        hi = d.support[1]
        span = min(hi, d.mean * 12.0)
        for _ in range(10_000):
            t1 = rng.uniform(0.0, span)
            t2 = rng.uniform(0.0, span)
            if t1 > t2:
                t1, t2 = t2, t1
            assert d.survival(t1) >= d.survival(t2) - 1e-12
            assert -1e-12 <= d.survival(t1) <= 1.0 + 1e-12


class TestWeibullTailOracle:
    def test_tail_matches_incomplete_gamma(self):
        # int_t^inf exp(-(x/b)^a) dx = (b/a) * Gamma(1/a) * gammaincc(1/a, (t/b)^a)
        rng = random.Random(7)
        for _ in range(20):
            a = rng.uniform(0.6, 3.0)
            b = rng.uniform(0.5, 2.0)
            t = rng.uniform(0.0, 3.0 * b)
            d = build(Weibull(a, b))
            want = (b / a) * gamma_fn(1 / a) * gammaincc(1 / a, (t / b) ** a)
            assert d.tail(t) == pytest.approx(want, rel=1e-8)


class TestClosedTails:
    @pytest.mark.parametrize("spec", VALID_SPECS, ids=lambda s: s.family + repr(s)[:24])
    def test_tail_matches_direct_quadrature(self, spec):
        # relative accuracy on small tails needs a tight absolute floor
        cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-11)
        d = build(spec)
        rng = random.Random(sum(spec.family.encode()))
        s0, s1 = d.support
        span = s1 * 0.95 if math.isfinite(s1) else 4.0 * d.mean
        for _ in range(20):
            t = rng.uniform(0.0, span)
            if math.isfinite(s1):
                want = integrate_finite(d.survival, t, s1, cfg)
            else:
                want = integrate_tail(d.survival, t, cfg)
            assert d.tail(t) == pytest.approx(want, rel=1e-8, abs=1e-13)


class TestValidation:
    def test_mixture_weights_accepted(self):
        spec = Mixture((0.2, 0.8), (MrlLinear(1, 8), MrlLinear(1, 0.1)))
        validate(spec)

    def test_mixture_weights_rejected(self):
        with pytest.raises(SpecError, match="weights"):
            validate(Mixture((0.5, 0.6), (Exponential(1), Exponential(2))))

    def test_pareto_infinite_mean_rejected(self):
        with pytest.raises(SpecError, match="shape"):
            validate(Pareto(1.0, 1.0))

    def test_exponential_rate(self):
        with pytest.raises(SpecError, match="rate"):
            validate(Exponential(0.0))

    def test_erlang_k(self):
        with pytest.raises(SpecError, match="k"):
            validate(Erlang(0, 1.0))

    def test_uniform_bounds(self):
        with pytest.raises(SpecError):
            validate(Uniform(2.0, 1.0))
        with pytest.raises(SpecError):
            validate(Uniform(-1.0, 1.0))

    def test_order_statistic_k_range(self):
        with pytest.raises(SpecError, match="k"):
            validate(OrderStatistic(Exponential(1.0), 4, 3))

    def test_piecewise_needs_positive_mrl(self):
        with pytest.raises(SpecError, match="positive"):
            validate(MrlPiecewise((1.0,), (PieceLinear(0.5, 0.0), PieceLinear(0.5, -1.0))))

    def test_nested_scaled_flattened(self):
        spec = validate(Scaled(Scaled(Exponential(1.0), 2.0), 3.0))
        assert isinstance(spec.base, Exponential)
        assert spec.factor == pytest.approx(6.0)

    def test_mixture_order_is_deterministic(self):
        a = Mixture((0.2, 0.8), (MrlLinear(1, 8), MrlLinear(1, 0.1)))
        b = Mixture((0.8, 0.2), (MrlLinear(1, 0.1), MrlLinear(1, 8)))
        assert validate(a) == validate(b)


class TestJsonGrammar:
    def test_documented_example(self):
        text = (
            '{"family":"mixture","weights":[0.2,0.8],"components":'
            '[{"family":"mrl_linear","a":1,"b":8},{"family":"mrl_linear","a":1,"b":0.1}]}'
        )
        spec = load_spec(text)
        assert isinstance(spec, Mixture)
        assert sum(spec.weights) == pytest.approx(1.0)

    def test_unknown_keys_rejected(self):
        with pytest.raises(SpecError, match="unknown keys"):
            load_spec('{"family":"exponential","rate":1,"shape":3}')

    def test_unknown_family_rejected(self):
        with pytest.raises(SpecError, match="family"):
            load_spec('{"family":"zeta","s":2}')

    def test_missing_keys_rejected(self):
        with pytest.raises(SpecError, match="missing"):
            load_spec('{"family":"weibull","shape":2}')

    @pytest.mark.parametrize("spec", VALID_SPECS, ids=lambda s: s.family + repr(s)[:24])
    def test_round_trip(self, spec):
        normalised = validate(spec)
        again = validate(spec_from_dict(json.loads(dump_spec(normalised))))
        assert again == normalised

    def test_composite_round_trip(self):
        spec = validate(
            Mixture(
                (0.3, 0.7),
                (OrderStatistic(Uniform(0.0, 1.0), 2, 3), Scaled(Erlang(2, 2.0), 1.5)),
            )
        )
        again = load_spec(dump_spec(spec))
        assert again == spec
