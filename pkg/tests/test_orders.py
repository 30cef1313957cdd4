"""Stochastic-order checks: examples, axioms, and the ratio equivalence."""

import math
import random

import pytest

from mrlai.ageing import Convention, mrl, profile
from mrlai.classify import Grid
from mrlai.distributions import (
    Erlang,
    Exponential,
    MrlExponential,
    MrlLinear,
    MrlPiecewise,
    MrlReciprocalLinear,
    Pareto,
    PieceSqrtAffine,
    Weibull,
    build,
)
from mrlai.errors import UnsupportedCapability
from mrlai.ops import parallel
from mrlai.orders import (
    Relation,
    check_scale_preservation,
    icx_order,
    linear_mrl_order,
    lr_order,
    mrl_order,
    mrlai_order,
    ratio_test,
    sufficient_conditions,
    vrl_order,
    weibull_rule,
)

ZERO = Convention.ZERO
FORMAL = Convention.FORMAL


def ts(lo, hi, n=64):
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


class TestMrlaiOrder:
    def test_exponential_below_pareto(self):
        X, Y = build(Exponential(0.5)), build(Pareto(2.0, 1.0))
        v = mrlai_order(X, Y, ts(0.1, 30.0), FORMAL)
        assert v.relation is Relation.HOLDS

    def test_reflexive(self):
        X = build(Erlang(2, 2.0))
        assert mrlai_order(X, X, ts(0.1, 10.0)).relation is Relation.HOLDS

    def test_erlang_pair_fails_with_witness(self):
        X, Y = build(Erlang(2, 3.0)), build(Erlang(2, 2.0))
        v = mrlai_order(X, Y, ts(0.05, 8.0, 100))
        assert v.relation is Relation.FAILS
        assert v.witness is not None
        assert v.witness.lhs > v.witness.rhs

    def test_inconclusive_on_degenerate_grid(self):
        X = build(Exponential(1.0))
        assert mrlai_order(X, X, [1.0]).relation is Relation.INCONCLUSIVE


class TestRatioTest:
    def test_printed_ratio_values(self):
        X, Y = build(Erlang(2, 3.0)), build(Erlang(2, 2.0))
        gx = [v * t for v, t in zip(profile(X, [0.1, 1.5, 5.0]).mu_avg, [0.1, 1.5, 5.0])]
        gy = [v * t for v, t in zip(profile(Y, [0.1, 1.5, 5.0]).mu_avg, [0.1, 1.5, 5.0])]
        got = [a / b for a, b in zip(gx, gy)]
        assert got[0] == pytest.approx(0.6537420, abs=5e-7)
        assert got[1] == pytest.approx(0.6287006, abs=5e-7)
        assert got[2] == pytest.approx(0.6371185, abs=5e-7)
        assert ratio_test(X, Y, ts(0.05, 8.0, 100)).relation is Relation.FAILS

    def test_self_ratio_holds(self):
        X = build(Erlang(2, 2.0))
        assert ratio_test(X, X, ts(0.1, 10.0)).relation is Relation.HOLDS

    def test_exponential_vs_pareto_holds(self):
        X, Y = build(Exponential(0.5)), build(Pareto(2.0, 1.0))
        assert ratio_test(X, Y, ts(0.1, 30.0), FORMAL).relation is Relation.HOLDS


class TestEquivalence:
    """The pointwise-intensity check and the running-integral ratio check
    must return identical relations."""

    CORPUS_PAIRS = [
        (Exponential(0.5), Pareto(2.0, 1.0), FORMAL, (0.1, 30.0)),
        (Exponential(2.0), Pareto(3.0, 1.0), FORMAL, (0.1, 20.0)),
        (Erlang(2, 3.0), Erlang(2, 2.0), ZERO, (0.05, 8.0)),
        (Erlang(2, 1.0), Exponential(2.0), ZERO, (0.05, 20.0)),
        (MrlPiecewise((), (PieceSqrtAffine(2.0, 2.0),)), Pareto(2.0, 1.0), FORMAL, (0.1, 50.0)),
    ]

    @pytest.mark.parametrize("i", range(len(CORPUS_PAIRS)))
    def test_on_corpus_pairs(self, i):
        sx, sy, conv, (lo, hi) = self.CORPUS_PAIRS[i]
        X, Y = build(sx), build(sy)
        grid = ts(lo, hi, 96)
        assert mrlai_order(X, Y, grid, conv).relation == ratio_test(X, Y, grid, conv).relation

    def _random_spec(self, rng):
        kind = rng.randrange(7)
        if kind == 0:
            return Exponential(rng.uniform(0.3, 3.0))
        if kind == 1:
            return Erlang(rng.randint(1, 3), rng.uniform(0.5, 3.0))
        if kind == 2:
            return Weibull(rng.uniform(0.7, 2.5), rng.uniform(0.5, 2.0))
        if kind == 3:
            return MrlLinear(rng.uniform(0.5, 2.0), rng.uniform(0.0, 3.0))
        if kind == 4:
            a = rng.uniform(0.8, 1.5)
            return MrlReciprocalLinear(a, rng.uniform(0.2, 0.9) * a * a)
        if kind == 5:
            return MrlExponential(rng.uniform(-0.3, 0.4), -rng.uniform(0.05, 0.3))
        return Pareto(rng.uniform(2.2, 4.0), rng.uniform(0.5, 1.5))

    def test_on_fifty_random_pairs(self):
        rng = random.Random(20240812)
        agreements = 0
        while agreements < 50:
            sx, sy = self._random_spec(rng), self._random_spec(rng)
            X, Y = build(sx), build(sy)
            lo = max(0.08, X.support[0] * 1.05, Y.support[0] * 1.05)
            hi = lo + 10.0
            grid = ts(lo, hi, 64)
            a = mrlai_order(X, Y, grid)
            b = ratio_test(X, Y, grid)
            assert a.relation == b.relation, f"{sx} vs {sy}: {a} != {b}"
            agreements += 1


class TestAxioms:
    def test_reflexivity_across_families(self):
        for spec in (Exponential(1.0), Erlang(2, 2.0), MrlLinear(1, 1)):
            X = build(spec)
            assert mrlai_order(X, X, ts(0.1, 9.0)).relation is Relation.HOLDS

    def test_transitivity(self):
        X, Y, Z = build(Erlang(2, 2.0)), build(Exponential(1.0)), build(MrlLinear(1, 1))
        grid = ts(0.05, 12.0, 96)
        assert mrlai_order(X, Y, grid).relation is Relation.HOLDS
        assert mrlai_order(Y, Z, grid).relation is Relation.HOLDS
        assert mrlai_order(X, Z, grid).relation is Relation.HOLDS

    def test_antisymmetry_gives_proportional_mrl(self):
        X, Y = build(Exponential(1.0)), build(Exponential(2.0))
        grid = ts(0.1, 10.0, 64)
        assert mrlai_order(X, Y, grid).relation is Relation.HOLDS
        assert mrlai_order(Y, X, grid).relation is Relation.HOLDS
        ratios = [mrl(X, t) / mrl(Y, t) for t in grid]
        assert max(ratios) - min(ratios) <= 1e-6 * abs(ratios[0])


class TestComparisonOrders:
    def test_lr_erlang_pair_holds(self):
        X, Y = build(Erlang(2, 3.0)), build(Erlang(2, 2.0))
        assert lr_order(X, Y, ts(0.05, 20.0, 100)).relation is Relation.HOLDS

    def test_lr_self_holds(self):
        X = build(Erlang(2, 2.0))
        assert lr_order(X, X, ts(0.1, 8.0)).relation is Relation.HOLDS

    def test_lr_exponentials_fails(self):
        X, Y = build(Exponential(1.0)), build(Exponential(2.0))
        # f_X/f_Y grows like e^t
        assert lr_order(X, Y, ts(0.1, 8.0)).relation is Relation.FAILS

    def test_lr_needs_densities(self):
        from mrlai.ops import convolution

        x = build(Weibull(1.5, 1.0))
        c = convolution(x, x, closed_forms=False)
        bare = type(c)(c.spec, c._survival, c.support)
        with pytest.raises(UnsupportedCapability):
            lr_order(bare, bare, ts(0.1, 2.0))

    def test_icx_printed_counterexample(self):
        X, Y = build(Exponential(0.5)), build(Pareto(2.0, 1.0))
        v = icx_order(X, Y, ts(0.1, 30.0, 100), FORMAL)
        assert v.relation is Relation.FAILS
        assert 0.5 < v.witness.t < 3.0
        # the printed comparison point
        assert X.tail(1.5) == pytest.approx(0.9447331, abs=5e-8)
        assert Y.formal.tail(1.5) == pytest.approx(2.0 / 3.0, rel=1e-12)

    def test_icx_self_and_dominated(self):
        X, Y = build(Exponential(2.0)), build(Exponential(1.0))
        assert icx_order(X, X, ts(0.1, 10.0)).relation is Relation.HOLDS
        assert icx_order(X, Y, ts(0.1, 10.0)).relation is Relation.HOLDS

    def test_vrl_printed_counterexample(self):
        X, Y = build(Exponential(2.0)), build(Pareto(3.0, 1.0))
        v = vrl_order(X, Y, ts(0.05, 5.0), FORMAL)
        assert v.relation is Relation.FAILS

    def test_vrl_self_and_dominated(self):
        X, Y = build(Exponential(2.0)), build(Exponential(1.0))
        assert vrl_order(X, X, ts(0.1, 6.0, 32)).relation is Relation.HOLDS
        assert vrl_order(X, Y, ts(0.1, 6.0, 32)).relation is Relation.HOLDS

    def test_mrl_order_cases(self):
        X, Y = build(Exponential(2.0)), build(Exponential(1.0))
        assert mrl_order(X, X, ts(0.1, 10.0)).relation is Relation.HOLDS
        assert mrl_order(X, Y, ts(0.1, 10.0)).relation is Relation.HOLDS
        A, B = build(Exponential(0.5)), build(Pareto(2.0, 1.0))
        v = mrl_order(A, B, ts(0.1, 10.0, 100), FORMAL)
        assert v.relation is Relation.FAILS
        assert v.witness.t < 2.0  # constant 2 exceeds t below the crossing


class TestLinearMrlDeterminant:
    def test_ordered_pair_holds(self):
        assert linear_mrl_order(1.0, 0.1, 1.0, 8.0).relation is Relation.HOLDS

    def test_reversed_pair_fails(self):
        v = linear_mrl_order(1.0, 8.0, 1.0, 0.1)
        assert v.relation is Relation.FAILS
        assert v.witness is not None

    def test_equal_pair_holds(self):
        assert linear_mrl_order(1.0, 2.0, 1.0, 2.0).relation is Relation.HOLDS

    def test_agrees_with_grid_check(self):
        for (a, b, c, d) in [(1, 0.1, 1, 8), (1, 8, 1, 0.1), (2, 1, 1, 1), (1, 1, 2, 1)]:
            det = linear_mrl_order(a, b, c, d)
            X, Y = build(MrlLinear(a, b)), build(MrlLinear(c, d))
            grid_v = mrlai_order(X, Y, ts(0.05, 25.0, 96))
            assert det.relation == grid_v.relation


class TestSufficientConditions:
    def test_decreasing_vs_increasing_mrl(self):
        X, Y = build(Erlang(2, 2.0)), build(MrlLinear(1, 1))
        v = sufficient_conditions(X, Y, Grid(0.05, 12.0, 64))
        assert v is not None
        assert v.relation is Relation.HOLDS
        assert v.decided_by == "thm_4_3"
        assert mrlai_order(X, Y, ts(0.05, 12.0, 96)).relation is Relation.HOLDS

    def test_mrla_route(self):
        # mixture example: MRL of the gamma is decreasing, so is its average;
        # pick a pair where the MRL is non-monotone but the average is clean
        X = build(Erlang(3, 1.0))
        Y = build(MrlLinear(1.0, 2.0))
        v = sufficient_conditions(X, Y, Grid(0.05, 12.0, 64))
        assert v is not None and v.relation is Relation.HOLDS

    def test_no_shortcut_when_both_averages_increase(self):
        X = build(MrlPiecewise((), (PieceSqrtAffine(2.0, 2.0),)))
        Y = build(Pareto(2.0, 1.0))
        assert sufficient_conditions(X, Y, Grid(0.1, 50.0, 64), FORMAL) is None
        # ... and yet the order holds on the grid
        assert mrlai_order(X, Y, ts(0.1, 50.0, 96), FORMAL).relation is Relation.HOLDS

    def test_no_verdict_for_constants(self):
        X = build(Exponential(1.0))
        assert sufficient_conditions(X, X, Grid(0.1, 10.0, 64)) is None


class TestWeibullRule:
    def test_rule_is_one_directional(self):
        assert weibull_rule(1.0, 2.0).relation is Relation.HOLDS
        assert weibull_rule(2.0, 1.0) is None
        assert weibull_rule(1.5, 1.5).relation is Relation.HOLDS

    def test_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            weibull_rule(0.0, 1.0)


class TestParallelNonClosure:
    def test_componentwise_holds_systems_fail(self):
        x1, y1 = build(Erlang(2, 1.0)), build(Exponential(2.0))
        assert mrlai_order(x1, y1, ts(0.05, 20.0, 80)).relation is Relation.HOLDS
        xp, yp = parallel(x1, 2), parallel(y1, 2)
        grid = [math.exp(v) for v in ts(math.log(0.005), math.log(30.0), 90)]
        v = mrlai_order(xp, yp, grid)
        assert v.relation is Relation.FAILS
        assert v.witness.t < 1.0


class TestScalePreservation:
    def test_preserved_up_and_down(self):
        X, Y = build(Exponential(0.5)), build(Pareto(2.0, 1.0))
        for a in (3.0, 0.25):
            rep = check_scale_preservation(X, Y, a, ts(0.1, 30.0), FORMAL)
            assert rep.preserved
            assert rep.max_margin <= 1e-9

    def test_trivial_factor(self):
        X, Y = build(Erlang(2, 2.0)), build(Exponential(1.0))
        rep = check_scale_preservation(X, Y, 1.0, ts(0.05, 15.0))
        assert rep.preserved
