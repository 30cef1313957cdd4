"""Quadrature module tests.

Closed antiderivatives worked out by hand serve as oracles; scipy's
QUADPACK provides an independent second route for spot checks.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from mrlai.errors import Divergence, DomainError, NonConvergence
from mrlai.quadrature import (
    QuadConfig,
    cumulative_on_grid,
    integrate_finite,
    integrate_tail,
)

CFG = QuadConfig()


class TestFinite:
    def test_polynomial(self):
        assert integrate_finite(lambda x: x, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)

    def test_empty_interval(self):
        assert integrate_finite(lambda x: 1 / (x - 2), 2.0, 2.0) == 0.0

    def test_reversed_interval_rejected(self):
        with pytest.raises(ValueError):
            integrate_finite(lambda x: x, 1.0, 0.0)

    def test_rational_integrand(self):
        # antiderivative t/2 + ln(2t+1)/4, evaluated by hand
        got = integrate_finite(lambda u: (u + 1) / (2 * u + 1), 0.0, 0.5)
        assert got == pytest.approx(0.25 + math.log(2.0) / 4.0, rel=1e-10)
        assert got == pytest.approx(0.4232867951, abs=5e-11)

    def test_endpoint_singularity(self):
        # 1/sqrt(x) on (0, 1] integrates to 2; endpoints are never sampled
        got = integrate_finite(lambda x: 1.0 / math.sqrt(x), 0.0, 1.0)
        assert got == pytest.approx(2.0, rel=1e-8)

    def test_against_quadpack(self):
        funcs = [
            (lambda x: math.exp(-x) * math.sin(3 * x), 0.0, 5.0),
            (lambda x: 1.0 / (1.0 + x * x), -2.0, 7.0),
            (lambda x: x**3 - 2 * x + 1, -1.0, 2.5),
        ]
        for f, a, b in funcs:
            want, _ = quad(f, a, b, epsabs=1e-13, epsrel=1e-13)
            assert integrate_finite(f, a, b) == pytest.approx(want, rel=1e-9, abs=1e-11)

    def test_nan_is_hard_error(self):
        def bad(x):
            return math.nan if 0.4 < x < 0.6 else x

        with pytest.raises(DomainError):
            integrate_finite(bad, 0.0, 1.0)

    def test_max_depth_exhaustion(self):
        cfg = QuadConfig(abs_tol=1e-16, rel_tol=1e-16, max_depth=10)
        with pytest.raises(NonConvergence):
            integrate_finite(lambda x: 1.0 / math.sqrt(abs(x - 0.3)), 0.0, 1.0, cfg)

    def test_divergent_finite(self):
        with pytest.raises((Divergence, NonConvergence)):
            integrate_finite(lambda x: 1.0 / x, 0.0, 1.0)


class TestTail:
    def test_unit_exponential(self):
        assert integrate_tail(lambda u: math.exp(-u), 0.0) == pytest.approx(1.0, rel=1e-10)

    def test_power_law(self):
        assert integrate_tail(lambda u: u**-2.0, 1.0) == pytest.approx(1.0, rel=1e-10)

    def test_shifted_exponential(self):
        got = integrate_tail(lambda u: math.exp(-2 * u), 1.0)
        assert got == pytest.approx(math.exp(-2.0) / 2.0, rel=1e-10)

    def test_exponential_transform(self):
        cfg = QuadConfig(tail_transform="exponential")
        got = integrate_tail(lambda u: math.exp(-2 * u), 1.0, cfg)
        assert got == pytest.approx(math.exp(-2.0) / 2.0, rel=1e-9)

    def test_divergent_tail_flagged(self):
        with pytest.raises(Divergence):
            integrate_tail(lambda u: 1.0 / u, 1.0)

    @pytest.mark.parametrize("T", [0.5, 2.0, 7.3])
    def test_tail_consistency(self, T):
        f = lambda u: (1.0 + u) * math.exp(-u)
        whole = integrate_tail(f, 0.0)
        split = integrate_finite(f, 0.0, T) + integrate_tail(f, T)
        assert whole == pytest.approx(split, rel=1e-9)


class TestProperties:
    @given(
        st.floats(-3, 3),
        st.floats(-3, 3),
        st.floats(0.1, 4.0),
    )
    @settings(max_examples=40, deadline=None)
    def test_additivity(self, a, span1, span2):
        b = a + abs(span1)
        c = b + abs(span2)
        f = lambda x: math.cos(x) + 0.3 * x
        whole = integrate_finite(f, a, c)
        parts = integrate_finite(f, a, b) + integrate_finite(f, b, c)
        assert abs(whole - parts) <= 3 * CFG.abs_tol + 1e-9 * abs(whole)

    @given(st.floats(-5, 5), st.floats(-5, 5))
    @settings(max_examples=40, deadline=None)
    def test_linearity(self, alpha, beta):
        f = lambda x: math.exp(-x)
        g = lambda x: x * x
        combo = integrate_finite(lambda x: alpha * f(x) + beta * g(x), 0.0, 2.0)
        i_f = integrate_finite(f, 0.0, 2.0)
        i_g = integrate_finite(g, 0.0, 2.0)
        assert combo == pytest.approx(alpha * i_f + beta * i_g, abs=1e-8, rel=1e-9)


class TestCumulative:
    def test_constant(self):
        table = cumulative_on_grid(lambda u: 1.0, [1.0, 2.0, 3.0])
        assert list(table.values) == pytest.approx([1.0, 2.0, 3.0], abs=1e-12)

    def test_identity(self):
        table = cumulative_on_grid(lambda u: u, [1.0, 2.0])
        assert list(table.values) == pytest.approx([0.5, 2.0], abs=1e-11)

    def test_rational(self):
        anti = lambda t: t / 2.0 + math.log(2 * t + 1) / 4.0
        table = cumulative_on_grid(lambda u: (u + 1) / (2 * u + 1), [0.5, 2.0])
        assert table.values[0] == pytest.approx(anti(0.5), rel=1e-10)
        assert table.values[1] == pytest.approx(anti(2.0), rel=1e-10)
        assert table.values[1] == pytest.approx(1.4023595, abs=5e-8)

    def test_additivity_of_table(self):
        grid = [0.5, 1.0, 1.7, 2.4]
        f = lambda u: math.exp(-u) * (1 + u)
        table = cumulative_on_grid(f, grid)
        for i in range(len(grid) - 1):
            panel = integrate_finite(f, grid[i], grid[i + 1])
            assert table.values[i + 1] - table.values[i] == pytest.approx(
                panel, abs=2 * CFG.abs_tol
            )

    def test_bad_grid_rejected(self):
        with pytest.raises(ValueError):
            cumulative_on_grid(lambda u: 1.0, [1.0, 1.0])
        with pytest.raises(ValueError):
            cumulative_on_grid(lambda u: 1.0, [1.0, 0.5])
        with pytest.raises(ValueError):
            cumulative_on_grid(lambda u: 1.0, [])

    def test_error_carries_panel_index(self):
        def bad(u):
            return math.nan if u > 1.5 else 1.0

        with pytest.raises(DomainError, match="panel 1"):
            cumulative_on_grid(bad, [1.0, 2.0])


class TestConfig:
    def test_invalid_configs_rejected(self):
        with pytest.raises(ValueError):
            QuadConfig(abs_tol=0.0)
        with pytest.raises(ValueError):
            QuadConfig(rel_tol=-1.0)
        with pytest.raises(ValueError):
            QuadConfig(max_depth=5)
        with pytest.raises(ValueError):
            QuadConfig(tail_transform="cosine")
