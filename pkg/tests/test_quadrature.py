"""Quadrature tests: analytic integrals, Beta-family error honesty, linearity."""
import cmath
import math

import pytest

from lerchkit import (ConvergenceError, DomainError, integrate_tail,
                      integrate_unit_singular)
from lerchkit.quadrature import _ts_level


def beta_exact(a, b):
    # oracle via log-gamma from the standard library (real arguments only)
    return math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))


class TestUnitSingular:
    def test_inverse_sqrt(self):
        res = integrate_unit_singular(lambda x, xc: x ** -0.5 + 0j, alpha=0.5)
        assert abs(res.value - 2.0) <= 1e-13

    def test_constant(self):
        res = integrate_unit_singular(lambda x, xc: 1.0 + 0j, alpha=1.0)
        assert abs(res.value - 1.0) <= 1e-13
        assert res.nodes_used >= 1

    def test_beta_half_half(self):
        res = integrate_unit_singular(lambda x, xc: (x * xc) ** -0.5 + 0j, alpha=0.5)
        assert abs(res.value - math.pi) <= 1e-12

    def test_alpha_must_be_positive(self):
        with pytest.raises(DomainError):
            integrate_unit_singular(lambda x, xc: 1.0 + 0j, alpha=0.0)

    @pytest.mark.parametrize("a", [0.3, 0.5, 1.0, 2.0])
    @pytest.mark.parametrize("b", [0.3, 0.5, 1.0, 2.0])
    def test_estimate_bounds_true_error_on_beta_family(self, a, b):
        res = integrate_unit_singular(
            lambda x, xc: x ** (a - 1) * xc ** (b - 1) + 0j, alpha=a)
        true_err = abs(res.value - beta_exact(a, b))
        # the estimate (plus a rounding floor) must bound the true error
        assert true_err <= max(res.est_error, 4e-15 * abs(res.value))

    def test_linearity(self):
        base = integrate_unit_singular(lambda x, xc: x ** -0.5 + 0j, alpha=0.5)
        for c in (2.0, 1j, -3 + 4j):
            scaled = integrate_unit_singular(lambda x, xc: c * x ** -0.5, alpha=0.5)
            assert abs(scaled.value - c * base.value) <= 1e-14 * abs(c * base.value)

    def test_refinement_monotonicity(self):
        # successive level differences shrink on the Beta family
        for (a, b) in [(0.5, 0.5), (0.3, 2.0), (2.0, 0.3), (1.0, 1.0)]:
            f = lambda x, xc: x ** (a - 1) * xc ** (b - 1) + 0j
            levels = []
            h = 0.5
            for _ in range(4):
                levels.append(h * sum(w * f(x, xc) for x, xc, w in _ts_level(h)))
                h /= 2
            d1 = abs(levels[1] - levels[0])
            d2 = abs(levels[2] - levels[1])
            d3 = abs(levels[3] - levels[2])
            assert d3 <= d2 <= d1 or d3 <= 1e-14


class TestTail:
    def test_exponential(self):
        res = integrate_tail(lambda t: cmath.exp(-t), decay=1.0)
        assert abs(res.value - math.exp(-1)) <= 1e-13

    def test_t_times_exp(self):
        # integration by parts: (1/2) e^-2 + (1/4) e^-2 = (3/4) e^-2
        res = integrate_tail(lambda t: t * cmath.exp(-2 * t), decay=2.0)
        assert abs(res.value - 0.75 * math.exp(-2)) <= 1e-13

    def test_oscillatory_decaying(self):
        # antiderivative of e^-t cos t is (e^-t/2)(sin t - cos t)
        expected = (math.cos(1) - math.sin(1)) / (2 * math.e)
        res = integrate_tail(lambda t: cmath.exp(-t) * cmath.cos(t), decay=1.0)
        assert abs(res.value - expected) <= 1e-13

    def test_decay_must_be_positive(self):
        with pytest.raises(DomainError):
            integrate_tail(lambda t: cmath.exp(-t), decay=0.0)

    def test_linearity(self):
        base = integrate_tail(lambda t: cmath.exp(-t), decay=1.0)
        for c in (2.0, 1j, -3 + 4j):
            scaled = integrate_tail(lambda t: c * cmath.exp(-t), decay=1.0)
            assert abs(scaled.value - c * base.value) <= 1e-14 * abs(c * base.value)

    def test_estimate_includes_truncation(self):
        res = integrate_tail(lambda t: cmath.exp(-t), decay=1.0)
        assert res.est_error > 0
