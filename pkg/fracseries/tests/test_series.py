import math

import numpy as np
import pytest

from fracham.exceptions import DomainError, IncompatibleSeriesError
from fracham.numerics import precision_context
from fracseries.grid import GridSpec, SpatialField
from fracseries.series import (
    FractionalPowerSeries,
    caputo_derivative,
    constant_series,
    frac_integral,
    leading_series,
    series_eval,
    series_product,
    series_profile,
    series_scale,
    series_spatial_derivative,
    series_truncate,
    series_values,
    zero_series,
)
from special.psi import IDENTITY, LOGARITHM

ALPHA = 0.6
GRID = GridSpec(0.0, 1.0, 21)
CTX = precision_context(40)


def field(fn):
    return SpatialField.from_function(GRID, fn, CTX)


def series(*fns, alpha=ALPHA, psi=IDENTITY, a=0.0):
    return FractionalPowerSeries(alpha, psi, a, tuple(field(fn) for fn in fns))


def random_series(rng, n_coeffs=None):
    """Quadratic-in-x coefficients with random weights in [-1, 1]"""
    if n_coeffs is None:
        n_coeffs = int(rng.integers(1, 5))
    weights = rng.uniform(-1.0, 1.0, size=(n_coeffs, 3))
    return series(*(
        lambda x, lib, w=row: float(w[0]) + float(w[1]) * x + float(w[2]) * x ** 2
        for row in weights
    ))


def assert_series_close(p, q, tol=1e-30):
    n = max(len(p), len(q))
    for k in range(n):
        assert (p.coefficient(k) - q.coefficient(k)).max_abs() < tol, f'coefficient {k}'


@pytest.fixture
def p():
    return series(lambda x, lib: lib.cos(x), lambda x, lib: x, lambda x, lib: 1 + x ** 2)


@pytest.fixture
def q():
    return series(lambda x, lib: lib.exp(-x), lambda x, lib: 2 - x)


@pytest.fixture
def r():
    return series(
        lambda x, lib: x ** 3, lambda x, lib: 0.5, lambda x, lib: lib.sin(x), lambda x, lib: -x
    )


class TestConstruction:
    def test_needs_a_coefficient(self):
        with pytest.raises(DomainError):
            FractionalPowerSeries(ALPHA, IDENTITY, 0.0, ())

    def test_alpha_range(self):
        with pytest.raises(DomainError):
            series(lambda x, lib: x, alpha=1.5)

    def test_zero_series(self):
        zero = zero_series(ALPHA, IDENTITY, 0.0, GRID, CTX)
        assert zero.is_zero
        assert zero.max_index == -1

    def test_max_index_ignores_trailing_zeros(self, p):
        padded = p._with(p.coeffs + (SpatialField.zeros(GRID, CTX),))
        assert padded.max_index == 2

    def test_truncate(self, r):
        assert len(series_truncate(r, 1)) == 2
        assert series_truncate(r, None) is r
        assert series_truncate(r, 10) is r
        with pytest.raises(DomainError):
            series_truncate(r, -1)

    def test_leading_series(self, p):
        lead = leading_series(p)
        assert len(lead) == 1
        assert lead.coeffs[0] is p.coeffs[0]


class TestAlgebra:
    @pytest.mark.parametrize('seed', range(20))
    def test_add_is_commutative(self, seed):
        rng = np.random.default_rng(seed)
        p, q = random_series(rng), random_series(rng)
        assert_series_close(p + q, q + p)

    def test_subtract_self(self, p):
        assert (p - p).is_zero

    @pytest.mark.parametrize('seed', range(20))
    def test_product_is_commutative(self, seed):
        rng = np.random.default_rng(seed)
        p, q = random_series(rng), random_series(rng)
        assert_series_close(series_product(p, q), series_product(q, p), tol=1e-35)

    @pytest.mark.parametrize('seed', range(20))
    def test_product_is_associative(self, seed):
        rng = np.random.default_rng(seed)
        p, q, r = random_series(rng), random_series(rng), random_series(rng)
        left = series_product(series_product(p, q), r)
        right = series_product(p, series_product(q, r))
        assert_series_close(left, right)

    def test_product_degree(self, p, q):
        assert len(series_product(p, q)) == len(p) + len(q) - 1
        assert len(series_product(p, q, k_max=1)) == 2

    def test_product_coefficients(self, p, q):
        product = p * q
        expected = p.coeffs[0] * q.coeffs[1] + p.coeffs[1] * q.coeffs[0]
        assert (product.coefficient(1) - expected).max_abs() < 1e-30

    def test_product_with_one_is_identity(self, p):
        one = constant_series(SpatialField.constant(GRID, 1, CTX), ALPHA, IDENTITY, 0.0)
        assert_series_close(p * one, p)

    def test_scale(self, p):
        assert_series_close(series_scale(p, 3), p + p + p)
        with pytest.raises(DomainError):
            series_scale(p, float('inf'))

    @pytest.mark.parametrize('other', [
        {'alpha': 0.5}, {'psi': LOGARITHM, 'a': 1.0}, {'a': 0.25},
    ])
    def test_incompatible_series(self, p, other):
        with pytest.raises(IncompatibleSeriesError):
            p + series(lambda x, lib: x, **other)

    def test_spatial_derivative_acts_per_coefficient(self):
        s = series(lambda x, lib: x ** 2, lambda x, lib: x ** 3)
        d = series_spatial_derivative(s, 1)
        assert_series_close(d, series(lambda x, lib: 2 * x, lambda x, lib: 3 * x ** 2), tol=1e-28)


class TestPowerRule:
    def test_integral_of_constant(self):
        one = constant_series(SpatialField.constant(GRID, 1, CTX), ALPHA, IDENTITY, 0.0)
        integral = frac_integral(one)
        assert integral.coefficient(0).is_zero
        assert float(integral.coefficient(1).values[0]) == pytest.approx(1 / math.gamma(ALPHA + 1))

    def test_integral_shifts_index(self, r):
        integral = frac_integral(r)
        assert len(integral) == len(r) + 1
        factor = math.gamma(2 * ALPHA + 1) / math.gamma(3 * ALPHA + 1)
        expected = r.coeffs[2].to_numpy() * factor
        assert integral.coefficient(3).to_numpy() == pytest.approx(expected, rel=1e-13)

    def test_double_integral_of_constant(self):
        one = constant_series(SpatialField.constant(GRID, 1, CTX), ALPHA, IDENTITY, 0.0)
        twice = frac_integral(frac_integral(one))
        assert twice.max_index == 2
        expected = 1 / math.gamma(2 * ALPHA + 1)
        assert float(twice.coefficient(2).values[0]) == pytest.approx(expected, rel=1e-14)

    def test_caputo_undoes_integral(self, p):
        assert_series_close(caputo_derivative(frac_integral(p)), p)

    def test_integral_of_caputo_reconstructs_increment(self, r):
        # I[D u] = u - u(x, a)
        reconstructed = frac_integral(caputo_derivative(r))
        assert_series_close(reconstructed, r - leading_series(r))

    def test_caputo_annihilates_constants(self, p):
        assert caputo_derivative(leading_series(p)).is_zero

    def test_caputo_power_factor(self):
        s = series(lambda x, lib: 0, lambda x, lib: 0, lambda x, lib: 1)
        derivative = caputo_derivative(s)
        factor = math.gamma(2 * ALPHA + 1) / math.gamma(ALPHA + 1)
        assert float(derivative.coefficient(1).values[0]) == pytest.approx(factor, rel=1e-14)


class TestEvaluation:
    def test_value_at_terminal_of_fixture(self, p):
        assert series_eval(p, 0.4, 0.0) == pytest.approx(math.cos(0.4), abs=1e-6)

    @pytest.mark.parametrize('seed', range(100))
    def test_value_at_terminal_is_leading_coefficient(self, seed):
        rng = np.random.default_rng(seed)
        s = random_series(rng)
        x = float(rng.uniform(0.0, 1.0))
        expected = series_profile(s, x)[0]
        assert series_eval(s, x, 0.0) == pytest.approx(expected, rel=1e-15)

    def test_power_sum(self, p):
        x, t = 0.5, 0.3
        delta = t ** ALPHA
        expected = math.cos(x) + x * delta + (1 + x ** 2) * delta ** 2
        assert series_eval(p, x, t) == pytest.approx(expected, abs=1e-6)

    def test_logarithmic_warp(self):
        s = series(lambda x, lib: 1, lambda x, lib: 2, psi=LOGARITHM, a=1.0)
        assert series_eval(s, 0.2, math.e) == pytest.approx(3.0, rel=1e-12)

    def test_values_match_pointwise_evaluation(self, p):
        ts = [0.0, 0.1, 0.7]
        values = series_values(p, 0.35, ts)
        assert list(values) == pytest.approx([series_eval(p, 0.35, t) for t in ts], rel=1e-12)

    def test_rejects_t_before_terminal(self, p):
        with pytest.raises(DomainError):
            series_eval(p, 0.5, -0.1)
