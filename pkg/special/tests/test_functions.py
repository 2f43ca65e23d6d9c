import math

import mpmath
import numpy as np
import pytest

from fracham.exceptions import DomainError, TruncationError
from special.functions import MLParams, gamma, mittag_leffler, psi_delta
from special.psi import IDENTITY, LOGARITHM


class TestGamma:
    @pytest.mark.parametrize('z', [0.3, 1.0, 1.7, 4.5, 20.25])
    def test_recurrence(self, z):
        assert gamma(z + 1) == pytest.approx(z * gamma(z), rel=1e-13)

    def test_recurrence_on_random_arguments(self):
        zs = np.random.default_rng(1).uniform(0.1, 30.0, size=1000)
        for z in zs:
            assert gamma(z + 1) == pytest.approx(z * gamma(z), rel=1e-11), z

    def test_known_values(self):
        assert gamma(1.0) == 1.0
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-15)
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    @pytest.mark.parametrize('z', [0.0, -1.5, float('nan'), float('inf'), 172.0])
    def test_rejects_out_of_domain(self, z):
        with pytest.raises(DomainError):
            gamma(z)


class TestMittagLeffler:
    @pytest.mark.parametrize('z', np.linspace(-5.0, 5.0, 41))
    def test_order_one_is_exp(self, z):
        assert mittag_leffler(1.0, z) == pytest.approx(math.exp(z), rel=1e-10)

    @pytest.mark.parametrize('z', np.linspace(0.0, 9.0, 37))
    def test_order_two_is_cosh_sqrt(self, z):
        assert mittag_leffler(2.0, z) == pytest.approx(math.cosh(math.sqrt(z)), rel=1e-10)

    @pytest.mark.parametrize('alpha', [0.3, 0.5, 0.999])
    def test_zero_argument(self, alpha):
        assert mittag_leffler(alpha, 0.0) == 1.0

    @pytest.mark.parametrize('z', [-4.0, -1.5, -0.4, 0.7, 2.0])
    def test_half_order_against_erfc_form(self, z):
        # E_1/2(z) = exp(z^2) erfc(-z)
        with mpmath.workdps(40):
            expected = float(mpmath.exp(mpmath.mpf(z) ** 2) * mpmath.erfc(-mpmath.mpf(z)))
        assert mittag_leffler(0.5, z) == pytest.approx(expected, rel=1e-12)

    def test_large_negative_argument_with_raised_budget(self):
        # (1 - pi^2) at t = 1, the far end of the alpha = 0.5 diffusion curve
        z = 1.0 - math.pi ** 2
        with mpmath.workdps(60):
            expected = float(mpmath.exp(mpmath.mpf(z) ** 2) * mpmath.erfc(-mpmath.mpf(z)))
        value = mittag_leffler(0.5, z, MLParams(alpha=0.5, max_terms=800))
        assert value == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize('alpha', [0.4, 0.8])
    def test_increasing_for_non_negative_argument(self, alpha):
        values = [mittag_leffler(alpha, z) for z in (0.0, 0.5, 1.0, 2.0, 3.0)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_truncation_error_reports_last_term(self):
        with pytest.raises(TruncationError) as excinfo:
            mittag_leffler(0.5, 3.0, MLParams(alpha=0.5, max_terms=5))
        assert excinfo.value.last_term > 0

    def test_params_must_match_alpha(self):
        with pytest.raises(DomainError):
            mittag_leffler(0.5, 1.0, MLParams(alpha=0.6))

    @pytest.mark.parametrize('kwargs', [{'alpha': 0.0}, {'alpha': 0.5, 'max_terms': 0},
                                        {'alpha': 0.5, 'tail_tol': -1.0}])
    def test_invalid_params(self, kwargs):
        with pytest.raises(DomainError):
            MLParams(**kwargs)

    def test_settings_supply_defaults(self, settings):
        params = MLParams.from_settings(0.7)
        assert params.max_terms == settings.HAM_SETTINGS['ML_MAX_TERMS']
        assert params.tail_tol == settings.HAM_SETTINGS['ML_TAIL_TOL']
        assert MLParams.from_settings(0.7, max_terms=50).max_terms == 50


class TestPsiDelta:
    def test_identity(self):
        assert psi_delta(IDENTITY, 0.5, 1.25) == pytest.approx(0.75)

    def test_logarithm(self):
        assert psi_delta(LOGARITHM, 1.0, math.e) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize('psi', [IDENTITY, LOGARITHM])
    @pytest.mark.parametrize('a', [0.5, 1.0, 2.0, 7.25])
    def test_zero_at_terminal(self, psi, a):
        assert psi_delta(psi, a, a) == 0.0

    def test_identity_zero_at_origin(self):
        assert psi_delta(IDENTITY, 0.0, 0.0) == 0.0

    def test_rejects_t_before_a(self):
        with pytest.raises(DomainError):
            psi_delta(IDENTITY, 1.0, 0.5)

    def test_rejects_terminal_outside_domain(self):
        with pytest.raises(DomainError):
            psi_delta(LOGARITHM, 0.0, 1.0)
