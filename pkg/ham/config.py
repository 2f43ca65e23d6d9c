import logging
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np
from django.db import models

from fracham.conf import ham_setting
from fracham.exceptions import ConfigurationError
from fracseries.grid import GridSpec
from special.psi import PsiFunction

logger = logging.getLogger(__name__)

# The auxiliary function H(x, t) is fixed to 1 in every application.
AUX_H = 1.0


class StepForm(models.TextChoices):
    """How the m-th order deformation equation is solved for u_m"""
    APPLICATION = 'application', 'Caputo term absorbed into (chi_m + hbar)'
    GENERAL = 'general', 'chi_m form with the lattice Caputo derivative'


@dataclass(frozen=True)
class HamConfig:
    """Parameters of one HAM solve"""

    alpha: float
    psi: PsiFunction
    a: float
    hbar: float
    m_terms: int
    grid: GridSpec
    step_form: str = StepForm.APPLICATION
    ml_max_terms: Optional[int] = None
    aux_h: float = field(default=AUX_H, init=False)

    def __post_init__(self):
        if not (np.isfinite(self.alpha) and 0 < self.alpha < 1):
            raise ConfigurationError(f'alpha must lie strictly inside (0, 1), got {self.alpha}')
        if not np.isfinite(self.hbar) or self.hbar == 0:
            raise ConfigurationError('hbar must be a non-zero finite number')
        if int(self.m_terms) != self.m_terms or self.m_terms < 0:
            raise ConfigurationError(
                f'term count must be a non-negative integer, got {self.m_terms}'
            )
        if not self.psi.admits(self.a):
            raise ConfigurationError(f'a={self.a} outside the domain of psi={self.psi.label}')
        if self.step_form not in StepForm.values:
            raise ConfigurationError(f'unknown step form {self.step_form!r}')

    @property
    def k_max(self) -> int:
        """Highest lattice index carried by the series algebra"""
        return self.m_terms + int(ham_setting('LATTICE_HEADROOM', 2))

    def with_hbar(self, hbar: float) -> 'HamConfig':
        return replace(self, hbar=hbar)
