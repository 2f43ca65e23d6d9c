"""
Named presets regenerating the published figure data.

Sweeps use the caption's term count ("3-terms" is M = 2) and take alpha -> 1
as ALPHA_NEAR_ONE. Reference tables list alpha -> 1 as the same value.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from django.db import models

from fracham.conf import ham_setting
from fracham.exceptions import ConfigurationError


class FigureKind(models.TextChoices):
    HSWEEP = 'hsweep', 'Partial sums for several hbar'
    ALPHA_TABLE = 'alpha_table', 'Reference solution for several alpha'


@dataclass(frozen=True)
class FigurePreset:
    name: str
    kind: str
    description: str
    payload: Dict[str, object] = field(default_factory=dict)
    hbar_values: Tuple[float, ...] = ()
    alpha_values: Tuple[float, ...] = ()

    def resolved_alphas(self) -> Tuple[float, ...]:
        # None stands for alpha -> 1.
        near_one = float(ham_setting('ALPHA_NEAR_ONE', 0.999))
        return tuple(near_one if alpha is None else alpha for alpha in self.alpha_values)


FIGURES: Dict[str, FigurePreset] = {
    preset.name: preset
    for preset in (
        FigurePreset(
            name='fig1',
            kind=FigureKind.HSWEEP,
            description='diffusion, u(0.1, t), 3 terms, psi(t) = t, a = 0',
            payload={'problem': 'diffusion', 'psi': 'identity', 'a': 0.0,
                     'm_terms': 2, 'probe_x': 0.1},
            hbar_values=(-1.0, -0.6, -0.8, -1.3),
        ),
        FigurePreset(
            name='fig2',
            kind=FigureKind.ALPHA_TABLE,
            description='diffusion, exact u(0.1, t), psi(t) = t, a = 0',
            # E_0.5 at |z| near 9 needs several hundred series terms.
            payload={'problem': 'diffusion', 'psi': 'identity', 'a': 0.0, 'probe_x': 0.1,
                     'ml_max_terms': 800},
            alpha_values=(None, 0.9, 0.5),
        ),
        FigurePreset(
            name='fig3',
            kind=FigureKind.HSWEEP,
            description='diffusion, u(0.1, t), 3 terms, psi(t) = ln t, a = 1',
            payload={'problem': 'diffusion', 'psi': 'log', 'a': 1.0,
                     'm_terms': 2, 'probe_x': 0.1},
            hbar_values=(-1.0, -0.7, -1.2),
        ),
        FigurePreset(
            name='fig4',
            kind=FigureKind.HSWEEP,
            description='gas dynamics, u(0.2, t), 4 terms, psi(t) = t, a = 0',
            payload={'problem': 'gasdyn', 'psi': 'identity', 'a': 0.0,
                     'm_terms': 3, 'probe_x': 0.2},
            hbar_values=(-1.0, -0.6, -1.4),
        ),
        FigurePreset(
            name='fig5',
            kind=FigureKind.ALPHA_TABLE,
            description='gas dynamics, exact u(0.2, t), psi(t) = t, a = 0',
            payload={'problem': 'gasdyn', 'psi': 'identity', 'a': 0.0, 'probe_x': 0.2},
            alpha_values=(None, 0.75, 0.4),
        ),
        FigurePreset(
            name='fig6',
            kind=FigureKind.HSWEEP,
            description='gas dynamics, u(0.2, t), 4 terms, psi(t) = ln t, a = 1',
            payload={'problem': 'gasdyn', 'psi': 'log', 'a': 1.0,
                     'm_terms': 3, 'probe_x': 0.2},
            hbar_values=(-1.0, -2.0, -0.5),
        ),
        FigurePreset(
            name='fig7',
            kind=FigureKind.HSWEEP,
            description='KdV, u(1, t), 3 terms, psi(t) = t, a = 0',
            payload={'problem': 'kdv', 'psi': 'identity', 'a': 0.0, 'm_terms': 2, 'probe_x': 1.0},
            hbar_values=(-1.0, -2.0, -0.8),
        ),
        FigurePreset(
            name='fig8',
            kind=FigureKind.ALPHA_TABLE,
            description='KdV, second-order u(1, t), psi(t) = t, a = 0',
            payload={'problem': 'kdv', 'psi': 'identity', 'a': 0.0, 'probe_x': 1.0},
            alpha_values=(None, 0.8, 0.6),
        ),
        FigurePreset(
            name='fig9',
            kind=FigureKind.ALPHA_TABLE,
            description='KdV, second-order u(1, t), psi(t) = ln t, a = 1',
            payload={'problem': 'kdv', 'psi': 'log', 'a': 1.0, 'probe_x': 1.0},
            alpha_values=(None, 0.7, 0.6),
        ),
    )
}


def get_figure(name: str) -> FigurePreset:
    try:
        return FIGURES[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown figure '{name}'; expected one of {', '.join(FIGURES)}"
        ) from None
