"""
Run configuration of one CLI invocation and its flat key=value file form.
"""

import logging
import math
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Dict, Optional

import numpy as np
from decouple import Config, RepositoryEnv

from fracham.exceptions import ConfigurationError
from fracseries.grid import GridSpec
from ham.config import HamConfig, StepForm
from special.psi import get_psi

logger = logging.getLogger(__name__)

STDOUT = '-'


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters of a solve, sweep or table run"""

    problem: str
    alpha: float
    psi: str
    a: float
    hbar: float
    m_terms: int
    x_min: float
    x_max: float
    n_points: int
    probe_x: float
    t_min: float
    t_max: float
    n_samples: int
    output_path: str = STDOUT
    step_form: str = StepForm.APPLICATION
    ml_max_terms: Optional[int] = None

    def to_ham_config(self, **overrides) -> HamConfig:
        values = {
            'alpha': self.alpha,
            'psi': get_psi(self.psi),
            'a': self.a,
            'hbar': self.hbar,
            'm_terms': self.m_terms,
            'grid': GridSpec(self.x_min, self.x_max, self.n_points),
            'step_form': self.step_form,
            'ml_max_terms': self.ml_max_terms,
        }
        values.update(overrides)
        return HamConfig(**values)

    def t_samples(self) -> np.ndarray:
        """Sampling instants; a collapsed range yields the single instant t_min"""
        if self.n_samples == 1 or self.t_min == self.t_max:
            return np.array([self.t_min])
        return np.linspace(self.t_min, self.t_max, self.n_samples)

    def as_flat_dict(self) -> Dict[str, object]:
        data = asdict(self)
        data['step_form'] = str(self.step_form)
        return data


FIELD_NAMES = tuple(f.name for f in fields(RunConfig))


def _format_value(value) -> str:
    if isinstance(value, float):
        # repr is the shortest string that parses back to the same double.
        return repr(value)
    return str(value)


def write_config_file(run: RunConfig, path) -> Path:
    """
    Write ``run`` as KEY=value lines, one per field; unset optionals are omitted.
    """
    path = Path(path)
    lines = [
        f'{name}={_format_value(value)}'
        for name, value in run.as_flat_dict().items()
        if value is not None
    ]
    tmp = path.with_name(path.name + '.tmp')
    tmp.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    os.replace(tmp, path)
    logger.info('Wrote run configuration to %s', path)
    return path


def read_config_file(path) -> Dict[str, str]:
    """
    Raw values of a KEY=value file, keyed by RunConfig field.

    Environment variables of the same name take precedence over the file, as
    python-decouple resolves them.

    Raises:
        ConfigurationError: when the file is missing or names an unknown key
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigurationError(f'config file {path} does not exist')
    repository = RepositoryEnv(str(path))
    unknown = sorted(set(repository.data) - set(FIELD_NAMES))
    if unknown:
        raise ConfigurationError(f"unknown config keys in {path}: {', '.join(unknown)}")
    source = Config(repository)
    return {name: source(name) for name in FIELD_NAMES if name in repository.data}


def default_t_max(psi_name: str, a: float) -> float:
    """End of the default window, where psi(t) - psi(a) reaches 1"""
    if psi_name == 'log':
        return a * math.e
    return a + 1.0
