"""
Table builders behind the CLI commands.

Every table is a pandas DataFrame with a leading ``t`` column, written as CSV
with the shortest round-trip float representation, LF line endings and empty
cells for missing values.
"""

import logging
import os
import tempfile
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from fracseries.series import series_values
from ham.engine import equation_residual, run_ham, term_ratio_diagnostic, term_values
from ham.services import SolveService
from problems.definitions import get_problem
from problems.references import ReferenceFrame
from special.psi import get_psi

from .runconfig import STDOUT, RunConfig

logger = logging.getLogger(__name__)


def hbar_column(prefix: str, hbar: float) -> str:
    return f'{prefix}[hbar={float(hbar)!r}]'


def alpha_column(alpha: float) -> str:
    return f'reference_value[alpha={float(alpha)!r}]'


class ExperimentService:
    """Builds the solve, hbar-sweep, alpha-table and diagnostic outputs of one run"""

    def __init__(self, run: RunConfig, workers: Optional[int] = None):
        self.run = run
        self.problem = get_problem(run.problem)
        self.cfg = run.to_ham_config()
        self.solver = SolveService(self.problem, self.cfg, workers=workers)
        self.ts = run.t_samples()

    def solve(self) -> pd.DataFrame:
        values = self.solver.profile(self.run.probe_x, self.ts)
        reference = self.solver.reference_profile(self.run.probe_x, self.ts)
        logger.info(
            'Solved %s at x=%s over %d instants', self.problem.name, self.run.probe_x, len(self.ts)
        )
        return pd.DataFrame({
            't': self.ts,
            'ham_value': values,
            'reference_value': reference,
            'abs_error': np.abs(values - reference),
        })

    def hbar_sweep(self, hbar_values: Sequence[float]) -> pd.DataFrame:
        reference = self.solver.reference_profile(self.run.probe_x, self.ts)
        columns = {'t': self.ts, 'reference_value': reference}
        for hbar, values in self.solver.hbar_profiles(hbar_values, self.run.probe_x, self.ts):
            columns[hbar_column('ham_value', hbar)] = values
            columns[hbar_column('abs_error', hbar)] = np.abs(values - reference)
        return pd.DataFrame(columns)

    def alpha_table(self, alpha_values: Sequence[float]) -> pd.DataFrame:
        """Reference solution per alpha; alpha = 1 is evaluated in closed form"""
        if not alpha_values:
            return pd.DataFrame({'t': pd.Series(dtype=float)})
        columns = {'t': self.ts}
        psi = get_psi(self.run.psi)
        for alpha in alpha_values:
            frame = ReferenceFrame(
                alpha=float(alpha), psi=psi, a=self.run.a, ml_max_terms=self.run.ml_max_terms
            )
            columns[alpha_column(alpha)] = self.solver.reference_profile(
                self.run.probe_x, self.ts, frame
            )
        return pd.DataFrame(columns)

    def diagnose(self) -> dict:
        """Per-term probe values, successive term ratios and the equation residual"""
        state = run_ham(self.problem, self.cfg)
        probe = (self.run.probe_x, self.run.t_max)
        residual = equation_residual(state, self.cfg)
        residual_values = series_values(residual, self.run.probe_x, self.ts)
        return {
            'probe': probe,
            'terms': term_values(state, probe),
            'ratios': term_ratio_diagnostic(state, probe),
            'residual_max': float(np.max(np.abs(residual_values))),
        }


def render_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator='\n')


def write_csv_atomic(frame: pd.DataFrame, path: str, stream=None) -> Optional[Path]:
    """
    Write ``frame`` to ``path`` through a temporary file and a rename.

    ``path`` equal to '-' sends the CSV to ``stream`` instead.
    """
    text = render_csv(frame)
    if path == STDOUT:
        stream.write(text)
        return None
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    handle = tempfile.NamedTemporaryFile(
        mode='w', dir=target.parent, prefix=f'.{target.name}.', suffix='.tmp',
        delete=False, newline='', encoding='utf-8',
    )
    try:
        with handle:
            handle.write(text)
        os.replace(handle.name, target)
    except BaseException:
        Path(handle.name).unlink(missing_ok=True)
        raise
    logger.info('Wrote %d rows to %s', len(frame), target)
    return target
