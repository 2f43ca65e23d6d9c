import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Optional, Sequence, Tuple

import numpy as np

from fracham.conf import ham_setting
from fracham.exceptions import DomainError
from fracseries.series import series_values

from .config import HamConfig
from .engine import assemble, run_ham

if TYPE_CHECKING:
    from problems.definitions import ProblemDef

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    """One hbar of an hbar sweep at a single probe"""

    hbar: float
    value: float
    reference: Optional[float]
    error: Optional[float]


class SolveService:
    """Runs HAM solves and evaluates their partial sums along a probe line"""

    def __init__(self, problem: 'ProblemDef', cfg: HamConfig, workers: Optional[int] = None):
        self.problem = problem
        self.cfg = cfg
        self.workers = workers or int(ham_setting('SWEEP_WORKERS', 4))

    def profile(self, x: float, ts: Sequence[float], cfg: Optional[HamConfig] = None) -> np.ndarray:
        """Partial sum u_0 + ... + u_M at (x, t) for every t"""
        cfg = cfg or self.cfg
        self._check_probe(x, cfg)
        state = run_ham(self.problem, cfg)
        return series_values(assemble(state), x, ts)

    def reference_profile(self, x: float, ts: Sequence[float], frame=None) -> np.ndarray:
        """Reference solution along the probe line, NaN when the problem has none"""
        frame = frame or self.cfg
        if self.problem.reference is None:
            return np.full(len(ts), np.nan)
        return np.array([self.problem.reference(x, t, frame) for t in ts], dtype=float)

    def hbar_profiles(
        self,
        hbar_values: Sequence[float],
        x: float,
        ts: Sequence[float],
    ) -> List[Tuple[float, np.ndarray]]:
        """
        One independent solve per hbar.

        Solves may run concurrently; results come back in the order of
        ``hbar_values``.
        """
        configs = [self.cfg.with_hbar(h) for h in hbar_values]
        if not configs:
            return []
        self._check_probe(x, self.cfg)
        logger.info(
            'Sweeping %d hbar values for %s on %d workers',
            len(configs), self.problem.name, min(self.workers, len(configs)),
        )
        with ThreadPoolExecutor(max_workers=min(self.workers, len(configs))) as pool:
            profiles = list(pool.map(lambda c: self.profile(x, ts, c), configs))
        return list(zip(hbar_values, profiles))

    def _check_probe(self, x: float, cfg: HamConfig) -> None:
        if not cfg.grid.contains(x):
            raise DomainError(f'probe x={x} outside the grid [{cfg.grid.x_min}, {cfg.grid.x_max}]')
        # Each stencil application spreads edge error two nodes inward.
        reach = 2 * self.problem.derivative_order * cfg.m_terms * cfg.grid.spacing
        if min(x - cfg.grid.x_min, cfg.grid.x_max - x) < reach:
            logger.warning(
                'probe x=%s lies within %.3g of a grid edge, where one-sided stencils '
                'perturb the coefficients', x, reach,
            )


def hbar_sweep(
    problem: 'ProblemDef',
    cfg: HamConfig,
    hbar_values: Sequence[float],
    probe: Tuple[float, float],
) -> List[SweepRow]:
    """
    Partial-sum value at one probe for every hbar.

    Args:
        problem: benchmark problem
        cfg: base configuration; its hbar is replaced per row
        hbar_values: non-zero auxiliary parameters
        probe: (x, t) with x on the grid and t >= a

    Returns:
        List[SweepRow]: rows in the order of ``hbar_values``
    """
    x, t = probe
    service = SolveService(problem, cfg)
    rows = []
    for hbar, values in service.hbar_profiles(hbar_values, x, [t]):
        reference = None
        error = None
        if problem.reference is not None:
            reference = float(problem.reference(x, t, cfg.with_hbar(hbar)))
            error = abs(float(values[0]) - reference)
        rows.append(SweepRow(hbar=hbar, value=float(values[0]), reference=reference, error=error))
    return rows
