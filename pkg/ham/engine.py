"""
The m-th order deformation recurrence.

With L the psi-Caputo derivative of order alpha (0 < alpha < 1) and H = 1,
applying the psi-fractional integral to the m-th order deformation equation
gives

    u_m = (chi_m + hbar) u_{m-1} - (chi_m + hbar) u_{m-1}(x, a) + hbar I[G_{m-1}]

where G_{m-1} is the residual R_m without its Caputo term. The Caputo term is
never evaluated: I applied to it returns u_{m-1} - u_{m-1}(x, a), which is
what the (chi_m + hbar) terms carry.
"""

import logging
import time
from typing import TYPE_CHECKING, List, Optional, Tuple

from fracham.exceptions import DomainError
from fracham.numerics import sample_context
from fracseries.grid import SpatialField
from fracseries.series import (
    FractionalPowerSeries,
    caputo_derivative,
    constant_series,
    frac_integral,
    leading_series,
    series_add,
    series_eval,
    series_scale,
    series_truncate,
)

from .config import HamConfig, StepForm
from .state import DeformationState

if TYPE_CHECKING:
    from problems.definitions import ProblemDef

logger = logging.getLogger(__name__)


def chi_switch(m: int) -> int:
    """0 for m = 1, 1 for m >= 2"""
    if m < 1:
        raise DomainError(f'chi_m is defined for m >= 1, got {m}')
    return 0 if m <= 1 else 1


def deformation_step(state: DeformationState, cfg: HamConfig, m: int) -> FractionalPowerSeries:
    """
    Compute u_m from u_0 ... u_{m-1}.

    Args:
        state: holds at least m terms
        cfg: solve parameters
        m: order of the term to build

    Returns:
        FractionalPowerSeries: u_m, whose k = 0 coefficient is zero
    """
    if m < 1 or m > len(state.terms):
        raise DomainError(f'cannot build u_{m} from {len(state.terms)} known terms')
    chi = chi_switch(m)
    previous = state.terms[m - 1]
    residual = state.problem.residual_g(state.terms[:m], m, k_max=cfg.k_max)
    forcing = series_scale(frac_integral(residual.g), cfg.hbar * cfg.aux_h)

    if cfg.step_form == StepForm.GENERAL:
        # u_m = chi u_{m-1} - chi u_{m-1}(x, a) + hbar I[D u_{m-1} + G_{m-1}]
        caputo_part = frac_integral(caputo_derivative(previous))
        carried = series_add(
            series_scale(previous, chi),
            series_scale(leading_series(previous), -chi),
        )
        term = carried + forcing + series_scale(caputo_part, cfg.hbar * cfg.aux_h)
    else:
        factor = chi + cfg.hbar
        carried = series_add(
            series_scale(previous, factor),
            series_scale(leading_series(previous), -factor),
        )
        term = carried + forcing

    term = series_truncate(term, cfg.k_max)
    logger.debug(
        '%s: u_%d built, highest lattice index %d', state.problem.name, m, term.max_index
    )
    return term


def initial_term(problem: 'ProblemDef', cfg: HamConfig) -> FractionalPowerSeries:
    """u_0 sampled at the precision the run will need"""
    ctx = sample_context(cfg.grid.spacing, problem.derivative_order, cfg.m_terms)
    field = SpatialField.from_function(cfg.grid, problem.initial_condition, ctx)
    return constant_series(field, cfg.alpha, cfg.psi, cfg.a)


def run_ham(problem: 'ProblemDef', cfg: HamConfig) -> DeformationState:
    """Build u_0 ... u_M for one problem"""
    started = time.perf_counter()
    state = DeformationState(problem=problem, terms=[initial_term(problem, cfg)])
    for m in range(1, cfg.m_terms + 1):
        state.terms.append(deformation_step(state, cfg, m))
    logger.info(
        'Solved %s with alpha=%s psi=%s hbar=%s M=%d on %d nodes (%d digits) in %.2fs',
        problem.name, cfg.alpha, cfg.psi.label, cfg.hbar, cfg.m_terms,
        cfg.grid.n_points, state.terms[0].ctx.dps, time.perf_counter() - started,
    )
    return state


def assemble(state: DeformationState, upto: Optional[int] = None) -> FractionalPowerSeries:
    """Partial sum u_0 + ... + u_upto"""
    if upto is None:
        upto = state.order
    if upto < 0 or upto > state.order:
        raise DomainError(f'upto={upto} outside the computed range 0..{state.order}')
    total = state.terms[0]
    for term in state.terms[1:upto + 1]:
        total = total + term
    return total


def term_values(state: DeformationState, probe: Tuple[float, float]) -> List[float]:
    """u_m evaluated at the probe for every computed m"""
    x, t = probe
    return [series_eval(term, x, t) for term in state.terms]


def term_ratio_diagnostic(state: DeformationState, probe: Tuple[float, float]) -> List[float]:
    """
    |u_{m+1}(probe)| / |u_m(probe)| for successive m.

    The list stops at the first vanishing denominator.
    """
    values = term_values(state, probe)
    ratios = []
    for current, following in zip(values, values[1:]):
        if current == 0:
            break
        ratios.append(abs(following) / abs(current))
    return ratios


def equation_residual(
    state: DeformationState,
    cfg: HamConfig,
    upto: Optional[int] = None,
) -> FractionalPowerSeries:
    """
    N[u_0 + ... + u_upto] on the lattice slots the partial sum determines.

    Uses the formal lattice Caputo derivative; slots above upto - 1 depend on
    terms not yet computed and are dropped.
    """
    total = assemble(state, upto)
    order = state.order if upto is None else upto
    operator_part = state.problem.residual_g([total], 1, k_max=cfg.k_max).g
    residual = caputo_derivative(total) + operator_part
    return series_truncate(residual, max(order - 1, 0))
