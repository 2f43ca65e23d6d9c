from dataclasses import dataclass, field
from typing import TYPE_CHECKING, List

from fracseries.series import FractionalPowerSeries

if TYPE_CHECKING:
    from problems.definitions import ProblemDef


@dataclass(frozen=True)
class ResidualPart:
    """G_{m-1} = R_m - psi-Caputo derivative of u_{m-1}"""

    g: FractionalPowerSeries


@dataclass
class DeformationState:
    """Terms u_0 ... u_m computed so far"""

    problem: 'ProblemDef'
    terms: List[FractionalPowerSeries] = field(default_factory=list)

    @property
    def order(self) -> int:
        """Index of the last computed term"""
        return len(self.terms) - 1
