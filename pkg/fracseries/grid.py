"""
Uniform 1-D grids and the spatial coefficient fields sampled on them.

Samples are mpmath numbers of one context (see ``fracham.numerics``); the
finite-difference operators act on them with numpy slicing over object
arrays.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional, Sequence

import mpmath
import numpy as np
from scipy.interpolate import BarycentricInterpolator

from fracham.exceptions import DomainError, IncompatibleSeriesError
from fracham.numerics import working_context

logger = logging.getLogger(__name__)

MIN_GRID_POINTS = 8


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid x_min = x_0 < ... < x_{n-1} = x_max"""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not (np.isfinite(self.x_min) and np.isfinite(self.x_max)):
            raise DomainError('grid bounds must be finite')
        if self.x_max <= self.x_min:
            raise DomainError(f'x_max={self.x_max} must exceed x_min={self.x_min}')
        if int(self.n_points) != self.n_points or self.n_points < MIN_GRID_POINTS:
            raise DomainError(
                f'grid needs an integer n_points >= {MIN_GRID_POINTS}, got {self.n_points}'
            )

    @property
    def spacing(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def contains(self, x: float) -> bool:
        return bool(np.isfinite(x)) and self.x_min <= x <= self.x_max

    def mp_nodes(self, ctx) -> list:
        lo = ctx.mpf(self.x_min)
        h = (ctx.mpf(self.x_max) - lo) / (self.n_points - 1)
        return [lo + j * h for j in range(self.n_points)]

    def mp_spacing(self, ctx):
        return (ctx.mpf(self.x_max) - ctx.mpf(self.x_min)) / (self.n_points - 1)

    def interior_mask(self, margin: float) -> np.ndarray:
        """Nodes at least ``margin`` away from both ends"""
        x = self.nodes
        return (x >= self.x_min + margin) & (x <= self.x_max - margin)

    def local_nodes(self, x: float) -> slice:
        """The four nodes used for cubic interpolation at x"""
        i = int(np.floor((x - self.x_min) / self.spacing))
        start = min(max(i - 1, 0), self.n_points - 4)
        return slice(start, start + 4)


@dataclass(frozen=True, eq=False)
class SpatialField:
    """Samples of a coefficient function c(x) on a grid"""

    grid: GridSpec
    values: np.ndarray = field(repr=False)
    ctx: mpmath.MPContext = field(repr=False, default_factory=working_context)

    @classmethod
    def from_function(
        cls,
        grid: GridSpec,
        fn: Callable,
        ctx: Optional[mpmath.MPContext] = None,
    ) -> 'SpatialField':
        """
        Sample ``fn(x, lib)`` on the grid.

        ``lib`` is the mpmath context, so ``fn`` can call ``lib.cos``,
        ``lib.exp``, ``lib.sinh`` and ``lib.pi`` the same way it would call
        numpy.
        """
        ctx = ctx or working_context()
        samples = [ctx.convert(fn(x, ctx)) for x in grid.mp_nodes(ctx)]
        return cls.from_samples(grid, samples, ctx)

    @classmethod
    def from_samples(
        cls,
        grid: GridSpec,
        samples: Sequence,
        ctx: Optional[mpmath.MPContext] = None,
    ) -> 'SpatialField':
        ctx = ctx or working_context()
        if len(samples) != grid.n_points:
            raise DomainError(f'expected {grid.n_points} samples, got {len(samples)}')
        values = np.empty(grid.n_points, dtype=object)
        for j, v in enumerate(samples):
            v = ctx.convert(v)
            if not ctx.isfinite(v):
                raise DomainError(f'sample {j} of the field is not finite')
            values[j] = v
        return cls(grid, values, ctx)

    @classmethod
    def constant(cls, grid: GridSpec, value, ctx: Optional[mpmath.MPContext] = None):
        ctx = ctx or working_context()
        values = np.empty(grid.n_points, dtype=object)
        values[:] = ctx.convert(value)
        return cls(grid, values, ctx)

    @classmethod
    def zeros(cls, grid: GridSpec, ctx: Optional[mpmath.MPContext] = None):
        return cls.constant(grid, 0, ctx)

    @cached_property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def _like(self, values: np.ndarray) -> 'SpatialField':
        return SpatialField(self.grid, values, self.ctx)

    def _check(self, other: 'SpatialField'):
        if other.grid != self.grid:
            raise IncompatibleSeriesError(f'grids differ: {self.grid} vs {other.grid}')

    def scale(self, s) -> 'SpatialField':
        if self.is_zero:
            return self
        s = self.ctx.convert(s)
        if s == 0:
            return SpatialField.zeros(self.grid, self.ctx)
        return self._like(self.values * s)

    def __add__(self, other: 'SpatialField') -> 'SpatialField':
        self._check(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        return self._like(self.values + other.values)

    def __neg__(self) -> 'SpatialField':
        return self.scale(-1)

    def __sub__(self, other: 'SpatialField') -> 'SpatialField':
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SpatialField):
            return self.scale(other)
        self._check(other)
        if self.is_zero or other.is_zero:
            return SpatialField.zeros(self.grid, self.ctx)
        return self._like(self.values * other.values)

    __rmul__ = __mul__

    def derivative(self, order: int) -> 'SpatialField':
        return field_derivative(self, order)

    def to_numpy(self) -> np.ndarray:
        return np.array([float(v) for v in self.values], dtype=float)

    def at(self, x: float) -> float:
        """Cubic interpolation between the four nearest nodes"""
        return float(interpolate_fields([self], x)[0])

    def max_abs(self, mask: Optional[np.ndarray] = None) -> float:
        values = self.values if mask is None else self.values[mask]
        return float(max((abs(v) for v in values), default=0))


# Fourth-order stencils, numerators over 12 h (first) or 12 h**2 (second).
_FIRST_INTERIOR = (1, -8, 0, 8, -1)
_FIRST_EDGE = ((-25, 48, -36, 16, -3), (-3, -10, 18, -6, 1))
_SECOND_INTERIOR = (-1, 16, -30, 16, -1)
_SECOND_EDGE = ((45, -154, 214, -156, 61, -10), (10, -15, -4, 14, -6, 1))


def field_derivative(f: SpatialField, order: int) -> SpatialField:
    """
    d/dx or d2/dx2 of a field with fourth-order finite differences.

    Central five-point stencils in the interior, one-sided fourth-order
    stencils on the two outermost nodes at each end.

    Raises:
        DomainError: for an order other than 1 or 2, or a grid too small
    """
    if order not in (1, 2):
        raise DomainError(f'field derivative order must be 1 or 2, got {order}')
    n = f.grid.n_points
    if n < MIN_GRID_POINTS:
        raise DomainError(f'finite differences need at least {MIN_GRID_POINTS} nodes')
    if f.is_zero:
        return f

    ctx = f.ctx
    u = f.values
    out = np.empty(n, dtype=object)
    h = f.grid.mp_spacing(ctx)
    if order == 1:
        c = _FIRST_INTERIOR
        out[2:-2] = c[0] * u[:-4] + c[1] * u[1:-3] + c[3] * u[3:-1] + c[4] * u[4:]
        edges = _FIRST_EDGE
        denom = 12 * h
    else:
        c = _SECOND_INTERIOR
        out[2:-2] = c[0] * u[:-4] + c[1] * u[1:-3] + c[2] * u[2:-2] + c[3] * u[3:-1] + c[4] * u[4:]
        edges = _SECOND_EDGE
        denom = 12 * h * h

    # Both edge rows use the outermost nodes; mirrored first derivatives flip sign.
    for row, weights in enumerate(edges):
        left = sum(w * u[j] for j, w in enumerate(weights))
        right = sum(w * u[n - 1 - j] for j, w in enumerate(weights))
        out[row] = left
        out[n - 1 - row] = -right if order == 1 else right
    return SpatialField(f.grid, out / denom, ctx)


def interpolate_fields(fields: Sequence[SpatialField], x: float) -> np.ndarray:
    """
    Values of several fields at x from a local cubic through four nodes.

    Raises:
        DomainError: when x lies outside the grid
    """
    if not fields:
        return np.zeros(0)
    grid = fields[0].grid
    if not grid.contains(x):
        raise DomainError(f'x={x} outside the grid [{grid.x_min}, {grid.x_max}]')
    window = grid.local_nodes(x)
    xs = grid.nodes[window]
    ys = np.array([[float(v) for v in fld.values[window]] for fld in fields], dtype=float).T
    return np.atleast_1d(BarycentricInterpolator(xs, ys, axis=0)(x))
