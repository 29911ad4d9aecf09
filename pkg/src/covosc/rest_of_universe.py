"""Reduced density matrix from tracing out the time-separation variable.

The boosted ground state entangles its longitudinal and time coordinates.
Integrating the unobservable time coordinate out of the pure-state density
leaves rho(z, z') with a geometric spectrum (ratio tanh^2 eta), entropy that
grows with the boost, and purity 1/cosh(2 eta): the price of ignoring the
part of the universe the observer cannot measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .analysis import GridSpec
from .errors import NumericIntegrityError
from .hermite import gauss_hermite
from .kinematics import Rapidity, rapidity_value
from .oscillator import OscillatorState, psi_boosted

__all__ = ["EIGENVALUE_FLOOR", "ReducedDensity", "entropy", "purity", "reduce"]

# discretization noise below this contributes only spurious entropy
EIGENVALUE_FLOOR = 1e-12
NEGATIVITY_TOLERANCE = -1e-8


@dataclass(frozen=True, eq=False)
class ReducedDensity:
    """Discretized rho(z, z') on a uniform grid with trapezoid weights folded in.

    kernel holds the raw values rho(z_i, z_j); matrix is the symmetric
    weight-folded form W^{1/2} K W^{1/2}, whose trace and eigenvalues
    approximate the continuum trace and spectrum.
    """

    grid: GridSpec
    eta: float
    kernel: np.ndarray
    weights: np.ndarray
    matrix: np.ndarray
    warnings: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = self.grid.npoints
        kernel = np.asarray(self.kernel, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        matrix = np.asarray(self.matrix, dtype=float)
        if kernel.shape != (n, n) or matrix.shape != (n, n) or weights.shape != (n,):
            raise NumericIntegrityError("array shapes inconsistent with the grid")
        for name, arr in (("kernel", kernel), ("weights", weights), ("matrix", matrix)):
            if not np.all(np.isfinite(arr)):
                raise NumericIntegrityError(f"{name} contains non-finite values")
        if np.any(weights <= 0.0):
            raise NumericIntegrityError("quadrature weights must be positive")
        scale = float(np.max(np.abs(matrix))) or 1.0
        if float(np.max(np.abs(matrix - matrix.T))) > 1e-12 * scale:
            raise NumericIntegrityError("folded matrix is not symmetric")
        for arr in (kernel, weights, matrix):
            arr.setflags(write=False)
        object.__setattr__(self, "kernel", kernel)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))

    def eigenvalues(self) -> np.ndarray:
        """Spectrum of the folded matrix, largest first."""
        return np.linalg.eigvalsh(self.matrix)[::-1]

    def diagonal_density(self) -> np.ndarray:
        """rho(z, z): the longitudinal probability density on the grid."""
        return np.diagonal(self.kernel).copy()


def reduce(eta: Rapidity | float, grid: GridSpec, t_order: int = 64) -> ReducedDensity:
    """Trace the time coordinate out of the boosted ground state.

    rho(z, z') = integral dt psi(z, t) psi(z', t), computed with a shifted,
    scaled Gauss-Hermite rule that is exact for this Gaussian integrand: at
    fixed (z, z') the integrand is a Gaussian in t centered on
    (z + z')/2 * tanh(2 eta) with decay rate cosh(2 eta). The kernel is
    discretized on `grid` and trapezoid weights are folded in symmetrically.
    A grid narrower than +-4 sigma_z is recorded as a warning on the result
    rather than raised.
    """
    e = rapidity_value(eta)
    state = OscillatorState(eta=e)
    z = grid.points()
    n = z.size
    sigma_z = math.sqrt(0.5 * math.cosh(2.0 * e))
    warnings = []
    span = 4.0 * sigma_z
    if grid.min > -span + 1e-12 or grid.max < span - 1e-12:
        warnings.append(
            f"grid [{grid.min:.6g}, {grid.max:.6g}] spans less than +-4 sigma_z "
            f"= +-{span:.6g}; trace and spectrum may be truncated")
    rule = gauss_hermite(t_order)
    x, w = rule.nodes, rule.exp_weights
    scale = 1.0 / math.sqrt(math.cosh(2.0 * e))
    shift = math.tanh(2.0 * e)
    kernel = np.empty((n, n))
    for i in range(n):
        centers = 0.5 * shift * (z[i] + z)
        t = centers[:, None] + scale * x[None, :]
        kernel[i] = scale * np.sum(
            w * psi_boosted(state, z[i], t) * psi_boosted(state, z[:, None], t),
            axis=1,
        )
    kernel = 0.5 * (kernel + kernel.T)
    weights = np.full(n, grid.step)
    weights[0] = weights[-1] = 0.5 * grid.step
    sqrt_w = np.sqrt(weights)
    matrix = sqrt_w[:, None] * kernel * sqrt_w[None, :]
    matrix = 0.5 * (matrix + matrix.T)
    return ReducedDensity(grid=grid, eta=e, kernel=kernel, weights=weights,
                          matrix=matrix, warnings=tuple(warnings))


def entropy(rho: ReducedDensity) -> float:
    """Von Neumann entropy -sum lambda ln lambda of the discrete spectrum.

    Eigenvalues below the floor are discretization noise and are dropped;
    an eigenvalue below -1e-8 means the construction is broken and raises.
    """
    lam = np.linalg.eigvalsh(rho.matrix)
    smallest = float(lam[0])
    if smallest < NEGATIVITY_TOLERANCE:
        raise NumericIntegrityError(
            f"reduced density has eigenvalue {smallest}; not positive semidefinite")
    lam = lam[lam > EIGENVALUE_FLOOR]
    return float(-np.sum(lam * np.log(lam)))


def purity(rho: ReducedDensity) -> float:
    """Tr rho^2 of the weight-folded matrix; 1 exactly for a pure state."""
    return float(np.sum(rho.matrix * rho.matrix))
