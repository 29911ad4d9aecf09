"""Covariant oscillator wave functions of the two-quark separation variable.

A state carries longitudinal and transverse excitation numbers plus a
rapidity. The time-separation coordinate has no excitation number at all:
its factor is frozen in the Gaussian ground state, which is what keeps every
boosted wave function normalizable. Normalization constants are kept
everywhere, so squared wave functions integrate to one in any frame.

A boost along z acts on the wave function's light-cone arguments as
u -> u e^{-eta}, v -> v e^{eta}: one axis stretches while the other
contracts, with unit Jacobian.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapabilityError, DomainError
from .hermite import DEGREE_MAX, hermite_function
from .kinematics import SQRT2, Rapidity, rapidity_value

__all__ = [
    "INV_SQRT_PI",
    "MomentumCoords",
    "OscillatorState",
    "SeparationCoords",
    "momentum_from_constituents",
    "phi_momentum",
    "phi_momentum_lightcone",
    "psi_boosted",
    "psi_boosted_lightcone",
    "psi_full",
    "psi_rest",
    "separation_from_constituents",
]

INV_SQRT_PI = 1.0 / math.sqrt(math.pi)


@dataclass(frozen=True)
class OscillatorState:
    """Excitations (n_z, n_x, n_y) and rapidity eta of one bound-state wave function.

    There is deliberately no time-like quantum number: the t factor is the
    fixed Gaussian ground state for every state this type can express.
    """

    n_z: int = 0
    n_x: int = 0
    n_y: int = 0
    eta: float = 0.0

    def __post_init__(self) -> None:
        for name in ("n_z", "n_x", "n_y"):
            value = getattr(self, name)
            if value != int(value):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            value = int(value)
            if value < 0:
                raise DomainError(f"{name} must be >= 0, got {value}")
            if value > DEGREE_MAX:
                raise CapabilityError(f"{name} = {value} exceeds the cap {DEGREE_MAX}")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "eta", rapidity_value(self.eta))

    def with_rapidity(self, eta: Rapidity | float) -> "OscillatorState":
        """Same quantum numbers viewed from another frame."""
        return OscillatorState(self.n_z, self.n_x, self.n_y, eta)


def _four_vector(name: str, value) -> np.ndarray:
    arr = np.asarray(value, dtype=float)
    if arr.shape != (4,):
        raise DomainError(f"{name} must be a length-4 vector (t/E, x, y, z)")
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SeparationCoords:
    """Hadron center X and quark separation x, in (t, x, y, z) component order."""

    X: np.ndarray
    x: np.ndarray


@dataclass(frozen=True, eq=False)
class MomentumCoords:
    """Total momentum P, separation momentum q, and q's light-cone components."""

    P: np.ndarray
    q: np.ndarray
    q_u: float
    q_v: float


def separation_from_constituents(x_a, x_b) -> SeparationCoords:
    """Center X = (x_a + x_b)/2 and separation x = (x_a - x_b)/(2 sqrt(2))."""
    a = _four_vector("x_a", x_a)
    b = _four_vector("x_b", x_b)
    return SeparationCoords(X=(a + b) / 2.0, x=(a - b) / (2.0 * SQRT2))


def momentum_from_constituents(p_a, p_b) -> MomentumCoords:
    """Total P = p_a + p_b and separation q = sqrt(2) (p_a - p_b).

    q_u and q_v are the light-cone components (q_0 + q_z)/sqrt(2) and
    (q_0 - q_z)/sqrt(2) of the separation momentum.
    """
    a = _four_vector("p_a", p_a)
    b = _four_vector("p_b", p_b)
    q = SQRT2 * (a - b)
    return MomentumCoords(
        P=a + b,
        q=q,
        q_u=float((q[0] + q[3]) / SQRT2),
        q_v=float((q[0] - q[3]) / SQRT2),
    )


def psi_rest(state: OscillatorState, z, t):
    """Rest-frame longitudinal wave function h_{n_z}(z) h_0(t).

    The state must carry zero rapidity; boosted states go through
    psi_boosted. Accepts scalars or broadcastable numpy arrays.
    """
    if state.eta != 0.0:
        raise DomainError("psi_rest requires eta = 0; use psi_boosted for a boosted state")
    return hermite_function(state.n_z, z) * hermite_function(0, t)


def psi_boosted(state: OscillatorState, z, t):
    """Boosted wave function: the rest-frame function of the de-squeezed arguments.

    With u = (z + t)/sqrt(2) and v = (z - t)/sqrt(2), the arguments are
    replaced by u e^{-eta} and v e^{eta}. For n_z = 0 this is the closed form

        (1/sqrt(pi)) exp(-(e^{-2 eta}(z + t)^2 + e^{2 eta}(z - t)^2) / 4).
    """
    if state.eta == 0.0:
        # identity boost: same digits as the rest-frame evaluation
        return hermite_function(state.n_z, z) * hermite_function(0, t)
    return psi_boosted_lightcone(state, (z + t) / SQRT2, (z - t) / SQRT2)


def psi_boosted_lightcone(state: OscillatorState, u, v):
    """psi_boosted as a function of the light-cone arguments u, v."""
    a = math.exp(-state.eta) * u
    b = math.exp(state.eta) * v
    z_rest = (a + b) / SQRT2
    t_rest = (a - b) / SQRT2
    return hermite_function(state.n_z, z_rest) * hermite_function(0, t_rest)


def psi_full(state: OscillatorState, x, y, z, t):
    """Full wave function: boosted (z, t) sector times transverse factors.

    The transverse factors h_{n_x}(x) h_{n_y}(y) never see the rapidity, so
    they are identical in every frame.
    """
    return (
        psi_boosted(state, z, t)
        * hermite_function(state.n_x, x)
        * hermite_function(state.n_y, y)
    )


def phi_momentum(state: OscillatorState, q_z, q_0):
    """Momentum-energy wave function of the longitudinal ground state.

    The same squeezed Gaussian as the position-space function, acting on the
    momentum light-cone components q_u = (q_0 + q_z)/sqrt(2) and
    q_v = (q_0 - q_z)/sqrt(2):

        (1/sqrt(pi)) exp(-(e^{-2 eta} q_u^2 + e^{2 eta} q_v^2) / 2).

    Excited longitudinal states have no momentum representation here.
    """
    if state.n_z != 0:
        raise CapabilityError("momentum representation is implemented for n_z = 0 only")
    return phi_momentum_lightcone(state, (q_0 + q_z) / SQRT2, (q_0 - q_z) / SQRT2)


def phi_momentum_lightcone(state: OscillatorState, q_u, q_v):
    """phi_momentum as a function of the light-cone components q_u, q_v."""
    if state.n_z != 0:
        raise CapabilityError("momentum representation is implemented for n_z = 0 only")
    a = math.exp(-state.eta) * q_u
    b = math.exp(state.eta) * q_v
    out = INV_SQRT_PI * np.exp(-0.5 * (a * a + b * b))
    if np.ndim(out) == 0:
        return float(out)
    return out
