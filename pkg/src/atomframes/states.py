"""Analytic one-dimensional wavefunctions, hydrogen levels, and constants.

The wavefunction family is deliberately small: a Gaussian wavepacket (the
generic center-of-mass state) and an exponentially bound profile
exp(-|x|/a) standing in for the ground-state falloff of the relative
coordinate.  Both are normalized analytically so that their squared
modulus integrates to one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coords import FRAMES
from .errors import DomainError, UsageError


@dataclass(frozen=True)
class Gaussian:
    """Normalized Gaussian wavepacket.

    amplitude(x) = (2 pi sigma^2)^(-1/4) exp(-(x - center)^2 / (4 sigma^2))
                   * exp(i k0 x)

    so |amplitude|^2 is a normal density with standard deviation sigma.
    A nonzero wavenumber k0 gives the packet mean momentum hbar k0.
    """

    center: float = 0.0
    sigma: float = 1.0
    wavenumber: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise DomainError(f"Gaussian width must be positive, got {self.sigma!r}")

    @property
    def length_scale(self) -> float:
        return self.sigma

    def __call__(self, x):
        norm = (2.0 * math.pi * self.sigma**2) ** -0.25
        u = np.asarray(x, dtype=float) - self.center
        amp = norm * np.exp(-(u * u) / (4.0 * self.sigma**2))
        if self.wavenumber != 0.0:
            return amp * np.exp(1j * self.wavenumber * np.asarray(x, dtype=float))
        return amp.astype(complex)


@dataclass(frozen=True)
class ExponentialBound:
    """Two-sided exponential bound state, amplitude(x) = exp(-|x|/a)/sqrt(a)."""

    decay_length: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.decay_length) and self.decay_length > 0.0):
            raise DomainError(
                f"decay length must be positive, got {self.decay_length!r}"
            )

    @property
    def length_scale(self) -> float:
        return self.decay_length

    def __call__(self, x):
        a = self.decay_length
        amp = np.exp(-np.abs(np.asarray(x, dtype=float)) / a) / math.sqrt(a)
        return amp.astype(complex)


AnalyticWavefunction1D = Gaussian | ExponentialBound


def evaluate(wf: AnalyticWavefunction1D, x):
    """Normalized amplitude of ``wf`` at ``x`` (scalar or ndarray)."""
    return wf(x)


@dataclass(frozen=True)
class SeparableState:
    """A product state: one analytic wavefunction per coordinate of a frame."""

    frame: str
    comp1: AnalyticWavefunction1D
    comp2: AnalyticWavefunction1D

    def __post_init__(self):
        if self.frame not in FRAMES:
            raise UsageError(f"unknown frame label {self.frame!r}; expected one of {FRAMES}")


@dataclass(frozen=True)
class HydrogenLevel:
    """Quantum numbers (n, l, m_l) of a bound internal-energy eigenstate."""

    n: int
    l: int
    m_l: int


def validate_level(level: HydrogenLevel) -> bool:
    """True iff n >= 1, 0 <= l <= n-1 and -l <= m_l <= l.

    l = 0 is admitted: the customary listing of the angular-momentum range
    sometimes starts at 1, but the s states (l = 0) are bona fide levels
    and the ground state itself has l = 0.
    """
    return (
        level.n >= 1
        and 0 <= level.l <= level.n - 1
        and -level.l <= level.m_l <= level.l
    )


@dataclass(frozen=True)
class PhysicalConstants:
    """CODATA 2018 constants, 10+ significant digits, SI units.

    h and e are exact by the 2019 SI definition; hbar is derived as
    h / (2 pi) so that the pair is consistent to machine precision.
    """

    h: float = 6.62607015e-34            # J s, exact
    hbar: float = 6.62607015e-34 / (2.0 * math.pi)  # J s, derived
    electron_mass: float = 9.1093837015e-31   # kg
    proton_mass: float = 1.67262192369e-27    # kg
    elementary_charge: float = 1.602176634e-19  # C, exact
    coulomb_constant: float = 8.9875517923e9  # N m^2 C^-2, k = (4 pi eps0)^-1
    hartree_to_ev: float = 27.211386245988   # eV per hartree
    atomic_time: float = 2.4188843265857e-17  # s per atomic time unit

    @property
    def mass_ratio(self) -> float:
        """m_p / m_e."""
        return self.proton_mass / self.electron_mass

    @property
    def reduced_mass_over_me(self) -> float:
        """mu / m_e = m_p / (m_e + m_p)."""
        r = self.mass_ratio
        return r / (1.0 + r)

    @property
    def hartree_joule(self) -> float:
        """One hartree in joules, derived: m_e (k e^2 / hbar)^2."""
        return self.electron_mass * (
            self.coulomb_constant * self.elementary_charge**2 / self.hbar
        ) ** 2

    @property
    def hartree_hz(self) -> float:
        """One hartree expressed as a frequency E_h / h."""
        return self.hartree_joule / self.h


DEFAULT_CONSTANTS = PhysicalConstants()


def hydrogen_energy(n: int, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    """Bound-state energy E_n in hartree.

    E_n = -mu k^2 e^4 / (2 hbar^2 n^2) with mu the electron-proton reduced
    mass; in hartree this is -(mu/m_e) / (2 n^2).
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"principal quantum number must be an integer >= 1, got {n!r}")
    return -0.5 * constants.reduced_mass_over_me / (n * n)


def hartree_to_ev(energy_hartree: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return energy_hartree * constants.hartree_to_ev


def hartree_to_hz(energy_hartree: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return energy_hartree * constants.hartree_hz


def hartree_to_joule(energy_hartree: float, constants: PhysicalConstants = DEFAULT_CONSTANTS) -> float:
    return energy_hartree * constants.hartree_joule


def transition_frequency(
    n_upper: int, n_lower: int, constants: PhysicalConstants = DEFAULT_CONSTANTS
) -> float:
    """Photon frequency nu = (E_upper - E_lower) / h in Hz, strictly positive.

    Only downward transitions are meaningful here; swapped arguments are
    rejected rather than returned with a negated sign.
    """
    if not isinstance(n_lower, (int, np.integer)) or n_lower < 1:
        raise DomainError(f"lower level must be an integer >= 1, got {n_lower!r}")
    if not isinstance(n_upper, (int, np.integer)) or n_upper <= n_lower:
        raise DomainError(
            f"upper level must exceed lower level, got {n_upper!r} <= {n_lower!r}"
        )
    delta = hydrogen_energy(n_upper, constants) - hydrogen_energy(n_lower, constants)
    return hartree_to_hz(delta, constants)
