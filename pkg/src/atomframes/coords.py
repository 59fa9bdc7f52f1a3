"""Linear canonical transformations between the two-particle frames.

A two-body system admits (at least) two natural coordinate decompositions:
the particle coordinates (x_e, x_p), labelled ``EP``, and the
center-of-mass plus relative coordinates (R, rho), labelled ``CMR``:

    R   = (m_e x_e + m_p x_p) / (m_e + m_p)
    rho = x_e - x_p

The map is linear, invertible, and has determinant -1 for every positive
mass pair, so no Jacobian factor appears when wavefunctions are pulled
from one frame to the other.  One spatial dimension per particle is used
throughout; the vector case is this map applied componentwise.

All quantities are in atomic units (hbar = m_e = e = k = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NumericError, UsageError

FRAME_EP = "EP"
FRAME_CMR = "CMR"
FRAMES = (FRAME_EP, FRAME_CMR)

_SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class MassPair:
    """Electron and proton masses in units of the electron mass."""

    m_e: float
    m_p: float

    def __post_init__(self):
        for name, m in (("m_e", self.m_e), ("m_p", self.m_p)):
            if not (math.isfinite(m) and m > 0.0):
                raise DomainError(f"{name} must be finite and positive, got {m!r}")

    @property
    def total(self) -> float:
        """Total mass M = m_e + m_p."""
        return self.m_e + self.m_p

    @property
    def reduced(self) -> float:
        """Reduced mass mu = (1/m_e + 1/m_p)^-1."""
        return 1.0 / (1.0 / self.m_e + 1.0 / self.m_p)


@dataclass(frozen=True, eq=False)
class FrameTransform:
    """A 2x2 linear map taking source-frame coordinates to target-frame ones.

    ``matrix`` acts on column vectors (x1, x2) of the source frame.  The
    mass parameters of the underlying pair ride along so downstream
    consumers (sampling, Hamiltonians) need no extra bookkeeping.
    """

    matrix: np.ndarray
    source_frame: str
    target_frame: str
    total_mass: float
    reduced_mass: float

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (2, 2):
            raise UsageError(f"transform matrix must be 2x2, got shape {m.shape}")
        if abs(np.linalg.det(m)) <= _SINGULAR_TOL:
            raise NumericError("transform matrix is singular")
        for frame in (self.source_frame, self.target_frame):
            if frame not in FRAMES:
                raise UsageError(f"unknown frame label {frame!r}; expected one of {FRAMES}")
        if not (self.total_mass > 0.0 and self.reduced_mass > 0.0):
            raise DomainError("transform masses must be positive")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.matrix))


def build_cm_relative_transform(masses: MassPair) -> FrameTransform:
    """Build the (x_e, x_p) -> (R, rho) map for the given mass pair.

    The determinant is -(m_e + m_p)/M = -1 identically.
    """
    M = masses.total
    matrix = np.array([[masses.m_e / M, masses.m_p / M], [1.0, -1.0]])
    return FrameTransform(
        matrix=matrix,
        source_frame=FRAME_EP,
        target_frame=FRAME_CMR,
        total_mass=M,
        reduced_mass=masses.reduced,
    )


def identity_transform(masses: MassPair, frame: str = FRAME_CMR) -> FrameTransform:
    """The trivial frame-to-itself map, useful for sampling in place."""
    return FrameTransform(
        matrix=np.eye(2),
        source_frame=frame,
        target_frame=frame,
        total_mass=masses.total,
        reduced_mass=masses.reduced,
    )


def invert_transform(t: FrameTransform) -> FrameTransform:
    """Exact 2x2 inverse with source/target labels swapped.

    For the CM/relative builder this reproduces the textbook inverse
    x_e = R + (m_p/M) rho, x_p = R - (m_e/M) rho.
    """
    m = t.matrix
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if abs(det) <= _SINGULAR_TOL:
        raise NumericError("cannot invert a singular transform")
    inv = np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]]) / det
    return FrameTransform(
        matrix=inv,
        source_frame=t.target_frame,
        target_frame=t.source_frame,
        total_mass=t.total_mass,
        reduced_mass=t.reduced_mass,
    )


def apply_transform(t: FrameTransform, point):
    """Matrix-vector product; accepts scalars or ndarrays componentwise."""
    x1, x2 = point
    m = t.matrix
    return (m[0, 0] * x1 + m[0, 1] * x2, m[1, 0] * x1 + m[1, 1] * x2)


def compose(a: FrameTransform, b: FrameTransform) -> FrameTransform:
    """The map applying ``b`` first and then ``a`` (matrix product a.b)."""
    if a.source_frame != b.target_frame:
        raise UsageError(
            f"cannot compose: a expects source frame {a.source_frame!r} "
            f"but b produces {b.target_frame!r}"
        )
    return FrameTransform(
        matrix=a.matrix @ b.matrix,
        source_frame=b.source_frame,
        target_frame=a.target_frame,
        total_mass=a.total_mass,
        reduced_mass=a.reduced_mass,
    )
