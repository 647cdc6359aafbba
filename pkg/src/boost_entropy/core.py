"""Shared kinematics, qubit state containers and binary von Neumann entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

BLOCH_TOL = 1e-9
STATE_TOL = 1e-12
TINY = 1e-300


class DomainError(ValueError):
    """Input outside the physical domain of an operation."""


class InvalidStateError(ValueError):
    """Matrix is not a valid qubit density matrix."""


class ConvergenceError(RuntimeError):
    """Quadrature ran out of budget before meeting its tolerance."""

    def __init__(self, message: str, estimate: float, error: float, evaluations: int = 0):
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")
        self.estimate = estimate
        self.error = error
        self.evaluations = evaluations


@dataclass(frozen=True)
class BoostParams:
    """Velocity, Lorentz factor and rapidity of a boost along x."""

    beta: float
    gamma: float
    alpha: float

    def __post_init__(self):
        if not abs(self.beta) < 1.0:
            raise DomainError(f"superluminal boost: beta={self.beta}")
        g = 1.0 / math.sqrt((1.0 - self.beta) * (1.0 + self.beta))
        if abs(self.gamma - g) > 1e-14 * g:
            raise DomainError("gamma inconsistent with beta")
        if abs(math.tanh(self.alpha) - self.beta) > 1e-14:
            raise DomainError("alpha inconsistent with beta")


def boost_from_beta(beta: float) -> BoostParams:
    beta = float(beta)
    if not abs(beta) < 1.0:
        raise DomainError(f"superluminal boost: |beta|={abs(beta)} >= 1")
    gamma = 1.0 / math.sqrt((1.0 - beta) * (1.0 + beta))
    return BoostParams(beta=beta, gamma=gamma, alpha=math.atanh(beta))


def _clamp_modulus(r: float) -> float:
    if r < 0.0 or r > 1.0 + BLOCH_TOL or math.isnan(r):
        raise DomainError(f"modulus {r} outside [0, 1]")
    return min(r, 1.0)


@dataclass(frozen=True)
class BlochVector:
    nx: float
    ny: float
    nz: float

    def __post_init__(self):
        _clamp_modulus(math.hypot(self.nx, self.ny, self.nz))

    @property
    def modulus(self) -> float:
        """|n|, clamped to 1 inside the tolerance band."""
        return _clamp_modulus(math.hypot(self.nx, self.ny, self.nz))

    def as_array(self) -> np.ndarray:
        return np.array([self.nx, self.ny, self.nz])


@dataclass(frozen=True)
class QubitDensityMatrix:
    """2x2 density matrix stored entrywise as [[r00, r01], [r10, r11]]."""

    r00: complex
    r01: complex
    r10: complex
    r11: complex

    def __post_init__(self):
        if abs(self.r01 - self.r10.conjugate()) > STATE_TOL:
            raise InvalidStateError("matrix is not Hermitian")
        if abs(self.r00.imag) > STATE_TOL or abs(self.r11.imag) > STATE_TOL:
            raise InvalidStateError("matrix is not Hermitian")
        if abs(self.r00 + self.r11 - 1.0) > STATE_TOL:
            raise InvalidStateError(f"trace {self.r00 + self.r11} != 1")
        lo, hi = self.eigenvalues()
        if lo < -STATE_TOL or hi > 1.0 + STATE_TOL:
            raise InvalidStateError(f"eigenvalues ({lo}, {hi}) outside [0, 1]")

    @classmethod
    def from_array(cls, rho) -> "QubitDensityMatrix":
        rho = np.asarray(rho, dtype=complex)
        if rho.shape != (2, 2):
            raise InvalidStateError(f"expected a 2x2 matrix, got shape {rho.shape}")
        return cls(*(complex(v) for v in rho.ravel()))

    def as_array(self) -> np.ndarray:
        return np.array([[self.r00, self.r01], [self.r10, self.r11]], dtype=complex)

    def eigenvalues(self) -> tuple[float, float]:
        """Closed-form eigenvalues (ascending) from trace and off-diagonal size."""
        half_tr = 0.5 * (self.r00.real + self.r11.real)
        half_diff = 0.5 * (self.r00.real - self.r11.real)
        rad = math.hypot(half_diff, abs(self.r01))
        return half_tr - rad, half_tr + rad


def _xlogx(p: float) -> float:
    return 0.0 if p < TINY else p * math.log(p)


def binary_entropy(p: float) -> float:
    """-p ln p - (1-p) ln(1-p) for the smaller eigenvalue p in [0, 1/2].

    Taking the small eigenvalue directly keeps full relative precision
    for nearly pure states, where (1 - r)/2 would round to zero.
    """
    if p < 0.0 or p > 0.5 + BLOCH_TOL:
        raise DomainError(f"eigenvalue {p} outside [0, 1/2]")
    p = min(p, 0.5)
    if p < TINY:
        return 0.0
    return -p * math.log(p) - (1.0 - p) * math.log1p(-p)


def entropy_from_modulus(r: float) -> float:
    """Entropy in nats of a qubit whose Bloch vector has length r."""
    r = _clamp_modulus(float(r))
    return binary_entropy(0.5 * (1.0 - r))


def entropy_from_bloch(n: BlochVector) -> float:
    return entropy_from_modulus(n.modulus)


def entropy_from_density_matrix(rho: QubitDensityMatrix) -> float:
    return -sum(_xlogx(max(lam, 0.0)) for lam in rho.eigenvalues())


def nats_to_bits(s: float) -> float:
    return s / math.log(2.0)
