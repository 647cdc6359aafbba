"""Particle in a periodic box with a two-level internal energy, under a Galilean boost.

The internal energy adds E_j / c^2 to the inertial mass, so the two energy
branches pick up different momentum kicks and the internal state becomes
entangled with momentum. Units have hbar = 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, QubitDensityMatrix, binary_entropy

SINC_SERIES_CUTOFF = 1e-4
DEFICIT_SERIES_CUTOFF = 1e-2


@dataclass(frozen=True)
class BoxModel:
    m: float
    E0: float
    E1: float
    L: float
    c: float
    n: int = 0

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"bare mass must be positive, got {self.m}")
        if not self.L > 0:
            raise DomainError(f"box length must be positive, got {self.L}")
        if not self.c > 0:
            raise DomainError(f"speed of light must be positive, got {self.c}")
        # E1 == E0 is allowed: it is the no-entanglement control case
        if self.E1 < self.E0:
            raise DomainError(f"levels out of order: E1={self.E1} < E0={self.E0}")
        if int(self.n) != self.n:
            raise DomainError(f"mode index must be an integer, got {self.n}")

    @property
    def eps(self) -> float:
        return self.E1 - self.E0

    @property
    def p_n(self) -> float:
        return 2.0 * math.pi * self.n / self.L

    @property
    def masses(self) -> tuple[float, float]:
        c2 = self.c * self.c
        return self.m + self.E0 / c2, self.m + self.E1 / c2


@dataclass(frozen=True)
class BoostedBoxState:
    """Equal-weight superposition of (E_j, p_n + shift_j) branches."""

    energies: tuple[float, float]
    masses: tuple[float, float]
    p_n: float
    shifts: tuple[float, float]
    amplitude: float = 1.0 / math.sqrt(2.0)

    @property
    def momenta(self) -> tuple[float, float]:
        return self.p_n + self.shifts[0], self.p_n + self.shifts[1]

    @property
    def separable(self) -> bool:
        return self.shifts[0] == self.shifts[1]

    def boosted(self, v: float) -> "BoostedBoxState":
        """Apply a further boost by v; each branch shifts by its own M_j v."""
        M0, M1 = self.masses
        return BoostedBoxState(self.energies, self.masses, self.p_n,
                               (self.shifts[0] + M0 * v, self.shifts[1] + M1 * v), self.amplitude)


def prepared_state(model: BoxModel) -> BoostedBoxState:
    return BoostedBoxState((model.E0, model.E1), model.masses, model.p_n, (0.0, 0.0))


def boosted_state(model: BoxModel, v: float) -> BoostedBoxState:
    M0, M1 = model.masses
    return BoostedBoxState((model.E0, model.E1), (M0, M1), model.p_n, (M0 * v, M1 * v))


def mass_operator(model: BoxModel) -> np.ndarray:
    """m I + H / c^2 in the {E0, E1} basis."""
    return np.diag(model.masses)


def mass_operator_eigenvalues(model: BoxModel) -> tuple[float, float]:
    M0, M1 = np.diag(mass_operator(model))
    return float(M0), float(M1)


def operator_boost(model: BoxModel, v: float) -> BoostedBoxState:
    """Boost via exp(i M v x) with M the mass operator: diagonal in energy, kick M_jj v."""
    kicks = np.diag(mass_operator(model)) * v
    return BoostedBoxState((model.E0, model.E1), model.masses, model.p_n,
                           (float(kicks[0]), float(kicks[1])))


def phase_argument(model: BoxModel, v: float) -> float:
    """x = v L eps / (2 c^2)."""
    return v * model.L * model.eps / (2.0 * model.c * model.c)


def sinc(x: float) -> float:
    if abs(x) < SINC_SERIES_CUTOFF:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0
    return math.sin(x) / x


def sinc_deficit(x: float) -> float:
    """1 - |sin x / x|, accurate when it is far below machine epsilon."""
    if abs(x) < DEFICIT_SERIES_CUTOFF:
        x2 = x * x
        return x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)))
    return 1.0 - abs(math.sin(x) / x)


def overlap_f(model: BoxModel, v: float) -> complex:
    x = phase_argument(model, v)
    return cmath.exp(1j * x) * sinc(x)


def abs_f(model: BoxModel, v: float) -> float:
    return abs(sinc(phase_argument(model, v)))


def abs_f_small_beta(model: BoxModel, beta: float) -> float:
    return 1.0 - (model.eps * model.L / model.c) ** 2 / 24.0 * beta**2


def reduced_density_matrix(model: BoxModel, v: float) -> QubitDensityMatrix:
    f = overlap_f(model, v)
    return QubitDensityMatrix(0.5 + 0j, 0.5 * f, 0.5 * f.conjugate(), 0.5 + 0j)


def galilean_entropy(model: BoxModel, v: float) -> float:
    """Entropy (nats) of the internal state after tracing out momentum."""
    return binary_entropy(0.5 * sinc_deficit(phase_argument(model, v)))
