"""Matching the box model to a Gaussian packet at leading order in beta^2."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import DomainError, binary_entropy, boost_from_beta
from .galilean import BoxModel, galilean_entropy, phase_argument, sinc_deficit
from .relativistic import DEFAULT_TOL, GaussianPacket, nz_prime_deficit

MAX_BETA = 0.1


class DegenerateMatchError(DomainError):
    """eps = 0: neither regime entangles, so there is nothing to match."""


def box_coefficient(model: BoxModel) -> float:
    """beta^2 coefficient of 1 - |f|: eps^2 L^2 / (24 c^2)."""
    return (model.eps * model.L / model.c) ** 2 / 24.0


def packet_coefficient(wtilde: float, order: int = 2) -> float:
    """beta^2 coefficient of 1 - n^z' at small beta, through wtilde^order."""
    w2 = wtilde * wtilde
    return w2 / 16.0 if order == 2 else w2 / 16.0 - 5.0 * w2 * w2 / 64.0


def match_box_to_packet(model: BoxModel) -> float:
    """Packet width whose leading beta^2 coefficient equals the box model's."""
    if model.eps == 0.0:
        raise DegenerateMatchError("eps = 0 gives no entanglement in either regime")
    return math.sqrt(2.0 / 3.0) * model.eps * model.L / model.c


def compton_wavelength(m: float, c: float) -> float:
    return 2.0 * math.pi / (m * c)


def compton_sides(model: BoxModel) -> tuple[float, float]:
    """Both sides of the identification written with the Compton wavelength.

    Left: (eps/c)^2 L^2 / 24. Right: w^2 lambda^2 / (64 pi^2) with the physical
    width w = m c wtilde of the matched packet.
    """
    lam = compton_wavelength(model.m, model.c)
    w = model.m * model.c * match_box_to_packet(model)
    return (model.eps / model.c) ** 2 * model.L**2 / 24.0, w * w * lam * lam / (64.0 * math.pi**2)


@dataclass(frozen=True)
class ComparisonRow:
    beta: float
    entropy_relativistic: float
    entropy_galilean: float
    deficit_relativistic: float
    deficit_galilean: float

    @property
    def ratio(self) -> float:
        """Galilean over relativistic entropy; 1 by convention at 0/0."""
        if self.entropy_relativistic == 0.0 and self.entropy_galilean == 0.0:
            return 1.0
        if self.entropy_relativistic == 0.0:
            return math.inf
        return self.entropy_galilean / self.entropy_relativistic

    @property
    def deficit_gap(self) -> float:
        """|(1 - |f|) - (1 - n^z')| relative to 1 - n^z'; 0 at beta = 0."""
        if self.deficit_relativistic == 0.0:
            return 0.0 if self.deficit_galilean == 0.0 else math.inf
        return abs(self.deficit_galilean - self.deficit_relativistic) / self.deficit_relativistic


@dataclass(frozen=True)
class RegimeMatch:
    model: BoxModel
    wtilde_equiv: float
    beta_grid: tuple
    rows: list = field(default_factory=list)


def compare_at(model: BoxModel, wtilde: float, beta: float, tol: float = DEFAULT_TOL) -> ComparisonRow:
    if abs(beta) > MAX_BETA:
        raise DomainError(f"|beta|={abs(beta)} outside the leading-order regime (<= {MAX_BETA})")
    packet = GaussianPacket(wtilde)
    boost = boost_from_beta(beta)
    v = beta * model.c
    # the deficit peres_entropy_exact is built from
    d_rel = max(nz_prime_deficit(packet, boost, tol).value, 0.0)
    return ComparisonRow(
        beta=beta,
        entropy_relativistic=binary_entropy(0.5 * d_rel),
        entropy_galilean=galilean_entropy(model, v),
        deficit_relativistic=d_rel,
        deficit_galilean=sinc_deficit(phase_argument(model, v)),
    )


def entropy_comparison(model: BoxModel, beta_grid, tol: float = DEFAULT_TOL) -> RegimeMatch:
    wt = match_box_to_packet(model)
    grid = tuple(float(b) for b in beta_grid)
    rows = [compare_at(model, wt, b, tol) for b in grid]
    return RegimeMatch(model=model, wtilde_equiv=wt, beta_grid=grid, rows=rows)
