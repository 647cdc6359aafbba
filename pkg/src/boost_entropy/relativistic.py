"""Spin entropy of a Gaussian spin-1/2 wavepacket seen from a Lorentz-boosted frame.

All momenta are in units of mc, so the only packet parameter left is the
dimensionless width ``wtilde = w / (m c)``. Boosts are along +x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import (
    BlochVector,
    BoostParams,
    ConvergenceError,
    DomainError,
    binary_entropy,
)
from .quad import QuadResult, SphericalDomain, cartesian, integrate_spherical

DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class GaussianPacket:
    wtilde: float
    w: Optional[float] = None
    m: Optional[float] = None
    c: Optional[float] = None

    def __post_init__(self):
        if not self.wtilde > 0:
            raise DomainError(f"packet width must be positive, got {self.wtilde}")

    @classmethod
    def from_physical(cls, w: float, m: float, c: float) -> "GaussianPacket":
        if not (w > 0 and m > 0 and c > 0):
            raise DomainError("w, m and c must all be positive")
        return cls(wtilde=w / (m * c), w=w, m=m, c=c)

    @property
    def radial_cutoff(self) -> float:
        # 12 sigma of the Gaussian weight, never below 3 mc
        return max(12.0 * self.wtilde, 3.0)


@dataclass(frozen=True)
class SpinorAmplitudes:
    """Momentum-space spinor (a1, a2), vectorized over (px, py, pz) arrays.

    ``center`` and ``radius`` bound the effective support; ``scale`` is the
    length over which the amplitudes vary appreciably.
    """

    a1: Callable
    a2: Callable
    center: tuple = (0.0, 0.0, 0.0)
    radius: float = 1.0
    scale: float = 1.0


@dataclass(frozen=True)
class WignerFactors:
    b1: complex
    b2: complex
    K: float

    @property
    def rotation(self) -> tuple[complex, complex]:
        """(K b1, K b2): the unit-consistent part acting on the spin-up component."""
        return self.K * self.b1, self.K * self.b2


def gamma_minus_one(boost: BoostParams) -> float:
    # gamma - 1 = gamma^2 beta^2 / (gamma + 1), exact for small beta
    g = boost.gamma
    return g * g * boost.beta**2 / (g + 1.0)


def g_of_r(x, y, z, boost: BoostParams):
    """G(r) as it appears in the transformed Bloch z-component, r in units of mc."""
    g, b = boost.gamma, boost.beta
    s = np.sqrt(1.0 + x * x + y * y + z * z)
    num = (g + 1.0 - g * b * x) * (1.0 + s) + g * (x * x + y * y) + z * z
    den = (1.0 + s) * (1.0 + g * (s - b * x))
    return num / den


def g_deficit(x, y, z, boost: BoostParams):
    """1 - G(r) without cancellation: (gamma-1) z^2 / ((1+s)(1+gamma(s-beta x)))."""
    s = np.sqrt(1.0 + x * x + y * y + z * z)
    return gamma_minus_one(boost) * z * z / ((1.0 + s) * (1.0 + boost.gamma * (s - boost.beta * x)))


def nz_prime_deficit(packet: GaussianPacket, boost: BoostParams, tol: float = DEFAULT_TOL,
                     g: Optional[Callable] = None, budget: int = 20_000_000):
    """1 - n^z' by quadrature, returned as a ``QuadResult``.

    ``g`` replaces the built-in G(r) (used for mutation checks); the default
    path integrates the cancellation-free form of 1 - G.
    """
    gm1 = gamma_minus_one(boost)
    if g is None and gm1 == 0.0:
        return QuadResult(0.0, 0.0, 0, True)
    # dividing out the known leading scale keeps the integral O(1)
    norm = packet.wtilde**2 * (gm1 if gm1 > 0.0 else 1.0)

    if g is None:
        def integrand(r, th, ph):
            return g_deficit(*cartesian(r, th, ph), boost) / norm
    else:
        def integrand(r, th, ph):
            return (1.0 - g(*cartesian(r, th, ph), boost)) / norm

    dom = SphericalDomain(packet.radial_cutoff, integrand, weight=packet.wtilde)
    res = integrate_spherical(dom, tol, budget)
    scaled = QuadResult(res.value * norm, res.error_estimate * norm, res.evaluations, res.converged)
    if not res.converged:
        raise ConvergenceError("n^z' quadrature did not converge", 1.0 - scaled.value,
                               scaled.error_estimate, scaled.evaluations)
    return scaled


def nz_prime_quadrature(packet: GaussianPacket, boost: BoostParams, tol: float = DEFAULT_TOL,
                        g: Optional[Callable] = None) -> float:
    if not 0 < tol < 1e-2:
        raise DomainError(f"tolerance {tol} outside (0, 1e-2)")
    return 1.0 - nz_prime_deficit(packet, boost, tol, g).value


def series_deficit(packet: GaussianPacket, boost: BoostParams, order: int = 4) -> float:
    """1 - n^z' from the small-width expansion through ``order`` in wtilde."""
    if order not in (2, 4):
        raise DomainError(f"series order must be 2 or 4, got {order}")
    w2 = packet.wtilde**2
    g = boost.gamma
    gm1 = gamma_minus_one(boost)
    d = gm1 / (g + 1.0) * w2 / 4.0
    if order == 4:
        # 11g^3 + 9g^2 - 11g - 9 = (g - 1)(g + 1)(11g + 9)
        d -= gm1 * (11.0 * g + 9.0) / (g + 1.0) ** 2 * w2 * w2 / 32.0
    return d


def nz_prime_series(packet: GaussianPacket, boost: BoostParams, order: int = 4) -> float:
    return 1.0 - series_deficit(packet, boost, order)


def nz_prime_small_beta(packet: GaussianPacket, beta: float) -> float:
    if not abs(beta) < 1:
        raise DomainError(f"superluminal boost: beta={beta}")
    w2 = packet.wtilde**2
    return 1.0 - (w2 / 16.0 - 5.0 * w2 * w2 / 64.0) * beta**2


def _boost_back(qx, qy, qz, boost: BoostParams):
    """p = Lambda^{-1} q for on-shell q (units of mc); returns (p0, px, py, pz, q0)."""
    q0 = np.sqrt(1.0 + qx * qx + qy * qy + qz * qz)
    g, b = boost.gamma, boost.beta
    return g * (q0 + b * qx), g * (qx + b * q0), qy, qz, q0


def _wigner_arrays(px, py, pz, boost: BoostParams):
    p0 = np.sqrt(1.0 + px * px + py * py + pz * pz)
    g, b = boost.gamma, boost.beta
    q0 = g * (p0 - b * px)
    ch, sh = math.cosh(0.5 * boost.alpha), math.sinh(0.5 * boost.alpha)
    b1 = ch * (p0 + 1.0) - sh * (px + 1j * py)
    b2 = -sh * pz
    K = np.sqrt(p0 / (q0 * (p0 + 1.0) * (q0 + 1.0)))
    return K, b1, b2


def wigner_boost_amplitudes(p, boost: BoostParams) -> WignerFactors:
    """Wigner-rotation factors for a particle of momentum p (units of mc)."""
    px, py, pz = (float(v) for v in p)
    K, b1, b2 = _wigner_arrays(px, py, pz, boost)
    return WignerFactors(b1=complex(b1), b2=complex(b2), K=float(K))


def gaussian_spinor(packet: GaussianPacket) -> SpinorAmplitudes:
    """Spin-up Gaussian packet at rest."""
    w = packet.wtilde
    amp = (1.0 / (math.pi * w * w)) ** 0.75

    def a1(px, py, pz):
        return amp * np.exp(-(px * px + py * py + pz * pz) / (2.0 * w * w))

    def a2(px, py, pz):
        return np.zeros(np.broadcast(px, py, pz).shape)

    return SpinorAmplitudes(a1, a2, radius=packet.radial_cutoff, scale=w)


def boosted_spinor(packet: GaussianPacket, boost: BoostParams) -> SpinorAmplitudes:
    """The spin-up Gaussian packet as seen from the boosted frame, as a function of q."""
    rest = gaussian_spinor(packet)

    def parts(qx, qy, qz):
        p0, px, py, pz, q0 = _boost_back(qx, qy, qz, boost)
        K, b1, b2 = _wigner_arrays(px, py, pz, boost)
        return K * rest.a1(px, py, pz), b1, b2

    def a1(qx, qy, qz):
        ka, b1, _ = parts(qx, qy, qz)
        return ka * b1

    def a2(qx, qy, qz):
        ka, _, b2 = parts(qx, qy, qz)
        return ka * b2

    g = boost.gamma
    # the packet center p = 0 maps to q = (-gamma beta, 0, 0)
    center = (-g * boost.beta, 0.0, 0.0)
    return SpinorAmplitudes(a1, a2, center=center, radius=12.0 * g * packet.wtilde + 1e-3,
                            scale=packet.wtilde)


def _spinor_integral(psi: SpinorAmplitudes, density, tol: float):
    def integrand(r, th, ph):
        q = cartesian(r, th, ph, psi.center)
        return density(psi.a1(*q), psi.a2(*q))

    res = integrate_spherical(SphericalDomain(psi.radius, integrand, scale=psi.scale), tol)
    if not res.converged:
        raise ConvergenceError("spinor quadrature did not converge", res.value,
                               res.error_estimate, res.evaluations)
    return res.value


def spinor_norm(psi: SpinorAmplitudes, tol: float = DEFAULT_TOL) -> float:
    return _spinor_integral(psi, lambda a1, a2: abs(a1) ** 2 + abs(a2) ** 2, tol)


def bloch_from_amplitudes(psi: SpinorAmplitudes, tol: float = DEFAULT_TOL) -> BlochVector:
    nz = _spinor_integral(psi, lambda a1, a2: abs(a1) ** 2 - abs(a2) ** 2, tol)
    coh = _spinor_integral(psi, lambda a1, a2: 2.0 * a1 * np.conj(a2) + 0j, tol)
    return BlochVector(float(coh.real), float(-coh.imag), float(nz))


def peres_entropy_exact(packet: GaussianPacket, boost: BoostParams, tol: float = DEFAULT_TOL) -> float:
    """Spin entropy (nats) from the quadrature value of n^z'."""
    deficit = nz_prime_deficit(packet, boost, tol).value
    if deficit < 0.0:
        deficit = 0.0
    return binary_entropy(0.5 * deficit)


def leading_t(packet: GaussianPacket, boost: BoostParams) -> float:
    return packet.wtilde**2 / 8.0 * gamma_minus_one(boost) / (boost.gamma + 1.0)


def peres_entropy_leading(packet: GaussianPacket, boost: BoostParams) -> float:
    """t (1 - ln t) with t = (wtilde^2 / 8)(gamma - 1)/(gamma + 1)."""
    t = leading_t(packet, boost)
    return 0.0 if t == 0.0 else t * (1.0 - math.log(t))
