"""Self-verification: oracle comparisons, limits and invariants across all modules.

Each check returns a pass flag plus a one-line detail. ``g`` substitutes the
G(r) used by the quadrature checks, which lets tests confirm a corrupted
formula is caught.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import compare, galilean, quad, relativistic
from .core import (
    BlochVector,
    boost_from_beta,
    entropy_from_bloch,
    entropy_from_density_matrix,
    entropy_from_modulus,
)
from .galilean import BoxModel
from .relativistic import GaussianPacket

DEFAULT_VERIFY_TOL = 1e-11


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _loglog_slope(xs, ys) -> float:
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


def check_entropy_limits(tol, g, rng):
    vals = (entropy_from_modulus(1.0), entropy_from_modulus(0.0), entropy_from_modulus(0.5))
    expect = (0.0, math.log(2.0), -0.75 * math.log(0.75) - 0.25 * math.log(0.25))
    ok = all(abs(a - b) <= 1e-15 for a, b in zip(vals, expect))
    return ok, f"S(1), S(0), S(0.5) = {vals}"


def check_bloch_rotation(tol, g, rng):
    worst = 0.0
    for _ in range(50):
        n = rng.normal(size=3)
        n *= rng.uniform(0, 1) / np.linalg.norm(n)
        q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
        worst = max(worst, abs(entropy_from_bloch(BlochVector(*n)) - entropy_from_bloch(BlochVector(*(q @ n)))))
    return worst <= 1e-12, f"max rotation change {worst:.3g}"


def check_quad_oracles(tol, g, rng):
    w = 0.5
    cases = [
        (lambda r, t, p: np.ones(1), 1.0, "normalization"),
        (lambda r, t, p: r * np.cos(t), 0.0, "odd"),
        (lambda r, t, p: r * r, 1.5 * w * w, "second moment"),
    ]
    errs = []
    for f, exact, _ in cases:
        res = quad.integrate_spherical(quad.SphericalDomain(6.0, f, weight=w), max(tol, 1e-12))
        errs.append(abs(res.value - exact))
    ok = errs[0] <= 10 * tol and errs[1] <= 10 * tol and errs[2] <= 10 * tol * 1.5 * w * w
    return ok, f"errors {errs}"


def check_separable_limits(tol, g, rng):
    s = [relativistic.peres_entropy_exact(GaussianPacket(w), boost_from_beta(0.0), tol) for w in (0.01, 0.1, 0.5)]
    m = BoxModel(1.0, 0.0, 1.0, 1.0, 1.0)
    s.append(galilean.galilean_entropy(m, 0.0))
    m0 = BoxModel(1.0, 0.5, 0.5, 1.0, 1.0)
    s.extend(galilean.galilean_entropy(m0, v) for v in (0.1, 1.0, 10.0))
    return max(s) <= 1e-10, f"max entropy {max(s):.3g}"


def check_wigner_identity(tol, g, rng):
    b0 = boost_from_beta(0.0)
    worst = 0.0
    for p in rng.normal(scale=2.0, size=(100, 3)):
        wf = relativistic.wigner_boost_amplitudes(p, b0)
        kb1, kb2 = wf.rotation
        worst = max(worst, abs(kb1 - 1.0), abs(kb2))
    return worst <= 1e-12, f"max |K b1 - 1|, |K b2| = {worst:.3g}"


def check_quadrature_vs_series(tol, g, rng):
    worst_ratio, slopes = 0.0, []
    for gamma in (1.005, 1.25, 7.0888):
        boost = boost_from_beta(math.sqrt(1.0 - 1.0 / gamma**2))
        ws, errs = (0.02, 0.05, 0.1), []
        for w in ws:
            p = GaussianPacket(w)
            e = abs(relativistic.nz_prime_deficit(p, boost, tol, g).value - relativistic.series_deficit(p, boost, 4))
            errs.append(e)
            worst_ratio = max(worst_ratio, e / (10 * w**6))
        slopes.append(_loglog_slope(ws, errs))
    ok = worst_ratio <= 1.0 and min(slopes) >= 5.5
    return ok, f"max err/(10 w^6) = {worst_ratio:.3g}, slopes {np.round(slopes, 3).tolist()}"


def check_small_beta(tol, g, rng):
    p, beta = GaussianPacket(0.1), 0.01
    d = relativistic.nz_prime_deficit(p, boost_from_beta(beta), tol, g).value
    err = abs((1.0 - d) - relativistic.nz_prime_small_beta(p, beta))
    return err <= 1e-9, f"|quad - double expansion| = {err:.3g}"


def check_leading_entropy(tol, g, rng):
    worst = 0.0
    # dyadic t keeps 1 - 2t exact in binary floating point
    for t in 2.0 ** -np.arange(14, 34):
        exact = entropy_from_modulus(1.0 - 2.0 * t)
        worst = max(worst, abs(exact - t * (1.0 - math.log(t))) / (10 * t * t))
    p, b = GaussianPacket(0.1), boost_from_beta(0.6)
    rel = abs(relativistic.peres_entropy_exact(p, b, tol) - relativistic.peres_entropy_leading(p, b))
    rel /= relativistic.peres_entropy_leading(p, b)
    return worst <= 1.0 and rel <= 2 * 0.1**2, f"Taylor err/(10 t^2) = {worst:.3g}; exact vs leading rel {rel:.3g}"


def check_bloch_transversality(tol, g, rng):
    p, b = GaussianPacket(0.1), boost_from_beta(0.6)
    n = relativistic.bloch_from_amplitudes(relativistic.boosted_spinor(p, b), max(tol, 1e-10))
    dz = abs(n.nz - relativistic.nz_prime_quadrature(p, b, tol, g))
    norm = relativistic.spinor_norm(relativistic.boosted_spinor(p, b), max(tol, 1e-10))
    ok = abs(n.nx) <= 1e-7 and abs(n.ny) <= 1e-7 and dz <= 1e-7 and abs(norm - 1) <= 1e-9
    return ok, f"n' = ({n.nx:.3g}, {n.ny:.3g}, {n.nz:.12f}), |dz| = {dz:.3g}, norm-1 = {norm - 1:.3g}"


def check_parity_monotonicity(tol, g, rng):
    p = GaussianPacket(0.1)
    par = max(abs(relativistic.nz_prime_quadrature(p, boost_from_beta(b), tol, g)
                  - relativistic.nz_prime_quadrature(p, boost_from_beta(-b), tol, g)) for b in (0.3, 0.9))
    s = [relativistic.peres_entropy_exact(p, boost_from_beta(b), tol) for b in np.arange(1, 10) / 10]
    ok = par <= 1e-13 and all(a < b for a, b in zip(s, s[1:]))
    return ok, f"parity gap {par:.3g}; entropy increasing in beta: {all(a < b for a, b in zip(s, s[1:]))}"


def _position_overlap(k: float, L: float, panels: int = 8, nodes: int = 48) -> complex:
    """(1/L) * integral_0^L exp(i k x) dx by composite Gauss-Legendre."""
    t, w = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(0.0, L, panels + 1)
    total = 0j
    for a, b in zip(edges[:-1], edges[1:]):
        x = 0.5 * (b - a) * t + 0.5 * (a + b)
        total += 0.5 * (b - a) * np.sum(w * np.exp(1j * k * x))
    return total / L


def check_overlap_oracle(tol, g, rng):
    worst = 0.0
    for _ in range(100):
        m = BoxModel(rng.uniform(0.1, 10), rng.uniform(-5, 0), rng.uniform(0, 5), rng.uniform(0.1, 5), rng.uniform(0.5, 5))
        v = rng.uniform(-10, 10)
        M0, M1 = m.masses
        worst = max(worst, abs(galilean.overlap_f(m, v) - _position_overlap((M1 - M0) * v, m.L)))
    return worst <= 1e-10, f"max |closed form - position integral| = {worst:.3g}"


def check_galilean_limit(tol, g, rng):
    cs = np.array([10.0, 1e2, 1e3, 1e4])
    models = [BoxModel(1.0, 0.0, 1.0, 1.0, c) for c in cs]
    s = [galilean.galilean_entropy(m, 0.1) for m in models]
    t = [0.5 * galilean.sinc_deficit(galilean.phase_argument(m, 0.1)) for m in models]
    slope = _loglog_slope(cs, t)
    ok = all(a > b for a, b in zip(s, s[1:])) and abs(slope + 4) <= 0.1
    return ok, f"entropies {np.array(s).tolist()}, t slope {slope:.4f}"


def check_density_matrix(tol, g, rng):
    worst = 0.0
    for _ in range(200):
        m = BoxModel(rng.uniform(0.1, 10), rng.uniform(-5, 0), rng.uniform(0, 5), rng.uniform(0.1, 5), rng.uniform(0.5, 5))
        v = rng.uniform(-10, 10)
        rho = galilean.reduced_density_matrix(m, v)
        worst = max(worst, abs(entropy_from_density_matrix(rho) - entropy_from_modulus(galilean.abs_f(m, v))))
    return worst <= 1e-12, f"max |S(rho) - S(|f|)| = {worst:.3g}"


def check_group_law(tol, g, rng):
    worst = 0.0
    for _ in range(100):
        m = BoxModel(rng.uniform(0.1, 10), 0.0, rng.uniform(0, 5), 1.0, rng.uniform(0.5, 5), n=int(rng.integers(-3, 4)))
        v1, v2 = rng.uniform(-5, 5, size=2)
        a = galilean.boosted_state(m, v1).boosted(v2)
        b = galilean.boosted_state(m, v1 + v2)
        c = galilean.operator_boost(m, v1 + v2)
        worst = max(worst, *(abs(x - y) for x, y in zip(a.momenta, b.momenta)),
                    *(abs(x - y) for x, y in zip(b.momenta, c.momenta)))
    ident = galilean.boosted_state(m, 0.0) == galilean.prepared_state(m)
    return worst <= 1e-12 and ident, f"max composition gap {worst:.3g}; identity {ident}"


def check_identification(tol, g, rng):
    m = BoxModel(1.0, 0.0, 1.0, 1.0, 1.0)
    wt = compare.match_box_to_packet(m)
    rt = abs(compare.packet_coefficient(wt) - compare.box_coefficient(m)) / compare.box_coefficient(m)
    lhs, rhs = compare.compton_sides(m)
    cw = abs(lhs - rhs) / lhs
    # agreement and w^2 shrinkage inside the asymptotic regime (eps L / c <= 0.1)
    gaps = []
    for scale in (0.1, 0.01):
        ms = BoxModel(1.0, 0.0, scale, 1.0, 1.0)
        gaps.append(compare.compare_at(ms, compare.match_box_to_packet(ms), 0.001, tol).deficit_gap)
    shrink = math.log(gaps[0] / gaps[1]) / math.log(10.0)
    ok = rt <= 1e-14 and cw <= 1e-14 and gaps[0] <= 0.05 and abs(shrink - 2.0) <= 0.1
    return ok, f"round trip {rt:.2g}, Compton {cw:.2g}, gaps {np.round(gaps, 8).tolist()}, shrink order {shrink:.3f}"


CHECKS: list[tuple[str, Callable]] = [
    ("core: entropy limits", check_entropy_limits),
    ("core: Bloch rotation invariance", check_bloch_rotation),
    ("quad: analytic Gaussian integrals", check_quad_oracles),
    ("separable-state limits", check_separable_limits),
    ("relativistic: identity Wigner rotation", check_wigner_identity),
    ("relativistic: quadrature vs w^4 series", check_quadrature_vs_series),
    ("relativistic: small-beta double expansion", check_small_beta),
    ("relativistic: leading-order entropy", check_leading_entropy),
    ("relativistic: Bloch transversality and norm", check_bloch_transversality),
    ("relativistic: parity and monotonicity", check_parity_monotonicity),
    ("galilean: sinc overlap vs position integral", check_overlap_oracle),
    ("galilean: c -> infinity limit", check_galilean_limit),
    ("galilean: density matrix entropy", check_density_matrix),
    ("galilean: boost group law", check_group_law),
    ("compare: parameter identification", check_identification),
]


def run_checks(tol: float = DEFAULT_VERIFY_TOL, g: Optional[Callable] = None, seed: int = 0) -> list[CheckResult]:
    out = []
    for name, fn in CHECKS:
        rng = np.random.default_rng(seed)
        try:
            ok, detail = fn(tol, g, rng)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), detail))
    return out
