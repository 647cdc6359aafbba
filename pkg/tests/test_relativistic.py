import math

import mpmath
import numpy as np
import pytest

from boost_entropy.core import ConvergenceError, DomainError, boost_from_beta, entropy_from_modulus
from boost_entropy.relativistic import (
    GaussianPacket,
    SpinorAmplitudes,
    bloch_from_amplitudes,
    boosted_spinor,
    g_deficit,
    g_of_r,
    gaussian_spinor,
    leading_t,
    nz_prime_deficit,
    nz_prime_quadrature,
    nz_prime_series,
    nz_prime_small_beta,
    peres_entropy_exact,
    peres_entropy_leading,
    series_deficit,
    spinor_norm,
    wigner_boost_amplitudes,
)


def w6_coefficient(g):
    # next term of the small-width expansion, from a symbolic moment expansion
    return -(g - 1) * (101 * g * g + 176 * g + 73) / (128 * (g + 1) ** 3)


def g_mp(x, y, z, beta):
    with mpmath.workdps(40):
        x, y, z, b = (mpmath.mpf(v) for v in (x, y, z, beta))
        g = 1 / mpmath.sqrt(1 - b * b)
        s = mpmath.sqrt(1 + x * x + y * y + z * z)
        num = (g + 1 - g * b * x) * (1 + s) + g * (x * x + y * y) + z * z
        return float(num / ((1 + s) * (1 + g * (s - b * x))))


@pytest.mark.parametrize("beta", [0.0, 0.3, -0.7, 0.99])
def test_g_at_origin(beta):
    assert g_of_r(0.0, 0.0, 0.0, boost_from_beta(beta)) == pytest.approx(1.0, abs=1e-15)


def test_g_identity_without_boost():
    rng = np.random.default_rng(1)
    x, y, z = rng.uniform(-20, 20, size=(3, 1000))
    assert np.max(np.abs(g_of_r(x, y, z, boost_from_beta(0.0)) - 1.0)) <= 1e-13


@pytest.mark.parametrize("r, beta", [((1.0, 0.0, 0.0), 0.6), ((0.3, -0.2, 0.7), 0.6), ((-2.0, 1.0, 3.0), 0.95)])
def test_g_against_high_precision(r, beta):
    assert g_of_r(*r, boost_from_beta(beta)) == pytest.approx(g_mp(*r, beta), rel=1e-14)


def test_g_deficit_is_one_minus_g():
    rng = np.random.default_rng(2)
    x, y, z = rng.uniform(-5, 5, size=(3, 2000))
    for beta in (0.1, -0.6, 0.99):
        b = boost_from_beta(beta)
        np.testing.assert_allclose(g_deficit(x, y, z, b), 1.0 - g_of_r(x, y, z, b), atol=5e-14)


def test_g_denominator_positive_and_g_bounded_above():
    rng = np.random.default_rng(3)
    n = 10**6
    d = rng.normal(size=(3, n))
    d *= rng.uniform(0, 20, size=n) / np.linalg.norm(d, axis=0)
    betas = rng.uniform(-0.999, 0.999, size=n)
    gam = 1 / np.sqrt((1 - betas) * (1 + betas))
    x, y, z = d
    s = np.sqrt(1 + x * x + y * y + z * z)
    num = (gam + 1 - gam * betas * x) * (1 + s) + gam * (x * x + y * y) + z * z
    den = (1 + s) * (1 + gam * (s - betas * x))
    G = num / den
    assert np.all(den > 0)
    assert np.all(np.isfinite(G))
    assert np.all(G <= 1 + 1e-12)
    for i in range(0, n, 100_000):
        assert g_of_r(x[i], y[i], z[i], boost_from_beta(betas[i])) == pytest.approx(G[i], rel=1e-13, abs=1e-15)


def test_g_can_be_negative_far_from_origin():
    # G itself is not a probability density; only its Gaussian average is bounded
    b = boost_from_beta(0.99)
    assert g_of_r(10.0, 0.0, 10.0, b) == pytest.approx(g_mp(10, 0, 10, 0.99), rel=1e-13)
    assert g_of_r(10.0, 0.0, 10.0, b) < 0


@pytest.mark.parametrize("w, beta", [(0.1, 0.6), (1.0, 0.99), (3.0, -0.999)])
def test_nz_prime_in_unit_interval(w, beta):
    nz = nz_prime_quadrature(GaussianPacket(w), boost_from_beta(beta), 1e-9)
    assert 0 < nz <= 1


def test_packet_from_physical():
    p = GaussianPacket.from_physical(w=3.0, m=2.0, c=15.0)
    assert p.wtilde == pytest.approx(0.1, rel=1e-14)
    with pytest.raises(DomainError):
        GaussianPacket(0.0)


@pytest.mark.parametrize("w", [0.01, 0.1, 1.0])
def test_quadrature_without_boost(w):
    assert nz_prime_quadrature(GaussianPacket(w), boost_from_beta(0.0), 1e-10) == 1.0


def test_quadrature_small_width_small_beta():
    p, b = GaussianPacket(0.1), boost_from_beta(0.1)
    nz = nz_prime_quadrature(p, b, 1e-10)
    assert 1 - nz == pytest.approx(6.25e-6, rel=0.02)
    assert abs(nz - nz_prime_series(p, b, 4)) <= 10 * 0.1**6


def test_quadrature_ultrarelativistic():
    p, b = GaussianPacket(0.05), boost_from_beta(0.99)
    assert b.gamma == pytest.approx(7.0888, abs=1e-4)
    assert abs(nz_prime_quadrature(p, b, 1e-10) - nz_prime_series(p, b, 4)) <= 10 * 0.05**6


@pytest.mark.parametrize("gamma", [1.005, 1.25, 7.0888])
def test_residual_matches_next_series_term(gamma):
    b = boost_from_beta(math.sqrt(1 - 1 / gamma**2))
    for w in (0.0125, 0.02):
        p = GaussianPacket(w)
        resid = nz_prime_deficit(p, b, 1e-12).value - series_deficit(p, b, 4)
        assert resid == pytest.approx(-w6_coefficient(b.gamma) * w**6, rel=0.01)


def test_residual_slope_when_halving_width():
    b = boost_from_beta(0.6)
    ws = np.array([0.1, 0.05, 0.025, 0.0125])
    errs = [abs(nz_prime_deficit(GaussianPacket(w), b, 1e-12).value - series_deficit(GaussianPacket(w), b, 4))
            for w in ws]
    slope = np.polyfit(np.log(ws), np.log(errs), 1)[0]
    assert slope >= 5.5


def test_series_examples():
    p = GaussianPacket(0.1)
    assert nz_prime_series(p, boost_from_beta(0.0), 2) == 1.0
    assert nz_prime_series(p, boost_from_beta(0.0), 4) == 1.0
    assert 1 - nz_prime_series(p, boost_from_beta(0.6), 2) == pytest.approx(0.25 / 2.25 * 0.01 / 4, rel=1e-13)
    with pytest.raises(DomainError):
        nz_prime_series(p, boost_from_beta(0.6), 6)


def test_series_width_squared_coefficient_limit():
    b = boost_from_beta(1 - 1e-12)
    p = GaussianPacket(1.0)
    assert series_deficit(p, b, 2) == pytest.approx(0.25, rel=1e-5)


def test_factored_w4_coefficient_matches_expanded_polynomial():
    for g in (1.0, 1.001, 1.25, 3.0, 7.0888, 100.0):
        beta = math.sqrt(1 - 1 / g**2)
        b = boost_from_beta(beta)
        p = GaussianPacket(0.3)
        w4 = series_deficit(p, b, 2) - series_deficit(p, b, 4)
        G = b.gamma
        expanded = (11 * G**3 + 9 * G**2 - 11 * G - 9) / (1 + G) ** 3 * 0.3**4 / 32
        assert w4 == pytest.approx(expanded, rel=1e-12, abs=1e-18)


def test_small_beta_examples():
    p = GaussianPacket(0.1)
    assert nz_prime_small_beta(p, 0.0) == 1.0
    assert 1 - nz_prime_small_beta(p, 0.1) == pytest.approx((6.25e-4 - 7.8125e-6) * 0.01, rel=1e-10)


def test_small_beta_agrees_with_series_to_beta4():
    w, beta = 0.1, 0.01
    p, b = GaussianPacket(w), boost_from_beta(beta)
    gap = abs(series_deficit(p, b, 2) - w * w * beta**2 / 16)
    assert gap <= w * w * beta**4


def test_small_beta_matches_quadrature():
    p = GaussianPacket(0.1)
    assert abs(nz_prime_quadrature(p, boost_from_beta(0.01), 1e-11) - nz_prime_small_beta(p, 0.01)) <= 1e-9


def test_wigner_identity():
    rng = np.random.default_rng(5)
    b0 = boost_from_beta(0.0)
    for p in rng.normal(scale=3, size=(50, 3)):
        wf = wigner_boost_amplitudes(p, b0)
        p0 = math.sqrt(1 + p @ p)
        assert wf.b1 == pytest.approx(p0 + 1, rel=1e-14)
        assert wf.b2 == 0
        assert wf.K == pytest.approx(1 / (p0 + 1), rel=1e-14)
        assert abs(wf.rotation[0] - 1) <= 1e-14


def test_wigner_at_packet_center():
    b = boost_from_beta(0.6)
    wf = wigner_boost_amplitudes((0, 0, 0), b)
    assert wf.b2 == 0
    assert wf.b1 == pytest.approx(2 * math.cosh(b.alpha / 2), rel=1e-15)


def test_wigner_spin_flip_source():
    b = boost_from_beta(0.6)
    wf = wigner_boost_amplitudes((0, 0, 0.5), b)
    assert wf.b2 == pytest.approx(-math.sinh(b.alpha / 2) * 0.5, rel=1e-15)
    assert wf.b2 != 0


def test_wigner_rotation_is_unitary():
    # |b1|^2 + |b2|^2 = (p0 + 1)(q0 + 1): K (b1, b2) has squared norm p0/q0
    rng = np.random.default_rng(6)
    for beta in (0.3, -0.8, 0.99):
        b = boost_from_beta(beta)
        for p in rng.normal(scale=2, size=(20, 3)):
            wf = wigner_boost_amplitudes(p, b)
            p0 = math.sqrt(1 + p @ p)
            q0 = b.gamma * (p0 - b.beta * p[0])
            assert abs(wf.rotation[0]) ** 2 + abs(wf.rotation[1]) ** 2 == pytest.approx(p0 / q0, rel=1e-13)


def test_bloch_of_rest_packet():
    n = bloch_from_amplitudes(gaussian_spinor(GaussianPacket(0.1)), 1e-10)
    assert (n.nx, n.ny) == (0.0, 0.0) or max(abs(n.nx), abs(n.ny)) <= 1e-12
    assert n.nz == pytest.approx(1.0, abs=1e-10)


def test_bloch_of_boosted_packet_matches_specialized_path():
    p, b = GaussianPacket(0.1), boost_from_beta(0.6)
    n = bloch_from_amplitudes(boosted_spinor(p, b), 1e-10)
    assert abs(n.nx) <= 1e-10 and abs(n.ny) <= 1e-10
    assert n.nz == pytest.approx(nz_prime_quadrature(p, b, 1e-11), abs=1e-10)


def test_bloch_of_equal_superposition():
    rest = gaussian_spinor(GaussianPacket(0.3))

    def half(px, py, pz):
        return rest.a1(px, py, pz) / math.sqrt(2)

    psi = SpinorAmplitudes(half, half, radius=rest.radius, scale=0.3)
    n = bloch_from_amplitudes(psi, 1e-10)
    assert n.nx == pytest.approx(1.0, abs=1e-10)
    assert abs(n.ny) <= 1e-12 and abs(n.nz) <= 1e-12


def test_bloch_phase_gives_ny():
    rest = gaussian_spinor(GaussianPacket(0.3))
    psi = SpinorAmplitudes(lambda *q: rest.a1(*q) / math.sqrt(2), lambda *q: 1j * rest.a1(*q) / math.sqrt(2),
                           radius=rest.radius, scale=0.3)
    n = bloch_from_amplitudes(psi, 1e-10)
    # nx - i ny = 2 int a1 a2^* = -i
    assert n.ny == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("w, beta", [(0.1, 0.6), (0.5, 0.9), (0.05, -0.99)])
def test_boosted_packet_stays_normalized(w, beta):
    assert spinor_norm(boosted_spinor(GaussianPacket(w), boost_from_beta(beta)), 1e-10) == pytest.approx(1.0, abs=1e-9)


def test_exact_entropy_limits():
    assert peres_entropy_exact(GaussianPacket(0.1), boost_from_beta(0.0)) == 0.0
    assert peres_entropy_exact(GaussianPacket(1e-4), boost_from_beta(0.6)) < 1e-8


def test_exact_vs_leading_entropy():
    for w in (0.1, 0.05):
        p, b = GaussianPacket(w), boost_from_beta(0.6)
        exact, lead = peres_entropy_exact(p, b, 1e-11), peres_entropy_leading(p, b)
        assert exact > 0
        assert abs(exact - lead) / lead <= 2 * w * w


def test_leading_entropy_example():
    p, b = GaussianPacket(0.1), boost_from_beta(0.6)
    t = leading_t(p, b)
    assert t == pytest.approx(0.01 / 8 * 0.25 / 2.25, rel=1e-13)
    assert peres_entropy_leading(p, b) == pytest.approx(1.3724e-3, rel=1e-4)
    assert peres_entropy_leading(p, boost_from_beta(0.0)) == 0.0


def test_leading_form_is_taylor_of_exact():
    t = 1e-5
    exact = entropy_from_modulus(1 - 2 * t)
    assert abs(exact - t * (1 - math.log(t))) / exact <= 10 * t


def test_parity_in_beta():
    p = GaussianPacket(0.2)
    for beta in (0.2, 0.7, 0.95):
        a = nz_prime_quadrature(p, boost_from_beta(beta), 1e-11)
        b = nz_prime_quadrature(p, boost_from_beta(-beta), 1e-11)
        assert a == pytest.approx(b, abs=1e-14)


def test_entropy_grows_with_speed():
    p = GaussianPacket(0.1)
    s = [peres_entropy_exact(p, boost_from_beta(b), 1e-10) for b in np.arange(1, 10) / 10]
    assert all(x < y for x, y in zip(s, s[1:]))


def test_literal_g_through_hook_matches_default_path():
    p, b = GaussianPacket(0.1), boost_from_beta(0.6)
    lit = nz_prime_quadrature(p, b, 1e-6, g=g_of_r)
    assert lit == pytest.approx(nz_prime_quadrature(p, b, 1e-11), abs=1e-12)


def test_convergence_error_carries_estimate():
    with pytest.raises(ConvergenceError) as exc:
        nz_prime_deficit(GaussianPacket(0.1), boost_from_beta(0.6), 1e-12, budget=50_000)
    assert 0.99 < exc.value.estimate <= 1.0
    assert exc.value.error > 0
