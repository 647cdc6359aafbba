"""Adaptive cubature over R^3 in spherical coordinates.

Boxes in (u, theta, phi), with r = scale * u, are integrated with a tensor
Gauss-Kronrod 7/15 rule. Swapping the Kronrod weights for the embedded Gauss
weights along one axis gives that axis' error estimate; the box with the
largest total estimate is split in half along its worst axis until the
global estimate meets the tolerance or the evaluation budget runs out.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

# Gauss-Kronrod 15-point abscissae (positive half) and weights; every other
# node from index 1 is a 7-point Gauss node.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD = np.concatenate([_WGK[:-1], _WGK[::-1]])
_g_half = np.zeros(8)
_g_half[1::2] = _WG
GAUSS = np.concatenate([_g_half[:-1], _g_half[::-1]])

ABS_THRESHOLD = 1e-8

Integrand = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class SphericalDomain:
    """Integration region r in [0, r_max], full solid angle.

    ``integrand(r, theta, phi)`` takes broadcastable arrays. If ``weight`` is
    set it is the width of the normalized Gaussian
    exp(-r^2/w^2) / (w^3 pi^{3/2}) multiplying the integrand; ``scale`` sets
    the radial unit for subdivision and defaults to ``weight`` (or 1).
    """

    r_max: float
    integrand: Integrand
    weight: Optional[float] = None
    scale: Optional[float] = None

    def __post_init__(self):
        if not self.r_max > 0:
            raise ValueError(f"r_max must be positive, got {self.r_max}")
        if self.weight is not None and not self.weight > 0:
            raise ValueError(f"Gaussian width must be positive, got {self.weight}")
        if self.scale is not None and not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")

    @property
    def radial_scale(self) -> float:
        if self.scale is not None:
            return self.scale
        return self.weight if self.weight is not None else 1.0


@dataclass(frozen=True)
class QuadResult:
    value: complex | float
    error_estimate: float
    evaluations: int
    converged: bool


def gaussian_weight(r, width: float):
    return np.exp(-(r / width) ** 2) / (width**3 * math.pi**1.5)


def _initial_breaks(u_max: float) -> list[float]:
    pts = [u for u in (1.0, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0) if u < u_max]
    return [0.0, *pts, u_max]


class _Rule:
    """Evaluates one box; holds the domain-specific pieces."""

    def __init__(self, domain: SphericalDomain):
        self.domain = domain
        self.scale = domain.radial_scale
        self.n = NODES.size**3

    def __call__(self, box):
        (u0, u1), (t0, t1), (p0, p1) = box
        hu, ht, hp = 0.5 * (u1 - u0), 0.5 * (t1 - t0), 0.5 * (p1 - p0)
        u = 0.5 * (u0 + u1) + hu * NODES
        th = 0.5 * (t0 + t1) + ht * NODES
        ph = 0.5 * (p0 + p1) + hp * NODES
        r = (self.scale * u)[:, None, None]
        tt = th[None, :, None]
        pp = ph[None, None, :]
        f = self.domain.integrand(r, tt, pp)
        jac = r**2 * np.sin(tt)
        if self.domain.weight is not None:
            jac = jac * gaussian_weight(r, self.domain.weight)
        vals = np.broadcast_to(f * jac, (NODES.size,) * 3)
        vol = self.scale * hu * ht * hp

        # contract the phi axis first, then theta, then u
        kp = vals @ KRONROD
        gp = vals @ GAUSS
        kk = kp @ KRONROD
        kg = kp @ GAUSS
        value = vol * (KRONROD @ kk)
        err_u = abs(value - vol * (GAUSS @ kk))
        err_t = abs(value - vol * (KRONROD @ kg))
        err_p = abs(value - vol * (KRONROD @ (gp @ KRONROD)))
        errs = (err_u, err_t, err_p)
        return value, errs


def _split(box, axis):
    lo, hi = box[axis]
    mid = 0.5 * (lo + hi)
    left, right = list(box), list(box)
    left[axis] = (lo, mid)
    right[axis] = (mid, hi)
    return tuple(left), tuple(right)


def _target(value, tol: float) -> float:
    mag = abs(value)
    return tol * mag if mag > ABS_THRESHOLD else tol


def integrate_spherical(domain: SphericalDomain, tol: float = 1e-8, budget: int = 20_000_000) -> QuadResult:
    """Integrate ``domain.integrand`` (times Jacobian and optional weight) over the ball.

    Tolerance is relative when |value| > 1e-8 and absolute otherwise.
    Running out of budget returns ``converged=False`` with the best estimate.
    """
    if not 1e-13 < tol < 1e-2:
        raise ValueError(f"tolerance {tol} outside (1e-13, 1e-2)")
    if budget < 1000:
        raise ValueError(f"budget {budget} below 1000 evaluations")
    rule = _Rule(domain)
    u_max = domain.r_max / rule.scale
    ub = _initial_breaks(u_max)
    tb = (0.0, 0.5 * math.pi, math.pi)
    pb = (0.0, math.pi, 2.0 * math.pi)

    order = itertools.count()
    heap = []
    done = {}
    evaluations = 0

    def push(box):
        nonlocal evaluations
        value, errs = rule(box)
        evaluations += rule.n
        idx = next(order)
        done[idx] = (value, sum(errs))
        heapq.heappush(heap, (-sum(errs), idx, box, errs))

    for u in zip(ub[:-1], ub[1:]):
        for t in zip(tb[:-1], tb[1:]):
            for p in zip(pb[:-1], pb[1:]):
                push((u, t, p))

    def totals():
        vals = [v for v, _ in done.values()]
        if any(isinstance(v, complex) or np.iscomplexobj(v) for v in vals):
            total = complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))
        else:
            total = math.fsum(float(v) for v in vals)
        return total, math.fsum(e for _, e in done.values())

    total, err = totals()
    while err > _target(total, tol):
        if evaluations + 2 * rule.n > budget:
            return QuadResult(_clean(total), err, evaluations, False)
        _, idx, box, errs = heapq.heappop(heap)
        del done[idx]
        axis = int(np.argmax(errs))
        for half in _split(box, axis):
            push(half)
        total, err = totals()
    return QuadResult(_clean(total), err, evaluations, True)


def _clean(v):
    if isinstance(v, complex) or np.iscomplexobj(v):
        return complex(v)
    return float(v)


def cartesian(r, theta, phi, center=(0.0, 0.0, 0.0)):
    """Cartesian coordinates of spherical points around ``center``."""
    st = np.sin(theta)
    return (
        center[0] + r * st * np.cos(phi),
        center[1] + r * st * np.sin(phi),
        center[2] + r * np.cos(theta),
    )
