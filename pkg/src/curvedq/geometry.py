"""Near-surface metric patches and curvature data for surfaces of revolution.

At normal offset q from an axially symmetric surface, the squared line
element factorizes as

    a1(w)^2 (1 + q k1)^2 dw^2 + a2(w)^2 (1 + q k2)^2 dphi^2 + dq^2,

with k1, k2 the principal curvatures read off the shell factors.  For a
graph-of-revolution surface z = S(rho) (w = rho):

    a1 = Z = sqrt(1 + S_rho^2),   a2 = rho,
    k1 = -S_rhorho / Z^3,         k2 = -S_rho / (rho Z),

and for a torus of major radius R and minor radius a (w = theta):

    a1 = a, k1 = 1/a,   a2 = R + a cos(theta), k2 = cos(theta)/(R + a cos(theta)).

The mean and Gaussian curvatures are h = (k1 + k2)/2 and k = k1 k2.  The
volume density near the surface is a1 a2 F with F = 1 + 2 q h + q^2 k, and
squeezing a particle onto the surface through the Laplacian route leaves
the attractive curvature potential

    V_C = -(h^2 - k)/2 = -((k1 - k2)/2)^2 / 2        (hbar = m = 1),

which vanishes exactly at umbilic points (k1 = k2).  These sign
conventions follow the shell factors above; V_C is insensitive to the
overall orientation since only (k1 - k2)^2 enters.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .shapes import eval_jet2, eval_jet3


class AxisSingularityError(ValueError):
    """The domain touches rho = 0 but the shape has a slope there."""


class FocalSurfaceError(ValueError):
    """Normal offset q reached a focal point: a shell factor 1 + q*k_i <= 0."""


@dataclass(frozen=True)
class MetricPatch:
    """One-coordinate family of metric data for an axially symmetric surface.

    All fields past `boundary` are pure evaluators of the coordinate w.
    `d_*` are first derivatives; `d2_a1`, `d2_a2` second derivatives (the
    Hermitian-momentum operator coefficients need them).
    """

    label: str                      # "rho" for graphs, "theta" for the torus
    domain: tuple
    boundary: str                   # "periodic" | "open"
    a1: Callable
    a2: Callable
    k1: Callable
    k2: Callable
    d_a1: Callable
    d_a2: Callable
    d_k1: Callable
    d_k2: Callable
    d2_a1: Callable
    d2_a2: Callable


@dataclass(frozen=True)
class CurvatureSample:
    """Pointwise curvature data; z is a1(w) (the slope factor Z for graphs)."""

    w: float
    z: float
    k1: float
    k2: float
    h: float
    k: float
    vc: float
    f: float


def mean_curvature(k1, k2):
    return 0.5 * (k1 + k2)


def gaussian_curvature(k1, k2):
    return k1 * k2


def curvature_potential(k1, k2):
    """V_C = -(h^2 - k)/2, computed as -((k1-k2)/2)^2/2 so it is exactly
    non-positive and exactly zero at umbilic points."""
    d = 0.5 * (k1 - k2)
    return -0.5 * d * d


def rescaling_factor(h, k, q):
    """Volume rescaling F = 1 + 2 q h + q^2 k between shell and surface measures."""
    return 1.0 + 2.0 * q * h + q * q * k


def _graph_frame(shape, rho):
    """(Z, Z', Z'', k1, k1', k2, k2') for a graph shape at rho, from a third-order jet."""
    jet = eval_jet3(shape, rho)
    s1, s2, s3 = jet.d1, jet.d2, jet.d3
    z = math.sqrt(1.0 + s1 * s1)
    dz = s1 * s2 / z
    d2z = (s2 * s2 + s1 * s3) / z - (s1 * s2) ** 2 / z**3
    k1 = -s2 / z**3
    dk1 = -s3 / z**3 + 3.0 * s2 * dz / z**4
    if rho == 0.0:
        # axis limit with S_rho(0) = 0: S_rho/rho -> S_rhorho(0)
        k2 = -s2 / z
        dk2 = -0.5 * s3 / z
    else:
        k2 = -s1 / (rho * z)
        dk2 = -s2 / (rho * z) + s1 * (z + rho * dz) / (rho * z) ** 2
    return z, dz, d2z, k1, dk1, k2, dk2


def graph_metric_patch(shape, domain):
    """Metric patch for the surface z = S(rho) over a rho interval.

    The domain may touch rho = 0 only if S_rho(0) = 0 (smooth cap); there
    k2 is evaluated by its limit -S_rhorho(0)/Z(0) rather than by an
    epsilon offset.  Raises AxisSingularityError otherwise.
    """
    lo, hi = float(domain[0]), float(domain[1])
    if not lo < hi:
        raise ValueError("empty rho domain")
    if lo < 0.0:
        raise ValueError("rho domain must be non-negative")
    if lo == 0.0 and eval_jet2(shape, 0.0).d1 != 0.0:
        raise AxisSingularityError(
            "rho = 0 lies in the domain but S_rho(0) != 0; the surface has a conical point"
        )

    def a1(w):
        return _graph_frame(shape, w)[0]

    def d_a1(w):
        return _graph_frame(shape, w)[1]

    def d2_a1(w):
        return _graph_frame(shape, w)[2]

    def k1(w):
        return _graph_frame(shape, w)[3]

    def d_k1(w):
        return _graph_frame(shape, w)[4]

    def k2(w):
        return _graph_frame(shape, w)[5]

    def d_k2(w):
        return _graph_frame(shape, w)[6]

    return MetricPatch(
        label="rho",
        domain=(lo, hi),
        boundary="open",
        a1=a1,
        a2=lambda w: w,
        k1=k1,
        k2=k2,
        d_a1=d_a1,
        d_a2=lambda w: 1.0,
        d_k1=d_k1,
        d_k2=d_k2,
        d2_a1=d2_a1,
        d2_a2=lambda w: 0.0,
    )


def torus_metric_patch(major_radius, minor_radius):
    """Metric patch for a torus, w = theta, periodic on [0, 2*pi).

    theta = 0 is the outer equator.  Requires 0 < a < R; a >= R would
    self-intersect.
    """
    R, a = float(major_radius), float(minor_radius)
    if not 0.0 < a < R:
        raise ValueError(f"torus radii must satisfy 0 < a < R, got a={a}, R={R}")
    return MetricPatch(
        label="theta",
        domain=(0.0, 2.0 * math.pi),
        boundary="periodic",
        a1=lambda w: a + 0.0 * np.asarray(w, dtype=float),
        a2=lambda w: R + a * np.cos(w),
        k1=lambda w: 1.0 / a + 0.0 * np.asarray(w, dtype=float),
        k2=lambda w: np.cos(w) / (R + a * np.cos(w)),
        d_a1=lambda w: 0.0 * np.asarray(w, dtype=float),
        d_a2=lambda w: -a * np.sin(w),
        d_k1=lambda w: 0.0 * np.asarray(w, dtype=float),
        d_k2=lambda w: -R * np.sin(w) / (R + a * np.cos(w)) ** 2,
        d2_a1=lambda w: 0.0 * np.asarray(w, dtype=float),
        d2_a2=lambda w: -a * np.cos(w),
    )


def curvature_sample(patch, w, q=0.0):
    """Curvatures, V_C and the rescaling factor F at (w, q).

    Raises FocalSurfaceError when q reaches a focal distance (a shell
    factor 1 + q*k_i drops to zero or below); the metric factorization is
    meaningless there.
    """
    w = float(w)
    if patch.boundary == "open":
        lo, hi = patch.domain
        if not lo <= w <= hi:
            raise ValueError(f"coordinate {w} outside patch domain [{lo}, {hi}]")
    k1 = float(patch.k1(w))
    k2 = float(patch.k2(w))
    shell1 = 1.0 + q * k1
    shell2 = 1.0 + q * k2
    if shell1 <= 0.0 or shell2 <= 0.0:
        raise FocalSurfaceError(
            f"offset q={q} reaches the focal surface (shell factors {shell1:.3g}, {shell2:.3g})"
        )
    h = mean_curvature(k1, k2)
    k = gaussian_curvature(k1, k2)
    return CurvatureSample(
        w=w,
        z=float(patch.a1(w)),
        k1=k1,
        k2=k2,
        h=h,
        k=k,
        vc=curvature_potential(k1, k2),
        f=rescaling_factor(h, k, q),
    )
