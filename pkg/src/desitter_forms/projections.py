"""Floating-point projections of the hyperboloids onto disc and cylinder.

Everything upstream of this module is exact integer arithmetic; the
maps here are presentation-layer only.

Two-sheeted surface (d < 0, upper sheet): normalized projection
(K, D) / (rho + S) into the open unit disc, rho = sqrt(-d).  Its disc
coordinate, read as a complex number w, is D + iK: real part D, imaginary
part K.  The half-plane chart z relates to w by w = (1 + iz)/(1 - iz),
and word actions become homographies of the display-order matrix
product (see action.homography_of_word).

One-sheeted surface (d > 0): cylinder chart s = S/(r + rho),
phi = atan2(D, K), with r = sqrt(K^2 + D^2).

Sun-eclipse composite (for d != 0, S >= 0 half): drop to the plane
S = rho, project centrally onto the sphere of radius rho, project
stereographically from (0,0,-rho) back to the plane S = 0, rescale by
1/rho.  On the two-sheeted upper sheet this equals the disc projection
identically, since there S = sqrt(r^2 + rho^2).
"""

from math import atan2, pi, sqrt
from typing import NamedTuple, Sequence, Tuple

from .action import Sl2

Triple = Sequence[float]


class DiscPoint(NamedTuple):
    Ktilde: float
    Dtilde: float


class CylinderPoint(NamedTuple):
    phi: float
    s: float


def _surface_gap(p: Triple, target: float) -> float:
    K, D, S = p
    gap = K * K + D * D - S * S - target
    scale = max(1.0, abs(K * K) + abs(D * D) + abs(S * S))
    return abs(gap) / scale


def project_two_sheet(p: Triple, d: int) -> DiscPoint:
    """(K,D)/(rho+S) for a point on the upper sheet of K^2+D^2-S^2=d<0."""
    if d >= 0:
        raise ValueError("two-sheet projection needs a negative discriminant")
    if _surface_gap(p, d) > 1e-9:
        raise ValueError("point %r is not on the surface of %d" % (tuple(p), d))
    K, D, S = p
    if S <= 0:
        raise ValueError("point %r is on the lower sheet" % (tuple(p),))
    rho = sqrt(-d)
    return DiscPoint(K / (rho + S), D / (rho + S))


def project_one_sheet(p: Triple, d: int) -> CylinderPoint:
    """Cylinder chart (phi, s) of a point on K^2+D^2-S^2=d>0.

    s = S/(r+rho) stays in (-1,1); phi = atan2(D,K) is normalized
    to [0, 2*pi).
    """
    if d <= 0:
        raise ValueError("one-sheet projection needs a positive discriminant")
    if _surface_gap(p, d) > 1e-9:
        raise ValueError("point %r is not on the surface of %d" % (tuple(p), d))
    K, D, S = p
    rho = sqrt(d)
    r = sqrt(K * K + D * D)
    phi = atan2(D, K) % (2 * pi)
    return CylinderPoint(phi, S / (r + rho))


def halfplane_to_disc(z: complex) -> complex:
    """w = (1+iz)/(1-iz), upper half plane onto the unit disc."""
    if z.imag < -1e-9:
        raise ValueError("z = %r is below the real axis" % (z,))
    den = 1 - 1j * z
    if den == 0:
        raise ValueError("pole of the disc chart")
    return (1 + 1j * z) / den


def disc_to_halfplane(w: complex) -> complex:
    """Inverse chart z = -i(w-1)/(w+1)."""
    if w == -1:
        raise ValueError("pole of the half-plane chart")
    return -1j * (w - 1) / (w + 1)


def apply_homography(L: Sl2, z: complex) -> complex:
    a, b, c, d = L
    den = c * z + d
    if den == 0:
        raise ValueError("homography pole at %r" % (z,))
    return (a * z + b) / den


def eclipse_project(p: Triple, d: int, lower: bool = False) -> DiscPoint:
    """The three-stage eclipse composite, rescaled to unit-disc coords.

    Defined on the S >= 0 half; pass lower=True to map the S <= 0 half
    through its mirror image.  Works for either sign of d (the d < 0
    upper sheet reproduces project_two_sheet exactly); the one-sheeted
    image fills the ring between radius sqrt(2)-1 and 1.
    """
    if d == 0:
        raise ValueError("eclipse composite needs a nonzero discriminant")
    if _surface_gap(p, d) > 1e-9:
        raise ValueError("point %r is not on the surface of %d" % (tuple(p), d))
    K, D, S = p
    if lower:
        S = -S
    if S < 0:
        raise ValueError("point %r is on the lower half; pass lower=True" % (tuple(p),))
    rho = sqrt(abs(d))
    # vertical drop to the plane S = rho
    x, y, z = K, D, rho
    # central projection onto the sphere of radius rho
    norm = sqrt(x * x + y * y + z * z)
    x, y, z = x * rho / norm, y * rho / norm, z * rho / norm
    # stereographic projection from (0, 0, -rho) to the plane S = 0
    t = rho / (z + rho)
    return DiscPoint(x * t / rho, y * t / rho)
