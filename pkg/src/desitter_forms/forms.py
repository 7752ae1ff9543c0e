"""Integer binary quadratic forms and their two coordinate systems.

A form (m, n, k) stands for m*x^2 + n*y^2 + k*x*y.  The rotated coordinates
are K = k, D = m - n, S = m + n; an integer triple (K, D, S) comes from an
integer form exactly when D and S have the same parity (a "good point").
The discriminant k^2 - 4mn equals K^2 + D^2 - S^2.

All coefficients are kept inside the signed 64-bit range and every operation
that could leave it raises OverflowError instead of silently growing.
"""

from math import isqrt
from typing import NamedTuple, Optional

I64_MAX = 2**63 - 1
I64_MIN = -(2**63)


class Form(NamedTuple):
    m: int
    n: int
    k: int


class KdsPoint(NamedTuple):
    K: int
    D: int
    S: int


class Discriminant(NamedTuple):
    """A discriminant value together with its kind.

    kind is one of "elliptic" (value < 0), "parabolic" (value = 0),
    "hyperbolic-square" (value = root^2 > 0) or "hyperbolic-nonsquare".
    root is set only in the square case.
    """

    value: int
    kind: str
    root: Optional[int] = None


INVOLUTIONS = ("conjugate", "adjoint", "antipodal", "complementary", "opposite")


def check_range(*values: int) -> None:
    """Raise OverflowError if any value leaves the signed 64-bit range."""
    for v in values:
        if v > I64_MAX or v < I64_MIN:
            raise OverflowError("coefficient %d exceeds the signed 64-bit range" % v)


def form(m: int, n: int, k: int) -> Form:
    check_range(m, n, k)
    return Form(m, n, k)


def discriminant(f: Form) -> int:
    """k^2 - 4mn, computed exactly; overflow of the result is an error."""
    d = f.k * f.k - 4 * f.m * f.n
    check_range(d)
    return d


def evaluate(f: Form, x: int, y: int) -> int:
    return f.m * x * x + f.n * y * y + f.k * x * y


def to_kds(f: Form) -> KdsPoint:
    K, D, S = f.k, f.m - f.n, f.m + f.n
    check_range(K, D, S)
    return KdsPoint(K, D, S)


def is_good_point(p: KdsPoint) -> bool:
    return (p.D - p.S) % 2 == 0


def from_kds(p: KdsPoint) -> Form:
    """Inverse of to_kds; defined only on good points."""
    if (p.D - p.S) % 2 != 0:
        raise ValueError("(%d,%d,%d) is not a good point: D and S differ mod 2" % p)
    m = (p.S + p.D) // 2
    n = (p.S - p.D) // 2
    check_range(m, n, p.K)
    return Form(m, n, p.K)


def apply_involution(f: Form, kind: str) -> Form:
    """One of the five discriminant-preserving involutions.

    conjugate (m,n,-k), adjoint (-n,-m,k), antipodal (-n,-m,-k),
    complementary (n,m,-k) and opposite (-m,-n,-k).  Each is self-inverse,
    they commute, antipodal = conjugate . adjoint and
    opposite = complementary . adjoint.
    """
    m, n, k = f
    if kind == "conjugate":
        return Form(m, n, -k)
    if kind == "adjoint":
        return Form(-n, -m, k)
    if kind == "antipodal":
        return Form(-n, -m, -k)
    if kind == "complementary":
        return Form(n, m, -k)
    if kind == "opposite":
        return Form(-m, -n, -k)
    raise ValueError("unknown involution %r" % (kind,))


def classify_discriminant(d: int) -> Discriminant:
    """Sort a discriminant into its kind, deciding squareness exactly."""
    if d < 0:
        return Discriminant(d, "elliptic")
    if d == 0:
        return Discriminant(d, "parabolic")
    r = isqrt(d)
    if r * r == d:
        return Discriminant(d, "hyperbolic-square", r)
    return Discriminant(d, "hyperbolic-nonsquare")
