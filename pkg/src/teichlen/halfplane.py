"""Exact geometry in the upper half-plane model.

Distances carry the factor 1/2 used for Teichmueller distance, so
``hyp_distance`` is half of the textbook hyperbolic distance.  Ideal
boundary points are floats plus the distinguished point ``INFTY``; the
boundary circle has a single point at infinity.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import (
    NoCrossingsError,
    NotCrossingError,
    ProjectionUndefinedError,
    TwistSpreadWarning,
    ValidationError,
)


class _IdealInfinity:
    """The point at infinity on the ideal boundary."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFTY"


INFTY = _IdealInfinity()

IdealPoint = Union[float, _IdealInfinity]


def is_infty(xi: IdealPoint) -> bool:
    return isinstance(xi, _IdealInfinity)


def _check_ideal(xi: IdealPoint) -> IdealPoint:
    if is_infty(xi):
        return xi
    xi = float(xi)
    if not math.isfinite(xi):
        raise ValidationError("finite ideal points must be finite floats; use INFTY")
    return xi


@dataclass(frozen=True)
class UHPoint:
    """Point x + iy of the upper half-plane, y > 0 strictly."""

    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0 and math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValidationError(f"not an upper half-plane point: ({self.x}, {self.y})")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class HGeodesic:
    """Complete geodesic given by two distinct ideal endpoints."""

    e0: IdealPoint
    e1: IdealPoint

    def __post_init__(self):
        object.__setattr__(self, "e0", _check_ideal(self.e0))
        object.__setattr__(self, "e1", _check_ideal(self.e1))
        if is_infty(self.e0) and is_infty(self.e1):
            raise ValidationError("geodesic endpoints must be distinct")
        if not is_infty(self.e0) and not is_infty(self.e1) and self.e0 == self.e1:
            raise ValidationError("geodesic endpoints must be distinct")


@dataclass(frozen=True)
class TorusLattice:
    """Oriented lattice basis (alpha, beta) with Im(beta * conj(alpha)) > 0."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        if not self.area > 0:
            raise ValidationError("lattice basis must be positively oriented")

    @property
    def area(self) -> float:
        return (self.beta * self.alpha.conjugate()).imag


@dataclass(frozen=True)
class MobiusMap:
    """Real Moebius map z -> (az+b)/(cz+d) with ad - bc > 0."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not self.det > 0:
            raise ValidationError("Moebius map must have positive determinant")

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def normalized(self) -> "MobiusMap":
        s = math.sqrt(self.det)
        return MobiusMap(self.a / s, self.b / s, self.c / s, self.d / s)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, z: UHPoint) -> UHPoint:
        w = (self.a * z.z + self.b) / (self.c * z.z + self.d)
        return UHPoint(w.real, w.imag)

    def apply_ideal(self, xi: IdealPoint) -> IdealPoint:
        if is_infty(xi):
            if self.c == 0:
                return INFTY
            return self.a / self.c
        denom = self.c * xi + self.d
        if denom == 0:
            return INFTY
        return (self.a * xi + self.b) / denom

    def apply_geodesic(self, g: HGeodesic) -> HGeodesic:
        return HGeodesic(self.apply_ideal(g.e0), self.apply_ideal(g.e1))

    @classmethod
    def to_zero_infinity(cls, p: IdealPoint, q: IdealPoint) -> "MobiusMap":
        """The orientation-preserving map sending p -> 0 and q -> infinity."""
        p = _check_ideal(p)
        q = _check_ideal(q)
        if is_infty(p):
            # z -> -1/(z - q)
            return cls(0.0, -1.0, 1.0, -q)
        if is_infty(q):
            return cls(1.0, -p, 0.0, 1.0)
        if p == q:
            raise ValidationError("endpoints must be distinct")
        if p < q:
            return cls(1.0, -p, -1.0, q)
        return cls(1.0, -p, 1.0, -q)


def hyp_distance(z1: UHPoint, z2: UHPoint) -> float:
    """Half the hyperbolic distance between two half-plane points."""
    if z1 == z2:
        return 0.0
    if max(z1.y, z2.y, abs(z1.x), abs(z2.x)) > 1e150:
        # ratio form avoids overflow for coordinates up to ~1e300
        dx = z1.x - z2.x
        ratio = z1.y / z2.y
        u = 0.5 * (ratio + 1.0 / ratio) - 1.0 + 0.5 * (dx / z1.y) * (dx / z2.y)
        return 0.5 * math.acosh(1.0 + u) if math.isfinite(u) else math.inf
    d2 = (z1.x - z2.x) ** 2 + (z1.y - z2.y) ** 2
    return 0.5 * math.acosh(1.0 + d2 / (2.0 * z1.y * z2.y))


def geodesic_point(z: UHPoint, w: UHPoint, t: float) -> UHPoint:
    """Point at arclength fraction t along the geodesic from z to w."""
    if z == w:
        return z
    if z.x == w.x:
        return UHPoint(z.x, z.y * (w.y / z.y) ** t)
    # endpoints of the circle through z and w centered on the real axis
    c = ((w.x * w.x + w.y * w.y) - (z.x * z.x + z.y * z.y)) / (2.0 * (w.x - z.x))
    r = math.hypot(z.x - c, z.y)
    m = MobiusMap.to_zero_infinity(c - r, c + r)
    a = m.apply(z)
    b = m.apply(w)
    lifted = UHPoint(0.0, a.y * (b.y / a.y) ** t)
    # the lift has x == 0 up to roundoff; project back through the inverse
    return m.inverse().normalized().apply(lifted)


def _ratio_at(t: float, z1: UHPoint, z2: UHPoint) -> float:
    num = z2.y + (t + z2.x) ** 2 / z2.y
    den = z1.y + (t + z1.x) ** 2 / z1.y
    return num / den


def k_ratio_sup(z1: UHPoint, z2: UHPoint) -> float:
    """Exact supremum over t in R u {inf} of the quadratic length ratio.

    The ratio compared is (y2 + (t+x2)^2/y2) / (y1 + (t+x1)^2/y1); the
    t -> infinity limit y1/y2 is included.  Solved in closed form from the
    critical-point quadratic of the rational function.
    """
    candidates = [z1.y / z2.y]  # the t -> +-infinity limit
    d = z2.x - z1.x
    if d == 0.0:
        candidates.append(_ratio_at(-z1.x, z1, z2))
    else:
        # critical points in u = t + x1: d u^2 - (y1^2 - y2^2 - d^2) u - d y1^2 = 0
        bq = z1.y * z1.y - z2.y * z2.y - d * d
        disc = bq * bq + 4.0 * d * d * z1.y * z1.y
        root = math.sqrt(disc)
        for u in ((bq + root) / (2.0 * d), (bq - root) / (2.0 * d)):
            candidates.append(_ratio_at(u - z1.x, z1, z2))
    return max(candidates)


def torus_extremal_length(lat: TorusLattice, u: float, v: float) -> float:
    """Extremal length of the (u, v) class on the torus spanned by the lattice."""
    if u == 0 and v == 0:
        raise ValidationError("(u, v) must be nonzero")
    w = u * lat.alpha + v * lat.beta
    return (w.real * w.real + w.imag * w.imag) / lat.area


def _axis_chart(axis: HGeodesic, origin: UHPoint, orientation: int,
                origin_tol: float = 1e-9):
    """Normalize so the axis is (0, infinity) oriented upward.

    Returns the chart map and log-height of the origin, which fixes the
    zero of the arclength coordinate along the axis.
    """
    if orientation not in (-1, 1):
        raise ValidationError("orientation must be +1 or -1")
    tail, head = (axis.e0, axis.e1) if orientation == 1 else (axis.e1, axis.e0)
    m = MobiusMap.to_zero_infinity(tail, head)
    w0 = m.apply(origin)
    if abs(w0.x) > origin_tol * w0.y:
        raise ValidationError("origin does not lie on the axis")
    return m, math.log(w0.y)


def project_ideal_to_axis(axis: HGeodesic, xi: IdealPoint, origin: UHPoint,
                          orientation: int = 1) -> float:
    """Signed arclength position of the orthogonal projection of ideal xi.

    Positions run along the axis, zero at origin, increasing toward the
    endpoint the orientation selects.  Projection of an axis endpoint
    escapes to infinity and raises ProjectionUndefinedError.
    """
    m, log_y0 = _axis_chart(axis, origin, orientation)
    w = m.apply_ideal(_check_ideal(xi))
    if is_infty(w) or w == 0.0:
        raise ProjectionUndefinedError("ideal point is an endpoint of the axis")
    return math.log(abs(w)) - log_y0


def twist_prime(axis: HGeodesic, ell: float, crossing: HGeodesic,
                origin: UHPoint, orientation: int = 1) -> float:
    """Signed twisting number of a crossing geodesic about an oriented axis.

    Equals (position of right endpoint - position of left endpoint) / ell,
    sides taken relative to the axis orientation.  Invariant under Moebius
    conjugation of both geodesics and under sliding along the axis.
    """
    if not ell > 0:
        raise ValidationError("translation length must be positive")
    m, log_y0 = _axis_chart(axis, origin, orientation)
    w0 = m.apply_ideal(crossing.e0)
    w1 = m.apply_ideal(crossing.e1)
    for w in (w0, w1):
        if is_infty(w) or w == 0.0:
            raise NotCrossingError("geodesics share an ideal endpoint")
    if (w0 > 0) == (w1 > 0):
        raise NotCrossingError("geodesic endpoints do not separate the axis endpoints")
    w_right, w_left = (w0, w1) if w0 > 0 else (w1, w0)
    pos_right = math.log(w_right) - log_y0
    pos_left = math.log(-w_left) - log_y0
    return (pos_right - pos_left) / ell


def twist_min(values: Sequence[float], spread_tol: float = 1e-9) -> float:
    """Minimum of per-crossing twists; warns if their spread exceeds 1.

    Twists measured at different crossings of the same pair differ by at
    most 1, so a wider spread indicates inconsistent inputs.
    """
    if len(values) == 0:
        raise NoCrossingsError("no crossings supplied")
    spread = max(values) - min(values)
    if spread > 1.0 + spread_tol:
        warnings.warn(
            f"twist spread {spread:.6g} exceeds the conjugation bound 1",
            TwistSpreadWarning,
            stacklevel=2,
        )
    return min(values)
