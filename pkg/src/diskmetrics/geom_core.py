"""Euclidean primitives on the complex plane.

Points are plain Python ``complex`` numbers.  Every formula here is a
closed form in ``z`` and ``conj(z)``; nothing iterates.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    CollinearPoints,
    CollinearWithOrigin,
    DegenerateAngle,
    DegenerateLine,
    DiskMetricsError,
    EqualModulus,
    ParallelLines,
    PoleInput,
)

Point = complex


@dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances shared across modules.

    ``eq_tol`` decides equality branches (relative, scaled by
    ``max(|a|, |b|, 1)``), ``root_tol`` bounds iterative root finding and
    ``oracle_tol`` is the accepted gap between a closed form and the
    brute-force maximizer.
    """

    eq_tol: float = 1e-12
    root_tol: float = 1e-14
    oracle_tol: float = 1e-6

    def __post_init__(self) -> None:
        if not (self.eq_tol > 0 and self.root_tol > 0 and self.oracle_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.eq_tol >= 1:
            raise ValueError("eq_tol must be < 1")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class Circle:
    center: complex
    radius: float

    def __post_init__(self) -> None:
        if not self.radius >= 0:
            raise ValueError(f"radius must be >= 0, got {self.radius}")

    def orthogonality_residual(self) -> float:
        """``radius**2 - (|center|**2 - 1)``; zero for circles orthogonal to S(0, 1)."""
        return self.radius**2 - (abs(self.center) ** 2 - 1.0)

    def is_orthogonal_to_unit_circle(self, tol: float = 1e-10) -> bool:
        return abs(self.orthogonality_residual()) < tol

    def contains(self, z: complex, tol: float = 1e-10) -> bool:
        return abs(abs(z - self.center) - self.radius) < tol


def check_finite(*points: complex) -> None:
    for z in points:
        if not cmath.isfinite(z):
            raise DiskMetricsError(f"non-finite point {z!r}")


def _scale(*points: complex) -> float:
    return max(1.0, *(abs(z) for z in points))


def cross(u: complex, v: complex) -> float:
    """Imaginary part of ``conj(u) * v`` (signed area of the parallelogram)."""
    return u.real * v.imag - u.imag * v.real


def angle_at(vertex: Point, a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Angle ``∠(a, vertex, b)`` in ``[0, pi]``."""
    check_finite(vertex, a, b)
    u = a - vertex
    v = b - vertex
    s = tol.eq_tol * _scale(vertex, a, b)
    if abs(u) < s or abs(v) < s:
        raise DegenerateAngle(f"vertex {vertex} coincides with an endpoint")
    # atan2 of (|cross|, dot) is the arccos of the normalized inner product,
    # without the loss of accuracy near 0 and pi.
    return math.atan2(abs(cross(u, v)), (u.conjugate() * v).real)


def line_intersection(
    a: Point, b: Point, c: Point, d: Point, tol: ToleranceConfig = DEFAULT_TOL
) -> Point:
    """Intersection ``L[a, b] ∩ L[c, d]`` of two lines."""
    check_finite(a, b, c, d)
    s = tol.eq_tol * _scale(a, b, c, d)
    if abs(a - b) < s or abs(c - d) < s:
        raise DegenerateLine("a line needs two distinct points")
    ac, bc, cc, dc = a.conjugate(), b.conjugate(), c.conjugate(), d.conjugate()
    u = (ac * b - a * bc) * (c - d) - (a - b) * (cc * d - c * dc)
    v = (ac - bc) * (c - d) - (a - b) * (cc - dc)
    if abs(v) < tol.eq_tol * abs(a - b) * abs(c - d):
        raise ParallelLines(f"L[{a}, {b}] and L[{c}, {d}] are parallel")
    return u / v


def circumcenter(a: Point, b: Point, c: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Point:
    """Center of the circle through three non-collinear points."""
    check_finite(a, b, c)
    ac, bc, cc = a.conjugate(), b.conjugate(), c.conjugate()
    num = abs(a) ** 2 * (b - c) + abs(b) ** 2 * (c - a) + abs(c) ** 2 * (a - b)
    den = a * (cc - bc) + b * (ac - cc) + c * (bc - ac)
    spread = max(abs(a - b), abs(b - c), abs(c - a))
    if abs(den) < tol.eq_tol * spread**2 or spread == 0:
        raise CollinearPoints(f"{a}, {b}, {c} are collinear")
    return num / den


def reflect_in_line(z: Point, a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Point:
    """Mirror image of ``z`` in the line through ``a`` and ``b``."""
    check_finite(z, a, b)
    if abs(a - b) < tol.eq_tol * _scale(a, b):
        raise DegenerateLine("a line needs two distinct points")
    ac, bc = a.conjugate(), b.conjugate()
    return (a - b) / (ac - bc) * z.conjugate() - (a * bc - ac * b) / (ac - bc)


def distance_line_to_origin(a: Point, b: Point) -> float:
    """Euclidean distance from 0 to ``L[a, b]``: ``|conj(a) b - a conj(b)| / (2|a - b|)``."""
    return abs(a.conjugate() * b - a * b.conjugate()) / (2.0 * abs(a - b))


def _check_inversion_pair(a: Point, b: Point, tol: ToleranceConfig) -> None:
    check_finite(a, b)
    if abs(abs(a) - abs(b)) < tol.eq_tol * _scale(a, b):
        raise EqualModulus(f"|a| = |b| for a={a}, b={b}")
    if distance_line_to_origin(a, b) < tol.eq_tol:
        raise CollinearWithOrigin(f"a={a}, b={b} are collinear with 0")


def inversion_center(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Point:
    """Center ``c = LIS[a, b, a*, b*]`` of the inversion of the disk swapping ``a`` and ``b``."""
    _check_inversion_pair(a, b, tol)
    return (a - b + a * b * (a.conjugate() - b.conjugate())) / (abs(a) ** 2 - abs(b) ** 2)


def apply_inversion(c: Point, z: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Point:
    """Evaluate ``h(z) = (c conj(z) - 1) / (conj(z) - conj(c))``.

    For ``|c| > 1`` this is the inversion in the circle ``S(c, sqrt(|c|^2 - 1))``,
    which is orthogonal to the unit circle and therefore maps the disk onto
    itself.
    """
    check_finite(c, z)
    if not abs(c) > 1.0:
        raise DiskMetricsError(f"inversion center must satisfy |c| > 1, got {c}")
    zc = z.conjugate()
    if abs(zc - c.conjugate()) < tol.eq_tol * _scale(c, z):
        raise PoleInput(f"{z} is the pole of the inversion")
    return (c * zc - 1.0) / (zc - c.conjugate())


def orthocircle(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Circle:
    """The circle ``S(c, sqrt(|c|^2 - 1))`` orthogonal to the unit circle."""
    c = inversion_center(a, b, tol)
    return Circle(c, math.sqrt(abs(c) ** 2 - 1.0))


def orthocircle_boundary_points(
    a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL
) -> tuple[Point, Point]:
    """The two points of ``S(0, 1) ∩ S(c, sqrt(|c|^2 - 1))``, ``(1 ± i sqrt(|c|^2-1)) / conj(c)``."""
    c = inversion_center(a, b, tol)
    s = math.sqrt(abs(c) ** 2 - 1.0)
    cc = c.conjugate()
    return complex(1.0, s) / cc, complex(1.0, -s) / cc


def boundary_quadratic_coefficients(a: Point, b: Point) -> tuple[complex, complex, complex]:
    """Coefficients of the quadratic whose roots are the orthocircle boundary points."""
    pa = 1.0 - abs(a) ** 2
    pb = 1.0 - abs(b) ** 2
    return (
        a.conjugate() * pb - b.conjugate() * pa,
        -2.0 * (abs(a) ** 2 - abs(b) ** 2),
        a * pb - b * pa,
    )


def boundary_quadratic_residual(a: Point, b: Point, z: Point) -> float:
    q2, q1, q0 = boundary_quadratic_coefficients(a, b)
    return abs((q2 * z + q1) * z + q0)


def line_circle_intersections(a: Point, b: Point, circle: Circle) -> tuple[Point, ...]:
    """Points of ``L[a, b] ∩ circle``, ordered by the line parameter ``t`` in ``a + t(b - a)``."""
    d = b - a
    w = a - circle.center
    qa = abs(d) ** 2
    if qa == 0:
        raise DegenerateLine("a line needs two distinct points")
    qb = 2.0 * (w.conjugate() * d).real
    qc = abs(w) ** 2 - circle.radius**2
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0:
        return ()
    sq = math.sqrt(disc)
    # stable root pairing
    q = -0.5 * (qb + math.copysign(sq, qb))
    roots = sorted({q / qa, qc / q} if q != 0 else {0.0})
    return tuple(a + t * d for t in roots)
