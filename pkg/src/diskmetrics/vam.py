"""Visual angle metric of the unit disk.

``v(a, b)`` is the largest angle ``∠(a, z, b)`` over boundary points
``z`` of the unit disk.  Six closed-form routes are provided; ``vam``
picks the one that applies to a pair.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from .errors import (
    CoincidentPoints,
    DegenerateLeadingCoefficient,
    DiskMetricsError,
    NotCollinear,
    NotEqualModulus,
)
from .geom_core import (
    DEFAULT_TOL,
    Point,
    ToleranceConfig,
    angle_at,
    boundary_quadratic_residual,
    cross,
    distance_line_to_origin,
    inversion_center,
    line_circle_intersections,
    orthocircle,
    orthocircle_boundary_points,
)
from .hyperbolic import check_in_disk, chord_midpoint, hyperbolic_midpoint, mobius_Ta, sh_half_rho

ROUTES = ("radial", "equal_modulus", "orthocircle", "via_rho", "hmid", "quadratic")
GENERAL_ROUTES = ("orthocircle", "via_rho", "hmid", "quadratic")


@dataclass
class VamResult:
    value: float
    extremal_point: complex | None
    route: str
    diagnostics: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {"v": self.value}
        if self.extremal_point is not None:
            out["extremal_point"] = [self.extremal_point.real, self.extremal_point.imag]
        out["diagnostics"] = dict(self.diagnostics)
        return out


def _check_pair(a: Point, b: Point) -> None:
    check_in_disk(a, b)
    if a == b:
        raise CoincidentPoints(f"{a} = {b}")


def is_collinear_with_origin(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return distance_line_to_origin(a, b) < tol.eq_tol


def is_equal_modulus(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    return abs(abs(a) - abs(b)) < tol.eq_tol * max(1.0, abs(a), abs(b))


def _one_minus_sq(x: float) -> float:
    return (1.0 - x) * (1.0 + x)


def vam_radial(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> VamResult:
    """Pairs collinear with the origin.

    With signed coordinates ``r < s`` along the diameter,
    ``v = arcsin((s - r) / (1 - rs))`` and equivalently
    ``tan v = sh(rho / 2)``.  The tan form is returned.
    """
    _check_pair(a, b)
    if not is_collinear_with_origin(a, b, tol):
        raise NotCollinear(f"{a}, {b} are not collinear with 0")
    e = (b - a) / abs(b - a)
    r = (a * e.conjugate()).real
    s = (b * e.conjugate()).real
    tan_form = math.atan(sh_half_rho(a, b))
    sin_form = math.asin((s - r) / (1.0 - r * s))
    den = 1.0 + r * s
    p = complex((r + s) / den, math.sqrt(_one_minus_sq(r) * _one_minus_sq(s)) / den)
    return VamResult(
        tan_form,
        p * e,
        "radial",
        {"arcsin_form": sin_form, "tan_form": tan_form, "form_gap": abs(sin_form - tan_form)},
    )


def vam_equal_modulus(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> VamResult:
    """Pairs with ``|a| = |b|``: ``v = 2 arctan(|a - b| / (2 - |a + b|))``."""
    _check_pair(a, b)
    if not is_equal_modulus(a, b, tol):
        raise NotEqualModulus(f"|{a}| != |{b}|")
    value = 2.0 * math.atan(abs(a - b) / (2.0 - abs(a + b)))
    if abs(a + b) > tol.eq_tol:
        z = (a + b) / abs(a + b)
    else:
        # symmetric chord through 0; pick the tangency point left of b - a
        z = 1j * (b - a) / abs(b - a)
    return VamResult(value, z, "equal_modulus", {})


def vam_orthocircle(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> VamResult:
    """General pairs: maximize the angle over the two boundary points of the orthocircle."""
    _check_pair(a, b)
    c = inversion_center(a, b, tol)
    z1, z2 = orthocircle_boundary_points(a, b, tol)
    t1 = angle_at(z1, a, b, tol)
    t2 = angle_at(z2, a, b, tol)
    z, value = (z1, t1) if t1 >= t2 else (z2, t2)
    r2 = abs(c) ** 2 - 1.0
    return VamResult(
        value,
        z,
        "orthocircle",
        {
            "angle_z1": t1,
            "angle_z2": t2,
            "quadratic_residual_z1": boundary_quadratic_residual(a, b, z1),
            "quadratic_residual_z2": boundary_quadratic_residual(a, b, z2),
            "orthocircle_residual": max(abs(abs(z1 - c) ** 2 - r2), abs(abs(z2 - c) ** 2 - r2)),
        },
    )


def bisection_point(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Point:
    """The point ``u`` where the orthocircle crosses the chord through ``a`` and ``b``.

    The segment from the extremal boundary point to ``u`` bisects the
    angle ``∠(a, v, b)``.
    """
    circle = orthocircle(a, b, tol)
    hits = line_circle_intersections(a, b, circle)
    inside = [u for u in hits if abs(u) < 1.0]
    if not inside:
        raise DiskMetricsError(f"orthocircle misses the chord through {a}, {b}")
    return min(inside, key=abs)


def bisection_residual(a: Point, b: Point, v: Point, tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """``|∠(a, v, u) - ∠(u, v, b)|`` with ``u`` from :func:`bisection_point`."""
    u = bisection_point(a, b, tol)
    return abs(angle_at(v, a, u, tol) - angle_at(v, u, b, tol))


def tan_half_via_rho(a: Point, b: Point) -> float:
    _check_pair(a, b)
    m = abs(chord_midpoint(a, b))
    u = sh_half_rho(a, b)
    return (1.0 + m) * u / (1.0 + math.sqrt(1.0 + _one_minus_sq(m) * u * u))


def vam_via_rho(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> VamResult:
    """``tan(v/2) = (1+|m|) u / (1 + sqrt(1 + (1-|m|^2) u^2))`` with ``u = sh(rho/2)``."""
    t = tan_half_via_rho(a, b)
    return VamResult(2.0 * math.atan(t), None, "via_rho", {"tan_half": t})


def vam_sin(a: Point, b: Point) -> float:
    """``sin v(a, b)`` from the chord midpoint and the hyperbolic distance."""
    _check_pair(a, b)
    m = abs(chord_midpoint(a, b))
    u = sh_half_rho(a, b)
    w = 1.0 + math.sqrt(1.0 + _one_minus_sq(m) * u * u)
    return (1.0 + m) * w * u / (w + (1.0 + m) * u * u)


def vam_hmid(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> VamResult:
    """Move the hyperbolic midpoint to 0, where the pair has equal modulus."""
    _check_pair(a, b)
    m = hyperbolic_midpoint(a, b)
    ta = mobius_Ta(m, a)
    tb = mobius_Ta(m, b)
    q = 1j * (ta - tb) / abs(ta - tb)
    q1 = mobius_Ta(-m, q)
    q2 = mobius_Ta(-m, -q)
    t1 = angle_at(q1, a, b, tol)
    t2 = angle_at(q2, a, b, tol)
    z, value = (q1, t1) if t1 >= t2 else (q2, t2)
    return VamResult(
        value,
        z,
        "hmid",
        {"angle_q1": t1, "angle_q2": t2, "modulus_gap": abs(abs(ta) - abs(tb))},
    )


def quadratic_coefficients(a: Point, b: Point) -> tuple[float, float, float]:
    """Real coefficients ``(A, B, C)`` of ``A t^2 + B t + C = 0``.

    ``a conj(b) - conj(a) b = 2i Im(a conj(b))`` is purely imaginary, so the
    middle coefficient ``2 (a conj(b) - conj(a) b)(a conj(b) + conj(a) b - 2) i``
    is real.
    """
    w = a * b.conjugate()
    im2 = 2.0 * w.imag
    re2 = 2.0 * w.real
    qa = -im2 * im2 + 4.0 * abs(a - b) ** 2
    qb = -2.0 * im2 * (re2 - 2.0)
    qc = -(re2 * re2 - 4.0 * (abs(a) ** 2 + abs(b) ** 2 - 1.0))
    return qa, qb, qc


def quadratic_discriminant(a: Point, b: Point) -> float:
    qa, qb, qc = quadratic_coefficients(a, b)
    return qb * qb - 4.0 * qa * qc


def quadratic_discriminant_closed_form(a: Point, b: Point) -> float:
    return 64.0 * abs(a - b) ** 2 * _one_minus_sq(abs(a)) * _one_minus_sq(abs(b))


def _quadratic_roots(qa: float, qb: float, qc: float, disc: float, tol: ToleranceConfig) -> list[float]:
    scale = max(abs(qa), abs(qb), abs(qc))
    if abs(qa) < tol.eq_tol * scale:
        if abs(qb) < tol.eq_tol * scale:
            raise DegenerateLeadingCoefficient("quadratic degenerates to a constant")
        return [-qc / qb]
    sq = math.sqrt(max(disc, 0.0))
    q = -0.5 * (qb + math.copysign(sq, qb))
    if q == 0:
        return [0.0]
    return [q / qa, qc / q]


def _angle_from_quadratic_root(a: Point, b: Point, t: float, tol: ToleranceConfig) -> tuple[float, complex, float]:
    # p = a + t(b - a)i puts a right angle at a, so pb is a diameter of the
    # inscribed circle and its center (p + b)/2 points at the tangency point.
    p = a + t * (b - a) * 1j
    center = 0.5 * (p + b)
    q = center / abs(center)
    angle_p = angle_at(p, a, b, tol)
    same_arc = cross(b - a, p - a) * cross(b - a, q - a) > 0
    return (angle_p if same_arc else math.pi - angle_p), q, angle_p


def vam_quadratic(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> VamResult:
    """Locate the maximal inscribed circle through ``a`` and ``b`` via a real quadratic in ``t``.

    The root of smaller absolute value gives the smaller circle.  The angle
    at ``p`` is the inscribed angle on ``p``'s arc; when ``p`` sits on the
    other arc than the tangency point the supplement is taken.
    """
    _check_pair(a, b)
    qa, qb, qc = quadratic_coefficients(a, b)
    disc = qb * qb - 4.0 * qa * qc
    closed = quadratic_discriminant_closed_form(a, b)
    roots = _quadratic_roots(qa, qb, qc, disc, tol)
    roots.sort(key=abs)
    if len(roots) == 2 and abs(abs(roots[0]) - abs(roots[1])) < tol.root_tol * max(1.0, abs(roots[1])):
        candidates = [_angle_from_quadratic_root(a, b, t, tol) + (t,) for t in roots]
        value, q, angle_p, t = max(candidates, key=lambda c: c[0])
    else:
        t = roots[0]
        value, q, angle_p = _angle_from_quadratic_root(a, b, t, tol)
    return VamResult(
        value,
        q,
        "quadratic",
        {
            "t": t,
            "angle_at_p": angle_p,
            "discriminant": disc,
            "discriminant_closed_form": closed,
            "discriminant_rel_gap": abs(disc - closed) / closed,
        },
    )


_ROUTE_FUNCS = {
    "radial": vam_radial,
    "equal_modulus": vam_equal_modulus,
    "orthocircle": vam_orthocircle,
    "via_rho": vam_via_rho,
    "hmid": vam_hmid,
    "quadratic": vam_quadratic,
}


def route_function(name: str):
    return _ROUTE_FUNCS[name]


def applicable_routes(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL) -> list[str]:
    if a == b:
        return []
    names = []
    collinear = is_collinear_with_origin(a, b, tol)
    equal = is_equal_modulus(a, b, tol)
    if collinear:
        names.append("radial")
    if equal:
        names.append("equal_modulus")
    if not collinear and not equal:
        names.append("orthocircle")
    names += ["via_rho", "hmid", "quadratic"]
    return names


def vam(a: Point, b: Point, tol: ToleranceConfig = DEFAULT_TOL, cross_check: bool = False) -> VamResult:
    """Visual angle metric ``v(a, b)`` of the unit disk.

    Branches: coincident, collinear with 0 (radial), equal modulus, and the
    orthocircle construction otherwise.  With ``cross_check`` every other
    applicable route is evaluated and recorded in the diagnostics.
    """
    check_in_disk(a, b)
    if a == b:
        return VamResult(0.0, None, "coincident", {})
    if is_collinear_with_origin(a, b, tol):
        result = vam_radial(a, b, tol)
    elif is_equal_modulus(a, b, tol):
        result = vam_equal_modulus(a, b, tol)
    else:
        result = vam_orthocircle(a, b, tol)
    if cross_check:
        values = {result.route: result.value}
        for name in applicable_routes(a, b, tol):
            if name not in values:
                values[name] = _ROUTE_FUNCS[name](a, b, tol).value
        for name, v in values.items():
            result.diagnostics[f"route_{name}"] = v
        result.diagnostics["max_discrepancy"] = max_pairwise_discrepancy(values.values())
    return result


def max_pairwise_discrepancy(values) -> float:
    vals = list(values)
    return max((abs(x - y) for x, y in combinations(vals, 2)), default=0.0)


def vam_bounds(a: Point, b: Point) -> tuple[float, float]:
    """Lower and upper bounds for ``tan(v(a, b) / 2)`` from ``|m|`` and ``rho``."""
    _check_pair(a, b)
    m = abs(chord_midpoint(a, b))
    u = sh_half_rho(a, b)
    th4 = u / (1.0 + math.sqrt(1.0 + u * u))
    lower = (1.0 + m) * th4
    upper = min(0.5 * (1.0 + m) * u, math.sqrt((1.0 + m) / (1.0 - m)) * th4)
    return lower, upper
