"""Hyperbolic geometry of the unit disk."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentPoints, DegenerateQuadruple, DiskMetricsError, OutsideDisk, PoleInput
from .geom_core import DEFAULT_TOL, Point, ToleranceConfig, apply_inversion, check_finite


def check_in_disk(*points: complex) -> None:
    check_finite(*points)
    for z in points:
        if not abs(z) < 1.0:
            raise OutsideDisk(f"{z} is not inside the unit disk")


def _one_minus_sq(z: complex) -> float:
    r = abs(z)
    return (1.0 - r) * (1.0 + r)


def sh_half_rho(a: Point, b: Point) -> float:
    """``sh(rho(a, b) / 2) = |a - b| / sqrt((1 - |a|^2)(1 - |b|^2))``."""
    check_in_disk(a, b)
    return abs(a - b) / math.sqrt(_one_minus_sq(a) * _one_minus_sq(b))


def rho(a: Point, b: Point) -> float:
    """Hyperbolic distance in the unit disk."""
    return 2.0 * math.asinh(sh_half_rho(a, b))


def mobius_Ta(a: Point, z: Point, tol: ToleranceConfig = DEFAULT_TOL) -> Point:
    """``T_a(z) = (z - a) / (1 - conj(a) z)``; ``T_0`` is the identity."""
    check_in_disk(a)
    check_finite(z)
    if a == 0:
        return z
    den = 1.0 - a.conjugate() * z
    if abs(den) < tol.eq_tol:
        raise PoleInput(f"{z} is the pole of T_{a}")
    return (z - a) / den


def cross_ratio(a: Point, b: Point, c: Point, d: Point) -> float:
    """Absolute cross-ratio ``|a,b,c,d| = |a-c||b-d| / (|a-b||c-d|)``."""
    check_finite(a, b, c, d)
    den = abs(a - b) * abs(c - d)
    if den == 0:
        raise DegenerateQuadruple("coincident pair in the denominator")
    return abs(a - c) * abs(b - d) / den


def geodesic_endpoints(a: Point, b: Point) -> tuple[Point, Point]:
    """Endpoints ``(ep(a, b), ep(b, a))`` of the hyperbolic line through ``a`` and ``b``.

    ``ep(a, b)`` lies beyond ``a``: the order along the geodesic is
    ``ep(a, b), a, b, ep(b, a)``.  ``ep(a, b) = T_{-b}(T_b(a) / |T_b(a)|)``,
    which is also used when ``a`` or ``b`` is 0 (``T_0`` is the identity).
    """
    check_in_disk(a, b)
    if a == b:
        raise CoincidentPoints(f"{a} = {b}")

    def ep(x: complex, y: complex) -> complex:
        w = mobius_Ta(y, x)
        return mobius_Ta(-y, w / abs(w))

    return ep(a, b), ep(b, a)


def rho_via_cross_ratio(a: Point, b: Point) -> float:
    """``log |ep(a,b), a, b, ep(b,a)|``; an independent route to ``rho``."""
    ea, eb = geodesic_endpoints(a, b)
    return math.log(cross_ratio(ea, a, b, eb))


def ahlfors_bracket(a: Point, b: Point) -> float:
    """``A[a, b] = |1 - a conj(b)|``."""
    check_finite(a, b)
    return abs(1.0 - a * b.conjugate())


def hyperbolic_midpoint(a: Point, b: Point) -> Point:
    """Point ``z`` of the geodesic with ``rho(a, z) = rho(z, b) = rho(a, b) / 2``."""
    check_in_disk(a, b)
    pa = _one_minus_sq(a)
    pb = _one_minus_sq(b)
    num = b * pa + a * pb
    den = 1.0 - abs(a) ** 2 * abs(b) ** 2 + ahlfors_bracket(a, b) * math.sqrt(pa * pb)
    return num / den


def chord_midpoint(a: Point, b: Point) -> Point:
    """Midpoint of the chord of the unit disk through ``a`` and ``b``.

    It is the foot of the perpendicular from 0 to ``L[a, b]``, so ``|m|``
    is the distance from the origin to the line.
    """
    check_finite(a, b)
    if a == b:
        raise CoincidentPoints(f"{a} = {b}")
    ac, bc = a.conjugate(), b.conjugate()
    return (ac * b - a * bc) / (2.0 * (ac - bc))


@dataclass(frozen=True)
class DiskAutomorphism:
    """A self-map of the unit disk used as a test map.

    ``kind`` is one of ``"identity"``, ``"mobius"`` (``T_param``),
    ``"inversion"`` (center ``param``) or ``"radial_stretch"``
    (``z |z|^(1/K - 1)`` with ``K = param``).
    """

    kind: str
    param: complex = 0j

    KINDS = ("identity", "mobius", "inversion", "radial_stretch")

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown automorphism kind {self.kind!r}")
        if self.kind == "mobius" and not abs(self.param) < 1:
            raise OutsideDisk(f"T_a needs |a| < 1, got {self.param}")
        if self.kind == "inversion" and not abs(self.param) > 1:
            raise DiskMetricsError(f"inversion needs |c| > 1, got {self.param}")
        if self.kind == "radial_stretch":
            k = complex(self.param)
            if k.imag != 0 or not k.real >= 1:
                raise DiskMetricsError(f"radial stretch needs real K >= 1, got {self.param}")

    @classmethod
    def identity(cls) -> DiskAutomorphism:
        return cls("identity")

    @classmethod
    def mobius(cls, a: complex) -> DiskAutomorphism:
        return cls("mobius", complex(a))

    @classmethod
    def inversion(cls, c: complex) -> DiskAutomorphism:
        return cls("inversion", complex(c))

    @classmethod
    def radial_stretch(cls, K: float) -> DiskAutomorphism:
        return cls("radial_stretch", complex(K))

    @property
    def K(self) -> float:
        """Maximal dilatation of the map (1 for the conformal and anticonformal kinds)."""
        return self.param.real if self.kind == "radial_stretch" else 1.0

    def __call__(self, z: complex) -> complex:
        return apply_automorphism(self, z)


def apply_automorphism(f: DiskAutomorphism, z: Point) -> Point:
    check_in_disk(z)
    if f.kind == "identity":
        return z
    if f.kind == "mobius":
        return mobius_Ta(f.param, z)
    if f.kind == "inversion":
        return apply_inversion(f.param, z)
    r = abs(z)
    if r == 0:
        return z
    return z * r ** (1.0 / f.param.real - 1.0)
