"""Elliptic integrals, the Grötzsch modulus and the Hersch-Pfluger distortion.

All of ``K``, ``mu`` and ``phi_K`` are reduced to arithmetic-geometric
means, which converge quadratically and stay accurate as ``r -> 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceFailure, DomainError
from .geom_core import Point
from .hyperbolic import chord_midpoint
from .vam import vam

HALF_PI = 0.5 * math.pi
PI2_OVER_4 = 0.25 * math.pi * math.pi


@dataclass(frozen=True)
class DistortionContext:
    agm_tol: float = 1e-15
    inverse_tol: float = 1e-14
    max_iter: int = 200

    def __post_init__(self) -> None:
        if not (self.agm_tol > 0 and self.inverse_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


DEFAULT_CTX = DistortionContext()


def agm(x: float, y: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    for _ in range(ctx.max_iter):
        if abs(x - y) <= ctx.agm_tol * x:
            return 0.5 * (x + y)
        x, y = 0.5 * (x + y), math.sqrt(x * y)
    raise ConvergenceFailure(f"AGM did not converge in {ctx.max_iter} steps")


def complement(r: float) -> float:
    """``r' = sqrt(1 - r^2)``, evaluated without cancellation near 1."""
    return math.sqrt((1.0 - r) * (1.0 + r))


def elliptic_K(r: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    """Complete elliptic integral of the first kind, ``K(r) = pi / (2 AGM(1, r'))``."""
    if not 0.0 <= r < 1.0:
        raise DomainError(f"elliptic_K needs 0 <= r < 1, got {r}")
    return HALF_PI / agm(1.0, complement(r), ctx)


def mu(r: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    """Modulus of the Grötzsch ring, ``(pi/2) K(r') / K(r)``."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"mu needs 0 < r < 1, got {r}")
    # K(r')/K(r) = AGM(1, r')/AGM(1, r)
    return HALF_PI * agm(1.0, complement(r), ctx) / agm(1.0, r, ctx)


def _mu_inverse_small(y: float, ctx: DistortionContext) -> float:
    # y >= pi/2, so the root lies in (0, 1/sqrt(2)].  Bisect on log r; the
    # bracket is seeded by mu(r) ~ log(4/r).
    seed = math.log(4.0) - y
    if seed < -700.0:
        # mu(r) = log(4/r) + O(r^2 log r); exact in double precision here
        return 4.0 * math.exp(-y)
    lo = seed - 1.0
    hi = min(seed + 1.0, math.log(math.sqrt(0.5)))
    while mu(math.exp(lo), ctx) < y:
        lo -= 1.0
    while hi < math.log(math.sqrt(0.5)) and mu(math.exp(hi), ctx) > y:
        hi = min(hi + 1.0, math.log(math.sqrt(0.5)))
    for _ in range(ctx.max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= ctx.inverse_tol or mid in (lo, hi):
            return math.exp(mid)
        if mu(math.exp(mid), ctx) > y:
            lo = mid
        else:
            hi = mid
    raise ConvergenceFailure(f"mu_inverse({y}) did not converge in {ctx.max_iter} steps")


def mu_inverse(y: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    """Inverse of :func:`mu` on ``(0, inf)`` by monotone bisection.

    For ``y < pi/2`` the reciprocal identity ``mu(r) mu(r') = pi^2/4`` moves
    the search to the small-``r`` side, where ``r'`` is resolved in log scale.
    """
    if not (y > 0.0 and math.isfinite(y)):
        raise DomainError(f"mu_inverse needs a finite y > 0, got {y}")
    if y >= HALF_PI:
        return _mu_inverse_small(y, ctx)
    return complement(_mu_inverse_small(PI2_OVER_4 / y, ctx))


def phi_K(K: float, r: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    """Hersch-Pfluger distortion ``phi_K(r) = mu^{-1}(mu(r) / K)``.

    Any ``K > 0`` is accepted, so ``phi_{1/K}`` inverts ``phi_K``.  The
    endpoints follow by continuity: ``phi_K(0) = 0``, ``phi_K(1) = 1``.
    """
    if not K > 0:
        raise DomainError(f"phi_K needs K > 0, got {K}")
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"phi_K needs 0 <= r <= 1, got {r}")
    if r in (0.0, 1.0) or K == 1:
        return r
    return mu_inverse(mu(r, ctx) / K, ctx)


def phi_K_complement(K: float, r: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    """``sqrt(1 - phi_K(r)^2)``, computed as ``phi_{1/K}(r')`` to keep precision when ``phi_K(r) ~ 1``."""
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"phi_K needs 0 <= r <= 1, got {r}")
    return phi_K(1.0 / K, complement(r), ctx)


def slem2_identity_residual(K: float, r: float, ctx: DistortionContext = DEFAULT_CTX) -> float:
    """Residual of ``phi_K(r) / (1 + sqrt(1 - phi_K(r)^2)) = sqrt(phi_K((r / (1 + r'))^2))``."""
    if not K >= 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r}")
    lhs = phi_K(K, r, ctx) / (1.0 + phi_K_complement(K, r, ctx))
    x = r / (1.0 + complement(r))
    rhs = math.sqrt(phi_K(K, x * x, ctx))
    return abs(lhs - rhs)


def schwarz_rho_bound(K: float, rho_ab: float, ctx: DistortionContext = DEFAULT_CTX) -> tuple[float, float]:
    """Bounds on ``th(rho(f(a), f(b)) / 2)`` for a K-quasiregular self-map of the disk.

    Returns ``(phi_K(th(rho/2)), 4^(1 - 1/K) th(rho/2)^(1/K))``; the second is
    the cruder closed-form bound and may exceed 1.
    """
    if not K >= 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if not rho_ab >= 0:
        raise DomainError(f"rho must be >= 0, got {rho_ab}")
    r = math.tanh(0.5 * rho_ab)
    return phi_K(K, r, ctx), 4.0 ** (1.0 - 1.0 / K) * r ** (1.0 / K)


def main3_bound(a: Point, b: Point, fa: Point, fb: Point, K: float) -> tuple[float, float]:
    """Both sides of the quasiregular Schwarz lemma for the visual angle metric.

    ``lhs = tan(v(f(a), f(b)) / 2)`` and
    ``rhs = 2^(1 - 1/K) c tan(v(a, b) / 2)^(1/K)`` with
    ``c = sqrt((1 + |m1|) / (1 - |m1|)) / (1 + |m2|)^(1/K)``, where ``m1``
    and ``m2`` are the chord midpoints of the image pair and of the pair.
    """
    if not K >= 1:
        raise DomainError(f"K must be >= 1, got {K}")
    m1 = abs(chord_midpoint(fa, fb))
    m2 = abs(chord_midpoint(a, b))
    lhs = math.tan(0.5 * vam(fa, fb).value)
    c = math.sqrt((1.0 + m1) / (1.0 - m1)) / (1.0 + m2) ** (1.0 / K)
    rhs = 2.0 ** (1.0 - 1.0 / K) * c * math.tan(0.5 * vam(a, b).value) ** (1.0 / K)
    return lhs, rhs
