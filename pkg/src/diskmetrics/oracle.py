"""Brute-force checks that do not share code paths with the closed forms.

``vam_bruteforce`` scans the boundary angle on a uniform grid and polishes
every local maximum by golden-section search.  It evaluates angles with
its own vectorized formula instead of :func:`geom_core.angle_at`.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import ChordExhausted, CoincidentPoints, OutsideDisk
from .geom_core import Point
from .hyperbolic import check_in_disk, rho

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
DEFAULT_SEED = 42


@dataclass(frozen=True)
class OracleReport:
    value: float
    argmax: complex
    grid_size: int
    refinement_iterations: int
    bracket_width: float


def boundary_angles(a: Point, b: Point, theta: np.ndarray) -> np.ndarray:
    """``∠(a, e^{i theta}, b)`` for an array of angles."""
    z = np.exp(1j * theta)
    u = a - z
    v = b - z
    w = np.conj(u) * v
    return np.abs(np.arctan2(w.imag, w.real))


def _boundary_angle(a: complex, b: complex, theta: float) -> float:
    z = complex(math.cos(theta), math.sin(theta))
    w = (a - z).conjugate() * (b - z)
    return abs(math.atan2(w.imag, w.real))


def golden_section_maximize(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
    trace: list[float] | None = None,
) -> tuple[float, float, int, float]:
    """Maximize a unimodal ``f`` on ``[lo, hi]``.

    Returns ``(x, f(x), iterations, final bracket width)``.  When ``trace``
    is given, the bracket width after each iteration is appended to it.
    """
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    it = 0
    while hi - lo > tol and it < max_iter:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = f(d)
        it += 1
        if trace is not None:
            trace.append(hi - lo)
        if not lo < c < d < hi:
            # bracket exhausted at double resolution
            break
    x, fx = (c, fc) if fc >= fd else (d, fd)
    return x, fx, it, hi - lo


def vam_bruteforce(a: Point, b: Point, grid: int = 4096, tol: float = 1e-12) -> OracleReport:
    """Supremum of ``∠(a, z, b)`` over the unit circle, found numerically.

    The angle has at most one local maximum on each side of ``L[a, b]``;
    every grid-local maximum is refined and the largest is kept, with ties
    going to the smaller angle.
    """
    check_in_disk(a, b)
    if a == b:
        raise CoincidentPoints(f"{a} = {b}")
    a = complex(a)
    b = complex(b)
    step = 2.0 * math.pi / grid
    theta = np.arange(grid) * step
    vals = boundary_angles(a, b, theta)
    peaks = np.flatnonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))
    # a plateau yields several peaks; refining each is harmless
    best: tuple[float, float, int, float] | None = None
    f = lambda t: _boundary_angle(a, b, t)  # noqa: E731
    for k in peaks:
        t0 = theta[k]
        x, fx, it, width = golden_section_maximize(f, t0 - step, t0 + step, tol)
        if best is None or fx > best[1]:
            best = (x, fx, it, width)
    assert best is not None
    x, fx, it, width = best
    x = math.remainder(x, 2.0 * math.pi)
    return OracleReport(float(fx), complex(math.cos(x), math.sin(x)), grid, it, float(width))


def thread_count() -> int:
    """Worker count from ``DISKMETRICS_THREADS`` (0 or unset means automatic)."""
    raw = os.environ.get("DISKMETRICS_THREADS", "0")
    try:
        n = int(raw)
    except ValueError:
        n = 0
    return n if n > 0 else (os.cpu_count() or 1)


def parallel_map(fn: Callable, items: Sequence, threads: int | None = None) -> list:
    """Order-preserving map; results do not depend on the worker count."""
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _ray_exit(z: complex, d: complex) -> float:
    """Positive ``t`` with ``|z + t d| = 1`` for a unit direction ``d``."""
    p = (z.conjugate() * d).real
    return -p + math.sqrt(p * p + (1.0 - abs(z) ** 2))


def evenly_separated_sequence(p: Point, q: Point, step: float, n: int, root_tol: float = 1e-14) -> list[Point]:
    """Points ``a_1 = p, a_2, ..., a_n`` on the ray from ``p`` toward ``q`` with ``rho(a_j, a_{j+1}) = step``.

    Each successor is found by bisection on the Euclidean parameter, along
    which ``rho`` is strictly increasing.
    """
    check_in_disk(p, q)
    if p == q:
        raise CoincidentPoints(f"{p} = {q}")
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    d = (q - p) / abs(q - p)
    points = [complex(p)]
    for _ in range(n - 1):
        z = points[-1]
        hi = _ray_exit(z, d)
        lo = 0.0
        # largest representable parameter that stays inside the disk
        while abs(z + hi * d) >= 1.0:
            hi = math.nextafter(hi, 0.0)
        try:
            reachable = rho(z, z + hi * d)
        except OutsideDisk:
            reachable = -math.inf
        if reachable < step:
            raise ChordExhausted(f"rho step {step} does not fit before the boundary after {len(points)} points")
        while hi - lo > root_tol:
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            if rho(z, z + mid * d) < step:
                lo = mid
            else:
                hi = mid
        points.append(z + 0.5 * (lo + hi) * d)
    return points


def make_rng(seed: int = DEFAULT_SEED) -> np.random.Generator:
    """Counter-based (Philox) generator; reproducible bit-for-bit per seed."""
    return np.random.Generator(np.random.Philox(seed))


def random_point(rng: np.random.Generator, max_modulus: float = 0.95) -> complex:
    r = max_modulus * math.sqrt(rng.random())
    t = 2.0 * math.pi * rng.random()
    return complex(r * math.cos(t), r * math.sin(t))


def random_pair(
    rng: np.random.Generator, max_modulus: float = 0.95, min_separation: float = 1e-3
) -> tuple[complex, complex]:
    """Two points, area-uniform in the disk of radius ``max_modulus``, at least ``min_separation`` apart."""
    if not 0 < max_modulus < 1:
        raise ValueError(f"max_modulus must lie in (0, 1), got {max_modulus}")
    while True:
        a = random_point(rng, max_modulus)
        b = random_point(rng, max_modulus)
        if abs(a - b) >= min_separation:
            return a, b


def random_pairs(
    n: int, seed: int = DEFAULT_SEED, max_modulus: float = 0.95, min_separation: float = 1e-3
) -> list[tuple[complex, complex]]:
    rng = make_rng(seed)
    return [random_pair(rng, max_modulus, min_separation) for _ in range(n)]


def random_collinear_pair(
    rng: np.random.Generator, max_modulus: float = 0.95, min_separation: float = 1e-3
) -> tuple[complex, complex]:
    """Two distinct points on a random diameter (possibly on opposite sides of 0)."""
    e = complex(math.cos(t := 2.0 * math.pi * rng.random()), math.sin(t))
    while True:
        r, s = rng.uniform(-max_modulus, max_modulus, size=2)
        if abs(r - s) >= min_separation:
            return float(r) * e, float(s) * e


def random_equal_modulus_pair(
    rng: np.random.Generator, max_modulus: float = 0.95, min_separation: float = 1e-3
) -> tuple[complex, complex]:
    """Two points on a common circle ``S(0, r)``, not collinear with 0."""
    while True:
        r = max_modulus * math.sqrt(rng.random())
        t1, t2 = 2.0 * math.pi * rng.random(2)
        a = complex(r * math.cos(t1), r * math.sin(t1))
        b = complex(r * math.cos(t2), r * math.sin(t2))
        if abs(a - b) >= min_separation and abs(a + b) >= min_separation:
            return a, b


def spread(values: Iterable[float]) -> float:
    vals = list(values)
    return max(vals) - min(vals)
