"""Seeded invariant suites run by ``diskmetrics selftest``.

Each suite returns the worst residual it saw and the threshold it was held
to.  Only the route-agreement suite follows the user tolerance; the others
use fixed thresholds.  Route and oracle agreement report raw residuals,
the rest report residuals in units of their own tolerance (threshold 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import distortion as dist
from .errors import DiskMetricsError
from .geom_core import angle_at, apply_inversion, inversion_center
from .hyperbolic import (
    DiskAutomorphism,
    hyperbolic_midpoint,
    mobius_Ta,
    rho,
    rho_via_cross_ratio,
)
from .oracle import (
    evenly_separated_sequence,
    make_rng,
    parallel_map,
    random_collinear_pair,
    random_equal_modulus_pair,
    random_pair,
    random_point,
    spread,
    vam_bruteforce,
)
from .vam import (
    GENERAL_ROUTES,
    bisection_residual,
    max_pairwise_discrepancy,
    route_function,
    vam,
    vam_bounds,
    vam_equal_modulus,
    vam_radial,
    vam_via_rho,
)

# float slack for comparisons between quantities that can be mathematically equal
ORDER_SLACK = 1e-12


@dataclass
class SuiteResult:
    name: str
    worst: float
    threshold: float
    checked: int
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.worst <= self.threshold

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<20} worst={self.worst:.3e}  threshold={self.threshold:.1e}  n={self.checked}"


def suite_route_agreement(pairs, tol: float) -> SuiteResult:
    worst = 0.0
    for a, b in pairs:
        vals = [route_function(n)(a, b).value for n in GENERAL_ROUTES]
        worst = max(worst, max_pairwise_discrepancy(vals) / max(vals))
    return SuiteResult("route_agreement", worst, tol, len(pairs))


def suite_oracle(pairs, oracle_tol: float = 1e-6) -> SuiteResult:
    worst = 0.0
    refs = parallel_map(lambda p: vam_bruteforce(*p).value, pairs)
    for (a, b), ref in zip(pairs, refs):
        for n in GENERAL_ROUTES:
            worst = max(worst, abs(route_function(n)(a, b).value - ref))
    return SuiteResult("oracle_agreement", worst, oracle_tol, len(pairs))


def suite_special_cases(rng, samples: int) -> SuiteResult:
    worst = 0.0
    for _ in range(samples):
        a, b = random_collinear_pair(rng)
        r = vam_radial(a, b)
        via = vam_via_rho(a, b).value
        vals = (r.diagnostics["arcsin_form"], r.diagnostics["tan_form"], via)
        worst = max(worst, max_pairwise_discrepancy(vals) / 1e-12)
    for _ in range(samples):
        a, b = random_equal_modulus_pair(rng)
        worst = max(worst, abs(vam_equal_modulus(a, b).value - vam_bruteforce(a, b).value) / 1e-6)
    # residuals are reported in units of their own tolerance
    return SuiteResult("special_cases", worst, 1.0, 2 * samples)


def suite_certificates(pairs, bisection_tol: float = 1e-9) -> SuiteResult:
    worst = 0.0
    for a, b in pairs:
        res = vam(a, b)
        z = res.extremal_point
        parts = [
            abs(abs(z) - 1.0) / 1e-12,
            abs(angle_at(z, a, b) - res.value) / 1e-10,
        ]
        if res.route == "orthocircle":
            parts.append(res.diagnostics["quadratic_residual_z1"] / 1e-10)
            parts.append(res.diagnostics["quadratic_residual_z2"] / 1e-10)
            parts.append(bisection_residual(a, b, z) / bisection_tol)
        worst = max(worst, *parts)
    return SuiteResult("certificates", worst, 1.0, len(pairs))


def suite_bounds(pairs, rng, samples: int) -> SuiteResult:
    worst = 0.0
    for a, b in pairs:
        lo, hi = vam_bounds(a, b)
        t = math.tan(0.5 * vam(a, b).value)
        worst = max(worst, (lo - t) / (ORDER_SLACK * t), (t - hi) / (ORDER_SLACK * t))
    for _ in range(samples):
        a, b = random_collinear_pair(rng)
        lo, hi = vam_bounds(a, b)
        worst = max(worst, abs(hi - lo) / 1e-12)
    return SuiteResult("bounds", max(worst, 0.0), 1.0, len(pairs) + samples)


def schwarz_sweep(K: float, map_kind: str, samples: int, seed: int) -> dict:
    """Draw seeded (pair, map) samples and evaluate both sides of the Schwarz bound."""
    if map_kind not in ("mobius", "stretch"):
        raise ValueError(f"unknown map {map_kind!r}")
    rng = make_rng(seed)
    violations = 0
    records = []
    for _ in range(samples):
        a, b = random_pair(rng)
        if map_kind == "mobius":
            f = DiskAutomorphism.mobius(random_point(rng))
        else:
            f = DiskAutomorphism.radial_stretch(K)
        fa, fb = f(a), f(b)
        lhs, rhs = dist.main3_bound(a, b, fa, fb, K)
        if lhs > rhs * (1.0 + ORDER_SLACK):
            violations += 1
        records.append((lhs / rhs, rhs - lhs, a, b, fa, fb))
    records.sort(key=lambda r: -r[0])
    return {
        "K": K,
        "map": map_kind,
        "samples": samples,
        "seed": seed,
        "violations": violations,
        "max_ratio": records[0][0] if records else 0.0,
        "min_slack": min((r[1] for r in records), default=0.0),
        "witnesses": records[:3],
    }


def suite_schwarz(samples: int, seed: int) -> SuiteResult:
    runs = [schwarz_sweep(1.0, "mobius", samples, seed)]
    runs += [schwarz_sweep(K, "stretch", samples, seed) for K in (1.5, 2.0, 4.0)]
    violations = sum(r["violations"] for r in runs)
    worst = float(violations)
    rng = make_rng(seed)
    for _ in range(min(samples, 200)):
        a, b = random_collinear_pair(rng)
        lhs, rhs = dist.main3_bound(a, b, a, b, 1.0)
        worst = max(worst, abs(lhs - rhs) / 1e-12)
    return SuiteResult("schwarz", worst, 1.0, 4 * samples, {"violations": violations})


def suite_special_functions() -> SuiteResult:
    parts = []
    for k in range(1, 100):
        r = k / 100
        parts.append(abs(dist.mu(r) * dist.mu(dist.complement(r)) - dist.PI2_OVER_4) / 1e-12)
    for k in range(1, 20):
        r = k / 20
        parts.append(abs(dist.phi_K(2.0, r) - 2 * math.sqrt(r) / (1 + r)) / 1e-10)
        for K in (1.0, 1.5, 2.0, 4.0, 8.0):
            parts.append(dist.slem2_identity_residual(K, r) / 1e-10)
            parts.append(abs(dist.phi_K(K, dist.phi_K(1 / K, r)) - r) / 1e-10)
    return SuiteResult("special_functions", max(parts), 1.0, len(parts))


def suite_hyperbolic(pairs, rng) -> SuiteResult:
    worst = 0.0
    for a, b in pairs:
        z = hyperbolic_midpoint(a, b)
        d = rho(a, b)
        worst = max(worst, abs(rho(a, z) - rho(z, b)) / 1e-10, abs(rho(a, z) - d / 2) / 1e-10)
        w = random_point(rng)
        moved = rho(mobius_Ta(w, a), mobius_Ta(w, b))
        worst = max(worst, abs(moved - d) / 1e-12)
        worst = max(worst, abs(rho_via_cross_ratio(a, b) - d) / 1e-10)
        try:
            c = inversion_center(a, b)
        except DiskMetricsError:
            continue
        worst = max(
            worst,
            abs(apply_inversion(c, a) - b) / 1e-10,
            abs(apply_inversion(c, apply_inversion(c, z)) - z) / 1e-10,
        )
        e = complex(math.cos(t := 2 * math.pi * rng.random()), math.sin(t))
        worst = max(worst, abs(abs(apply_inversion(c, e)) - 1.0) / 1e-10)
    return SuiteResult("hyperbolic", worst, 1.0, len(pairs))


def suite_evenly_separated(rng, chords: int, length: int = 8) -> SuiteResult:
    worst = 0.0
    for _ in range(chords):
        p, q = random_pair(rng, max_modulus=0.6, min_separation=0.05)
        step = float(rng.uniform(0.2, 0.8))
        seq = evenly_separated_sequence(p, q, step, length)
        worst = max(worst, spread(vam(x, y).value for x, y in zip(seq, seq[1:])) / 1e-10)
    return SuiteResult("evenly_separated", worst, 1.0, chords)


def suite_metric_axioms(rng, samples: int) -> SuiteResult:
    worst = 0.0
    for _ in range(samples):
        a, b = random_pair(rng)
        c = random_point(rng)
        vab = vam(a, b).value
        if vab != vam(b, a).value:
            worst = math.inf
        slack = vam(a, c).value + vam(c, b).value - vab
        worst = max(worst, -slack / 1e-10)
    return SuiteResult("metric_axioms", max(worst, 0.0), 1.0, samples)


def run_selftest(samples: int, seed: int, tol: float) -> list[SuiteResult]:
    rng = make_rng(seed)
    pairs = [random_pair(rng) for _ in range(samples)]
    n_small = max(1, min(samples, 1000))
    return [
        suite_route_agreement(pairs, tol),
        suite_oracle(pairs),
        suite_special_cases(rng, n_small),
        suite_certificates(pairs),
        suite_bounds(pairs, rng, n_small),
        suite_schwarz(n_small, seed),
        suite_special_functions(),
        suite_hyperbolic(pairs, rng),
        suite_evenly_separated(rng, max(1, min(samples, 100))),
        suite_metric_axioms(rng, samples),
    ]
