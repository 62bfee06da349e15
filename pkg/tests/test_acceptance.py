"""Acceptance criteria, each run at its stated tolerance on seeded data.

Every test prints one ``PASS``/``FAIL`` line with the worst residual seen.
"""
import math

import pytest

from diskmetrics import distortion as dist
from diskmetrics.geom_core import angle_at, apply_inversion, inversion_center
from diskmetrics.errors import DiskMetricsError
from diskmetrics.hyperbolic import (
    DiskAutomorphism,
    hyperbolic_midpoint,
    mobius_Ta,
    rho,
    rho_via_cross_ratio,
)
from diskmetrics.oracle import (
    evenly_separated_sequence,
    make_rng,
    parallel_map,
    random_collinear_pair,
    random_equal_modulus_pair,
    random_pair,
    random_pairs,
    random_point,
    spread,
    vam_bruteforce,
)
from diskmetrics.vam import (
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

SEED = 42
N_SWEEP = 10_000
# relative float slack for order relations whose two sides can coincide
ORDER_SLACK = 1e-12


def report(capsys, name, checks):
    """Print one line for the criterion and return whether every check held.

    ``checks`` maps a label to ``(worst, tolerance)``; a check holds when
    ``worst <= tolerance``.
    """
    ok = all(w <= t for w, t in checks.values())
    detail = "  ".join(f"{k}={w:.2e}/{t:.0e}" for k, (w, t) in checks.items())
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    return ok


@pytest.fixture(scope="module")
def sweep():
    pairs = random_pairs(N_SWEEP, seed=SEED, max_modulus=0.95, min_separation=1e-3)
    results = [vam(a, b) for a, b in pairs]
    return pairs, results


def test_1_route_agreement(sweep, capsys):
    pairs, _ = sweep
    oracle = parallel_map(lambda p: vam_bruteforce(*p).value, pairs)
    worst_rel = worst_oracle = 0.0
    for (a, b), ref in zip(pairs, oracle):
        vals = [route_function(n)(a, b).value for n in GENERAL_ROUTES]
        worst_rel = max(worst_rel, max_pairwise_discrepancy(vals) / max(vals))
        worst_oracle = max(worst_oracle, max(abs(v - ref) for v in vals))
    assert report(
        capsys,
        "1 route agreement",
        {"pairwise_rel": (worst_rel, 1e-9), "vs_oracle": (worst_oracle, 1e-6)},
    )


def test_2_special_cases(capsys):
    rng = make_rng(SEED)
    worst_collinear = 0.0
    for _ in range(1000):
        a, b = random_collinear_pair(rng)
        r = vam_radial(a, b)
        vals = (r.diagnostics["arcsin_form"], r.diagnostics["tan_form"], vam_via_rho(a, b).value)
        worst_collinear = max(worst_collinear, max_pairwise_discrepancy(vals))
    worst_equal = 0.0
    for _ in range(1000):
        a, b = random_equal_modulus_pair(rng)
        worst_equal = max(worst_equal, abs(vam_equal_modulus(a, b).value - vam_bruteforce(a, b).value))
    assert report(
        capsys,
        "2 special cases",
        {"collinear": (worst_collinear, 1e-12), "equal_modulus_vs_oracle": (worst_equal, 1e-6)},
    )


def test_3_certificates(sweep, capsys):
    pairs, results = sweep
    w_mod = w_angle = w_quad = w_bis = 0.0
    for (a, b), res in zip(pairs, results):
        z = res.extremal_point
        w_mod = max(w_mod, abs(abs(z) - 1.0))
        w_angle = max(w_angle, abs(angle_at(z, a, b) - res.value))
        if res.route == "orthocircle":
            w_quad = max(w_quad, res.diagnostics["quadratic_residual_z1"], res.diagnostics["quadratic_residual_z2"])
            w_bis = max(w_bis, bisection_residual(a, b, z))
    assert report(
        capsys,
        "3 extremal-point certificates",
        {
            "modulus": (w_mod, 1e-12),
            "angle": (w_angle, 1e-10),
            "quadratic": (w_quad, 1e-10),
            "bisection": (w_bis, 1e-9),
        },
    )


def test_4_bounds(sweep, capsys):
    pairs, results = sweep
    violations = 0
    for (a, b), res in zip(pairs, results):
        lo, hi = vam_bounds(a, b)
        t = math.tan(0.5 * res.value)
        if lo > t * (1.0 + ORDER_SLACK) or t > hi * (1.0 + ORDER_SLACK):
            violations += 1
    rng = make_rng(SEED)
    gap = max(abs(hi - lo) for lo, hi in (vam_bounds(*random_collinear_pair(rng)) for _ in range(1000)))
    assert report(capsys, "4 bounds", {"violations": (violations, 0), "m0_gap": (gap, 1e-12)})


def test_5_schwarz(capsys):
    violations = {}
    draws = [("mobius", 1.0)] + [("stretch", K) for K in (1.5, 2.0, 4.0)]
    for kind, K in draws:
        rng = make_rng(SEED)
        count = 0
        for _ in range(1000):
            a, b = random_pair(rng)
            f = DiskAutomorphism.mobius(random_point(rng)) if kind == "mobius" else DiskAutomorphism.radial_stretch(K)
            lhs, rhs = dist.main3_bound(a, b, f(a), f(b), K)
            count += lhs > rhs * (1.0 + ORDER_SLACK)
        violations[f"{kind}_K{K:g}"] = (count, 0)
    rng = make_rng(SEED)
    eq = 0.0
    for _ in range(1000):
        a, b = random_collinear_pair(rng)
        lhs, rhs = dist.main3_bound(a, b, a, b, 1.0)
        eq = max(eq, abs(lhs - rhs))
    violations["identity_equality"] = (eq, 1e-12)
    assert report(capsys, "5 Schwarz lemma", violations)


def test_6_special_functions(capsys):
    w_mu = max(abs(dist.mu(k / 100) * dist.mu(dist.complement(k / 100)) - dist.PI2_OVER_4) for k in range(1, 100))
    grid = [k / 100 for k in range(1, 100)]
    w_phi2 = max(abs(dist.phi_K(2.0, r) - 2 * math.sqrt(r) / (1 + r)) for r in grid)
    w_slem = max(dist.slem2_identity_residual(K, r) for K in (1.0, 1.5, 2.0, 4.0, 8.0) for r in grid)
    # hypergeometric series (pi/2) 2F1(1/2, 1/2; 1; r^2), summed to double precision
    x, c, terms = 0.5, 1.0, [1.0]
    for n in range(1, 400):
        c *= (2 * n - 1) / (2 * n)
        terms.append(c * c * x**n)
    series = 0.5 * math.pi * math.fsum(terms)
    w_K = abs(dist.elliptic_K(1 / math.sqrt(2)) - series)
    assert report(
        capsys,
        "6 special functions",
        {"mu_reciprocal": (w_mu, 1e-12), "phi2": (w_phi2, 1e-10), "slem2": (w_slem, 1e-10), "K_series": (w_K, 1e-12)},
    )


def test_7_hyperbolic(sweep, capsys):
    pairs, _ = sweep
    rng = make_rng(SEED)
    w_mid = w_half = w_mob = w_cr = w_swap = w_inv = w_circ = 0.0
    for a, b in pairs:
        d = rho(a, b)
        z = hyperbolic_midpoint(a, b)
        w_mid = max(w_mid, abs(rho(a, z) - rho(z, b)))
        w_half = max(w_half, abs(rho(a, z) - 0.5 * d))
        w = random_point(rng)
        w_mob = max(w_mob, abs(rho(mobius_Ta(w, a), mobius_Ta(w, b)) - d))
        w_cr = max(w_cr, abs(rho_via_cross_ratio(a, b) - d))
        try:
            c = inversion_center(a, b)
        except DiskMetricsError:
            continue
        w_swap = max(w_swap, abs(apply_inversion(c, a) - b))
        w_inv = max(w_inv, abs(apply_inversion(c, apply_inversion(c, z)) - z))
        t = 2.0 * math.pi * rng.random()
        w_circ = max(w_circ, abs(abs(apply_inversion(c, complex(math.cos(t), math.sin(t)))) - 1.0))
    assert report(
        capsys,
        "7 hyperbolic toolkit",
        {
            "midpoint_sym": (w_mid, 1e-10),
            "midpoint_half": (w_half, 1e-10),
            "mobius_invariance": (w_mob, 1e-12),
            "cross_ratio": (w_cr, 1e-10),
            "h(a)=b": (w_swap, 1e-10),
            "h∘h=id": (w_inv, 1e-10),
            "|h(∂B)|=1": (w_circ, 1e-10),
        },
    )


def test_8_evenly_separated(capsys):
    rng = make_rng(SEED)
    worst = 0.0
    for _ in range(100):
        p, q = random_pair(rng, max_modulus=0.6, min_separation=0.05)
        step = float(rng.uniform(0.2, 0.8))
        seq = evenly_separated_sequence(p, q, step, 8)
        worst = max(worst, spread(vam(x, y).value for x, y in zip(seq, seq[1:])))
    assert report(capsys, "8 evenly separated", {"spread": (worst, 1e-10)})


def test_9_metric_axioms(capsys):
    rng = make_rng(SEED)
    worst = 0.0
    asymmetric = 0
    for _ in range(N_SWEEP):
        a, b = random_pair(rng)
        c = random_point(rng)
        vab = vam(a, b).value
        asymmetric += vab != vam(b, a).value
        worst = max(worst, vab - vam(a, c).value - vam(c, b).value)
    assert report(
        capsys,
        "9 metric axioms",
        {"triangle_deficit": (max(worst, 0.0), 1e-10), "asymmetric": (asymmetric, 0)},
    )
