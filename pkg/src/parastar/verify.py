"""Named verification checks pairing every closed-form claim with an oracle.

This registry backs the ``verify`` command; the acceptance tests run the
same machinery at full sample counts.  Check ids are hierarchical
(``radius/...``, ``region/...``, ``series/...``) so runs can be filtered
by substring.
"""

from __future__ import annotations

import math

import numpy as np

from . import oracle, radii, region
from .maps import parabola_map
from .oracle import VerificationReport
from .series import PowerSeries, extremal_lower, extremal_upper, p0_coefficients

_PI = math.pi


def _report(check_id, passed, oracle_value, closed_form=0.0, tolerance=0.0,
            samples=0, notes=""):
    return VerificationReport(check_id=check_id, closed_form=closed_form,
                              oracle_value=float(oracle_value),
                              gap=abs(closed_form - oracle_value),
                              tolerance=tolerance, samples=samples,
                              passed=bool(passed), notes=notes)


def _verification_catalog() -> list[radii.RadiusEntry]:
    entries = radii.default_entries()
    entries.extend([
        radii.membership_radius("bs", alpha=0.25),
        radii.membership_radius("alpha_exp", alpha=0.3),
        radii.membership_radius("alpha_exp", alpha=0.8),
        radii.membership_radius("janowski", A=1.0, B=-0.9),
        radii.membership_radius("janowski", A=0.3, B=-0.1),
        radii.caratheodory_order_radius(0.5),
        radii.disc_class_radius(0.5),
        radii.ratio_class_radius(0.0),
        radii.m_class_radius(1.1),
        radii.m_class_radius(1.4),
    ])
    return entries


def radius_reports(tol: float = 1e-9) -> list[VerificationReport]:
    reports = []
    for entry in _verification_catalog():
        method = "golden" if entry.root_only else "bisect"
        root = radii.oracle_root(entry, method=method)
        reports.append(VerificationReport.from_pair(
            f"radius/{entry.label}", entry.closed_form, root, tol,
            notes=(entry.notes + "; " if entry.notes else "") + f"oracle={method}"))
    return reports


def witness_reports(tol: float = 1e-9) -> list[VerificationReport]:
    reports = []
    for entry in _verification_catalog():
        if entry.witness_margin is None:
            continue
        m = entry.witness_margin()
        reports.append(VerificationReport.from_pair(
            f"witness/{entry.label}", 0.0, m, tol,
            notes="extremal identity margin at z0 = radius"))
    return reports


def series_reports() -> list[VerificationReport]:
    pi2 = _PI**2
    g = extremal_upper(8)
    expected = {
        2: 8.0 / pi2,
        3: -8.0 * (pi2 - 12.0) / (3.0 * pi2**2),
        4: 8.0 * (1440.0 - 360.0 * pi2 + 23.0 * pi2**2) / (135.0 * pi2**3),
    }
    dev = max(abs(g.coeffs[n].real - v) for n, v in expected.items())
    dev = max(dev, float(np.max(np.abs(g.coeffs.imag))))
    reports = [VerificationReport.from_pair("series/upper_coefficients", 0.0, dev, 1e-12,
                                            notes="a2..a4 against closed expressions")]

    n_max = 32
    f = extremal_lower(n_max)
    lp = p0_coefficients(n_max) + 1.0
    lhs = f.z_times_derivative()
    rhs = f * lp
    resid = float(np.max(np.abs(lhs.coeffs[: n_max] - rhs.coeffs[: n_max])))
    reports.append(VerificationReport.from_pair("series/defining_ode", 0.0, resid, 1e-12,
                                                notes="z f' = f * map series, coefficientwise"))
    return reports


def region_reports(seed: int = 0) -> list[VerificationReport]:
    rng = np.random.default_rng(seed)
    reports = []

    # sharp real-part bounds against brute-force angular extremization
    angles = np.linspace(-_PI, _PI, 4096, endpoint=False)
    worst = 0.0
    monotone_ok = True
    prev = None
    for r in np.arange(0.05, 0.951, 0.05):
        vals = np.real(parabola_map(r * np.exp(1j * angles)))
        lo, hi = region.real_part_bounds(r)
        worst = max(worst, abs(vals.min() - lo), abs(vals.max() - hi))
        if prev is not None:
            monotone_ok &= hi > prev[1] and lo < prev[0]
        prev = (lo, hi)
    reports.append(VerificationReport.from_pair("region/real_part_bounds", 0.0, worst, 1e-8,
                                                samples=4096, notes="19-radius grid"))
    reports.append(_report("region/profile_monotone", monotone_ok, 0.0,
                           notes="max increasing, min decreasing in r"))

    # inscribed discs: inner probe holds, outer probe fails
    ok = True
    phis = np.linspace(-_PI, _PI, 256, endpoint=False)
    for a in (-1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.4):
        disc = region.inscribed_disc(a)
        inner = a + disc.radius * (1.0 - 1e-9) * np.exp(1j * phis)
        outer = a + disc.radius * (1.0 + 1e-3) * np.exp(1j * phis)
        ok &= bool(np.all(region.margin(inner) > 0.0))
        ok &= bool(np.any(region.margin(outer) <= 0.0))
    reports.append(_report("region/inscribed_disc_probes", ok, 0.0, samples=256))

    # interior points satisfy the sharp argument sector
    xs = 1.5 - rng.exponential(2.0, 20000)
    ys = rng.uniform(-1.0, 1.0, 20000) * np.sqrt(3.0 - 2.0 * xs)
    sector_ok = all(region.argument_sector_check(complex(x, y))
                    for x, y in zip(xs * 0.9999 + 0.00005, ys * 0.9999))
    reports.append(_report("region/argument_sector", sector_ok, 0.0, samples=20000))
    return reports


def growth_reports(samples: int = 20, seed: int = 0) -> list[VerificationReport]:
    reports = []
    f = extremal_lower(300)
    g = extremal_upper(300)
    worst = 0.0
    for r in np.arange(0.1, 0.91, 0.1):
        lo, hi = oracle.growth_bounds(r)
        worst = max(worst, abs(lo - float(f(r).real)), abs(hi - float(g(r).real)))
    reports.append(VerificationReport.from_pair("growth/series_vs_quadrature", 0.0, worst,
                                                1e-8, notes="r in 0.1..0.9"))

    rng = np.random.default_rng(seed)
    violation = -math.inf
    for _ in range(samples):
        w_fn, _zeros = oracle.sample_schwarz_function(rng)
        for r in (0.3, 0.6, 0.9):
            lo, hi = oracle.growth_bounds(r)
            val = oracle.member_growth_modulus(w_fn, r)
            violation = max(violation, lo - val, val - hi)
    reports.append(_report("growth/random_members", violation <= 1e-8, violation,
                           samples=samples, tolerance=1e-8,
                           notes=f"worst sandwich violation, seed={seed}"))

    est = oracle.covering_constant()
    reports.append(_report("growth/covering_constant", est.last_delta < 1e-8,
                           est.value, samples=est.refinements, tolerance=1e-8,
                           notes=f"extrapolated at k={est.refinements}, "
                                 f"delta={est.last_delta:.3e}"))
    return reports


def certify_reports(samples: int = 50, seed: int = 0) -> list[VerificationReport]:
    reports = []
    passing = certify_sample_members(n_members=samples, t=0.0, seed=seed)
    contained = sum(1 for rep in passing if rep.passed)
    reports.append(_report("certify/implication_t0", contained == len(passing),
                           len(passing) - contained, samples=len(passing),
                           notes=f"{contained}/{len(passing)} certified members "
                                 f"inside the region, seed={seed}"))

    for c, expect in ((0.3, True), (0.4, False)):
        f = PowerSeries([0.0, 1.0, c])
        rep = oracle.certify_sufficient_condition(f, 0.0)
        reports.append(_report(f"certify/quadratic_c{c:g}", rep.passed == expect,
                               rep.oracle_value, closed_form=rep.closed_form,
                               samples=rep.samples,
                               notes=f"expected {'pass' if expect else 'fail'}"))
    return reports


def random_polynomial_members(rng: np.random.Generator, n: int):
    """Seeded stream of normalised polynomials with modest coefficients."""
    out = []
    while len(out) < n:
        deg = int(rng.integers(2, 6))
        coeffs = np.zeros(deg + 1, dtype=complex)
        coeffs[1] = 1.0
        k = np.arange(2, deg + 1)
        mags = rng.uniform(0.0, 0.25, deg - 1) / k
        args = rng.uniform(-_PI, _PI, deg - 1)
        coeffs[2:] = mags * np.exp(1j * args)
        out.append(PowerSeries(coeffs))
    return out


def certify_sample_members(n_members: int, t: float, seed: int = 0):
    """Certification reports for seeded random members that pass the bound.

    Draws random polynomials until ``n_members`` of them satisfy the
    differential inequality at parameter ``t``; each passing member's
    report already includes the containment conclusion.
    """
    rng = np.random.default_rng(seed)
    passing = []
    attempts = 0
    while len(passing) < n_members and attempts < 100 * n_members:
        attempts += 1
        f = random_polynomial_members(rng, 1)[0]
        try:
            rep = oracle.certify_sufficient_condition(f, t)
        except Exception:
            continue
        if rep.oracle_value < rep.closed_form:  # inequality held at all samples
            passing.append(rep)
    return passing


def duality_reports() -> list[VerificationReport]:
    gap = 0.0
    for beta in (0.25, 0.5, 0.75):
        a = radii.beta_disc_radius(beta).closed_form
        b = radii.caratheodory_order_radius(1.0 - beta).closed_form
        gap = max(gap, abs(a - b))
    return [VerificationReport.from_pair("radius/beta_order_duality", 0.0, gap, 0.0,
                                         notes="exact formula identity")]


def run_all(only: str | None = None, tol: float = 1e-9, samples: int | None = None,
            seed: int = 0) -> list[VerificationReport]:
    """Run every registered check (optionally substring-filtered)."""
    reports = []
    reports += radius_reports(tol)
    reports += witness_reports(tol)
    reports += duality_reports()
    reports += series_reports()
    reports += region_reports(seed=seed)
    reports += growth_reports(samples=samples or 20, seed=seed)
    reports += certify_reports(samples=samples or 50, seed=seed)
    if only is not None:
        reports = [r for r in reports if only in r.check_id]
    return reports
