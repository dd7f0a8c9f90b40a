"""Independent numerical machinery: extremizers, root bracketing, quadrature.

Everything here re-derives quantities that also have closed forms
elsewhere in the package, so agreement between the two routes is a real
check rather than a tautology.  Sampling loops are deterministic for a
fixed seed regardless of the parallelism degree (ordered reduction).
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cache

import numpy as np
from scipy.integrate import quad

from . import region
from .errors import (
    DerivativeVanishes,
    DomainError,
    MaxIterExceeded,
    NoConvergence,
    NoSignChange,
    ParamRange,
    ParastarError,
    QuadratureFailure,
    SingularOnCircle,
)
from .maps import parabola_map
from .series import PowerSeries, integrate_over_t, p0_coefficients

_PI_SQ = math.pi**2
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class BracketSolverConfig:
    abs_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise ParamRange("abs_tol must be positive")
        if self.max_iter < 1:
            raise ParamRange("max_iter must be at least 1")


_DEFAULT_CFG = BracketSolverConfig()


@dataclass
class VerificationReport:
    """Outcome of one closed-form-versus-oracle comparison."""

    check_id: str
    closed_form: float | None
    oracle_value: float | None
    gap: float | None
    tolerance: float
    samples: int
    passed: bool
    notes: str = ""

    @classmethod
    def from_pair(cls, check_id, closed_form, oracle_value, tolerance,
                  samples=0, notes=""):
        gap = abs(closed_form - oracle_value)
        return cls(check_id=check_id, closed_form=float(closed_form),
                   oracle_value=float(oracle_value), gap=float(gap),
                   tolerance=float(tolerance), samples=int(samples),
                   passed=bool(gap <= tolerance), notes=notes)

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "id": self.check_id,
            "closed_form": self.closed_form,
            "oracle_value": self.oracle_value,
            "gap": self.gap,
            "tolerance": self.tolerance,
            "samples": self.samples,
            "passed": self.passed,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


def bracket_root(f, lo: float, hi: float, cfg: BracketSolverConfig | None = None) -> float:
    """Bisection root of f on [lo, hi]; needs a sign change at the ends.

    Returns r with bracket width and |f(r)| both below ``cfg.abs_tol``.
    """
    cfg = cfg or _DEFAULT_CFG
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise NoSignChange(f"no sign change on [{lo}, {hi}]")
    for _ in range(cfg.max_iter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0 or (hi - lo <= cfg.abs_tol and abs(fmid) <= cfg.abs_tol):
            return mid
        if math.copysign(1.0, fmid) == math.copysign(1.0, flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    raise MaxIterExceeded("bisection did not reach tolerance")


def golden_bracket_root(f, lo: float, hi: float, cfg: BracketSolverConfig | None = None) -> float:
    """Root by golden-ratio bracket shrinking; an independent second solver."""
    cfg = cfg or _DEFAULT_CFG
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise NoSignChange(f"no sign change on [{lo}, {hi}]")
    for _ in range(cfg.max_iter):
        if hi - lo <= cfg.abs_tol:
            mid = 0.5 * (lo + hi)
            if abs(f(mid)) <= cfg.abs_tol:
                return mid
        cut = hi - _GOLDEN * (hi - lo)
        fcut = f(cut)
        if fcut == 0.0:
            return cut
        if math.copysign(1.0, fcut) == math.copysign(1.0, flo):
            lo, flo = cut, fcut
        else:
            hi = cut
    raise MaxIterExceeded("golden-section bracketing did not reach tolerance")


def scan_for_sign_change(f, lo: float, hi: float, n: int = 256) -> tuple[float, float]:
    """First subinterval of a uniform n-point scan where f changes sign."""
    xs = np.linspace(lo, hi, n)
    prev_x, prev_f = xs[0], f(xs[0])
    for x in xs[1:]:
        fx = f(x)
        if prev_f == 0.0 or math.copysign(1.0, fx) != math.copysign(1.0, prev_f):
            return float(prev_x), float(x)
        prev_x, prev_f = x, fx
    raise NoSignChange(f"no sign change found on [{lo}, {hi}] with {n} samples")


def _golden_minimize(g, a: float, b: float, tol: float) -> tuple[float, float]:
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    gc, gd = g(c), g(d)
    while b - a > tol:
        if gc < gd:
            b, d, gd = d, c, gc
            c = b - _GOLDEN * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + _GOLDEN * (b - a)
            gd = g(d)
    x = 0.5 * (a + b)
    return x, g(x)


@dataclass(frozen=True)
class ExtremeResult:
    min_value: float
    max_value: float
    argmin_angle: float
    argmax_angle: float


_FUNCTIONALS = {
    "re": lambda w: np.real(w),
    "abs": lambda w: np.abs(w),
    "arg_shifted": lambda w: np.abs(np.angle(w - 2.0)),
}


def extremize_on_circle(map_fn, r: float, functional: str = "re",
                        n_grid: int = 4096, angle_tol: float = 1e-10) -> ExtremeResult:
    """Extremes of a functional of ``map_fn`` over the circle |z| = r.

    A uniform angular grid (which contains 0 and -pi) is refined around
    the best grid points by golden-section search down to ``angle_tol``.
    """
    if not 0.0 <= r <= 1.0:
        raise DomainError("circle radius must lie in [0, 1]")
    if functional not in _FUNCTIONALS:
        raise DomainError(f"unknown functional {functional!r}")
    fun = _FUNCTIONALS[functional]
    theta = np.linspace(-math.pi, math.pi, n_grid, endpoint=False)
    try:
        w = np.asarray(map_fn(r * np.exp(1j * theta)))
    except ParastarError as exc:
        raise SingularOnCircle(f"map failed on |z| = {r}: {exc}") from exc
    if not np.all(np.isfinite(w)):
        raise SingularOnCircle(f"non-finite map value on |z| = {r}")
    vals = fun(w)

    def scalar(th: float) -> float:
        return float(fun(map_fn(r * complex(math.cos(th), math.sin(th)))))

    h = 2.0 * math.pi / n_grid
    i_min, i_max = int(np.argmin(vals)), int(np.argmax(vals))
    th_min, v_min = _golden_minimize(scalar, theta[i_min] - h, theta[i_min] + h, angle_tol)
    th_max, v_max = _golden_minimize(lambda t: -scalar(t), theta[i_max] - h, theta[i_max] + h, angle_tol)
    return ExtremeResult(min_value=v_min, max_value=-v_max,
                         argmin_angle=th_min, argmax_angle=th_max)


# --- growth bounds -------------------------------------------------------

# Integrands of int_0^r k(+-t)/t dt for the parabola kernel k.  Near 0 the
# removable singularity is handled by the kernel series on [0, 0.1].


def _lower_integrand(t: float) -> float:
    s = math.sqrt(t)
    return -(2.0 / _PI_SQ) * math.log((1.0 + s) / (1.0 - s)) ** 2 / t


def _upper_integrand(t: float) -> float:
    return (8.0 / _PI_SQ) * math.atan(math.sqrt(t)) ** 2 / t


@cache
def _kernel_integral_series() -> PowerSeries:
    # int_0^x k(t)/t dt to degree 64; evaluated at -x it gives the
    # reflected-kernel integral.
    return integrate_over_t(p0_coefficients(64))


_SERIES_CUT = 0.1
_QUAD_TARGET = 1e-10


def _quad_checked(fn, a: float, b: float) -> float:
    val, err = quad(fn, a, b, epsabs=1e-13, epsrel=1e-13, limit=500)
    if err > _QUAD_TARGET * (1.0 + abs(val)):
        raise QuadratureFailure(f"quadrature error estimate {err:.3e} too large")
    return val


def growth_bounds(r: float) -> tuple[float, float]:
    """Sharp growth sandwich (lower, upper) for |f| at |z| = r.

    Both bounds are r exp(int_0^r k(+-t)/t dt), evaluated by kernel series
    on [0, 0.1] and adaptive quadrature beyond; relative accuracy 1e-10.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError("radius must lie in [0, 1)")
    if r == 0.0:
        return 0.0, 0.0
    a = min(r, _SERIES_CUT)
    iser = _kernel_integral_series()
    i_lower = iser(a).real
    i_upper = iser(-a).real
    if r > a:
        i_lower += _quad_checked(_lower_integrand, a, r)
        i_upper += _quad_checked(_upper_integrand, a, r)
    return r * math.exp(i_lower), r * math.exp(i_upper)


@dataclass(frozen=True)
class CoveringEstimate:
    """Limit of the upper extremal modulus along the real axis toward 1."""

    value: float
    refinements: int
    last_delta: float
    evaluations: tuple[float, ...]


def covering_constant(tol: float = 1e-8, max_refinements: int = 48) -> CoveringEstimate:
    """Radius of the disc covered by every class member's image.

    Evaluates the upper growth bound at r = 1 - 2^{-k}; the raw sequence
    converges linearly in 2^{-k}, so successive Richardson extrapolants
    are compared until they differ by less than ``tol``.
    """

    def upper(rr: float) -> float:
        iser = _kernel_integral_series()
        return rr * math.exp(iser(-_SERIES_CUT).real
                             + _quad_checked(_upper_integrand, _SERIES_CUT, rr))

    evals = [upper(1.0 - 0.5**k) for k in (2, 3)]
    prev = 2.0 * evals[-1] - evals[-2]
    for k in range(4, max_refinements + 1):
        evals.append(upper(1.0 - 0.5**k))
        extrap = 2.0 * evals[-1] - evals[-2]
        delta = abs(extrap - prev)
        if delta < tol:
            return CoveringEstimate(value=extrap, refinements=k, last_delta=delta,
                                    evaluations=tuple(evals))
        prev = extrap
    raise NoConvergence(f"covering sequence not stable after {max_refinements} refinements: "
                        f"{evals}")


# --- containment and certification ---------------------------------------


def _chunked_map(map_fn, z: np.ndarray, parallelism: int | None):
    if not parallelism or parallelism <= 1:
        return np.asarray(map_fn(z))
    chunks = np.array_split(z, parallelism)
    with ThreadPoolExecutor(max_workers=parallelism) as pool:
        parts = list(pool.map(lambda c: np.asarray(map_fn(c)), chunks))
    return np.concatenate(parts)


def check_subordination_inclusion(map_fn, r: float, margin_fns=None,
                                  samples: int = 4096, check_id: str = "inclusion",
                                  parallelism: int | None = None) -> VerificationReport:
    """Sample-based containment of map(|z| = r) in a region.

    ``margin_fns`` are signed margins, positive inside; by default both
    defining forms of the parabolic region are checked.  Failure at any
    sample is conclusive; a pass is necessary-condition evidence only and
    the report says at how many samples it was verified.
    """
    if samples < 1:
        raise DomainError("need at least one sample")
    if margin_fns is None:
        margin_fns = (region.margin, region.support_margin)
    theta = np.linspace(-math.pi, math.pi, samples, endpoint=False)
    try:
        w = _chunked_map(map_fn, r * np.exp(1j * theta), parallelism)
    except ParastarError as exc:
        raise SingularOnCircle(f"map failed on |z| = {r}: {exc}") from exc
    if not np.all(np.isfinite(w)):
        raise SingularOnCircle(f"non-finite map value on |z| = {r}")
    worst = min(float(np.min(np.asarray(mf(w)))) for mf in margin_fns)
    passed = worst > 0.0
    note = (f"verified at {samples} samples (necessary-condition check)"
            if passed else f"violated at {samples}-sample sweep")
    return VerificationReport(check_id=check_id, closed_form=0.0, oracle_value=worst,
                              gap=abs(worst), tolerance=0.0, samples=samples,
                              passed=passed, notes=note)


_CERTIFY_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999)


def certify_sufficient_condition(f: PowerSeries, t: float, radii=None,
                                 n_angles: int = 1024, check_id: str = "certify",
                                 parallelism: int | None = None) -> VerificationReport:
    """Sample check of |t(1 + z f''/f') + (1-t) z f'/f - 1| < (3+2t)/6.

    ``f`` must be normalised (f(0) = 0, f'(0) = 1).  When the inequality
    holds at every sample the implied conclusion is asserted as well:
    z f'/f stays in the disc |w - 1| < 1/2 and inside the parabolic
    region.  Strict inequality everywhere is required to pass.
    """
    if not 0.0 <= t <= 1.0:
        raise ParamRange("t must lie in [0, 1]")
    if abs(f.coeffs[0]) > 1e-15 or abs(f.coeffs[1] - 1.0) > 1e-12:
        raise DomainError("series must be normalised: f(0) = 0, f'(0) = 1")
    radii = _CERTIFY_RADII if radii is None else tuple(radii)
    theta = np.linspace(-math.pi, math.pi, n_angles, endpoint=False)
    rings = np.asarray(radii)[:, None] * np.exp(1j * theta)[None, :]
    z = rings.ravel()
    fp = f.derivative()
    fpp = fp.derivative()
    fv = _chunked_map(f, z, parallelism)
    fpv = _chunked_map(fp, z, parallelism)
    fppv = _chunked_map(fpp, z, parallelism)
    if np.any(np.abs(fv) < 1e-14) or np.any(np.abs(fpv) < 1e-14):
        raise DerivativeVanishes("f or f' vanishes on the sample grid")
    lhs = np.abs(t * (1.0 + z * fppv / fpv) + (1.0 - t) * z * fpv / fv - 1.0)
    bound = (3.0 + 2.0 * t) / 6.0
    sup = float(np.max(lhs))
    passed = sup < bound
    notes = f"sup over {z.size} samples"
    if passed:
        w = z * fpv / fv
        disc_margin = 0.5 - float(np.max(np.abs(w - 1.0)))
        region_margin = float(np.min(region.margin(w)))
        conclusion_ok = disc_margin > 0.0 and region_margin > 0.0
        passed = passed and conclusion_ok
        notes += (f"; conclusion margins: disc {disc_margin:.3e}, "
                  f"region {region_margin:.3e}")
    return VerificationReport(check_id=check_id, closed_form=bound, oracle_value=sup,
                              gap=abs(bound - sup), tolerance=0.0, samples=z.size,
                              passed=passed, notes=notes)


def caratheodory_order_check(p_fn, alpha: float, r: float, n_grid: int = 4096,
                             check_id: str = "caratheodory") -> VerificationReport:
    """Is min Re p on |z| = r at least alpha?  (p normalised to p(0) = 1.)"""
    ext = extremize_on_circle(p_fn, r, "re", n_grid=n_grid)
    passed = ext.min_value >= alpha
    return VerificationReport(check_id=check_id, closed_form=float(alpha),
                              oracle_value=ext.min_value,
                              gap=abs(ext.min_value - alpha), tolerance=0.0,
                              samples=n_grid, passed=passed,
                              notes=f"argmin angle {ext.argmin_angle:.6f}")


# --- disc bounds for Carathéodory-type functions --------------------------


def janowski_disc_bound(A: float, B: float, r: float, n: int = 1) -> tuple[float, float]:
    """Center and radius of the value disc of p with p - subordinate
    to (1+Az^n)/(1+Bz^n) type bounds, on |z| = r.

    Returns ((1 - A B r^{2n})/(1 - B^2 r^{2n}), |A - B| r^n/(1 - B^2 r^{2n})).
    """
    if not (-1.0 <= B < A <= 1.0):
        raise ParamRange("need -1 <= B < A <= 1")
    if not 0.0 <= r < 1.0:
        raise ParamRange("radius must lie in [0, 1)")
    if n < 1:
        raise ParamRange("n must be at least 1")
    r2n = r ** (2 * n)
    den = 1.0 - B * B * r2n
    return (1.0 - A * B * r2n) / den, abs(A - B) * r**n / den


def caratheodory_order_disc(alpha: float, r: float, n: int = 1) -> tuple[float, float]:
    """Value disc for functions of positive real part of order alpha."""
    if not 0.0 <= alpha < 1.0:
        raise ParamRange("alpha must lie in [0, 1)")
    return janowski_disc_bound(1.0 - 2.0 * alpha, -1.0, r, n)


def caratheodory_log_derivative_bound(r: float) -> float:
    """Classical bound |z p'/p| <= 2r/(1-r^2) for Re p > 0, p(0) = 1."""
    if not 0.0 <= r < 1.0:
        raise ParamRange("radius must lie in [0, 1)")
    return 2.0 * r / (1.0 - r * r)


# --- random class members --------------------------------------------------


def sample_schwarz_function(rng: np.random.Generator, max_factors: int = 3,
                            max_modulus: float = 0.8):
    """Random Schwarz function z * product of Blaschke factors.

    Factor zeros are drawn with modulus at most ``max_modulus``; the
    factors themselves are returned so the draw can be recorded.
    """
    k = int(rng.integers(1, max_factors + 1))
    zeros = rng.uniform(0.0, max_modulus, k) * np.exp(1j * rng.uniform(-math.pi, math.pi, k))

    def w(z):
        z = np.asarray(z, dtype=np.complex128)
        out = z.astype(np.complex128).copy()
        for a in zeros:
            out = out * (a - z) / (1.0 - np.conj(a) * z)
        return out if out.ndim else complex(out)

    return w, tuple(zeros)


def member_growth_modulus(w_fn, r: float) -> float:
    """|f(r)| for the member with z f'/f driven through the Schwarz map w.

    Computed by path quadrature of Re[k(w(t))/t] along [0, r], where k is
    the parabola kernel; only the real part enters the modulus.
    """
    if not 0.0 <= r < 1.0:
        raise DomainError("radius must lie in [0, 1)")
    if r == 0.0:
        return 0.0

    def integrand(t: float) -> float:
        return (parabola_map(complex(w_fn(t))) / t).real

    val = _quad_checked(integrand, 1e-12, r)
    return r * math.exp(val)
