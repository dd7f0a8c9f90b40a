"""Catalog of sharp membership radii for the parabolic class.

Each :class:`RadiusEntry` bundles a closed-form radius with the scalar
condition whose unique root in (0, 1) it is, a bracket for root solvers,
and (where the extremal construction is explicit) a witness margin that
vanishes exactly at the radius.  The conditions are built from circle
extremization or kernel evaluation, not from the closed forms, so
"closed form equals bisection root" is a genuine two-route check.

Two directions of membership appear:

* largest disc on which every member of a classical class (parabolic
  starlike, sine, lune, ...) belongs to the parabolic class: the
  condition is max Re of the class target on |z| = r reaching the
  vertex value 3/2;
* largest disc on which every parabolic-class member lands in another
  class: the condition compares the kernel modulus |k(r)| with the
  target class's inner-disc constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cache
from typing import Callable

from . import oracle
from .errors import ParamRange, UnknownTarget
from .maps import TargetId, left_parabola, ronning_parabola, target_map, validate_janowski
from .series import extremal_upper

_PI = math.pi
_PI_SQ = math.pi**2


def _tanh_sq(x: float) -> float:
    return math.tanh(x) ** 2


def _log_ratio(r: float) -> float:
    s = math.sqrt(r)
    return math.log((1.0 + s) / (1.0 - s))


def _abs_kernel(r: float) -> float:
    """|k(r)| = (2/pi^2) log^2((1+sqrt r)/(1-sqrt r)) on (0, 1)."""
    return (2.0 / _PI_SQ) * _log_ratio(r) ** 2


@dataclass
class RadiusEntry:
    """One radius result: closed form, defining condition, witness."""

    entry_id: str
    params: dict
    closed_form: float
    condition: Callable[[float], float]
    bracket: tuple[float, float] = (1e-9, 1.0 - 1e-9)
    witness_margin: Callable[[], float] | None = None
    root_only: bool = False
    capped: bool = False
    notes: str = ""
    _param_items: tuple = field(init=False, repr=False)

    def __post_init__(self):
        self._param_items = tuple(sorted(self.params.items()))

    @property
    def label(self) -> str:
        # semicolon-separated so labels stay a single CSV field
        if not self.params:
            return self.entry_id
        inner = ";".join(f"{k}={v:g}" for k, v in self._param_items)
        return f"{self.entry_id}({inner})"


def oracle_root(entry: RadiusEntry, method: str = "bisect",
                cfg: oracle.BracketSolverConfig | None = None) -> float:
    """Independent root of the entry's condition (1.0 for capped entries)."""
    if entry.capped:
        if entry.condition(entry.bracket[1]) > 0.0:
            raise ParamRange(f"{entry.label}: capped entry with positive condition near 1")
        return 1.0
    solver = oracle.golden_bracket_root if method == "golden" else oracle.bracket_root
    return solver(entry.condition, *entry.bracket, cfg)


def _circle_max_condition(phi) -> Callable[[float], float]:
    def condition(r: float) -> float:
        return oracle.extremize_on_circle(phi, r, "re").max_value - 1.5

    return condition


def _vertex_witness(phi, radius: float) -> Callable[[], float]:
    # the extremal construction puts z f'/f = phi at z0 = radius, which
    # lands on the region boundary; the boundary margin should vanish
    from . import region

    return lambda: float(region.margin(phi(radius)))


# --- main containment radii (classical class -> parabolic class) -----------


@cache
def _cardioid_root() -> float:
    # max Re (1 + z e^z) = 1 + r e^r on |z| = r, so the radius solves
    # r e^r = 1/2; there is no closed form
    return oracle.bracket_root(lambda r: r * math.exp(r) - 0.5, 0.0, 1.0)


def membership_radius(class_id: str, **params) -> RadiusEntry:
    """Largest r such that the named class sits in the parabolic class on |z| < r.

    ``class_id`` is one of ``sp`` (parabolic starlike), ``sine``, ``lune``,
    ``cosh_sqrt``, ``asinh``, ``cardioid``, ``bs`` (Booth lemniscate family,
    needs ``alpha``), ``alpha_exp`` (needs ``alpha``) and ``janowski``
    (needs ``A`` and ``B``).
    """
    if class_id == "sp":
        closed = _tanh_sq(_PI / 4.0)
        return RadiusEntry("sp", {}, closed, _circle_max_condition(ronning_parabola),
                           witness_margin=_vertex_witness(ronning_parabola, closed))
    if class_id == "sine":
        phi = target_map(TargetId.SINE)
        closed = _PI / 6.0
        return RadiusEntry("sine", {}, closed, _circle_max_condition(phi),
                           witness_margin=_vertex_witness(phi, closed))
    if class_id == "lune":
        phi = target_map(TargetId.LUNE)
        closed = 5.0 / 12.0
        return RadiusEntry("lune", {}, closed, _circle_max_condition(phi),
                           witness_margin=_vertex_witness(phi, closed))
    if class_id == "cosh_sqrt":
        phi = target_map(TargetId.COSH_SQRT)
        closed = math.acosh(1.5) ** 2
        return RadiusEntry("cosh_sqrt", {}, closed, _circle_max_condition(phi),
                           witness_margin=_vertex_witness(phi, closed))
    if class_id == "asinh":
        phi = target_map(TargetId.ASINH)
        closed = math.sinh(0.5)
        return RadiusEntry("asinh", {}, closed, _circle_max_condition(phi),
                           witness_margin=_vertex_witness(phi, closed))
    if class_id == "cardioid":
        phi = target_map(TargetId.CARDIOID)
        closed = _cardioid_root()
        return RadiusEntry("cardioid", {}, closed, _circle_max_condition(phi),
                           witness_margin=_vertex_witness(phi, closed), root_only=True,
                           notes="no closed form; memoized root of r e^r = 1/2")
    if class_id == "bs":
        alpha = params.get("alpha")
        if alpha is None or not 0.0 <= alpha < 1.0:
            raise ParamRange("bs needs alpha in [0, 1)")
        closed = 0.5 if alpha == 0.0 else (math.sqrt(1.0 + alpha) - 1.0) / alpha

        def phi(z):
            return 1.0 + z / (1.0 - alpha * z * z)

        return RadiusEntry("bs", {"alpha": alpha}, closed, _circle_max_condition(phi),
                           witness_margin=_vertex_witness(phi, closed))
    if class_id == "alpha_exp":
        alpha = params.get("alpha")
        if alpha is None or not 0.0 <= alpha < 1.0:
            raise ParamRange("alpha_exp needs alpha in [0, 1)")
        phi = target_map(TargetId.ALPHA_EXP, alpha=alpha)
        raw = math.log(1.0 - 1.0 / (2.0 * (alpha - 1.0)))
        capped = raw >= 1.0
        closed = 1.0 if capped else raw
        return RadiusEntry("alpha_exp", {"alpha": alpha}, closed,
                           _circle_max_condition(phi),
                           witness_margin=None if capped else _vertex_witness(phi, closed),
                           capped=capped)
    if class_id == "janowski":
        A, B = params.get("A"), params.get("B")
        if A is None or B is None:
            raise ParamRange("janowski needs A and B")
        validate_janowski(A, B)
        if not -1.0 < B:
            raise ParamRange("janowski radius needs -1 < B")

        def condition(r: float) -> float:
            # disc bound of the Janowski value set on |z| = r against 3/2
            return ((A - B) * r + 1.0 - A * B * r * r) / (1.0 - B * B * r * r) - 1.5

        capped = 2.0 * A - 3.0 * B <= 1.0
        closed = 1.0 if capped else 1.0 / (2.0 * A - 3.0 * B)
        phi = target_map(TargetId.JANOWSKI, A=A, B=B)
        return RadiusEntry("janowski", {"A": A, "B": B}, closed, condition,
                           witness_margin=None if capped else _vertex_witness(phi, closed),
                           capped=capped)
    raise UnknownTarget(f"unknown membership class: {class_id!r}")


# --- order and disc radii (parabolic class -> classical class) --------------


def caratheodory_order_radius(alpha: float) -> RadiusEntry:
    """Radius on which the class is Caratheodory of order alpha.

    Closed form tanh^2(pi sqrt(1-alpha)/(2 sqrt 2)); the map value at r
    decreases through alpha exactly there.  alpha = 0 is the radius of
    starlikeness (and univalence) of the class.
    """
    if not 0.0 <= alpha < 1.0:
        raise ParamRange("alpha must lie in [0, 1)")
    closed = _tanh_sq(_PI * math.sqrt(1.0 - alpha) / (2.0 * math.sqrt(2.0)))

    def condition(r: float) -> float:
        return left_parabola(r).real - alpha

    return RadiusEntry("caratheodory", {"alpha": alpha}, closed, condition,
                       witness_margin=lambda: left_parabola(closed).real - alpha)


def disc_class_radius(alpha: float) -> RadiusEntry:
    """Radius on which members satisfy |z f'/f - 1| < alpha.

    Unique positive root of 2 log^2((1+sqrt r)/(1-sqrt r)) = alpha pi^2,
    in closed form tanh^2(pi sqrt(alpha)/(2 sqrt 2)).
    """
    if not 0.0 < alpha <= 1.0:
        raise ParamRange("alpha must lie in (0, 1]")
    closed = _tanh_sq(_PI * math.sqrt(alpha) / (2.0 * math.sqrt(2.0)))

    def condition(r: float) -> float:
        return 2.0 * _log_ratio(r) ** 2 - alpha * _PI_SQ

    return RadiusEntry("disc_class", {"alpha": alpha}, closed, condition,
                       witness_margin=lambda: abs(left_parabola(closed) - 1.0) - alpha)


def beta_disc_radius(beta: float) -> RadiusEntry:
    """Same disc radius stated for the parameter beta = 1 - order.

    Dual to :func:`caratheodory_order_radius`: the value here at beta
    equals the order radius at 1 - beta exactly.
    """
    if not 0.0 < beta < 1.0:
        raise ParamRange("beta must lie in (0, 1)")
    closed = _tanh_sq(_PI * math.sqrt(beta) / (2.0 * math.sqrt(2.0)))

    def condition(r: float) -> float:
        return _abs_kernel(r) - beta

    return RadiusEntry("beta_disc", {"beta": beta}, closed, condition,
                       witness_margin=lambda: abs(left_parabola(closed) - 1.0) - beta)


# --- corollary radii through inner-disc constants ---------------------------


@cache
def inner_disc_radius(target: str, **params) -> float:
    """Distance from 1 to the boundary of the named target's image.

    Re-derived numerically as min |phi - 1| over the unit circle, so the
    corollary conditions below do not import the constants they verify.
    """
    phi = target_map(target, **params)
    ext = oracle.extremize_on_circle(lambda z: phi(z) - 1.0, 1.0, "abs")
    return ext.min_value


_SQRT2 = math.sqrt(2.0)

_COROLLARY = {
    # entry id: (closed form, target id, target params)
    "r1_exp": (lambda: _tanh_sq(_PI * 0.5 * math.sqrt((math.e - 1.0) / (2.0 * math.e))),
               TargetId.ALPHA_EXP, {"alpha": 0.0}),
    "r2_sine": (lambda: _tanh_sq(_PI / (2.0 * math.sqrt(2.0 / math.sin(1.0)))),
                TargetId.SINE, {}),
    "r3_cosh_sqrt": (lambda: _tanh_sq(_PI * math.sin(0.5) / 2.0),
                     TargetId.COSH_SQRT, {}),
    "r4_cardioid": (lambda: _tanh_sq(_PI / (2.0 * math.sqrt(2.0 * math.e))),
                    TargetId.CARDIOID, {}),
    "r5_asinh": (lambda: _tanh_sq(_PI * math.sqrt(0.5 * math.asinh(1.0)) / 2.0),
                 TargetId.ASINH, {}),
    "r6_sigmoid": (lambda: _tanh_sq(_PI * math.sqrt((math.e - 1.0) / (math.e + 1.0))
                                    / (2.0 * math.sqrt(2.0))),
                   TargetId.SIGMOID, {}),
    "r7_nephroid": (lambda: _tanh_sq(_PI / (2.0 * math.sqrt(3.0))),
                    TargetId.NEPHROID, {}),
    "r8_lemniscate": (lambda: _tanh_sq(_PI * math.sqrt(_SQRT2 - 1.0) / (2.0 * math.sqrt(2.0))),
                      TargetId.LEMNISCATE, {}),
    "r9_reverse_lemniscate": (
        lambda: _tanh_sq(_PI * (math.sqrt(2.0 * (_SQRT2 - 1.0))
                                * (1.0 - math.sqrt(2.0 * (_SQRT2 - 1.0)))) ** 0.25
                         / (2.0 * math.sqrt(2.0))),
        TargetId.REVERSE_LEMNISCATE, {}),
}


def corollary_radius(entry_id: str) -> RadiusEntry:
    """Radius r1..r9 on which every member lands in a named classical class.

    Condition: the kernel modulus |k(r)| reaching the target class's
    numerically derived inner-disc constant.
    """
    try:
        closed_fn, target, tparams = _COROLLARY[entry_id]
    except KeyError:
        raise UnknownTarget(f"unknown corollary radius: {entry_id!r}") from None
    constant = inner_disc_radius(target.value, **tparams)

    def condition(r: float) -> float:
        return _abs_kernel(r) - constant

    return RadiusEntry(entry_id, {}, closed_fn(), condition,
                       notes=f"inner-disc constant {constant:.12g}")


# --- remaining radii ---------------------------------------------------------


def ratio_class_radius(A: float) -> RadiusEntry:
    """Radius for the class built from positive-real-part ratios f/g.

    Closed form (sqrt(A^2 + 12A + 28) - (5 + A))/(2A + 3) on -1 <= A <= 1;
    the condition compares the aggregated value-disc reach
    (5+A) r/(1-r^2) with the room 3/2 - (1+A r^2)/(1-r^2).
    """
    if not -1.0 <= A <= 1.0:
        raise ParamRange("A must lie in [-1, 1]")
    closed = (math.sqrt(A * A + 12.0 * A + 28.0) - (5.0 + A)) / (2.0 * A + 3.0)

    def condition(r: float) -> float:
        rr = r * r
        return (5.0 + A) * r / (1.0 - rr) - (1.5 - (1.0 + A * rr) / (1.0 - rr))

    def witness_margin() -> float:
        from . import region

        r = closed
        w = 1.0 + 2.0 * r / (1.0 + r) + (3.0 + A) * r / (1.0 - r)
        return float(region.margin(w))

    return RadiusEntry("ratio", {"A": A}, closed, condition, witness_margin=witness_margin)


def m_class_radius(beta: float) -> RadiusEntry:
    """Radius on which Re z f'/f stays below beta, for 1 < beta < 3/2.

    Closed form 1 + 2 cot^2(delta) - 2 |sec(delta)|/tan^2(delta) with
    delta = pi sqrt(beta-1)/sqrt 2 (equal to tan^2(delta/2)); the
    condition is (1-beta) pi^2 + 2 arctan^2(2 sqrt r/(1-r)) = 0.
    """
    if not 1.0 < beta < 1.5:
        raise ParamRange("beta must lie in (1, 3/2)")
    delta = _PI * math.sqrt(beta - 1.0) / math.sqrt(2.0)
    closed = 1.0 + 2.0 / math.tan(delta) ** 2 - 2.0 * abs(1.0 / math.cos(delta)) / math.tan(delta) ** 2

    def condition(r: float) -> float:
        return (1.0 - beta) * _PI_SQ + 2.0 * math.atan(2.0 * math.sqrt(r) / (1.0 - r)) ** 2

    return RadiusEntry("mbeta", {"beta": beta}, closed, condition,
                       witness_margin=lambda: left_parabola(-closed).real - beta)


def majorization_phi(r: float, sigma: float) -> float:
    """(1 - r^2) L(r) - r (1 + sigma), the majorization feasibility margin."""
    return (1.0 - r * r) * left_parabola(r).real - r * (1.0 + sigma)


def majorization_psi(r: float, sigma: float) -> float:
    """Derivative-ratio bound sigma + r (1 - sigma^2)/((1-r^2) L(r))."""
    lp = left_parabola(r).real
    if lp <= 0.0:
        raise ParamRange("bound defined only where the map value at r is positive")
    return sigma + r * (1.0 - sigma * sigma) / ((1.0 - r * r) * lp)


@cache
def _majorization_root() -> float:
    return oracle.bracket_root(lambda r: majorization_phi(r, 0.0), 1e-9, 0.64)


def majorization_radius() -> RadiusEntry:
    """Radius on which majorized members inherit the derivative bound.

    Smallest positive root of (1 - r^2) L(r) = r where L is the class
    map restricted to (0, 1); root only, no closed form.
    """
    closed = _majorization_root()
    return RadiusEntry("majorization", {}, closed,
                       lambda r: majorization_phi(r, 0.0),
                       bracket=(1e-9, 0.64), root_only=True,
                       witness_margin=lambda: majorization_psi(closed, 0.0) - 1.0,
                       notes="memoized root; feasibility margin phi(r, 0)")


@cache
def _upper_extremal_64():
    return extremal_upper(64)


def _peng_zhong_condition(r: float) -> float:
    g = _upper_extremal_64()
    return float(g(r).real) * _abs_kernel(r) - 0.5


@cache
def _peng_zhong_root() -> float:
    return oracle.bracket_root(_peng_zhong_condition, 1e-9, 0.646)


def peng_zhong_radius() -> RadiusEntry:
    """Radius on which members satisfy |z f'(z) - f(z)| < 1/2.

    Smallest positive root of g(r) |k(r)| = 1/2, where g is the upper
    growth extremal (degree-64 series) and k the parabola kernel.
    Equivalently 4 g(r) log^2((1+sqrt r)/(1-sqrt r)) = pi^2.
    """
    closed = _peng_zhong_root()
    return RadiusEntry("peng_zhong", {}, closed, _peng_zhong_condition,
                       bracket=(1e-9, 0.646), root_only=True,
                       witness_margin=lambda: _peng_zhong_condition(closed),
                       notes="memoized root of the growth-times-kernel bound")


# --- registry ----------------------------------------------------------------

_MEMBERSHIP_IDS = ("sp", "sine", "lune", "cosh_sqrt", "asinh", "cardioid",
                   "bs", "alpha_exp", "janowski")


def get_entry(entry_id: str, **params) -> RadiusEntry:
    """Look up any catalog entry by id, with class parameters as needed."""
    if entry_id in _MEMBERSHIP_IDS:
        return membership_radius(entry_id, **params)
    if entry_id in _COROLLARY:
        return corollary_radius(entry_id)
    simple = {
        "caratheodory": caratheodory_order_radius,
        "disc_class": disc_class_radius,
        "beta_disc": beta_disc_radius,
        "ratio": ratio_class_radius,
        "mbeta": m_class_radius,
    }
    if entry_id in simple:
        return simple[entry_id](**params)
    if entry_id == "majorization":
        return majorization_radius()
    if entry_id == "peng_zhong":
        return peng_zhong_radius()
    raise UnknownTarget(f"unknown radius entry: {entry_id!r}")


def default_entries() -> list[RadiusEntry]:
    """Representative catalog used by the table and verification runs."""
    entries = [
        membership_radius("sp"),
        membership_radius("sine"),
        membership_radius("lune"),
        membership_radius("cosh_sqrt"),
        membership_radius("asinh"),
        membership_radius("cardioid"),
        membership_radius("bs", alpha=0.5),
        membership_radius("alpha_exp", alpha=0.0),
        membership_radius("janowski", A=0.5, B=-0.5),
        caratheodory_order_radius(0.0),
        disc_class_radius(1.0),
        beta_disc_radius(0.5),
    ]
    entries.extend(corollary_radius(rid) for rid in _COROLLARY)
    entries.extend([
        ratio_class_radius(-1.0),
        ratio_class_radius(1.0),
        m_class_radius(1.25),
        majorization_radius(),
        peng_zhong_radius(),
    ])
    return entries
