"""Branch-correct evaluation of the parabolic target maps on the closed disc.

The central map is

    left_parabola(z) = 1 - (2/pi^2) * log((1 + sqrt(z)) / (1 - sqrt(z)))**2,

which sends the open unit disc onto the horizontal parabolic region
{w : (Im w)^2 < 3 - 2 Re w}, vertex 3/2, opening into the left half-plane.
Alongside it live the classical target maps (exponential, sine, cardioid,
lemniscates, Janowski, ...) used to state membership radii.

Branch conventions
------------------
``sqrt_upper`` picks the square root with nonnegative imaginary part; on
the positive real axis the positive root is returned, so the cut sits on
the positive reals.  With that choice the Moebius ratio (1+w)/(1-w) stays
in the closed right half-plane for |w| <= 1, hence the principal logarithm
never meets its cut on the disc.  All evaluation is double precision and
vectorised; every function is pure.
"""

from __future__ import annotations

import cmath
import enum
import math

import numpy as np

from .errors import DomainError, ParamRange, SingularPoint, UnknownTarget

# Points closer than this to a log singularity raise instead of returning
# a huge value, keeping tests deterministic.
SINGULAR_TOL = 1e-12

_TWO_OVER_PI_SQ = 2.0 / math.pi**2
_SQRT2 = math.sqrt(2.0)


def _as_complex(z) -> np.ndarray:
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError("non-finite input point")
    return arr


def _check_disc(z: np.ndarray) -> None:
    if np.any(np.abs(z) > 1.0 + 1e-12):
        raise DomainError("point outside the closed unit disc")


def _sqrt_upper(z: np.ndarray) -> np.ndarray:
    w = np.sqrt(z)
    return np.where(w.imag < 0.0, -w, w)


def _ret(val: np.ndarray):
    return val if val.ndim else complex(val)


def sqrt_upper(z):
    """Square root with Im >= 0; equals +sqrt(x) on the positive real axis."""
    z = _as_complex(z)
    return _ret(_sqrt_upper(z))


def _guard_log_singularity(w: np.ndarray) -> None:
    if np.any(np.abs(1.0 - w) < SINGULAR_TOL) or np.any(np.abs(1.0 + w) < SINGULAR_TOL):
        raise SingularPoint("evaluation within tolerance of the log singularity")


def _log_ratio_sq(w: np.ndarray) -> np.ndarray:
    return np.log((1.0 + w) / (1.0 - w)) ** 2


def parabola_map(z, tau: float = 0.0, theta: float = 0.0):
    """Kernel (2 e^{i(theta+pi)}/pi^2) log^2((1+e^{i tau} sqrt z)/(1-e^{i tau} sqrt z)).

    Maps the unit circle onto a parabola with focus at the origin; theta
    rotates the image axis and tau the pre-image.  (0, 0) gives the kernel
    of ``left_parabola``; (0, pi) the right-opening kernel of
    ``ronning_parabola``.  Oblique parameters are evaluated with the same
    principal branches, but only the axis-aligned geometry is relied on
    elsewhere in the package.
    """
    if not (-math.pi < tau <= math.pi) or not (-math.pi < theta <= math.pi):
        raise ParamRange("tau and theta must lie in (-pi, pi]")
    z = _as_complex(z)
    _check_disc(z)
    w = cmath.exp(1j * tau) * _sqrt_upper(z)
    _guard_log_singularity(w)
    factor = _TWO_OVER_PI_SQ * cmath.exp(1j * (theta + math.pi))
    return _ret(factor * _log_ratio_sq(w))


def left_parabola(z):
    """Map of the disc onto {w : (Im w)^2 < 3 - 2 Re w}, normalised to 1 at 0.

    Real on (-1, 1); sends -1 to the vertex value 3/2 and blows up only
    at z = 1.
    """
    z = _as_complex(z)
    _check_disc(z)
    w = _sqrt_upper(z)
    _guard_log_singularity(w)
    return _ret(1.0 - _TWO_OVER_PI_SQ * _log_ratio_sq(w))


def ronning_parabola(z):
    """Right-opening parabolic map 1 + (2/pi^2) log^2((1+sqrt z)/(1-sqrt z)).

    The classical parabolic-starlike target; its image is {w : Re w > |w-1|}.
    """
    z = _as_complex(z)
    _check_disc(z)
    w = _sqrt_upper(z)
    _guard_log_singularity(w)
    return _ret(1.0 + _TWO_OVER_PI_SQ * _log_ratio_sq(w))


class TargetId(str, enum.Enum):
    """Closed enumeration of the supported target maps."""

    ALPHA_EXP = "alpha_exp"                      # alpha + (1-alpha) e^z
    ALPHA_SQRT = "alpha_sqrt"                    # alpha + (1-alpha) sqrt(1+z)
    CARDIOID = "cardioid"                        # 1 + z e^z
    SIGMOID = "sigmoid"                          # 2 / (1 + e^{-z})
    SINE = "sine"                                # 1 + sin z
    ASINH = "asinh"                              # 1 + arcsinh z
    COSH_SQRT = "cosh_sqrt"                      # cosh sqrt(z)
    LUNE = "lune"                                # z + sqrt(1 + z^2)
    LEMNISCATE = "lemniscate"                    # sqrt(1 + z)
    JANOWSKI = "janowski"                        # (1 + A z) / (1 + B z)
    NEPHROID = "nephroid"                        # 1 + z - z^3/3
    RONNING_PARABOLA = "ronning_parabola"        # right-opening parabola
    REVERSE_LEMNISCATE = "reverse_lemniscate"    # sqrt2-(sqrt2-1)sqrt((1-z)/(1+2(sqrt2-1)z))
    LEFT_PARABOLA = "left_parabola"              # the region's own map


def _need_alpha(params):
    alpha = params.pop("alpha", None)
    if alpha is None or not 0.0 <= alpha < 1.0:
        raise ParamRange("alpha must lie in [0, 1)")
    return alpha


def validate_janowski(A: float, B: float) -> None:
    """Check -1 <= B < A <= 1 for the Janowski parameters."""
    if not (-1.0 <= B < A <= 1.0):
        raise ParamRange("Janowski parameters require -1 <= B < A <= 1")


def _janowski_factory(params):
    A = params.pop("A", None)
    B = params.pop("B", None)
    if A is None or B is None:
        raise ParamRange("janowski target needs A and B")
    validate_janowski(A, B)

    def phi(z):
        z = _as_complex(z)
        _check_disc(z)
        den = 1.0 + B * z
        if np.any(np.abs(den) < SINGULAR_TOL):
            raise SingularPoint("Janowski map pole at z = -1/B")
        return _ret((1.0 + A * z) / den)

    return phi


def _alpha_exp_factory(params):
    alpha = _need_alpha(params)

    def phi(z):
        z = _as_complex(z)
        _check_disc(z)
        return _ret(alpha + (1.0 - alpha) * np.exp(z))

    return phi


def _alpha_sqrt_factory(params):
    alpha = _need_alpha(params)

    def phi(z):
        z = _as_complex(z)
        _check_disc(z)
        return _ret(alpha + (1.0 - alpha) * np.sqrt(1.0 + z))

    return phi


def _plain(fn):
    def phi(z):
        z = _as_complex(z)
        _check_disc(z)
        return _ret(fn(z))

    return phi


def _reverse_lemniscate(z):
    # pole at z = -1/(2(sqrt2-1)) lies outside the closed disc
    eta = _SQRT2 - 1.0
    return _SQRT2 - eta * np.sqrt((1.0 - z) / (1.0 + 2.0 * eta * z))


_PLAIN_TARGETS = {
    TargetId.CARDIOID: lambda z: 1.0 + z * np.exp(z),
    TargetId.SIGMOID: lambda z: 2.0 / (1.0 + np.exp(-z)),
    TargetId.SINE: lambda z: 1.0 + np.sin(z),
    TargetId.ASINH: lambda z: 1.0 + np.arcsinh(z),
    TargetId.COSH_SQRT: lambda z: np.cosh(_sqrt_upper(z)),
    TargetId.LUNE: lambda z: z + np.sqrt(1.0 + z * z),
    TargetId.LEMNISCATE: lambda z: np.sqrt(1.0 + z),
    TargetId.NEPHROID: lambda z: 1.0 + z - z**3 / 3.0,
    TargetId.REVERSE_LEMNISCATE: _reverse_lemniscate,
}


def target_map(target, **params):
    """Return the named target map as a vectorised callable.

    Parameters are validated here: ``alpha`` for the convex-combination
    targets, ``A``/``B`` for the Janowski map.  Unknown names raise
    ``UnknownTarget``; spurious parameters raise ``ParamRange``.
    """
    try:
        tid = TargetId(target)
    except ValueError:
        raise UnknownTarget(f"unknown target map: {target!r}") from None
    params = dict(params)
    if tid is TargetId.JANOWSKI:
        phi = _janowski_factory(params)
    elif tid is TargetId.ALPHA_EXP:
        phi = _alpha_exp_factory(params)
    elif tid is TargetId.ALPHA_SQRT:
        phi = _alpha_sqrt_factory(params)
    elif tid is TargetId.RONNING_PARABOLA:
        phi = ronning_parabola
    elif tid is TargetId.LEFT_PARABOLA:
        phi = left_parabola
    else:
        phi = _plain(_PLAIN_TARGETS[tid])
    if params:
        raise ParamRange(f"unexpected parameters for {tid.value}: {sorted(params)}")
    return phi


def eval_target(target, z, **params):
    """Evaluate the named target map at ``z`` (scalar or array)."""
    return target_map(target, **params)(z)
