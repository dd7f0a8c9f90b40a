"""Deterministic SVG and CSV emission for region and map-image figures.

No timestamps, no environment-dependent metadata: identical inputs give
byte-identical output.  Curves are plain complex polylines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import radii, region
from .errors import DomainError
from .maps import left_parabola, target_map

SCHEMA = 1

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class Curve:
    name: str
    points: np.ndarray  # complex


def _circle_angles(samples: int) -> np.ndarray:
    # half-step offset keeps z = 1 (the map singularity) off the grid
    k = np.arange(samples)
    return -math.pi + (k + 0.5) * (2.0 * math.pi / samples)


def region_figure(disc_centers=(), samples: int = 256, y_max: float = 3.0) -> list[Curve]:
    """Boundary parabola, tangent rays and any requested inscribed discs."""
    if samples < 64:
        raise DomainError("need at least 64 samples")
    curves = [Curve("boundary", region.boundary_points(samples, y_max))]
    x = np.linspace((3.0 - y_max**2) / 2.0, 2.0, samples)
    curves.append(Curve("tangent_plus", x + 1j * (x - 2.0)))
    curves.append(Curve("tangent_minus", x - 1j * (x - 2.0)))
    phis = _circle_angles(samples)
    for a in disc_centers:
        disc = region.inscribed_disc(a)
        curves.append(Curve(f"disc_a={a:g}", a + disc.radius * np.exp(1j * phis)))
    return curves


def map_image_figure(target: str = "left_parabola", r: float = 0.9,
                     samples: int = 256, **params) -> list[Curve]:
    """Image of the circle |z| = r under a named target map, with the region."""
    if samples < 64:
        raise DomainError("need at least 64 samples")
    if not 0.0 <= r < 1.0:
        raise DomainError("map images need r < 1")
    phi = target_map(target, **params)
    z = r * np.exp(1j * _circle_angles(samples))
    return [Curve("boundary", region.boundary_points(samples)),
            Curve(f"{target}_r={r:g}", np.asarray(phi(z)))]


def discs_figure(disc_centers, samples: int = 256) -> list[Curve]:
    if not disc_centers:
        raise DomainError("need at least one disc center")
    return region_figure(disc_centers=disc_centers, samples=samples)


# corollary entry -> the target class whose region the image must sit in
_COROLLARY_TARGETS = {
    "r1_exp": ("alpha_exp", {"alpha": 0.0}),
    "r2_sine": ("sine", {}),
    "r3_cosh_sqrt": ("cosh_sqrt", {}),
    "r4_cardioid": ("cardioid", {}),
    "r5_asinh": ("asinh", {}),
    "r6_sigmoid": ("sigmoid", {}),
    "r7_nephroid": ("nephroid", {}),
    "r8_lemniscate": ("lemniscate", {}),
    "r9_reverse_lemniscate": ("reverse_lemniscate", {}),
}


def corollary_figure(entry_id: str = "r7_nephroid", samples: int = 256) -> list[Curve]:
    """Target-class boundary with the class image circle at the sharp radius."""
    if entry_id not in _COROLLARY_TARGETS:
        raise DomainError(f"no corollary figure for {entry_id!r}")
    target, params = _COROLLARY_TARGETS[entry_id]
    r = radii.corollary_radius(entry_id).closed_form
    phi = target_map(target, **params)
    zb = np.exp(1j * _circle_angles(samples))
    zi = r * np.exp(1j * _circle_angles(samples))
    return [Curve(f"{target}_boundary", np.asarray(phi(zb))),
            Curve(f"image_r={r:.6f}", np.asarray(left_parabola(zi)))]


def curves_to_csv(curves) -> str:
    lines = [f"# schema: {SCHEMA}", "curve,index,x,y"]
    for curve in curves:
        for i, p in enumerate(curve.points):
            lines.append(f"{curve.name},{i},{p.real:.12g},{p.imag:.12g}")
    return "\n".join(lines) + "\n"


def curves_to_svg(curves, width: int = 800, height: int = 600) -> str:
    xs = np.concatenate([c.points.real for c in curves])
    ys = np.concatenate([c.points.imag for c in curves])
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    pad_x = 0.05 * (x1 - x0 or 1.0)
    pad_y = 0.05 * (y1 - y0 or 1.0)
    x0, x1 = x0 - pad_x, x1 + pad_x
    y0, y1 = y0 - pad_y, y1 + pad_y
    sx = width / (x1 - x0)
    sy = height / (y1 - y0)

    def tx(p):
        return (p.real - x0) * sx, (y1 - p.imag) * sy  # flip y for SVG

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height}" viewBox="0 0 {width} {height}">']
    for i, curve in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        coords = " L ".join(f"{x:.3f},{y:.3f}" for x, y in map(tx, curve.points))
        parts.append(f'  <path id="{curve.name}" d="M {coords}" fill="none" '
                     f'stroke="{color}" stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
