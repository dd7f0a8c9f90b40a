"""Tour of the parabolic region: margins, inscribed discs, argument sector.

Run:  python demos/01_region_tour.py
Writes region_tour.svg next to this script.
"""

import pathlib

import numpy as np

import parastar as ps

# The region {(Im w)^2 < 3 - 2 Re w} has vertex 3/2 and opens leftward.
# Membership comes with a signed margin, positive inside.
for w in (1.0, 1.5, 1 + 1j, -2 + 1j, 0.5 - 0.5j):
    print(f"w = {w!s:>12}: margin = {ps.margin(w):+.6f}  inside = {ps.in_region(w)}")

# The map value at -r maximises the real part on |z| = r, the value at +r
# minimises it; compare the closed bounds with brute force at r = 0.5.
r = 0.5
angles = np.linspace(-np.pi, np.pi, 100_000, endpoint=False)
vals = np.real(ps.parabola_map(r * np.exp(1j * angles)))
lo, hi = ps.real_part_bounds(r)
print(f"\nreal-part bounds at r={r}: closed ({lo:.10f}, {hi:.10f})")
print(f"                       brute ({vals.min():.10f}, {vals.max():.10f})")

# Maximal inscribed discs: off-axis nearest points for a <= 1/2, the
# vertex for 1/2 < a < 3/2.
print("\ninscribed discs:")
for a in (-1.0, 0.0, 0.5, 1.0, 1.4):
    disc = ps.inscribed_disc(a)
    print(f"  a = {a:+.2f}: radius {disc.radius:.10f}  (zeta={disc.zeta:+.4f})")

# The whole region sits inside the sector |arg(w - 2)| > 3pi/4; the
# tangency points 1 +- i are the only boundary contacts.
print("\nargument sector:")
for w in (1.0, 1.4 + 0.4j, 1 + 1j):
    print(f"  w = {w!s:>10}: sector check = {ps.argument_sector_check(w)}")

# Emit the standard figure: boundary parabola, tangent rays, two discs.
from parastar.plots import curves_to_svg, region_figure

out = pathlib.Path(__file__).with_name("region_tour.svg")
out.write_text(curves_to_svg(region_figure(disc_centers=(0.0, 1.0))))
print(f"\nwrote {out}")
