"""Every radius in the catalog: closed form against its independent oracle.

Run:  python demos/02_radius_catalog.py
"""

import parastar as ps

print(f"{'entry':32s} {'closed form':>16s} {'oracle root':>16s} {'gap':>9s}")
for entry in ps.default_entries():
    method = "golden" if entry.root_only else "bisect"
    root = ps.oracle_root(entry, method=method)
    gap = abs(entry.closed_form - root)
    print(f"{entry.label:32s} {entry.closed_form:16.12f} {root:16.12f} {gap:9.2e}")

# The witnesses: at z0 = radius the extremal construction puts the
# logarithmic derivative exactly on the region boundary (margin 0).
print("\nwitness margins (should vanish):")
for eid, params in (("sp", {}), ("cosh_sqrt", {}), ("janowski", {"A": 0.5, "B": -0.5}),
                    ("ratio", {"A": -1.0})):
    entry = ps.get_entry(eid, **params)
    print(f"  {entry.label:24s} {entry.witness_margin():+.3e}")

# Parameter sweeps follow the expected monotonicity.
print("\nstarlikeness order vs radius:")
for alpha in (0.0, 0.25, 0.5, 0.75):
    print(f"  order {alpha:.2f}: radius {ps.caratheodory_order_radius(alpha).closed_form:.10f}")
