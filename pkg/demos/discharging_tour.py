"""Charges, rules and configurations on the regular solids and a random graph.

Run with ``python3 demos/discharging_tour.py``.
"""

from planar_dicolor.configs import contains, shipped_catalog
from planar_dicolor.discharge import final_report, initial_charges, rule_histogram, verify_conservation
from planar_dicolor.gen import GenSpec, golden, random_plane_graph

catalog = shipped_catalog()

for name in ("octahedron", "cube", "icosahedron", "dodecahedron"):
    emb = golden(name)
    report = final_report(emb)
    found = {c.name: len(contains(emb, c)) for c in catalog}
    print(f"{name:13s} start {initial_charges(emb).total()}  negative {len(report.negatives):2d}  matches {found}")

# Rules only fire once there are 5+-vertices next to triangles.
emb = random_plane_graph(GenSpec(n=30, min_degree=4, seed=3))
report = final_report(emb)
print("\nrandom graph, 30 vertices")
print("transfers by rule:", dict(sorted(rule_histogram(report.ledger).items())))
print("ledger replays to the final state:", verify_conservation(report.ledger, emb, report.state))
print("negative elements:", report.negatives[:8], "..." if len(report.negatives) > 8 else "")
for line in report.ledger.to_text().splitlines()[:6]:
    print("  ", line)
