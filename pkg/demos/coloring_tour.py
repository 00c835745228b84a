"""Coloring planar digraphs of digirth five with two colors per vertex.

Run with ``python3 demos/coloring_tour.py``.
"""

import math
import random

from planar_dicolor import GenSpec, random_planar_digraph, solve
from planar_dicolor.digraph import digirth, random_lists, uniform_lists, validate_coloring
from planar_dicolor.solver import brute_force, max_acyclic_set, reduce_and_color

# A generated instance: plane graph, random orientation, short cycles repaired.
spec = GenSpec(n=16, min_degree=4, digirth_min=5, seed=3)
D = random_planar_digraph(spec)
print(f"{len(D)} vertices, {len(D.arcs)} arcs, digirth {digirth(D)}")

# Same two colors everywhere.
L = uniform_lists(D)
out = solve(D, L)
print("solve:", out.status.value, out.summary())
print("witness valid:", validate_coloring(D, L, out.witness).ok)

# Lists drawn from three colors; the exhaustive oracle agrees.
rng = random.Random(1)
L3 = random_lists(D, 2, [1, 2, 3], rng)
print("random lists:", solve(D, L3).status.value, "| oracle:", brute_force(D, L3).status.value)

# Peel low-degree vertices and 4-vertices on triangles, color the rest, put them back.
red = reduce_and_color(D, L)
print("reduce_and_color:", red.status.value, red.extra)

# How big can one color class be?
S = max_acyclic_set(D)
print(f"largest acyclic set: {len(S)} of {len(D)} (bound {math.ceil(3 * len(D) / 5)})")
