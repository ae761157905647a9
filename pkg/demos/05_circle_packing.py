"""From four integer reflections to an integral circle packing.

The four generators preserve a symmetric form of signature (3,1) and each
acts as inversion in a circle or line of the boundary plane.  The orbit of
the tangency-cluster circles is a fractal packing; after one global
rescaling, fixed once from the seed circles, every curvature in the orbit is
an integer -- checked exactly, no floats involved.

Run:  python demos/05_circle_packing.py        (writes packing.svg)
"""
from collections import Counter

from thinlab import (
    cluster_seeds,
    form_signature,
    get_entry,
    invariant_forms,
    mirror_vectors,
    orbit_circles,
)
from thinlab.cli import _signature31_form
from thinlab.svgout import render_svg

gens = get_entry("ex10").gens
print("the four generators are involutions; their invariant symmetric form:")
space = invariant_forms(gens, "symmetric")
q = _signature31_form(space)
print(f"  Q = {q}   signature {form_signature(q)}")

print("\nmirror normals (one per generator) and their Q-norms:")
from thinlab.packing import _bilinear

for name, v in zip(gens.gen_names, mirror_vectors(gens, q)):
    print(f"  {name}: v = {v}   Q(v) = {_bilinear(q, v, v)}")
print("the norms 6, 24, 24, 12 fall into two rational square classes, so the")
print("mirrors themselves cannot all carry integer curvature labels at once.")

seeds = cluster_seeds(gens, q)
print(f"\ntangency-cluster circles (orthogonal to three mirrors each): {seeds}")
print("their norms 1 and 4 are perfect squares: exact curvatures all along.")

orbit = orbit_circles(gens, q, 6)
curvs = orbit.scaled_curvatures()
print(f"\norbit to depth 6: {orbit.size} circles, global rescaling {orbit.scale}")
print(f"all curvatures integral: {orbit.all_curvatures_integral()}")
hist = Counter(int(c) for c in curvs)
print("curvature histogram:", dict(sorted(hist.items())[:12]), "...")

svg = render_svg(orbit, labels=True, timestamp=False)
with open("packing.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
print("\nwrote packing.svg (mirrors in red, labels = integer curvatures)")
