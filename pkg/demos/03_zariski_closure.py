"""Zariski-closure heuristics across the whole catalog.

The closure certificate is built from exact evidence only: invariant bilinear
forms (symplectic / orthogonal-like), the dimension of the matrix algebra the
group spans (block structure), characteristic polynomials (unipotent/torus),
and the one-prime density certificate (surjectivity mod a single p >= 5
already forces full closure).

Run:  python demos/03_zariski_closure.py
"""
from thinlab import (
    CATALOG,
    classify,
    form_signature,
    invariant_forms,
    spanning_dimension,
)

print(f"{'id':<9} {'class':<15} evidence")
print("-" * 72)
for entry in CATALOG.values():
    cert = classify(entry.gens)
    bits = []
    if cert.density:
        bits.append(f"surjective mod {cert.density.prime}")
    if cert.charpoly_discriminant is not None:
        bits.append(f"shared char-poly discriminant {cert.charpoly_discriminant}")
    if cert.spanning_dimension is not None:
        bits.append(f"spans a {cert.spanning_dimension}-dim matrix algebra")
    if cert.form_signature:
        bits.append(f"invariant form of signature {cert.form_signature[:2]}")
    if cert.shared_eigenvector:
        bits.append(f"common eigenvector {cert.shared_eigenvector}")
    print(f"{entry.id:<9} {cert.cls.value:<15} {'; '.join(bits) or '-'}")

print("\ninvariant forms, in detail:")
ex9 = CATALOG["ex9"].gens
anti = invariant_forms(ex9, "antisymmetric")
print(f"  {ex9.name}: alternating form space has dimension {anti.dimension};")
print(f"    a nondegenerate representative: {anti.basis[0]}")

ex10 = CATALOG["ex10"].gens
sym = invariant_forms(ex10, "symmetric")
from thinlab.cli import _signature31_form

q = _signature31_form(sym)
print(f"  {ex10.name}: symmetric form space has dimension {sym.dimension};")
print(f"    representative {q} with signature {form_signature(q)}")

print("\nspanning dimensions stabilize quickly (words of length 6 vs 8):")
for eid in ("ex3", "ex7", "ex8"):
    gens = CATALOG[eid].gens
    print(f"  {eid}: {spanning_dimension(gens, 6)} = {spanning_dimension(gens, 8)}"
          f"  (n^2 = {gens.n ** 2})")
