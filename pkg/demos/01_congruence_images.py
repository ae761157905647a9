"""Congruence images and strong approximation, at desk scale.

The group generated by [[1,4],[0,1]] and [[0,1],[-1,0]] has infinite index in
SL2(Z), yet reducing mod (almost) any prime hits every matrix of determinant
one.  This script enumerates the images, exhibits the one bad prime, and
constructively lifts a residue target back to an honest integer matrix.

Run:  python demos/01_congruence_images.py
"""
from thinlab import (
    ModMatrix,
    contains_mod,
    enumerate_image,
    eval_word,
    get_entry,
    is_surjective,
    lift_to_integers,
    sl_order,
)

gens = get_entry("ex5").gens
print(f"generators ({gens.name}):")
for name, g in zip(gens.gen_names, gens.generators):
    print(f"  {name} = {g}")

print("\nimage sizes mod p, compared with |SL2(Z/pZ)|:")
for p in (2, 3, 5, 7, 11, 13):
    image = enumerate_image(gens, p)
    target = sl_order(2, p)
    verdict = is_surjective(gens, p)
    note = verdict.surjective if verdict.reason is None else verdict.reason
    print(f"  p={p:>2}: |image| = {image.order:>5}  target = {target:>5}  -> {note}")

print("\nmod 2 the first generator collapses to the identity, and only the")
print("rotation survives: the image has order 2 out of |SL2(Z/2)| = 6.")

print("\nlifting: find an integer matrix of determinant 1 congruent to")
print("[[2,0],[1,3]] mod 5 (a matrix that certainly looks non-unimodular).")
full = get_entry("ex1").gens
target = ModMatrix(((2, 0), (1, 3)), 5)
gamma, word = lift_to_integers(full, 5, target)
print(f"  gamma = {gamma}  (det {gamma.det()})")
print(f"  as a word in T, S: {word.spell(('T', 'S'))}")
assert eval_word(full, word) == gamma

print("\nthe GL2 caveat: determinants of integer matrices are only ±1, so")
print("[[1,2],[3,4]] (det = 3 mod 5) cannot be hit from GL2(Z):")
res = contains_mod(get_entry("gl2-demo").gens, 5, ModMatrix(((1, 2), (3, 4)), 5))
print(f"  -> {res.answer}: {res.reason}")
