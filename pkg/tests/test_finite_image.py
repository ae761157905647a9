"""BFS congruence images, surjectivity, membership, and integral lifting."""
from itertools import product

import pytest

from thinlab import (
    GeneratorSet,
    IntMatrix,
    ModMatrix,
    contains_mod,
    enumerate_image,
    eval_word,
    get_entry,
    is_surjective,
    lift_to_integers,
    sl_order,
)


def brute_force_sl2_order(p: int) -> int:
    """Independent oracle: count all det-1 matrices mod p directly."""
    return sum(
        1
        for a, b, c, d in product(range(p), repeat=4)
        if (a * d - b * c) % p == 1
    )


class TestSlOrder:
    def test_small_prime_matches_brute_force(self):
        assert sl_order(2, 3) == brute_force_sl2_order(3) == 24

    def test_p23(self):
        assert sl_order(2, 23) == 12144

    def test_formula_for_sl3(self):
        assert sl_order(3, 7) == 7 ** 3 * (7 ** 2 - 1) * (7 ** 3 - 1) == 5630688

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            sl_order(2, 6)


class TestEnumerateImage:
    def test_collapse_mod_2(self):
        image = enumerate_image(get_entry("ex5").gens, 2)
        assert image.complete
        assert image.order == 2  # A collapses; only S survives

    def test_mod_3_full(self):
        image = enumerate_image(get_entry("ex5").gens, 3)
        assert image.order == sl_order(2, 3) == 24

    def test_brute_force_cross_check_mod_5(self):
        image = enumerate_image(get_entry("ex1").gens, 5)
        assert image.order == brute_force_sl2_order(5)

    def test_cap_sets_flag(self):
        image = enumerate_image(get_entry("ex1").gens, 7, cap=10)
        assert not image.complete
        assert image.order <= 10 + 1

    def test_closure_property(self):
        image = enumerate_image(get_entry("ex5").gens, 3)
        assert image.check_closure()

    def test_witness_soundness(self, rng):
        gens = get_entry("ex5").gens
        image = enumerate_image(gens, 7)
        keys = list(image.keys())
        for key in rng.sample(keys, 100):
            word = image.witness(key)
            lifted = eval_word(gens, word)
            assert lifted.reduce_mod(7).key() == key

    def test_witnesses_are_bfs_shortest(self):
        gens = get_entry("ex1").gens
        image = enumerate_image(gens, 3)
        # breadth-first distances computed independently
        from collections import deque

        identity = ModMatrix.identity(2, 3)
        dist = {identity.key(): 0}
        queue = deque([identity])
        while queue:
            cur = queue.popleft()
            for sym in image.symbols:
                nxt = cur @ sym
                if nxt.key() not in dist:
                    dist[nxt.key()] = dist[cur.key()] + 1
                    queue.append(nxt)
        for key in image.keys():
            assert len(image.witness(key)) == dist[key]

    def test_lagrange_divisibility(self):
        for entry_id in ("ex1", "ex2", "ex3", "ex4", "ex5"):
            gens = get_entry(entry_id).gens
            for p in (3, 5, 7, 11):
                image = enumerate_image(gens, p)
                assert sl_order(2, p) % image.order == 0

    def test_crt_consistency(self):
        gens = get_entry("ex1").gens
        image15 = enumerate_image(gens, 15)
        image3 = enumerate_image(gens, 3)
        image5 = enumerate_image(gens, 5)
        assert image15.order == image3.order * image5.order  # coprime moduli
        projected = {
            IntMatrix(e.entries).reduce_mod(3).key() for e in image15.elements()
        }
        assert projected == set(image3.keys())

    def test_python_fallback_path_matches(self):
        """Force the non-vectorized path and compare orders."""
        from thinlab.finite_image import _enumerate_python, _mod_symbols

        gens = get_entry("ex5").gens
        syms = _mod_symbols(gens, 3)
        table, complete = _enumerate_python(syms, 2, 3, 1 << 20)
        assert complete and len(table) == 24

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            enumerate_image(get_entry("ex1").gens, 1)


class TestIsSurjective:
    def test_surjective_mod_5(self):
        verdict = is_surjective(get_entry("ex5").gens, 5)
        assert verdict.surjective == "yes"
        assert verdict.image_order == verdict.target_order == 120

    def test_collapsed_generator_mod_2(self):
        verdict = is_surjective(get_entry("ex5").gens, 2)
        assert verdict.surjective == "no"
        assert "collapsed generator" in verdict.reason

    def test_full_group_mod_7(self):
        assert is_surjective(get_entry("ex1").gens, 7).surjective == "yes"

    def test_proper_subgroup_reason(self):
        verdict = is_surjective(get_entry("ex3").gens, 7)
        assert verdict.surjective == "no"
        assert "proper subgroup" in verdict.reason

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            is_surjective(get_entry("ex1").gens, 4)

    def test_det_minus_one_rejected(self):
        with pytest.raises(ValueError):
            is_surjective(get_entry("gl2-demo").gens, 5)

    def test_capped(self):
        verdict = is_surjective(get_entry("ex1").gens, 11, cap=50)
        assert verdict.surjective == "capped"


class TestContainsMod:
    def test_determinant_obstruction(self):
        target = ModMatrix(((1, 2), (3, 4)), 5)
        res = contains_mod(get_entry("gl2-demo").gens, 5, target)
        assert res.answer == "no"
        assert "determinant" in res.reason and "±1" in res.reason

    def test_minus_identity_not_in_sanov_mod_4(self):
        target = ModMatrix(((3, 0), (0, 3)), 4)
        res = contains_mod(get_entry("ex2").gens, 4, target)
        assert res.answer == "no"

    def test_identity_always_contained(self):
        res = contains_mod(get_entry("ex3").gens, 7, ModMatrix.identity(2, 7))
        assert res.answer == "yes"
        assert len(res.witness) == 0

    def test_capped_answer(self):
        target = ModMatrix(((1, 1), (1, 2)), 11)
        res = contains_mod(get_entry("ex1").gens, 11, target, cap=5)
        assert res.answer in ("yes", "capped")

    def test_modulus_mismatch(self):
        with pytest.raises(ValueError):
            contains_mod(get_entry("ex1").gens, 7, ModMatrix.identity(2, 5))


class TestLiftToIntegers:
    def test_lift_of_reduced_generator_is_short(self):
        gens = get_entry("ex1").gens
        target = gens.generators[0].reduce_mod(5)
        lifted, word = lift_to_integers(gens, 5, target)
        assert lifted.reduce_mod(5) == target
        assert len(word) == 1

    def test_footnote_challenge(self):
        gens = get_entry("ex1").gens
        target = ModMatrix(((2, 0), (1, 3)), 5)
        gamma, word = lift_to_integers(gens, 5, target)
        assert gamma.det() == 1
        assert gamma.reduce_mod(5) == target
        assert eval_word(gens, word) == gamma

    def test_identity_lifts_to_identity(self):
        gens = get_entry("ex1").gens
        lifted, word = lift_to_integers(gens, 5, ModMatrix.identity(2, 5))
        assert lifted.is_identity()
        assert len(word) == 0

    def test_unreachable_target_raises(self):
        gens = get_entry("ex3").gens  # tiny abelian image mod 7
        target = ModMatrix(((0, 1), (6, 0)), 7)
        with pytest.raises(ValueError):
            lift_to_integers(gens, 7, target)

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            lift_to_integers(get_entry("ex1").gens, 4, ModMatrix.identity(2, 4))
