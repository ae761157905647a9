"""ST rewriting, the -I obstruction, and the verdict pipeline."""
import pytest

from thinlab import (
    IntMatrix,
    eval_word,
    get_entry,
    minus_I_obstruction,
    rewrite_in_ST,
    thinness_verdict,
)
from thinlab.probes import ST_GENERATORS
from conftest import random_sl2


class TestRewriteInST:
    def test_t_maps_to_itself(self):
        t = IntMatrix(((1, 1), (0, 1)))
        word = rewrite_in_ST(t)
        assert word.letters == ((1, 1),)

    def test_unipotent_power(self):
        word = rewrite_in_ST(IntMatrix(((1, 4), (0, 1))))
        assert word.letters == ((1, 1),) * 4

    def test_fibonacci_generator_is_short(self):
        m = IntMatrix(((2, 1), (1, 1)))
        word = rewrite_in_ST(m)
        assert len(word) <= 10
        assert eval_word(ST_GENERATORS, word) == m

    def test_s_round_trip_exact_sign(self):
        s = IntMatrix(((0, 1), (-1, 0)))
        assert eval_word(ST_GENERATORS, rewrite_in_ST(s)) == s
        minus_i = -IntMatrix.identity(2)
        assert eval_word(ST_GENERATORS, rewrite_in_ST(minus_i)) == minus_i

    def test_round_trip_500_random_matrices(self, rng):
        for _ in range(500):
            m = random_sl2(rng, bound=10 ** 6)
            word = rewrite_in_ST(m)
            assert eval_word(ST_GENERATORS, word) == m

    def test_rejects_non_sl2(self):
        with pytest.raises(ValueError):
            rewrite_in_ST(IntMatrix(((1, 0), (0, -1))))
        with pytest.raises(ValueError):
            rewrite_in_ST(IntMatrix.identity(3))


class TestMinusIObstruction:
    def test_congruence_group_excluded_mod_4(self):
        res = minus_I_obstruction(get_entry("ex2").gens)
        assert res.status == "excluded"
        assert res.modulus == 4

    def test_full_group_inconclusive(self):
        assert minus_I_obstruction(get_entry("ex1").gens).status == "inconclusive"

    def test_dense_thin_group_inconclusive(self):
        # B^2 = -I lies in the group, so no modulus can exclude it
        assert minus_I_obstruction(get_entry("ex5").gens).status == "inconclusive"


class TestVerdicts:
    def test_whole_group(self):
        v = thinness_verdict(get_entry("ex1").gens)
        assert v.classification == "ProvenNotThin"
        assert v.sl2_index == 1 and v.psl2_index == 1

    def test_congruence_index_twelve(self):
        v = thinness_verdict(get_entry("ex2").gens)
        assert v.classification == "ProvenNotThin"
        assert v.psl2_index == 6
        assert v.minus_i.status == "excluded"
        assert v.sl2_index == 12

    def test_unipotent_closure_not_thin(self):
        v = thinness_verdict(get_entry("ex3").gens)
        assert v.classification == "ProvenNotThin"
        assert v.index_in_closure == 2

    def test_torus_closure_not_thin(self):
        v = thinness_verdict(get_entry("ex4").gens)
        assert v.classification == "ProvenNotThin"
        assert v.index_in_closure == 1

    def test_thin_sl2_group_via_catalog(self):
        v = thinness_verdict(get_entry("ex5").gens)
        assert v.classification == "ProvenThinByCatalog"
        assert v.coset is not None and v.coset.status == "capped"

    def test_block_embedding_not_thin(self):
        assert thinness_verdict(get_entry("ex7").gens).classification == "ProvenNotThin"

    def test_triangle_group_thin(self):
        v = thinness_verdict(get_entry("ex8").gens)
        assert v.classification == "ProvenThinByCatalog"
        assert "necessarily of infinite index" in v.citation

    def test_symplectic_monodromy_thin(self):
        v = thinness_verdict(get_entry("ex9").gens)
        assert v.classification == "ProvenThinByCatalog"
        assert "this group is thin" in v.citation

    def test_packing_group_thin(self):
        assert (
            thinness_verdict(get_entry("ex10").gens).classification
            == "ProvenThinByCatalog"
        )

    def test_open_example_is_unknown(self):
        assert thinness_verdict(get_entry("ex11").gens).classification == "Unknown"

    def test_gl2_demo_is_unknown(self):
        assert thinness_verdict(get_entry("gl2-demo").gens).classification == "Unknown"

    def test_index_doubling_rule(self):
        v1 = thinness_verdict(get_entry("ex1").gens)
        v2 = thinness_verdict(get_entry("ex2").gens)
        assert v1.sl2_index == v1.psl2_index  # -I present
        assert v2.sl2_index == 2 * v2.psl2_index  # -I excluded

    def test_not_thin_requires_closed_table_or_catalog(self):
        for entry_id in ("ex1", "ex2", "ex3", "ex4", "ex7"):
            v = thinness_verdict(get_entry(entry_id).gens)
            assert v.classification == "ProvenNotThin"
            assert (v.coset is not None and v.coset.status == "closed") or (
                v.index_in_closure is not None
            )

    def test_transitive_degree_matches_claimed_index(self):
        v = thinness_verdict(get_entry("ex2").gens)
        perm_s, perm_t = v.coset.permutations()
        # transitivity of degree psl2_index, re-derived from the permutations
        seen = {0}
        frontier = [0]
        while frontier:
            c = frontier.pop()
            for perm in (perm_s, perm_t):
                if perm[c] not in seen:
                    seen.add(perm[c])
                    frontier.append(perm[c])
        assert len(seen) == v.psl2_index

    def test_thin_evidence_for_noncatalog_dense_group(self):
        from thinlab import GeneratorSet

        gens = GeneratorSet(
            "t6s", (IntMatrix(((1, 6), (0, 1))), IntMatrix(((0, 1), (-1, 0))))
        )
        v = thinness_verdict(gens)
        assert v.classification == "ThinEvidence"
        assert v.closure.density is not None
