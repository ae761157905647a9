"""Words, generator sets, and exact word evaluation."""
import pytest

from thinlab import GeneratorSet, IntMatrix, Word, eval_word, get_entry, words_up_to
from conftest import random_sl2


def random_word(rng, num_gens: int, max_len: int) -> Word:
    length = rng.randint(0, max_len)
    return Word(tuple(
        (rng.randrange(num_gens), rng.choice((1, -1))) for _ in range(length)
    ))


class TestWord:
    def test_free_reduction(self):
        w = Word(((0, 1), (0, -1), (1, 1)))
        assert w.letters == ((1, 1),)

    def test_nested_cancellation(self):
        w = Word(((0, 1), (1, 1), (1, -1), (0, -1)))
        assert len(w) == 0

    def test_inverse(self):
        w = Word(((0, 1), (1, -1)))
        assert (w * w.inverse()).letters == ()
        assert w.inverse().letters == ((1, 1), (0, -1))

    def test_spell(self):
        assert Word(((0, 1), (1, -1))).spell(("A", "B")) == "A B^-1"
        assert Word().spell() == "1"

    def test_json_roundtrip(self):
        w = Word(((0, 1), (1, -1), (0, 1)))
        assert Word.from_json(w.to_json()) == w


class TestGeneratorSet:
    def test_rejects_mixed_dimensions(self):
        with pytest.raises(ValueError):
            GeneratorSet("bad", (IntMatrix.identity(2), IntMatrix.identity(3)))

    def test_rejects_singular(self):
        with pytest.raises(ValueError):
            GeneratorSet("bad", (IntMatrix(((1, 0), (0, 2))),))

    def test_json_roundtrip(self):
        gens = get_entry("ex5").gens
        assert GeneratorSet.from_json(gens.to_json()).generators == gens.generators


class TestEvalWord:
    def test_empty_word_is_identity(self):
        gens = get_entry("ex5").gens
        assert eval_word(gens, Word()).is_identity()

    def test_triangle_group_relations(self):
        gens = get_entry("ex8").gens
        a_cubed = Word(((0, 1),) * 3)
        assert eval_word(gens, a_cubed).is_identity()

    def test_bad_index(self):
        gens = get_entry("ex5").gens
        with pytest.raises(IndexError):
            eval_word(gens, Word(((5, 1),)))

    def test_concatenation_homomorphism(self, rng):
        gens = get_entry("ex5").gens
        for _ in range(500):
            w1 = random_word(rng, 2, 12)
            w2 = random_word(rng, 2, 12)
            assert eval_word(gens, w1 * w2) == eval_word(gens, w1) @ eval_word(gens, w2)

    def test_reduce_mod_is_homomorphism(self, rng):
        for _ in range(500):
            m = rng.randint(2, 50)
            a = random_sl2(rng, bound=10 ** 3)
            b = random_sl2(rng, bound=10 ** 3)
            assert (a @ b).reduce_mod(m) == a.reduce_mod(m) @ b.reduce_mod(m)


class TestFibonacci:
    def test_entries_follow_the_recurrence(self):
        """A^n = [[f_2n, f_2n-1], [f_2n-1, f_2n-2]] with f_0 = f_1 = 1."""
        a = get_entry("ex4").gens.generators[0]
        fib = [1, 1]
        while len(fib) < 62:
            fib.append(fib[-1] + fib[-2])
        power = IntMatrix.identity(2)
        for n in range(1, 31):
            power = power @ a
            assert power.entries == (
                (fib[2 * n], fib[2 * n - 1]),
                (fib[2 * n - 1], fib[2 * n - 2]),
            )

    def test_exactness_beyond_word_size(self):
        # f_60 has ~13 digits; make sure nothing silently wrapped
        a = get_entry("ex4").gens.generators[0]
        m = a ** 30
        assert m.entries[0][0] == 2504730781961  # f_60 with f_0 = f_1 = 1


class TestWordsUpTo:
    def test_counts_freely_reduced(self):
        gens = get_entry("ex5").gens
        words = list(words_up_to(gens, 3))
        # 1 + 4 + 4*3 + 4*9 words of length <= 3 over two generators
        assert len(words) == 1 + 4 + 12 + 36
        assert all(len(w.letters) <= 3 for w, _ in words)

    def test_evaluations_match(self, rng):
        gens = get_entry("ex8").gens
        for w, m in words_up_to(gens, 4):
            if rng.random() < 0.05:
                assert eval_word(gens, w) == m
