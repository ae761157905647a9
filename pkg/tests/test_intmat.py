"""Exact matrix arithmetic: products, determinants, inverses, reductions."""
from fractions import Fraction

import pytest

from thinlab import IntMatrix, ModMatrix, get_entry
from conftest import random_int_matrix, random_sl2


def adjugate_inverse(m: IntMatrix) -> IntMatrix:
    """Independent inverse oracle: adjugate over cofactor determinants."""
    n = m.n
    d = m.det()
    assert d in (1, -1)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m.entries[r][c] for c in range(n) if c != j]
                for r in range(n) if r != i
            ]
            adj[j][i] = _cofactor_det(minor) * (-1) ** (i + j) * d
    return IntMatrix(tuple(tuple(row) for row in adj))


def _cofactor_det(rows) -> int:
    if len(rows) == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        minor = [[r[c] for c in range(len(rows)) if c != j] for r in rows[1:]]
        total += x * _cofactor_det(minor) * (-1) ** j
    return total


class TestMatMul:
    def test_identity_neutral(self):
        m = IntMatrix(((2, 1), (1, 1)))
        assert (IntMatrix.identity(2) @ m) == m
        assert (m @ IntMatrix.identity(2)) == m

    def test_square_of_fibonacci_generator(self):
        a = get_entry("ex4").gens.generators[0]
        b = get_entry("ex4").gens.generators[1]
        assert (a @ a) == b

    def test_reflection_generator_squares_to_identity(self):
        g = get_entry("ex10").gens.generators[0]  # diag(1, 1, -1, 1)
        assert (g @ g).is_identity()

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            IntMatrix.identity(2) @ IntMatrix.identity(3)


class TestDet:
    def test_identity(self):
        assert IntMatrix.identity(4).det() == 1

    def test_hand_value(self):
        assert IntMatrix(((1, 2), (3, 4))).det() == -2

    def test_monodromy_generators_det_one(self):
        for g in get_entry("ex9").gens.generators:
            assert g.det() == 1
            assert _cofactor_det([list(r) for r in g.entries]) == 1

    def test_multiplicative_on_random_pairs(self, rng):
        for _ in range(500):
            n = rng.choice((2, 3))
            a = random_int_matrix(rng, n)
            b = random_int_matrix(rng, n)
            assert (a @ b).det() == a.det() * b.det()

    def test_agrees_with_cofactor_oracle(self, rng):
        for _ in range(200):
            n = rng.choice((2, 3, 4))
            a = random_int_matrix(rng, n)
            assert a.det() == _cofactor_det([list(r) for r in a.entries])


class TestInverse:
    def test_rotation_of_order_four(self):
        s = IntMatrix(((0, 1), (-1, 0)))
        assert s.inverse() == IntMatrix(((0, -1), (1, 0)))

    def test_unipotent(self):
        assert IntMatrix(((1, 4), (0, 1))).inverse() == IntMatrix(((1, -4), (0, 1)))

    def test_permutation_inverse_is_transpose(self):
        a = get_entry("ex8").gens.generators[0]
        assert a.inverse() == a.transpose()
        assert a.inverse() == adjugate_inverse(a)

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix(((2, 0), (0, 2))).inverse()

    def test_inverse_det_and_roundtrip(self, rng):
        for _ in range(500):
            m = random_sl2(rng, bound=10 ** 4)
            inv = m.inverse()
            assert (m @ inv).is_identity()
            assert inv.det() == m.det() == 1

    def test_det_minus_one_inverse(self):
        j = IntMatrix(((1, 0), (0, -1)))
        assert j.inverse() == j
        assert j.det() == -1


class TestReduceMod:
    def test_collapse_mod_2(self):
        assert IntMatrix(((1, 4), (0, 1))).reduce_mod(2).is_identity()

    def test_footnote_target_det(self):
        m = ModMatrix(((2, 0), (1, 3)), 5)
        assert m.det() == 1  # 6 = 1 mod 5

    def test_idempotent(self, rng):
        for _ in range(100):
            m = random_int_matrix(rng, 2, -50, 50)
            mod = rng.randint(2, 97)
            reduced = m.reduce_mod(mod)
            again = IntMatrix(reduced.entries).reduce_mod(mod)
            assert again == reduced

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            IntMatrix.identity(2).reduce_mod(1)

    def test_mod_inverse(self):
        m = ModMatrix(((2, 0), (1, 3)), 5)
        assert (m @ m.inverse()).is_identity()

    def test_key_roundtrip(self, rng):
        for _ in range(200):
            mod = rng.randint(2, 23)
            n = rng.choice((2, 3))
            m = random_int_matrix(rng, n, 0, mod - 1)
            mm = ModMatrix(m.entries, mod)
            assert ModMatrix.from_key(mm.key(), n, mod) == mm


class TestCharpoly:
    def test_unipotent(self):
        assert IntMatrix(((1, 4), (0, 1))).charpoly() == (1, -2, 1)

    def test_fibonacci_generator(self):
        assert IntMatrix(((2, 1), (1, 1))).charpoly() == (1, -3, 1)

    def test_matches_det_and_trace(self, rng):
        for _ in range(200):
            n = rng.choice((2, 3, 4))
            m = random_int_matrix(rng, n)
            coeffs = m.charpoly()
            assert coeffs[0] == 1
            assert coeffs[1] == -m.trace()
            assert coeffs[-1] == (-1) ** n * m.det()


class TestJson:
    def test_roundtrip(self):
        m = IntMatrix(((1, 4), (0, 1)))
        assert IntMatrix.from_json(m.to_json()) == m

    def test_document_shape(self):
        doc = IntMatrix(((1, 4), (0, 1))).to_json()
        assert doc == {"n": 2, "rows": [[1, 4], [0, 1]]}

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix.from_json({"n": 3, "rows": [[1, 0], [0, 1]]})
