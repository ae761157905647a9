"""Exact integer and modular matrix arithmetic.

Everything here is pure Python on top of arbitrary-precision ints: entries
never overflow, and every operation is exact.  Floating point is banned from
this module by design; the spectral code has its own numeric types.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MIN_DIM = 2
MAX_DIM = 8


def _as_rows(rows) -> tuple[tuple[int, ...], ...]:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(out)
    if not (MIN_DIM <= n <= MAX_DIM):
        raise ValueError(f"dimension {n} outside supported range [{MIN_DIM}, {MAX_DIM}]")
    if any(len(row) != n for row in out):
        raise ValueError("matrix is not square")
    return out


@dataclass(frozen=True)
class IntMatrix:
    """Immutable n-by-n matrix with arbitrary-precision integer entries."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_rows(self.entries))

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        return cls(tuple(tuple(row) for row in rows))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        n = self.n
        a, b = self.entries, other.entries
        cols = tuple(zip(*b))
        return IntMatrix(
            tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def __pow__(self, e: int) -> "IntMatrix":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = IntMatrix.identity(self.n)
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.n))

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.n)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.n
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse(self) -> "IntMatrix":
        """Exact inverse; only unimodular matrices (det = ±1) stay integral."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det = {d})")
        n = self.n
        m = [[Fraction(x) for x in row] for row in self.entries]
        inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
        for c in range(n):
            pivot = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[pivot] = m[pivot], m[c]
            inv[c], inv[pivot] = inv[pivot], inv[c]
            pv = m[c][c]
            m[c] = [x / pv for x in m[c]]
            inv[c] = [x / pv for x in inv[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
                    inv[r] = [x - f * y for x, y in zip(inv[r], inv[c])]
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in inv))

    def charpoly(self) -> tuple[int, ...]:
        """Characteristic polynomial coefficients, leading first.

        Faddeev-LeVerrier with exact rationals; the result is always an
        integer vector (c_n, ..., c_0) with c_n = 1 representing
        x^n + c_{n-1} x^{n-1} + ... + c_0.
        """
        n = self.n
        a = [[Fraction(x) for x in row] for row in self.entries]
        coeffs = [Fraction(1)]
        m = [[Fraction(0)] * n for _ in range(n)]
        for k in range(1, n + 1):
            # M_k = A M_{k-1} + c_{k-1} I
            if k == 1:
                m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
            else:
                prod = [
                    [sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
                    for i in range(n)
                ]
                for i in range(n):
                    prod[i][i] += coeffs[-1]
                m = prod
            am = [
                [sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)
            ]
            c = -sum(am[i][i] for i in range(n)) / k
            coeffs.append(c)
        assert all(c.denominator == 1 for c in coeffs)
        return tuple(int(c) for c in coeffs)

    def reduce_mod(self, modulus: int) -> "ModMatrix":
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        return ModMatrix(
            tuple(tuple(x % modulus for x in row) for row in self.entries), modulus
        )

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [list(row) for row in self.entries]}

    @classmethod
    def from_json(cls, doc: dict) -> "IntMatrix":
        rows = doc["rows"]
        m = cls.from_rows(rows)
        if "n" in doc and int(doc["n"]) != m.n:
            raise ValueError(f"declared n={doc['n']} does not match {m.n} rows")
        return m

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


@dataclass(frozen=True)
class ModMatrix:
    """n-by-n matrix over Z/mZ, entries stored as least nonnegative residues."""

    entries: tuple[tuple[int, ...], ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        m = self.modulus
        object.__setattr__(
            self, "entries", tuple(tuple(int(x) % m for x in row) for row in self.entries)
        )
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix is not square")

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int, modulus: int) -> "ModMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), modulus)

    def __matmul__(self, other: "ModMatrix") -> "ModMatrix":
        if self.modulus != other.modulus or self.n != other.n:
            raise ValueError("modulus/dimension mismatch")
        n, m = self.n, self.modulus
        a, b = self.entries, other.entries
        cols = tuple(zip(*b))
        return ModMatrix(
            tuple(tuple(sum(x * y for x, y in zip(row, col)) % m for col in cols) for row in a),
            m,
        )

    def __neg__(self) -> "ModMatrix":
        m = self.modulus
        return ModMatrix(tuple(tuple((-x) % m for x in row) for row in self.entries), m)

    def det(self) -> int:
        return IntMatrix(self.entries).det() % self.modulus

    def inverse(self) -> "ModMatrix":
        """Inverse mod m via the adjugate; requires det to be a unit mod m."""
        d = self.det()
        m = self.modulus
        try:
            dinv = pow(d, -1, m)
        except ValueError:
            raise ValueError(f"determinant {d} is not a unit mod {m}") from None
        n = self.n
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [
                    [self.entries[r][c] for c in range(n) if c != j]
                    for r in range(n) if r != i
                ]
                cof = _int_det(minor) * (-1) ** (i + j)
                adj[j][i] = (cof * dinv) % m
        return ModMatrix(tuple(tuple(row) for row in adj), m)

    def is_identity(self) -> bool:
        return all(
            self.entries[i][j] == (1 if i == j else 0)
            for i in range(self.n) for j in range(self.n)
        )

    def key(self) -> int:
        """Pack the entries into a single base-m integer (row-major)."""
        k = 0
        m = self.modulus
        for row in reversed(self.entries):
            for x in reversed(row):
                k = k * m + x
        return k

    @classmethod
    def from_key(cls, key: int, n: int, modulus: int) -> "ModMatrix":
        vals = []
        for _ in range(n * n):
            vals.append(key % modulus)
            key //= modulus
        rows = tuple(tuple(vals[i * n + j] for j in range(n)) for i in range(n))
        return cls(rows, modulus)

    def to_json(self) -> dict:
        return {"n": self.n, "mod": self.modulus, "rows": [list(r) for r in self.entries]}


def _int_det(rows) -> int:
    return _bareiss(rows)


def _bareiss(rows) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
