"""Exact rational linear algebra: kernels, ranks, and congruence diagonalization.

Small dense problems only (dimensions up to 64 or so); everything runs on
``fractions.Fraction`` and never touches floating point, because downstream
claims (invariant forms, signatures) flip meaning on a wrong sign.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

Vec = list[Fraction]


def _frac_rows(rows) -> list[Vec]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = _frac_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def kernel_basis(rows, ncols: int) -> list[Vec]:
    """Basis of the right kernel of the matrix given by ``rows``."""
    echelon, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            v[pc] = -echelon[ri][fc]
        basis.append(v)
    return basis


def clear_denominators(vec) -> list[int]:
    """Scale a rational vector to a primitive integer vector.

    The sign convention makes the first nonzero entry positive, so the result
    is a canonical representative of the rational line spanned by ``vec``.
    """
    fracs = [Fraction(x) for x in vec]
    den = 1
    for x in fracs:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return ints


class IncrementalSpan:
    """Row-echelon accumulator: feed vectors, read off the rank so far."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[tuple[int, Vec]] = []  # (pivot col, normalized row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        v = [Fraction(x) for x in vec]
        for piv, row in self._rows:
            if v[piv] != 0:
                f = v[piv]
                v = [x - f * y for x, y in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        pv = v[piv]
        v = [x / pv for x in v]
        self._rows.append((piv, v))
        self._rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vec) -> bool:
        v = [Fraction(x) for x in vec]
        for piv, row in self._rows:
            if v[piv] != 0:
                f = v[piv]
                v = [x - f * y for x, y in zip(v, row)]
        return all(x == 0 for x in v)


def lagrange_diagonalize(q) -> tuple[list[Vec], list[Fraction]]:
    """Exact congruence diagonalization of a symmetric rational matrix.

    Returns (basis, diag) with basis vectors b_i satisfying b_i^T Q b_j =
    diag[i] when i = j and 0 otherwise.  Pivot choice is deterministic: the
    leading nonzero diagonal entry, with the classical row+column trick when
    the diagonal is all zero but the form is not.
    """
    n = len(q)
    m = _frac_rows(q)
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    basis: list[Vec] = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]

    def form(u: Vec, v: Vec) -> Fraction:
        return sum(u[i] * m[i][j] * v[j] for i in range(n) for j in range(n))

    done: list[Vec] = []
    diag: list[Fraction] = []
    remaining = basis
    while remaining:
        pivot_idx = next((i for i, b in enumerate(remaining) if form(b, b) != 0), None)
        if pivot_idx is None:
            # all diagonal values vanish; find an off-diagonal pair and mix
            pair = None
            for i in range(len(remaining)):
                for j in range(i + 1, len(remaining)):
                    if form(remaining[i], remaining[j]) != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                # restriction of the form is zero: the rest is radical
                for b in remaining:
                    done.append(b)
                    diag.append(Fraction(0))
                break
            i, j = pair
            remaining[i] = [x + y for x, y in zip(remaining[i], remaining[j])]
            pivot_idx = i
        b = remaining.pop(pivot_idx)
        s = form(b, b)
        done.append(b)
        diag.append(s)
        remaining = [
            [x - (form(b, v) / s) * y for x, y in zip(v, b)] for v in remaining
        ]
    return done, diag


def inertia(q) -> tuple[int, int, int]:
    """Signature (positives, negatives, zeros) of a symmetric rational matrix."""
    _, diag = lagrange_diagonalize(q)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg


def squarefree_part(k: int) -> int:
    """The squarefree kernel of k, sign preserved; 0 maps to 0."""
    if k == 0:
        return 0
    sign = -1 if k < 0 else 1
    k = abs(k)
    out = 1
    d = 2
    while d * d <= k:
        cnt = 0
        while k % d == 0:
            k //= d
            cnt += 1
        if cnt % 2:
            out *= d
        d += 1
    return sign * out * k


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    x = Fraction(x)
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    num, den = x.numerator, x.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(k: int) -> int | None:
    from math import isqrt

    r = isqrt(k)
    return r if r * r == k else None
