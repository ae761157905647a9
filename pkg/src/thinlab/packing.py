"""Circle packings from integer reflection groups of signature (3,1).

Each generator must be an involution preserving the invariant symmetric form
Q; its mirror is the (-1)-eigenvector.  Vectors of positive Q-norm are
circles in the boundary plane once expressed in an inversive chart: a
rational Witt decomposition Q = (hyperbolic plane) + (positive-definite
binary part) supplies exact coordinates (co-curvature, curvature, c1, c2)
with inversive norm  b*b_hat - d1*c1^2 - d2*c2^2 = -1  after unit-norm
normalization.  The definite part's Gram diag(d1, d2) is kept exact rather
than forced to the Euclidean diag(1, 1), which is rationally impossible for
forms whose determinant class differs from -1 (the flagship group has
d = (6, 1)); curvatures stay exact rationals either way, and Euclidean
centers pick up a sqrt(d1) only in the float render shadow.

The packing itself is the orbit of the tangency-cluster circles: the
positive-norm vectors orthogonal to all mirrors but one.  Orbiting the
mirrors themselves is available too, but mirror norms may fall in several
rational square classes, in which case no single global rescaling can make
their curvatures integral (the cluster orbit is the one with integer labels).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import sqrt

from . import rational
from .intmat import IntMatrix
from .words import GeneratorSet, Word


class PackingError(ValueError):
    pass


def _bilinear(q, u, v) -> Fraction:
    n = len(q)
    return sum(
        Fraction(u[i]) * Fraction(q[i][j]) * Fraction(v[j])
        for i in range(n)
        for j in range(n)
    )


def _matvec(g: IntMatrix, v) -> tuple[int, ...]:
    return tuple(sum(g.entries[i][j] * v[j] for j in range(g.n)) for i in range(g.n))


def reflection_vector(g: IntMatrix, q) -> tuple[int, ...]:
    """Primitive mirror normal of a reflection: spans the (-1)-eigenspace.

    Requires g to be a non-identity involution preserving q with a
    one-dimensional (-1)-eigenspace, and verifies the rank-one reconstruction
    g = I - 2 v v^T q / (v^T q v) exactly before returning.
    """
    n = g.n
    if g.is_identity():
        raise PackingError("the identity is not a reflection")
    if not (g @ g).is_identity():
        raise PackingError("generator is not an involution")
    qm = IntMatrix(tuple(tuple(int(x) for x in row) for row in q))
    if (g.transpose() @ qm @ g).entries != qm.entries:
        raise PackingError("generator does not preserve the form")
    rows = [
        [Fraction(g.entries[i][j] + (1 if i == j else 0)) for j in range(n)]
        for i in range(n)
    ]
    kernel = rational.kernel_basis(rows, n)
    if len(kernel) != 1:
        raise PackingError(
            f"(-1)-eigenspace has dimension {len(kernel)}, expected 1"
        )
    v = tuple(rational.clear_denominators(kernel[0]))
    s = _bilinear(q, v, v)
    if s == 0:
        raise PackingError("mirror normal is isotropic; not a reflection in this form")
    for i in range(n):
        for j in range(n):
            qv_j = sum(Fraction(q[j][t]) * v[t] for t in range(n))
            expect = (1 if i == j else 0) - 2 * Fraction(v[i]) * qv_j / s
            if expect != g.entries[i][j]:
                raise PackingError("reflection reconstruction failed")
    return v


@dataclass(frozen=True)
class InversiveChart:
    """Rational coordinates (b_hat, b, c1, c2) on the quadratic space of Q."""

    rows: tuple[tuple[Fraction, ...], ...]  # 4x4: y = rows @ w
    d: tuple[Fraction, Fraction]  # Gram of the definite binary part
    q: tuple[tuple[int, ...], ...]

    def to_chart(self, w) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        y = tuple(
            sum(self.rows[i][j] * Fraction(w[j]) for j in range(4)) for i in range(4)
        )
        return y  # (b_hat_raw, b_raw, c1, c2)

    def norm(self, w) -> Fraction:
        return _bilinear(self.q, w, w)


def _isotropic_vector(q) -> tuple[int, ...]:
    """Smallest primitive isotropic vector of q, deterministic search order.

    Candidates are ordered by sup-norm radius, then sparsity, then
    lexicographically, so charts prefer coordinate-axis points at infinity.
    """
    n = len(q)
    for radius in range(1, 13):
        shell = [
            vec
            for vec in product(range(-radius, radius + 1), repeat=n)
            if any(vec) and max(abs(x) for x in vec) == radius
        ]
        shell.sort(key=lambda v: (sum(1 for x in v if x != 0), v))
        for vec in shell:
            if _bilinear(q, vec, vec) == 0:
                return tuple(rational.clear_denominators(list(vec)))
    raise PackingError(
        "no small rational isotropic vector: the form looks rationally "
        "anisotropic, so there is no rational inversive chart"
    )


def build_chart(q) -> InversiveChart:
    """Rational Witt decomposition of a signature-(3,1) form into a chart.

    Deterministic: the isotropic vector comes from a fixed search order and
    the definite complement is Lagrange-diagonalized with leading-nonzero
    pivots, so golden-file outputs are stable.
    """
    n = len(q)
    if n != 4:
        raise PackingError("inversive charts are for 4x4 forms")
    if rational.inertia(q) != (3, 1, 0):
        raise PackingError(f"form signature {rational.inertia(q)} is not (3,1)")
    e = _isotropic_vector(q)
    # hyperbolic partner: first standard basis vector not orthogonal to e
    f0 = None
    for i in range(n):
        cand = tuple(1 if j == i else 0 for j in range(n))
        if _bilinear(q, e, cand) != 0:
            f0 = cand
            break
    assert f0 is not None, "nondegenerate form has a partner"
    bef = _bilinear(q, e, f0)
    qf = _bilinear(q, f0, f0)
    # f = f0 - (Q(f0) / (2 B(e, f0))) e is isotropic; rescale so B(e, f) = -1/2
    f = [Fraction(x) - (qf / (2 * bef)) * y for x, y in zip(f0, e)]
    scale = Fraction(-1, 2) / _bilinear(q, e, f)
    f = [scale * x for x in f]
    # complement = orthogonal of span(e, f): positive definite binary part
    rows = []
    for base in (e, f):
        rows.append([sum(Fraction(q[i][j]) * Fraction(base[i]) for i in range(n)) for j in range(n)])
    comp = rational.kernel_basis(rows, n)
    assert len(comp) == 2
    gram = [[_bilinear(q, comp[i], comp[j]) for j in range(2)] for i in range(2)]
    basis2, diag = rational.lagrange_diagonalize(gram)
    h = []
    for coeffs in basis2:
        h.append([coeffs[0] * a + coeffs[1] * b for a, b in zip(comp[0], comp[1])])
    d = tuple(diag)
    if any(x <= 0 for x in d):
        raise PackingError("definite part of the chart is not positive definite")
    # chart functionals = inverse of the column matrix [e | f | h1 | h2]
    cols = [list(map(Fraction, e)), f, h[0], h[1]]
    mat = [[cols[c][r] for c in range(n)] for r in range(n)]
    inv = _invert_fraction_matrix(mat)
    return InversiveChart(
        rows=tuple(tuple(row) for row in inv),
        d=(d[0], d[1]),
        q=tuple(tuple(int(x) for x in row) for row in q),
    )


def _invert_fraction_matrix(m):
    n = len(m)
    a = [row[:] for row in m]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv[c], inv[piv] = inv[piv], inv[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        inv[c] = [x / pv for x in inv[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                fr = a[r][c]
                a[r] = [x - fr * y for x, y in zip(a[r], a[c])]
                inv[r] = [x - fr * y for x, y in zip(inv[r], inv[c])]
    return inv


@dataclass(frozen=True)
class InversiveCircle:
    """A circle (or line) as an exact vector in an inversive chart.

    Raw coordinates are kept unnormalized with their exact norm; after
    dividing by sqrt(norm) the unit-norm convention b*b_hat - d1 c1^2 -
    d2 c2^2 = -1 holds.  Exact normalized curvature exists precisely when
    the norm is a rational square (true along any orbit seeded with
    square-norm vectors, since the group action preserves norms).
    """

    b_hat_raw: Fraction
    b_raw: Fraction
    c1: Fraction
    c2: Fraction
    norm: Fraction
    d: tuple[Fraction, Fraction]

    @property
    def is_line(self) -> bool:
        return self.b_raw == 0

    @property
    def sqrt_norm(self) -> Fraction | None:
        return rational.rational_sqrt(self.norm)

    @property
    def curvature_exact(self) -> Fraction | None:
        s = self.sqrt_norm
        return self.b_raw / s if s else None

    @property
    def co_curvature_exact(self) -> Fraction | None:
        s = self.sqrt_norm
        return self.b_hat_raw / s if s else None

    @property
    def curvature(self) -> float:
        return float(self.b_raw) / sqrt(float(self.norm))

    @property
    def co_curvature(self) -> float:
        return float(self.b_hat_raw) / sqrt(float(self.norm))

    def unit_norm_residual(self) -> Fraction:
        """Exact defect of b*b_hat - d1 c1^2 - d2 c2^2 = -norm (pre-division)."""
        lhs = (
            self.b_raw * self.b_hat_raw
            - self.d[0] * self.c1 * self.c1
            - self.d[1] * self.c2 * self.c2
        )
        return lhs + self.norm

    # float render shadow -------------------------------------------------
    @property
    def center(self) -> tuple[float, float] | None:
        if self.is_line:
            return None
        b = float(self.b_raw)
        return (
            sqrt(float(self.d[0])) * float(self.c1) / b,
            sqrt(float(self.d[1])) * float(self.c2) / b,
        )

    @property
    def radius(self) -> float | None:
        if self.is_line:
            return None
        return sqrt(float(self.norm)) / abs(float(self.b_raw))

    def line_geometry(self) -> tuple[tuple[float, float], float] | None:
        """(unit normal, offset): the line is {x : x . normal = offset}."""
        if not self.is_line:
            return None
        nx = sqrt(float(self.d[0])) * float(self.c1)
        ny = sqrt(float(self.d[1])) * float(self.c2)
        length = sqrt(nx * nx + ny * ny)
        return (nx / length, ny / length), float(self.b_hat_raw) / (2 * length)

    def to_json(self) -> dict:
        return {
            "b_hat_raw": str(self.b_hat_raw),
            "b_raw": str(self.b_raw),
            "c1": str(self.c1),
            "c2": str(self.c2),
            "norm": str(self.norm),
            "d": [str(self.d[0]), str(self.d[1])],
            "curvature_exact": (
                str(self.curvature_exact) if self.curvature_exact is not None else None
            ),
            "is_line": self.is_line,
        }


def _content_normalize(vec) -> tuple[Fraction, ...]:
    """Divide by the positive content; sign (orientation) is preserved."""
    fracs = [Fraction(x) for x in vec]
    nonzero = [x for x in fracs if x != 0]
    if not nonzero:
        raise PackingError("zero vector is not a circle")
    from math import gcd, lcm

    num = 0
    den = 1
    for x in nonzero:
        num = gcd(num, abs(x.numerator))
        den = lcm(den, x.denominator)
    content = Fraction(num, den)
    return tuple(x / content for x in fracs)


def to_inversive(v, chart: InversiveChart) -> InversiveCircle:
    """Chart coordinates of a positive-norm vector, content-normalized.

    Projective invariance: positive rescalings of v give the same circle.
    """
    w = _content_normalize(v)
    norm = chart.norm(w)
    if norm <= 0:
        raise PackingError(f"vector norm {norm} is not positive; not a real circle")
    y = chart.to_chart(w)
    return InversiveCircle(
        b_hat_raw=y[0], b_raw=y[1], c1=y[2], c2=y[3], norm=norm, d=chart.d
    )


def mirror_vectors(gens: GeneratorSet, q) -> list[tuple[int, ...]]:
    return [reflection_vector(g, q) for g in gens.generators]


def cluster_seeds(gens: GeneratorSet, q, mirrors=None) -> list[tuple[int, ...]]:
    """Positive-norm vectors orthogonal to all mirrors but one.

    These span the tangency cluster whose orbit is the packing; for each
    (n-1)-subset of mirrors the orthogonal complement is a line, kept when it
    is spacelike.  Deterministic order, deduplicated up to sign.
    """
    if mirrors is None:
        mirrors = mirror_vectors(gens, q)
    n = gens.n
    seeds: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for subset in combinations(range(len(mirrors)), n - 1):
        rows = []
        for i in subset:
            rows.append(
                [
                    sum(Fraction(q[r][c]) * mirrors[i][r] for r in range(n))
                    for c in range(n)
                ]
            )
        kernel = rational.kernel_basis(rows, n)
        if len(kernel) != 1:
            continue
        v = tuple(rational.clear_denominators(kernel[0]))
        if v in seen:
            continue
        seen.add(v)
        if _bilinear(q, v, v) > 0:
            seeds.append(v)
    return seeds


@dataclass
class OrbitCircle:
    vec: tuple[int, ...]
    depth: int
    word: Word
    circle: InversiveCircle
    is_mirror: bool = False


@dataclass
class PackingOrbit:
    """BFS orbit of seed circles under the reflection generators."""

    gens: GeneratorSet
    q: tuple[tuple[int, ...], ...]
    chart: InversiveChart
    mirrors: list[OrbitCircle]
    circles: list[OrbitCircle]
    depth: int
    seed_mode: str
    scale: Fraction | None  # global curvature rescaling fixed at depth 0

    @property
    def size(self) -> int:
        return len(self.circles)

    def scaled_curvatures(self) -> list[Fraction]:
        """Exact curvatures after the depth-0 global rescaling."""
        if self.scale is None:
            raise PackingError(
                "no global rescaling exists: some seed norm is not a rational square"
            )
        out = []
        for oc in self.circles:
            b = oc.circle.curvature_exact
            if b is None:
                raise PackingError("orbit contains a circle with irrational curvature")
            out.append(b * self.scale)
        return out

    def all_curvatures_integral(self) -> bool:
        try:
            return all(c.denominator == 1 for c in self.scaled_curvatures())
        except PackingError:
            return False


def _depth0_scale(circles: list[InversiveCircle]) -> Fraction | None:
    """1 / content of the exact nonzero seed curvatures (None if irrational)."""
    curvs = []
    for c in circles:
        b = c.curvature_exact
        if b is None:
            return None
        if b != 0:
            curvs.append(b)
    if not curvs:
        return Fraction(1)
    from math import gcd, lcm

    num = 0
    den = 1
    for b in curvs:
        num = gcd(num, abs(b.numerator))
        den = lcm(den, b.denominator)
    return 1 / Fraction(num, den)


def orbit_circles(
    gens: GeneratorSet, q, depth: int, seeds: str = "cluster"
) -> PackingOrbit:
    """Orbit of the seed circles under all generators up to word length ``depth``.

    seeds="cluster" orbits the tangency cluster (integer-curvature packing);
    seeds="mirrors" orbits the mirror circles themselves.  Dedup is by exact
    content-normalized vector, so orbit(d) is a prefix of orbit(d+1).
    """
    mirrors = mirror_vectors(gens, q)
    chart = build_chart(q)
    if seeds == "cluster":
        seed_vecs = cluster_seeds(gens, q, mirrors)
        if not seed_vecs:
            raise PackingError(
                "no spacelike cluster circles exist for this mirror arrangement; "
                "use seeds='mirrors' to orbit the mirrors themselves"
            )
    elif seeds == "mirrors":
        seed_vecs = list(mirrors)
    else:
        raise ValueError("seeds must be 'cluster' or 'mirrors'")

    mirror_circles = [
        OrbitCircle(
            vec=v, depth=0, word=Word(), circle=to_inversive(v, chart), is_mirror=True
        )
        for v in mirrors
    ]

    circles: list[OrbitCircle] = []
    seen: set[tuple[int, ...]] = set()
    frontier: list[tuple[int, ...]] = []
    for v in seed_vecs:
        if v not in seen:
            seen.add(v)
            oc = OrbitCircle(vec=v, depth=0, word=Word(), circle=to_inversive(v, chart))
            circles.append(oc)
            frontier.append(v)
    words = {v: Word() for v in frontier}
    for level in range(1, depth + 1):
        nxt: list[tuple[int, ...]] = []
        for gi, g in enumerate(gens.generators):
            for v in frontier:
                w = _matvec(g, v)
                if w not in seen:
                    seen.add(w)
                    word = Word(((gi, 1),)) * words[v]
                    words[w] = word
                    circles.append(
                        OrbitCircle(
                            vec=w, depth=level, word=word,
                            circle=to_inversive(w, chart),
                        )
                    )
                    nxt.append(w)
        frontier = nxt

    scale = _depth0_scale([circles[i].circle for i in range(len(seed_vecs))])
    return PackingOrbit(
        gens=gens,
        q=tuple(tuple(int(x) for x in row) for row in q),
        chart=chart,
        mirrors=mirror_circles,
        circles=circles,
        depth=depth,
        seed_mode=seeds,
        scale=scale,
    )
