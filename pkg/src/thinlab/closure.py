"""Zariski-closure heuristics: invariant forms, spanning dimension, taxonomy.

Everything here is exact rational arithmetic.  The certificates never claim
more than their evidence: Full requires a one-prime density certificate (or
full spanning dimension with no invariant form), and the honest fallback is
Undetermined.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from . import rational
from .finite_image import DEFAULT_ELEMENT_CAP, is_prime, is_surjective, sl_order
from .intmat import IntMatrix
from .words import GeneratorSet, Word, eval_word, words_up_to

DENSITY_PRIMES = (5, 7, 11, 13)
DEFAULT_SPAN_LEN = 6


class ClosureClass(Enum):
    FULL = "Full"
    UNIPOTENT = "Unipotent"
    TORUS = "Torus"
    REDUCIBLE_BLOCK = "ReducibleBlock"
    SYMPLECTIC = "Symplectic"
    ORTHOGONAL_LIKE = "OrthogonalLike"
    UNDETERMINED = "Undetermined"


@dataclass
class FormSpace:
    """Exact solution space of g^T Q g = Q over all generators."""

    symmetry: str  # "symmetric" | "antisymmetric"
    basis: tuple[tuple[tuple[int, ...], ...], ...]  # primitive integer matrices
    n: int

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "symmetry": self.symmetry,
            "dimension": self.dimension,
            "basis": [[list(row) for row in q] for q in self.basis],
        }


@dataclass
class DensityCertificate:
    """Witness that the image mod p is all of SL_n(Z/pZ) for one prime p >= 5."""

    prime: int
    image_order: int

    def to_json(self) -> dict:
        return {"prime": self.prime, "image_order": self.image_order}


@dataclass
class ClosureCertificate:
    cls: ClosureClass
    n: int
    density: DensityCertificate | None = None
    spanning_dimension: int | None = None
    symmetric_forms: FormSpace | None = None
    antisymmetric_forms: FormSpace | None = None
    form_signature: tuple[int, int, int] | None = None
    commuting: bool | None = None
    charpoly_discriminant: int | None = None
    shared_eigenvector: tuple[int, ...] | None = None
    note: str | None = None

    def to_json(self) -> dict:
        return {
            "class": self.cls.value,
            "n": self.n,
            "density": self.density.to_json() if self.density else None,
            "spanning_dimension": self.spanning_dimension,
            "symmetric_forms": self.symmetric_forms.to_json() if self.symmetric_forms else None,
            "antisymmetric_forms": (
                self.antisymmetric_forms.to_json() if self.antisymmetric_forms else None
            ),
            "form_signature": list(self.form_signature) if self.form_signature else None,
            "commuting": self.commuting,
            "charpoly_discriminant": self.charpoly_discriminant,
            "shared_eigenvector": (
                list(self.shared_eigenvector) if self.shared_eigenvector else None
            ),
            "note": self.note,
        }


def invariant_forms(gens: GeneratorSet, symmetry: str) -> FormSpace:
    """Exact kernel of Q |-> (g^T Q g - Q)_g on (anti)symmetric matrices."""
    if symmetry not in ("symmetric", "antisymmetric"):
        raise ValueError(f"symmetry must be symmetric|antisymmetric, got {symmetry!r}")
    n = gens.n
    sym = symmetry == "symmetric"
    pairs = [(i, j) for i in range(n) for j in range(i if sym else i + 1, n)]
    rows = []
    for g in gens.generators:
        e = g.entries
        for a in range(n):
            for b in range(a if sym else a + 1, n):
                row = []
                for (i, j) in pairs:
                    # basis form E_ij + E_ji (symmetric) or E_ij - E_ji (antisym)
                    coeff = e[i][a] * e[j][b]
                    if i != j:
                        coeff += e[j][a] * e[i][b] if sym else -e[j][a] * e[i][b]
                    if (i, j) == (a, b):
                        coeff -= 1
                    row.append(coeff)
                rows.append(row)
    kernel = rational.kernel_basis(rows, len(pairs))
    basis = []
    for vec in kernel:
        ints = rational.clear_denominators(vec)
        q = [[0] * n for _ in range(n)]
        for ci, (i, j) in enumerate(pairs):
            q[i][j] = ints[ci]
            if i != j:
                q[j][i] = ints[ci] if sym else -ints[ci]
        basis.append(tuple(tuple(row) for row in q))
    space = FormSpace(symmetry=symmetry, basis=tuple(basis), n=n)
    _assert_forms_invariant(gens, space)
    return space


def _assert_forms_invariant(gens: GeneratorSet, space: FormSpace) -> None:
    for q in space.basis:
        qm = IntMatrix(q)
        for g in gens.generators:
            if (g.transpose() @ qm @ g).entries != qm.entries:
                raise AssertionError("invariant-form kernel produced a non-invariant form")


def form_signature(q) -> tuple[int, int, int]:
    """Inertia (positives, negatives, zeros) of an exact symmetric matrix."""
    rows = q.entries if isinstance(q, IntMatrix) else q
    return rational.inertia(rows)


def spanning_dimension(gens: GeneratorSet, max_word_len: int = DEFAULT_SPAN_LEN) -> int:
    """Dimension of the rational span of all words of length <= max_word_len.

    Monotone nondecreasing in the cap and bounded by n^2; reaching n^2 is
    Burnside-style evidence that the group acts irreducibly.
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")
    n = gens.n
    span = rational.IncrementalSpan(n * n)
    for _, mat in words_up_to(gens, max_word_len):
        span.add([x for row in mat.entries for x in row])
        if span.rank == n * n:
            break
    return span.rank


def classify_unipotent(gens: GeneratorSet, word_len: int = 3) -> bool:
    """True iff every word up to the cap has characteristic polynomial (x-1)^n."""
    n = gens.n
    target = IntMatrix.identity(n)  # charpoly of I is (x-1)^n
    want = target.charpoly()
    for _, mat in words_up_to(gens, word_len):
        if mat.charpoly() != want:
            return False
    return True


def density_certificate(
    gens: GeneratorSet, p: int, cap: int = DEFAULT_ELEMENT_CAP
) -> DensityCertificate | None:
    """One-prime Zariski-density certificate.

    Surjectivity onto SL_n(Z/pZ) for a single prime p >= 5 certifies full
    closure; anything else (including a cap hit) yields None, never a claim.
    """
    if not is_prime(p) or p < 5:
        raise ValueError(f"density certificate requires a prime p >= 5, got {p}")
    verdict = is_surjective(gens, p, cap)
    if verdict.surjective == "yes":
        return DensityCertificate(prime=p, image_order=verdict.image_order)
    return None


def _try_density(
    gens: GeneratorSet, primes=DENSITY_PRIMES, cap: int = DEFAULT_ELEMENT_CAP
) -> DensityCertificate | None:
    if any(d != 1 for d in gens.dets()):
        return None  # determinant obstruction: not a subgroup of SL_n
    for p in primes:
        cert = density_certificate(gens, p, cap)
        if cert is not None:
            return cert
    return None


def _all_commute(gens: GeneratorSet, word_len: int = 4) -> bool:
    """Exact commutativity, cross-checked on all words up to ``word_len``."""
    mats = [m for _, m in words_up_to(gens, word_len)]
    gen_mats = list(gens.generators)
    for i, a in enumerate(gen_mats):
        for b in gen_mats[i + 1:]:
            if (a @ b).entries != (b @ a).entries:
                return False
    for a in gen_mats:
        for w in mats:
            if (a @ w).entries != (w @ a).entries:
                return False
    return True


def _charpoly_disc_2x2(g: IntMatrix) -> int:
    _, c1, c0 = g.charpoly()  # x^2 + c1 x + c0
    return c1 * c1 - 4 * c0


def _is_square(k: int) -> bool:
    if k < 0:
        return False
    from math import isqrt

    return isqrt(k) ** 2 == k


def _rational_eigenlines(g: IntMatrix) -> list[tuple[int, ...]] | None:
    """Primitive spanning vectors of rational eigenspaces; None if none exist."""
    n = g.n
    coeffs = g.charpoly()
    if n != 2:
        raise ValueError("rational eigenline search implemented for n = 2")
    _, c1, c0 = coeffs
    disc = c1 * c1 - 4 * c0
    if not _is_square(disc):
        return None
    from math import isqrt

    s = isqrt(disc)
    lines: list[tuple[int, ...]] = []
    for num in {(-c1 + s), (-c1 - s)}:
        lam = Fraction(num, 2)
        rows = [
            [Fraction(g.entries[i][j]) - (lam if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        for vec in rational.kernel_basis(rows, n):
            line = tuple(rational.clear_denominators(vec))
            if line not in lines:
                lines.append(line)
    return lines or None


def _is_central(g: IntMatrix) -> bool:
    return g.is_identity() or (-g).is_identity()


def classify_sl2(
    gens: GeneratorSet, cap: int = DEFAULT_ELEMENT_CAP
) -> ClosureCertificate:
    """Decision tree for subgroups of SL_2: U, torus, Borel-like, full.

    Torus detection is structural (commuting generators with a shared
    irreducible non-unipotent characteristic-polynomial splitting field); the
    diagonalizing conjugator over the quadratic field is never constructed.
    """
    if gens.n != 2:
        raise ValueError("classify_sl2 requires 2x2 generators")
    commuting = _all_commute(gens)
    if commuting and classify_unipotent(gens):
        return ClosureCertificate(
            cls=ClosureClass.UNIPOTENT, n=2, commuting=True,
            spanning_dimension=spanning_dimension(gens),
        )
    if commuting:
        discs = []
        for g in gens.generators:
            if _is_central(g):
                continue
            disc = _charpoly_disc_2x2(g)
            if disc == 0 or _is_square(disc):
                discs = None
                break
            discs.append(rational.squarefree_part(disc))
        if discs:
            if len(set(discs)) == 1:
                return ClosureCertificate(
                    cls=ClosureClass.TORUS, n=2, commuting=True,
                    charpoly_discriminant=discs[0],
                )
    shared = _shared_eigenline(gens)
    if shared is not None:
        return ClosureCertificate(
            cls=ClosureClass.REDUCIBLE_BLOCK, n=2, commuting=commuting,
            shared_eigenvector=shared,
        )
    cert = _try_density(gens, cap=cap)
    if cert is not None:
        return ClosureCertificate(
            cls=ClosureClass.FULL, n=2, density=cert, commuting=commuting,
        )
    return ClosureCertificate(cls=ClosureClass.UNDETERMINED, n=2, commuting=commuting)


def _shared_eigenline(gens: GeneratorSet) -> tuple[int, ...] | None:
    noncentral = [g for g in gens.generators if not _is_central(g)]
    if not noncentral:
        return (1,) + (0,) * (gens.n - 1)  # only ±I: every line is fixed
    candidates = _rational_eigenlines(noncentral[0])
    if candidates is None:
        return None
    for line in candidates:
        if all(_fixes_line(g, line) for g in noncentral[1:]):
            return line
    return None


def _fixes_line(g: IntMatrix, line: tuple[int, ...]) -> bool:
    image = [sum(g.entries[i][j] * line[j] for j in range(g.n)) for i in range(g.n)]
    # parallel iff all 2x2 minors with the original vanish
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if image[i] * line[j] - image[j] * line[i] != 0:
                return False
    return True


def classify(
    gens: GeneratorSet,
    cap: int = DEFAULT_ELEMENT_CAP,
    span_len: int = DEFAULT_SPAN_LEN,
) -> ClosureCertificate:
    """Closure certificate for any supported dimension.

    n = 2 goes through the SL_2 decision tree.  For n >= 3: unipotent check,
    then spanning dimension (block structure), then invariant forms
    (symplectic / orthogonal-like), then the one-prime density certificate.
    """
    if gens.n == 2:
        return classify_sl2(gens, cap=cap)
    n = gens.n
    if classify_unipotent(gens):
        return ClosureCertificate(cls=ClosureClass.UNIPOTENT, n=n, commuting=_all_commute(gens))
    span = spanning_dimension(gens, span_len)
    if span < n * n:
        return ClosureCertificate(
            cls=ClosureClass.REDUCIBLE_BLOCK, n=n, spanning_dimension=span,
            note="matrix algebra generated by the group is a proper subalgebra",
        )
    anti = invariant_forms(gens, "antisymmetric")
    if anti.dimension >= 1:
        rep = IntMatrix(anti.basis[0])
        nondeg = rep.det() != 0
        return ClosureCertificate(
            cls=ClosureClass.SYMPLECTIC, n=n, spanning_dimension=span,
            antisymmetric_forms=anti,
            note="nondegenerate invariant alternating form" if nondeg
            else "degenerate invariant alternating form",
        )
    sym = invariant_forms(gens, "symmetric")
    if sym.dimension >= 1:
        sig = form_signature(sym.basis[0])
        if sig[1] > sig[0]:
            sig = (sig[1], sig[0], sig[2])  # overall sign is a choice
        return ClosureCertificate(
            cls=ClosureClass.ORTHOGONAL_LIKE, n=n, spanning_dimension=span,
            symmetric_forms=sym, form_signature=sig,
        )
    cert = _try_density(gens, cap=cap)
    if cert is not None:
        return ClosureCertificate(
            cls=ClosureClass.FULL, n=n, density=cert, spanning_dimension=span,
        )
    return ClosureCertificate(
        cls=ClosureClass.UNDETERMINED, n=n, spanning_dimension=span,
    )
