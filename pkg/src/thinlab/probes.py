"""Finite- vs infinite-index probes and the final thinness verdict.

The only genuine decision procedure here is for subgroups of SL_2(Z) whose
coset enumeration closes; everything else is evidence assembly.  Catalog
entries carry literature-asserted facts (an index, or a thinness proof) that
upgrade evidence to a verdict with its citation; with no applicable branch
the verdict is Unknown, which is an ordinary, successful outcome.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .closure import ClosureCertificate, ClosureClass, classify
from .coset import DEFAULT_COSET_CAP, CosetTable, coset_enumerate
from .finite_image import DEFAULT_ELEMENT_CAP, enumerate_image
from .intmat import IntMatrix
from .words import GeneratorSet, Word, eval_word

S_MAT = IntMatrix(((0, 1), (-1, 0)))
T_MAT = IntMatrix(((1, 1), (0, 1)))
ST_GENERATORS = GeneratorSet("st", (S_MAT, T_MAT), ("S", "T"))

DEFAULT_OBSTRUCTION_MODULI = (4, 3, 8, 5, 7, 9)

PROPER_CLOSURE_CLASSES = frozenset(
    {
        ClosureClass.UNIPOTENT,
        ClosureClass.TORUS,
        ClosureClass.REDUCIBLE_BLOCK,
        ClosureClass.SYMPLECTIC,
        ClosureClass.ORTHOGONAL_LIKE,
    }
)


def rewrite_in_ST(m: IntMatrix) -> Word:
    """Write an SL_2(Z) matrix as a word in S = [[0,1],[-1,0]], T = [[1,1],[0,1]].

    Euclidean reduction of the left column: T-shears shrink the top entry
    modulo the bottom one, S-swaps rotate the column, and the upper-triangular
    remainder is finished with a T-power and an S-power (S^2 = -I).  The
    returned word evaluates to the input exactly, not just up to sign.
    """
    if m.n != 2:
        raise ValueError("rewrite_in_ST expects a 2x2 matrix")
    if m.det() != 1:
        raise ValueError(f"rewrite_in_ST expects determinant 1, got {m.det()}")
    (a, b), (c, d) = m.entries
    ops: list[tuple[str, int]] = []  # left-multiplications applied, in order
    while c != 0:
        q = a // c
        if q != 0:
            # T^{-q} subtracts q times the bottom row from the top row
            a, b = a - q * c, b - q * d
            ops.append(("T", -q))
        a, b, c, d = c, d, -a, -b
        ops.append(("S", 1))
    if a == -1:
        # S^2 = -I clears the sign
        a, b, d = -a, -b, -d
        ops.append(("S", 1))
        ops.append(("S", 1))
    assert (a, d) == (1, 1)
    if b != 0:
        ops.append(("T", -b))
    letters: list[tuple[int, int]] = []
    for name, power in ops:
        if name == "S":
            letters.append((0, -1))
        else:
            sign = -1 if power > 0 else 1  # inverse of T^power
            letters.extend([(1, sign)] * abs(power))
    word = Word(tuple(letters))
    check = eval_word(ST_GENERATORS, word)
    if check.entries != m.entries:
        raise RuntimeError("ST rewriting round-trip failed")
    return word


@dataclass
class ObstructionResult:
    """Outcome of the -I congruence obstruction over a list of moduli."""

    status: str  # "excluded" | "inconclusive"
    modulus: int | None = None
    tested: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "modulus": self.modulus,
            "tested": list(self.tested),
        }


def minus_I_obstruction(
    gens: GeneratorSet,
    moduli=DEFAULT_OBSTRUCTION_MODULI,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> ObstructionResult:
    """Exclude -I from the group via a congruence image, if some modulus does.

    Sound in one direction only: if -I is missing from a completely
    enumerated image mod m, then -I is not in the group.  Nothing is ever
    concluded from presence.
    """
    if gens.n != 2:
        raise ValueError("the -I obstruction is a 2x2 probe")
    tested = []
    for m in moduli:
        image = enumerate_image(gens, m, cap)
        if not image.complete:
            continue
        tested.append(m)
        minus_i = (-IntMatrix.identity(2)).reduce_mod(m)
        if minus_i.key() not in image.table:
            return ObstructionResult("excluded", m, tuple(tested))
    return ObstructionResult("inconclusive", None, tuple(tested))


@dataclass
class ProbeConfig:
    coset_cap: int = DEFAULT_COSET_CAP
    element_cap: int = DEFAULT_ELEMENT_CAP
    obstruction_moduli: tuple[int, ...] = DEFAULT_OBSTRUCTION_MODULI


@dataclass
class Verdict:
    """Thin / not thin / unknown, with the evidence that justifies it."""

    classification: str  # ProvenNotThin | ProvenThinByCatalog | ThinEvidence | Unknown
    group: str
    closure: ClosureCertificate
    sl2_index: int | None = None
    psl2_index: int | None = None
    index_in_closure: int | None = None
    reason: str | None = None
    citation: str | None = None
    coset: CosetTable | None = None
    minus_i: ObstructionResult | None = None

    def to_json(self) -> dict:
        return {
            "classification": self.classification,
            "group": self.group,
            "closure": self.closure.to_json(),
            "sl2_index": self.sl2_index,
            "psl2_index": self.psl2_index,
            "index_in_closure": self.index_in_closure,
            "reason": self.reason,
            "citation": self.citation,
            "coset": (
                {
                    "status": self.coset.status,
                    "index": self.coset.index,
                    "live_cosets": self.coset.live_cosets,
                    "total_defined": self.coset.total_defined,
                }
                if self.coset
                else None
            ),
            "minus_i": self.minus_i.to_json() if self.minus_i else None,
        }


def thinness_verdict(gens: GeneratorSet, config: ProbeConfig | None = None) -> Verdict:
    """Full decision pipeline: closure certificate, then the applicable probe.

    Proper closure plus a catalog finite-index fact proves not-thin; full
    closure in SL_2 goes to coset enumeration (index doubled exactly when -I
    is excluded); a non-closing enumeration over a Zariski-dense group is
    thinness evidence, upgraded to a verdict only by a catalog assertion.
    Higher-rank full-closure inputs are never decided here.
    """
    from .catalog import match_catalog  # late import: catalog ships generator data

    cfg = config or ProbeConfig()
    cert = classify(gens, cap=cfg.element_cap)
    entry = match_catalog(gens)

    if cert.cls in PROPER_CLOSURE_CLASSES:
        if entry is not None and entry.index_in_closure is not None:
            return Verdict(
                classification="ProvenNotThin",
                group=gens.name,
                closure=cert,
                index_in_closure=entry.index_in_closure,
                reason=(
                    f"Zariski closure is proper ({cert.cls.value}); catalog records "
                    f"finite index {entry.index_in_closure} in the integer points of the closure"
                ),
                citation=entry.not_thin_citation,
            )
        if entry is not None and entry.thin is True:
            return Verdict(
                classification="ProvenThinByCatalog",
                group=gens.name,
                closure=cert,
                reason=f"proper closure ({cert.cls.value}); catalog asserts thinness",
                citation=entry.thin_citation,
            )
        return Verdict(
            classification="Unknown",
            group=gens.name,
            closure=cert,
            reason=(
                f"Zariski closure is proper ({cert.cls.value}) but no finite-index "
                "certificate for the closure's integer points is available"
            ),
        )

    if cert.cls is ClosureClass.FULL:
        if gens.n == 2:
            words = [rewrite_in_ST(g) for g in gens.generators]
            table = coset_enumerate(words, cap=cfg.coset_cap)
            if table.status == "closed":
                if not table.verify():
                    raise RuntimeError("coset table failed its certificate check")
                obstruction = minus_I_obstruction(
                    gens, cfg.obstruction_moduli, cfg.element_cap
                )
                doubled = obstruction.status == "excluded"
                return Verdict(
                    classification="ProvenNotThin",
                    group=gens.name,
                    closure=cert,
                    sl2_index=table.index * (2 if doubled else 1),
                    psl2_index=table.index,
                    reason=(
                        "coset enumeration closed; index doubled because -I is excluded"
                        if doubled
                        else "coset enumeration closed; -I obstruction inconclusive"
                    ),
                    coset=table,
                    minus_i=obstruction,
                )
            if entry is not None and entry.thin is True:
                return Verdict(
                    classification="ProvenThinByCatalog",
                    group=gens.name,
                    closure=cert,
                    reason="coset cap exceeded over a Zariski-dense group; catalog asserts thinness",
                    citation=entry.thin_citation,
                    coset=table,
                )
            if cert.density is not None:
                return Verdict(
                    classification="ThinEvidence",
                    group=gens.name,
                    closure=cert,
                    reason=(
                        f"coset enumeration exceeded {cfg.coset_cap} cosets while the "
                        f"closure is certified full (density prime {cert.density.prime}); "
                        "consistent with infinite index but not a proof"
                    ),
                    coset=table,
                )
            return Verdict(
                classification="Unknown",
                group=gens.name,
                closure=cert,
                coset=table,
                reason="coset cap exceeded and no density certificate",
            )
        if entry is not None and entry.thin is True:
            return Verdict(
                classification="ProvenThinByCatalog",
                group=gens.name,
                closure=cert,
                reason="full closure in rank >= 2; catalog asserts thinness",
                citation=entry.thin_citation,
            )
        return Verdict(
            classification="Unknown",
            group=gens.name,
            closure=cert,
            reason=(
                "full Zariski closure with n >= 3: coset probes do not apply "
                "and no decision procedure is known"
            ),
        )

    return Verdict(
        classification="Unknown",
        group=gens.name,
        closure=cert,
        reason="closure could not be determined",
    )
