"""Built-in catalog of small integer matrix groups from the thin-groups literature.

Each entry carries its generator matrices exactly as printed in the source
literature plus the facts asserted there (Zariski closure, an index when one
is known, thinness status with its citation).  The facts feed the verdict
pipeline's catalog-backed branches and the acceptance suite; the matrices are
a frozen, checksummed artifact.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .closure import ClosureClass
from .intmat import IntMatrix
from .words import GeneratorSet


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    description: str
    gens: GeneratorSet
    expected_closure: ClosureClass
    thin: bool | None  # True = thin, False = not thin, None = open
    thin_citation: str | None = None
    not_thin_citation: str | None = None
    index_in_closure: int | None = None  # for proper-closure entries
    sl2_index: int | None = None
    psl2_index: int | None = None
    source: str | None = None

    @property
    def n(self) -> int:
        return self.gens.n

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "n": self.n,
            "description": self.description,
            "generators": [g.to_json() for g in self.gens.generators],
            "expected_closure": self.expected_closure.value,
            "thin": self.thin,
            "thin_citation": self.thin_citation,
            "not_thin_citation": self.not_thin_citation,
            "index_in_closure": self.index_in_closure,
            "sl2_index": self.sl2_index,
            "psl2_index": self.psl2_index,
            "source": self.source,
        }


def _m(*rows) -> IntMatrix:
    return IntMatrix.from_rows(rows)


def _gs(name: str, *mats: IntMatrix) -> GeneratorSet:
    return GeneratorSet(name, tuple(mats))


CATALOG: dict[str, CatalogEntry] = {}


def _add(entry: CatalogEntry) -> None:
    CATALOG[entry.id] = entry


_add(CatalogEntry(
    id="ex1",
    description="T and S: together they generate all of SL2(Z)",
    gens=_gs("ex1", _m([1, 1], [0, 1]), _m([0, 1], [-1, 0])),
    expected_closure=ClosureClass.FULL,
    thin=False,
    not_thin_citation="the whole group SL2(Z); index 1",
    sl2_index=1,
    psl2_index=1,
))

_add(CatalogEntry(
    id="ex2",
    description="congruence group: diagonal entries 1 (mod 4), evens off the diagonal",
    gens=_gs("ex2", _m([1, 2], [0, 1]), _m([1, 0], [2, 1])),
    expected_closure=ClosureClass.FULL,
    thin=False,
    not_thin_citation="a congruence group of index 12 in SL2(Z) (index 6 in PSL2(Z))",
    sl2_index=12,
    psl2_index=6,
))

_add(CatalogEntry(
    id="ex3",
    description="upper triangular with even upper-right entry; unipotent closure",
    gens=_gs("ex3", _m([1, 4], [0, 1]), _m([1, 6], [0, 1])),
    expected_closure=ClosureClass.UNIPOTENT,
    thin=False,
    not_thin_citation=(
        "lives in the unipotent group U; index two in the integer points U(Z)"
    ),
    index_in_closure=2,
))

_add(CatalogEntry(
    id="ex4",
    description="powers of one hyperbolic matrix; Fibonacci entries; torus closure",
    gens=_gs("ex4", _m([2, 1], [1, 1]), _m([5, 3], [3, 2])),
    expected_closure=ClosureClass.TORUS,
    thin=False,
    not_thin_citation=(
        "conjugate (over Q(sqrt 5)) into the diagonal torus; the group is exactly "
        "the integer points of its closure"
    ),
    index_in_closure=1,
))

_add(CatalogEntry(
    id="ex5",
    description="T^4 and S: infinite index yet surjective mod every odd prime",
    gens=_gs("ex5", _m([1, 4], [0, 1]), _m([0, 1], [-1, 0])),
    expected_closure=ClosureClass.FULL,
    thin=True,
    thin_citation=(
        "has infinite index in SL2(Z) and full Zariski closure, hence thin; "
        "see section 4 of Kontorovich, From Apollonius to Zaremba (2013)"
    ),
    source="Kontorovich 2013",
))

_add(CatalogEntry(
    id="ex7",
    description="a copy of SL2(Z) in the upper-left block of SL3",
    gens=_gs(
        "ex7",
        _m([1, 1, 0], [0, 1, 0], [0, 0, 1]),
        _m([0, 1, 0], [-1, 0, 0], [0, 0, 1]),
    ),
    expected_closure=ClosureClass.REDUCIBLE_BLOCK,
    thin=False,
    not_thin_citation=(
        "Zariski closure is the SL2 block, and the group is all of its integer "
        "points, hence not thin"
    ),
    index_in_closure=1,
))

_add(CatalogEntry(
    id="ex8",
    description="faithful (3,3,4) triangle group representation in SL3(Z)",
    gens=_gs(
        "ex8",
        _m([0, 0, 1], [1, 0, 0], [0, 1, 0]),
        _m([1, 2, 4], [0, -1, -1], [0, 1, 0]),
    ),
    expected_closure=ClosureClass.FULL,
    thin=True,
    thin_citation=(
        "a faithful representation of the (3,3,4) hyperbolic triangle group, "
        "so the group is necessarily of infinite index in SL3(Z), that is, thin "
        "(Long-Reid-Thistlethwaite 2011)"
    ),
    source="Long-Reid-Thistlethwaite 2011",
))

_add(CatalogEntry(
    id="ex9",
    description="hypergeometric monodromy in SL4(Z) preserving a symplectic form",
    gens=_gs(
        "ex9",
        _m([0, 0, 0, -1], [1, 0, 0, -1], [0, 1, 0, -1], [0, 0, 1, -1]),
        _m([1, 0, 0, 5], [0, 1, 0, -5], [0, 0, 1, 5], [0, 0, 0, 1]),
    ),
    expected_closure=ClosureClass.SYMPLECTIC,
    thin=True,
    thin_citation=(
        "monodromy group of a hypergeometric equation with symplectic closure; "
        "this group is thin (Brav-Thomas 2014)"
    ),
    source="Brav-Thomas 2014",
))

_add(CatalogEntry(
    id="ex10",
    description="four inversions preserving a signature-(3,1) form; packing limit set",
    gens=_gs(
        "ex10",
        _m([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]),
        _m([1, 0, 0, 0], [1, 1, 1, 0], [-2, 0, -1, 0], [0, 0, 0, 1]),
        _m([0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]),
        _m([3, 2, 0, 1], [2, 3, 0, 1], [0, 0, 1, 0], [-12, -12, 0, -5]),
    ),
    expected_closure=ClosureClass.ORTHOGONAL_LIKE,
    thin=True,
    thin_citation=(
        "reflection group whose limit set is a fractal circle packing "
        "(a crystallographic packing), hence thin (Kontorovich-Nakamura 2018)"
    ),
    source="Kontorovich-Nakamura 2018",
))

_add(CatalogEntry(
    id="ex11",
    description="geometric SL3(Z) pair, surjective mod 7: thin or not is open",
    gens=_gs(
        "ex11",
        _m([1, 1, 2], [0, 1, 1], [0, -3, -2]),
        _m([-2, 0, -1], [-5, 1, -1], [3, 0, 1]),
    ),
    expected_closure=ClosureClass.FULL,
    thin=None,
    source="Long-Reid-Thistlethwaite 2011",
))

_add(CatalogEntry(
    id="gl2-demo",
    description="GL2(Z) generators: determinant obstruction demo (dets are only ±1)",
    gens=_gs(
        "gl2-demo",
        _m([1, 1], [0, 1]),
        _m([0, 1], [-1, 0]),
        _m([1, 0], [0, -1]),
    ),
    expected_closure=ClosureClass.UNDETERMINED,
    thin=False,
    not_thin_citation="all of GL2(Z) by construction",
))


def get_entry(entry_id: str) -> CatalogEntry:
    try:
        return CATALOG[entry_id]
    except KeyError:
        known = ", ".join(sorted(CATALOG))
        raise KeyError(f"unknown catalog id {entry_id!r}; known ids: {known}") from None


def match_catalog(gens: GeneratorSet) -> CatalogEntry | None:
    """Exact-matrix match of a generator set against the catalog."""
    sig = tuple(g.entries for g in gens.generators)
    for entry in CATALOG.values():
        if tuple(g.entries for g in entry.gens.generators) == sig:
            return entry
    return None


def catalog_checksum() -> str:
    """SHA-256 over the canonical serialization of all catalog matrices."""
    doc = {
        entry_id: [g.to_json() for g in CATALOG[entry_id].gens.generators]
        for entry_id in sorted(CATALOG)
    }
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()
