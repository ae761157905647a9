"""Freely reduced words over a named set of integer matrix generators."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .intmat import IntMatrix

Letter = tuple[int, int]  # (generator index, exponent sign +1/-1)


def _free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for idx, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign}")
        if out and out[-1][0] == idx and out[-1][1] == -sign:
            out.pop()
        else:
            out.append((idx, sign))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word; cancellation is applied at construction."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((i, -s) for i, s in reversed(self.letters)))

    def spell(self, names: tuple[str, ...] | None = None) -> str:
        """Human-readable form like "A B^-1 A" (run-length not applied)."""
        if not self.letters:
            return "1"
        parts = []
        for i, s in self.letters:
            name = names[i] if names else f"g{i}"
            parts.append(name if s == 1 else name + "^-1")
        return " ".join(parts)

    def to_json(self) -> list[list[int]]:
        return [[i, s] for i, s in self.letters]

    @classmethod
    def from_json(cls, doc) -> "Word":
        return cls(tuple((int(i), int(s)) for i, s in doc))


@dataclass(frozen=True)
class GeneratorSet:
    """A named tuple of unimodular generators of equal dimension."""

    name: str
    generators: tuple[IntMatrix, ...]
    gen_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("generator set is empty")
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("generators have mixed dimensions")
        for i, g in enumerate(gens):
            if g.det() not in (1, -1):
                raise ValueError(f"generator {i} is not invertible over Z (det = {g.det()})")
        if not self.gen_names:
            default = tuple("ABCDEFGH"[i] if i < 8 else f"g{i}" for i in range(len(gens)))
            object.__setattr__(self, "gen_names", default)

    @property
    def n(self) -> int:
        return self.generators[0].n

    def __len__(self) -> int:
        return len(self.generators)

    def symbols(self) -> list[tuple[int, int, IntMatrix]]:
        """All 2g symbols (index, sign, matrix) in generator-index order."""
        out = []
        for i, g in enumerate(self.generators):
            out.append((i, 1, g))
            out.append((i, -1, g.inverse()))
        return out

    def dets(self) -> tuple[int, ...]:
        return tuple(g.det() for g in self.generators)

    def to_json(self) -> dict:
        return {"name": self.name, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, doc: dict) -> "GeneratorSet":
        gens = tuple(IntMatrix.from_json(g) for g in doc["generators"])
        return cls(str(doc.get("name", "gens")), gens)


def eval_word(gens: GeneratorSet, word: Word) -> IntMatrix:
    """Exact product of generators/inverses in order; empty word is identity."""
    result = IntMatrix.identity(gens.n)
    inverses: dict[int, IntMatrix] = {}
    for idx, sign in word:
        if not 0 <= idx < len(gens):
            raise IndexError(f"generator index {idx} out of range for {gens.name}")
        if sign == 1:
            factor = gens.generators[idx]
        else:
            if idx not in inverses:
                inverses[idx] = gens.generators[idx].inverse()
            factor = inverses[idx]
        result = result @ factor
    return result


def words_up_to(gens: GeneratorSet, max_len: int) -> Iterator[tuple[Word, IntMatrix]]:
    """All freely reduced words of length <= max_len with their evaluations.

    Generated breadth-first so each evaluation is one multiplication on top
    of its parent; the identity (empty word) comes first.
    """
    syms = gens.symbols()
    identity = IntMatrix.identity(gens.n)
    yield Word(), identity
    frontier: list[tuple[Word, IntMatrix]] = [(Word(), identity)]
    for _ in range(max_len):
        nxt: list[tuple[Word, IntMatrix]] = []
        for word, mat in frontier:
            last = word.letters[-1] if word.letters else None
            for idx, sign, sym in syms:
                if last is not None and last[0] == idx and last[1] == -sign:
                    continue  # would cancel; not freely reduced
                w2 = Word(word.letters + ((idx, sign),))
                m2 = mat @ sym
                nxt.append((w2, m2))
                yield w2, m2
        frontier = nxt
