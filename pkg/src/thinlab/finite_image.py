"""Congruence images of matrix groups: BFS enumeration, surjectivity, lifting.

The image of a generator set mod m is enumerated breadth-first from the
identity under right multiplication by the generators and their inverses.
Elements are stored as base-m packed integer keys; each element remembers the
(parent, symbol) edge that discovered it, so a shortest witness word can be
reconstructed on demand without holding millions of words in memory.

Level-synchronous BFS with symbols applied in generator-index order makes
witnesses BFS-shortest with deterministic tie-breaking.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .intmat import IntMatrix, ModMatrix
from .words import GeneratorSet, Word, eval_word

DEFAULT_ELEMENT_CAP = 1 << 24

_IDENTITY_BACKPOINTER = -1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def sl_order(n: int, p: int) -> int:
    """Order of SL_n(Z/pZ): p^{n(n-1)/2} * prod_{k=2..n} (p^k - 1)."""
    if not is_prime(p):
        raise ValueError(f"sl_order requires a prime, got {p}")
    order = p ** (n * (n - 1) // 2)
    for k in range(2, n + 1):
        order *= p ** k - 1
    return order


@dataclass
class GroupImage:
    """Enumerated image of a generator set mod m, with witness backpointers."""

    gens: GeneratorSet
    modulus: int
    complete: bool
    table: dict[int, int]  # element key -> parent_key * num_symbols + symbol idx
    symbols: tuple[ModMatrix, ...]  # g0, g0^-1, g1, g1^-1, ...
    elapsed: float = 0.0

    @property
    def n(self) -> int:
        return self.gens.n

    @property
    def order(self) -> int:
        return len(self.table)

    def __contains__(self, element: ModMatrix | int) -> bool:
        key = element if isinstance(element, int) else element.key()
        return key in self.table

    def keys(self):
        return self.table.keys()

    def elements(self) -> Iterator[ModMatrix]:
        for key in self.table:
            yield ModMatrix.from_key(key, self.n, self.modulus)

    def witness(self, element: ModMatrix | int) -> Word:
        """Shortest-found word evaluating to the element (empty for identity)."""
        key = element if isinstance(element, int) else element.key()
        if key not in self.table:
            raise KeyError(f"element not in the enumerated image mod {self.modulus}")
        nsym = len(self.symbols)
        letters = []
        while True:
            bp = self.table[key]
            if bp == _IDENTITY_BACKPOINTER:
                break
            key, sym = divmod(bp, nsym)
            letters.append((sym // 2, 1 if sym % 2 == 0 else -1))
        return Word(tuple(reversed(letters)))

    def check_closure(self) -> bool:
        """Right multiplication by every symbol stays inside the table."""
        if not self.complete:
            raise ValueError("closure check requires a complete image")
        for g in self.elements():
            for s in self.symbols:
                if (g @ s).key() not in self.table:
                    return False
        return True


def _mod_symbols(gens: GeneratorSet, m: int) -> list[ModMatrix]:
    syms = []
    for g in gens.generators:
        syms.append(g.reduce_mod(m))
        syms.append(g.inverse().reduce_mod(m))
    return syms


def enumerate_image(
    gens: GeneratorSet, m: int, cap: int = DEFAULT_ELEMENT_CAP
) -> GroupImage:
    """BFS closure of the image of ``gens`` mod m.

    Stops early (complete=False) once more than ``cap`` elements would be
    stored; hitting the cap is a structured outcome, not an error.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if cap < 1:
        raise ValueError("cap must be positive")
    start = time.perf_counter()
    n = gens.n
    symbols = _mod_symbols(gens, m)
    # vectorized frontier when the packed key and all intermediates fit int64
    if m ** (n * n) < 2 ** 62 and n * m * m < 2 ** 62:
        table, complete = _enumerate_numpy(symbols, n, m, cap)
    else:
        table, complete = _enumerate_python(symbols, n, m, cap)
    return GroupImage(
        gens=gens,
        modulus=m,
        complete=complete,
        table=table,
        symbols=tuple(symbols),
        elapsed=time.perf_counter() - start,
    )


def _enumerate_numpy(symbols, n: int, m: int, cap: int):
    nsym = len(symbols)
    syms_np = [np.array(s.entries, dtype=np.int64) for s in symbols]
    powers = (m ** np.arange(n * n, dtype=np.int64)).astype(np.int64)

    def pack(batch: np.ndarray) -> np.ndarray:
        return batch.reshape(-1, n * n) @ powers

    identity = np.eye(n, dtype=np.int64)
    id_key = int(pack(identity[None, :, :])[0])
    table: dict[int, int] = {id_key: _IDENTITY_BACKPOINTER}
    frontier_mats = identity[None, :, :]
    frontier_keys = [id_key]
    complete = True
    while len(frontier_keys) and complete:
        new_mats = []
        new_keys: list[int] = []
        for si in range(nsym):
            prod = (frontier_mats @ syms_np[si]) % m
            keys = pack(prod).tolist()
            fresh_rows = []
            for row, (parent, key) in enumerate(zip(frontier_keys, keys)):
                if key not in table:
                    if len(table) >= cap:
                        complete = False
                        break
                    table[key] = parent * nsym + si
                    fresh_rows.append(row)
                    new_keys.append(key)
            if fresh_rows:
                new_mats.append(prod[np.array(fresh_rows, dtype=np.intp)])
            if not complete:
                break
        if new_mats:
            frontier_mats = np.concatenate(new_mats, axis=0)
        else:
            frontier_mats = np.empty((0, n, n), dtype=np.int64)
        frontier_keys = new_keys
    return table, complete


def _enumerate_python(symbols, n: int, m: int, cap: int):
    nsym = len(symbols)
    identity = ModMatrix.identity(n, m)
    id_key = identity.key()
    table: dict[int, int] = {id_key: _IDENTITY_BACKPOINTER}
    frontier: list[tuple[int, ModMatrix]] = [(id_key, identity)]
    complete = True
    while frontier and complete:
        nxt: list[tuple[int, ModMatrix]] = []
        for si in range(nsym):
            sym = symbols[si]
            for parent_key, mat in frontier:
                prod = mat @ sym
                key = prod.key()
                if key not in table:
                    if len(table) >= cap:
                        complete = False
                        break
                    table[key] = parent_key * nsym + si
                    nxt.append((key, prod))
            if not complete:
                break
        frontier = nxt
    return table, complete


@dataclass
class ImageVerdict:
    """Outcome of a surjectivity test onto SL_n(Z/pZ)."""

    prime: int
    surjective: str  # "yes" | "no" | "capped"
    image_order: int
    target_order: int
    reason: str | None = None
    complete: bool = True

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "surjective": self.surjective,
            "image_order": self.image_order,
            "target_order": self.target_order,
            "reason": self.reason,
        }


def is_surjective(
    gens: GeneratorSet, p: int, cap: int = DEFAULT_ELEMENT_CAP
) -> ImageVerdict:
    """Does the image mod p fill all of SL_n(Z/pZ)?

    Prime moduli only: the comparison order comes from the classical formula,
    so nothing resembling GL_n is ever stored.
    """
    if not is_prime(p):
        raise ValueError(f"surjectivity testing is prime-only, got modulus {p}")
    if any(d != 1 for d in gens.dets()):
        raise ValueError("surjectivity onto SL_n requires determinant-1 generators")
    target = sl_order(gens.n, p)
    image = enumerate_image(gens, p, cap)
    if not image.complete:
        return ImageVerdict(p, "capped", image.order, target, "element cap exceeded", False)
    if image.order == target:
        return ImageVerdict(p, "yes", image.order, target)
    collapsed = [
        gens.gen_names[i]
        for i, g in enumerate(gens.generators)
        if g.reduce_mod(p).is_identity()
    ]
    if collapsed:
        reason = f"collapsed generator: {', '.join(collapsed)} ≡ I (mod {p})"
    else:
        reason = f"proper subgroup of order {image.order}"
    return ImageVerdict(p, "no", image.order, target, reason)


def _det_subgroup(gens: GeneratorSet, m: int) -> set[int]:
    dets = {d % m for d in gens.dets()}
    group = {1}
    frontier = {1}
    while frontier:
        nxt = set()
        for x in frontier:
            for d in dets:
                y = (x * d) % m
                if y not in group:
                    group.add(y)
                    nxt.add(y)
        frontier = nxt
    return group


def _describe_units(units: set[int], m: int) -> str:
    if units == {1, m - 1} or (m == 2 and units == {1}):
        return "{±1}"
    return "{" + ", ".join(str(u) for u in sorted(units)) + "}"


@dataclass
class ContainsResult:
    answer: str  # "yes" | "no" | "capped"
    reason: str | None = None
    witness: Word | None = None

    def to_json(self) -> dict:
        return {
            "answer": self.answer,
            "reason": self.reason,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


def contains_mod(
    gens: GeneratorSet,
    m: int,
    target: ModMatrix,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> ContainsResult:
    """Is ``target`` in the image of the group mod m?

    A determinant obstruction is reported without enumerating anything: the
    determinants of the image form the subgroup of (Z/mZ)^* generated by the
    generators' determinants, and membership outside it is impossible.
    """
    if target.modulus != m:
        raise ValueError(f"target is reduced mod {target.modulus}, expected {m}")
    if target.n != gens.n:
        raise ValueError("dimension mismatch between target and generators")
    units = _det_subgroup(gens, m)
    d = target.det() % m
    if d not in units:
        reason = (
            f"determinant obstruction: det ≡ {d} (mod {m}) "
            f"is not in {_describe_units(units, m)}"
        )
        return ContainsResult("no", reason)
    image = enumerate_image(gens, m, cap)
    key = target.key()
    if key in image.table:
        return ContainsResult("yes", witness=image.witness(key))
    if image.complete:
        return ContainsResult("no", "not in the enumerated image")
    return ContainsResult("capped", "element cap exceeded before the target was found")


def lift_to_integers(
    gens: GeneratorSet,
    p: int,
    target: ModMatrix,
    cap: int = DEFAULT_ELEMENT_CAP,
) -> tuple[IntMatrix, Word]:
    """Produce an integer matrix in the group whose reduction mod p is ``target``.

    The witness word from the BFS is evaluated exactly over Z and the claimed
    congruence is re-verified before returning.
    """
    if not is_prime(p):
        raise ValueError(f"lifting is stated for prime moduli, got {p}")
    if target.modulus != p or target.n != gens.n:
        raise ValueError("target must be reduced mod p with matching dimension")
    image = enumerate_image(gens, p, cap)
    key = target.key()
    if key not in image.table:
        if image.complete:
            raise ValueError(f"target is not in the image mod {p}")
        raise ValueError(f"element cap {cap} exceeded before the target was found")
    word = image.witness(key)
    lifted = eval_word(gens, word)
    if lifted.reduce_mod(p).entries != target.entries:
        raise RuntimeError("witness verification failed; enumeration is inconsistent")
    return lifted, word
