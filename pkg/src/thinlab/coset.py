"""Todd-Coxeter coset enumeration against the modular-group presentation.

The target presentation is <s, t | s^2 = t^3 = 1> (the free product of a
2-cycle and a 3-cycle), which is where index computations for subgroups given
by matrices naturally live once words in S, T are projectivized: t stands for
the product S*T, so S maps to s and T maps to the two-letter word s t.

The enumerator is HLT-style: subgroup generators are scanned at coset 0,
relators at every live coset, gaps are filled by defining new cosets, and
coincidences are merged immediately through a union-find with full edge
rewiring.  Exceeding the coset budget is a structured outcome ("capped"),
never an exception: a non-closing enumeration proves nothing.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .words import Word

# letters: s is its own inverse; t and t^-1 are distinct columns
S, T, T_INV = 0, 1, 2
N_LETTERS = 3
INVERSE = (S, T_INV, T)
RELATORS = ((T, T, T),)  # t^3; s^2 is structural because s is self-inverse

DEFAULT_COSET_CAP = 100_000


def st_word_to_letters(word: Word) -> tuple[int, ...]:
    """Translate a word over (S, T) into presentation letters.

    S^{±1} -> s (order two in the quotient), T -> s t, T^{-1} -> t^{-1} s.
    """
    out: list[int] = []
    for idx, sign in word:
        if idx == 0:
            out.append(S)
        elif idx == 1:
            out.extend((S, T) if sign == 1 else (T_INV, S))
        else:
            raise ValueError(f"letter index {idx} is not an S/T generator")
    return tuple(out)


@dataclass
class CosetTable:
    """Result of an enumeration: either a closed table or a capped attempt."""

    status: str  # "closed" | "capped"
    index: int | None
    live_cosets: int
    total_defined: int
    subgroup_letter_words: tuple[tuple[int, ...], ...]
    table: list[list[int]] = field(default_factory=list, repr=False)  # compressed

    def permutations(self) -> tuple[list[int], list[int]]:
        """Permutations of the live cosets induced by s and t (closed only)."""
        if self.status != "closed":
            raise ValueError("permutation representation requires a closed table")
        perm_s = [row[S] for row in self.table]
        perm_t = [row[T] for row in self.table]
        return perm_s, perm_t

    def verify(self) -> bool:
        """Independent certificate check on the permutation representation.

        Verifies s^2 = t^3 = identity, that every subgroup generator fixes
        coset 0, and that the action is transitive.  This re-derives the
        claimed index without trusting the enumerator's bookkeeping.
        """
        if self.status != "closed":
            return False
        n = len(self.table)
        perm_s, perm_t = self.permutations()
        if sorted(perm_s) != list(range(n)) or sorted(perm_t) != list(range(n)):
            return False
        if any(perm_s[perm_s[i]] != i for i in range(n)):
            return False
        if any(perm_t[perm_t[perm_t[i]]] != i for i in range(n)):
            return False
        letter_perm = {
            S: perm_s,
            T: perm_t,
            T_INV: [perm_t.index(i) for i in range(n)],
        }
        for word in self.subgroup_letter_words:
            c = 0
            for letter in word:
                c = letter_perm[letter][c]
            if c != 0:
                return False
        seen = {0}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for perm in (perm_s, perm_t, letter_perm[T_INV]):
                d = perm[c]
                if d not in seen:
                    seen.add(d)
                    queue.append(d)
        return len(seen) == n


class _Enumerator:
    def __init__(self, cap: int):
        self.cap = cap
        self.table: list[list[int | None]] = [[None] * N_LETTERS]
        self.rep: list[int] = [0]
        self.capped = False

    def find(self, c: int) -> int:
        root = c
        while self.rep[root] != root:
            root = self.rep[root]
        while self.rep[c] != root:
            self.rep[c], c = root, self.rep[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.find(c) == c

    def define(self, c: int, x: int) -> int | None:
        if len(self.table) >= self.cap:
            self.capped = True
            return None
        d = len(self.table)
        self.table.append([None] * N_LETTERS)
        self.rep.append(d)
        self.table[c][x] = d
        self.table[d][INVERSE[x]] = c
        return d

    def _merge(self, a: int, b: int, queue: deque) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        self.rep[b] = a
        queue.append(b)

    def coincide(self, a: int, b: int) -> None:
        queue: deque = deque()
        self._merge(a, b, queue)
        while queue:
            dead = queue.popleft()
            for x in range(N_LETTERS):
                target = self.table[dead][x]
                if target is None:
                    continue
                self.table[dead][x] = None
                if self.table[target][INVERSE[x]] == dead:
                    self.table[target][INVERSE[x]] = None
                u, v = self.find(dead), self.find(target)
                if self.table[u][x] is not None:
                    self._merge(v, self.table[u][x], queue)
                elif self.table[v][INVERSE[x]] is not None:
                    self._merge(u, self.table[v][INVERSE[x]], queue)
                else:
                    self.table[u][x] = v
                    self.table[v][INVERSE[x]] = u

    def scan_and_fill(self, c: int, word: tuple[int, ...]) -> None:
        """Trace ``word`` from c back to c, filling gaps, merging mismatches."""
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and self.table[f][word[i]] is not None:
                f = self.find(self.table[f][word[i]])
                i += 1
            if i > j:
                if f != b:
                    self.coincide(f, b)
                return
            while j >= i and self.table[b][INVERSE[word[j]]] is not None:
                b = self.find(self.table[b][INVERSE[word[j]]])
                j -= 1
            if j < i:
                self.coincide(f, b)
                return
            if j == i:
                # deduction: a single undefined edge closes the scan
                self.table[f][word[i]] = b
                self.table[b][INVERSE[word[i]]] = f
                return
            d = self.define(f, word[i])
            if d is None:
                return  # cap hit
            f = d
            i += 1

    def live_count(self) -> int:
        return sum(1 for c in range(len(self.table)) if self.find(c) == c)


def coset_enumerate(
    subgroup_words,
    cap: int = DEFAULT_COSET_CAP,
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup_words``.

    ``subgroup_words`` are Words over (S, T) or pre-translated letter tuples.
    A closed table reports the index in the s,t-presentation; a cap hit
    reports the live-coset count at the moment of stopping.
    """
    letter_words: list[tuple[int, ...]] = []
    for w in subgroup_words:
        letter_words.append(st_word_to_letters(w) if isinstance(w, Word) else tuple(w))
    enum = _Enumerator(cap)
    for word in letter_words:
        if word:
            enum.scan_and_fill(0, word)
        if enum.capped:
            break
    c = 0
    while not enum.capped and c < len(enum.table):
        if not enum.is_live(c):
            c += 1
            continue
        for rel in RELATORS:
            enum.scan_and_fill(c, rel)
            if enum.capped or not enum.is_live(c):
                break
        if not enum.capped and enum.is_live(c):
            for x in range(N_LETTERS):
                if enum.table[c][x] is None:
                    if enum.define(c, x) is None:
                        break
        c += 1
    if enum.capped:
        return CosetTable(
            status="capped",
            index=None,
            live_cosets=enum.live_count(),
            total_defined=len(enum.table),
            subgroup_letter_words=tuple(letter_words),
        )
    live = [c for c in range(len(enum.table)) if enum.is_live(c)]
    compress = {c: i for i, c in enumerate(live)}
    rows = []
    for c in live:
        row = []
        for x in range(N_LETTERS):
            target = enum.table[c][x]
            assert target is not None, "closed table has an undefined entry"
            row.append(compress[enum.find(target)])
        rows.append(row)
    return CosetTable(
        status="closed",
        index=len(live),
        live_cosets=len(live),
        total_defined=len(enum.table),
        subgroup_letter_words=tuple(letter_words),
        table=rows,
    )
