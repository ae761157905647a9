"""Cayley graphs of enumerated congruence images.

Vertices are group elements (or ±pairs of them in psl mode); for each vertex
g and each symbol s in (g0, g0^-1, g1, g1^-1, ...) there is an edge endpoint
g -- g.s.  Multi-edges are kept so the graph is exactly k-regular with k the
number of symbols; coincident symbols (e.g. an involution equal to its own
inverse in the quotient) simply contribute parallel edges.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .finite_image import GroupImage
from .intmat import ModMatrix


@dataclass
class CayleyGraph:
    num_vertices: int
    k: int
    neighbors: np.ndarray  # (V, k) vertex indices, each row sorted
    psl: bool = False
    modulus: int | None = None
    vertex_keys: list[int] | None = None

    def __post_init__(self):
        if self.neighbors.shape != (self.num_vertices, self.k):
            raise ValueError("neighbor table shape mismatch")

    @property
    def V(self) -> int:
        return self.num_vertices

    def adjacency(self) -> sp.csr_matrix:
        rows = np.repeat(np.arange(self.num_vertices), self.k)
        cols = self.neighbors.reshape(-1)
        data = np.ones(rows.shape[0])
        return sp.coo_matrix(
            (data, (rows, cols)), shape=(self.num_vertices, self.num_vertices)
        ).tocsr()

    def adjacency_dense(self) -> np.ndarray:
        a = np.zeros((self.num_vertices, self.num_vertices))
        rows = np.repeat(np.arange(self.num_vertices), self.k)
        np.add.at(a, (rows, self.neighbors.reshape(-1)), 1.0)
        return a

    def degree_check(self) -> bool:
        """Handshake: every vertex has exactly k incident edge endpoints."""
        a = self.adjacency()
        return bool(np.all(np.asarray(a.sum(axis=1)).ravel() == self.k))

    def is_symmetric(self) -> bool:
        a = self.adjacency()
        return (a != a.T).nnz == 0

    def is_simple(self) -> bool:
        """No loops, no parallel edges."""
        a = self.adjacency()
        if a.diagonal().any():
            return False
        return bool(a.max() <= 1)

    def component_count(self) -> int:
        parent = list(range(self.num_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(self.num_vertices):
            for j in self.neighbors[i]:
                ri, rj = find(i), find(int(j))
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
        return len({find(i) for i in range(self.num_vertices)})


def build_cayley(image: GroupImage, psl: bool = False) -> CayleyGraph:
    """Cayley graph of a complete image with respect to its symbol list.

    With psl=True, each element is identified with its negative before any
    edges are drawn; the fold is well-defined because (-g)s = -(gs).
    """
    if not image.complete:
        raise ValueError("refusing to build a Cayley graph on an incomplete image")
    n, m = image.n, image.modulus
    symbols = image.symbols
    k = len(symbols)

    packable = m ** (n * n) < 2 ** 62 and n * m * m < 2 ** 62
    if packable:
        return _build_numpy(image, psl, n, m, symbols, k)
    return _build_python(image, psl, n, m, symbols, k)


def _build_numpy(image, psl, n, m, symbols, k):
    powers = (m ** np.arange(n * n, dtype=np.int64)).astype(np.int64)
    keys = np.array(sorted(image.table.keys()), dtype=np.int64)
    digits = (keys[:, None] // powers[None, :]) % m
    mats = digits.reshape(-1, n, n)

    def pack(batch):
        return batch.reshape(-1, n * n) @ powers

    if psl:
        neg_keys = pack((-mats) % m)
        canon = np.minimum(keys, neg_keys)
        vertex_keys = np.unique(canon)
        reps = vertex_keys  # the canonical key is itself an element's key
        digits = (reps[:, None] // powers[None, :]) % m
        mats = digits.reshape(-1, n, n)
    else:
        vertex_keys = keys
    index = {int(key): i for i, key in enumerate(vertex_keys)}
    V = len(vertex_keys)
    neighbors = np.empty((V, k), dtype=np.int64)
    for si, s in enumerate(symbols):
        s_np = np.array(s.entries, dtype=np.int64)
        prod = (mats @ s_np) % m
        pk = pack(prod)
        if psl:
            pk = np.minimum(pk, pack((-prod) % m))
        neighbors[:, si] = [index[int(x)] for x in pk]
    neighbors.sort(axis=1)
    return CayleyGraph(
        num_vertices=V,
        k=k,
        neighbors=neighbors,
        psl=psl,
        modulus=m,
        vertex_keys=[int(x) for x in vertex_keys],
    )


def _build_python(image, psl, n, m, symbols, k):
    def canon_key(mat: ModMatrix) -> int:
        if not psl:
            return mat.key()
        return min(mat.key(), (-mat).key())

    elems = {}
    for key in image.table:
        mat = ModMatrix.from_key(key, n, m)
        ck = canon_key(mat)
        if ck not in elems:
            elems[ck] = ModMatrix.from_key(ck, n, m)
    vertex_keys = sorted(elems)
    index = {key: i for i, key in enumerate(vertex_keys)}
    V = len(vertex_keys)
    neighbors = np.empty((V, k), dtype=np.int64)
    for i, key in enumerate(vertex_keys):
        g = elems[key]
        for si, s in enumerate(symbols):
            neighbors[i, si] = index[canon_key(g @ s)]
    neighbors.sort(axis=1)
    return CayleyGraph(
        num_vertices=V, k=k, neighbors=neighbors, psl=psl, modulus=m,
        vertex_keys=vertex_keys,
    )


def from_neighbor_lists(lists) -> CayleyGraph:
    """Build a k-regular graph from explicit neighbor lists (for tests/demos)."""
    k = len(lists[0])
    if any(len(row) != k for row in lists):
        raise ValueError("graph is not regular")
    neighbors = np.array([sorted(row) for row in lists], dtype=np.int64)
    return CayleyGraph(num_vertices=len(lists), k=k, neighbors=neighbors)


def cycle_graph(n: int) -> CayleyGraph:
    return from_neighbor_lists([[(i - 1) % n, (i + 1) % n] for i in range(n)])


def complete_graph(n: int) -> CayleyGraph:
    return from_neighbor_lists([[j for j in range(n) if j != i] for i in range(n)])


def disjoint_union(a: CayleyGraph, b: CayleyGraph) -> CayleyGraph:
    if a.k != b.k:
        raise ValueError("regularity mismatch")
    shifted = b.neighbors + a.num_vertices
    return CayleyGraph(
        num_vertices=a.num_vertices + b.num_vertices,
        k=a.k,
        neighbors=np.vstack([a.neighbors, shifted]),
    )
