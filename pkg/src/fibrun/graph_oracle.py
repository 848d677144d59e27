"""Ground-truth distances on R_n by breadth-first search over the implicit graph.

The vertex set is held as a sorted array of integer codes; adjacency is a CSR
matrix built once by flipping every coordinate and looking the result up with
``searchsorted``.  Multi-source BFS is delegated to
:func:`scipy.sparse.csgraph.shortest_path` in fixed-size chunks of sources.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import BudgetExceededError, DisconnectedGraphError, InvalidVertexError
from .strings import from_code, hamming, to_code, validate_vertex, vertex_codes

__all__ = [
    "GraphIndex",
    "EccentricityReport",
    "PairCheckReport",
    "build_index",
    "bfs_distances",
    "distance_bfs",
    "eccentricity",
    "diameter_exact",
    "radius_exact",
    "all_pairs_check",
    "EXHAUSTIVE_MAX_N",
]

EXHAUSTIVE_MAX_N = 14
_CHUNK = 256


@dataclass(frozen=True)
class GraphIndex:
    n: int
    codes: np.ndarray
    adjacency: csr_matrix = field(repr=False)

    def __len__(self) -> int:
        return int(self.codes.size)

    @property
    def vertices(self) -> List[str]:
        return [from_code(c, self.n) for c in self.codes.tolist()]

    def vertex(self, i: int) -> str:
        return from_code(int(self.codes[i]), self.n)

    def index_of(self, s: str) -> int:
        validate_vertex(s, self.n)
        c = to_code(s)
        i = int(np.searchsorted(self.codes, c))
        if i >= self.codes.size or self.codes[i] != c:
            raise InvalidVertexError(f"{s!r} is not a vertex of R_{self.n}")
        return i

    def neighbors(self, i: int) -> np.ndarray:
        a = self.adjacency
        return a.indices[a.indptr[i] : a.indptr[i + 1]]

    def degree(self, i: int) -> int:
        a = self.adjacency
        return int(a.indptr[i + 1] - a.indptr[i])

    def edges(self) -> Iterator[Tuple[int, int]]:
        a = self.adjacency.tocoo()
        for i, j in zip(a.row.tolist(), a.col.tolist()):
            if i < j:
                yield i, j


@dataclass
class EccentricityReport:
    vertex: str
    eccentricity: int
    farthest: List[str]


@dataclass
class PairCheckReport:
    n: int
    pairs_checked: int
    mismatches: List[dict]
    seed: Optional[int] = None
    mode: str = "exhaustive"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pairs_checked": self.pairs_checked,
            "mismatches": self.mismatches,
            "seed": self.seed,
        }


def build_index(n: int, max_vertices: int | None = None, check_connected: bool = True) -> GraphIndex:
    codes = vertex_codes(n, max_vertices)
    size = codes.size
    rows, cols = [], []
    for bit in range(n):
        flipped = codes ^ (1 << bit)
        pos = np.searchsorted(codes, flipped)
        pos_c = np.minimum(pos, size - 1)
        hit = (pos < size) & (codes[pos_c] == flipped)
        rows.append(np.nonzero(hit)[0])
        cols.append(pos[hit])
    row = np.concatenate(rows) if rows else np.zeros(0, dtype=np.int64)
    col = np.concatenate(cols) if cols else np.zeros(0, dtype=np.int64)
    adj = csr_matrix((np.ones(row.size, dtype=np.int8), (row, col)), shape=(size, size))
    adj.sort_indices()
    index = GraphIndex(n=n, codes=codes, adjacency=adj)
    if check_connected and size > 1:
        dist = bfs_distances(index, [0])[0]
        if (dist < 0).any():
            raise DisconnectedGraphError(f"R_{n} is not connected")
    return index


def bfs_distances(index: GraphIndex, sources: Sequence[int]) -> np.ndarray:
    """Distance rows (``int32``, ``-1`` for unreachable) from each source index."""
    sources = np.asarray(sources, dtype=np.int64)
    if index.adjacency.nnz == 0:
        out = np.full((sources.size, len(index)), -1, dtype=np.int32)
        out[np.arange(sources.size), sources] = 0
        return out
    d = shortest_path(index.adjacency, directed=False, unweighted=True, indices=sources)
    d = np.atleast_2d(d)
    out = np.where(np.isinf(d), -1, d).astype(np.int32)
    return out


def _chunks(total: int, size: int = _CHUNK) -> List[np.ndarray]:
    return [np.arange(s, min(s + size, total)) for s in range(0, total, size)]


def distance_bfs(index: GraphIndex, u: str, v: str) -> int:
    i, j = index.index_of(u), index.index_of(v)
    return int(bfs_distances(index, [i])[0, j])


def eccentricity(index: GraphIndex, v: str) -> EccentricityReport:
    i = index.index_of(v)
    dist = bfs_distances(index, [i])[0]
    ecc = int(dist.max())
    far = [index.vertex(int(k)) for k in np.nonzero(dist == ecc)[0]]
    return EccentricityReport(vertex=v, eccentricity=ecc, farthest=far)


def _eccentricities(index: GraphIndex, time_budget: float | None, jobs: int):
    """Eccentricity array plus, per source, the first farthest target."""
    size = len(index)
    ecc = np.full(size, -1, dtype=np.int32)
    far = np.full(size, -1, dtype=np.int64)
    start = time.monotonic()

    def work(chunk, dist):
        return chunk, dist.max(axis=1), dist.argmax(axis=1)

    chunks = _chunks(size)
    jobs = max(1, jobs)
    pool = ThreadPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        # batches of `jobs` chunks; the budget is checked between batches
        for at in range(0, len(chunks), jobs):
            if time_budget is not None and time.monotonic() - start > time_budget:
                raise BudgetExceededError(
                    f"time budget of {time_budget}s exceeded after {int((ecc >= 0).sum())} of {size} sources",
                    partial=(ecc, far),
                )
            batch = chunks[at : at + jobs]
            run = lambda c: work(c, bfs_distances(index, c))  # noqa: E731
            for chunk, e, f in (pool.map(run, batch) if pool else map(run, batch)):
                ecc[chunk], far[chunk] = e, f
    finally:
        if pool:
            pool.shutdown()
    return ecc, far


def diameter_exact(
    index: GraphIndex, time_budget: float | None = None, jobs: int = 1
) -> Tuple[int, Tuple[str, str]]:
    """Exact diameter and the first (source-order) pair attaining it."""
    ecc, far = _eccentricities(index, time_budget, jobs)
    src = int(ecc.argmax())
    return int(ecc[src]), (index.vertex(src), index.vertex(int(far[src])))


def radius_exact(index: GraphIndex, time_budget: float | None = None, jobs: int = 1) -> Tuple[int, int]:
    """Exact radius and the number of central vertices."""
    ecc, _ = _eccentricities(index, time_budget, jobs)
    rad = int(ecc.min())
    return rad, int((ecc == rad).sum())


def all_pairs_check(
    index: GraphIndex,
    formula: Callable[[str, str], int],
    *,
    exhaustive_max_n: int = EXHAUSTIVE_MAX_N,
    sources: int = 200,
    targets_per_source: int = 500,
    seed: int = 0,
    max_report: int = 50,
) -> PairCheckReport:
    """Compare ``formula(u, v)`` against BFS distances.

    Up to ``exhaustive_max_n`` every unordered pair is checked.  Beyond it,
    ``sources`` random sources are drawn and each is paired with
    ``targets_per_source`` random targets, all from ``random.Random(seed)``.
    """
    n = index.n
    verts = index.vertices
    mismatches: List[dict] = []
    checked = 0

    def note(i, j, bfs, val):
        if len(mismatches) < max_report:
            mismatches.append({"u": verts[i], "v": verts[j], "bfs": int(bfs), "formula": int(val)})

    size = len(index)
    if n <= exhaustive_max_n:
        for chunk in _chunks(size):
            dist = bfs_distances(index, chunk)
            for row, i in enumerate(chunk.tolist()):
                u = verts[i]
                drow = dist[row]
                for j in range(i, size):
                    val = formula(u, verts[j])
                    checked += 1
                    if val != drow[j]:
                        note(i, j, drow[j], val)
        return PairCheckReport(n=n, pairs_checked=checked, mismatches=mismatches, seed=None, mode="exhaustive")

    rng = random.Random(seed)
    src = sorted(rng.sample(range(size), min(sources, size)))
    plan = [(s, [rng.randrange(size) for _ in range(targets_per_source)]) for s in src]
    for start in range(0, len(plan), _CHUNK):
        block = plan[start : start + _CHUNK]
        dist = bfs_distances(index, [s for s, _ in block])
        for row, (i, targets) in enumerate(block):
            u = verts[i]
            for j in targets:
                val = formula(u, verts[j])
                checked += 1
                if val != dist[row, j]:
                    note(i, j, dist[row, j], val)
    return PairCheckReport(n=n, pairs_checked=checked, mismatches=mismatches, seed=seed, mode="sampled")


def hamming_formula(u: str, v: str) -> int:
    return hamming(u, v)
