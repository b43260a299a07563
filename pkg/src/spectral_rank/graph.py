"""Simple undirected graphs, blow-ups and the reduced-graph catalog."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph stored as a read-only symmetric boolean matrix."""

    adjacency: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=bool, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("adjacency must be a nonempty square matrix")
        if np.any(np.diag(a)):
            raise ValueError("graph has a loop")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency is not symmetric")
        if self.labels is not None and len(self.labels) != a.shape[0]:
            raise ValueError("one label per vertex required")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError("graph has a loop")
            a[u, v] = a[v, u] = True
        return cls(a, labels)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def m(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    def neighbors(self, v: int) -> set[int]:
        return set(np.flatnonzero(self.adjacency[v]).tolist())

    def degrees(self) -> list[int]:
        return self.adjacency.sum(axis=1).astype(int).tolist()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def int_matrix(self) -> list[list[int]]:
        return self.adjacency.astype(int).tolist()

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in np.flatnonzero(self.adjacency[v]).tolist():
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# --------------------------------------------------------------------------
# Constructions
# --------------------------------------------------------------------------

def check_composition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"composition must be nonempty positive integers, got {parts}")
    return parts


def blocks(parts: Sequence[int]) -> list[list[int]]:
    """Vertex blocks of a blow-up: all copies of v_1 first, then v_2, ..."""
    out, start = [], 0
    for p in parts:
        out.append(list(range(start, start + p)))
        start += p
    return out


def blow_up(base: Graph, parts: Sequence[int]) -> Graph:
    """Replace vertex i of ``base`` by an independent set of ``parts[i]`` copies."""
    parts = check_composition(parts)
    if len(parts) != base.n:
        raise ValueError(f"composition has {len(parts)} parts, base graph has {base.n} vertices")
    owner = np.repeat(np.arange(base.n), parts)
    return Graph(base.adjacency[np.ix_(owner, owner)])


def complete_graph(r: int) -> Graph:
    if r < 1:
        raise ValueError("complete graph needs r >= 1")
    return Graph(~np.eye(r, dtype=bool))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = check_composition(parts)
    return blow_up(complete_graph(len(parts)), parts)


def turan_parts(n: int, r: int) -> tuple[int, ...]:
    if not 1 <= r <= n:
        raise ValueError(f"Turan graph needs 1 <= r <= n, got n={n}, r={r}")
    q, s = divmod(n, r)
    return (q + 1,) * s + (q,) * (r - s)


def turan(n: int, r: int) -> Graph:
    """T(n, r): complete r-partite graph with part sizes as equal as possible."""
    return complete_multipartite(turan_parts(n, r))


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge {u}{v} is not in the graph")
    a = g.adjacency.copy()
    a[u, v] = a[v, u] = False
    return Graph(a, g.labels)


def rotate_edges(g: Graph, v1: int, v2: int, targets: Iterable[int]) -> Graph:
    """Move each edge v1-u onto v2-u for u in ``targets``."""
    targets = list(targets)
    allowed = g.neighbors(v1) - g.neighbors(v2)
    for u in targets:
        if u == v2 or u not in allowed:
            raise ValueError(f"vertex {u} is not in N(v1) \\ N(v2) minus v2")
    a = g.adjacency.copy()
    for u in targets:
        a[v1, u] = a[u, v1] = False
        a[v2, u] = a[u, v2] = True
    return Graph(a, g.labels)


# --------------------------------------------------------------------------
# Cliques and isomorphism (small n only)
# --------------------------------------------------------------------------

def contains_clique(g: Graph, q: int) -> bool:
    """Exact search for a complete subgraph on ``q`` vertices."""
    if q < 1:
        raise ValueError("q must be positive")
    if q == 1:
        return True
    nbrs = [int(sum(1 << w for w in np.flatnonzero(g.adjacency[v]).tolist())) for v in range(g.n)]

    def grow(size: int, cand: int) -> bool:
        if size == q:
            return True
        if size + bin(cand).count("1") < q:
            return False
        while cand:
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            if grow(size + 1, cand & nbrs[v]):
                return True
            if size + bin(cand).count("1") < q:
                return False
        return False

    return grow(0, (1 << g.n) - 1)


def clique_number(g: Graph) -> int:
    q = 1
    while q < g.n and contains_clique(g, q + 1):
        q += 1
    return q


def is_isomorphic(g: Graph, h: Graph, max_n: int = 8) -> bool:
    """Brute-force isomorphism check for small graphs."""
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > max_n:
        raise ValueError(f"brute-force isomorphism is limited to n <= {max_n}")
    a, b = g.adjacency, h.adjacency
    dg, dh = g.degrees(), h.degrees()
    n = g.n
    # vertices may only map to vertices of equal degree
    choices = [[w for w in range(n) if dh[w] == dg[v]] for v in range(n)]

    def extend(v: int, used: set[int], perm: list[int]) -> bool:
        if v == n:
            return True
        for w in choices[v]:
            if w in used:
                continue
            if all(a[v, u] == b[w, perm[u]] for u in range(v)):
                perm.append(w)
                used.add(w)
                if extend(v + 1, used, perm):
                    return True
                perm.pop()
                used.discard(w)
        return False

    return extend(0, set(), [])


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving adjacency (brute force, n <= 8)."""
    if g.n > 8:
        raise ValueError("automorphism search is limited to n <= 8")
    a = g.adjacency
    out = []
    for perm in itertools.permutations(range(g.n)):
        p = list(perm)
        if np.array_equal(a[np.ix_(p, p)], a):
            out.append(perm)
    return out


# --------------------------------------------------------------------------
# Reduced-graph catalog
# --------------------------------------------------------------------------

_K_ID = re.compile(r"^K(\d+)$")


@lru_cache(maxsize=None)
def _catalog_file() -> dict[str, tuple[int, tuple[tuple[int, int], ...], str]]:
    text = resources.files("spectral_rank").joinpath("data/catalog.txt").read_text()
    entries: dict[str, tuple[int, list[tuple[int, int]], str]] = {}
    current = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            m = re.match(r"^\[(\w+)\]\s+(\d+)(?:\s+=\s+(\S+))?$", line)
            if not m:
                raise ValueError(f"bad catalog header: {raw!r}")
            current = m.group(1)
            entries[current] = (int(m.group(2)), [], m.group(3) or "")
        else:
            u, v = (int(t) for t in line.split())
            entries[current][1].append((u - 1, v - 1))
    return {k: (n, tuple(e), d) for k, (n, e, d) in entries.items()}


def catalog_ids() -> list[str]:
    return list(_catalog_file())


def catalog(graph_id: str) -> Graph:
    """Look up a reduced graph ("G1", "G7", "G10", "H1".."H4", "H") or K<r>."""
    m = _K_ID.match(graph_id)
    if m:
        return complete_graph(int(m.group(1)))
    entries = _catalog_file()
    if graph_id not in entries:
        raise KeyError(f"unknown reduced graph id {graph_id!r}")
    n, edges, derived = entries[graph_id]
    if derived:
        # e.g. "G10:1,1,1,1,1,2" means the entry is a blow-up of another entry
        base, parts = parse_family(derived)
        g = blow_up(catalog(base), parts)
        if sorted(g.edges()) != sorted(edges) or g.n != n:
            raise ValueError(f"catalog entry {graph_id} disagrees with its definition {derived}")
        return g
    return Graph.from_edges(n, edges)


def parse_family(spec: str) -> tuple[str, tuple[int, ...] | None]:
    """Split "G1:1,1,1,1,4" into ("G1", (1,1,1,1,4)); a bare id has no parts."""
    spec = spec.strip()
    if ":" not in spec:
        return spec, None
    base, rest = spec.split(":", 1)
    parts = tuple(int(t) for t in rest.replace(" ", "").split(",") if t)
    return base.strip(), check_composition(parts)


def family_graph(spec: str) -> Graph:
    base, parts = parse_family(spec)
    g = catalog(base)
    return g if parts is None else blow_up(g, parts)
