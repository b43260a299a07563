"""graph6 encoding (McKay's format) for simple undirected graphs."""

from __future__ import annotations

from importlib import resources
from typing import Iterator

import numpy as np

from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ValueError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise ValueError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _upper_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    # column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
    rows = [i for j in range(1, n) for i in range(j)]
    cols = [j for j in range(1, n) for i in range(j)]
    return np.array(rows, dtype=int), np.array(cols, dtype=int)


def to_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    i, j = _upper_pairs(n)
    bits = g.adjacency[i, j].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8) if len(bits) else []
    body = _encode_n(n) + bytes(int(v) + 63 for v in groups)
    return (HEADER if header else "") + body.decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError(f"invalid graph6 character in {text!r}")
    n, off = _decode_n(data)
    if n < 1:
        raise ValueError("graph6 string encodes an empty graph")
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    body = data[off:]
    if len(body) != nbytes:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {nbytes}")
    vals = np.frombuffer(body, dtype=np.uint8).astype(np.int64) - 63
    bits = ((vals[:, None] >> np.arange(5, -1, -1)) & 1).ravel()
    if bits[npairs:].any():
        raise ValueError("nonzero padding bits in graph6 string")
    a = np.zeros((n, n), dtype=bool)
    i, j = _upper_pairs(n)
    a[i, j] = bits[:npairs].astype(bool)
    a |= a.T
    return Graph(a)


def read_corpus(text: str) -> Iterator[str]:
    """graph6 strings of a corpus file; blank lines and ``#`` comments are skipped."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def bundled_corpus() -> list[tuple[str, str]]:
    """(graph6, label) pairs from the corpus shipped with the package."""
    text = resources.files("spectral_rank").joinpath("data/corpus.g6").read_text()
    out = []
    for raw in text.splitlines():
        code, _, label = raw.partition("#")
        if code.strip():
            out.append((code.strip(), label.strip()))
    return out
