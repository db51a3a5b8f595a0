"""Simple undirected graphs: construction, text formats, families, enumeration.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``. Pair ordinals follow the graph6 column-major
upper-triangle order ``(0,1), (0,2), (1,2), (0,3), ...`` and the same
ordinal indexes the bits of the edge masks used by the enumerator.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "GraphFamily",
    "ParseError",
    "FAMILY_KINDS",
    "KNOWN_CONNECTED_COUNTS",
    "MAX_ENUM_N",
    "MAX_GRAPH6_N",
    "connected_masks",
    "enumerate_connected",
    "generate_family",
    "pair_list",
    "parse_edge_list",
    "parse_graph6",
    "write_graph6",
]

MAX_GRAPH6_N = 62
MAX_ENUM_N = 7

# Labeled connected graphs on n vertices, n = 1..7 (OEIS A001187).
KNOWN_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


class GraphError(ValueError):
    """Invalid graph construction or parameters."""


class ParseError(GraphError):
    """Malformed edge-list or graph6 input."""


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs ``(i, j)``, ``i < j``, in graph6 column-major order."""
    return [(i, j) for j in range(1, n) for i in range(j)]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        normalized = set()
        for edge in self.edges:
            u, v = edge
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {edge} has an endpoint outside [0, {self.n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Graph whose edge set is the set bits of ``mask`` (pair ordinals)."""
        pairs = pair_list(n)
        if mask < 0 or mask >> len(pairs):
            raise GraphError(f"edge mask {mask} out of range for n={n}")
        return cls(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.neighbors]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_mask(self) -> int:
        index = {p: k for k, p in enumerate(pair_list(self.n))}
        return sum(1 << index[e] for e in self.edges)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph(self.n, frozenset((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# ---------------------------------------------------------------------------
# Edge-list format
# ---------------------------------------------------------------------------

def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token in {line!r}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    header = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if header is None:
            header = _parse_ints(line, lineno, 2)
            n, m = header
            if n < 1 or m < 0:
                raise ParseError(f"line {lineno}: invalid header {line!r}")
            continue
        u, v = _parse_ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range [0, {n}) in {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header line")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were listed")
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# graph6 (short form only)
# ---------------------------------------------------------------------------

_GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(_GRAPH6_HEADER):
        data = data[len(_GRAPH6_HEADER):]
    if not data:
        raise ParseError("empty graph6 string")
    for ch in data:
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r}")
    n = ord(data[0]) - 63
    if n == 63:
        raise ParseError(f"graph6 long-form n field unsupported (n > {MAX_GRAPH6_N})")
    if n < 1:
        raise ParseError("graph6 n field encodes an empty graph")
    pairs = pair_list(n)
    nchars = -(-len(pairs) // 6)
    body = data[1:]
    if len(body) < nchars:
        raise ParseError(f"truncated graph6 bit vector: need {nchars} chars, got {len(body)}")
    if len(body) > nchars:
        raise ParseError(f"trailing data after graph6 bit vector: {body[nchars:]!r}")
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = 6 * nchars - len(pairs)
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits in graph6 string")
    bits >>= pad
    k = len(pairs)
    edges = [p for i, p in enumerate(pairs) if bits >> (k - 1 - i) & 1]
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    if not 1 <= g.n <= MAX_GRAPH6_N:
        raise GraphError(f"graph6 short form supports 1 <= n <= {MAX_GRAPH6_N}, got {g.n}")
    pairs = pair_list(g.n)
    bits = [1 if p in g.edges else 0 for p in pairs]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i:i + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

FAMILY_KINDS = {
    "complete": 1,
    "complete_bipartite": 2,
    "path": 1,
    "cycle": 1,
    "star": 1,
}


@dataclass(frozen=True)
class GraphFamily:
    """A named family member, e.g. ``GraphFamily("complete_bipartite", (2, 3))``.

    ``star(k)`` is the star with ``k`` leaves (``k + 1`` vertices).
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family {self.kind!r}; choose from {sorted(FAMILY_KINDS)}")
        if len(self.params) != FAMILY_KINDS[self.kind]:
            raise GraphError(
                f"family {self.kind!r} takes {FAMILY_KINDS[self.kind]} parameter(s), "
                f"got {len(self.params)}"
            )
        if any(not isinstance(p, int) or p < 1 for p in self.params):
            raise GraphError(f"family parameters must be positive integers, got {self.params}")
        if self.kind == "cycle" and self.params[0] < 3:
            raise GraphError("cycle needs at least 3 vertices")

    @property
    def label(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"


def generate_family(f: GraphFamily) -> Graph:
    kind, params = f.kind, f.params
    if kind == "complete":
        (n,) = params
        return Graph.from_edges(n, pair_list(n))
    if kind == "complete_bipartite":
        a, b = params
        return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    if kind == "path":
        (n,) = params
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        (n,) = params
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    (k,) = params
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------

def _mask_connected(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    adj = [0] * n
    k = 0
    while mask:
        if mask & 1:
            i, j = pairs[k]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        mask >>= 1
        k += 1
    full = (1 << n) - 1
    seen = 1
    frontier = deque([0])
    while frontier:
        new = adj[frontier.popleft()] & ~seen
        seen |= new
        while new:
            low = new & -new
            frontier.append(low.bit_length() - 1)
            new ^= low
    return seen == full


def connected_masks(n: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Edge masks in ``[start, stop)`` whose graphs are connected, ascending."""
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    pairs = pair_list(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(max(start, 0), stop):
        if _mask_connected(n, mask, pairs):
            yield mask


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labeled connected graph on ``n`` vertices, in edge-mask order."""
    for mask in connected_masks(n):
        yield Graph.from_mask(n, mask)
