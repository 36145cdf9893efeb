"""Simple undirected labeled graphs and their edit operations.

Adjacency is kept as one neighbor bit mask per vertex (diagonal excluded).
Graphs are immutable; every edit returns a new graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError
from .gf2 import BitMatrix, BitVector


@dataclass(frozen=True)
class Graph:
    """Loop-free undirected graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"graph must have at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise InputError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, m in enumerate(self.adj):
            if m < 0 or m & ~full:
                raise InputError(f"adjacency mask of vertex {u} references vertices out of range")
            if (m >> u) & 1:
                raise InputError(f"loop at vertex {u}")
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if ((self.adj[u] >> v) & 1) != ((self.adj[v] >> u) & 1):
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = [0] * n
        seen = set()
        for idx, edge in enumerate(edges):
            if len(edge) != 2:
                raise InputError(f"edge #{idx} must be a pair, got {edge!r}")
            u, v = edge
            if not (isinstance(u, int) and isinstance(v, int)):
                raise InputError(f"edge #{idx} endpoints must be integers, got {edge!r}")
            if u == v:
                raise InputError(f"edge #{idx} is a loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge #{idx} endpoint out of range for n={n}: ({u},{v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"duplicate edge #{idx}: ({u},{v})")
            seen.add(key)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return self.adj[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not (self.adj[u] >> v) & 1
        ]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def is_even_graph(self) -> bool:
        """True when every vertex degree is even."""
        return all(m.bit_count() % 2 == 0 for m in self.adj)

    def neighbors(self, u: int) -> list[int]:
        self._check_vertex(u)
        return [v for v in range(self.n) if (self.adj[u] >> v) & 1]

    def closed_neighborhood(self, u: int) -> BitVector:
        self._check_vertex(u)
        return BitVector(self.n, self.adj[u] | (1 << u))

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise InputError(f"vertex {u} out of range for n={self.n}")


@dataclass(frozen=True)
class StarSpec:
    """Two disjoint vertex sets defining a star edge edit."""

    a1: frozenset[int]
    a2: frozenset[int]

    def __init__(self, a1: Iterable[int], a2: Iterable[int]):
        object.__setattr__(self, "a1", frozenset(a1))
        object.__setattr__(self, "a2", frozenset(a2))
        if self.a1 & self.a2:
            overlap = sorted(self.a1 & self.a2)
            raise InputError(f"star sets must be disjoint, both contain {overlap}")

    def validate_for(self, graph: Graph) -> None:
        for v in self.a1 | self.a2:
            if not 0 <= v < graph.n:
                raise InputError(f"vertex {v} out of range for n={graph.n}")


def parse_graph(text: str | bytes | dict) -> Graph:
    """Parse the graph JSON document {"n": int>=1, "edges": [[u,v],...]}."""
    if isinstance(text, (str, bytes)):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
    else:
        doc = text
    if not isinstance(doc, dict):
        raise InputError("graph document must be a JSON object")
    unknown = set(doc) - {"n", "edges"}
    if unknown:
        raise InputError(f"unknown graph document keys: {sorted(unknown)}")
    if "n" not in doc:
        raise InputError('graph document is missing "n"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f'"n" must be an integer >= 1, got {n!r}')
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise InputError('"edges" must be a list of pairs')
    return Graph.from_edges(n, edges)


def closed_neighborhood_matrix(graph: Graph) -> BitMatrix:
    """Symmetric n x n matrix with all-ones diagonal; row i marks vertex i
    together with its neighbors."""
    return BitMatrix(graph.n, graph.n, [graph.adj[u] | (1 << u) for u in range(graph.n)])


def toggle_edge(graph: Graph, u: int, v: int) -> Graph:
    """Add the edge uv when absent, remove it when present."""
    if u == v:
        raise InputError(f"cannot toggle a loop at vertex {u}")
    graph._check_vertex(u)
    graph._check_vertex(v)
    adj = list(graph.adj)
    adj[u] ^= 1 << v
    adj[v] ^= 1 << u
    return Graph(graph.n, tuple(adj))


def star_operation(graph: Graph, spec: StarSpec) -> Graph:
    """Toggle every edge between spec.a1 and spec.a2."""
    spec.validate_for(graph)
    mask1 = 0
    for v in spec.a1:
        mask1 |= 1 << v
    mask2 = 0
    for v in spec.a2:
        mask2 |= 1 << v
    adj = list(graph.adj)
    for u in spec.a1:
        adj[u] ^= mask2
    for v in spec.a2:
        adj[v] ^= mask1
    return Graph(graph.n, tuple(adj))


def path_graph(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    _check_size(n)
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    _check_size(n)
    return Graph.from_edges(n, [])


def grid_graph(rows: int, cols: int) -> Graph:
    """rows x cols grid, vertices numbered row-major."""
    if rows < 1 or cols < 1:
        raise InputError(f"grid dimensions must be >= 1, got {rows}x{cols}")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    if not graphs:
        raise InputError("disjoint union needs at least one part")
    n = sum(g.n for g in graphs)
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(n, edges)


def generate_named(kind: str, params: Sequence) -> Graph:
    """Build a standard graph: path/cycle/complete/empty take [n], grid
    takes [rows, cols], disjoint_union takes a sequence of graphs."""
    if kind == "disjoint_union":
        if not all(isinstance(p, Graph) for p in params):
            raise InputError("disjoint_union params must be graphs")
        return disjoint_union(*params)
    sizes = list(params)
    if not all(isinstance(p, int) and not isinstance(p, bool) for p in sizes):
        raise InputError(f"{kind} params must be integers, got {params!r}")
    if kind == "path":
        return path_graph(*_arity(kind, sizes, 1))
    if kind == "cycle":
        return cycle_graph(*_arity(kind, sizes, 1))
    if kind == "complete":
        return complete_graph(*_arity(kind, sizes, 1))
    if kind == "empty":
        return empty_graph(*_arity(kind, sizes, 1))
    if kind == "grid":
        return grid_graph(*_arity(kind, sizes, 2))
    raise InputError(f"unknown generator kind {kind!r}")


def _arity(kind: str, params: list, count: int) -> list:
    if len(params) != count:
        raise InputError(f"{kind} takes {count} parameter(s), got {len(params)}")
    return params


def _check_size(n: int) -> None:
    if n < 1:
        raise InputError(f"graph size must be >= 1, got {n}")


def pair_index(u: int, v: int, n: int) -> int:
    """Index of the pair (u,v), u<v, in the lexicographic list of all pairs."""
    if not 0 <= u < v < n:
        raise InputError(f"need 0 <= u < v < n, got ({u},{v}) with n={n}")
    # pairs (0,1)...(0,n-1) come first, then (1,2)... etc.
    return u * n - u * (u + 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def labeled_graph(n: int, index: int) -> Graph:
    """Graph number `index` in the fixed labeled enumeration: edge (u,v) is
    present iff bit pair_index(u,v,n) of `index` is set."""
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    m = n * (n - 1) // 2
    if not 0 <= index < (1 << m):
        raise InputError(f"graph index {index} out of range for n={n}")
    adj = [0] * n
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (index >> bit) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            bit += 1
    return Graph(n, tuple(adj))


def graph_index(graph: Graph) -> int:
    """Inverse of labeled_graph: the enumeration index of a graph."""
    index = 0
    for u, v in graph.edges():
        index |= 1 << pair_index(u, v, graph.n)
    return index


def enumerate_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Stream all 2^(n(n-1)/2) labeled graphs on n vertices in index order.
    The [start, stop) range restricts the sweep for partitioned runs."""
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    total = 1 << (n * (n - 1) // 2)
    if stop is None:
        stop = total
    if not (0 <= start <= stop <= total):
        raise InputError(f"invalid enumeration range [{start}, {stop}) for n={n}")
    for k in range(start, stop):
        yield labeled_graph(n, k)


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


# -- graph6 ------------------------------------------------------------

def from_graph6(line: str) -> Graph:
    """Decode one standard graph6 line (no headers, no extensions)."""
    s = line.strip()
    if not s:
        raise InputError("empty graph6 line")
    if s.startswith(">>"):
        raise InputError("graph6 headers are not supported")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= b <= 63 for b in data):
        raise InputError("graph6 characters must be in the range chr(63)..chr(126)")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    else:
        raise InputError("truncated graph6 size field")
    if n < 1:
        raise InputError(f"graph6 line encodes n={n}, need n >= 1")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise InputError(f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6}")
    bits = []
    for b in body:
        for k in range(5, -1, -1):
            bits.append((b >> k) & 1)
    if any(bits[nbits:]):
        raise InputError("graph6 padding bits must be zero")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


def to_graph6(graph: Graph) -> str:
    """Encode in standard graph6 (n < 63 uses the single-byte size form)."""
    n = graph.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if graph.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                  | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    )
    return head + body


def load_graphs(path: str) -> list[Graph]:
    """Load graphs from a file: a JSON document (one graph) or a graph6
    file (one graph per line), chosen by content."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return [parse_graph(text)]
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(from_graph6(line))
        except InputError as exc:
            raise InputError(f"{path}:{lineno}: {exc}") from exc
    if not graphs:
        raise InputError(f"{path}: no graphs found")
    return graphs
