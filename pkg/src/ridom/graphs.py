"""Bit-packed simple graphs with a graph6 codec and small-graph enumeration.

Vertices are integers ``0..n-1`` and the adjacency structure is one int bit
row per vertex, so neighborhood algebra is plain integer arithmetic.  Graphs
are immutable and safe to share across worker processes.  Everything here is
capped at 64 vertices; the codec and the canonical form have tighter caps and
reject larger inputs loudly instead of degrading.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62
CANONICAL_MAX_VERTICES = 8
LABELED_ENUM_MAX_VERTICES = 7

_GRAPH6_HEADER = ">>graph6<<"


class UnsupportedSizeError(ValueError):
    """An operation was asked to exceed its documented vertex-count cap."""


class Graph6ParseError(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position in the line."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"byte {offset}: {message}")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` vertices as a tuple of bit rows.

    ``adj[v]`` has bit ``u`` set iff ``uv`` is an edge.  Rows must be
    symmetric and loop-free; construction validates this.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(~row & full & ~(1 << v) for v, row in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex renaming ``perm`` where ``perm[old] = new``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    rows = [0] * g.n
    for old, row in enumerate(g.adj):
        for u in bits(row):
            rows[perm[old]] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"union has {g.n + h.n} vertices, cap is {MAX_VERTICES}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def induced_subgraph(g: Graph, vertex_mask: int) -> tuple[Graph, tuple[int, ...]]:
    """Restrict ``g`` to the vertices of ``vertex_mask``.

    Returns the subgraph plus the map from new indices to original ones
    (ascending, so relative vertex order is preserved).
    """
    if vertex_mask & ~g.full_mask:
        raise ValueError("vertex mask has bits outside the graph")
    vmap = tuple(bits(vertex_mask))
    pos = {v: i for i, v in enumerate(vmap)}
    rows = []
    for v in vmap:
        row = 0
        for u in bits(g.adj[v] & vertex_mask):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(vmap), tuple(rows)), vmap


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components as (subgraph, original-index map) pairs."""

    parts: tuple[tuple[Graph, tuple[int, ...]], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(part.n for part, _ in self.parts)


def components(g: Graph) -> ComponentDecomposition:
    """Split ``g`` into connected components, ordered by smallest vertex."""
    remaining = g.full_mask
    parts = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= grow
        parts.append(induced_subgraph(g, comp))
        remaining &= ~comp
    return ComponentDecomposition(tuple(parts))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~comp
        comp |= grow
    return comp == g.full_mask


def prism_product(g: Graph, k: int) -> Graph:
    """Product of ``g`` with a complete graph on ``k`` layer indices.

    Vertex ``(v, i)`` for ``v`` in ``g`` and ``i`` in ``1..k`` maps to index
    ``v*k + (i-1)``; two vertices are adjacent iff they share the vertex and
    differ in layer, or share the layer across an edge of ``g``.  With
    ``k = 1`` this is ``g`` itself.
    """
    if k < 1:
        raise ValueError("layer count k must be at least 1")
    if g.n * k > MAX_VERTICES:
        raise UnsupportedSizeError(f"product has {g.n * k} vertices, cap is {MAX_VERTICES}")
    rows = []
    for v in range(g.n):
        layer_block = ((1 << k) - 1) << (v * k)
        for i in range(k):
            row = layer_block & ~(1 << (v * k + i))
            for u in bits(g.adj[v]):
                row |= 1 << (u * k + i)
            rows.append(row)
    return Graph(g.n * k, tuple(rows))


# ---------------------------------------------------------------------------
# named constructions


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` pendant vertices."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def star_plus_edge(leaves: int) -> Graph:
    """Star on ``leaves >= 2`` pendants with one extra edge between leaves 1 and 2."""
    if leaves < 2:
        raise ValueError("need at least two leaves to join")
    g = star_graph(leaves)
    rows = list(g.adj)
    rows[1] |= 1 << 2
    rows[2] |= 1 << 1
    return Graph(g.n, tuple(rows))


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centers carrying ``a`` and ``b`` leaves (``a >= b >= 0``).

    Vertex layout: center 0 with leaves ``1..a``, center ``a+1`` with leaves
    ``a+2..a+b+1``.
    """
    if not a >= b >= 0:
        raise ValueError("leaf counts must satisfy a >= b >= 0")
    n = a + b + 2
    edges = [(0, a + 1)]
    edges += [(0, i) for i in range(1, a + 1)]
    edges += [(a + 1, i) for i in range(a + 2, n)]
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6 codec (short form only) and the edge-list text format


def _triangle_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 bit order: column-major upper triangle
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 line (optionally ``>>graph6<<``-prefixed).

    Raises :class:`Graph6ParseError` naming the offending byte offset for
    every malformed case, including nonzero padding and trailing bytes.
    """
    text = line.rstrip("\r\n")
    base = 0
    if text.startswith(_GRAPH6_HEADER):
        base = len(_GRAPH6_HEADER)
        text = text[base:]
    if not text:
        raise Graph6ParseError("empty graph6 line", base)
    head = ord(text[0])
    if head == 126:
        raise Graph6ParseError("long-form vertex counts (n > 62) are unsupported", base)
    if not 63 <= head <= 125:
        raise Graph6ParseError(f"invalid size byte {text[0]!r}", base)
    n = head - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - 1 < need:
        raise Graph6ParseError(
            f"truncated bit section: need {need} bytes, got {len(text) - 1}",
            base + len(text),
        )
    if len(text) - 1 > need:
        raise Graph6ParseError("trailing bytes after bit section", base + 1 + need)
    bitstream = 0
    for i, ch in enumerate(text[1:]):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6ParseError(f"byte {ch!r} outside graph6 alphabet", base + 1 + i)
        bitstream = bitstream << 6 | val
    pad = 6 * need - nbits
    if pad and bitstream & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", base + need)
    bitstream >>= pad
    rows = [0] * n
    for t, (i, j) in enumerate(_triangle_pairs(n)):
        if bitstream >> (nbits - 1 - t) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Encode in short-form graph6; rejects graphs above 62 vertices."""
    if g.n > GRAPH6_MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short form caps at {GRAPH6_MAX_VERTICES} vertices")
    n = g.n
    nbits = n * (n - 1) // 2
    stream = 0
    for i, j in _triangle_pairs(n):
        stream = stream << 1 | (g.adj[i] >> j & 1)
    pad = (6 - nbits % 6) % 6
    stream <<= pad
    chars = [chr(63 + n)]
    for shift in range(nbits + pad - 6, -1, -6):
        chars.append(chr(63 + (stream >> shift & 63)))
    return "".join(chars)


_EDGE_HEADER_RE = re.compile(r"\s*\d+\s+\d+\s*$")


def looks_like_edge_list(first_line: str) -> bool:
    return bool(_EDGE_HEADER_RE.match(first_line))


def parse_edge_list(text: str) -> Graph:
    """Decode the plain text format: a ``n m`` header then ``m`` ``u v`` lines."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise ValueError(f"bad edge-list header {lines[0]!r}, expected 'n m'")
    n, m = int(header[0]), int(header[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(lines) - 1} edge lines")
    edges = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 2 or not all(tok.isdigit() for tok in toks):
            raise ValueError(f"bad edge line {ln!r}, expected 'u v'")
        edges.append((int(toks[0]), int(toks[1])))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# enumeration and exact canonical forms


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs in edge-mask counter order."""
    if not 0 <= n <= LABELED_ENUM_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"labeled enumeration caps at {LABELED_ENUM_MAX_VERTICES} vertices"
        )
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def _twin_classes(g: Graph) -> list[int]:
    # Vertices with identical rows (non-adjacent twins) or identical closed
    # neighborhoods (adjacent twins) are swappable by an automorphism, so the
    # ordering search only needs one representative per class.
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.adj[u] == g.adj[v] or g.adj[u] | 1 << u == g.adj[v] | 1 << v:
                parent[find(u)] = find(v)
    return [find(v) for v in range(g.n)]


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: the minimal upper-triangle bit string.

    The value is the lexicographic minimum, over all vertex orderings, of the
    column-major upper-triangle adjacency bits, packed into bytes behind a
    leading vertex-count byte.  Two graphs compare equal exactly when they are
    isomorphic.  Exhaustive over orderings (with prefix pruning and twin
    skipping), hence the hard cap of 8 vertices.
    """
    if g.n > CANONICAL_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"canonical form caps at {CANONICAL_MAX_VERTICES} vertices"
        )
    n = g.n
    if n <= 1:
        return bytes([n])
    adj = g.adj
    total_bits = n * (n - 1) // 2
    class_id = _twin_classes(g)
    best: Optional[int] = None
    placed: list[int] = []

    def descend(prefix: int, done_bits: int, placed_mask: int) -> None:
        nonlocal best
        depth = len(placed)
        if depth == n:
            if best is None or prefix < best:
                best = prefix
            return
        cands = []
        seen_classes = set()
        for c in range(n):
            if placed_mask >> c & 1:
                continue
            cid = class_id[c]
            if cid in seen_classes:
                continue
            seen_classes.add(cid)
            col = 0
            row = adj[c]
            for p in placed:
                col = col << 1 | (row >> p & 1)
            cands.append((col, c))
        cands.sort()
        for col, c in cands:
            new_prefix = prefix << depth | col
            nb = done_bits + depth
            if best is not None and new_prefix > best >> (total_bits - nb):
                break
            placed.append(c)
            descend(new_prefix, nb, placed_mask | 1 << c)
            placed.pop()

    descend(0, 0, 0)
    assert best is not None
    return bytes([n]) + best.to_bytes((total_bits + 7) // 8, "big")


def _with_new_vertex(g: Graph, nbr_mask: int) -> Graph:
    rows = [row | ((nbr_mask >> v & 1) << g.n) for v, row in enumerate(g.adj)]
    rows.append(nbr_mask)
    return Graph(g.n + 1, tuple(rows))


@lru_cache(maxsize=None)
def enumerate_nonisomorphic(n: int, connected: bool = False) -> tuple[Graph, ...]:
    """One representative per isomorphism class on exactly ``n`` vertices.

    Built self-containedly by extending the (n-1)-vertex classes with every
    possible new-vertex neighborhood and deduplicating on canonical form, so
    no external enumerator output is required.  Deterministic order (sorted
    by canonical key).  Capped with canonical_form at 8 vertices.
    """
    if connected:
        return tuple(g for g in enumerate_nonisomorphic(n) if is_connected(g))
    if n > CANONICAL_MAX_VERTICES:
        raise UnsupportedSizeError(
            f"non-isomorphic enumeration caps at {CANONICAL_MAX_VERTICES} vertices"
        )
    if n == 0:
        return (Graph.empty(0),)
    reps: dict[bytes, Graph] = {}
    for g in enumerate_nonisomorphic(n - 1):
        for mask in range(1 << (n - 1)):
            h = _with_new_vertex(g, mask)
            key = canonical_form(h)
            if key not in reps:
                reps[key] = h
    return tuple(reps[key] for key in sorted(reps))
