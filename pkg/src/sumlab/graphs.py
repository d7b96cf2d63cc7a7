"""Immutable simple graphs with graph6 I/O and small-graph structure queries.

Vertices are always the dense integers 0..n-1 so that solvers can use
array-indexed adjacency.  All query functions here are pure and the Graph
object is safe to share across worker processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


class Graph6Error(GraphError):
    """Malformed graph6 text; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class EdgeListError(GraphError):
    """Malformed edge-list text; ``line`` is the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line


class UnsupportedSizeError(GraphError):
    """Input graph is outside the size range an operation supports."""


class Graph:
    """Simple undirected graph on vertices 0..n-1 with a frozen edge set.

    Loops are rejected, duplicate edges collapse, and each edge is stored
    once as an ordered pair (u < v).  Instances are immutable and hashable.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        dedup: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            dedup.add((u, v) if u < v else (v, u))
        self._n = n
        self._edges: tuple[tuple[int, int], ...] = tuple(sorted(dedup))
        self._adj: tuple[tuple[int, ...], ...] | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            nbrs: list[list[int]] = [[] for _ in range(self._n)]
            for u, v in self._edges:
                nbrs[u].append(v)
                nbrs[v].append(u)
            self._adj = tuple(tuple(sorted(b)) for b in nbrs)
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u] if 0 <= u < self._n and 0 <= v < self._n else False

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62): one printable line per graph.  The first byte
# is n+63; the upper triangle of the adjacency matrix follows in column-major
# order (x01, x02, x12, x03, ...), packed big-endian into 6-bit groups, each
# group offset by 63.  An optional ">>graph6<<" prefix is tolerated.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise UnsupportedSizeError("graph6 short form supports at most 62 vertices")
    out = [chr(g.n + 63)]
    edge_set = frozenset(g.edges)
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((i, j) in edge_set)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 line")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside printable graph6 range", pos)
    first = ord(text[0]) - 63
    if first == 63:
        raise Graph6Error("multi-byte vertex counts (n > 62) are not supported", 0)
    n = first
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit body: need {nbytes} bytes, got {len(body)}", len(text)
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit body", 1 + nbytes)
    bits = 0
    for ch in body:
        bits = (bits << 6) | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(text) - 1)
    bits >>= pad
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Parse the line-oriented edge-list format: ``n <count>`` then ``u v`` pairs."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise EdgeListError("expected header 'n <count>'", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise EdgeListError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 0:
                raise EdgeListError("vertex count must be nonnegative", lineno)
            continue
        if len(tokens) != 2:
            raise EdgeListError("expected edge line 'u v'", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(f"bad vertex token in {raw!r}", lineno) from None
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"vertex id outside 0..{n - 1}", lineno)
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing 'n <count>' header", 1)
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Degrees
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeSequence:
    """Nondecreasing vertex degrees; ``delta(k)`` is the k-th smallest (1-based)."""

    degrees: tuple[int, ...]

    def delta(self, k: int) -> int:
        if not 1 <= k <= len(self.degrees):
            raise GraphError(f"delta index {k} outside 1..{len(self.degrees)}")
        return self.degrees[k - 1]

    @property
    def min_degree(self) -> int:
        return self.degrees[0] if self.degrees else 0

    def __len__(self) -> int:
        return len(self.degrees)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(len(g.adj[v]) for v in range(g.n))))


# ---------------------------------------------------------------------------
# Bipartiteness with certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BipartiteResult:
    """Either a proper 2-colouring or an odd cycle (as a vertex list)."""

    bipartite: bool
    colouring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None


def is_bipartite(g: Graph) -> BipartiteResult:
    colour = [-1] * g.n
    parent = [-1] * g.n
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = [start]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in g.adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return BipartiteResult(False, None, _odd_cycle(parent, v, w))
    return BipartiteResult(True, tuple(colour), None)


def _odd_cycle(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    def root_path(x: int) -> list[int]:
        path = [x]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    pu, pv = root_path(u), root_path(v)
    i = 0
    while i < len(pu) and i < len(pv) and pu[i] == pv[i]:
        i += 1
    # pu[i-1] is the lowest common ancestor; the cycle closes on edge (u, v)
    return tuple(pu[i - 1:] + pv[: i - 1: -1])


# ---------------------------------------------------------------------------
# Cycles
# ---------------------------------------------------------------------------

def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    For each edge (u, v), a shortest u-v path avoiding that edge plus the
    edge itself is a shortest cycle through it; the minimum over edges is
    exact because every shortest cycle contains each of its edges.
    """
    best: int | None = None
    for u, v in g.edges:
        dist = [-1] * g.n
        dist[u] = 0
        queue = [u]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            if best is not None and dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if (x == u and y == v) or (x == v and y == u):
                    continue
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if dist[v] != -1 and (best is None or dist[v] + 1 < best):
            best = dist[v] + 1
    return best


def count_cycles_of_length(g: Graph, length: int) -> int:
    """Count simple cycles of exactly the given length, each counted once.

    Enumeration is rooted at each cycle's minimum vertex, extends only to
    vertices larger than the root, and quotients orientation by requiring
    the second vertex to be smaller than the last.
    """
    if length < 3:
        raise GraphError("cycle length must be at least 3")
    adjsets = [frozenset(a) for a in g.adj]
    count = 0
    path = [0] * length
    on_path = [False] * g.n

    def extend(depth: int, root: int) -> int:
        found = 0
        last = path[depth - 1]
        if depth == length:
            if root in adjsets[last] and path[1] < last:
                return 1
            return 0
        for w in g.adj[last]:
            if w > root and not on_path[w]:
                path[depth] = w
                on_path[w] = True
                found += extend(depth + 1, root)
                on_path[w] = False
        return found

    for root in range(g.n):
        path[0] = root
        on_path[root] = True
        count += extend(1, root)
        on_path[root] = False
    return count


# ---------------------------------------------------------------------------
# Canonical forms and enumeration (brute force, desk scale)
# ---------------------------------------------------------------------------

_CANONICAL_MAX_N = 8


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant key: the lexicographically least adjacency
    bit-string over all vertex permutations, in graph6 column-major order,
    returned as the graph6 encoding of the canonical relabelling.

    Brute force with branch-and-bound prefix pruning; supports n <= 8.
    """
    n = g.n
    if n > _CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"canonical_form supports n <= {_CANONICAL_MAX_N}")
    if n <= 1:
        return emit_graph6(g).encode("ascii")
    adjsets = [frozenset(a) for a in g.adj]
    best: list[int] | None = None
    perm: list[int] = []
    in_perm = [False] * n

    def place(bits: list[int]) -> None:
        nonlocal best
        j = len(perm)
        if j == n:
            if best is None or bits < best:
                best = bits[:]
            return
        for v in range(n):
            if in_perm[v]:
                continue
            col = [1 if perm[i] in adjsets[v] else 0 for i in range(j)]
            nb = bits + col
            if best is not None and nb > best[: len(nb)]:
                continue
            perm.append(v)
            in_perm[v] = True
            place(nb)
            perm.pop()
            in_perm[v] = False

    place([])
    assert best is not None
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if best[pos]:
                edges.append((i, j))
            pos += 1
    return emit_graph6(Graph(n, edges)).encode("ascii")


_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Stream one representative per isomorphism class of connected graphs.

    Builds n-vertex graphs by attaching a new vertex to every nonempty
    subset of each connected (n-1)-vertex graph; every connected graph
    arises this way because it has a non-cut vertex.  Supports 1 <= n <= 7.
    """
    if not 1 <= n <= 7:
        raise UnsupportedSizeError("enumerate_connected supports 1 <= n <= 7")
    if n == 1:
        yield Graph(1)
        return
    seen: set[bytes] = set()
    for parent in enumerate_connected(n - 1):
        for mask in range(1, 1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if mask >> i & 1]
            g = Graph(n, parent.edges + tuple(extra))
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                yield g
