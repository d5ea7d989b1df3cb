"""Simple digraphs and the structural operations used on them.

Text formats
------------
Matrix format: first line ``n``, then ``n`` lines of ``n`` characters from
``{0,1}``; row ``u``, column ``v`` is 1 iff ``uv`` is an edge.

Edge-list format: an optional first line holding just ``n``, then one
``u v`` pair per line (0-based).  Without the header ``n`` is one more than
the largest vertex mentioned.  Blank lines and ``#`` comments are ignored
in both formats.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import IntMatrix


class DigraphError(ValueError):
    """Invalid digraph data (loops, bad vertices, duplicate edges, bad text)."""


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph on vertices ``0..n-1`` with a 0/1 adjacency matrix."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n or any(len(r) != self.n for r in self.adj):
            raise DigraphError(f"adjacency must be {self.n}x{self.n}")
        for u, r in enumerate(self.adj):
            if r[u]:
                raise DigraphError(f"loop at vertex {u}")
            if any(x not in (0, 1) for x in r):
                raise DigraphError(f"row {u} has entries outside {{0,1}}")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> Digraph:
        adj = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(adj), adj)

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix.from_rows(self.adj) if self.n else IntMatrix(0, 0, ())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u][v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in range(self.n) if self.adj[u][v]]

    @property
    def edge_count(self) -> int:
        return sum(map(sum, self.adj))

    def out_neighbors(self, u: int) -> list[int]:
        return [v for v, a in enumerate(self.adj[u]) if a]

    def in_neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[u][v]]

    def out_degrees(self) -> list[int]:
        return [sum(r) for r in self.adj]

    def in_degrees(self) -> list[int]:
        return [sum(c) for c in zip(*self.adj)] if self.n else []

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1)

    def to_text(self, fmt: str = "matrix") -> str:
        if fmt == "matrix":
            lines = [str(self.n)] + ["".join(map(str, r)) for r in self.adj]
        elif fmt == "edges":
            lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        else:
            raise ValueError(f"unknown format {fmt!r}")
        return "\n".join(lines) + "\n"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from ordered pairs, rejecting loops and duplicates."""
    if n < 0:
        raise DigraphError("negative vertex count")
    rows = [[0] * n for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DigraphError(f"edge {u}{v} has a vertex outside 0..{n - 1}")
        if u == v:
            raise DigraphError(f"loop edge at {u}")
        if rows[u][v]:
            raise DigraphError(f"duplicate edge {u}{v}")
        rows[u][v] = 1
    return Digraph.from_matrix(rows)


def _meaningful_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_graph(text: str) -> Digraph:
    """Parse either text format; the format is detected from the second line."""
    lines = _meaningful_lines(text)
    if not lines:
        raise DigraphError("empty graph file")
    first = lines[0].split()
    if len(first) == 1 and len(lines) > 1 and len(lines[1].split()) == 1 and set(lines[1]) <= {"0", "1"}:
        return _parse_matrix(lines)
    if len(first) == 1 and len(lines) == 1:
        n = _int(first[0])
        if n == 0:
            return Digraph(0, ())
        raise DigraphError("matrix header without rows")
    return _parse_edges(lines)


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DigraphError(f"expected an integer, got {tok!r}") from None


def _parse_matrix(lines: list[str]) -> Digraph:
    n = _int(lines[0])
    rows = lines[1:]
    if len(rows) != n:
        raise DigraphError(f"header says {n} rows, found {len(rows)}")
    out = []
    for i, r in enumerate(rows):
        if len(r) != n or set(r) - {"0", "1"}:
            raise DigraphError(f"row {i} must be {n} characters of 0/1")
        out.append([int(c) for c in r])
    return Digraph.from_matrix(out)


def _parse_edges(lines: list[str]) -> Digraph:
    n = None
    if len(lines[0].split()) == 1:
        n = _int(lines[0])
        lines = lines[1:]
    pairs = []
    for line in lines:
        toks = line.split()
        if len(toks) != 2:
            raise DigraphError(f"edge line must be 'u v', got {line!r}")
        pairs.append((_int(toks[0]), _int(toks[1])))
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return from_edges(n, pairs)


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegularityInfo:
    is_regular: bool
    k: int | None


def regularity(g: Digraph) -> RegularityInfo:
    degs = set(g.out_degrees()) | set(g.in_degrees())
    if len(degs) == 1:
        return RegularityInfo(True, degs.pop())
    if g.n == 0:
        return RegularityInfo(True, 0)
    return RegularityInfo(False, None)


def _reach(succ: list[list[int]], src: int) -> set[int]:
    seen = {src}
    todo = [src]
    while todo:
        u = todo.pop()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def is_strongly_connected(g: Digraph) -> bool:
    """Forward and backward search from vertex 0 both reach everything."""
    if g.n <= 1:
        return True
    fwd = [g.out_neighbors(u) for u in range(g.n)]
    bwd = [g.in_neighbors(u) for u in range(g.n)]
    return len(_reach(fwd, 0)) == g.n and len(_reach(bwd, 0)) == g.n


def girth(g: Digraph) -> int | None:
    """Length of a shortest directed cycle, or ``None`` for acyclic digraphs."""
    best = None
    succ = [g.out_neighbors(u) for u in range(g.n)]
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            if best is not None and dist[u] + 1 >= best:
                break
            for v in succ[u]:
                if v == s:
                    best = dist[u] + 1
                    q.clear()
                    break
                if v not in dist:
                    dist[v] = dist[u] + 1
                    q.append(v)
        if best == 2:
            return 2
    return best


def distances_from(g: Digraph, s: int) -> dict[int, int]:
    dist = {s: 0}
    q = deque([s])
    while q:
        u = q.popleft()
        for v in g.out_neighbors(u):
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def reverse(g: Digraph) -> Digraph:
    return Digraph.from_matrix(list(zip(*g.adj)) if g.n else [])


def line_digraph(g: Digraph) -> Digraph:
    """Vertices are the edges of ``g`` in lexicographic order; ``uv -> vz``."""
    es = g.edges()
    idx_by_tail: dict[int, list[int]] = {}
    for i, (u, _) in enumerate(es):
        idx_by_tail.setdefault(u, []).append(i)
    m = len(es)
    rows = [[0] * m for _ in range(m)]
    for i, (_, v) in enumerate(es):
        for j in idx_by_tail.get(v, []):
            rows[i][j] = 1
    return Digraph.from_matrix(rows)


def tensor_allones(g: Digraph, q: int) -> Digraph:
    """Adjacency ``A (x) J_q``: vertex ``u`` becomes ``u*q .. u*q+q-1``."""
    if q < 1:
        raise DigraphError("blow-up factor must be at least 1")
    return Digraph.from_matrix(g.matrix.kron(IntMatrix.ones(q)).to_rows())


def complement_blowup(g: Digraph, q: int) -> Digraph:
    """Adjacency ``J - I - A (x) J_q`` on ``q*n`` vertices."""
    if q < 1:
        raise DigraphError("blow-up factor must be at least 1")
    nq = g.n * q
    b = IntMatrix.ones(nq) - IntMatrix.identity(nq) - g.matrix.kron(IntMatrix.ones(q))
    if any(x not in (0, 1) for x in b.entries):
        raise DigraphError("complement blow-up is not a 0/1 matrix")
    return Digraph.from_matrix(b.to_rows())


def complement(g: Digraph) -> Digraph:
    return complement_blowup(g, 1)


def relabel(g: Digraph, perm: Sequence[int]) -> Digraph:
    """Digraph with edge ``perm[u] perm[v]`` for each edge ``uv``."""
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        rows[perm[u]][perm[v]] = 1
    return Digraph.from_matrix(rows)


def shortest_cycle(g: Digraph) -> list[int] | None:
    """Vertices of one shortest directed cycle, in order, or ``None``."""
    length = girth(g)
    if length is None:
        return None
    succ = [g.out_neighbors(u) for u in range(g.n)]
    for s in range(g.n):
        parent = {s: None}
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            if dist[u] + 1 > length:
                break
            for v in succ[u]:
                if v == s and dist[u] + 1 == length:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
    raise AssertionError("girth reported but no cycle found")
