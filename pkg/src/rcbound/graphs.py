"""Simple undirected graphs: construction, edge-list I/O, generators, basic queries.

Vertices are dense integer ids 0..n-1. A Graph is immutable after
construction and safe to share across threads; every generator is a pure
function of its arguments (randomness only through an explicit seed).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed text document; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph, normalizing edge orientation and rejecting
    self-loops, duplicates and out-of-range endpoints."""
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    seen: set[Edge] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
    sorted_edges = tuple(sorted(seen))
    neigh: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted_edges:
        neigh[u].append(v)
        neigh[v].append(u)
    return Graph(n, sorted_edges, tuple(tuple(sorted(a)) for a in neigh))


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: first meaningful line is the header "n m", then exactly m lines
    "u v". Blank lines and lines starting with '#' are ignored anywhere.
    Endpoints may appear in either order; self-loops, duplicates and
    out-of-range indices are errors reported with their line number.
    """
    n = m = 0
    have_header = False
    edges: list[Edge] = []
    dup: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if not have_header:
            if len(parts) != 2:
                raise GraphFormatError("header must be 'n m'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError("header must be two integers", lineno) from None
            if n < 1:
                raise GraphFormatError(f"vertex count must be positive, got {n}", lineno)
            if m < 0:
                raise GraphFormatError(f"edge count must be non-negative, got {m}", lineno)
            have_header = True
            continue
        if len(edges) == m:
            raise GraphFormatError(f"more than the declared {m} edge lines", lineno)
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = norm_edge(u, v)
        if e in dup:
            raise GraphFormatError(f"duplicate edge {e}", lineno)
        dup.add(e)
        edges.append(e)
    if not have_header:
        raise GraphFormatError("document contains no header line")
    if len(edges) != m:
        raise GraphFormatError(f"expected {m} edges, found {len(edges)}")
    return make_graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Edge-list text with edges in sorted order; parse(serialize(g)) == g."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u]
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = du + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def min_degree(g: Graph) -> int:
    return min(len(a) for a in g.adj)


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for forests.

    One BFS per root; a non-tree edge (u, w) seen from root r closes a walk
    of length dist[u] + dist[w] + 1 which contains a cycle no longer than
    that, and for a root on a shortest cycle the bound is attained.
    """
    best: int | None = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if best is not None and 2 * du >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    c = du + dist[w] + 1
                    if best is None or c < best:
                        best = c
        if best == 3:
            break
    return best


def shortest_cycle(g: Graph) -> list[int]:
    """A shortest cycle as an open vertex list (closing edge implied).

    Deterministic: the result starts at the smallest vertex lying on any
    shortest cycle and is the lexicographically smallest such sequence.
    """
    glen = girth(g)
    if glen is None:
        raise ValueError("graph is acyclic: no cycle to return")
    for start in range(g.n):
        path = [start]
        found = _cycle_dfs(g, start, glen, path, {start})
        if found is not None:
            return found
    raise AssertionError("girth reported a cycle but none was found")


def _cycle_dfs(g: Graph, start: int, glen: int, path: list[int],
               on_path: set[int]) -> list[int] | None:
    if len(path) == glen:
        return list(path) if start in g.adj[path[-1]] else None
    for w in g.adj[path[-1]]:
        # keep start as the cycle minimum so the traversal is canonical
        if w <= start or w in on_path:
            continue
        path.append(w)
        on_path.add(w)
        found = _cycle_dfs(g, start, glen, path, on_path)
        if found is not None:
            return found
        path.pop()
        on_path.discard(w)
    return None


def diameter(g: Graph) -> int:
    """Maximum shortest-path distance over all vertex pairs."""
    ecc = 0
    for v in range(g.n):
        dist = bfs_distances(g, v)
        far = max(dist)
        if min(dist) < 0:
            raise ValueError("diameter requires a connected graph")
        ecc = max(ecc, far)
    return ecc


def gen_family(family: str, *params: int, seed: int = 0) -> Graph:
    """Deterministic generators for the test families.

    Families: cycle n>=3; complete n>=1; wheel n>=4 (hub 0 plus an
    (n-1)-cycle rim); prism k>=3 (two k-cycles joined by a perfect
    matching); petersen; random3c n>=4 with an optional count of extra
    edges (grown from K4 by joining each new vertex to 3 existing ones,
    which keeps the graph 3-connected, then adding uniformly chosen
    non-edges).
    """
    def need(count: int) -> tuple[int, ...]:
        if len(params) != count:
            raise ValueError(f"family {family!r} takes {count} parameter(s), got {len(params)}")
        return params

    if family == "cycle":
        (n,) = need(1)
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        (n,) = need(1)
        if n < 1:
            raise ValueError(f"complete needs n >= 1, got {n}")
        return make_graph(n, combinations(range(n), 2))
    if family == "wheel":
        (n,) = need(1)
        if n < 4:
            raise ValueError(f"wheel needs n >= 4, got {n}")
        rim = [(i, i % (n - 1) + 1) for i in range(1, n)]
        spokes = [(0, i) for i in range(1, n)]
        return make_graph(n, rim + spokes)
    if family == "prism":
        (k,) = need(1)
        if k < 3:
            raise ValueError(f"prism needs k >= 3, got {k}")
        outer = [(i, (i + 1) % k) for i in range(k)]
        inner = [(k + i, k + (i + 1) % k) for i in range(k)]
        rungs = [(i, k + i) for i in range(k)]
        return make_graph(2 * k, outer + inner + rungs)
    if family == "petersen":
        need(0)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
        return make_graph(10, outer + spokes + inner)
    if family == "random3c":
        if len(params) == 1:
            n, extra = params[0], 0
        elif len(params) == 2:
            n, extra = params
        else:
            raise ValueError(f"random3c takes n and optional extra edge count, got {params}")
        if n < 4:
            raise ValueError(f"random3c needs n >= 4, got {n}")
        if extra < 0:
            raise ValueError(f"extra edge count must be non-negative, got {extra}")
        rng = random.Random(seed)
        edges = {norm_edge(u, v) for u, v in combinations(range(4), 2)}
        for v in range(4, n):
            for u in rng.sample(range(v), 3):
                edges.add(norm_edge(u, v))
        free = sorted(e for e in combinations(range(n), 2) if e not in edges)
        if extra > len(free):
            raise ValueError(f"cannot add {extra} extra edges, only {len(free)} non-edges left")
        edges.update(rng.sample(free, extra))
        return make_graph(n, edges)
    raise ValueError(f"unknown family {family!r}")


def iter_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices, in edge-subset bitmask order."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield make_graph(n, (pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))
