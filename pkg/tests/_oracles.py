"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive (path enumeration, subset
enumeration, full coloring products) so it shares no code path with the
library implementations it validates.
"""

from __future__ import annotations

from itertools import combinations, product

from rcbound.graphs import Graph, norm_edge


def all_simple_paths(g: Graph, u: int, v: int):
    """Every simple u-v path as a vertex list (DFS enumeration)."""
    out = []
    stack = [(u, [u])]
    while stack:
        node, path = stack.pop()
        for w in g.adj[node]:
            if w == v:
                out.append(path + [v])
            elif w not in path:
                stack.append((w, path + [w]))
    return out


def brute_rainbow_witness(g: Graph, colors: dict, vertices=None):
    """Lexicographically smallest pair with no rainbow path, else None."""
    verts = sorted(vertices) if vertices is not None else range(g.n)
    for u, v in combinations(verts, 2):
        ok = False
        for path in all_simple_paths(g, u, v):
            cs = [colors[norm_edge(a, b)] for a, b in zip(path, path[1:])]
            if len(set(cs)) == len(cs):
                ok = True
                break
        if not ok:
            return (u, v)
    return None


def brute_rc(g: Graph, max_colors: int | None = None) -> int:
    """Minimum colors by trying every coloring outright (tiny graphs only)."""
    m = g.m
    if m == 0:
        return 0
    if max_colors is None:
        max_colors = m
    for k in range(1, max_colors + 1):
        for combo in product(range(1, k + 1), repeat=m):
            colors = dict(zip(g.edges, combo))
            if brute_rainbow_witness(g, colors) is None:
                return k
    raise AssertionError("no coloring found up to max_colors")


def brute_girth(g: Graph) -> int | None:
    """Shortest cycle length via exhaustive DFS by target length."""
    for length in range(3, g.n + 1):
        for start in range(g.n):
            if _cycle_of_length(g, start, length, [start], {start}):
                return length
    return None


def _cycle_of_length(g, start, length, path, seen):
    if len(path) == length:
        return start in g.adj[path[-1]]
    for w in g.adj[path[-1]]:
        if w <= start or w in seen:
            continue
        path.append(w)
        seen.add(w)
        if _cycle_of_length(g, start, length, path, seen):
            return True
        path.pop()
        seen.discard(w)
    return False


def brute_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects (or n-1 when none)."""
    if not _connected_after(g, set()):
        return 0
    for size in range(1, g.n - 1):
        for cut in combinations(range(g.n), size):
            if not _connected_after(g, set(cut)):
                return size
    return g.n - 1


def _connected_after(g: Graph, removed: set) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if len(rest) <= 1:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(rest)


def brute_has_disjoint_paths(g: Graph, x: int, y: int, k: int) -> bool:
    """Does some family of k pairwise internally disjoint x-y paths exist?"""
    paths = [tuple(p) for p in all_simple_paths(g, x, y)]

    def extend(chosen, used_internal, rest):
        if len(chosen) == k:
            return True
        for i, p in enumerate(rest):
            interior = set(p[1:-1])
            if interior & used_internal:
                continue
            if extend(chosen + [p], used_internal | interior, rest[i + 1:]):
                return True
        return False

    return extend([], set(), paths)


def canonical_colorings(m: int, k: int):
    """All canonical color vectors of length m with at most k colors
    (entry i is at most one more than the running maximum)."""
    vec = [0] * m

    def rec(i, top):
        if i == m:
            yield tuple(vec)
            return
        for c in range(1, min(top + 1, k) + 1):
            vec[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(0, 0)
