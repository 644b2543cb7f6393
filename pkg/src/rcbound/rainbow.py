"""Rainbow connectivity: path queries, whole-graph verification, exact solver.

A path is rainbow when all its edge colors differ, and a coloring makes a
graph rainbow connected when every vertex pair is joined by some rainbow
path. Searches run over (vertex, used-color-set) states with color sets
as bit masks; a rainbow path never exceeds k edges, so the exact solver's
feasibility probes are depth-capped at the palette size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Edge, Graph, GraphFormatError, bfs_distances, diameter, gen_family, norm_edge


@dataclass
class EdgeColoring:
    """Total assignment of positive color ids to the edges of a host graph."""
    colors: dict[Edge, int]

    def __post_init__(self) -> None:
        self.colors = {norm_edge(u, v): c for (u, v), c in self.colors.items()}

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))


class BudgetExhaustedError(RuntimeError):
    """The exact search ran out of its node budget while testing some k."""

    def __init__(self, k: int, nodes: int):
        super().__init__(f"budget-exhausted at k={k} after {nodes} nodes")
        self.k = k
        self.nodes = nodes


def _require_covers(g: Graph, coloring: EdgeColoring) -> None:
    if set(coloring.colors) != set(g.edges):
        raise ValueError("coloring does not cover exactly the host edge set")
    if any(c < 1 for c in coloring.colors.values()):
        raise ValueError("color ids must be positive")


def _colored_adj(g: Graph, coloring: EdgeColoring) -> list[list[tuple[int, int]]]:
    adjc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), c in coloring.colors.items():
        bit = 1 << (c - 1)
        adjc[u].append((v, bit))
        adjc[v].append((u, bit))
    for lst in adjc:
        lst.sort()
    return adjc


def _rainbow_reach(adjc: list[list[tuple[int, int]]], source: int,
                   targets: set[int]) -> set[int]:
    """Vertices of `targets` reachable from source along rainbow walks."""
    remaining = set(targets)
    remaining.discard(source)
    seen = {(source, 0)}
    frontier = [(source, 0)]
    while frontier and remaining:
        nxt = []
        for v, mask in frontier:
            for w, bit in adjc[v]:
                if mask & bit:
                    continue
                state = (w, mask | bit)
                if state in seen:
                    continue
                seen.add(state)
                remaining.discard(w)
                nxt.append(state)
        frontier = nxt
    return targets - remaining


def rainbow_path_exists(g: Graph, coloring: EdgeColoring, u: int, v: int) -> bool:
    """True when some u-v path uses pairwise distinct colors; u == v counts."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertex out of range 0..{g.n - 1}")
    _require_covers(g, coloring)
    if u == v:
        return True
    return v in _rainbow_reach(_colored_adj(g, coloring), u, {v})


def find_rainbow_witness(g: Graph, coloring: EdgeColoring,
                         vertices=None) -> Edge | None:
    """None when every pair is rainbow connected, otherwise the
    lexicographically smallest failing pair.

    `vertices` restricts the pair universe to a subset (used to verify a
    subgraph); the restricted universe must still be connected.
    """
    _require_covers(g, coloring)
    verts = sorted(vertices) if vertices is not None else list(range(g.n))
    dist = bfs_distances(g, verts[0])
    if any(dist[v] < 0 for v in verts):
        raise ValueError("vertex universe is not connected")
    adjc = _colored_adj(g, coloring)
    for i, u in enumerate(verts):
        targets = set(verts[i + 1:])
        if not targets:
            break
        reached = _rainbow_reach(adjc, u, targets)
        missing = targets - reached
        if missing:
            return (u, min(missing))
    return None


def is_rainbow_connected(g: Graph, coloring: EdgeColoring) -> bool:
    return find_rainbow_witness(g, coloring) is None


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Parse a coloring document against its host graph.

    Format: first meaningful line is the palette size k, then one line
    "u v c" per host edge with 1 <= c <= k. Comment and blank lines follow
    the edge-list rules. The edge set must match the host exactly.
    """
    k = None
    colors: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if k is None:
            if len(parts) != 1:
                raise GraphFormatError("first line must be the color count", lineno)
            try:
                k = int(parts[0])
            except ValueError:
                raise GraphFormatError("color count must be an integer", lineno) from None
            if k < 1:
                raise GraphFormatError(f"color count must be positive, got {k}", lineno)
            continue
        if len(parts) != 3:
            raise GraphFormatError("coloring line must be 'u v c'", lineno)
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise GraphFormatError("coloring line must hold three integers", lineno) from None
        e = norm_edge(u, v)
        if not g.has_edge(u, v):
            raise GraphFormatError(f"edge {e} is not in the host graph", lineno)
        if e in colors:
            raise GraphFormatError(f"edge {e} colored twice", lineno)
        if not 1 <= c <= k:
            raise GraphFormatError(f"color {c} outside 1..{k}", lineno)
        colors[e] = c
    if k is None:
        raise GraphFormatError("document contains no color count line")
    missing = set(g.edges) - set(colors)
    if missing:
        raise GraphFormatError(f"host edges missing from coloring: {sorted(missing)[:3]}")
    return EdgeColoring(colors)


def serialize_coloring(coloring: EdgeColoring) -> str:
    """Coloring text with edges sorted. Color ids already forming a dense
    1..k range are kept; anything else is renumbered by first appearance."""
    items = sorted(coloring.colors.items())
    used = {c for _, c in items}
    if used == set(range(1, len(used) + 1)):
        remap = {c: c for c in used}
    else:
        remap = {}
        for _, c in items:
            if c not in remap:
                remap[c] = len(remap) + 1
    lines = [str(len(remap))]
    lines.extend(f"{u} {v} {remap[c]}" for (u, v), c in items)
    return "\n".join(lines) + "\n"


def cycle_color_sequence(n: int) -> list[int]:
    """Colors for the edges of an n-cycle in cyclic order, using the fewest
    colors that keep the cycle rainbow connected: 1 for a triangle,
    ceil(n/2) otherwise (each color on two antipodal-ish edges)."""
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    if n == 3:
        return [1, 1, 1]
    half = n // 2
    if n % 2 == 0:
        return list(range(1, half + 1)) * 2
    return list(range(1, half + 2)) + list(range(1, half + 1))


def cycle_coloring(n: int) -> EdgeColoring:
    """A verified rainbow-connected coloring of the canonical n-cycle."""
    g = gen_family("cycle", n)
    seq = cycle_color_sequence(n)
    coloring = EdgeColoring({norm_edge(i, (i + 1) % n): seq[i] for i in range(n)})
    witness = find_rainbow_witness(g, coloring)
    if witness is not None:
        raise AssertionError(f"cycle coloring failed its self-check at {witness}")
    return coloring


def rc_exact(g: Graph, max_colors: int | None = None,
             node_budget: int = 10 ** 8) -> tuple[int, EdgeColoring]:
    """Smallest k admitting a rainbow-connected coloring, with one coloring.

    k runs upward from the diameter. For each k the search walks canonical
    colorings depth-first (edge i may use at most one more color than the
    maximum used before it, which quotients out color permutations) and
    returns the lexicographically smallest success. Every node is vetted
    with an optimistic feasibility probe: uncolored edges act as wildcards
    and a pair with no possible rainbow path of at most k edges kills the
    subtree. `node_budget` caps the total number of assignments tried;
    running past it raises BudgetExhaustedError rather than truncating.
    """
    m = g.m
    if max_colors is None:
        max_colors = m
    if not 0 <= max_colors <= m:
        raise ValueError(f"max_colors must lie in 0..{m}, got {max_colors}")
    lower = max(1, diameter(g))  # also rejects disconnected input
    if m == 0:
        return 0, EdgeColoring({})

    edges = g.edges
    adj_e: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        adj_e[u].append((v, i))
        adj_e[v].append((u, i))
    for lst in adj_e:
        lst.sort()
    nonadj = [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)]

    col = [0] * m
    nodes = 0

    def feasible(u: int, v: int, k: int) -> bool:
        # wildcard-optimistic reachability, capped at k steps
        seen: dict[int, set[int]] = {u: {0}}
        frontier = [(u, 0)]
        for _ in range(k):
            nxt = []
            for a, mask in frontier:
                for b, ei in adj_e[a]:
                    c = col[ei]
                    if c:
                        bit = 1 << (c - 1)
                        if mask & bit:
                            continue
                        nm = mask | bit
                    else:
                        nm = mask
                    if b == v:
                        return True
                    known = seen.setdefault(b, set())
                    if nm in known:
                        continue
                    known.add(nm)
                    nxt.append((b, nm))
            if not nxt:
                return False
            frontier = nxt
        return False

    def search(i: int, used: int, k: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        for c in range(1, min(used + 1, k) + 1):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExhaustedError(k, nodes)
            col[i] = c
            now_used = max(used, c)
            # every color must still be reachable with the edges left
            if k - now_used <= m - i - 1 and all(feasible(u, v, k) for u, v in nonadj):
                if search(i + 1, now_used, k):
                    return True
        col[i] = 0
        return False

    for k in range(lower, max_colors + 1):
        for i in range(m):
            col[i] = 0
        if search(0, 0, k):
            return k, EdgeColoring({edges[i]: col[i] for i in range(m)})
    raise ValueError(f"no rainbow-connected coloring with at most {max_colors} colors")
