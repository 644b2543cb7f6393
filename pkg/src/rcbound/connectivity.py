"""Vertex connectivity and internally disjoint path search.

Disjoint paths are found by unit-capacity augmentation on a split-vertex
network: every vertex other than the source is split into an in/out pair
joined by a capacity-one arc, so two paths can only meet at the source.
Target vertices keep only their in-half, which feeds a virtual sink; a
path therefore stops the moment it touches the target set, and with
per-target capacity one the terminals come out pairwise distinct.
Augmentation is always along a shortest residual path with a fixed scan
order, which keeps the returned paths short and the output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graphs import Graph


@dataclass(frozen=True)
class FanPaths:
    """k internally disjoint paths from one vertex into a target set."""
    source: int
    targets: frozenset[int]
    paths: tuple[tuple[int, ...], ...]


def _flow_paths(g: Graph, x: int, targets: Sequence[int], want: int,
                target_cap: int) -> list[list[int]]:
    """Up to `want` pairwise internally disjoint paths from x into targets."""
    n = g.n
    tset = set(targets)
    sink = 2 * n
    size = 2 * n + 1
    # arc arrays; forward arcs sit at even indices, their reverses at odd
    arc_to: list[int] = []
    arc_cap: list[int] = []
    head: list[list[int]] = [[] for _ in range(size)]

    def add(u: int, v: int, cap: int) -> None:
        head[u].append(len(arc_to))
        arc_to.append(v)
        arc_cap.append(cap)
        head[v].append(len(arc_to))
        arc_to.append(u)
        arc_cap.append(0)

    def vin(v: int) -> int:
        return 2 * v

    def vout(v: int) -> int:
        return 2 * v + 1

    src = vout(x)
    for v in range(n):
        if v != x and v not in tset:
            add(vin(v), vout(v), 1)
    for y in sorted(tset):
        add(vin(y), sink, target_cap)
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            if b == x or a in tset:
                continue
            add(src if a == x else vout(a), vin(b), 1)

    flow = 0
    while flow < want:
        prev = [-1] * size
        prev[src] = -2
        queue = [src]
        qi = 0
        while qi < len(queue) and prev[sink] == -1:
            u = queue[qi]
            qi += 1
            for ai in head[u]:
                if arc_cap[ai] <= 0:
                    continue
                v = arc_to[ai]
                if prev[v] != -1:
                    continue
                prev[v] = ai
                if v == sink:
                    break
                queue.append(v)
        if prev[sink] == -1:
            break
        v = sink
        while v != src:
            ai = prev[v]
            arc_cap[ai] -= 1
            arc_cap[ai ^ 1] += 1
            v = arc_to[ai ^ 1]
        flow += 1

    # walk the flow from the source, consuming one unit per step
    remaining = [arc_cap[ai ^ 1] if ai % 2 == 0 else 0 for ai in range(len(arc_to))]
    paths: list[list[int]] = []
    for ai in head[src]:
        while ai % 2 == 0 and remaining[ai] > 0:
            remaining[ai] -= 1
            path = [x]
            node = arc_to[ai]
            while node != sink:
                v = node // 2
                path.append(v)
                if v in tset:
                    out = vin(v)
                else:
                    out = vout(v)
                nxt = None
                for bi in head[out]:
                    if bi % 2 == 0 and remaining[bi] > 0:
                        nxt = bi
                        break
                if nxt is None:
                    raise AssertionError("flow walk lost conservation")
                remaining[nxt] -= 1
                node = arc_to[nxt]
            paths.append(path)
    if len(paths) != flow:
        raise AssertionError("flow decomposition mismatch")
    return paths


def internally_disjoint_paths(g: Graph, x: int, y: int, k: int) -> list[list[int]] | None:
    """k paths from x to y sharing only x and y, or None when impossible."""
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"vertex out of range 0..{g.n - 1}")
    if x == y:
        raise ValueError("endpoints must differ")
    if k < 1:
        raise ValueError(f"path count must be positive, got {k}")
    paths = _flow_paths(g, x, (y,), k, target_cap=k)
    if len(paths) < k:
        return None
    return sorted(paths, key=lambda p: (len(p), p))


def find_fan(g: Graph, x: int, targets: Iterable[int], k: int) -> FanPaths | None:
    """A k-fan from x into the target set, or None when none exists.

    Any graph whose vertex connectivity is at least k admits one whenever
    the target set has at least k vertices, so None on such a graph
    signals a bug. Among valid fans the search prefers short paths
    (shortest-path augmentation) with deterministic tie-breaking.
    """
    tset = set(targets)
    if not all(0 <= y < g.n for y in tset):
        raise ValueError(f"target out of range 0..{g.n - 1}")
    if x in tset:
        raise ValueError("source must not belong to the target set")
    if k < 1:
        raise ValueError(f"fan width must be positive, got {k}")
    if len(tset) < k:
        raise ValueError(f"target set smaller than fan width: {len(tset)} < {k}")
    paths = _flow_paths(g, x, sorted(tset), k, target_cap=1)
    if len(paths) < k:
        return None
    fan = FanPaths(x, frozenset(tset), tuple(
        tuple(p) for p in sorted(paths, key=lambda p: (len(p), p))))
    check_fan(g, fan, x, tset, k)
    return fan


def check_fan(g: Graph, fan: FanPaths, x: int, targets: Iterable[int], k: int) -> None:
    """Raise ValueError unless fan satisfies all structural invariants."""
    tset = set(targets)
    if len(fan.paths) != k:
        raise ValueError(f"expected {k} paths, got {len(fan.paths)}")
    terminals = []
    for p in fan.paths:
        if p[0] != x:
            raise ValueError(f"path {p} does not start at {x}")
        if len(set(p)) != len(p):
            raise ValueError(f"path {p} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise ValueError(f"path {p} uses a missing edge ({a}, {b})")
        if p[-1] not in tset:
            raise ValueError(f"path {p} does not end in the target set")
        if any(v in tset for v in p[1:-1]):
            raise ValueError(f"path {p} touches the target set before its end")
        terminals.append(p[-1])
    if len(set(terminals)) != k:
        raise ValueError(f"terminals are not pairwise distinct: {terminals}")
    for p, q in combinations(fan.paths, 2):
        shared = set(p) & set(q)
        if shared != {x}:
            raise ValueError(f"paths {p} and {q} share {sorted(shared - {x})}")


def vertex_connectivity(g: Graph) -> int:
    """kappa(g): n-1 for complete graphs, otherwise the smallest number of
    internally disjoint paths over all non-adjacent vertex pairs."""
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    nonadj = [(u, v) for u, v in combinations(range(n), 2) if not g.has_edge(u, v)]
    if not nonadj:
        return n - 1
    best = min(len(a) for a in g.adj)
    for u, v in nonadj:
        if best == 0:
            break
        flow = len(_flow_paths(g, u, (v,), best, target_cap=best))
        if flow < best:
            best = flow
    return best
