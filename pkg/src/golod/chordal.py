"""Chordality of 1-skeleta: lexicographic BFS plus a checkable certificate."""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .complex import SimplicialComplex


class ChordalResult(NamedTuple):
    chordal: bool
    ordering: tuple[int, ...]  # perfect elimination ordering when chordal
    cycle: tuple[int, ...] | None  # induced cycle of length >= 4 otherwise

    def __bool__(self):
        return self.chordal


def lex_bfs(adj: dict[int, set[int]]) -> list[int]:
    """Lexicographic breadth-first search by partition refinement."""
    # each slice is a list of vertices; visiting v splits every slice into
    # neighbours of v (moved in front) and the rest
    slices: list[list[int]] = [sorted(adj)] if adj else []
    order = []
    while slices:
        v = slices[0].pop(0)
        if not slices[0]:
            slices.pop(0)
        order.append(v)
        nb = adj[v]
        refined = []
        for s in slices:
            inside = [u for u in s if u in nb]
            outside = [u for u in s if u not in nb]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        slices = refined
    return order


def is_perfect_elimination(adj: dict[int, set[int]], peo: list[int]) -> bool:
    """Check that each vertex's later neighbours form a clique."""
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        if any(u != parent and u not in adj[parent] for u in later):
            return False
    return True


def _shortest_path(adj, src, dst, allowed):
    prev = {src: None}
    q = deque([src])
    while q:
        x = q.popleft()
        if x == dst:
            break
        for y in sorted(adj[x]):
            if y in allowed and y not in prev:
                prev[y] = x
                q.append(y)
    if dst not in prev:
        return None
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def _canonical_cycle(cycle):
    i = cycle.index(min(cycle))
    c = cycle[i:] + cycle[:i]
    if len(c) > 2 and c[-1] < c[1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def shortest_induced_cycle(adj: dict[int, set[int]]) -> tuple[int, ...] | None:
    """Shortest chordless cycle of length >= 4, or None if the graph is chordal.

    For a vertex v with non-adjacent neighbours a, b, a shortest a-b path
    avoiding the rest of N[v] closes up with v into an induced cycle.
    """
    best = None
    for v in sorted(adj):
        nb = sorted(adj[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if b in adj[a]:
                    continue
                allowed = (set(adj) - adj[v] - {v}) | {a, b}
                path = _shortest_path(adj, a, b, allowed)
                if path is None:
                    continue
                cyc = _canonical_cycle([v] + path)
                if best is None or (len(cyc), cyc) < (len(best), best):
                    best = cyc
    return best


def is_induced_cycle(adj: dict[int, set[int]], cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if (cycle[j] in adj[cycle[i]]) != consecutive:
                return False
    return True


def is_chordal(K: SimplicialComplex) -> ChordalResult:
    adj = K.adjacency()
    order = lex_bfs(adj)
    peo = order[::-1]
    if is_perfect_elimination(adj, peo):
        return ChordalResult(True, tuple(peo), None)
    return ChordalResult(False, (), shortest_induced_cycle(adj))
