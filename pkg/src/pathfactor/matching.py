"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from .graph import Graph


def _augmenting_path(nbrs: list[list[int]], mate: list[int], root: int) -> tuple[int, list[int]]:
    """Grow an alternating tree from ``root``.

    Returns the free endpoint of an augmenting path (or -1) and the parent
    links needed to walk it back.
    """
    n = len(nbrs)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                # odd cycle: contract it onto its base
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent
                used[mate[to]] = True
                queue.append(mate[to])
    return -1, parent


def maximum_matching(g: Graph) -> list[int]:
    """Return ``mate`` with ``mate[v]`` the partner of ``v``, or -1 if unmatched.

    Roots and neighbours are scanned in ascending label order, so the
    result is deterministic.
    """
    nbrs = [g.neighbors(v) for v in range(g.order)]
    mate = [-1] * g.order
    for root in range(g.order):
        if mate[root] != -1:
            continue
        end, parent = _augmenting_path(nbrs, mate, root)
        while end != -1:
            prev = parent[end]
            nxt = mate[prev]
            mate[end], mate[prev] = prev, end
            end = nxt
    return mate


def matching_size(g: Graph) -> int:
    return sum(1 for m in maximum_matching(g) if m != -1) // 2


def has_perfect_matching(g: Graph) -> bool:
    if g.order % 2:
        return False
    return all(m != -1 for m in maximum_matching(g))
