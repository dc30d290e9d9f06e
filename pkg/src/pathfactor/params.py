"""Vertex connectivity, toughness and isolated toughness, computed exactly.

Toughness-type values are :class:`fractions.Fraction` or :data:`INF`
(``math.inf``), which compares above every fraction. Nothing here goes
through floating point except the infinity sentinel itself.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Union

from .graph import Graph, VertexSet, component_masks, isolated_mask, iter_bits, to_mask

ExtRational = Union[Fraction, float]
INF: float = math.inf


def is_inf(value: ExtRational) -> bool:
    return isinstance(value, float) and value == INF


@dataclass(frozen=True)
class ParameterResult:
    """Exact value of t(G) or I(G) with a minimising vertex set.

    ``witness`` is ``None`` exactly when ``value`` is infinite.
    """

    value: ExtRational
    witness: Optional[VertexSet] = None


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the split graph: vertex v becomes an arc
    v_in -> v_out of capacity 1, edges become infinite arcs u_out -> v_in.
    """
    n = g.order
    # node ids: v_in = 2v, v_out = 2v + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int):
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    big = n + 1
    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def connectivity(g: Graph) -> int:
    """Vertex connectivity kappa(G); ``order - 1`` for complete graphs.

    Minimum over non-adjacent pairs of the local connectivity (Menger).
    """
    if g.order == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    if g.is_complete():
        return g.order - 1
    if not g.is_connected():
        return 0
    best = g.order - 1
    # Some minimum cut misses one of the first best+1 vertices, so pairs
    # anchored there suffice.
    for s in range(g.order):
        if s > best:
            break
        for t in range(s + 1, g.order):
            if not g.adj[s] >> t & 1:
                best = min(best, _local_connectivity(g, s, t))
    return best


def connectivity_by_cuts(g: Graph) -> int:
    """Vertex connectivity by sweeping vertex sets in increasing size."""
    if g.order == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    full = g.full_mask
    for size in range(g.order - 1):
        for cut in combinations(range(g.order), size):
            if len(component_masks(g.adj, full & ~to_mask(cut))) >= 2:
                return size
    return g.order - 1


def _ratio_below(num: int, den: int, best: Optional[tuple[int, int]]) -> bool:
    return best is None or num * best[1] < best[0] * den


def toughness(g: Graph) -> ParameterResult:
    """t(G) = min |X| / omega(G - X) over X leaving at least two components.

    The witness is the first minimiser in (size, lexicographic) order.
    """
    if g.order == 0:
        raise ValueError("toughness of the empty graph is undefined")
    if g.is_complete():
        return ParameterResult(INF)
    n, full = g.order, g.full_mask
    best: Optional[tuple[int, int]] = None
    witness: VertexSet = ()
    # |X| < kappa leaves G - X connected
    for size in range(connectivity(g), n - 1):
        # omega(G - X) <= n - size
        if best is not None and not _ratio_below(size, n - size, best):
            break
        for cut in combinations(range(n), size):
            comps = len(component_masks(g.adj, full & ~to_mask(cut)))
            if comps >= 2 and _ratio_below(size, comps, best):
                best, witness = (size, comps), cut
    assert best is not None
    return ParameterResult(Fraction(*best), witness)


def isolated_toughness(g: Graph) -> ParameterResult:
    """I(G) = min |X| / i(G - X) over X leaving at least two isolated vertices.

    Every minimiser X equals the neighbourhood of the isolated vertices it
    creates, so other sets are skipped without changing value or witness.
    """
    if g.order == 0:
        raise ValueError("isolated toughness of the empty graph is undefined")
    if g.is_complete():
        return ParameterResult(INF)
    n, full, adj = g.order, g.full_mask, g.adj
    degrees = sorted(g.degrees())
    best: Optional[tuple[int, int]] = None
    witness: VertexSet = ()
    for size in range(degrees[0], n - 1):
        if best is not None and not _ratio_below(size, n - size, best):
            break
        # isolated vertices of G - X have degree <= |X| in G
        reachable = sum(1 for d in degrees if d <= size)
        if reachable < 2 or not _ratio_below(size, min(reachable, n - size), best):
            continue
        for cut in combinations(range(n), size):
            xmask = to_mask(cut)
            iso = isolated_mask(adj, full & ~xmask)
            count = iso.bit_count()
            if count < 2 or not _ratio_below(size, count, best):
                continue
            closure = 0
            for v in iter_bits(iso):
                closure |= adj[v]
            if closure == xmask:
                best, witness = (size, count), cut
    assert best is not None
    return ParameterResult(Fraction(*best), witness)
