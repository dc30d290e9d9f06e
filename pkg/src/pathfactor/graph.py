"""Immutable simple graphs on dense integer labels.

Vertices are ``0 .. order-1``; adjacency is stored as one bitmask per vertex,
which keeps the exhaustive subset sweeps elsewhere in the package cheap.
Every operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def component_masks(adj: Sequence[int], alive: int) -> list[int]:
    """Connected components of the subgraph induced by ``alive``.

    Components are returned ordered by their smallest vertex.
    """
    comps = []
    rest = alive
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def isolated_mask(adj: Sequence[int], alive: int) -> int:
    """Vertices of ``alive`` with no neighbour inside ``alive``."""
    iso = 0
    for v in iter_bits(alive):
        if not adj[v] & alive:
            iso |= 1 << v
    return iso


@dataclass(frozen=True)
class Graph:
    """Finite undirected simple graph.

    ``adj[v]`` is the bitmask of neighbours of ``v``. Use :func:`build_graph`
    or the constructors below rather than filling ``adj`` by hand.
    """

    order: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.order < 0 or len(self.adj) != self.order:
            raise ValueError("adjacency length must equal order")
        full = (1 << self.order) - 1
        for v, nbrs in enumerate(self.adj):
            if nbrs & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nbrs >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(nbrs):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def edges(self) -> list[Edge]:
        """All edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.order)
                for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def size(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool(self.adj[u] >> v & 1)

    def is_complete(self) -> bool:
        return all(a.bit_count() == self.order - 1 for a in self.adj)

    def is_connected(self) -> bool:
        return len(component_masks(self.adj, self.full_mask)) <= 1

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def build_graph(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list.

    Raises ``ValueError`` for endpoints out of range, loops and duplicate
    edges (``(0, 1)`` and ``(1, 0)`` count as duplicates).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    adj = [0] * order
    for edge in edges:
        u, v = edge
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge {(u, v)} has an endpoint out of range for order {order}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        if adj[u] >> v & 1:
            raise ValueError(f"duplicate edge {(min(u, v), max(u, v))}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def empty_graph(order: int) -> Graph:
    return Graph(order, (0,) * order)


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph(order, tuple(full & ~(1 << v) for v in range(order)))


def path_graph(order: int) -> Graph:
    return build_graph(order, [(v, v + 1) for v in range(order - 1)])


def cycle_graph(order: int) -> Graph:
    if order < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(order, [(v, (v + 1) % order) for v in range(order)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre labelled 0."""
    return build_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def _shifted(g: Graph, offset: int) -> tuple[int, ...]:
    return tuple(a << offset for a in g.adj)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; the operands keep their relative order in the labelling."""
    adj: list[int] = []
    for g in graphs:
        adj.extend(_shifted(g, len(adj)))
    return Graph(len(adj), tuple(adj))


def repeat(g: Graph, times: int) -> Graph:
    return disjoint_union(*([g] * times))


def join(g1: Graph, g2: Graph) -> Graph:
    """The join ``g1 + g2``: disjoint union plus every edge between the two sides.

    Vertices of ``g1`` keep labels ``0 .. |g1|-1``; ``g2`` follows.
    """
    n1, n2 = g1.order, g2.order
    left = (1 << n1) - 1
    right = ((1 << n2) - 1) << n1
    adj = [a | right for a in g1.adj] + [(a << n1) | left for a in g2.adj]
    return Graph(n1 + n2, tuple(adj))


def corona(h: Graph) -> Graph:
    """Attach one pendant leaf to every vertex of ``h``.

    The leaf of vertex ``y`` gets label ``y + |h|``.
    """
    if h.order == 0:
        raise ValueError("corona of the empty graph is undefined")
    n = h.order
    adj = [a | 1 << (v + n) for v, a in enumerate(h.adj)] + [1 << v for v in range(n)]
    return Graph(2 * n, tuple(adj))


def remove_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Induced subgraph on the remaining vertices, relabelled contiguously.

    Returns the new graph and ``label_map`` with ``label_map[new] == old``.
    """
    drop = set(vertices)
    bad = [v for v in drop if not 0 <= v < g.order]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} are not in the graph")
    keep = tuple(v for v in range(g.order) if v not in drop)
    return induced_subgraph(g, keep), keep


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph induced by ``keep`` (ascending labels), relabelled by position."""
    index = {old: new for new, old in enumerate(keep)}
    adj = []
    for old in keep:
        mask = 0
        for u in iter_bits(g.adj[old]):
            j = index.get(u)
            if j is not None:
                mask |= 1 << j
        adj.append(mask)
    return Graph(len(keep), tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"edge {(u, v)} is not in the graph")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.order, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.order and 0 <= v < g.order):
        raise ValueError(f"cannot add edge {(u, v)}")
    if g.has_edge(u, v):
        raise ValueError(f"edge {(u, v)} already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.order, tuple(adj))


def components(g: Graph) -> list[VertexSet]:
    """Vertex sets of the connected components, ordered by smallest member."""
    return [tuple(iter_bits(c)) for c in component_masks(g.adj, g.full_mask)]


def isolated_count(g: Graph) -> int:
    return sum(1 for a in g.adj if a == 0)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.order)):
        raise ValueError("perm must be a permutation of the vertex labels")
    return build_graph(g.order, [(perm[u], perm[v]) for u, v in g.edges()])
