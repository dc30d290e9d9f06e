"""Path factors, suns, and (critical) avoidability.

Two independent routes decide whether G has a P>=k-factor (k = 2 or 3):

* :func:`decide_factor` sweeps vertex sets X and tests the deficiency
  conditions ``i(G-X) <= 2|X|`` (k = 2) and ``sun(G-X) <= 2|X|`` (k = 3),
  returning the first violating X as a certificate;
* :func:`extract_path_factor` searches directly for a partition of V(G)
  into short paths.

The avoidability deciders are built on the first route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .graph import (
    Edge,
    Graph,
    VertexSet,
    component_masks,
    induced_subgraph,
    isolated_mask,
    iter_bits,
    remove_edge,
    remove_vertices,
    to_mask,
)
from .matching import has_perfect_matching

PathFactor = list[tuple[int, ...]]

# Any path on >= k vertices splits into pieces of these orders.
PIECE_SIZES = {2: (2, 3), 3: (3, 4, 5)}


def _check_k(k: int):
    if k not in PIECE_SIZES:
        raise ValueError(f"k must be 2 or 3, got {k}")


def is_factor_critical(g: Graph) -> bool:
    """True iff G - v has a perfect matching for every vertex v."""
    if g.order % 2 == 0 or not g.is_connected():
        return False
    return all(has_perfect_matching(remove_vertices(g, [v])[0]) for v in range(g.order))


def _big_sun_kernel(g: Graph, comp: int) -> int:
    """Kernel mask if the component ``comp`` is a big sun, else 0."""
    size = comp.bit_count()
    if size < 6 or size % 2:
        return 0
    leaves = hubs = 0
    for v in iter_bits(comp):
        nb = g.adj[v] & comp
        if nb.bit_count() == 1:
            leaves |= 1 << v
            hubs |= nb
    # each kernel vertex carries exactly one leaf; leaf-leaf edges only occur in K2
    if leaves.bit_count() * 2 != size or hubs & leaves or hubs.bit_count() != size // 2:
        return 0
    if not is_factor_critical(induced_subgraph(g, list(iter_bits(hubs)))):
        return 0
    return hubs


def sun_kernel(g: Graph) -> Optional[VertexSet]:
    """Kernel (the factor-critical base) of a big sun, ``None`` otherwise."""
    if not g.is_connected():
        raise ValueError("sun recognition expects a connected graph")
    kernel = _big_sun_kernel(g, g.full_mask)
    return tuple(iter_bits(kernel)) if kernel else None


def is_sun(g: Graph) -> bool:
    """K1, K2, or the corona of a factor-critical graph on >= 3 vertices."""
    if g.order == 0 or not g.is_connected():
        raise ValueError("sun recognition expects a nonempty connected graph")
    return g.order <= 2 or sun_kernel(g) is not None


@dataclass
class SunDecomposition:
    """Classification of the components of a graph.

    ``big_suns`` holds ``(component, kernel)`` pairs.
    """

    isolated: list[VertexSet] = field(default_factory=list)
    k2: list[VertexSet] = field(default_factory=list)
    big_suns: list[tuple[VertexSet, VertexSet]] = field(default_factory=list)
    non_suns: list[VertexSet] = field(default_factory=list)

    @property
    def a(self) -> int:
        return len(self.isolated)

    @property
    def b(self) -> int:
        return len(self.k2)

    @property
    def c(self) -> int:
        return len(self.big_suns)

    @property
    def sun_count(self) -> int:
        return self.a + self.b + self.c


def sun_decompose(g: Graph) -> SunDecomposition:
    dec = SunDecomposition()
    for comp in component_masks(g.adj, g.full_mask):
        members = tuple(iter_bits(comp))
        if len(members) == 1:
            dec.isolated.append(members)
        elif len(members) == 2:
            dec.k2.append(members)
        else:
            kernel = _big_sun_kernel(g, comp)
            if kernel:
                dec.big_suns.append((members, tuple(iter_bits(kernel))))
            else:
                dec.non_suns.append(members)
    return dec


def sun_count(g: Graph) -> int:
    return _sun_count(g, g.full_mask, {})


def _sun_count(g: Graph, alive: int, cache: dict[int, int]) -> int:
    total = 0
    for comp in component_masks(g.adj, alive):
        size = comp.bit_count()
        if size <= 2:
            total += 1
        elif size >= 6 and size % 2 == 0:
            kernel = cache.get(comp)
            if kernel is None:
                kernel = cache[comp] = _big_sun_kernel(g, comp)
            if kernel:
                total += 1
    return total


def deficiency_criterion(g: Graph, k: int, removed: VertexSet = ()) -> int:
    """i(G - X) for k = 2, sun(G - X) for k = 3."""
    _check_k(k)
    alive = g.full_mask & ~to_mask(removed)
    if k == 2:
        return isolated_mask(g.adj, alive).bit_count()
    return _sun_count(g, alive, {})


def violating_sets(g: Graph, k: int, max_size: Optional[int] = None) -> Iterator[tuple[VertexSet, int]]:
    """Yield ``(X, criterion)`` with criterion > 2|X|, by size then lexicographically.

    Sizes are bounded by the fact that the criterion never exceeds
    ``order - |X|``. A size is skipped when too few vertices have small
    enough degree: every isolated vertex of G - X has degree <= |X| in G,
    and every sun component of G - X has a vertex of degree <= |X| + 1.
    """
    _check_k(k)
    n, full, adj = g.order, g.full_mask, g.adj
    degrees = g.degrees()
    cache: dict[int, int] = {}
    top = (n - 1) // 3
    if max_size is not None:
        top = min(top, max_size)
    for size in range(top + 1):
        slack = size if k == 2 else size + 1
        if sum(1 for d in degrees if d <= slack) <= 2 * size:
            continue
        for xs in combinations(range(n), size):
            alive = full & ~to_mask(xs)
            if k == 2:
                value = isolated_mask(adj, alive).bit_count()
            else:
                value = _sun_count(g, alive, cache)
            if value > 2 * size:
                yield xs, value


@dataclass(frozen=True)
class Certificate:
    """Witness that G - W - e has no P>=k-factor: ``criterion > bound = 2|X|``.

    All labels refer to the graph the decision was requested on. ``kind``
    is ``"violating-set"`` (W and e empty), ``"avoid-witness"`` (e set) or
    ``"critical-witness"`` (W and e set).
    """

    kind: str
    k: int
    W: VertexSet
    e: Optional[Edge]
    X: VertexSet
    criterion: int
    bound: int


@dataclass(frozen=True)
class Decision:
    holds: bool
    certificate: Optional[Certificate] = None
    vacuous: bool = False

    def __bool__(self) -> bool:
        return self.holds


def decide_factor(g: Graph, k: int) -> Decision:
    """Decide P>=k-factor existence through the deficiency conditions."""
    first = next(violating_sets(g, k), None)
    if first is None:
        return Decision(True)
    xs, value = first
    return Decision(False, Certificate("violating-set", k, (), None, xs, value, 2 * len(xs)))


def _paths_from(adj, v: int, mask: int, length: int) -> Iterator[tuple[int, ...]]:
    def grow(path, used):
        if len(path) == length:
            yield path
            return
        for w in iter_bits(adj[path[-1]] & mask & ~used):
            yield from grow(path + (w,), used | 1 << w)

    yield from grow((v,), 1 << v)


def _paths_through(adj, v: int, mask: int, sizes: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    for size in sizes:
        yield from _paths_from(adj, v, mask, size)
    for size in sizes:
        for left_len in range(2, size):
            for left in _paths_from(adj, v, mask, left_len):
                rest = mask & ~to_mask(left) | 1 << v
                for right in _paths_from(adj, v, rest, size - left_len + 1):
                    if left[1] < right[1]:
                        yield left[::-1] + right[1:]


def _partition(adj, comp: int, sizes: tuple[int, ...]) -> Optional[PathFactor]:
    memo: dict[int, Optional[tuple]] = {}

    def solve(mask: int):
        if not mask:
            return ()
        if mask in memo:
            return memo[mask]
        result = None
        if all(adj[u] & mask for u in iter_bits(mask)):
            v = (mask & -mask).bit_length() - 1
            for path in _paths_through(adj, v, mask, sizes):
                rest = solve(mask & ~to_mask(path))
                if rest is not None:
                    result = (path,) + rest
                    break
        memo[mask] = result
        return result

    found = solve(comp)
    return None if found is None else list(found)


def extract_path_factor(g: Graph, k: int) -> Optional[PathFactor]:
    """Find a P>=k-factor by backtracking, or return ``None``.

    Only pieces of order 2-3 (k = 2) or 3-5 (k = 3) are tried, which loses
    nothing since longer paths split into such pieces. Each component is
    solved on its own; the lowest uncovered vertex is always covered next.
    """
    _check_k(k)
    paths: PathFactor = []
    for comp in component_masks(g.adj, g.full_mask):
        part = _partition(g.adj, comp, PIECE_SIZES[k])
        if part is None:
            return None
        paths.extend(part)
    return paths


def is_path_factor(g: Graph, paths: PathFactor, k: int) -> bool:
    """Check that ``paths`` are vertex-disjoint paths of G covering V(G), each on >= k vertices."""
    seen: set[int] = set()
    for path in paths:
        if len(path) < k:
            return False
        for u, v in zip(path, path[1:]):
            if not g.has_edge(u, v):
                return False
        seen.update(path)
    return len(seen) == g.order == sum(len(p) for p in paths)


def is_avoidable(g: Graph, k: int) -> Decision:
    """For every edge e, does G - e have a P>=k-factor?

    Edgeless graphs are vacuously avoidable and flagged as such.
    """
    _check_k(k)
    edges = g.edges()
    for u, v in edges:
        d = decide_factor(remove_edge(g, u, v), k)
        if not d:
            c = d.certificate
            return Decision(False, Certificate("avoid-witness", k, (), (u, v), c.X, c.criterion, c.bound))
    return Decision(True, vacuous=not edges)


def is_critical_avoidable(g: Graph, k: int, n: int) -> Decision:
    """Is G - W P>=k-factor avoidable for every n-subset W?

    W runs through subsets in lexicographic order and the first failure is
    reported with W, e and X in G's labels. The answer is flagged vacuous
    when no pair (W, e) exists at all.
    """
    _check_k(k)
    if n < 0 or n > g.order:
        raise ValueError(f"n={n} must lie between 0 and the order {g.order}")
    tested = False
    for ws in combinations(range(g.order), n):
        h, label = remove_vertices(g, ws)
        d = is_avoidable(h, k)
        tested = tested or not d.vacuous
        if not d:
            c = d.certificate
            u, v = label[c.e[0]], label[c.e[1]]
            return Decision(False, Certificate(
                "critical-witness", k, ws, (min(u, v), max(u, v)),
                tuple(label[x] for x in c.X), c.criterion, c.bound))
    return Decision(True, vacuous=not tested)


def residual_graph(g: Graph, ws: VertexSet = (), e: Optional[Edge] = None) -> tuple[Graph, VertexSet]:
    """G - W - e together with the map from its labels back to G's."""
    h, label = remove_vertices(g, ws)
    if e is not None:
        index = {old: new for new, old in enumerate(label)}
        if e[0] not in index or e[1] not in index:
            raise ValueError(f"edge {e} meets W")
        h = remove_edge(h, index[e[0]], index[e[1]])
    return h, label


def certificate_value(g: Graph, cert: Certificate) -> int:
    """Recompute the criterion of ``cert`` on G - W - e - X."""
    h, label = residual_graph(g, cert.W, cert.e)
    index = {old: new for new, old in enumerate(label)}
    if any(x not in index for x in cert.X):
        raise ValueError("X meets W")
    return deficiency_criterion(h, cert.k, tuple(index[x] for x in cert.X))


def validate_certificate(g: Graph, cert: Certificate) -> bool:
    """True iff the certificate recomputes exactly and violates its bound."""
    try:
        value = certificate_value(g, cert)
    except ValueError:
        return False
    return value == cert.criterion and cert.bound == 2 * len(cert.X) and value > cert.bound
