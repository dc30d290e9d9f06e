"""Slow, obviously-correct reference computations used only by the tests.

Nothing here shares code paths with the sweeps, prunes or matching code
of the package; they work from the plain edge set.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

from pathfactor.formats import parse_graph6
from pathfactor.graph import Graph

FIXTURES = Path(__file__).parent / "fixtures"


def load_universe():
    """Every graph on at most 7 vertices up to isomorphism (1253 graphs)."""
    lines = (FIXTURES / "graphs_upto7.g6").read_text().split()
    return [parse_graph6(line) for line in lines]


def adjacency_sets(g: Graph) -> list[set[int]]:
    nb = [set() for _ in range(g.order)]
    for u, v in g.edges():
        nb[u].add(v)
        nb[v].add(u)
    return nb


def _components(nb, alive):
    alive = set(alive)
    comps = []
    while alive:
        start = min(alive)
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for w in nb[v]:
                if w in alive and w not in comp:
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
        alive -= comp
    return comps


def has_perfect_matching_bruteforce(nb, vertices) -> bool:
    vertices = set(vertices)
    if not vertices:
        return True
    v = min(vertices)
    return any(has_perfect_matching_bruteforce(nb, vertices - {v, w})
               for w in nb[v] if w in vertices)


def is_factor_critical_bruteforce(nb, vertices) -> bool:
    vertices = set(vertices)
    if len(vertices) % 2 == 0:
        return False
    return all(has_perfect_matching_bruteforce(nb, vertices - {v}) for v in vertices)


def is_sun_component_bruteforce(nb, comp) -> bool:
    """K1, K2, or a corona: try every half-size vertex set as the base."""
    comp = set(comp)
    if len(comp) <= 2:
        return True
    if len(comp) % 2 or len(comp) < 6:
        return False
    for base in combinations(sorted(comp), len(comp) // 2):
        base = set(base)
        attach = []
        for leaf in comp - base:
            inside = nb[leaf] & comp
            if len(inside) != 1 or not inside <= base:
                break
            attach.append(next(iter(inside)))
        else:
            if len(set(attach)) == len(base) and is_factor_critical_bruteforce(nb, base):
                return True
    return False


def criterion_bruteforce(g: Graph, k: int, removed) -> int:
    nb = adjacency_sets(g)
    alive = set(range(g.order)) - set(removed)
    comps = _components(nb, alive)
    if k == 2:
        return sum(1 for c in comps if len(c) == 1)
    return sum(1 for c in comps if is_sun_component_bruteforce(nb, c))


def omega_bruteforce(g: Graph, removed) -> int:
    return len(_components(adjacency_sets(g), set(range(g.order)) - set(removed)))


def first_violation_bruteforce(g: Graph, k: int):
    """First X in (size, lex) order with criterion > 2|X|, over all subsets."""
    for size in range(g.order + 1):
        for xs in combinations(range(g.order), size):
            value = criterion_bruteforce(g, k, xs)
            if value > 2 * size:
                return xs, value
    return None


def _min_ratio(g: Graph, count):
    best = None
    witness = None
    for size in range(g.order + 1):
        for xs in combinations(range(g.order), size):
            c = count(xs)
            if c >= 2 and (best is None or Fraction(size, c) < best):
                best, witness = Fraction(size, c), xs
    return best, witness


def toughness_bruteforce(g: Graph):
    return _min_ratio(g, lambda xs: omega_bruteforce(g, xs))


def isolated_toughness_bruteforce(g: Graph):
    return _min_ratio(g, lambda xs: criterion_bruteforce(g, 2, xs))


def path_partition_exists_bruteforce(g: Graph, k: int) -> bool:
    """Search over arbitrary path lengths >= k (no piece-size reduction)."""
    nb = adjacency_sets(g)

    def paths_from(v, left):
        stack = [(v,)]
        while stack:
            path = stack.pop()
            yield path
            for w in nb[path[-1]]:
                if w in left and w not in path:
                    stack.append(path + (w,))

    def solve(left: frozenset) -> bool:
        if not left:
            return True
        v = min(left)
        # v is covered by a path in which it is an endpoint or interior; every
        # path through v is a union of two paths starting at v
        for a in paths_from(v, left):
            rest = left - set(a)
            for b in paths_from(v, rest | {v}):
                if len(a) + len(b) - 1 >= k:
                    if solve(rest - set(b)):
                        return True
        return False

    return solve(frozenset(range(g.order)))
