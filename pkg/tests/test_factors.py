import pytest
from hypothesis import given, settings

from oracles import (
    adjacency_sets,
    criterion_bruteforce,
    first_violation_bruteforce,
    is_factor_critical_bruteforce,
    is_sun_component_bruteforce,
    load_universe,
    omega_bruteforce,
    path_partition_exists_bruteforce,
)
from pathfactor.expr import parse_construction
from pathfactor.factors import (
    Certificate,
    decide_factor,
    deficiency_criterion,
    extract_path_factor,
    is_avoidable,
    is_critical_avoidable,
    is_factor_critical,
    is_path_factor,
    is_sun,
    residual_graph,
    sun_count,
    sun_decompose,
    sun_kernel,
    validate_certificate,
)
from pathfactor.graph import (
    add_edge,
    complete_graph,
    corona,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    relabel,
    remove_edge,
    star_graph,
)
from strategies import graphs, graphs_with_perm

UNIVERSE = load_universe()


def test_factor_critical_examples():
    assert is_factor_critical(cycle_graph(3))
    assert is_factor_critical(cycle_graph(5))
    assert not is_factor_critical(complete_graph(4))
    assert is_factor_critical(complete_graph(1))
    assert not is_factor_critical(path_graph(3))
    assert not is_factor_critical(disjoint_union(complete_graph(3), complete_graph(3), complete_graph(1)))


def test_factor_critical_matches_bruteforce():
    for g in UNIVERSE:
        assert is_factor_critical(g) == (g.is_connected() and is_factor_critical_bruteforce(
            adjacency_sets(g), range(g.order))), g


def test_sun_examples():
    assert is_sun(complete_graph(1)) and is_sun(complete_graph(2))
    assert is_sun(corona(cycle_graph(3)))
    assert sun_kernel(corona(cycle_graph(3))) == (0, 1, 2)
    assert not is_sun(cycle_graph(4))
    assert not is_sun(path_graph(4))  # corona of K2, which is not factor-critical
    assert not is_sun(corona(path_graph(3)))
    with pytest.raises(ValueError):
        is_sun(empty_graph(2))


def test_sun_recognition_matches_bruteforce():
    for g in UNIVERSE[1:]:
        if g.is_connected():
            assert is_sun(g) == is_sun_component_bruteforce(adjacency_sets(g), range(g.order)), g


def test_corona_of_factor_critical_is_sun():
    bases = [h for h in UNIVERSE if h.order >= 3 and h.is_connected() and h.order <= 7]
    seen = 0
    for h in bases:
        sun = corona(h)
        if is_factor_critical(h):
            seen += 1
            assert is_sun(sun) and sun_kernel(sun) == tuple(range(h.order))
        else:
            assert not is_sun(sun)
    assert seen > 0


def test_sun_decompose_examples():
    g = disjoint_union(empty_graph(2), complete_graph(2), cycle_graph(4))
    dec = sun_decompose(g)
    assert (dec.a, dec.b, dec.c, len(dec.non_suns), dec.sun_count) == (2, 1, 0, 1, 3)

    # remark 5 at n = r = 0 after deleting e inside a K2 and X = the clique
    rest = disjoint_union(*[complete_graph(2)] * 3, empty_graph(2))
    assert sun_count(rest) == 5

    dec = sun_decompose(corona(cycle_graph(5)))
    assert (dec.a, dec.b, dec.c, dec.sun_count) == (0, 0, 1, 1)
    assert dec.big_suns[0][1] == (0, 1, 2, 3, 4)


@settings(max_examples=80)
@given(graphs(max_order=8))
def test_sun_decomposition_invariants(g):
    dec = sun_decompose(g)
    parts = dec.isolated + dec.k2 + [c for c, _ in dec.big_suns] + dec.non_suns
    assert sorted(v for p in parts for v in p) == list(range(g.order))
    for comp, kernel in dec.big_suns:
        assert len(comp) % 2 == 0 and len(comp) >= 6
        assert len(kernel) % 2 == 1 and len(kernel) >= 3


@settings(max_examples=80)
@given(graphs(max_order=8))
def test_isolated_sun_component_chain(g):
    full = tuple(range(g.order))
    for xs in [(), full[:1], full[::2]]:
        i = deficiency_criterion(g, 2, xs)
        s = deficiency_criterion(g, 3, xs)
        assert i <= s <= omega_bruteforce(g, xs)


def test_decide_factor_examples():
    claw = decide_factor(star_graph(3), 2)
    assert not claw and claw.certificate.X == (0,) and claw.certificate.criterion == 3
    k2 = decide_factor(complete_graph(2), 3)
    assert not k2 and k2.certificate.X == () and k2.certificate.criterion == 1
    assert decide_factor(path_graph(3), 3)
    assert decide_factor(empty_graph(0), 3)


def test_first_violation_matches_unpruned_sweep():
    # the size bound and degree prune must never hide the first violating set
    for g in UNIVERSE:
        for k in (2, 3):
            d = decide_factor(g, k)
            expected = first_violation_bruteforce(g, k)
            if expected is None:
                assert d.holds, (g, k)
            else:
                assert (d.certificate.X, d.certificate.criterion) == expected, (g, k)


def test_extract_examples():
    p5 = extract_path_factor(path_graph(5), 3)
    assert p5 == [(0, 1, 2, 3, 4)]
    c6 = extract_path_factor(cycle_graph(6), 3)
    assert is_path_factor(cycle_graph(6), c6, 3)
    assert extract_path_factor(star_graph(3), 2) is None
    assert extract_path_factor(empty_graph(0), 2) == []


def test_extractor_matches_unrestricted_search():
    for g in UNIVERSE:
        if g.order > 6:
            continue
        for k in (2, 3):
            assert (extract_path_factor(g, k) is not None) == path_partition_exists_bruteforce(g, k), (g, k)


@given(graphs(max_order=8))
def test_extracted_factor_is_valid(g):
    for k in (2, 3):
        paths = extract_path_factor(g, k)
        if paths is not None:
            assert is_path_factor(g, paths, k)


def test_is_path_factor_rejects():
    g = path_graph(4)
    assert not is_path_factor(g, [(0, 1), (2, 3)], 3)
    assert not is_path_factor(g, [(0, 2), (1, 3)], 2)
    assert not is_path_factor(g, [(0, 1, 2)], 2)
    assert not is_path_factor(g, [(0, 1, 2), (2, 3)], 2)


@settings(max_examples=60)
@given(graphs(max_order=7))
def test_p3_factor_implies_p2_factor_and_monotone(g):
    d3, d2 = decide_factor(g, 3), decide_factor(g, 2)
    if d3:
        assert d2
    for k, d in ((2, d2), (3, d3)):
        if d:
            for u in range(g.order):
                for v in range(u + 1, g.order):
                    if not g.has_edge(u, v):
                        assert decide_factor(add_edge(g, u, v), k)


@settings(max_examples=60)
@given(graphs_with_perm(max_order=7))
def test_decisions_relabel_invariant(gp):
    g, perm = gp
    h = relabel(g, perm)
    for k in (2, 3):
        assert decide_factor(g, k).holds == decide_factor(h, k).holds
        assert is_avoidable(g, k).holds == is_avoidable(h, k).holds


def test_avoidable_examples():
    k2 = is_avoidable(complete_graph(2), 2)
    assert not k2
    assert k2.certificate.e == (0, 1) and k2.certificate.X == () and k2.certificate.criterion == 2
    assert is_avoidable(cycle_graph(7), 3)
    assert is_avoidable(complete_graph(5), 3)
    edgeless = is_avoidable(empty_graph(3), 2)
    assert edgeless and edgeless.vacuous


def test_avoidable_is_factor_after_each_deletion():
    for g in UNIVERSE[:200]:
        for k in (2, 3):
            expected = all(extract_path_factor(remove_edge(g, u, v), k) is not None for u, v in g.edges())
            assert is_avoidable(g, k).holds == expected


def test_critical_avoidable_examples():
    g = parse_construction("K3+(3*K1|K2)")
    d = is_critical_avoidable(g, 2, 1)
    assert not d
    c = d.certificate
    assert c.W == (0,) and c.e == (6, 7) and c.X == (1, 2)
    assert (c.criterion, c.bound) == (5, 4)
    assert validate_certificate(g, c)

    assert is_critical_avoidable(complete_graph(6), 3, 1)

    r5 = parse_construction("K2+(4*K2)")
    d = is_critical_avoidable(r5, 3, 0)
    assert not d
    assert d.certificate.X == (0, 1) and d.certificate.e == (2, 3)
    assert (d.certificate.criterion, d.certificate.bound) == (5, 4)


def test_critical_avoidable_vacuous_and_errors():
    d = is_critical_avoidable(complete_graph(3), 2, 3)
    assert d and d.vacuous
    with pytest.raises(ValueError):
        is_critical_avoidable(complete_graph(3), 2, 4)
    with pytest.raises(ValueError):
        decide_factor(complete_graph(3), 4)


@settings(max_examples=60)
@given(graphs(max_order=7))
def test_certificates_self_validate(g):
    for k in (2, 3):
        for d in (decide_factor(g, k), is_avoidable(g, k),
                  is_critical_avoidable(g, k, min(1, g.order))):
            if not d:
                c = d.certificate
                assert validate_certificate(g, c)
                h, label = residual_graph(g, c.W, c.e)
                xs = [label.index(x) for x in c.X]
                assert criterion_bruteforce(h, k, xs) == c.criterion > 2 * len(c.X)


def test_tampered_certificates_fail():
    g = parse_construction("K3+(3*K1|K2)")
    good = is_critical_avoidable(g, 2, 1).certificate
    for bad in (
        Certificate(good.kind, 2, good.W, good.e, good.X, good.criterion + 1, good.bound),
        Certificate(good.kind, 2, good.W, good.e, good.X[:1], good.criterion, good.bound),
        Certificate(good.kind, 2, good.W, (0, 1), good.X, good.criterion, good.bound),
        Certificate(good.kind, 2, good.W, good.e, (0, 1), good.criterion, good.bound),
    ):
        assert not validate_certificate(g, bad)
