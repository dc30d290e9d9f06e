import json
from fractions import Fraction

import networkx as nx
import pytest

from oracles import load_universe
from pathfactor.formats import (
    FormatError,
    ReportDocument,
    decode_rational,
    emit_edge_list,
    emit_graph6,
    encode_rational,
    parse_edge_list,
    parse_graph6,
    to_jsonable,
)
from pathfactor.graph import complete_graph, cycle_graph, empty_graph, path_graph
from pathfactor.params import INF


def _nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_graph6_examples_match_reference():
    assert emit_graph6(complete_graph(3)) == "Bw" == _nx_graph6(complete_graph(3))
    assert emit_graph6(path_graph(3)) == "Bg" == _nx_graph6(path_graph(3))
    assert emit_graph6(empty_graph(0)) == "?"
    assert parse_graph6("Bw") == complete_graph(3)
    assert parse_graph6("?") == empty_graph(0)
    assert parse_graph6(">>graph6<<Bg") == path_graph(3)


def test_graph6_roundtrip_on_universe():
    lines = [emit_graph6(g) for g in load_universe()]
    for g, line in zip(load_universe(), lines):
        assert parse_graph6(line) == g
        assert emit_graph6(parse_graph6(line)) == line


def test_graph6_larger_orders_match_reference():
    for n in (10, 31, 62):
        g = cycle_graph(n)
        assert emit_graph6(g) == _nx_graph6(g)
        assert parse_graph6(emit_graph6(g)) == g


@pytest.mark.parametrize("text", ["", "B", "Bww", "B\x7f", "Bx", "~?"])
def test_graph6_errors(text):
    with pytest.raises(FormatError):
        parse_graph6(text)


def test_edge_list_examples():
    assert parse_edge_list("2 1\n0 1") == complete_graph(2)
    assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4)
    assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == complete_graph(3)
    text = "# triangle\n\n3 3\n0 1  # first\n1 2\n\n0 2\n"
    assert parse_edge_list(text) == complete_graph(3)
    assert parse_edge_list(emit_edge_list(cycle_graph(5))) == cycle_graph(5)


@pytest.mark.parametrize("text, fragment", [
    ("", "header"),
    ("2 1\n0 x", "line 2"),
    ("2 2\n0 1", "announces 2"),
    ("2 1\n0 2", "out of range"),
    ("3 2\n0 1\n1 0", "duplicate"),
    ("2 1\n0 1 5", "line 2"),
])
def test_edge_list_errors(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_edge_list(text)


def test_rationals_never_floats():
    assert encode_rational(Fraction(3, 2)) == {"num": 3, "den": 2}
    assert encode_rational(INF) == "inf"
    assert decode_rational({"num": 3, "den": 2}) == Fraction(3, 2)
    assert decode_rational("inf") == INF
    with pytest.raises(TypeError):
        to_jsonable({"x": 0.5})


def test_report_document_roundtrip():
    doc = ReportDocument("0.1.0", "analyze --expr K4", "sha256:00",
                         {"t": INF, "I": Fraction(1, 3), "witness": (0, 2)}, None)
    text = doc.to_json()
    back = ReportDocument.from_json(text)
    assert back.to_json() == text
    data = json.loads(text)
    assert list(data) == ["toolVersion", "command", "inputDigest", "results", "timing"]
    assert data["results"]["I"] == {"num": 1, "den": 3}
    assert decode_rational(data["results"]["t"]) == INF
