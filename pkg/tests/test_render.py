import json

import jsonschema
import pydot
import pytest

from sl2hecke.quotient import build_quotient_graph
from sl2hecke.render import load_schema, render


@pytest.mark.parametrize("p", [5, 7, 13, 29])
def test_json_validates(p):
    doc = json.loads(render(build_quotient_graph(p), "json"))
    jsonschema.validate(doc, load_schema())
    assert doc["p"] == p and doc["g"] == build_quotient_graph(p).g


def test_schema_rejects_bad_documents():
    doc = json.loads(render(build_quotient_graph(5), "json"))
    doc["glue_edges"][0]["point"] = "middle"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, load_schema())


@pytest.mark.parametrize("p", [5, 13])
def test_dot_parses(p):
    graphs = pydot.graph_from_dot_data(render(build_quotient_graph(p), "dot"))
    assert len(graphs) == 1
    g = graphs[0]
    assert len(g.get_nodes()) - sum(n.get_name() in ("node", "edge", "graph") for n in g.get_nodes()) == (p + 1) // 2
    edges = g.get_edges()
    assert len(edges) == (p - 3) // 2
    assert edges[0].get_source() == "P1:O" and edges[0].get_destination() == "P3:inf"


def test_ascii_lists_components():
    text = render(build_quotient_graph(13), "ascii")
    assert "P1 - P3 - P5 - P7" in text and "P2 - P4 - P6" in text
    assert "O_1 ~ ∞_3" in text


def test_svg_is_deterministic():
    a = render(build_quotient_graph(7), "svg")
    b = render(build_quotient_graph(7), "svg")
    assert a == b
    assert a.lstrip().startswith("<?xml") and "<svg" in a


def test_unknown_format():
    with pytest.raises(ValueError):
        render(build_quotient_graph(5), "png")
