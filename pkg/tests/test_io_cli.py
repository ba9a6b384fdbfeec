import json
from io import StringIO

import jsonschema
import pytest

from pmdkit import io
from pmdkit.cli import main
from pmdkit.covers import tau_n_cover
from pmdkit.errors import InvalidInput
from pmdkit.graphs import MultiGraph, cycle, path
from pmdkit.latin import cyclic_latin_rectangle
from pmdkit.reproduce import reproduce_tables
from pmdkit.solver import pmd_exact


def valid(doc, name):
    jsonschema.validate(doc, io.schema(name))
    return True


def run(*argv):
    out = StringIO()
    code = main(list(argv), out=out)
    text = out.getvalue()
    try:
        return code, json.loads(text)
    except json.JSONDecodeError:
        return code, text


def test_graph_roundtrips():
    g = cycle(5)
    doc = io.graph_to_json(g)
    assert valid(doc, "graph") and io.graph_from_json(doc) == g
    assert io.parse_edge_list(io.format_edge_list(g)) == g
    assert io.parse_edge_list("# comment\n0 1\n1 2  # tail\n").m == 2
    with pytest.raises(InvalidInput):
        io.parse_edge_list("0 1 2\n")


def test_multigraph_roundtrip():
    mg = MultiGraph(3, {(0, 1): 2, (1, 2): 1})
    doc = io.multigraph_to_json(mg)
    assert valid(doc, "multigraph") and io.multigraph_from_json(doc) == mg


def test_decomposition_roundtrip():
    d = pmd_exact(cycle(5))[1].with_certificates()
    doc = io.decomposition_to_json(d)
    assert valid(doc, "decomposition")
    assert io.decomposition_from_json(doc) == d
    for c in doc["certificates"]:
        assert valid(c, "certificate")


def test_latin_and_cover_roundtrip():
    rows = cyclic_latin_rectangle(2, 4)
    doc = io.latin_to_json(rows)
    assert valid(doc, "latin") and io.latin_from_json(doc) == rows
    fam = [[(0, 1), (2, 3)], [(1, 2)], [(3, 4)], [(0, 4)]]
    c = tau_n_cover(cycle(5), fam, 2)
    doc = io.cover_to_json(c)
    assert valid(doc, "cover") and io.cover_from_json(doc, cycle(5), fam, 2) == c


def test_report_schema():
    assert valid(reproduce_tables(30, [6]).to_json(), "report")


def test_dot():
    text = io.to_dot(path(3), [[(0, 1)], [(1, 2)]])
    assert text.startswith("graph G {") and 'label="2"' in text


def test_unknown_schema():
    with pytest.raises(InvalidInput):
        io.schema("nope")


# ------------------------------------------------------------------ cli


def test_cli_pmd_exact():
    code, doc = run("pmd", "--family", "cycle:6", "--exact")
    assert code == 0 and doc["pmd"] == 3
    assert valid(doc["decomposition"], "decomposition")
    assert len(doc["decomposition"]["parts_labelled"]) == 3


def test_cli_gen_formats():
    code, doc = run("gen", "--family", "pmcn:3,4")
    assert code == 0 and valid(doc, "graph") and "(1,1)" in doc["labels"]
    code, text = run("gen", "--family", "path:3", "--format", "edgelist")
    assert code == 0 and text.split() == ["3", "0", "1", "1", "2"]


def test_cli_verify(tmp_path):
    g = tmp_path / "g.json"
    g.write_text(json.dumps(io.graph_to_json(cycle(4))))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"parts": [[[0, 1], [2, 3]], [[1, 2]], [[0, 3]]]}))
    code, doc = run("verify", str(g), str(bad))
    assert code == 1 and doc["failing_part"] == 1 and len(doc["walk"]) == 5
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"parts": [[[0, 1]], [[1, 2], [0, 3]], [[2, 3]]]}))
    assert run("verify", str(g), str(good))[0] == 0


def test_cli_construct():
    code, doc = run("construct", "grid:pmcn", "--m", "3", "--n", "7")
    assert code == 0 and doc["parts"] == 4 and doc["verified"]
    code, doc = run("construct", "basic", "--g1", "path:2", "--g2", "path:2")
    assert code == 0 and doc["parts"] == 3
    assert run("construct", "grid:pmcn", "--m", "3")[0] == 3
    assert run("construct", "grid:cw", "--m", "2", "--n", "5")[0] == 3


def test_cli_decide_and_budget():
    assert run("pmd", "--family", "cycle:4", "--decide", "2")[0] == 1
    assert run("pmd", "--family", "path:4", "--decide", "2")[0] == 0
    code, doc = run("pmd", "--family", "cmcn:4,4", "--decide", "5", "--budget", "0.01")
    assert code == 2


def test_cli_kappa_rho_recognize():
    assert run("kappa", "--family", "cycle:6", "--n", "1", "--p", "3")[1]["kappa"] == 2
    assert run("kappa", "--closed-form", "--m", "5", "--n", "2", "--p", "4")[1]["kappa"] == 3
    assert run("kappa", "--closed-form", "--m", "4", "--n", "1", "--p", "3")[0] == 3
    assert run("rho", "--family", "complete:4")[1]["rho"] == 2
    assert run("rho", "--family", "cycle:3", "--mult", "2", "--mode", "oracle")[1]["rho"] == 3
    code, doc = run("recognize", "--family", "path:4", "--kind", "npb")
    assert code == 1
    assert run("recognize", "--family", "cycle:4", "--kind", "multipartite")[0] == 0


def test_cli_latin_and_cover(tmp_path):
    code, doc = run("latin", "--m", "2", "--n", "3", "--parts", "1,2;1,2;1,2")
    assert code == 0 and doc["verified"] and valid({k: doc[k] for k in ("rows", "symbols")}, "latin")
    pmd = tmp_path / "p.json"
    pmd.write_text(json.dumps({"parts": [[[0, 1], [2, 3]], [[1, 2]], [[3, 4]], [[0, 4]]]}))
    code, doc = run("cover", "--family", "cycle:5", "--pmd", str(pmd), "--n", "2")
    assert code == 0 and doc["tau"] == 3


def test_cli_usage_errors():
    assert run()[0] == 3
    assert run("pmd")[0] == 3
    assert run("nonsense")[0] == 3
    assert run("gen", "--family", "cycle:2")[0] == 3


def test_cli_reproduce_table():
    code, text = run("reproduce", "--criteria", "6", "--table")
    assert code == 0 and "PASS" in text
