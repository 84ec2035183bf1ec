import io
import json
import os

import pytest
import jsonschema

import DistanceCritical
from DistanceCritical import cli
from DistanceCritical.cli import main
from DistanceCritical.enumeration import survey
from DistanceCritical.graphs import Graph, encode_graph6, decode_graph6, complete_graph, canonical_graph
from DistanceCritical.constructions import cycle, petersen


def load_schema(name):
    schema_dir = os.path.join(os.path.dirname(os.path.realpath(DistanceCritical.__file__)), "schemas")
    with open(os.path.join(schema_dir, "{}.schema.json".format(name))) as f:
        return json.load(f)


@pytest.fixture
def stdin(monkeypatch, request):
    monkeypatch.setattr("sys.stdin", io.StringIO(request.param))
    return request.param


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out.splitlines(), err


C5 = encode_graph6(cycle(5))
K4 = encode_graph6(complete_graph(4))


def test_check_c5(capsys):
    code, lines, _ = run(capsys, ["check", "--graph", C5])
    assert code == 0
    report = json.loads(lines[0])
    jsonschema.validate(report, load_schema("report"))
    assert report["critical"]
    assert list(report) == ["n", "critical", "method", "witnesses", "involved"]


@pytest.mark.parametrize("stdin", [K4 + "\n"], indirect=True)
def test_check_k4_from_stdin(capsys, stdin):
    code, lines, _ = run(capsys, ["check"])
    assert code == 1
    assert json.loads(lines[0])["critical"] is False


@pytest.mark.parametrize("stdin", [C5 + "\n\n" + encode_graph6(petersen()) + "\n"], indirect=True)
def test_check_batch_both_methods(capsys, stdin):
    code, lines, _ = run(capsys, ["check", "--method", "both"])
    assert code == 0
    assert len(lines) == 2
    for line in lines:
        report = json.loads(line)
        jsonschema.validate(report, load_schema("report"))
        assert report["agree"] and report["critical"] and report["method"] == "both"


@pytest.mark.parametrize("stdin", [C5 + "\nC!~\n"], indirect=True)
def test_bad_input_prints_nothing(capsys, stdin):
    code, lines, err = run(capsys, ["check"])
    assert code == 2
    assert lines == []
    assert "character" in err


@pytest.mark.parametrize("stdin", [""], indirect=True)
def test_no_input(capsys, stdin):
    code, lines, _ = run(capsys, ["stats"])
    assert code == 2
    assert lines == []


def test_check_direct(capsys):
    code, lines, _ = run(capsys, ["check", "--method", "direct", "--graph", C5])
    assert code == 0
    assert json.loads(lines[0]) == {"n": 5, "critical": True, "method": "direct", "witnesses": [], "involved": []}


def test_pairs(capsys):
    code, lines, _ = run(capsys, ["pairs", "--vertex", "0", "--graph", encode_graph6(cycle(6))])
    assert code == 0
    out = json.loads(lines[0])
    jsonschema.validate(out, load_schema("pairs"))
    assert out == {"n": 6, "pairs": [{"v": 0, "pairs": [[1, 5]]}]}
    code, lines, _ = run(capsys, ["pairs", "--graph", C5])
    assert len(json.loads(lines[0])["pairs"]) == 5


def test_pairs_vertex_out_of_range(capsys):
    code, lines, _ = run(capsys, ["pairs", "--vertex", "9", "--graph", C5])
    assert code == 2
    assert lines == []


def test_stats(capsys):
    code, lines, _ = run(capsys, ["stats", "--graph", encode_graph6(petersen())])
    assert code == 0
    out = json.loads(lines[0])
    jsonschema.validate(out, load_schema("stats"))
    assert out["girth"] == 5 and out["critical"] and out["involved_size"] == 10


def test_product(capsys):
    k2 = encode_graph6(complete_graph(2))
    code, lines, _ = run(capsys, ["product", "--kind", "tensor", k2, k2])
    assert code == 0
    assert lines == [encode_graph6(Graph.from_edges(4, [(0, 3), (1, 2)]))]


def test_construct(capsys):
    code, lines, _ = run(capsys, ["construct", "cycle", "-n", "5"])
    assert (code, lines) == (0, [C5])
    code, lines, _ = run(capsys, ["construct", "--format", "dot", "cycle", "-n", "3"])
    assert lines == ["graph {", "  0;", "  1;", "  2;", "  0 -- 1;", "  0 -- 2;", "  1 -- 2;", "}"]
    code, lines, _ = run(capsys, ["construct", "dodecahedron"])
    assert decode_graph6(lines[0]).n == 20


@pytest.mark.parametrize("argv,family,n", [(["gamma", "-m", "3"], "gamma", 12), (["embed", "Bw"], "embed", 12)])
def test_construct_layout(capsys, argv, family, n):
    code, lines, _ = run(capsys, ["construct", "--layout"] + argv)
    assert code == 0
    assert decode_graph6(lines[0]).n == n
    layout = json.loads(lines[1])
    jsonschema.validate(layout, load_schema("layout"))
    assert layout["family"] == family
    assert layout["roles"] == ["A"] * 3 + ["B"] * 3 + ["C"] * 6
    assert layout["injection"] == (None if family == "gamma" else [0, 1, 2])


def test_construct_layout_unavailable(capsys):
    code, lines, err = run(capsys, ["construct", "--layout", "cycle", "-n", "5"])
    assert code == 2
    assert lines == []


def test_construct_invalid_parameter(capsys):
    code, lines, _ = run(capsys, ["construct", "gamma", "-m", "2"])
    assert code == 2
    assert lines == []


def test_construct_regular(capsys):
    code, lines, _ = run(capsys, ["construct", "regular", "-n", "16"])
    assert code == 0
    assert decode_graph6(lines[0]).degrees() == [7] * 16
    code, lines, err = run(capsys, ["construct", "regular", "-n", "12"])
    assert code == 2
    assert lines == []
    assert "4 mod 8" in err


def test_enumerate_count_only(capsys):
    code, lines, _ = run(capsys, ["enumerate", "-n", "7", "--count-only"])
    assert code == 0
    tally = json.loads(lines[0])
    jsonschema.validate(tally, load_schema("tally"))
    assert tally["critical_count"] == 4
    assert tally["maximal_count"] is None


def test_enumerate_streams_hits(capsys):
    code, lines, err = run(capsys, ["enumerate", "-n", "6", "--edge-maximal"])
    assert code == 0
    assert lines == [encode_graph6(decode_graph6(lines[0]))]
    assert decode_graph6(lines[0]).number_of_edges() == 6
    tally = json.loads(err.strip().splitlines()[-1])
    assert tally["maximal_count"] == 1


def test_enumerate_shards(capsys):
    counts = []
    for shard in range(2):
        code, lines, _ = run(capsys, ["enumerate", "-n", "7", "--count-only", "--shards", "2", "--shard", str(shard)])
        tally = json.loads(lines[0])
        assert tally["partition"] == [shard, 2]
        counts.append(tally["critical_count"])
    assert sum(counts) == 4


def test_enumerate_prints_each_hit_on_arrival(capsys, monkeypatch):
    printed = []

    def spying_survey(n, visitor=None, **kwargs):
        def spy(g):
            visitor(g)
            printed.append((encode_graph6(g), capsys.readouterr().out))

        return survey(n, visitor=spy, **kwargs)

    monkeypatch.setattr(cli, "survey", spying_survey)
    code, lines, err = run(capsys, ["enumerate", "-n", "7"])
    assert code == 0
    assert lines == []
    assert len(printed) == 4
    assert all(out == g6 + "\n" for g6, out in printed)
    assert json.loads(err.strip().splitlines()[-1])["critical_count"] == 4


def test_enumerate_bad_shard_prints_nothing(capsys):
    code, lines, err = run(capsys, ["enumerate", "-n", "6", "--shards", "2", "--shard", "2"])
    assert code == 2
    assert lines == []
    assert "distcrit: error" in err


def test_enumerate_emit_canonical(capsys):
    _, plain, _ = run(capsys, ["enumerate", "-n", "7"])
    code, lines, _ = run(capsys, ["enumerate", "-n", "7", "--emit", "canonical"])
    assert code == 0
    assert lines == [encode_graph6(canonical_graph(decode_graph6(g6))) for g6 in plain]


def test_enumerate_long_run_gate(capsys):
    code, lines, err = run(capsys, ["enumerate", "-n", "11", "--count-only"])
    assert code == 2
    assert "allow_long_run" in err


def test_verify_json(capsys):
    code, lines, _ = run(capsys, ["verify", "--lemma", "S_SIZE", "--n-cap", "5", "--json"])
    assert code == 0
    out = json.loads(lines[0])
    jsonschema.validate(out, load_schema("lemma"))
    assert out["passed"] and out["checked"] == 1


def test_verify_text(capsys):
    code, lines, _ = run(capsys, ["verify", "--lemma", "NO_DOM", "--n-cap", "6"])
    assert code == 0
    assert lines == ["NO_DOM: pass (2 checked, 0 violations)"]


def test_verify_unknown_lemma(capsys):
    code, lines, _ = run(capsys, ["verify", "--lemma", "NOPE", "--n-cap", "5"])
    assert code == 2
    assert lines == []


def test_output_is_deterministic(capsys):
    first = run(capsys, ["check", "--graph", encode_graph6(petersen())])
    second = run(capsys, ["check", "--graph", encode_graph6(petersen())])
    assert first[1] == second[1]


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["check", "--method", "bfs"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert DistanceCritical.__version__ in capsys.readouterr().out
