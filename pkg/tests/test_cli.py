import io
import json

import pytest

from nanotopo.cli import main
from nanotopo.spacefile import dump_space_json, parse_space


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def s1_file(data_dir):
    return str(data_dir / "s1.json")


@pytest.fixture
def s2_file(data_dir):
    return str(data_dir / "s2.json")


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj, encoding="utf-8")
    return str(path)


def test_topology(s1_file):
    code, out = run("topology", s1_file)
    assert code == 0
    assert "lower: {p}\n" in out and "upper: {p,q,s}\n" in out and "boundary: {q,s}\n" in out
    assert "open: φ {p} {q,s} {p,q,s} {p,q,r,s}\n" in out
    assert "closed: φ {r} {p,r} {q,r,s} {p,q,r,s}\n" in out


def test_topology_empty_target(tmp_path):
    path = write(tmp_path, "e.json", {"universe": ["a", "b"], "partition": [["a"], ["b"]], "target": []})
    code, out = run("topology", path, "--format", "json")
    assert code == 0 and json.loads(out)["open"] == ["φ", "{a,b}"]


def test_topology_overlap_is_input_error(tmp_path, capsys):
    path = write(tmp_path, "bad.json", {"universe": ["p", "q", "r"], "partition": [["p", "q"], ["q", "r"]], "target": []})
    code, _ = run("topology", path)
    assert code == 1
    assert "OverlappingBlocks" in capsys.readouterr().err


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_topology_round_trip(s2_file, fmt):
    original = parse_space(open(s2_file).read())
    _, out = run("topology", s2_file, "--format", fmt)
    again = parse_space(out)
    assert again == original
    assert dump_space_json(again) == dump_space_json(original)


def test_stdin_input(s1_file, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(open(s1_file).read()))
    code, out = run("family", "-", "--kind", "n")
    assert code == 0 and out.splitlines()[0] == "φ"


def test_classify_semi_alpha_only_set(s1_file):
    code, out = run("classify", s1_file, "--set", "p,r", "--format", "json")
    rows = {r["kind"]: r for r in json.loads(out)["classes"]}
    assert code == 0
    assert rows["NSα"]["open"] is True
    assert rows["Nα"]["open"] is False
    assert rows["Np"]["open"] is False


def test_classify_empty_interior(s2_file):
    _, out = run("classify", s2_file, "--set", "q,s", "--format", "json")
    rows = {r["kind"]: r for r in json.loads(out)["classes"]}
    assert rows["NSα"]["interior"] == "φ"
    _, out = run("classify", s2_file, "--set", "q,s", "--via", "family", "--format", "json")
    assert {r["kind"]: r for r in json.loads(out)["classes"]}["NSα"]["interior"] == "φ"


def test_classify_empty_set(s1_file):
    code, out = run("classify", s1_file, "--set", "", "--format", "json")
    assert code == 0 and all(r["open"] for r in json.loads(out)["classes"])
    code, out = run("classify", s1_file, "--set", "")
    assert "set: φ" in out and out.count("true") >= 10


def test_classify_unknown_element(s1_file, capsys):
    code, _ = run("classify", s1_file, "--set", "p,z")
    assert code == 1 and "UnknownElement" in capsys.readouterr().err


def test_family_nsalpha_open(s1_file):
    code, out = run("family", s1_file, "--kind", "nsa", "--side", "open")
    lines = out.splitlines()
    assert code == 0
    assert set(lines[:-1]) == {"φ", "{p}", "{q,s}", "{p,r}", "{p,q,s}", "{q,r,s}", "{p,q,r,s}"}
    assert lines[-1].startswith("count: 7")


def test_family_alpha_closed(s2_file):
    _, out = run("family", s2_file, "--kind", "na", "--side", "closed", "--format", "json")
    data = json.loads(out)
    assert set(data["members"]) == {"{p,q,r,s}", "{p,q,s}", "{q,r}", "{q}", "φ"}
    assert data["count"] == 5


def test_family_nopen_is_tau(s1_file):
    _, out = run("family", s1_file, "--kind", "n", "--format", "json")
    assert json.loads(out)["members"] == ["φ", "{p}", "{q,s}", "{p,q,s}", "{p,q,r,s}"]


def test_family_too_large(tmp_path, capsys):
    names = [f"e{i}" for i in range(25)]
    path = write(tmp_path, "big.json", {"universe": names, "partition": [names], "target": []})
    code, _ = run("family", path, "--kind", "na")
    assert code == 1 and "EnumerationTooLarge" in capsys.readouterr().err


def test_verify_file(s1_file):
    code, out = run("verify", s1_file)
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 23
    assert lines[-1].startswith("summary: reports=22") and "fail=0" in lines[-1]


def test_verify_all_spaces_json(tmp_path):
    code, out = run("verify", "--all-spaces", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["reports"] == 240 * 22
    assert data["summary"]["fail"] == 0


def test_verify_cap(capsys):
    code, _ = run("verify", "--all-spaces", "12")
    assert code == 1 and "EnumerationTooLarge" in capsys.readouterr().err


def test_verify_failure_exit_code(s1_file, monkeypatch):
    from nanotopo.verifier import CLAUSES, Clause, TheoremId, over_subsets

    monkeypatch.setitem(CLAUSES, TheoremId.P2_5, [Clause("never", over_subsets, lambda t, x: x < 0)])
    code, out = run("verify", s1_file)
    assert code == 2 and "P2_5  fail" in out


def test_mine_commands():
    code, out = run("mine", "--size", "4", "--goal", "NSaO&!NaO")
    assert code == 0 and "witness:" in out
    code, out = run("mine", "--size", "1", "--goal", "NSaO&!NaO")
    assert code == 0 and out.splitlines()[-1] == "none"
    code, out = run("mine", "--size", "4", "--goal", "meet-escape:NSaO", "--format", "json")
    data = json.loads(out)
    assert data["found"] and len(data["witnesses"]) == 2


def test_mine_unknown_goal(capsys):
    code, _ = run("mine", "--size", "3", "--goal", "bogus")
    assert code == 1 and "UnknownGoal" in capsys.readouterr().err


def test_usage_errors_exit_1():
    assert run("family")[0] == 1
    assert run("nonsense")[0] == 1
    assert run("verify")[0] == 1


def _edges(out):
    data = json.loads(out)
    return {(e["from"], e["to"]): e["relation"] for e in data["edges"]}, {n["id"]: n["count"] for n in data["nodes"]}


def test_diagram_on_s1(s1_file):
    _, out = run("diagram", s1_file, "--format", "json")
    edges, counts = _edges(out)
    assert edges[("Na", "NSa")] == "strict"
    assert counts["NSa"] - counts["Na"] == 2
    assert edges[("Ns", "NSa")] == "="
    assert edges[("Np", "NSa")] == "independent"


def test_diagram_full_target(tmp_path):
    path = write(tmp_path, "u.json", {"universe": list("pqrs"), "partition": [["p"], ["r"], ["q", "s"]], "target": list("pqrs")})
    _, out = run("diagram", path, "--format", "json")
    edges, counts = _edges(out)
    # tau = {φ, U}: every set is pre-open, every other class is {φ, U}
    assert counts == {"N": 2, "Na": 2, "Ns": 2, "Np": 16, "NSa": 2}
    assert edges[("Na", "Np")] == "strict"
    assert all(rel == "=" for key, rel in edges.items() if "Np" not in key)
    assert edges[("Np", "NSa")] == "⊃"


def test_diagram_dot_parses(s1_file):
    pydot = pytest.importorskip("pydot")
    code, out = run("diagram", s1_file, "--dot")
    assert code == 0
    (graph,) = pydot.graph_from_dot_data(out)
    assert {n.get_name() for n in graph.get_nodes()} >= {"N", "Na", "Ns", "Np", "NSa"}
    assert len(graph.get_edges()) == 7


def test_diagram_text(s1_file):
    code, out = run("diagram", s1_file)
    assert code == 0 and "NSα" in out and "independent" in out


def test_output_deterministic(s1_file):
    for argv in (["topology", s1_file], ["diagram", s1_file, "--dot"], ["verify", s1_file, "--format", "json"]):
        assert run(*argv) == run(*argv)


def test_text_space_file(tmp_path):
    path = write(tmp_path, "s.txt", "universe: {p,q,r,s}\npartition: {p} {r} {q,s}\ntarget: {p,q}\n")
    code, out = run("family", path, "--kind", "na", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 5


@pytest.mark.parametrize(
    "content", ["{not json", '{"universe": ["a"]}', '{"universe": "a", "partition": [], "target": []}', "target: φ\n"]
)
def test_malformed_space_files(tmp_path, content, capsys):
    code, _ = run("topology", write(tmp_path, "m.txt", content))
    assert code == 1 and "SpaceFileError" in capsys.readouterr().err


def test_missing_file(capsys):
    assert run("topology", "/nonexistent/space.json")[0] == 1
