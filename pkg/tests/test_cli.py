import json

from shatterlab.cli import main

GOLDEN_TABLE_TSV = """b\tu0-1\tl1\tu1-1\tl2\tu2-1\tl3\tu3-1\tl4\tu4-1\tl5
2\t2\t3
3\t3\t4\t5\t6
4\t4\t5\t7\t9\t11\t12
5\t5\t6\t9\t12\t15\t18\t23\t24
6\t6\t7\t11\t16\t19\t27\t31\t36\t47\t48
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bounds_tsv_golden(capsys):
    code, out, _ = run(capsys, "bounds", "--b-max", "6", "--format", "tsv")
    assert code == 0
    assert out == GOLDEN_TABLE_TSV


def test_bounds_json_carries_gap_flags(capsys):
    code, out, _ = run(capsys, "bounds", "--b-max", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = {r["b"]: r for r in payload["rows"]}
    assert rows[4]["entries"] == [4, 5, 7, 9, 11, 12]
    assert rows[4]["gap_flags"] == [False, True, False]


def test_bounds_zeta_range(capsys):
    code, out, _ = run(capsys, "bounds", "--zeta", "3..6", "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "b\tzeta"
    assert lines[1:] == ["3\t8", "4\t9", "5\t11", "6\t12"]


def test_shatter_profile_and_b(tmp_path, capsys):
    path = tmp_path / "s.ss"
    path.write_text("n 3\n-\n1\n2\n3\n1 2\n")
    code, out, _ = run(capsys, "shatter", "--input", str(path), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["profile"] == [1, 2, 4, 5]
    assert payload["vc_dimension"] == 2
    code, out, _ = run(capsys, "shatter", "--input", str(path), "--b", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["value"] == 4 and payload["witness"] == [1, 2]


def test_shatter_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "shatter", "--input", "missing.ss")
    assert code == 2
    assert "error" in err


def test_compress_round_trip(tmp_path, capsys):
    path = tmp_path / "in.ss"
    path.write_text("n 2\n1 2\n")
    code, out, err = run(capsys, "compress", "--input", str(path), "--trace-passes")
    assert code == 0
    assert out == "n 2\n-\n"
    assert "pass 1" in err


def test_make_outputs_parse_back(tmp_path, capsys):
    out_ss = tmp_path / "lam.ss"
    assert main(["make", "lambda", "--n", "6", "--i", "2", "--output", str(out_ss)]) == 0
    from shatterlab import parse_set_system

    system = parse_set_system(out_ss.read_text())
    assert len(system) == 9

    out_g = tmp_path / "levi.g"
    assert main(["make", "levi", "--q", "2", "--output", str(out_g)]) == 0
    from shatterlab import parse_graph

    graph = parse_graph(out_g.read_text())
    assert graph.n == 14 and graph.edge_count() == 21

    out_pf = tmp_path / "f1.pf"
    assert main(["make", "f1", "--n", "6", "--output", str(out_pf)]) == 0
    from shatterlab import parse_family

    family = parse_family(out_pf.read_text())
    assert len(family) == 4

    sys_out = tmp_path / "levi.ss"
    assert main(["make", "graph2sys", "--input", str(out_g), "--output", str(sys_out)]) == 0
    system = parse_set_system(sys_out.read_text())
    assert len(system) == 1 + 14 + 21
    capsys.readouterr()


def test_make_requires_parameters(capsys):
    code, _, err = run(capsys, "make", "lambda", "--i", "2")
    assert code == 2
    assert "requires --n" in err


def test_search_graph_ex(capsys):
    code, out, _ = run(capsys, "search", "graph-ex", "--n", "5", "--m", "4", "--k", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["optimum"] == 5
    assert payload["witness_edges"] == [[1, 2], [1, 3], [2, 4], [3, 5], [4, 5]]


def test_search_set_extremal(capsys):
    code, out, _ = run(capsys, "search", "set-extremal", "--n", "5", "--b", "3", "--k", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["optimum"] == 12
    assert payload["exhaustive"] is True


def test_search_perm_extremal(capsys):
    code, out, _ = run(capsys, "search", "perm-extremal", "--n", "5", "--m", "5", "--k", "3", "--format", "tsv")
    assert code == 0
    lines = dict(line.split("\t", 1) for line in out.strip().splitlines())
    assert lines["optimum"] == "3"


def test_perm_phi_and_reduce(tmp_path, capsys):
    pf = tmp_path / "f.pf"
    assert main(["make", "f2", "--n", "6", "--output", str(pf)]) == 0
    code, out, _ = run(capsys, "perm", "phi", "--input", str(pf), "--m", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == 4

    out_sys = tmp_path / "red.ss"
    out_pairs = tmp_path / "pairs.tsv"
    code, out, _ = run(
        capsys, "perm", "reduce", "--input", str(pf),
        "--out-system", str(out_sys), "--out-pairs", str(out_pairs),
    )
    assert code == 0
    assert out_pairs.read_text().splitlines()[0] == "index\ti\tj"
    assert out_pairs.read_text().splitlines()[1] == "1\t1\t2"
    from shatterlab import parse_set_system

    system = parse_set_system(out_sys.read_text())
    assert system.n == 3 and len(system) == 8


def test_verify_exit_codes_and_formats(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma2", "--format", "tsv")
    assert code == 0
    for line in out.strip().splitlines():
        status, name, values = line.split("\t")
        assert status == "PASS"
        json.loads(values)


def test_verify_json_tsv_equivalence(capsys):
    code, tsv_out, _ = run(capsys, "verify", "--suite", "bollobas-radcliffe", "--format", "tsv")
    assert code == 0
    code, json_out, _ = run(capsys, "verify", "--suite", "bollobas-radcliffe", "--format", "json")
    assert code == 0
    payload = json.loads(json_out)
    tsv_rows = {}
    for line in tsv_out.strip().splitlines():
        status, name, values = line.split("\t")
        tsv_rows[name] = (status == "PASS", json.loads(values))
    for check in payload["checks"]:
        passed, values = tsv_rows[check["name"]]
        assert passed == check["passed"]
        assert values == check["values"]


def test_verify_seed_determinism(capsys):
    args = ["verify", "--suite", "lemma3", "--cases", "15", "--seed", "5", "--format", "json"]
    code, first, _ = run(capsys, *args)
    assert code == 0
    code, second, _ = run(capsys, *args)
    assert first == second


def test_verify_figdir_writes_figure(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, _, _ = run(
        capsys, "verify", "--suite", "frankl", "--figdir", str(figdir), "--format", "tsv"
    )
    assert code == 0
    target = figdir / "verify-frankl.png"
    assert target.exists()
    assert target.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_bounds_figdir_writes_table_figure(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, _, _ = run(capsys, "bounds", "--b-max", "6", "--figdir", str(figdir), "--format", "tsv")
    assert code == 0
    assert (figdir / "table1.png").exists()


def test_bad_zeta_spec_is_usage_error(capsys):
    code, _, err = run(capsys, "bounds", "--zeta", "3-6")
    assert code == 2
    assert "A..B" in err


def test_verify_lemma2_narrowed_to_one_instance(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma2", "--n", "5", "--b", "4", "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert "equivalence-b4-n5" in lines[0]


def test_node_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("SHATTERLAB_NODE_BUDGET", "60")
    code, out, _ = run(capsys, "search", "graph-ex", "--n", "7", "--m", "4", "--k", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["exhaustive"] is False
    assert payload["nodes"] == 61


def test_make_remaining_kinds(tmp_path, capsys):
    out = tmp_path / "t.g"
    assert main(["make", "turan", "--n", "6", "--i", "3", "--output", str(out)]) == 0
    from shatterlab import parse_graph

    assert parse_graph(out.read_text()).edge_count() == 12

    out = tmp_path / "vc.ss"
    assert main(["make", "vc-remark", "--n", "6", "--i", "3", "--output", str(out)]) == 0
    from shatterlab import parse_set_system

    assert len(parse_set_system(out.read_text())) == 8 + 3  # cube plus the non-cube singletons

    out = tmp_path / "f2.pf"
    assert main(["make", "f2", "--n", "5", "--output", str(out)]) == 0
    out2 = tmp_path / "idp.pf"
    assert main(["make", "id-perturbed", "--n", "4", "--output", str(out2)]) == 0
    from shatterlab import parse_family

    assert len(parse_family(out.read_text())) == 4
    assert len(parse_family(out2.read_text())) == 10
    capsys.readouterr()
