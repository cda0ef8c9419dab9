import json

from coverzeta import bundled_spec, spec_from_dict, spec_to_dict
from coverzeta.census import read_census, run_census
from coverzeta.cli import main
from coverzeta.serre import bouquet
from coverzeta.specfile import dump_spec, load_spec


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_analyze_bundled_example_succeeds(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["analyze", "example1", "--out", str(out), "--table", "--dot"])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["pic0"] == [3, 12]
    printed = capsys.readouterr().out
    assert "h(1, gamma^i) in F_5" in printed
    assert "graph base" in printed and "graph cover" in printed


def test_analyze_writes_report_to_stdout(capsys):
    code = main(["analyze", "example2"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["sylow_factors"] == [5]


def test_analyze_parse_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["analyze", str(path)]) == 2
    missing = write(tmp_path, "missing.json", {"p": 5, "vertices": ["a"]})
    assert main(["analyze", missing]) == 2
    bad_voltage = write(
        tmp_path,
        "bad_voltage.json",
        {"p": 5, "vertices": ["a"], "edges": [{"from": "a", "to": "a", "voltage": 5}]},
    )
    assert main(["analyze", bad_voltage]) == 2


def test_analyze_disconnected_cover(tmp_path):
    doc = {
        "p": 5,
        "vertices": ["a"],
        "edges": [
            {"from": "a", "to": "a", "voltage": 1},
            {"from": "a", "to": "a", "voltage": 1},
        ],
    }
    assert main(["analyze", write(tmp_path, "t.json", doc)]) == 3


def test_analyze_verification_failure_exit_code(tmp_path, monkeypatch):
    import coverzeta.cli as cli_mod
    from coverzeta.herbrand import build_report as real_build

    def sabotaged(cover, precision=None, enumeration_budget=0):
        report = real_build(cover)
        report.global_verdicts["duality"] = type(
            report.global_verdicts["duality"]
        )("FAIL", "forced for the exit-code test")
        return report

    monkeypatch.setattr(cli_mod, "build_report", sabotaged)
    out = tmp_path / "r.json"
    assert main(["analyze", "example1", "--out", str(out)]) == 4


def test_analyze_precision_flag_and_env(tmp_path, monkeypatch, capsys):
    out = tmp_path / "r.json"
    assert main(["analyze", "example2", "--out", str(out), "--precision", "7"]) == 0
    assert json.loads(out.read_text())["precision"] == 7
    monkeypatch.setenv("HERBRAND_PRECISION", "6")
    assert main(["analyze", "example2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["precision"] == 6
    monkeypatch.setenv("HERBRAND_PRECISION", "junk")
    assert main(["analyze", "example2", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["precision"] == 3
    assert "ignoring" in capsys.readouterr().err


def test_dot_bundled_example(capsys):
    assert main(["dot", "example1"]) == 0
    text = capsys.readouterr().out
    assert "graph base" in text and "graph cover" in text
    for s in range(1, 5):
        assert f'"v1:{s}"' in text
    assert text.count(" -- ") == 2 + 8


def test_dot_small_loop_cover(tmp_path, capsys):
    doc = {
        "p": 3,
        "vertices": ["a"],
        "edges": [{"from": "a", "to": "a", "voltage": 2}],
    }
    assert main(["dot", write(tmp_path, "b1.json", doc)]) == 0
    text = capsys.readouterr().out
    cover_part = text.split("graph cover")[1]
    assert '"a:1"' in cover_part and '"a:2"' in cover_part
    assert cover_part.count(" -- ") == 2


def test_dot_disconnected_warns_but_renders(tmp_path, capsys):
    doc = {
        "p": 5,
        "vertices": ["a"],
        "edges": [{"from": "a", "to": "a", "voltage": 1}],
    }
    assert main(["dot", write(tmp_path, "t.json", doc)]) == 0
    captured = capsys.readouterr()
    assert "disconnected" in captured.err
    assert "graph cover" in captured.out


def test_census_bouquet_full_run(tmp_path):
    base_doc = {
        "vertices": ["v"],
        "edges": [
            {"from": "v", "to": "v"},
            {"from": "v", "to": "v"},
        ],
    }
    base_path = write(tmp_path, "base.json", base_doc)
    out = tmp_path / "census.ndjson"
    assert main(["census", base_path, "--p", "5", "--out", str(out)]) == 0
    rows = read_census(str(out))
    assert len(rows) == 16
    by_key = {row["key"]: row for row in rows}
    assert by_key["2,4"]["pic0"] == [3, 12]
    assert by_key["2,4"]["vanishing"] == []
    assert by_key["2,3"]["pic0"] == [2, 2, 8]
    assert by_key["1,1"]["connected"] is False
    assert by_key["1,1"]["verdicts"]["main22"] == "SKIPPED"
    for row in rows:
        assert row["connected"] == row["criterion_connected"]
        if row["connected"]:
            assert all(v == "PASS" for v in row["verdicts"].values())


def test_census_is_resumable(tmp_path):
    out = tmp_path / "census.ndjson"
    summary1 = run_census(bouquet(2), 5, str(out))
    assert summary1["written"] == 16
    summary2 = run_census(bouquet(2), 5, str(out))
    assert summary2["written"] == 0
    assert len(read_census(str(out))) == 16


def test_census_budget_cursor(tmp_path):
    out = tmp_path / "census.ndjson"
    summary = run_census(bouquet(2), 5, str(out), budget=5)
    assert summary["cursor"] == 5
    lines = [json.loads(x) for x in out.read_text().splitlines() if x.strip()]
    assert lines[-1]["cursor"]["next_index"] == 5
    assert len(read_census(str(out))) == 5
    # The remainder completes on resume without a cursor row.
    summary = run_census(bouquet(2), 5, str(out))
    assert summary["cursor"] is None
    assert len(read_census(str(out))) == 16


def test_census_of_two_vertex_base(tmp_path):
    base = bundled_spec("example2").base
    out = tmp_path / "census2.ndjson"
    summary = run_census(base, 5, str(out))
    assert summary["total_assignments"] == 256
    rows = read_census(str(out))
    by_key = {row["key"]: row for row in rows}
    # The worked assignment shows up with its vanishing exponent.
    assert by_key["2,4,2,1"]["vanishing"] == [2]
    assert by_key["2,4,2,1"]["pic0"][-2:] == [7, 420]
    # Regauging at the second vertex multiplies the three crossing edges by
    # the same unit and fixes the loop; the group is unchanged.
    regauged = by_key["2,3,4,2"]  # gauge unit 2: 4*2=3, 2*2=4, 1*2=2 mod 5
    assert regauged["pic0"] == by_key["2,4,2,1"]["pic0"]
    assert regauged["vanishing"] == by_key["2,4,2,1"]["vanishing"]
    for row in rows:
        assert row["connected"] == row["criterion_connected"]


def test_census_requires_prime(tmp_path):
    base_path = write(
        tmp_path, "base.json", {"vertices": ["v"], "edges": [{"from": "v", "to": "v"}]}
    )
    assert main(["census", base_path, "--out", str(tmp_path / "c.ndjson")]) == 2


def test_examples_listing(capsys, tmp_path):
    assert main(["examples"]) == 0
    out = capsys.readouterr().out
    for name in ("example1", "example2", "example3", "example4"):
        assert name in out
    target = tmp_path / "specs"
    assert main(["examples", "--write", str(target)]) == 0
    written = sorted(p.name for p in target.iterdir())
    assert written == [f"example{i}.json" for i in range(1, 5)]
    reloaded = load_spec(str(target / "example3.json"))
    assert spec_to_dict(reloaded) == spec_to_dict(bundled_spec("example3"))


def test_spec_round_trip(tmp_path):
    spec = bundled_spec("example4")
    path = tmp_path / "copy.json"
    dump_spec(spec, str(path))
    again = load_spec(str(path))
    assert spec_to_dict(again) == spec_to_dict(spec)
    assert spec_from_dict(spec_to_dict(spec)).voltages == spec.voltages
