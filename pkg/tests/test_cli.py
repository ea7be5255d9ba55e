import json

import pytest

from almostconj.cli import main, render_table, run


def payload_of(*argv):
    result = run(list(argv))
    assert result.payload is not None, result.error
    return result


def test_header_fields_lead_every_payload():
    for argv in (
        ["group", "info", "--group", "sym:3"],
        ["excluded-prime", "7"],
        ["nf", "signature", "--poly", "x^2+1"],
    ):
        r = payload_of(*argv)
        assert list(r.payload)[:3] == ["tool_version", "command", "inputs_echo"]
        assert r.payload["tool_version"]


def test_check_fano_pair():
    r = run(["gassmann", "check", "--group", "gl3_2",
             "--h1", "point_stab", "--h2", "line_stab"])
    assert r.exit_code == 1
    assert r.payload["gassmann"] is True
    assert r.payload["conjugate"] is False
    assert r.payload["witness"] is None
    text = render_table(r.payload)
    assert "gassmann: yes" in text and "conjugate: no" in text


def test_check_conjugate_pair_from_files(tmp_path):
    f1 = tmp_path / "h1.txt"
    f1.write_text("degree 4\n(1 2)\n")
    f2 = tmp_path / "h2.txt"
    f2.write_text("degree 4\n(3 4)\n")
    r = run(["gassmann", "check", "--group", "sym:4",
             "--h1", str(f1), "--h2", str(f2)])
    assert r.exit_code == 0
    assert r.payload["conjugate"] is True
    assert r.payload["witness"] is not None


def test_decomposition_inert_example():
    r = run(["nf", "decomposition", "--poly", "x^7-7*x+3", "--prime", "2"])
    assert r.exit_code == 0
    assert r.payload["type"] == [7]
    assert r.payload["ramified"] is False
    assert r.payload["inputs_echo"]["poly"] == "x^7 - 7*x + 3"


def test_decomposition_ramified_is_negative():
    r = run(["nf", "decomposition", "--poly", "x^2+1", "--prime", "2"])
    assert r.exit_code == 1
    assert r.payload["ramified"] is True
    assert r.payload["type"] is None
    assert "ramified" in render_table(r.payload)


def test_excluded_prime_variants():
    r = run(["excluded-prime", "13"])
    assert r.exit_code == 0
    assert (r.payload["excluded"], r.payload["q"], r.payload["k"]) == (True, 3, 3)
    r = run(["excluded-prime", "19"])
    assert r.exit_code == 0 and r.payload["excluded"] is False
    r = run(["excluded-prime", "11"])
    assert r.payload["excluded"] is True and r.payload["q"] is None
    assert run(["excluded-prime", "9"]).exit_code == 2


def test_enumerate_found_and_empty():
    r = run(["gassmann", "enumerate", "--group", "gl3_2", "--index", "7"])
    assert r.exit_code == 0 and r.payload["count"] == 1
    r = run(["gassmann", "enumerate", "--group", "sym:4", "--index", "4"])
    assert r.exit_code == 1 and r.payload["count"] == 0
    assert render_table(r.payload) == "no nontrivial Gassmann triples found"


def test_solitary_exit_codes():
    assert run(["gassmann", "solitary", "--group", "frobenius20",
                "--h1", "point_stab"]).exit_code == 0
    assert run(["gassmann", "solitary", "--group", "gl3_2",
                "--h1", "point_stab"]).exit_code == 1


def test_criterion_scan_witness_and_none():
    r = run(["criterion", "scan", "--group", "sym:5"])
    assert r.exit_code == 0
    w = r.payload["witness"]
    assert w["condition"] == "ii" and w["element"] == "(4 5)" and w["ell"] == 2
    r = run(["criterion", "scan", "--group", "gl3_2"])
    assert r.exit_code == 1 and r.payload["witness"] is None
    r = run(["criterion", "scan", "--group", "psl2_11", "--h1", "a5_1"])
    assert r.exit_code == 1


def test_structure_blocks():
    r = run(["structure", "blocks", "--group", "dihedral:6"])
    assert r.exit_code == 0
    assert r.payload["block_size"] == 2
    assert r.payload["blocks"] == [[1, 4], [2, 5], [3, 6]]
    r = run(["structure", "blocks", "--group", "sym:4"])
    assert r.exit_code == 1 and r.payload["primitive"] is True


def test_closure_report():
    r = run(["structure", "closure-report", "--group", "sym:5", "--ell", "5"])
    assert r.exit_code == 0
    assert r.payload["branch"] == "two_transitive"
    assert r.payload["closure_order"] == 60
    assert r.payload["t"] == 5


def test_density_payload_and_table():
    r = run(["nf", "density", "--poly", "x^2+1", "--bound", "10000"])
    assert r.exit_code == 0
    assert r.payload["inert"] == {
        "num": 619, "den": 1228, "decimal": "0.504072",
    }
    assert render_table(r.payload) == "inert 619/1228 ≈ 0.504072"


def test_signature_command():
    r = run(["nf", "signature", "--poly", "x^7-7*x+3"])
    assert r.exit_code == 0
    assert r.payload["real_places"] == 3 and r.payload["complex_places"] == 2
    assert render_table(r.payload) == "signature (3, 2)"


def test_compare_command():
    r = run(["nf", "compare", "--poly", "x^2+1", "--poly2", "x^2-2",
             "--bound", "100"])
    assert r.exit_code == 1
    assert r.payload["first_disagreement"] == 5
    assert r.payload["skipped_ramified"] == [2]
    r = run(["nf", "compare", "--poly", "x^3-2", "--poly2", "x^3-2",
             "--bound", "200"])
    assert r.exit_code == 0 and r.payload["agree"] is True


def test_chebotarev_command():
    r = run(["nf", "chebotarev", "--group", "cyclic:2", "--poly", "x^2+1",
             "--bound", "10000"])
    assert r.exit_code == 0
    assert r.payload["consistent"] is True
    types = [row["cycle_type"] for row in r.payload["frequencies"]]
    assert types == [[1, 1], [2]]


def test_group_info_and_subgroups():
    r = run(["group", "info", "--group", "frobenius20"])
    assert r.payload["order"] == 20 and r.payload["degree"] == 5
    assert r.payload["named_subgroups"] == {"point_stab": 4}
    r = run(["group", "subgroups", "--group", "sym:4", "--index", "4"])
    assert r.payload["class_count"] == 1
    assert r.payload["classes"][0]["class_size"] == 4


def test_group_classes_table_is_lossless():
    r = payload_of("group", "classes", "--group", "sym:4")
    text = render_table(r.payload)
    blob = json.dumps(r.payload)
    for line in text.splitlines()[1:]:
        for cell in line.split("  "):
            if cell.strip():
                assert cell.strip() in blob


def test_poly_file_indirection(tmp_path):
    path = tmp_path / "poly.txt"
    path.write_text("x^2+1\n")
    r = run(["nf", "signature", "--poly", f"@{path}"])
    assert r.exit_code == 0
    assert r.payload["real_places"] == 0 and r.payload["complex_places"] == 1


def test_usage_and_input_errors():
    assert run([]).exit_code == 2
    assert run(["frobble"]).exit_code == 2
    assert run(["group", "info"]).exit_code == 2
    assert run(["group", "info", "--group", "nope:9"]).exit_code == 2
    assert run(["group", "info", "--group", "sym:4", "--bogus"]).exit_code == 2
    assert run(["gassmann", "check", "--group", "sym:4",
                "--h1", "a", "--h2", "b"]).exit_code == 2
    assert run(["nf", "decomposition", "--poly", "2x",
                "--prime", "3"]).exit_code == 2
    assert run(["nf", "decomposition", "--poly", "x^2+1",
                "--prime", "6"]).exit_code == 2
    assert run(["group", "subgroups", "--group", "sym:4",
                "--index", "5"]).exit_code == 2
    assert run(["criterion", "scan", "--group", "cyclic:2",
                "--h1", "missing.txt"]).exit_code == 2


def test_cap_exceeded_exit_code():
    r = run(["group", "info", "--group", "sym:5", "--cap", "30"])
    assert r.exit_code == 3
    assert "cap" in r.error


def test_help_exits_zero(capsys):
    assert run(["-h"]).exit_code == 0
    capsys.readouterr()


def test_payload_independent_of_render_mode():
    base = ["gassmann", "check", "--group", "gl3_2",
            "--h1", "point_stab", "--h2", "line_stab"]
    table = run(base)
    as_json = run(base + ["--json"])
    assert table.payload == as_json.payload
    assert not table.as_json and as_json.as_json


def test_repeat_runs_byte_identical():
    argv = ["group", "classes", "--group", "sym:4", "--json"]
    first = json.dumps(run(argv).payload)
    second = json.dumps(run(argv).payload)
    assert first == second


def test_main_prints_json_and_exits(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["excluded-prime", "7", "--json"])
    assert exc.value.code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["command"] == "excluded-prime"
    assert doc["excluded"] is True and doc["q"] == 2 and doc["k"] == 3


def test_main_reports_errors_on_stderr(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["group", "info", "--group", "nope:9"])
    assert exc.value.code == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "catalog" in captured.err
