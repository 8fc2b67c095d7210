import json
import os

from unrefinable.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_json_lines(capsys):
    code, out, _ = run(capsys, "enumerate", "--weight", "10", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 10 and rows[0]["parts"] == [1, 2, 3, 4]


def test_enumerate_unrefinable_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--weight", "22", "--unrefinable", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("parts;weight")
    # maximality is only filled in when it was computed
    assert "1,2,5,6,8;22;7;6;8;3;true;" in lines


def test_enumerate_maximal_and_max_missing(capsys):
    code, out, _ = run(capsys, "enumerate", "--weight", "120", "--maximal", "--method", "pinned")
    assert code == 0 and len(out.splitlines()) == 5
    code, out, _ = run(capsys, "enumerate", "--weight", "120", "--max-missing", "--method", "pinned")
    assert code == 0 and len(out.splitlines()) == 4


def test_enumerate_filters(capsys):
    code, out, _ = run(capsys, "enumerate", "--weight", "16", "--parity", "odd", "--min-parts", "2")
    parts = [json.loads(line)["parts"] for line in out.splitlines()]
    assert parts == [[1, 3, 5, 7], [1, 15], [3, 13], [5, 11], [7, 9]]


def test_enumerate_rejects_bad_flag_mix(capsys):
    code, _, err = run(capsys, "enumerate", "--weight", "10", "--unrefinable", "--parity", "odd")
    assert code == 2 and "parity" in err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--partition", "1,2,5,6,8")
    rec = json.loads(out)
    assert code == 0 and rec["unrefinable"] and rec["doubling_cells"] == [[1, 3, 4], [2, 2, 3]]
    code, out, _ = run(capsys, "check", "--partition", "(2,3,9)", "--method", "def")
    rec = json.loads(out)
    assert code == 0 and rec["definitional"]["witness"] == [1, 8, 9]


def test_check_rejects_repeated_parts(capsys):
    code, _, _ = run(capsys, "check", "--partition", "1,1,3")
    assert code == 2


def test_kn_forward_and_inverse(capsys):
    code, out, _ = run(capsys, "kn", "--set", "0,3,6,8,9,11,12,14,->")
    rec = json.loads(out)
    assert code == 0 and rec["rows"] == [7, 5, 3, 2, 2, 1, 1]
    assert rec["first_column_hooks"] == [13, 10, 7, 5, 4, 2, 1]
    code, out, _ = run(capsys, "kn", "--inverse", "--rows", "4,3,3,1,1")
    rec = json.loads(out)
    assert rec["set"] == "0,3,4,7,9,->" and rec["partition"] == [1, 2, 5, 6, 8]
    assert rec["semigroup"] is False and rec["witness"] == [3, 3]


def test_kn_usage_errors(capsys):
    assert run(capsys, "kn")[0] == 2
    assert run(capsys, "kn", "--inverse")[0] == 2
    assert run(capsys, "kn", "--set", "0,3,2,->")[0] == 2
    assert run(capsys, "kn", "--rows", "1,2", "--inverse")[0] == 2


def test_render_ascii_and_svg(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--rows", "4,3,3,1,1", "--hooks")
    assert code == 0 and out.splitlines()[0] == "[8][5][4][1]"
    svg = tmp_path / "d.svg"
    code, _, _ = run(capsys, "render", "--partition", "1,2,5,6,8", "--format", "svg", "--out", str(svg))
    assert code == 0 and svg.read_text().startswith("<svg")


def test_render_png(capsys, tmp_path):
    png = tmp_path / "d.png"
    code, _, _ = run(capsys, "render", "--set", "0,3,4,7,9,->", "--hooks", "--format", "png", "--out", str(png))
    assert code == 0 and png.read_bytes()[:4] == b"\x89PNG"
    assert run(capsys, "render", "--rows", "2,1", "--format", "png")[0] == 2


def test_render_needs_exactly_one_source(capsys):
    assert run(capsys, "render", "--rows", "1", "--set", "0,2,->")[0] == 2


def test_bijection_forward_backward(capsys):
    code, out, _ = run(capsys, "bijection", "forward", "--partition", "1,2,3,4,5,6,7,8,11,14,16,17,26")
    rec = json.loads(out)
    assert code == 0 and rec["eta"] == [1, 3, 4] and rec["case"]["case"] == "triangular"
    code, out, _ = run(capsys, "bijection", "backward", "--eta", "3,5", "--case", "nt5", "--n", "15")
    rec = json.loads(out)
    assert rec["parts"] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 12, 14, 15, 25]


def test_bijection_backward_improper(capsys):
    argv = ["bijection", "backward", "--eta", "6", "--case", "nt4", "--n", "19"]
    assert run(capsys, *argv)[0] == 2
    code, out, _ = run(capsys, *argv, "--allow-improper")
    assert code == 0 and json.loads(out)["weight"] == 182


def test_bijection_backward_excluded(capsys):
    code, _, err = run(capsys, "bijection", "backward", "--eta", "3,5", "--case", "triangular", "--n", "15")
    assert code == 2 and err


def test_bijection_verify_text_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "bijection", "verify", "--case", "triangular", "--n", "15", "--format", "text")
    assert code == 0 and "PASS" in out.splitlines()[0]
    code, out, _ = run(capsys, "bijection", "verify", "--case", "nt4", "--n", "15", "--k", "4", "--json")
    assert code == 0 and json.loads(out)["passed"]


def test_bijection_verify_reports_failure(capsys):
    code, out, _ = run(capsys, "bijection", "verify", "--case", "triangular", "--n", "11", "--format", "text")
    assert code == 1 and "count_identity: FAILED" in out


def test_bijection_verify_figdir(capsys, tmp_path):
    code, _, _ = run(capsys, "bijection", "verify", "--case", "nt5", "--n", "15", "--k", "3",
                     "--figdir", str(tmp_path))
    assert code == 0
    assert "bijection_nt5_n15_k3.png" in os.listdir(tmp_path)


def test_bijection_exclusion(capsys, tmp_path):
    code, out, _ = run(capsys, "bijection", "exclusion", "--case", "triangular", "--n", "15",
                       "--figdir", str(tmp_path))
    rec = json.loads(out)
    assert code == 0 and rec["eta"] == [3, 5] and not rec["geometric_unrefinable"]
    assert os.listdir(tmp_path) == ["exclusion_triangular_n15_3_5.png"]
    assert run(capsys, "bijection", "exclusion", "--case", "triangular", "--n", "11")[0] == 2


def test_bijection_cases(capsys):
    code, out, _ = run(capsys, "bijection", "cases", "--max-weight", "66")
    cases = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and {(c["case"], c["n"]) for c in cases} >= {("triangular", 7), ("triangular", 11)}


def test_verify_suite_json(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "structure", "--max-weight", "66", "--json",
                       "--figdir", str(tmp_path))
    assert code == 0 and json.loads(out)["passed"]
    assert any(name.endswith(".png") for name in os.listdir(tmp_path))


def test_verify_suite_fails_with_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--max-weight", "66", "--format", "text")
    assert code == 1 and "FAIL" in out


def test_oeis_check(capsys, tmp_path):
    from unrefinable.maximal import enumerate_unrefinable

    b = tmp_path / "b.txt"
    b.write_text("".join(f"{N} {sum(1 for _ in enumerate_unrefinable(N))}\n" for N in range(1, 21)))
    code, out, _ = run(capsys, "oeis-check", "--bfile", str(b), "--max", "20", "--json",
                       "--figdir", str(tmp_path / "figs"))
    assert code == 0 and json.loads(out)["passed"]
    assert os.listdir(tmp_path / "figs")


def test_oeis_check_errors(capsys, tmp_path):
    assert run(capsys, "oeis-check", "--bfile", str(tmp_path / "nope.txt"))[0] == 3
    bad = tmp_path / "bad.txt"
    bad.write_text("1 0\n2 zero\n")
    code, _, err = run(capsys, "oeis-check", "--bfile", str(bad))
    assert code == 2 and "line 2" in err
    wrong = tmp_path / "wrong.txt"
    wrong.write_text("1 0\n2 0\n3 7\n")
    assert run(capsys, "oeis-check", "--bfile", str(wrong), "--max", "3")[0] == 1


def test_unwritable_output_is_exit_3(capsys, tmp_path):
    target = tmp_path / "missing-dir" / "out.json"
    assert run(capsys, "enumerate", "--weight", "5", "--out", str(target))[0] == 3


def test_usage_errors_exit_2(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "enumerate")[0] == 2
    assert run(capsys, "enumerate", "--weigh", "5")[0] == 2
    assert run(capsys, "verify", "--suite", "nonsense")[0] == 2


def test_help_exits_0(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "enumerate" in out


def test_output_is_deterministic(capsys, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run(capsys, "enumerate", "--weight", "45", "--unrefinable", "--csv", "--out", str(p), "--jobs", "2")
    assert paths[0].read_bytes() == paths[1].read_bytes()
