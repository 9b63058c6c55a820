import json

import pytest

from dunwoody.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_relators(capsys):
    code, out, _ = run(capsys, "relators", "--word", "1 3 -2", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["1 3 -2", "2 1 -3", "3 2 -1"]


def test_homology_family(capsys):
    assert run(capsys, "homology", "--family", "sieradsky", "--n", "2")[1] == "Z_3\n"
    assert run(capsys, "homology", "--family", "fibonacci", "--n", "2")[1] == "Z_5\n"


def test_homology_matrix(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text("[[2, -1], [-1, 2]]")
    assert run(capsys, "homology", "--matrix", str(m))[1] == "Z_3\n"
    m.write_text("[[2, -1], [")
    assert run(capsys, "homology", "--matrix", str(m))[0] == 1


def test_build_svg_and_round_trip(capsys, tmp_path):
    svg = tmp_path / "out.svg"
    code, out, _ = run(capsys, "build", "--params", "1,1,1,3,0,1", "--svg", str(svg))
    assert code == 0 and svg.read_text().startswith("<?xml")
    diagram = tmp_path / "d.json"
    diagram.write_text(out)
    assert json.loads(out)["n"] == 3
    via_file = run(capsys, "validate", "--diagram", str(diagram))
    via_params = run(capsys, "validate", "--params", "1,1,1,3,0,1")
    assert via_file == via_params


def test_present_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--params", "1,0,1,3,0,2")
    diagram = tmp_path / "d.json"
    diagram.write_text(out)
    a = run(capsys, "present", "--diagram", str(diagram))
    b = run(capsys, "present", "--params", "1,0,1,3,0,2")
    assert a == b and a[0] == 0
    assert a[1].splitlines() == ["1 -3 -2", "1 -2 3", "1 2 -3"]


def test_present_invalid_exit_2(capsys):
    code, out, err = run(capsys, "present", "--params", "0,1,0,2,0,0")
    assert code == 2 and out == "" and "not a Heegaard diagram" in err


def test_domain_errors_exit_1(capsys):
    assert run(capsys, "present", "--params", "0,0,0,2,0,0")[0] == 1
    assert run(capsys, "relators", "--word", "1 5", "--n", "3")[0] == 1
    assert run(capsys, "relators", "--family", "sieradsky", "--n", "1")[0] == 1
    assert run(capsys, "validate", "--diagram", "/nonexistent.json")[0] == 1
    assert run(capsys, "lift", "--quotient", "1,0,1,0", "--n", "0")[0] == 1


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1


def test_detect(capsys):
    code, out, _ = run(capsys, "detect", "--relator", "1 1 -2", "--relator", "2 2 -1", "--n", "2")
    assert json.loads(out)["w"] == "1 1 -2"
    code, out, _ = run(capsys, "detect", "--relator", "1", "--relator", "2 1", "--n", "2")
    assert out == "absent\n"


def test_covering_commands(capsys):
    assert run(capsys, "quotient", "--params", "1,1,1,3,2,1")[1] == "1,1,1,2\n"
    assert run(capsys, "lift", "--quotient", "1,1,1,2", "--n", "3", "--s", "1")[1] == "1,1,1,3,2,1\n"
    assert run(capsys, "lens-order", "--quotient", "1,0,1,0")[1] == "1\n"
    assert run(capsys, "strongly-cyclic", "--quotient", "1,0,1,0", "--n", "3", "--s", "2")[1] == "true\n"
    assert run(capsys, "strongly-cyclic", "--quotient", "0,1,0,0", "--n", "2")[1].startswith("false")


def test_symmetry(capsys):
    out = json.loads(run(capsys, "symmetry", "--params", "1,0,1,3,0,2")[1])
    assert out == {"equivariant": True, "curve_cycles": [3], "single_cycle": True}


def test_scan_deterministic(capsys):
    args = ["scan", "--a", "0..1", "--b", "0..1", "--c", "1", "--n", "2,3"]
    a = run(capsys, *args)
    b = run(capsys, *args, "--workers", "2")
    assert a == b and a[0] == 0
    assert len(a[1].splitlines()) > 0


def test_output_file(capsys, tmp_path):
    out = tmp_path / "rel.txt"
    code, stdout, _ = run(capsys, "relators", "--family", "sieradsky", "--n", "2", "-o", str(out))
    assert code == 0 and stdout == ""
    assert out.read_text() == "1 1 -2\n2 2 -1\n"


def test_svg_command(capsys, tmp_path):
    out = tmp_path / "x.svg"
    assert run(capsys, "svg", "--params", "1,0,1,2,0,0", "-o", str(out))[0] == 0
    assert "<svg" in out.read_text()
    assert run(capsys, "svg", "--params", "1,0,1,2,0,0")[0] == 1
