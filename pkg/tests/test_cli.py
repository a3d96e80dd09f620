import json

import pytest
from hypothesis import given

from deltamat import S1, FIGURE1_FAMILY, EmptyFamily, OutOfRange, SetSystem, make_set_system
from deltamat.cli import main
from deltamat.textio import (
    ParseError,
    format_matrix,
    format_system,
    parse_matrix,
    parse_system,
    system_from_json,
    system_to_json,
)

from strategies import set_systems

FIG1_TEXT = "0 1 0 0\n1 0 1 1\n0 1 0 1\n0 1 1 0\n"


def test_parse_s1():
    assert parse_system("ground 3\n{}\n{1,2}\n{1,3}\n{2,3}\n{1,2,3}\n") == S1


def test_parse_minimal():
    assert parse_system("ground 1\n{}\n") == SetSystem(1, 1)


def test_parse_errors():
    with pytest.raises(OutOfRange):
        parse_system("ground 2\n{3}\n")
    with pytest.raises(EmptyFamily):
        parse_system("ground 2\n")
    with pytest.raises(ParseError) as exc:
        parse_system("ground 3\n{}\n{2,1}\n")
    assert exc.value.line == 3 and exc.value.column == 4
    with pytest.raises(ParseError) as exc:
        parse_system("gr 3\n")
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        parse_system("ground 3\n1,2\n")
    with pytest.raises(OutOfRange):
        parse_system("ground 17\n{}\n")


def test_format_is_sorted():
    s = make_set_system(3, [(1, 2, 3), (2,), ()])
    assert format_system(s) == "ground 3\n{}\n{2}\n{1,2,3}\n"


@given(set_systems(max_n=6))
def test_round_trip(s):
    text = format_system(s)
    assert parse_system(text) == s
    assert format_system(parse_system(text)) == text
    assert system_from_json(json.loads(json.dumps(system_to_json(s)))) == s


def test_matrix_format():
    m = parse_matrix(FIG1_TEXT)
    assert format_matrix(m) == FIG1_TEXT
    with pytest.raises(ParseError):
        parse_matrix("0 1\n0 0\n")
    with pytest.raises(ParseError):
        parse_matrix("0 2\n2 0\n")
    with pytest.raises(ParseError):
        parse_matrix("0 1\n1\n")


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "fig1.txt": FIG1_TEXT,
        "F.txt": format_system(FIGURE1_FAMILY),
        "s1.txt": format_system(S1),
        "s1_slide12.txt": "ground 3\n{}\n{1,2}\n{2,3}\n{1,2,3}\n",
        "bad.txt": "ground 2\n{3}\n",
    }.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_matrix_command(capsys, files):
    code, out, _ = run(capsys, "matrix", files["fig1.txt"])
    assert code == 0
    assert parse_system(out) == FIGURE1_FAMILY


def test_slide_command(capsys, files):
    code, out, _ = run(capsys, "slide", files["F.txt"], "2", "3")
    assert code == 0
    assert out == "ground 4\n{}\n{1,2}\n{2,3}\n{3,4}\n{1,2,3,4}\n"


def test_check_command(capsys, files):
    code, out, _ = run(capsys, "check", files["s1_slide12.txt"])
    assert code == 1
    assert out.strip() == "not a delta-matroid: F1={1,2,3} F2={} x=2"
    code, out, _ = run(capsys, "check", files["s1.txt"])
    assert code == 0 and out.strip() == "delta-matroid"


def test_other_commands(capsys, files):
    code, out, _ = run(capsys, "twist", files["s1.txt"], "-A", "{1,3}")
    assert code == 0 and parse_system(out) == make_set_system(3, [(), (2,), (1, 2), (1, 3), (2, 3)])
    code, out, _ = run(capsys, "dual", files["s1.txt"])
    assert parse_system(out) == make_set_system(3, [(1, 2, 3), (3,), (2,), (1,), ()])
    code, out, _ = run(capsys, "delete", files["s1.txt"], "3")
    assert parse_system(out) == make_set_system(2, [(), (1, 2)])
    code, out, _ = run(capsys, "contract", files["s1.txt"], "3")
    assert parse_system(out) == make_set_system(2, [(1,), (2,), (1, 2)])
    code, out, _ = run(capsys, "seq", files["s1.txt"], "1,2")
    assert code == 1 and out.endswith("not a delta-matroid\n")
    code, out, _ = run(capsys, "iso", files["s1.txt"], files["s1.txt"])
    assert code == 0 and out.strip() == "1 2 3"
    code, out, _ = run(capsys, "iso", files["s1.txt"], files["F.txt"])
    assert code == 1 and out.strip() == "none"


def test_binary_command(capsys, files):
    code, out, _ = run(capsys, "binary", files["F.txt"], "--method", "both")
    assert code == 0 and "[search] binary" in out and "[minor] binary" in out
    code, out, _ = run(capsys, "--json", "binary", files["s1.txt"], "--method", "both")
    data = json.loads(out)
    assert code == 1 and data["agree"] and data["minor"]["excluded"] == "S1"
    code, _, err = run(capsys, "binary", files["s1_slide12.txt"])
    assert code == 1 and "not a delta-matroid" in err


def test_error_exit_codes(capsys, files, tmp_path):
    code, _, err = run(capsys, "check", files["bad.txt"])
    assert code == 1 and "outside ground set" in err
    code, _, err = run(capsys, "slide", files["s1.txt"], "2", "2")
    assert code == 1
    code, _, err = run(capsys, "check", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, err = run(capsys, "seq", files["s1.txt"], "1-2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize(
    "argv",
    [
        ["slide", "F.txt", "2", "3"],
        ["twist", "s1.txt", "-A", "{2}"],
        ["dual", "F.txt"],
        ["delete", "F.txt", "1"],
        ["contract", "F.txt", "1"],
        ["matrix", "fig1.txt"],
    ],
)
def test_json_mirrors_text(capsys, files, argv):
    argv = [files.get(a, a) for a in argv]
    _, text, _ = run(capsys, *argv)
    _, js, _ = run(capsys, "--json", *argv)
    assert system_from_json(json.loads(js)) == parse_system(text)
    _, js2, _ = run(capsys, *argv, "--json")
    assert js2 == js


def test_json_check_and_seq(capsys, files):
    _, js, _ = run(capsys, "--json", "check", files["s1_slide12.txt"])
    assert json.loads(js) == {"is_delta_matroid": False, "violation": {"f1": [1, 2, 3], "f2": [], "x": 2}}
    _, text, _ = run(capsys, "seq", files["F.txt"], "1,2;2,1")
    _, js, _ = run(capsys, "--json", "seq", files["F.txt"], "1,2;2,1")
    data = json.loads(js)
    assert data["sequence"] == [[1, 2], [2, 1]]
    assert system_from_json(data["result"]) == parse_system(text.rsplit("\n", 2)[0])
    assert data["is_delta_matroid"] == text.endswith("\ndelta-matroid\n")


def test_replicate_small(capsys, tmp_path):
    code, out, _ = run(capsys, "replicate", "--n", "3", "--out", str(tmp_path / "r"))
    assert code == 0
    assert "golden cases: 41/41 passed" in out
    lines = (tmp_path / "r" / "census.tsv").read_text().splitlines()
    assert len(lines) == 1 + 3 + 15 + 255
    assert (tmp_path / "r" / "summary.md").read_text().count("\n") == 5
    code, js, _ = run(capsys, "--json", "replicate", "--n", "2")
    assert json.loads(js)["theorem"]["passed"]
