import json

import pytest

from padicrep.cli import main
from padicrep.fileformat import parse_series, write_series
from padicrep import series as S
from padicrep import reps as R
from padicrep.reps import Character


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_apply_dirac(capsys, tmp_path):
    out = tmp_path / "d.series"
    code, _, _ = run(["apply", "dirac", "--a=1", "-o", str(out)], capsys)
    assert code == 0
    F = parse_series(out.read_text())
    assert F.lifts()[:3] == [1, 1, 0] and not any(F.lifts()[2:])


def test_apply_pushforward_identity(capsys, tmp_path):
    src = tmp_path / "F.series"
    write_series(S.dirac(3, 5, 10), src)
    code, out, _ = run(["apply", "pushforward", "--b=1", str(src)], capsys)
    assert code == 0 and out == src.read_text()


def test_apply_uminus_power(capsys, tmp_path):
    src = tmp_path / "F.series"
    F = S.dirac(2, 5, 12)
    write_series(F, src)
    code, out, _ = run(["apply", "uminus-power", "--m=1", "--chi=0,2", str(src)], capsys)
    assert code == 0
    G = parse_series(out)
    L = S.log1p(5, 12)
    expect = F * 4 - S.mul(L, F) * 4
    assert G.agrees(expect, 10)


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.series"
    bad.write_text("nonsense\n")
    assert run(["apply", "delta", str(bad)], capsys)[0] == 2
    assert run(["apply", "delta", str(tmp_path / "missing")], capsys)[0] == 2
    good = tmp_path / "F.series"
    write_series(S.dirac(2, 5, 10), good)
    assert run(["apply", "diag", "--b=5", "--chi=0,1", str(good)], capsys)[0] == 3
    assert run(["apply", "delta", "--p=3", str(good)], capsys)[0] == 3
    assert run(["apply", "uminus-power", "--m=6", "--chi=0,2", str(good)], capsys)[0] == 4
    assert run(["apply", "translate", str(good)], capsys)[0] == 2
    assert run(["verify", "haar", "--trunc=4"], capsys)[0] == 3
    with pytest.raises(SystemExit) as e:
        main(["verify", "no-such-suite"])
    assert e.value.code == 2


def test_newton_table_and_json(capsys, tmp_path):
    src = tmp_path / "log.series"
    write_series(S.log1p(2, 8), src)
    code, out, _ = run(["newton", str(src)], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["slope", "length", "zero-valuation", "count", "certified?"]
    assert lines[1].split() == ["-1", "1", "1", "1", "yes"]
    assert lines[3].split() == ["-1/4", "4", "1/4", "4", "no"]
    code, out, _ = run(["newton", "--json", str(src)], capsys)
    d = json.loads(out)
    assert [s["certified"] for s in d["segments"]] == [True, True, False]


def test_verify_examples(capsys):
    code, out, _ = run(["verify", "haar", "--trunc=64"], capsys)
    assert code == 0 and "kernel of translate(1) - id at N=64: {0}" in out
    code, out, _ = run(["verify", "prop55", "--c=1", "--trunc=16"], capsys)
    assert code == 0 and "[0/1, 1/1, -1/2, 1/3" in out
    code, out, _ = run(["verify", "pbw-ad", "--m=-2"], capsys)
    assert code == 0 and "PASS  ad-identity  cases=1  failures=0  residual=0" in out


def test_verify_deterministic_and_json_mirror(capsys, tmp_path):
    args = ["verify", "lemma43", "--trunc=16", "--seed=5"]
    _, a, _ = run(args, capsys)
    _, b, _ = run(args, capsys)
    assert a == b and "seed=5" in a
    mirror = tmp_path / "r.json"
    run(args + ["--report-json", str(mirror)], capsys)
    d = json.loads(mirror.read_text())
    assert d["config"]["seed"] == 5
    for c in d["cases"]:
        assert f"{c['name']}  cases={c['count']}  failures={c['failures']}" in a
