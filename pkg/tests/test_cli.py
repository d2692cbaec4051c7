import json

import pytest

from fatpoints import cli
from fatpoints.sweep import load_completed, run_sweep


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alpha(capsys):
    assert run(capsys, "alpha", "-m", "2^3", "-d", "2") == (0, "3\n", "")
    assert run(capsys, "alpha", "-m", "1,1", "-d", "2")[:2] == (0, "1\n")
    assert run(capsys, "alpha", "-m", "1,1", "-d", "3")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "alpha", "-m", "1,1", "--engine", "oracle", "--json")
    assert code == 0 and json.loads(out) == {"m": [1, 1], "d": 2, "oracle": 1, "agree": True}


def test_alpha_usage_errors(capsys):
    assert run(capsys, "alpha", "-m", "2^x")[0] == 2
    assert run(capsys, "alpha", "-m", "1,1", "-d", "3", "--engine", "shgh")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["alpha"])
    assert exc.value.code == 2


def test_alpha_disagreement_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "shgh_alpha", lambda m: 99)
    code, out, err = run(capsys, "alpha", "-m", "2,2")
    assert code == 3
    assert "shgh=99" in out and "oracle=2" in out


def test_hilbert_table(capsys):
    code, out, _ = run(capsys, "hilbert", "-m", "2^5", "-d", "2", "-t", "3..5")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[1:]]
    assert [int(r[2]) for r in rows] == [0, 1, 6]
    assert [r[5] for r in rows] == ["no", "yes", "no"]

    code, out, _ = run(capsys, "hilbert", "-m", "", "-d", "2", "-t", "0..2")
    assert [int(line.split()[2]) for line in out.splitlines()[1:]] == [1, 3, 6]


def test_hilbert_json_records(capsys):
    code, out, _ = run(capsys, "hilbert", "-m", "1^9", "-d", "2", "-t", "3..3", "--json", "--no-timestamp")
    assert code == 0
    rec = json.loads(out)
    assert rec["oracle_dim"] == rec["shgh_dim"] == 1
    assert rec["agree"] is True and rec["special"] is False
    assert rec["m"] == [1] * 9 and rec["timestamp"] is None
    assert set(rec) >= {"d", "t", "m", "chi", "shgh_dim", "oracle_dim", "special", "agree", "seed", "primes", "timestamp"}


def test_hilbert_higher_dimension(capsys, reference_dim):
    code, out, _ = run(capsys, "hilbert", "-m", "2,2", "-d", "3", "-t", "0..3", "--json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    # quadrics singular at two points are cones over the joining line: 3, not 10 - 8
    assert [r["oracle_dim"] for r in recs] == [0, 0, 3, 12]
    assert [reference_dim((2, 2), t, d=3) for t in range(4)] == [0, 0, 3, 12]
    assert all(r["shgh_dim"] is None for r in recs)
    assert run(capsys, "hilbert", "-m", "1", "-t", "x")[0] == 2


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "-D", "4;2,2,2,2,2")
    assert code == 0
    assert out.count("cremona") == 2 and out.count("clamp") == 1
    assert "final: 0;" in out

    code, out, _ = run(capsys, "reduce", "-D", "1;0")
    assert code == 0 and "no steps" in out

    code, out, _ = run(capsys, "reduce", "-D", "6;3,2,2,2,2,2,2,2", "--json")
    data = json.loads(out)
    assert code == 0
    assert int(data["final"].split(";")[0]) >= 0
    assert data["conjectured_dim"] == data["oracle_dim"]

    assert run(capsys, "reduce", "-D", "bogus")[0] == 2


def test_reduce_clamps_negative_input(capsys):
    code, out, _ = run(capsys, "reduce", "-D", "4;2,-1,2,2,2,2")
    assert code == 0 and "clamped" in out and "shgh=1 oracle=1" in out


def test_neg_one(capsys):
    code, out, _ = run(capsys, "neg-one", "--r", "2")
    assert code == 0 and out.strip().endswith("3 classes")
    assert out.count("g=0") == 3
    code, out, _ = run(capsys, "neg-one", "--r", "8", "--json")
    assert json.loads(out)["count"] == 240
    code, _, err = run(capsys, "neg-one", "--r", "9")
    assert code == 2 and "r >= 9" in err


def test_sweep_small(tmp_path, capsys):
    out_file = tmp_path / "s.jsonl"
    code, out, _ = run(capsys, "sweep", "--r-max", "5", "--m-max", "2", "--t-max", "6", "--out", str(out_file))
    assert code == 0
    recs = [json.loads(line) for line in out_file.read_text().splitlines()]
    assert all(r["agree"] for r in recs)
    assert any(r["m"] == [2] * 5 and r["t"] == 4 and r["special"] for r in recs)
    assert "disagreements: 0" in out

    code, out, _ = run(capsys, "sweep", "--r-max", "1", "--m-max", "1", "--t-max", "1")
    assert code == 0 and "instances: 4" in out


def test_sweep_unwritable_path(tmp_path, capsys):
    target = tmp_path / "missing" / "s.jsonl"
    assert run(capsys, "sweep", "--r-max", "1", "--m-max", "1", "--t-max", "1", "--out", str(target))[0] == 2


def test_sweep_disagreement_exit_code(tmp_path, capsys, monkeypatch):
    import fatpoints.sweep as sweep

    monkeypatch.setattr(sweep, "shgh_hilbert", lambda m, t_max: [7] * (t_max + 1))
    code, _, err = run(capsys, "sweep", "--r-max", "1", "--m-max", "1", "--t-max", "2",
                       "--out", str(tmp_path / "s.jsonl"))
    assert code == 3 and "DISAGREE" in err
    assert len((tmp_path / "s.jsonl").read_text().splitlines()) == 6


def test_sweep_is_byte_reproducible(tmp_path, capsys):
    args = ["sweep", "--r-max", "3", "--m-max", "3", "--t-max", "5", "--no-timestamp", "--seed", "11"]
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run(capsys, *args, "--out", str(a))
    run(capsys, *args, "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_sweep_resumes_after_interruption(tmp_path):
    full, part = tmp_path / "full.jsonl", tmp_path / "part.jsonl"
    run_sweep(3, 2, 5, str(full), timestamp=False)
    lines = full.read_text().splitlines(keepends=True)
    # simulate a crash: some complete lines plus a torn one
    part.write_text("".join(lines[:11]) + lines[11][:17])
    assert len(load_completed(str(part))) == 11
    summary = run_sweep(3, 2, 5, str(part), timestamp=False)
    assert summary.skipped == 11 and summary.ok
    assert sorted(part.read_text().splitlines()) == sorted(line.rstrip("\n") for line in lines)
    # a second restart has nothing left to do
    assert run_sweep(3, 2, 5, str(part), timestamp=False).written == 0


def test_sweep_parallel_matches_serial(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run_sweep(3, 2, 4, str(a), timestamp=False, jobs=1)
    run_sweep(3, 2, 4, str(b), timestamp=False, jobs=2)
    assert a.read_bytes() == b.read_bytes()
