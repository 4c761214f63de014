import csv
import io

import pytest

from gqc.cli import EXIT_INTERNAL, EXIT_INVALID, EXIT_IO, EXIT_OK, main
from gqc.formats import parse_basis

from conftest import data_path, pv
from known_codes import BASIS2, BASIS3, PROFILE2, PROFILE3


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_basis_transpose_matches_fixture(capsys):
    status, out, _ = run(capsys, "basis", "-i", data_path("H3.gqc"), "--algorithm", "transpose")
    assert status == EXIT_OK
    assert list(parse_basis(out).vectors) == [pv(PROFILE3, e) for e in BASIS3]
    with open(data_path("C3.basis"), encoding="utf-8") as fh:
        assert out == fh.read()


def test_basis_echelon_c2(capsys, tmp_path):
    target = tmp_path / "C2.basis"
    status, out, _ = run(capsys, "basis", "-i", data_path("H2.gqc"), "--algorithm", "echelon", "-o", str(target))
    assert status == EXIT_OK and out == ""
    assert list(parse_basis(target.read_text()).vectors) == [pv(PROFILE2, e) for e in BASIS2]


def test_basis_output_is_deterministic(capsys):
    outs = {run(capsys, "basis", "-i", data_path("H2.gqc"))[1] for _ in range(3)}
    assert len(outs) == 1


def test_basis_no_reduce(capsys):
    status, out, _ = run(capsys, "basis", "-i", data_path("H3.gqc"), "--no-reduce")
    assert status == EXIT_OK
    assert "reduced: false" in out


def test_encode_example(capsys):
    status, out, _ = run(capsys, "encode", "-b", data_path("C1.basis"), "-m", "1 0 1")
    assert status == EXIT_OK
    assert out.strip() == "1 0 1 0 1 1 0"


def test_encode_message_file(capsys, tmp_path):
    msg = tmp_path / "msg.txt"
    msg.write_text("1\n0\n1\n")
    assert run(capsys, "encode", "-b", data_path("C1.basis"), "--message-file", str(msg))[1].strip() == "1 0 1 0 1 1 0"


def test_encode_errors(capsys):
    assert run(capsys, "encode", "-b", data_path("C1.basis"), "-m", "1 0")[0] == EXIT_INVALID
    assert run(capsys, "encode", "-b", data_path("C1.basis"), "-m", "1 2 0")[0] == EXIT_INVALID
    assert run(capsys, "encode", "-b", data_path("C1.basis"), "-m", "a b c")[0] == EXIT_IO
    status, _, err = run(capsys, "encode", "-b", "/nonexistent/C1.basis", "-m", "1 0 1")
    assert status == EXIT_IO and "cannot read" in err


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "-i", data_path("H3.gqc"), "-b", data_path("C3.basis"))
    assert status == EXIT_OK and out.strip().endswith("ok")


def test_verify_wrong_basis(capsys, tmp_path):
    text = open(data_path("C3.basis"), encoding="utf-8").read().replace("g 3: [] [] [1 0 0 0 1]", "g 3: [] [] [1 1]")
    bad = tmp_path / "bad.basis"
    bad.write_text(text)
    status, out, _ = run(capsys, "verify", "-i", data_path("H3.gqc"), "-b", str(bad))
    assert status == EXIT_INVALID
    assert "failed" in out
    # profile mismatch
    assert run(capsys, "verify", "-i", data_path("H2.gqc"), "-b", data_path("C3.basis"))[0] == EXIT_INVALID


def test_metrics_csv(capsys):
    status, out, _ = run(capsys, "metrics", "-i", data_path("H2.gqc"))
    assert status == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["algorithm"] for r in rows] == ["echelon", "transpose"]
    assert out.splitlines()[0] == "n,k,m,algorithm,adds,subs,muls,divs,total,estimate"
    assert rows[0]["estimate"] == "1611" and rows[1]["estimate"] == "1107"
    for r in rows:
        assert int(r["total"]) == sum(int(r[c]) for c in ("adds", "subs", "muls", "divs"))


def test_metrics_sweep_and_rate_curve(capsys):
    status, out, _ = run(capsys, "metrics", "--sweep", "8", "24", "--algorithm", "transpose")
    assert status == EXIT_OK
    assert len(out.splitlines()) == 1 + 3
    status, out, _ = run(capsys, "metrics", "--rate-curve")
    assert status == EXIT_OK and out.startswith("rate,echelon,")
    assert run(capsys, "metrics")[0] == EXIT_IO


def test_circuit(capsys):
    status, out, _ = run(capsys, "circuit", "-b", data_path("C3.basis"))
    assert status == EXIT_OK
    assert "adders: 18 <= 20 <= 24" in out
    assert "memory: 26 <= 32" in out
    assert "fg_shape: no" in out
    assert run(capsys, "circuit", "-b", data_path("C3.basis"), "--simulate", "5")[0] == EXIT_INVALID


def test_circuit_simulation_on_fg_basis(capsys, tmp_path):
    basis = tmp_path / "fg.basis"
    basis.write_text(
        "gqc-basis v1\nq: 2\norbits: 7 7\nordering: POT\nreduced: true\n"
        "g 1: [1] [0 1 1]\ng 2: [] [1 1 0 1]\n"
    )
    status, out, _ = run(capsys, "circuit", "-b", str(basis), "--simulate", "20")
    assert status == EXIT_OK
    assert "20/20 messages match" in out
    assert "fg_shape: yes" in out


def test_check_gqc(capsys, tmp_path):
    assert run(capsys, "check-gqc", "-i", data_path("H2.gqc"))[0] == EXIT_OK
    bad = tmp_path / "bad.gqc"
    bad.write_text("gqc-matrix v1\nq: 2\norbits: 4\nrows: 1\nrow: 1 0 0 0\n")
    status, out, _ = run(capsys, "check-gqc", "-i", str(bad))
    assert status == EXIT_INVALID and "not gqc" in out
    assert run(capsys, "basis", "-i", str(bad))[0] == EXIT_INVALID


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.gqc"
    bad.write_text("gqc-matrix v1\nq: 2\norbits: 2\nrows: 1\nrow: 1 2\n")
    status, _, err = run(capsys, "basis", "-i", str(bad))
    assert status == EXIT_IO
    assert "line 5" in err


def test_internal_error_exit_code(capsys, monkeypatch):
    import gqc.cli as cli
    from gqc.transpose import InexactDivisionError

    def boom(*args, **kwargs):
        raise InexactDivisionError(0, 0)

    monkeypatch.setattr(cli, "algorithm2", boom)
    status, _, err = run(capsys, "basis", "-i", data_path("H3.gqc"))
    assert status == EXIT_INTERNAL and "a_11" in err


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["encode"])
    assert exc.value.code == 2


def test_sweep_uses_exact_lengths(capsys):
    status, out, _ = run(capsys, "metrics", "--sweep", "8", "64", "--step", "8", "--algorithm", "echelon")
    assert status == EXIT_OK
    assert [int(r["n"]) for r in csv.DictReader(io.StringIO(out))] == list(range(8, 65, 8))
    assert run(capsys, "metrics", "--sweep", "0", "3")[0] == EXIT_IO
