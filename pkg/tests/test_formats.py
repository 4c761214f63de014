import pytest

from gqc import GF, OrbitProfile, algorithm2
from gqc.formats import FormatError, MatrixFile, parse_basis, parse_matrix, write_basis, write_matrix
from gqc.grobner import Ordering
from gqc.instances import random_gqc, random_lengths

from conftest import data_path, pv
from known_codes import BASIS3, H2, H3, PROFILE2, PROFILE3


def test_read_h2_fixture():
    mf = MatrixFile.read(data_path("H2.gqc"))
    assert mf.H == H2
    assert mf.profile == PROFILE2
    assert mf.profile.field.q == 2


def test_matrix_round_trip_binary():
    H, p = parse_matrix(write_matrix(H3, PROFILE3))
    assert H == H3 and p == PROFILE3


def test_gf4_round_trip(rng):
    f = GF(2, 2)
    inst = random_gqc(rng, f, (3, 3, 2))
    text = write_matrix(inst.H, inst.profile)
    assert "q: 2^2 modulus: 1 1 1" in text
    H, p = parse_matrix(text)
    assert H == inst.H and p == inst.profile
    assert any(x > 1 for row in H for x in row)


def test_basis_round_trip(rng):
    B = algorithm2(H3, PROFILE3)
    text = write_basis(B)
    assert parse_basis(text) == B
    assert "# message symbols map to information monomials" in text
    for _ in range(10):
        f = rng.choice([GF(3), GF(2, 2)])
        inst = random_gqc(rng, f, random_lengths(rng, 16))
        B = algorithm2(inst.H, inst.profile)
        assert parse_basis(write_basis(B)) == B


def test_basis_fixture_is_eq_basis():
    with open(data_path("C3.basis"), encoding="utf-8") as fh:
        B = parse_basis(fh.read())
    assert B.ordering is Ordering.POT and B.reduced
    assert list(B.vectors) == [pv(PROFILE3, e) for e in BASIS3]


def error_line(text):
    with pytest.raises(FormatError) as exc:
        parse_matrix(text)
    return exc.value.line


GOOD = "gqc-matrix v1\nq: 2\norbits: 2 1\nrows: 1\nrow: 1 0 1\n"


def test_good_matrix_parses():
    H, p = parse_matrix(GOOD)
    assert H == [[1, 0, 1]] and p == OrbitProfile(GF(2), (2, 1))


def test_entry_out_of_range_names_line():
    assert error_line(GOOD.replace("row: 1 0 1", "row: 1 2 1")) == 5


def test_row_length_mismatch_names_line():
    assert error_line("# comment\n" + GOOD.replace("row: 1 0 1", "row: 1 0")) == 6


def test_missing_header_key():
    with pytest.raises(FormatError) as exc:
        parse_matrix("gqc-matrix v1\nq: 2\nrows: 1\nrow: 1 0 1\n")
    assert "orbits" in str(exc.value)


def test_bad_q_and_magic():
    assert error_line(GOOD.replace("q: 2", "q: 6")) == 2
    assert error_line(GOOD.replace("q: 2", "q: 2^2 modulus: 1 0 1")) == 2
    assert error_line(GOOD.replace("gqc-matrix v1", "gqc-matrix v2")) == 1


def test_row_count_mismatch():
    with pytest.raises(FormatError):
        parse_matrix(GOOD.replace("rows: 1", "rows: 2"))


def test_basis_errors():
    head = "gqc-basis v1\nq: 2\norbits: 3 1\nordering: POT\nreduced: true\n"
    with pytest.raises(FormatError) as exc:
        parse_basis(head + "g 1: [1 1] []\n")
    assert exc.value.line == 6
    with pytest.raises(FormatError):
        parse_basis(head.replace("POT", "LEX") + "g 1: [1] [1]\ng 2: [] [1]\n")
    with pytest.raises(FormatError):
        parse_basis(head + "g 1: [1] [1] [1]\ng 2: [] [1]\n")
