import pytest

from gqc import GF, algorithm1, echelon_pipeline
from gqc.echelon import Permutation, dual_generator, standard_form
from gqc.linalg import mul_transpose, rank

from conftest import pv
from known_codes import BASIS2, DUAL_GENERATOR2, ECHELON2, H2, PROFILE2, TAU2


def test_pipeline_intermediates_for_c2():
    run = echelon_pipeline(H2, PROFILE2)
    assert run.echelon == ECHELON2
    assert [c + 1 for c in run.tau.order] == TAU2
    assert run.generator == DUAL_GENERATOR2
    assert list(run.basis.vectors) == [pv(PROFILE2, e) for e in BASIS2]


def test_algorithm1_c2():
    B = algorithm1(H2, PROFILE2)
    assert list(B.vectors) == [pv(PROFILE2, e) for e in BASIS2]


def test_standard_form_gives_identity_block():
    run = echelon_pipeline(H2, PROFILE2)
    T = run.tau.apply(run.echelon)
    r = len(run.pivots)
    assert [row[:r] for row in T] == [[int(i == j) for j in range(r)] for i in range(r)]


def test_permutation_round_trip():
    tau = Permutation((2, 0, 1))
    M = [[1, 2, 3]]
    assert tau.apply(M) == [[3, 1, 2]]
    assert tau.undo(tau.apply(M)) == M
    assert tau.inverse().apply(tau.apply(M)) == M
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_dual_generator_odd_characteristic(rng):
    f = GF(3)
    for _ in range(20):
        H = [[rng.randrange(3) for _ in range(6)] for _ in range(3)]
        from gqc.linalg import gauss_echelon

        E, piv = gauss_echelon(f, H)
        A, tau = standard_form(E, piv)
        G = dual_generator(f, A, tau)
        assert len(G) == 6 - rank(f, H)
        assert not any(any(r) for r in mul_transpose(f, G, H))
        assert rank(f, G) == len(G)


def test_bad_row_length():
    with pytest.raises(ValueError):
        algorithm1([[1, 0, 1]], PROFILE2)
