import pytest

from gqc import (
    GF,
    OrbitProfile,
    Poly,
    PolyVec,
    algorithm1,
    algorithm2,
    compute_A,
    generator_matrix,
    scalar_product,
    transpose_hat,
    transpose_pipeline,
    verify_theorem2,
)
from gqc.grobner import GrobnerBasis, Ordering
from gqc.instances import random_gqc, random_lengths
from gqc.linalg import mul_transpose, rank
from gqc.transpose import InexactDivisionError, PolyMatrix

from conftest import pv
from known_codes import A3, B3, BASIS2, BASIS3, DUAL_BASIS3, GENERATOR3, GF2, H2, H3, PROFILE2, PROFILE3


def entries(M):
    return [[M[i, j] for j in range(3)] for i in range(3)]


def polys(rows):
    return [[Poly.from_exponents(GF2, e) for e in row] for row in rows]


def test_c3_walkthrough():
    run = transpose_pipeline(H3, PROFILE3)
    assert list(run.dual_basis.vectors) == [pv(PROFILE3, e) for e in DUAL_BASIS3]
    assert entries(run.A) == polys(A3)
    assert entries(run.B) == polys(B3)
    assert list(run.basis.vectors) == [pv(PROFILE3, e) for e in BASIS3]


def test_unreduced_basis_uses_orbit_modulus():
    run = transpose_pipeline(H3, PROFILE3, reduce=False)
    # t^{deg a_22} * hat(a_32) = t^4 (1 + t^2) = 1 + t^2 modulo t^4 - 1
    assert run.unreduced.entry(1, 2) == Poly.from_exponents(GF2, [0, 2])
    assert run.unreduced.diagonal(2) == Poly.from_exponents(GF2, [0, 4])


def test_dual_pairing_on_c3():
    run = transpose_pipeline(H3, PROFILE3)
    assert verify_theorem2(run.dual_basis, run.B)
    # Reading the pairing in M, the diagonal collapses to zero.
    assert not scalar_product(run.dual_basis.vectors[0], run.B.row(0))[0]


def test_generator_matrix_c3():
    G = generator_matrix(algorithm2(H3, PROFILE3))
    assert G == GENERATOR3
    assert not any(any(r) for r in mul_transpose(GF2, G, H3))


def test_algorithm2_c2():
    assert list(algorithm2(H2, PROFILE2).vectors) == [pv(PROFILE2, e) for e in BASIS2]


def test_degenerate_diagonal_gives_full_modulus():
    # With h_11 = 1 the orbit carries no information: a_11 = t^l - 1 and g_11 = t^l - 1.
    p = OrbitProfile(GF2, (3, 2))
    H = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]
    run = transpose_pipeline(H, p)
    assert run.A[0, 0] == Poly.cyclic_modulus(GF2, 3)
    assert run.B[0, 0] == Poly.cyclic_modulus(GF2, 3)
    assert run.basis.diagonal(0) == Poly.cyclic_modulus(GF2, 3)
    assert verify_theorem2(run.dual_basis, run.B)
    assert run.basis == algorithm1(H, p)


def test_inexact_division_names_the_entry():
    p = OrbitProfile(GF2, (2, 3))
    # Not a Gröbner basis of any closure: h_11 = 1 + t + t^2 does not divide t^2 - 1.
    hb = GrobnerBasis(
        (pv(p, [[0, 1, 2], []]), pv(p, [[0], [0]])),
        Ordering.RPOT, True, p,
    )
    with pytest.raises(InexactDivisionError) as exc:
        compute_A(hb)
    assert (exc.value.i, exc.value.j) == (0, 0)
    assert "a_11" in str(exc.value)


def test_compute_a_requires_rpot():
    B = algorithm2(H3, PROFILE3)
    with pytest.raises(ValueError):
        compute_A(B)


def test_random_cross_check(rng):
    for _ in range(40):
        f = rng.choice([GF(2), GF(3), GF(2, 2)])
        inst = random_gqc(rng, f, random_lengths(rng, 24))
        run = transpose_pipeline(inst.H, inst.profile)
        assert run.basis == algorithm1(inst.H, inst.profile)
        assert verify_theorem2(run.dual_basis, run.B)
        G = generator_matrix(run.basis)
        assert len(G) == inst.n - rank(f, inst.H)
        if G:
            assert rank(f, G) == len(G)
            assert not any(any(r) for r in mul_transpose(f, G, inst.H))


def test_transpose_hat_shape():
    run = transpose_pipeline(H3, PROFILE3)
    B = transpose_hat(run.A)
    assert isinstance(B, PolyMatrix)
    for i in range(3):
        for j in range(i):
            assert not B[i, j]
    assert isinstance(B.row(0), PolyVec)
