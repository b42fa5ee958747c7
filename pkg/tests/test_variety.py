import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewnf.arith import GaussRat, I, Radical
from skewnf.blocks import r_superdiagonal
from skewnf.errors import (
    DenominatorVanishes,
    NonRationalCoordinate,
    NotAMember,
    NotNilpotent,
    SegmentNotInVStar,
)
from skewnf.jordan import jordan_at
from skewnf.linalg import Matrix, Poly, charpoly, is_nilpotent
from skewnf.variety import (
    PointP,
    all_lifts,
    cf_invert,
    check_prop51,
    enumerate_Lambda,
    even_assemble,
    even_B,
    even_decompose,
    fiber_assemble,
    fiber_factor,
    in_V,
    is_admissible,
    map_A1,
    map_A2,
    map_B,
    nilpotent_jacobi,
    random_member,
    random_vstar_point,
    segment_sizes,
    signature,
    skew_lift,
    skew_phi,
)

from conftest import small_rat

t = Poly.t()
G = GaussRat


def test_maps_examples():
    assert map_A2((1, 2)) == Matrix([[-3]])
    assert map_A1((1, 2)) == Matrix([[-1, 2], [1, -2]])
    b = map_B((0, 0, 0, 0))
    assert is_nilpotent(b) and b[1, 0] == 1 and b[0, 1] == 0
    assert map_B((1, -1)) == Matrix([[0, -1, 0], [1, 0, 1], [0, 1, 0]])


def test_map_shapes():
    p = (1, 2, 3, 4, 5, 6)
    assert map_A1(p).shape == (4, 4) and map_A2(p).shape == (3, 3) and map_B(p).shape == (7, 7)
    assert map_A1(p)[1, 1] == -5 and map_A1(p)[1, 2] == 12 and map_A2(p)[0, 1] == 6
    with pytest.raises(ValueError):
        PointP((1, 2, 3))


def test_determinant_identities_examples():
    assert charpoly(map_A1((1, 2))) == t * (t + 3)
    assert charpoly(map_B((1, 2))) == t * (t * t + 3)
    assert check_prop51((1, 2)) and check_prop51((0, 0))


@settings(max_examples=200)
@given(st.integers(1, 6).flatmap(lambda s: st.lists(small_rat, min_size=2 * s, max_size=2 * s)))
def test_determinant_identities_against_dense_charpoly(p):
    assert check_prop51(p)
    c2 = charpoly(map_A2(p))
    assert charpoly(map_B(p)) == t * c2.compose(t * t)
    assert charpoly(map_A1(p)) == t * c2


def test_determinant_identities_gaussian_rational():
    assert check_prop51((I, 1 - I, G(2, 3), Fraction(1, 7)))


def test_membership():
    assert in_V((1, -1)) and in_V((0, 0)) and not in_V((1, 1))
    assert in_V(())


def test_signature_examples():
    assert signature((1, -1)) == ()
    assert signature((0, 0)) == (1, 2)
    assert signature((0, 0, 1, -1)) == (1, 2)
    with pytest.raises(NotAMember):
        signature((1, 1))


def test_enumerate_lambda():
    assert enumerate_Lambda(0) == [()]
    assert enumerate_Lambda(1) == [(), (1, 2)]
    assert enumerate_Lambda(2) == [(), (1, 2), (1, 4), (3, 4), (1, 2, 3, 4)]
    for s in range(5):
        assert all(is_admissible(lam, s) for lam in enumerate_Lambda(s))


def test_lambda_counts_reported():
    # observed counts only
    assert [len(enumerate_Lambda(s)) for s in range(6)] == [1, 2, 5, 13, 34, 89]


def test_fiber_examples():
    segs = fiber_factor((0, 0, 1, -1))
    assert [seg.coords for seg in segs] == [(), (), (G(1), G(-1))]
    assert segment_sizes((1, 2), 5) == [0, 0, 1]
    assert fiber_assemble((1, 2), [(), (), (1, -1)]) == PointP((0, 0, 1, -1))
    assert [seg.coords for seg in fiber_factor((1, -1))] == [(G(1), G(-1))]


def test_fiber_errors():
    with pytest.raises(SegmentNotInVStar):
        fiber_assemble((1, 2), [(), (), (1, 1)])
    with pytest.raises(SegmentNotInVStar):
        fiber_assemble((), [(0, 0)])
    with pytest.raises(NotAMember):
        fiber_factor((1, 1))


def test_cf_invert_examples():
    assert cf_invert(map_A1((1, -1))) == PointP((1, -1))
    p = PointP((2, 3, -5, Fraction(1, 2)))
    assert cf_invert(map_A1(p)) == p
    with pytest.raises(DenominatorVanishes):
        cf_invert(map_A1((0, 5)))
    with pytest.raises(DenominatorVanishes):
        cf_invert(map_A1((1, -1, 0, 2, 3, 4)))


@settings(max_examples=200)
@given(st.integers(1, 5).flatmap(lambda s: st.lists(small_rat.filter(bool), min_size=2 * s, max_size=2 * s)))
def test_cf_invert_round_trip(p):
    assert cf_invert(map_A1(p)) == PointP(tuple(p))


def test_cf_invert_rejects_malformed():
    with pytest.raises(ValueError):
        cf_invert(Matrix([[0, 1], [2, 0]]))
    with pytest.raises(ValueError):
        cf_invert(Matrix([[0, 1, 1], [1, 0, 1], [0, 1, 0]]))


def test_nilpotent_jacobi_and_sampler():
    rng = random.Random(4)
    for s in range(1, 7):
        p = random_vstar_point(s, rng)
        assert all(x != 0 for x in p.coords)
        assert in_V(p)
        assert is_nilpotent(map_B(p))
    phi = Poly((Fraction(1, 2), 3, 1))
    tm = nilpotent_jacobi(phi)
    assert charpoly(tm) == t ** 3
    assert charpoly(tm.submatrix(range(2), range(2))) == phi


def test_random_member_signatures():
    rng = random.Random(8)
    for s in range(1, 5):
        for lam in enumerate_Lambda(s):
            p = random_member(s, rng, lam)
            assert in_V(p) and signature(p) == lam
            assert fiber_assemble(lam, fiber_factor(p)) == p
            assert sum(seg.s for seg in fiber_factor(p)) == s - len(lam) // 2


def test_skew_phi_and_lift():
    assert skew_phi((1, I)) == PointP((-1, 1))
    assert skew_lift((-1, 1), (1, 1)) == [Radical(1), Radical(I)]
    for x in (G(2), G(Fraction(1, 3)), G(1, 1)):
        p = skew_phi((x, I * x))
        assert p == PointP((-x * x, x * x)) and in_V(p)
    with pytest.raises(NotNilpotent):
        skew_phi((1, 1))
    with pytest.raises(NonRationalCoordinate):
        skew_lift((I, -I))
    with pytest.raises(NotAMember):
        skew_lift((1, 1))


def test_lift_count():
    p = PointP((0, 0, 1, -1))
    lifts = all_lifts(p)
    assert len(lifts) == 4 and len({tuple(l) for l in lifts}) == 4
    assert all(skew_phi(l) == p for l in lifts)


def test_r_block_phi_image():
    for n in range(1, 22, 2):
        p = skew_phi(r_superdiagonal(n))
        assert in_V(p) and signature(p) == ()
        assert jordan_at(map_B(p), 0) == [n]


def test_even_case():
    assert even_decompose((0,)) == [1]
    with pytest.raises(NotNilpotent):
        even_decompose((1,))
    q = even_assemble(1, (), (1, -1))
    assert q == (G(0), G(1), G(-1)) and is_nilpotent(even_B(q))
    assert even_decompose((0, 0, 0)) == [1, 2]
    assert even_decompose(q) == [1]
    # (0, 1, 0) has B-charpoly t^2 (t^2 + 1): not nilpotent
    assert charpoly(even_B((0, 1, 0))) == t ** 2 * (t * t + 1)
    with pytest.raises(NotNilpotent):
        even_decompose((0, 1, 0))
    with pytest.raises(NotNilpotent):
        even_assemble(1, (), (1, 1))


def test_even_assemble_from_members():
    rng = random.Random(2)
    for s in range(1, 5):
        for j in range(1, s + 1):
            p1 = random_member(j - 1, rng)
            p2 = random_member(s - j, rng)
            q = even_assemble(j, p1, p2)
            assert len(q) == 2 * s - 1
            assert j in even_decompose(q)
