import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewnf.arith import GaussRat, I
from skewnf.blocks import build_P, build_Q, build_R
from skewnf.errors import UnsupportedEigenvalues
from skewnf.jordan import (
    ElementaryDivisor,
    elementary_divisors,
    gaussian_roots,
    jordan_at,
    rank_sequence,
    validate_skew_pairing,
)
from skewnf.linalg import Matrix, Poly, charpoly, direct_sum
from skewnf.normal_form import PBlock, QBlock, RBlock, assemble, NormalFormPlan
from skewnf.variety import map_B

from conftest import nonzero_gauss, random_signed_permutation

t = Poly.t()
G = GaussRat


def test_gaussian_roots_examples():
    assert gaussian_roots(t ** 3) == ([(G(0), 3)], Poly((1,)))
    assert gaussian_roots((t * t - 1) ** 3) == ([(G(-1), 3), (G(1), 3)], Poly((1,)))
    roots, rem = gaussian_roots(t * t + 1)
    assert roots == [(-I, 1), (I, 1)] and rem == 1


def test_gaussian_roots_remainder():
    roots, rem = gaussian_roots((t - 2) * (t * t - 2))
    assert roots == [(G(2), 1)] and rem == t * t - 2
    roots, rem = gaussian_roots(t * t + t + 1)
    assert roots == [] and rem == t * t + t + 1


@settings(max_examples=60)
@given(st.lists(st.builds(G, st.integers(-4, 4), st.integers(-4, 4)).map(lambda z: z / 2), min_size=1, max_size=5))
def test_gaussian_roots_recovers_planted_roots(rs):
    f = Poly.from_roots(rs)
    roots, rem = gaussian_roots(f)
    assert rem.degree == 0
    expected = {}
    for r in rs:
        expected[r] = expected.get(r, 0) + 1
    assert dict(roots) == expected


@settings(max_examples=30)
@given(st.lists(nonzero_gauss, min_size=1, max_size=3), st.integers(1, 3))
def test_gaussian_roots_with_leading_coefficient(rs, c):
    f = Poly.from_roots(rs) * (c * I)
    roots, rem = gaussian_roots(f)
    assert sum(m for _, m in roots) == len(rs)
    assert rem.degree == 0


def test_jordan_at_examples():
    assert jordan_at(build_Q(8), 0) == [4, 4]
    assert jordan_at(Matrix.zeros(3), 0) == [1, 1, 1]
    assert jordan_at(map_B((1, -1)), 0) == [3]
    assert rank_sequence(map_B((1, -1)), 0) == [3, 2, 1, 0]
    assert jordan_at(Matrix.identity(2), 0) == []


def test_jordan_structure_of_blocks():
    for m in (2, 4, 6, 8):
        p = build_P(m)
        assert jordan_at(p, 1) == [m // 2] and jordan_at(p, -1) == [m // 2]
    for m in (4, 8, 12):
        assert jordan_at(build_Q(m), 0) == [m // 2, m // 2]
    for m in (1, 3, 5, 7, 9):
        assert jordan_at(build_R(m), 0) == [m]


def test_elementary_divisors_total_dimension():
    a = direct_sum([build_Q(4).as_ring("gauss"), Matrix([[0, 2], [-2, 0]], "gauss"), Matrix([[0]], "gauss")])
    divs = elementary_divisors(a)
    assert sum(d.size * d.count for d in divs) == a.rows
    f = Poly((1,))
    for d in divs:
        f = f * (t - d.eigenvalue) ** (d.size * d.count)
    assert f == charpoly(a)


def test_elementary_divisors_unsupported():
    with pytest.raises(UnsupportedEigenvalues):
        elementary_divisors(Matrix([[0, 1], [-2, 0]]))


@pytest.mark.parametrize("divs, ok", [
    ([ElementaryDivisor(2, 3), ElementaryDivisor(-2, 3)], True),
    ([ElementaryDivisor(0, 4)], False),
    ([ElementaryDivisor(0, 3)], True),
    ([ElementaryDivisor(0, 4, 2)], True),
    ([ElementaryDivisor(2, 3), ElementaryDivisor(-2, 2)], False),
])
def test_validate_skew_pairing(divs, ok):
    assert validate_skew_pairing(divs) is ok


def test_pairing_holds_for_random_skew_conjugates():
    rng = random.Random(5)
    menus = [
        [QBlock(4), RBlock(3)],
        [PBlock(2, 2), PBlock(I, 4), RBlock(1)],
        [PBlock(G(1, 1), 2), QBlock(8)],
        [RBlock(5), RBlock(3), PBlock(3, 2)],
    ]
    for blocks in menus:
        a = assemble(NormalFormPlan(tuple(blocks)))
        p = random_signed_permutation(a.rows, rng)
        b = a.conjugate_by(p)
        assert b.is_skew_symmetric()
        divs = elementary_divisors(b)
        assert validate_skew_pairing(divs)


def test_divisor_validation():
    with pytest.raises(ValueError):
        ElementaryDivisor(1, 0)
    assert ElementaryDivisor(1, 2) < ElementaryDivisor(2, 1)
