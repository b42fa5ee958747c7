from fractions import Fraction

import pytest

from skewnf.arith import GaussRat, I, Radical, rat_sqrt_lift
from skewnf.blocks import (
    beta,
    bidiagonal_skew,
    build_P,
    build_Q,
    build_R,
    is_special,
    p_superdiagonal,
    q_parts,
    r_superdiagonal,
)
from skewnf.errors import BadSize, EvenSize, OddSize
from skewnf.jordan import jordan_at
from skewnf.linalg import Matrix, Poly, charpoly, is_nilpotent, rank

t = Poly.t()
i = I

# Q_12 as displayed, row by row
Q12_DISPLAY = [
    [0, -1, i, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [-i, 0, 0, -1, i, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -i, 0, 0, -1, i, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, -i, 0, 0, 0, 0],
    [0, 0, 0, 0, -i, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, i, 1, 0, 0, -i, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, i, 1, 0, 0, -i],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, i, 1, 0],
]


def sqrt(r):
    return Radical({r: 1})


def test_bidiagonal_skew_examples():
    assert bidiagonal_skew([1]) == Matrix([[0, 1], [-1, 0]])
    m = bidiagonal_skew([1, I])
    assert m.is_skew_symmetric() and charpoly(m) == t ** 3
    assert bidiagonal_skew([]).shape == (1, 1)


@pytest.mark.parametrize("a, expected", [((I, 1, I), True), ((1, 0, 1), False), ((1, 2, 1), False), ((3,), True)])
def test_is_special(a, expected):
    assert is_special(a) is expected


def test_p6_matches_display():
    # (1/3) * superdiagonal (sqrt3, 2 sqrt6, 9i, 2 sqrt6, sqrt3)
    third = Fraction(1, 3)
    expected = [sqrt(3) * third, sqrt(6) * (2 * third), Radical(3 * I), sqrt(6) * (2 * third), sqrt(3) * third]
    assert p_superdiagonal(6) == expected
    p = build_P(6)
    assert p == bidiagonal_skew(expected, "radical")


def test_p_superdiagonal_squares_are_beta():
    for n in range(2, 21, 2):
        assert [x * x for x in p_superdiagonal(n)] == [Radical(beta(n, k)) for k in range(1, n)]
        assert p_superdiagonal(n)[n // 2 - 1] == Radical((n // 2) * I)


def test_build_p2_and_p4():
    assert build_P(2) == Matrix([[0, I], [-I, 0]], "radical")
    assert charpoly(build_P(4)) == (t * t - 1) ** 2


def test_p_and_r_sizes():
    with pytest.raises(OddSize):
        build_P(5)
    with pytest.raises(OddSize):
        build_P(0)
    with pytest.raises(EvenSize):
        build_R(4)
    with pytest.raises(BadSize):
        build_Q(6)
    with pytest.raises(OddSize):
        beta(5, 1)


def test_r7_matches_display():
    expected = [sqrt(3), Radical(I), sqrt(2), sqrt(2) * I, Radical(1), sqrt(3) * I]
    assert r_superdiagonal(7) == expected


def test_r_small():
    assert build_R(1) == Matrix([[0]], "radical")
    assert charpoly(build_R(3)) == t ** 3


def test_r_law_nilpotent_single_block():
    for n in range(1, 22, 2):
        r = build_R(n)
        assert charpoly(r) == t ** n
        assert all(x != 0 for x in r_superdiagonal(n))
        # a nilpotent bidiagonal with nonzero superdiagonal has rank n-1: one Jordan block
        assert rank(r) == n - 1


def test_signs_select_branches():
    plus = p_superdiagonal(4)
    mixed = p_superdiagonal(4, [1, -1, 1])
    assert mixed[1] == -plus[1] and mixed[0] == plus[0]
    assert charpoly(build_P(4, [-1, 1, -1])) == (t * t - 1) ** 2
    assert is_nilpotent(build_R(5, [1, -1, -1, 1]))
    with pytest.raises(ValueError):
        build_P(4, [1, 1])


def test_q4_rows():
    q = build_Q(4)
    assert q == Matrix([[0, -1, I, 0], [1, 0, 0, -I], [-I, 0, 0, -1], [0, I, 1, 0]], "gauss")
    assert rank(q) == 2
    assert q.ring == "gauss"


def test_q12_matches_display():
    assert build_Q(12) == Matrix(Q12_DISPLAY, "gauss")


@pytest.mark.parametrize("s", range(1, 9))
def test_q_invariants(s):
    m = 4 * s
    q = build_Q(m)
    x1, x2 = q_parts(m)
    x = x1 + x2
    assert q.is_skew_symmetric()
    assert (x @ x.T).is_zero()
    assert (x1 @ x2).is_zero() and (x2 @ x1).is_zero()
    assert (x1 ** (s + 1)).is_zero() and (x2 ** (s + 1)).is_zero()
    assert charpoly(q) == t ** m
    assert rank(q) == m - 2
    assert (q ** (2 * s)).is_zero() and not (q ** (2 * s - 1)).is_zero()
    assert jordan_at(q, 0) == [2 * s, 2 * s]


def test_lift_rule_for_middle_entry():
    # beta(n, s) = -s^2 and the + lift of -s^2 is s*i
    for s in range(1, 8):
        assert beta(2 * s, s) == -s * s
        assert rat_sqrt_lift(-s * s) == Radical(GaussRat(0, s))
