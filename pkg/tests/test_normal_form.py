import random
from fractions import Fraction

import pytest

from skewnf.arith import GaussRat, I
from skewnf.blocks import build_P, build_Q, build_R
from skewnf.errors import NotSkewSymmetric, PairingViolation, UnsupportedEigenvalues, DimensionMismatch
from skewnf.jordan import ElementaryDivisor, elementary_divisors
from skewnf.linalg import Matrix, Poly, charpoly, direct_sum
from skewnf.normal_form import (
    NormalFormPlan,
    PBlock,
    QBlock,
    RBlock,
    assemble,
    canonical_sign,
    normal_form,
    plan_blocks,
    signed_permutation,
    similar,
)

from conftest import random_signed_permutation

t = Poly.t()
G = GaussRat


def jordan_block(n, lam=0):
    return Matrix.tridiagonal([0] * (n - 1), [lam] * n, [1] * (n - 1), "gauss")


def test_canonical_sign():
    assert canonical_sign(G(-2)) == 2
    assert canonical_sign(-2 * I) == 2 * I
    assert canonical_sign(G(-1, 5)) == G(1, -5)
    assert PBlock(-3, 2) == PBlock(3, 2)


def test_block_size_rules():
    for bad in (lambda: PBlock(0, 2), lambda: PBlock(1, 3), lambda: QBlock(6), lambda: RBlock(2)):
        with pytest.raises(ValueError):
            bad()


def test_plan_blocks_examples():
    assert plan_blocks([ElementaryDivisor(2, 3), ElementaryDivisor(-2, 3)]).blocks == (PBlock(2, 6),)
    assert plan_blocks([ElementaryDivisor(0, 4, 2)]).blocks == (QBlock(8),)
    assert plan_blocks([ElementaryDivisor(0, 5)]).blocks == (RBlock(5),)
    with pytest.raises(PairingViolation):
        plan_blocks([ElementaryDivisor(0, 4)])


def test_plan_order():
    plan = NormalFormPlan((PBlock(1, 2), QBlock(4), RBlock(3), RBlock(1), PBlock(I, 2), PBlock(1, 4)))
    assert plan.blocks == (RBlock(1), RBlock(3), QBlock(4), PBlock(I, 2), PBlock(1, 2), PBlock(1, 4))
    assert plan.size == 16


def test_assemble_examples():
    assert assemble(NormalFormPlan((RBlock(1),))) == Matrix([[0]], "radical")
    assert assemble(NormalFormPlan((PBlock(1, 2),))) == Matrix([[0, I], [-I, 0]], "radical")
    m = assemble(NormalFormPlan((QBlock(8), RBlock(3))))
    assert m.shape == (11, 11) and charpoly(m) == t ** 11


def test_normal_form_examples():
    rng = random.Random(11)
    p = random_signed_permutation(8, rng)
    plan, _, cert = normal_form(build_Q(8).conjugate_by(p))
    assert plan.blocks == (QBlock(8),) and cert.holds
    plan, n, cert = normal_form(Matrix.zeros(2))
    assert plan.blocks == (RBlock(1), RBlock(1)) and cert.holds
    plan, n, cert = normal_form(Matrix([[0, 2], [-2, 0]]))
    assert plan.blocks == (PBlock(2 * I, 2),)
    assert cert.holds and charpoly(n) == t * t + 4


def test_normal_form_errors():
    with pytest.raises(NotSkewSymmetric):
        normal_form(Matrix([[0, 1], [1, 0]]))
    with pytest.raises(UnsupportedEigenvalues):
        normal_form(Matrix([[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]))


def test_scaling_covariance():
    rng = random.Random(3)
    base = NormalFormPlan((PBlock(1, 4), PBlock(I, 2), QBlock(4), RBlock(3)))
    a = assemble(base).conjugate_by(random_signed_permutation(base.size, rng))
    for c in (2, Fraction(-1, 3), 5):
        plan, _, cert = normal_form(a.scale(c))
        assert cert.holds
        expected = []
        for b in base.blocks:
            expected.append(PBlock(b.lam * c, b.m) if b.kind == "P" else b)
        assert plan == NormalFormPlan(tuple(expected))


def test_similar():
    a = build_Q(8)
    assert similar(a, a)
    assert similar(a, direct_sum([jordan_block(4), jordan_block(4)]))
    assert not similar(a, direct_sum([jordan_block(5), jordan_block(3)]))
    with pytest.raises(DimensionMismatch):
        similar(a, jordan_block(3))


def test_signed_permutation_is_orthogonal():
    p = signed_permutation([2, 0, 1], [1, -1, 1])
    assert p @ p.T == Matrix.identity(3)


def test_divisors_of_assembled_blocks():
    a = assemble(NormalFormPlan((PBlock(G(1, 2), 4), RBlock(5))))
    divs = elementary_divisors(a)
    assert {(d.eigenvalue, d.size, d.count) for d in divs} == {
        (G(1, 2), 2, 1), (G(-1, -2), 2, 1), (G(0), 5, 1)}


def test_input_with_block_of_p_matrices():
    a = direct_sum([build_P(4), build_R(3)])
    plan, _, cert = normal_form(a)
    assert plan.blocks == (RBlock(3), PBlock(1, 4)) and cert.holds
