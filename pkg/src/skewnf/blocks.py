"""Constructors for the canonical skew-symmetric blocks S, P_n, R_n and Q_4s."""

from __future__ import annotations

from fractions import Fraction

from .arith import GaussRat, I, Radical, coerce, join_rings, rat_sqrt_lift, ring_of
from .errors import BadSize, EvenSize, OddSize
from .linalg import Matrix

__all__ = [
    "bidiagonal_skew",
    "is_special",
    "p_superdiagonal",
    "r_superdiagonal",
    "build_P",
    "build_R",
    "build_Q",
    "q_parts",
    "beta",
]


def bidiagonal_skew(superdiagonal, ring: str | None = None) -> Matrix:
    """Skew-symmetric bidiagonal matrix with ``a_k`` at ``(k, k+1)``.

    The size is ``len(superdiagonal) + 1``.
    """
    a = list(superdiagonal)
    n = len(a) + 1
    if ring is None:
        ring = join_rings(*(ring_of(x) for x in a)) if a else "rat"
    z = coerce(0, ring)
    m = [[z] * n for _ in range(n)]
    for k, x in enumerate(a):
        x = coerce(x, ring)
        m[k][k + 1] = x
        m[k + 1][k] = -x
    return Matrix(m, ring)


def is_special(superdiagonal) -> bool:
    """All entries nonzero and every even-indexed entry (1-based) equal to 1."""
    return all(x != 0 for x in superdiagonal) and all(
        x == 1 for k, x in enumerate(superdiagonal, start=1) if k % 2 == 0
    )


def beta(n: int, k: int) -> Fraction:
    """``k(n-k)/((n-2k)^2 - 1)``: the square of the k-th superdiagonal entry of P_n."""
    if n % 2:
        raise OddSize(f"beta needs even n, got {n}")
    return Fraction(k * (n - k), (n - 2 * k) ** 2 - 1)


def _signs(signs, length):
    if signs is None:
        return [1] * length
    signs = list(signs)
    if len(signs) != length:
        raise ValueError(f"expected {length} signs, got {len(signs)}")
    return signs


def p_superdiagonal(n: int, signs=None) -> list[Radical]:
    if n < 2 or n % 2:
        raise OddSize(f"P_n needs even n >= 2, got {n}")
    signs = _signs(signs, n - 1)
    # beta(n, s) = -s^2, whose + branch lift is s*i
    return [rat_sqrt_lift(beta(n, k), signs[k - 1]) for k in range(1, n)]


def r_superdiagonal(n: int, signs=None) -> list[Radical]:
    if n < 1 or n % 2 == 0:
        raise EvenSize(f"R_n needs odd n >= 1, got {n}")
    s = (n - 1) // 2
    signs = _signs(signs, n - 1)
    out = []
    for j in range(1, s + 1):
        out.append(rat_sqrt_lift(s - j + 1, signs[2 * j - 2]))
        out.append(rat_sqrt_lift(-j, signs[2 * j - 1]))
    return out


def build_P(n: int, signs=None) -> Matrix:
    """The bidiagonal block P_n (n even) with eigenvalues +1 and -1."""
    return bidiagonal_skew(p_superdiagonal(n, signs), "radical")


def build_R(n: int, signs=None) -> Matrix:
    """The nilpotent bidiagonal block R_n (n odd)."""
    return bidiagonal_skew(r_superdiagonal(n, signs), "radical")


def q_parts(m: int) -> tuple[Matrix, Matrix]:
    """The two halves ``X1``, ``X2`` with ``Q_m = X - X'`` and ``X = X1 + X2``."""
    if m < 4 or m % 4:
        raise BadSize(f"Q_m needs m divisible by 4, got {m}")
    s = m // 4
    x1 = [[GaussRat(0)] * m for _ in range(m)]
    x2 = [[GaussRat(0)] * m for _ in range(m)]
    for p in range(1, s + 1):
        x1[2 * p - 2][2 * p] = x1[2 * p - 2][2 * p] + I
        x1[2 * p - 2][2 * p - 1] = x1[2 * p - 2][2 * p - 1] - 1
    for p in range(s + 1, 2 * s + 1):
        x2[2 * p - 1][2 * p - 3] = x2[2 * p - 1][2 * p - 3] + I
        x2[2 * p - 1][2 * p - 2] = x2[2 * p - 1][2 * p - 2] + 1
    return Matrix(x1, "gauss"), Matrix(x2, "gauss")


def build_Q(m: int) -> Matrix:
    """The 4-diagonal nilpotent block Q_m (m = 4s) with Jordan type [2s, 2s]."""
    x1, x2 = q_parts(m)
    x = x1 + x2
    return x - x.T
