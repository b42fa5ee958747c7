"""Beta coefficients, the gap-sum identities, Givental weights and U/V matrices."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

from .blocks import beta, bidiagonal_skew
from .linalg import Matrix, charpoly, even_odd_split

__all__ = [
    "beta",
    "beta_table",
    "beta_tridiagonal",
    "beta_U",
    "beta_V",
    "ident_lhs",
    "ident_lhs_bruteforce",
    "verify_identities",
    "weight_u",
    "weight_v",
    "check_grid",
    "build_U",
    "build_V",
    "check_truncation",
    "check_IY",
    "bidiag_square_split",
]


def beta_table(n: int) -> list[Fraction]:
    """``[beta(n, k) for k = 1..n-1]``."""
    return [beta(n, k) for k in range(1, n)]


def beta_tridiagonal(s: int) -> Matrix:
    """Size ``2s`` tridiagonal matrix with ``beta_k`` above and ``-1`` below the diagonal.

    It is similar to P_{2s} (conjugate by the diagonal matrix of partial
    products of the superdiagonal of P_{2s}).
    """
    n = 2 * s
    b = beta_table(n)
    return Matrix.tridiagonal([-1] * (n - 1), [0] * n, b, "rat")


def beta_U(s: int) -> Matrix:
    """Lower bidiagonal: ``beta_1, beta_3, ...`` on the diagonal, ``-1`` below."""
    b = beta_table(2 * s)
    return Matrix.tridiagonal([-1] * (s - 1), b[0::2], [0] * (s - 1), "rat")


def beta_V(s: int) -> Matrix:
    """Upper bidiagonal: ``-1`` on the diagonal, ``beta_2, beta_4, ...`` above."""
    b = beta_table(2 * s)
    return Matrix.tridiagonal([0] * (s - 1), [-1] * s, b[1::2], "rat")


def ident_lhs(s: int, k: int) -> Fraction:
    """Sum of ``beta_{i1} ... beta_{ik}`` over ``1 <= i1 << ... << ik <= 2s-1``,
    where ``i << j`` means ``j - i >= 2``."""
    b = beta_table(2 * s)
    # f[j][m]: sum over m-subsets of 1..j with gaps >= 2
    prev2 = [Fraction(1)] + [Fraction(0)] * k
    prev1 = [Fraction(1)] + [Fraction(0)] * k
    for j in range(1, len(b) + 1):
        cur = prev1[:]
        for m in range(1, k + 1):
            cur[m] += b[j - 1] * prev2[m - 1]
        prev2, prev1 = prev1, cur
    return prev1[k]


def ident_lhs_bruteforce(s: int, k: int) -> Fraction:
    b = beta_table(2 * s)
    total = Fraction(0)
    for idx in combinations(range(1, 2 * s), k):
        if all(q - p >= 2 for p, q in zip(idx, idx[1:])):
            prod = Fraction(1)
            for i in idx:
                prod *= b[i - 1]
            total += prod
    return total


def verify_identities(s: int) -> bool:
    """Check the gap-sum identities against ``(-1)^k C(s, k)`` for ``1 <= k <= s``
    and against the charpoly coefficients of :func:`beta_tridiagonal`."""
    chi = charpoly(beta_tridiagonal(s))
    n = 2 * s
    for k in range(1, s + 1):
        lhs = ident_lhs(s, k)
        if lhs != (-1) ** k * comb(s, k):
            return False
        if chi.coeff(n - 2 * k) != lhs or chi.coeff(n - 2 * k + 1) != 0:
            return False
    return True


def weight_u(i: int, j: int) -> Fraction:
    return Fraction(-2 * i * (2 * i + 1), (2 * i - 2 * j + 1) * (2 * i - 2 * j + 3))


def weight_v(i: int, j: int) -> Fraction:
    return Fraction(2 * j * (2 * j - 1), (2 * i - 2 * j - 1) * (2 * i - 2 * j + 1))


def check_grid(imax: int = 20, jmax: int = 20, imin: int = 0, jmin: int = 0) -> bool:
    """Vertex-balance and square-product relations of the weights on the grid box.

    At each vertex ``(i, j)``: ``u(i,j) + v(i,j-1) == u(i-1,j) + v(i,j)``.
    On each unit square with corner ``(i, j)``: ``u(i,j) v(i,j) == u(i,j+1) v(i+1,j)``.
    Also checks ``u(0, j) == 0`` and ``v(i, 0) == 0``.
    """
    for i in range(imin, imax + 1):
        for j in range(jmin, jmax + 1):
            if weight_u(i, j) + weight_v(i, j - 1) != weight_u(i - 1, j) + weight_v(i, j):
                return False
            if weight_u(i, j) * weight_v(i, j) != weight_u(i, j + 1) * weight_v(i + 1, j):
                return False
    if any(weight_u(0, j) != 0 for j in range(jmin, jmax + 1)):
        return False
    return all(weight_v(i, 0) == 0 for i in range(imin, imax + 1))


def build_U(d: int) -> Matrix:
    """Size ``d+1``: diagonal ``u(d,1), u(d-1,2), ..., u(1,d), 0``; ones below."""
    diag = [weight_u(d - k, k + 1) for k in range(d)] + [Fraction(0)]
    return Matrix.tridiagonal([1] * d, diag, [0] * d, "rat")


def build_V(d: int) -> Matrix:
    """Size ``d+1``: ``-1`` on the diagonal, ``v(d,1), ..., v(1,d)`` above."""
    sup = [weight_v(d - k, k + 1) for k in range(d)]
    return Matrix.tridiagonal([0] * d, [-1] * (d + 1), sup, "rat")


def check_truncation(d: int) -> bool:
    """``V_d U_d`` minus its last row and column equals ``U_{d-1} V_{d-1}``."""
    vu = build_V(d) @ build_U(d)
    head = vu.submatrix(range(d), range(d))
    return head == build_U(d - 1) @ build_V(d - 1)


def check_IY(s: int) -> bool:
    """``I_s - Y == U_{s-1} V_{s-1}`` where ``Y`` is the odd-index block of ``X^2``."""
    x = beta_tridiagonal(s)
    y, _ = even_odd_split(x @ x)
    return Matrix.identity(s, "rat") - y == build_U(s - 1) @ build_V(s - 1)


def bidiag_square_split(xs, y, odd: bool = False) -> tuple[Matrix, Matrix, Matrix]:
    """Odd/even blocks ``S1, S2`` of ``S^2`` and the factor ``X``.

    ``S`` is the skew bidiagonal matrix with superdiagonal
    ``x1, y, x2, y, ..., xs`` (or ``..., xs, y`` when ``odd``), and ``X`` has
    ``x1..xs`` on the diagonal and ``-y`` below it (one extra row when
    ``odd``).  Then ``S1 == -X X'`` and ``S2 == -X' X``.
    """
    xs = list(xs)
    s = len(xs)
    sup = []
    for k, x in enumerate(xs):
        sup.append(x)
        if k < s - 1 or odd:
            sup.append(y)
    sm = bidiagonal_skew(sup)
    s1, s2 = even_odd_split(sm @ sm)
    rows = s + 1 if odd else s
    xm = [[0] * s for _ in range(rows)]
    for k in range(s):
        xm[k][k] = xs[k]
        if k + 1 < rows:
            xm[k + 1][k] = -y
    return s1, s2, Matrix(xm)
