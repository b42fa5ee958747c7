import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skewnf.arith import GaussRat, Radical
from skewnf.linalg import Matrix, Poly

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_int = st.integers(min_value=-6, max_value=6)
small_rat = st.builds(Fraction, small_int, st.integers(min_value=1, max_value=4))
gauss = st.builds(GaussRat, small_rat, small_rat)
nonzero_gauss = gauss.filter(bool)
radicands = st.sampled_from([1, 2, 3, 5, 6, 7, 10, 15])
radical = st.dictionaries(radicands, gauss, max_size=3).map(Radical)
nonzero_radical = radical.filter(bool)


@st.composite
def gauss_matrix(draw, n=None, lo=1, hi=4):
    n = draw(st.integers(min_value=lo, max_value=hi)) if n is None else n
    rows = draw(st.lists(st.lists(gauss, min_size=n, max_size=n), min_size=n, max_size=n))
    return Matrix(rows, "gauss")


@st.composite
def rat_matrix(draw, lo=1, hi=4):
    n = draw(st.integers(min_value=lo, max_value=hi))
    rows = draw(st.lists(st.lists(small_rat, min_size=n, max_size=n), min_size=n, max_size=n))
    return Matrix(rows, "rat")


def cofactor_det(rows):
    """Determinant by Laplace expansion along the first row; entries may be polynomials."""
    n = len(rows)
    if n == 0:
        return Poly((1,))
    if n == 1:
        return rows[0][0]
    total = Poly()
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def charpoly_oracle(a: Matrix) -> Poly:
    n = a.rows
    t = Poly.t()
    rows = [[(t if i == j else Poly()) - Poly((a[i, j],)) for j in range(n)] for i in range(n)]
    return cofactor_det(rows)


def rank_oracle(a: Matrix) -> int:
    """Plain Gauss-Jordan elimination over Q(i)."""
    m = [[GaussRat(x) if not hasattr(x, "as_gauss") else x.as_gauss() for x in row] for row in a.tolist()]
    r = 0
    for c in range(a.cols):
        piv = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def random_signed_permutation(n: int, rng: random.Random) -> Matrix:
    perm = list(range(n))
    rng.shuffle(perm)
    m = [[0] * n for _ in range(n)]
    for j, p in enumerate(perm):
        m[p][j] = rng.choice((1, -1))
    return Matrix(m, "rat")


@pytest.fixture
def rng():
    return random.Random(20240801)


ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: (int(k.split()[0]), k)):
        terminalreporter.write_line(f"criterion {key}: {ACCEPTANCE_RESULTS[key]}")
