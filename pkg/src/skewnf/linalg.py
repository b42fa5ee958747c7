"""Dense exact matrices and univariate polynomials over the scalar rings."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import GaussRat, Radical, coerce, join_rings, ring_of
from .errors import DimensionMismatch, PatternViolation

__all__ = [
    "Matrix",
    "Poly",
    "direct_sum",
    "charpoly",
    "rank",
    "is_nilpotent",
    "even_odd_split",
    "tridiagonal_charpoly",
]


def _ring_of_rows(rows) -> str:
    ring = "rat"
    for row in rows:
        for x in row:
            r = ring_of(x)
            if r == "radical":
                return r
            if r == "gauss":
                ring = r
    return ring


class Matrix:
    """An immutable dense matrix whose entries all live in one scalar ring.

    The ring is inferred from the entries (the widest one wins) unless given
    explicitly; entries are coerced on construction.
    """

    __slots__ = ("rows", "cols", "ring", "_m")

    def __init__(self, data, ring: str | None = None):
        data = [list(row) for row in data]
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(row) != cols for row in data):
            raise DimensionMismatch("ragged rows")
        if ring is None:
            ring = _ring_of_rows(data)
        self.rows, self.cols, self.ring = rows, cols, ring
        self._m = tuple(tuple(coerce(x, ring) for x in row) for row in data)

    @classmethod
    def _wrap(cls, m, ring):
        obj = cls.__new__(cls)
        obj._m = m
        obj.rows = len(m)
        obj.cols = len(m[0]) if m else 0
        obj.ring = ring
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None, ring: str = "rat") -> "Matrix":
        cols = rows if cols is None else cols
        z = coerce(0, ring)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)), ring)

    @classmethod
    def identity(cls, n: int, ring: str = "rat") -> "Matrix":
        z, o = coerce(0, ring), coerce(1, ring)
        return cls._wrap(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), ring)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries, ring: str | None = None) -> "Matrix":
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(f"expected {rows * cols} entries, got {len(entries)}")
        return cls([entries[i * cols:(i + 1) * cols] for i in range(rows)], ring)

    @classmethod
    def tridiagonal(cls, sub, diag, sup, ring: str | None = None) -> "Matrix":
        n = len(diag)
        if len(sub) != n - 1 or len(sup) != n - 1:
            raise DimensionMismatch("off-diagonals must have length n-1")
        m = [[0] * n for _ in range(n)]
        for k in range(n):
            m[k][k] = diag[k]
            if k + 1 < n:
                m[k][k + 1] = sup[k]
                m[k + 1][k] = sub[k]
        return cls(m, ring)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> list:
        return [x for row in self._m for x in row]

    def tolist(self) -> list[list]:
        return [list(row) for row in self._m]

    def row(self, i: int) -> tuple:
        return self._m[i]

    def __getitem__(self, ij):
        i, j = ij
        return self._m[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def as_ring(self, ring: str) -> "Matrix":
        if ring == self.ring:
            return self
        return Matrix(self._m, ring)

    def transpose(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self._m)) if self.rows else (), self.ring)

    T = property(transpose)

    def _binary(self, other, op):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        ring = join_rings(self.ring, other.ring)
        a, b = self.as_ring(ring), other.as_ring(ring)
        return Matrix._wrap(tuple(tuple(op(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a._m, b._m)), ring)

    def __add__(self, other):
        return self._binary(other, lambda x, y: x + y)

    def __sub__(self, other):
        return self._binary(other, lambda x, y: x - y)

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-x for x in row) for row in self._m), self.ring)

    def scale(self, c) -> "Matrix":
        ring = join_rings(self.ring, ring_of(c))
        c = coerce(c, ring)
        src = self.as_ring(ring)
        return Matrix._wrap(tuple(tuple(c * x for x in row) for row in src._m), ring)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        if isinstance(other, (int, Fraction, GaussRat, Radical)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat, Radical)):
            return self.scale(other)
        return NotImplemented

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        ring = join_rings(self.ring, other.ring)
        a, b = self.as_ring(ring), other.as_ring(ring)
        return Matrix._wrap(_matmul(a._m, b._m, other.cols, coerce(0, ring)), ring)

    __matmul__ = matmul

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        out = Matrix.identity(self.rows, self.ring)
        base = self
        while k:
            if k & 1:
                out = out @ base
            k >>= 1
            if k:
                base = base @ base
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for ra, rb in zip(self._m, other._m) for x, y in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self._m))

    def is_zero(self) -> bool:
        return not any(x for row in self._m for x in row)

    def trace(self):
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        t = coerce(0, self.ring)
        for k in range(self.rows):
            t = t + self._m[k][k]
        return t

    def is_skew_symmetric(self) -> bool:
        return self.is_square() and all(
            self._m[i][j] == -self._m[j][i] for i in range(self.rows) for j in range(i, self.rows)
        )

    def submatrix(self, rows, cols) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix._wrap(tuple(tuple(self._m[i][j] for j in cols) for i in rows), self.ring)

    def conjugate_by(self, p: "Matrix") -> "Matrix":
        """``p @ self @ p.T`` (similarity when ``p`` is orthogonal)."""
        return p @ self @ p.T

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self._m)
        return f"Matrix[{self.rows}x{self.cols}, {self.ring}]([{body}])"


def _matmul(a, b, bcols, zero):
    out = []
    for row in a:
        acc = [zero] * bcols
        for j, x in enumerate(row):
            if x:
                for k, y in enumerate(b[j]):
                    if y:
                        acc[k] = acc[k] + x * y
        out.append(tuple(acc))
    return tuple(out)


def direct_sum(blocks) -> Matrix:
    """Block-diagonal matrix ``blocks[0] + blocks[1] + ...``."""
    blocks = list(blocks)
    if not blocks:
        return Matrix._wrap((), "rat")
    ring = join_rings(*(b.ring for b in blocks))
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    z = coerce(0, ring)
    out = [[z] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        b = b.as_ring(ring)
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return Matrix._wrap(tuple(tuple(row) for row in out), ring)


class Poly:
    """Dense univariate polynomial in ``t`` with ascending coefficients.

    Coefficients may be any exact scalar (or any commutative-ring element
    supporting ``+ - * ==``, e.g. multivariate polynomials).  Trailing zero
    coefficients are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_roots(cls, roots) -> "Poly":
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def map(self, f) -> "Poly":
        return Poly(f(c) for c in self.coeffs)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, Poly) else Poly((x,))

    def __add__(self, other):
        o = Poly._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(tuple(x + b[k] if k < len(b) else x for k, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-Poly._lift(other))

    def __rsub__(self, other):
        return Poly._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                v = x * y
                out[i + j] = v if out[i + j] is None else out[i + j] + v
        return Poly(0 if v is None else v for v in out)

    def __rmul__(self, other):
        return Poly(other * c for c in self.coeffs)

    def __pow__(self, k: int) -> "Poly":
        out = Poly((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, other: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(c * k for k, c in enumerate(self.coeffs) if k)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division; the divisor's leading coefficient must be invertible."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv = 1 / other.lc() if not _is_one(other.lc()) else None
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c if inv is None else c * inv
            quot[k - dq] = q
            for j, y in enumerate(other.coeffs):
                rem[k - dq + j] = rem[k - dq + j] - q * y
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lc = self.lc()
        return self if _is_one(lc) else self * (1 / lc)

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def squarefree_part(self) -> "Poly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        return (self // g).monic()

    def __eq__(self, other):
        o = Poly._lift(other)
        return len(self.coeffs) == len(o.coeffs) and all(x == y for x, y in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(f"({c})")
            elif _is_one(c):
                terms.append(mono)
            else:
                terms.append(f"({c})*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self})"


def _is_one(c) -> bool:
    try:
        return c == 1
    except TypeError:
        return False


def charpoly(a: Matrix) -> Poly:
    """``det(t*I - a)`` by the Faddeev-LeVerrier recurrence.

    Only divisions by the integers ``1..n`` occur, so this works over every
    scalar ring, including :class:`~skewnf.arith.Radical`.
    """
    if not a.is_square():
        raise DimensionMismatch("charpoly of a non-square matrix")
    n = a.rows
    zero, one = coerce(0, a.ring), coerce(1, a.ring)
    coeffs = [zero] * (n + 1)
    coeffs[n] = one
    m = a._m  # M_1 = A since M_0 = 0 and c_n = 1
    for k in range(1, n + 1):
        if k > 1:
            m = _matmul(a._m, m, n, zero)
        tr = zero
        for j in range(n):
            tr = tr + m[j][j]
        c = -tr / k
        coeffs[n - k] = c
        if k < n and c:
            m = tuple(tuple(x + c if i == j else x for j, x in enumerate(row)) for i, row in enumerate(m))
    return Poly(coeffs)


def tridiagonal_charpoly(diag, offprod) -> Poly:
    """Charpoly of a tridiagonal matrix from its diagonal and the products
    ``sup[k]*sub[k]`` of opposite off-diagonal entries.

    Uses the leading-minor recurrence
    ``phi_k = (t - d_k) phi_{k-1} - e_{k-1} phi_{k-2}``; entries may be any
    commutative ring elements.
    """
    prev, cur = Poly((1,)), Poly((1,))
    for k, d in enumerate(diag):
        nxt = cur * Poly((-d, 1))
        if k:
            nxt = nxt - prev * offprod[k - 1]
        prev, cur = cur, nxt
    return cur


def is_nilpotent(a: Matrix) -> bool:
    """True iff ``charpoly(a) == t**n``."""
    p = charpoly(a)
    return all(c == 0 for c in p.coeffs[:-1])


# ---------------------------------------------------------------- rank


def _gi_div(x, y):
    """Exact division of Gaussian integers given as ``(re, im)`` pairs."""
    a, b = x
    c, d = y
    n = c * c + d * d
    re, im = a * c + b * d, b * c - a * d
    if re % n or im % n:
        raise ArithmeticError("inexact Bareiss division")  # cannot happen for exact input
    return re // n, im // n


def _bareiss_rank(m: list[list[tuple[int, int]]]) -> int:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    prev = (1, 0)
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != (0, 0)), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pa, pb = m[r][c]
        prow = m[r]
        for i in range(r + 1, rows):
            row = m[i]
            qa, qb = row[c]
            for j in range(c + 1, cols):
                xa, xb = row[j]
                ya, yb = prow[j]
                # pivot*x - q*y, then exact division by the previous pivot
                re = pa * xa - pb * xb - (qa * ya - qb * yb)
                im = pa * xb + pb * xa - (qa * yb + qb * ya)
                row[j] = (re, im) if prev == (1, 0) else _gi_div((re, im), prev)
            row[c] = (0, 0)
        prev = (pa, pb)
        r += 1
        if r == rows:
            break
    return r


def _field_rank(m: list[list]) -> int:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        prow = m[r]
        for i in range(r + 1, rows):
            row = m[i]
            if not row[c]:
                continue
            f = row[c] * inv
            for j in range(c + 1, cols):
                if prow[j]:
                    row[j] = row[j] - f * prow[j]
            row[c] = 0
        r += 1
        if r == rows:
            break
    return r


def rank(a: Matrix) -> int:
    """Exact rank.

    Rational and Gaussian-rational input is scaled row by row to Gaussian
    integers and reduced by fraction-free (Bareiss) elimination.  Radical
    input is reduced by ordinary elimination in the multiquadratic field the
    entries generate.
    """
    if a.ring == "radical":
        return _field_rank([list(row) for row in a._m])
    g = a.as_ring("gauss")
    m = []
    for row in g._m:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        m.append([(x._a * (lcm // x._d), x._b * (lcm // x._d)) for x in row])
    return _bareiss_rank(m)


def even_odd_split(m: Matrix) -> tuple[Matrix, Matrix]:
    """Split a checkerboard matrix into its odd-index and even-index blocks.

    Indices are 1-based as in the usual matrix notation: the first block
    collects rows/columns 1, 3, 5, ... and has size ``ceil(n/2)``.
    """
    if not m.is_square():
        raise DimensionMismatch("even_odd_split needs a square matrix")
    n = m.rows
    for i in range(n):
        for j in range(n):
            if (i + j) % 2 and m[i, j]:
                raise PatternViolation(f"nonzero entry at ({i + 1},{j + 1}) with odd index sum")
    odd = list(range(0, n, 2))
    even = list(range(1, n, 2))
    return m.submatrix(odd, odd), m.submatrix(even, even)
