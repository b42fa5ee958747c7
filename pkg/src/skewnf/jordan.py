"""Eigenvalues in Q(i) and elementary divisors from rank sequences."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd, isqrt

from .arith import GaussRat, coerce
from .errors import UnsupportedEigenvalues
from .linalg import Matrix, Poly, charpoly, rank

__all__ = [
    "ElementaryDivisor",
    "gaussian_roots",
    "rank_sequence",
    "jordan_at",
    "elementary_divisors",
    "validate_skew_pairing",
]


@dataclass(frozen=True)
class ElementaryDivisor:
    """``count`` copies of the divisor ``(t - eigenvalue)**size``."""

    eigenvalue: GaussRat
    size: int
    count: int = 1

    def __post_init__(self):
        object.__setattr__(self, "eigenvalue", GaussRat(self.eigenvalue))
        if self.size < 1 or self.count < 1:
            raise ValueError("size and count must be positive")

    def __lt__(self, other):
        return (self.eigenvalue.sort_key(), self.size, self.count) < (
            other.eigenvalue.sort_key(), other.size, other.count)


def _as_gauss_poly(f: Poly) -> Poly:
    try:
        return f.map(lambda c: coerce(c, "gauss"))
    except ValueError as exc:
        raise UnsupportedEigenvalues(f"coefficients outside Q(i): {f}") from exc


def _deflate(f: Poly, root: GaussRat) -> tuple[Poly, bool]:
    """Synthetic division by ``t - root``; returns (quotient, exact)."""
    c = f.coeffs
    n = len(c) - 1
    q = [GaussRat(0)] * n
    acc = GaussRat(0)
    for k in range(n, 0, -1):
        acc = acc * root + c[k]
        q[k - 1] = acc
    return Poly(q), (acc * root + c[0]) == 0


def _gaussian_integer_coeffs(f: Poly) -> list[tuple[int, int]]:
    lcm = 1
    for c in f.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    out = [(c._a * (lcm // c._d), c._b * (lcm // c._d)) for c in f.coeffs]
    g = 0
    for a, b in out:
        g = gcd(g, gcd(a, b))
    return [(a // g, b // g) for a, b in out]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _gaussian_divisors(z: tuple[int, int]) -> list[tuple[int, int]]:
    """Divisors of a nonzero Gaussian integer, one per associate class."""
    a, b = z
    norm = a * a + b * b
    out = []
    for d in _divisors(norm):
        for x in range(1, isqrt(d) + 1):
            y2 = d - x * x
            y = isqrt(y2)
            if y * y != y2:
                continue
            # x > 0, y >= 0 picks one associate out of four
            re, im = a * x + b * y, b * x - a * y
            if re % d == 0 and im % d == 0:
                out.append((x, y))
    return out


_UNITS = (GaussRat(1), GaussRat(-1), GaussRat(0, 1), GaussRat(0, -1))


def gaussian_roots(f: Poly) -> tuple[list[tuple[GaussRat, int]], Poly]:
    """Roots of a polynomial in Q(i), with multiplicities.

    Returns ``(roots, remainder)`` with ``f == remainder * prod (t - r)**m``
    (up to the leading coefficient of ``f``, which stays in ``remainder``).
    Candidates ``u*p/q`` come from the Gaussian-integer divisors ``p`` of the
    constant term and ``q`` of the leading term of the primitive integral
    rescaling of the squarefree part, pruned by the Cauchy root bound.
    """
    f = _as_gauss_poly(f)
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    roots: list[tuple[GaussRat, int]] = []
    zeros = 0
    while zeros < len(f.coeffs) and f.coeffs[zeros] == 0:
        zeros += 1
    if zeros:
        roots.append((GaussRat(0), zeros))
        f = Poly(f.coeffs[zeros:])
    if f.degree >= 1:
        g = _as_gauss_poly(f.squarefree_part())
        ints = _gaussian_integer_coeffs(g)
        lead = g.lc()
        bound = 1 + max((abs(c.re) + abs(c.im) for c in (x / lead for x in g.coeffs[:-1])), default=0)
        found = []
        for p in _gaussian_divisors(ints[0]):
            for q in _gaussian_divisors(ints[-1]):
                base = GaussRat(p[0], p[1]) / GaussRat(q[0], q[1])
                if base.norm() > bound * bound:
                    continue
                for u in _UNITS:
                    cand = u * base
                    if cand not in found and g(cand) == 0:
                        found.append(cand)
        for r in sorted(found, key=GaussRat.sort_key):
            mult = 0
            while f.degree >= 1:
                q, exact = _deflate(f, r)
                if not exact:
                    break
                f = q
                mult += 1
            roots.append((r, mult))
    roots.sort(key=lambda rm: rm[0].sort_key())
    return roots, f


def rank_sequence(a: Matrix, lam, stop: int | None = None) -> list[int]:
    """``[rank((a - lam I)^k) for k = 0, 1, ...]`` until the rank stabilises."""
    n = a.rows
    b = a - Matrix.identity(n, a.ring).scale(lam)
    seq = [n]
    power = Matrix.identity(n, b.ring)
    while True:
        power = power @ b
        r = rank(power)
        if r == seq[-1]:
            break
        seq.append(r)
        if stop is not None and len(seq) > stop:
            break
    return seq


def _partition_from_ranks(seq: list[int]) -> list[int]:
    # blocks of size >= k: seq[k-1] - seq[k]
    ge = [seq[k - 1] - seq[k] for k in range(1, len(seq))] + [0]
    parts = []
    for k in range(len(ge) - 1, 0, -1):
        parts.extend([k] * (ge[k - 1] - ge[k]))
    return parts


def jordan_at(a: Matrix, lam) -> list[int]:
    """Jordan block sizes of ``a`` at ``lam``, in descending order."""
    return _partition_from_ranks(rank_sequence(a, lam))


def elementary_divisors(a: Matrix) -> list[ElementaryDivisor]:
    """All elementary divisors of ``a``; every eigenvalue must lie in Q(i)."""
    roots, rem = gaussian_roots(charpoly(a))
    if rem.degree > 0:
        raise UnsupportedEigenvalues(f"factor without roots in Q(i): {rem}")
    out = []
    for lam, _ in roots:
        for size, count in sorted(Counter(jordan_at(a, lam)).items()):
            out.append(ElementaryDivisor(lam, size, count))
    return out


def _size_table(divisors) -> dict[GaussRat, Counter]:
    table: dict[GaussRat, Counter] = {}
    for d in divisors:
        table.setdefault(d.eigenvalue, Counter())[d.size] += d.count
    return table


def validate_skew_pairing(divisors) -> bool:
    """Sizes at ``lam`` and ``-lam`` agree for ``lam != 0``; even nilpotent sizes come in pairs."""
    table = _size_table(divisors)
    for lam, sizes in table.items():
        if lam == 0:
            if any(size % 2 == 0 and count % 2 for size, count in sizes.items()):
                return False
        elif table.get(-lam, Counter()) != sizes:
            return False
    return True
