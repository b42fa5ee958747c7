"""Normalized nilpotent bidiagonal matrices and the variety V_s of their parameters.

A point ``p = (p_1, ..., p_{2s})`` parametrizes the ``(2s+1)``-square matrix
``B(p)`` with ones below the diagonal and ``-p_k`` above it.  ``V_s`` is the
set of points with ``B(p)`` nilpotent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .arith import GaussRat, Radical, coerce, join_rings, rat_sqrt_lift, ring_of
from .errors import (
    DenominatorVanishes,
    NonRationalCoordinate,
    NotAMember,
    NotNilpotent,
    SegmentNotInVStar,
)
from .linalg import Matrix, Poly, is_nilpotent, tridiagonal_charpoly
from .blocks import bidiagonal_skew

__all__ = [
    "PointP",
    "Signature",
    "map_A1",
    "map_A2",
    "map_B",
    "check_prop51",
    "in_V",
    "signature",
    "is_admissible",
    "enumerate_Lambda",
    "fiber_factor",
    "fiber_assemble",
    "segment_sizes",
    "cf_invert",
    "nilpotent_jacobi",
    "random_vstar_point",
    "random_member",
    "skew_phi",
    "skew_lift",
    "all_lifts",
    "even_B",
    "even_decompose",
    "even_assemble",
]


@dataclass(frozen=True)
class PointP:
    """Coordinates ``p_1..p_{n-1}`` of a point, ``n = 2s + 1``."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) % 2:
            raise ValueError(f"a point of V_s has an even number of coordinates, got {len(coords)}")
        ring = join_rings("gauss", *(ring_of(c) for c in coords))
        object.__setattr__(self, "coords", tuple(coerce(c, ring) for c in coords))

    @property
    def s(self) -> int:
        return len(self.coords) // 2

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]


def _point(p) -> PointP:
    return p if isinstance(p, PointP) else PointP(tuple(p))


Signature = tuple  # strictly increasing 1-based indices of the zero coordinates


def map_A1(p) -> Matrix:
    """Tridiagonal of size ``s+1``: ones below, diagonal ``-p1, -p2-p3, ..., -p_{2s}``,
    superdiagonal ``p1 p2, p3 p4, ..., p_{2s-1} p_{2s}``."""
    p = _point(p).coords
    s = len(p) // 2
    if s == 0:
        return Matrix([[0]], "gauss")
    diag = [-p[0]] + [-p[2 * k - 1] - p[2 * k] for k in range(1, s)] + [-p[2 * s - 1]]
    sup = [p[2 * k] * p[2 * k + 1] for k in range(s)]
    return Matrix.tridiagonal([1] * s, diag, sup)


def map_A2(p) -> Matrix:
    """Tridiagonal of size ``s``: ones below, diagonal ``-p1-p2, -p3-p4, ...``,
    superdiagonal ``p2 p3, p4 p5, ..., p_{2s-2} p_{2s-1}``."""
    p = _point(p).coords
    s = len(p) // 2
    if s == 0:
        return Matrix([], "gauss")
    diag = [-p[2 * k] - p[2 * k + 1] for k in range(s)]
    sup = [p[2 * k + 1] * p[2 * k + 2] for k in range(s - 1)]
    return Matrix.tridiagonal([1] * (s - 1), diag, sup)


def map_B(p) -> Matrix:
    """Size ``n``: zero diagonal, ones below, ``-p_1..-p_{n-1}`` above."""
    p = list(p.coords if isinstance(p, PointP) else p)
    n = len(p) + 1
    return Matrix.tridiagonal([1] * (n - 1), [0] * n, [-GaussRat(x) for x in p], "gauss")


def _charpoly(m: Matrix) -> Poly:
    """Charpoly of a tridiagonal matrix by the leading-minor recurrence."""
    n = m.rows
    return tridiagonal_charpoly(
        [m[k, k] for k in range(n)], [m[k, k + 1] * m[k + 1, k] for k in range(n - 1)]
    )


def check_prop51(p) -> bool:
    """``chi_A1(t) == t chi_A2(t)`` and ``chi_B(t) == t chi_A2(t^2)``."""
    p = _point(p)
    t = Poly.t()
    c2 = _charpoly(map_A2(p))
    return _charpoly(map_A1(p)) == t * c2 and _charpoly(map_B(p)) == t * c2.compose(t * t)


def in_V(p) -> bool:
    """Membership in V_s, tested as ``chi_A2(t) == t^s``."""
    return all(c == 0 for c in _charpoly(map_A2(_point(p))).coeffs[:-1])


def is_admissible(lam, s: int) -> bool:
    """Whether ``lam`` lies in Lambda_s: increasing indices in ``1..2s``, even
    length, and ``lam_i`` congruent to ``i`` mod 2."""
    lam = tuple(lam)
    return (
        len(lam) % 2 == 0
        and all(1 <= x <= 2 * s for x in lam)
        and all(a < b for a, b in zip(lam, lam[1:]))
        and all(x % 2 == i % 2 for i, x in enumerate(lam, start=1))
    )


def signature(p) -> Signature:
    """1-based indices of the zero coordinates of a member of V_s."""
    p = _point(p)
    if not in_V(p):
        raise NotAMember("point is not in V_s")
    return tuple(k for k, x in enumerate(p.coords, start=1) if x == 0)


def enumerate_Lambda(s: int) -> list[Signature]:
    """All of Lambda_s, ordered by length and then lexicographically."""
    out = []
    for k in range(0, 2 * s + 1, 2):
        for lam in combinations(range(1, 2 * s + 1), k):
            if is_admissible(lam, s):
                out.append(lam)
    return out


def segment_sizes(lam, n: int) -> list[int]:
    """``s_i = (lam_i - lam_{i-1} - 1)/2`` with ``lam_0 = 0`` and ``lam_{k+1} = n``."""
    bounds = (0, *lam, n)
    return [(b - a - 1) // 2 for a, b in zip(bounds, bounds[1:])]


def _in_vstar(seg: PointP) -> bool:
    return all(x != 0 for x in seg.coords) and in_V(seg)


def fiber_factor(p) -> list[PointP]:
    """Split a member at its zero coordinates into points of V*_{s_i}."""
    p = _point(p)
    lam = signature(p)
    bounds = (0, *lam, p.n)
    segs = [PointP(p.coords[a:b - 1]) for a, b in zip(bounds, bounds[1:])]
    for seg in segs:
        if not _in_vstar(seg):
            raise SegmentNotInVStar(f"segment {seg.coords} is not in V*")
    return segs


def fiber_assemble(lam, segments) -> PointP:
    """Inverse of :func:`fiber_factor`: interleave zeros at the indices ``lam``."""
    lam = tuple(lam)
    segments = [_point(seg) for seg in segments]
    if len(segments) != len(lam) + 1:
        raise ValueError(f"need {len(lam) + 1} segments for {lam}")
    coords: list = []
    for k, seg in enumerate(segments):
        if not _in_vstar(seg):
            raise SegmentNotInVStar(f"segment {seg.coords} is not in V*")
        coords.extend(seg.coords)
        if k < len(lam):
            if len(coords) + 1 != lam[k]:
                raise ValueError(f"segment lengths do not match signature {lam}")
            coords.append(GaussRat(0))
    return PointP(tuple(coords))


def cf_invert(t: Matrix) -> PointP:
    """The point ``p`` with ``A1(p) == t``, by the continued-fraction recurrence.

    ``t`` is tridiagonal of size ``s+1`` with ones below the diagonal, diagonal
    ``-a_1..-a_{s+1}`` and superdiagonal ``b_1..b_s``.  Then ``p_1 = a_1``,
    ``p_{2k} = b_k / p_{2k-1}`` and ``p_{2k+1} = a_{k+1} - p_{2k}``.
    """
    m = t.rows
    if not t.is_square() or m < 1:
        raise ValueError("cf_invert needs a nonempty square matrix")
    for i in range(m):
        for j in range(m):
            if abs(i - j) > 1 and t[i, j] != 0:
                raise ValueError("matrix is not tridiagonal")
            if i == j + 1 and t[i, j] != 1:
                raise ValueError("subdiagonal must be all ones")
    s = m - 1
    a = [-coerce(t[k, k], "gauss") for k in range(m)]
    b = [coerce(t[k, k + 1], "gauss") for k in range(s)]
    p = [a[0]] if s else []
    for k in range(1, s + 1):
        if p[-1] == 0:
            raise DenominatorVanishes(f"p_{2 * k - 1} = 0 in the continued fraction")
        p.append(b[k - 1] / p[-1])
        if k < s:
            p.append(a[k] - p[-1])
    point = PointP(tuple(p))
    if map_A1(point) != t:
        # only the last diagonal entry can disagree; nilpotent input always matches
        raise ValueError("matrix is outside the image of A1")
    return point


def nilpotent_jacobi(phi: Poly) -> Matrix:
    """The nilpotent tridiagonal ``T`` (ones below the diagonal) whose leading
    ``s x s`` minor has characteristic polynomial ``phi`` (monic, degree ``s``).

    Runs the Euclidean algorithm on ``(t^{s+1}, phi)``, reading off the
    three-term recurrence ``phi_k = (t + a_k) phi_{k-1} - b_{k-1} phi_{k-2}``.
    Raises ``ValueError`` when a remainder drops degree (some ``b_k = 0``).
    """
    phi = phi.monic()
    s = phi.degree
    a, b = [None] * (s + 1), [None] * s
    cur, prev = Poly.monomial(s + 1, GaussRat(1)), phi
    for k in range(s + 1, 1, -1):
        q, r = cur.divmod(prev)
        a[k - 1] = q.coeff(0)
        if r.is_zero() or r.degree != k - 2:
            raise ValueError("Euclidean remainder dropped degree")
        b[k - 2] = -r.lc()
        cur, prev = prev, r.monic()
    a[0] = cur.coeff(0)
    return Matrix.tridiagonal([1] * s, [-x for x in a], b, "gauss")


def random_vstar_point(s: int, rng: random.Random, bound: int = 5) -> PointP:
    """A seeded random rational point of V*_s (all coordinates nonzero)."""
    if s == 0:
        return PointP(())
    while True:
        phi = Poly([Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(s)] + [1])
        try:
            p = cf_invert(nilpotent_jacobi(phi))
        except (ValueError, ZeroDivisionError):
            continue
        if all(x != 0 for x in p.coords):
            return p


def random_member(s: int, rng: random.Random, lam=None) -> PointP:
    """A seeded random rational point of V_s with signature ``lam`` (random if omitted)."""
    if lam is None:
        lam = rng.choice(enumerate_Lambda(s))
    segs = [random_vstar_point(si, rng) for si in segment_sizes(lam, 2 * s + 1)]
    return fiber_assemble(lam, segs)


def skew_phi(a) -> PointP:
    """``(a_1, ..., a_{n-1}) -> (-a_1^2, ..., -a_{n-1}^2)`` for a nilpotent skew bidiagonal."""
    a = list(a)
    if not is_nilpotent(bidiagonal_skew(a)):
        raise NotNilpotent("skew bidiagonal matrix is not nilpotent")
    return PointP(tuple(coerce(-(x * x), "gauss") for x in a))


def skew_lift(p, signs=None) -> list[Radical]:
    """Superdiagonal ``a_k = sqrt(-p_k)`` (branch ``signs[k]``) of a skew
    bidiagonal nilpotent matrix over a rational member ``p``."""
    p = _point(p)
    if not in_V(p):
        raise NotAMember("point is not in V_s")
    signs = [1] * len(p) if signs is None else list(signs)
    out = []
    for x, sg in zip(p.coords, signs):
        if not x.is_real():
            raise NonRationalCoordinate(f"coordinate {x} is not rational")
        out.append(rat_sqrt_lift(-x.re, sg))
    return out


def all_lifts(p) -> list[list[Radical]]:
    """Every distinct lift; there are ``2**(number of nonzero coordinates)``."""
    p = _point(p)
    nz = [k for k, x in enumerate(p.coords) if x != 0]
    out = []
    for choice in product((1, -1), repeat=len(nz)):
        signs = [1] * len(p)
        for k, sg in zip(nz, choice):
            signs[k] = sg
        out.append(skew_lift(p, signs))
    return out


def even_B(p) -> Matrix:
    """Size ``2s`` analogue of :func:`map_B` for ``2s - 1`` coordinates."""
    p = list(p)
    if len(p) % 2 == 0:
        raise ValueError("an even-size point has an odd number of coordinates")
    n = len(p) + 1
    return Matrix.tridiagonal([1] * (n - 1), [0] * n, [-GaussRat(x) for x in p], "gauss")


def even_decompose(p) -> list[int]:
    """Components ``j`` (1-based) with ``p_{2j-1} == 0`` containing the even-size point ``p``."""
    p = [GaussRat(x) for x in p]
    if not is_nilpotent(even_B(p)):
        raise NotNilpotent("even-size matrix is not nilpotent")
    return [j for j in range(1, (len(p) + 1) // 2 + 1) if p[2 * j - 2] == 0]


def even_assemble(j: int, p1, p2) -> tuple:
    """``p1 + (0,) + p2`` for ``p1`` in V_{j-1} and ``p2`` in V_{s-j}."""
    p1, p2 = _point(p1), _point(p2)
    if len(p1) != 2 * (j - 1):
        raise ValueError(f"first factor must lie in V_{j - 1}")
    if not (in_V(p1) and in_V(p2)):
        raise NotNilpotent("factors must be nilpotent")
    out = tuple(p1.coords) + (GaussRat(0),) + tuple(p2.coords)
    if not is_nilpotent(even_B(out)):
        raise NotNilpotent("assembled matrix is not nilpotent")
    return out
