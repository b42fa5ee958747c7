"""A small exact solver for zero-dimensional polynomial systems over Q(i).

Gröbner bases come from Buchberger's algorithm with the Gebauer-Möller pair
criteria and sugar selection.  Points are counted by passing to the radical
(adding squarefree univariate minimal polynomials) and finding a linear form
whose minimal polynomial has degree equal to the dimension of the quotient,
i.e. shape position.  Everything is verified by exact arithmetic modulo the
eliminant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial

from .arith import GaussRat
from .blocks import bidiagonal_skew
from .errors import NotShapePosition, NotZeroDimensional, ResourceBudgetExceeded
from .jordan import gaussian_roots, jordan_at
from .linalg import Poly, tridiagonal_charpoly

__all__ = [
    "MultiPoly",
    "GroebnerBasis",
    "ShapeBasis",
    "CensusResult",
    "buchberger",
    "eliminate",
    "squarefree_part",
    "shape_basis",
    "count_points",
    "solve_points",
    "Residue",
    "odd_special_system",
    "even_special_system",
    "odd_special_census",
    "even_special_census",
    "bezout_bound",
    "impossibility_report",
    "bidiagonal_impossibility",
    "s3_components",
    "MAX_CENSUS_S",
]

MAX_CENSUS_S = 4


def _field(x):
    """Canonical coefficient: Fraction when rational, GaussRat otherwise."""
    if isinstance(x, GaussRat):
        return x.re if x.is_real() else x
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"unsupported coefficient {x!r}")


# ---------------------------------------------------------------- MultiPoly


class MultiPoly:
    """Sparse polynomial: a map from exponent vectors to nonzero coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        n = len(self.variables)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            c = _field(c)
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables, terms):
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        return obj

    @classmethod
    def gens(cls, variables) -> list["MultiPoly"]:
        variables = tuple(variables)
        n = len(variables)
        return [cls._raw(variables, {tuple(int(k == j) for k in range(n)): Fraction(1)}) for j in range(n)]

    @classmethod
    def const(cls, variables, c) -> "MultiPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError("polynomials over different variables")
            return other
        return MultiPoly.const(self.variables, other)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return MultiPoly._raw(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                else:
                    t.pop(e, None)
        return MultiPoly._raw(self.variables, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.const(self.variables, 1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self.terms == MultiPoly.const(self.variables, other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def support(self) -> set[int]:
        """Indices of the variables that occur."""
        return {k for e in self.terms for k, x in enumerate(e) if x}

    def evaluate(self, values):
        """Substitute ring elements (numbers, residues, ...) for the variables."""
        acc = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                for _ in range(k):
                    term = term * v
            acc = term + acc
        return acc

    def to_poly(self, var: int) -> Poly:
        """View as a univariate :class:`Poly` in variable ``var``."""
        if self.support() - {var}:
            raise ValueError("polynomial is not univariate in that variable")
        deg = max((e[var] for e in self.terms), default=-1)
        coeffs = [Fraction(0)] * (deg + 1)
        for e, c in self.terms.items():
            coeffs[e[var]] = c
        return Poly(coeffs)

    @classmethod
    def from_poly(cls, variables, var: int, f: Poly) -> "MultiPoly":
        n = len(variables)
        return cls(variables, {tuple(k if j == var else 0 for j in range(n)): c for k, c in enumerate(f.coeffs)})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            c = self.terms[e]
            parts.append(f"({c})" + (f"*{mono}" if mono else "") if c != 1 or not mono else mono)
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------- orders


def _lex_key(e):
    return e


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


_ORDERS = {"lex": _lex_key, "grevlex": _grevlex_key}


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _monic(f: dict, key) -> dict:
    lm = max(f, key=key)
    c = f[lm]
    if c == 1:
        return f
    inv = 1 / c
    return {e: _field(v * inv) for e, v in f.items()}


def _reduce(f: dict, basis, key) -> dict:
    """Full reduction of ``f`` by ``basis``, a list of ``(lead monomial, monic dict)``."""
    f = dict(f)
    rem = {}
    while f:
        m = max(f, key=key)
        c = f[m]
        for lm, g in basis:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                for e, gc in g.items():
                    ee = tuple(x + y for x, y in zip(e, q))
                    v = f.get(ee, 0) - c * gc
                    if v:
                        f[ee] = v
                    else:
                        f.pop(ee, None)
                break
        else:
            rem[m] = c
            del f[m]
    return rem


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis; ``polys`` sorted by decreasing leading monomial."""

    variables: tuple
    order: str
    polys: tuple

    def leading_monomials(self) -> list[tuple]:
        key = _ORDERS[self.order]
        return [max(p.terms, key=key) for p in self.polys]

    def is_unit(self) -> bool:
        return any(p == 1 for p in self.polys)

    def reduce(self, f: MultiPoly) -> MultiPoly:
        key = _ORDERS[self.order]
        basis = [(max(p.terms, key=key), p.terms) for p in self.polys]
        return MultiPoly._raw(self.variables, _reduce(f.terms, basis, key))

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def buchberger(gens, order: str = "lex", max_pairs: int = 50000, max_degree: int = 200) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Raises :class:`ResourceBudgetExceeded` if more than ``max_pairs`` S-pairs
    are reduced or an S-pair's lcm exceeds total degree ``max_degree``.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    variables = gens[0].variables
    key = _ORDERS[order]
    polys: list[dict] = []
    lms: list[tuple] = []
    sugar: list[int] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []

    def update(h: int):
        nonlocal active, pairs
        lh = lms[h]
        cand = list(active)
        keep = []
        for idx, g in enumerate(cand):
            lg = _lcm(lh, lms[g])
            if _coprime(lh, lms[g]):
                keep.append(g)
                continue
            others = cand[idx + 1:] + keep
            if not any(_divides(_lcm(lh, lms[o]), lg) for o in others):
                keep.append(g)
        new_pairs = [(g, h) for g in keep if not _coprime(lh, lms[g])]
        pairs = [
            (i, j) for i, j in pairs
            if not (
                _divides(lh, _lcm(lms[i], lms[j]))
                and _lcm(lms[i], lh) != _lcm(lms[i], lms[j])
                and _lcm(lh, lms[j]) != _lcm(lms[i], lms[j])
            )
        ] + new_pairs
        active = [g for g in active if not _divides(lh, lms[g])] + [h]

    def add(f: dict, sg: int):
        f = _monic(f, key)
        polys.append(f)
        lms.append(max(f, key=key))
        sugar.append(sg)
        update(len(polys) - 1)

    def basis():
        return [(lms[g], polys[g]) for g in active]

    for g in sorted(gens, key=lambda p: key(max(p.terms, key=key))):
        r = _reduce(g.terms, basis(), key) if active else dict(g.terms)
        if r:
            add(r, max(sum(e) for e in r))

    done = 0
    while pairs:
        def pair_key(ij):
            i, j = ij
            l = _lcm(lms[i], lms[j])
            sg = max(sugar[i] + sum(l) - sum(lms[i]), sugar[j] + sum(l) - sum(lms[j]))
            return (sg, key(l))

        best = min(pairs, key=pair_key)
        pairs.remove(best)
        i, j = best
        l = _lcm(lms[i], lms[j])
        if sum(l) > max_degree:
            raise ResourceBudgetExceeded(f"S-pair degree {sum(l)} exceeds budget {max_degree}")
        done += 1
        if done > max_pairs:
            raise ResourceBudgetExceeded(f"more than {max_pairs} S-pairs")
        sp: dict = {}
        for idx, sign in ((i, 1), (j, -1)):
            q = tuple(x - y for x, y in zip(l, lms[idx]))
            for e, c in polys[idx].items():
                ee = tuple(x + y for x, y in zip(e, q))
                v = sp.get(ee, 0) + sign * c
                if v:
                    sp[ee] = v
                else:
                    sp.pop(ee, None)
        r = _reduce(sp, basis(), key)
        if r:
            if all(x == 0 for x in max(r, key=key)):
                return GroebnerBasis(variables, order, (MultiPoly.const(variables, 1),))
            add(r, pair_key(best)[0])

    # minimal, then interreduced
    final = sorted(active, key=lambda g: key(lms[g]))
    minimal = [g for g in final if not any(h != g and _divides(lms[h], lms[g]) for h in final)]
    reduced = []
    for g in minimal:
        others = [(lms[h], polys[h]) for h in minimal if h != g]
        tail = _reduce({e: c for e, c in polys[g].items() if e != lms[g]}, others, key)
        tail[lms[g]] = Fraction(1)
        reduced.append(MultiPoly(variables, tail))
    reduced.sort(key=lambda p: key(max(p.terms, key=key)), reverse=True)
    return GroebnerBasis(variables, order, tuple(reduced))


def eliminate(gb: GroebnerBasis, keep: int | None = None) -> Poly:
    """The eliminant: the basis element involving only variable ``keep``
    (default: the last), from a lex basis."""
    if gb.order != "lex":
        raise ValueError("elimination needs a lex basis")
    keep = len(gb.variables) - 1 if keep is None else keep
    if keep != len(gb.variables) - 1:
        raise ValueError("a lex basis only eliminates down to the last variable")
    for p in gb.polys:
        if p.support() <= {keep}:
            return p.to_poly(keep)
    raise NotZeroDimensional("no univariate polynomial in the last variable")


def squarefree_part(f: Poly) -> Poly:
    return f.squarefree_part()


# ---------------------------------------------------------------- quotient ring


def _standard_monomials(gb: GroebnerBasis) -> list[tuple]:
    lms = gb.leading_monomials()
    n = len(gb.variables)
    bounds = []
    for k in range(n):
        pure = [m[k] for m in lms if all(x == 0 for j, x in enumerate(m) if j != k)]
        if not pure:
            raise NotZeroDimensional(f"no pure power of {gb.variables[k]} among leading monomials")
        bounds.append(min(pure))
    return [e for e in product(*(range(b) for b in bounds)) if not any(_divides(m, e) for m in lms)]


class _Echelon:
    """Incremental row echelon form that tracks how each row was combined."""

    def __init__(self):
        self.rows: list[tuple[int, dict, dict]] = []  # (pivot, vector, combination)

    def reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        vec, combo = dict(vec), dict(combo)
        for piv, row, rc in self.rows:
            c = vec.get(piv)
            if not c:
                continue
            for k, x in row.items():
                v = vec.get(k, 0) - c * x
                if v:
                    vec[k] = v
                else:
                    vec.pop(k, None)
            for k, x in rc.items():
                v = combo.get(k, 0) - c * x
                if v:
                    combo[k] = v
                else:
                    combo.pop(k, None)
        return vec, combo

    def insert(self, vec: dict, combo: dict) -> None:
        piv = min(vec)
        inv = 1 / vec[piv]
        vec = {k: _field(x * inv) for k, x in vec.items()}
        combo = {k: _field(x * inv) for k, x in combo.items()}
        # keep existing rows reduced at the new pivot
        fixed = []
        for p, row, rc in self.rows:
            c = row.get(piv)
            if c:
                row = dict(row)
                rc = dict(rc)
                for k, x in vec.items():
                    v = row.get(k, 0) - c * x
                    if v:
                        row[k] = v
                    else:
                        row.pop(k, None)
                for k, x in combo.items():
                    v = rc.get(k, 0) - c * x
                    if v:
                        rc[k] = v
                    else:
                        rc.pop(k, None)
            fixed.append((p, row, rc))
        self.rows = fixed + [(piv, vec, combo)]


def _as_vector(f: MultiPoly, index: dict) -> dict:
    return {index[e]: c for e, c in f.terms.items()}


def _minimal_polynomial(gb: GroebnerBasis, form: MultiPoly, index: dict):
    """Minimal polynomial of ``form`` in the quotient, plus the echelon of its powers."""
    ech = _Echelon()
    power = gb.reduce(MultiPoly.const(gb.variables, 1))
    k = 0
    while True:
        vec, combo = ech.reduce(_as_vector(power, index), {k: Fraction(1)})
        if not vec:
            coeffs = [combo.get(j, 0) for j in range(k + 1)]
            return Poly(coeffs).monic(), ech
        ech.insert(vec, combo)
        k += 1
        power = gb.reduce(power * form)


@dataclass(frozen=True)
class ShapeBasis:
    """Radical of a zero-dimensional ideal in shape position.

    ``form`` holds coefficients ``c`` of the separating linear form
    ``z = sum c_k x_k``; the points are ``x_k = coords[k](z)`` for the roots
    ``z`` of the squarefree eliminant ``h``.
    """

    variables: tuple
    form: tuple
    h: Poly
    coords: tuple

    @property
    def count(self) -> int:
        return self.h.degree


def _radical(gb: GroebnerBasis, order: str) -> GroebnerBasis:
    mons = _standard_monomials(gb)
    index = {e: k for k, e in enumerate(mons)}
    xs = MultiPoly.gens(gb.variables)
    extra = []
    for k, x in enumerate(xs):
        mu, _ = _minimal_polynomial(gb, x, index)
        sf = mu.squarefree_part()
        if sf.degree < mu.degree:
            extra.append(MultiPoly.from_poly(gb.variables, k, sf))
    if not extra:
        return gb
    return buchberger(list(gb.polys) + extra, order)


def shape_basis(gens, seed: int = 0, retries: int = 3, order: str = "grevlex") -> ShapeBasis:
    """Shape-position description of the points of ``V(gens)``.

    The last variable is tried first as separating form; on failure a seeded
    random linear change ``x_n + sum c_k x_k`` is tried, up to ``retries``
    times, before :class:`NotShapePosition` is raised.
    """
    gb = buchberger(gens, order)
    variables = gb.variables
    if gb.is_unit():
        return ShapeBasis(variables, (0,) * (len(variables) - 1) + (1,), Poly((1,)), ())
    gb = _radical(gb, order)
    mons = _standard_monomials(gb)
    index = {e: k for k, e in enumerate(mons)}
    dim = len(mons)
    xs = MultiPoly.gens(variables)
    rng = random.Random(seed)
    n = len(variables)
    for attempt in range(retries + 1):
        if attempt == 0:
            c = [0] * (n - 1) + [1]
        else:
            c = [rng.randint(-9, 9) for _ in range(n - 1)] + [1]
        form = sum((ck * x for ck, x in zip(c, xs)), MultiPoly.const(variables, 0))
        mu, ech = _minimal_polynomial(gb, form, index)
        if mu.degree != dim:
            continue
        coords = []
        for x in xs:
            vec, combo = ech.reduce(_as_vector(gb.reduce(x), index), {})
            if vec:
                raise ArithmeticError("coordinate outside the span of powers of the form")
            coords.append(Poly([-combo.get(j, 0) for j in range(dim)]))
        return ShapeBasis(variables, tuple(c), mu, tuple(coords))
    raise NotShapePosition(f"no separating linear form found in {retries} random changes")


def count_points(gens, seed: int = 0) -> int:
    """Number of distinct solutions over the algebraic closure."""
    return shape_basis(gens, seed).count


class Residue:
    """A class in ``K[z]/(h)``, supporting ring arithmetic with scalars."""

    __slots__ = ("f", "h")

    def __init__(self, f, h: Poly):
        self.h = h
        self.f = (f if isinstance(f, Poly) else Poly((_field(f),))) % h

    def _lift(self, other) -> Poly:
        return other.f if isinstance(other, Residue) else Poly((other,))

    def __add__(self, other):
        return Residue(self.f + self._lift(other), self.h)

    __radd__ = __add__

    def __neg__(self):
        return Residue(-self.f, self.h)

    def __sub__(self, other):
        return Residue(self.f - self._lift(other), self.h)

    def __rsub__(self, other):
        return Residue(self._lift(other) - self.f, self.h)

    def __mul__(self, other):
        return Residue(self.f * self._lift(other), self.h)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (self - other).f.is_zero()

    def __hash__(self):
        return hash(self.f)

    def is_unit(self) -> bool:
        """Whether the class is nonzero at every root of ``h``."""
        return self.f.gcd(self.h).degree == 0


def solve_points(gens, seed: int = 0) -> tuple[list[tuple], int]:
    """Q(i)-rational solutions and the total number of solutions.

    The returned list is complete exactly when its length equals the count.
    """
    sb = shape_basis(gens, seed)
    if sb.count == 0:
        return [], 0
    roots, _ = gaussian_roots(sb.h)
    points = sorted(
        (tuple(GaussRat(g(r)) for g in sb.coords) for r, _ in roots),
        key=lambda pt: [x.sort_key() for x in pt],
    )
    return points, sb.count


# ---------------------------------------------------------------- censuses


def bezout_bound(s: int) -> int:
    return 2 ** s * factorial(s)


def _check_census_size(s: int) -> None:
    if s < 1:
        raise ValueError("census needs s >= 1")
    if s > MAX_CENSUS_S:
        raise ResourceBudgetExceeded(f"census is limited to s <= {MAX_CENSUS_S}, got {s}")


def odd_special_system(s: int) -> list[MultiPoly]:
    """Unknowns ``q_k = p_{2k-1}`` with ``p_{2k} = -1``; equations ``chi_A2(t) = t^s``."""
    q = MultiPoly.gens([f"q{k}" for k in range(1, s + 1)])
    diag = [1 - qk for qk in q]
    off = [-qk for qk in q[1:]]
    chi = tridiagonal_charpoly(diag, off)
    return [chi.coeff(k) for k in range(s) if chi.coeff(k) != 0]


def even_special_system(s: int) -> list[MultiPoly]:
    """Unknowns ``w_k = x_k^2`` (with ``y = 1``); equations ``chi_{S1}(t) = (t-1)^s``."""
    w = MultiPoly.gens([f"w{k}" for k in range(1, s + 1)])
    diag = [-w[0]] + [-wk - 1 for wk in w[1:]]
    chi = tridiagonal_charpoly(diag, w[:-1])
    target = [(-1) ** (s - k) * comb(s, k) for k in range(s + 1)]
    return [chi.coeff(k) - target[k] for k in range(s)]


@dataclass(frozen=True)
class CensusResult:
    s: int
    q_count: int
    lifted_count: int
    bezout_bound: int
    all_nonzero: bool
    verified: bool

    def as_dict(self) -> dict:
        return {
            "s": self.s,
            "q_count": self.q_count,
            "lifted_count": self.lifted_count,
            "bezout_bound": self.bezout_bound,
            "all_nonzero": self.all_nonzero,
            "verified": self.verified,
        }


def _census(s, system, full_offprod, target, seed) -> CensusResult:
    gens = system(s)
    sb = shape_basis(gens, seed)
    vals = [Residue(g, sb.h) for g in sb.coords]
    eqs_ok = all(g.evaluate(vals) == 0 for g in gens)
    n = len(full_offprod(vals, sb.h))
    chi = tridiagonal_charpoly([0] * (n + 1), full_offprod(vals, sb.h))
    full_ok = all(chi.coeff(k) == target.coeff(k) for k in range(n + 2))
    nonzero = all(v.is_unit() for v in vals)
    return CensusResult(s, sb.count, sb.count * 2 ** s, bezout_bound(s), nonzero, eqs_ok and full_ok)


def odd_special_census(s: int, seed: int = 0) -> CensusResult:
    """Count nilpotent special bidiagonal skew matrices of size ``2s+1``.

    Every solution ``q`` is checked modulo the eliminant: ``B(p)`` with
    ``p = (q_1, -1, ..., q_s, -1)`` has charpoly ``t^{2s+1}``, and each
    ``q_k`` is nonzero, so each solution lifts to ``2^s`` matrices.
    """
    _check_census_size(s)

    def offprod(q, h):
        # sup * sub of B(p) is -p_k
        out = []
        for qk in q:
            out += [-qk, Residue(1, h)]
        return out

    return _census(s, odd_special_system, offprod, Poly.monomial(2 * s + 1), seed)


def even_special_census(s: int, seed: int = 0) -> CensusResult:
    """Count special bidiagonal skew matrices of size ``2s`` with divisors
    ``(t-1)^s, (t+1)^s``.

    The full matrix has superdiagonal ``x_1, 1, x_2, ..., 1, x_s`` with
    ``x_k^2 = w_k``; since its off-diagonal entries are nonzero it is
    non-derogatory, so the divisors follow from ``charpoly = (t^2 - 1)^s``,
    which is checked modulo the eliminant.
    """
    _check_census_size(s)

    def offprod(w, h):
        out = []
        for k, wk in enumerate(w):
            out.append(-wk)
            if k < len(w) - 1:
                out.append(Residue(-1, h))
        return out

    return _census(s, even_special_system, offprod, Poly((-1, 0, 1)) ** s, seed)


# ---------------------------------------------------------------- bidiagonal n = 4


def _symbolic_bidiagonal_charpoly(n: int) -> tuple[list[MultiPoly], Poly]:
    a = MultiPoly.gens([f"a{k}" for k in range(1, n)])
    return a, tridiagonal_charpoly([0] * n, [-(x * x) for x in a])


def impossibility_report(n: int = 4, seed: int = 0) -> dict:
    """Jordan types at 0 of every nilpotent 4x4 skew bidiagonal matrix, up to scaling.

    Nilpotency means ``a1^2 + a2^2 + a3^2 = 0`` and ``a1^2 a3^2 = 0``.  Either
    ``a2 = 0`` or, after scaling the matrix, ``a2 = 1``; each case is solved
    exactly and the Jordan type of every solution is computed.
    """
    if n != 4:
        raise ValueError("only n = 4 is supported")
    _, chi = _symbolic_bidiagonal_charpoly(4)
    eqs = [chi.coeff(k) for k in range(4) if chi.coeff(k) != 0]
    vs = ("a1", "a3")
    a1, a3 = MultiPoly.gens(vs)
    cases = {}
    for a2 in (0, 1):
        sub = [e.evaluate([a1, MultiPoly.const(vs, a2), a3]) for e in eqs]
        points, total = solve_points(sub, seed)
        types = []
        for x1, x3 in points:
            types.append(jordan_at(bidiagonal_skew([x1, a2, x3], "gauss"), 0))
        cases[f"a2={a2}"] = {
            "points": [[str(x) for x in pt] for pt in points],
            "complete": len(points) == total,
            "jordan_types": types,
        }
    holds = all(c["complete"] and [2, 2] not in c["jordan_types"] for c in cases.values())
    return {"n": n, "equations": [str(e) for e in eqs], "cases": cases, "holds": holds}


def bidiagonal_impossibility(n: int = 4, seed: int = 0) -> bool:
    """True when no skew bidiagonal ``n x n`` matrix has elementary divisors ``t^2, t^2``."""
    return impossibility_report(n, seed)["holds"]


def s3_components() -> dict:
    """Factor the defining polynomial of nilpotent 3x3 skew bidiagonal matrices.

    The charpoly is ``t^3 + (a1^2 + a2^2) t``; the binary quadratic form is
    split into linear factors ``a2 - z a1`` at the Q(i)-roots ``z`` of
    ``f(1, z)``.
    """
    a, chi = _symbolic_bidiagonal_charpoly(3)
    f = chi.coeff(1)
    a1, a2 = a
    z = MultiPoly.gens(("z",))[0]
    fz = f.evaluate([MultiPoly.const(("z",), 1), z]).to_poly(0)
    roots, rem = gaussian_roots(fz)
    factors = [a2 - GaussRat(r) * a1 for r, m in roots for _ in range(m)]
    prod = MultiPoly.const(a1.variables, fz.lc())
    for g in factors:
        prod = prod * g
    return {
        "polynomial": f,
        "factors": factors,
        "splits": rem.degree == 0 and prod == f,
        "distinct": len(roots) == 2 and all(m == 1 for _, m in roots),
    }
