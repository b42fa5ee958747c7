"""Exact scalars: rationals, Gaussian rationals and sums of square roots.

Three scalar rings are used throughout the package:

* ``rat``     -- :class:`fractions.Fraction` (plain ``int`` is accepted on input)
* ``gauss``   -- :class:`GaussRat`, elements of Q(i)
* ``radical`` -- :class:`Radical`, finite sums ``c_1*sqrt(r_1) + ... `` with
  ``c_k`` in Q(i) and ``r_k`` distinct squarefree positive integers

Every value is immutable and has a canonical representation, so ``==`` is
structural.  Mixed arithmetic promotes to the wider ring.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "GaussRat",
    "Radical",
    "I",
    "squarefree_split",
    "rat_sqrt_lift",
    "ring_of",
    "join_rings",
    "coerce",
    "to_fraction",
    "RINGS",
]

RINGS = ("rat", "gauss", "radical")


def squarefree_split(m: int) -> tuple[int, int]:
    """Return ``(k, r)`` with ``m == k*k*r`` and ``r`` squarefree."""
    if m < 1:
        raise ValueError(f"squarefree_split needs a positive integer, got {m}")
    k, r = 1, 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            k *= p ** (e // 2)
            if e % 2:
                r *= p
        p += 1 if p == 2 else 2
    return k, r * m


def _prime_factors(m: int) -> list[int]:
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return out


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, GaussRat):
        if x._b:
            raise ValueError(f"{x} is not rational")
        return Fraction(x._a, x._d)
    if isinstance(x, Radical):
        return to_fraction(x.as_gauss())
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class GaussRat:
    """An element ``(a + b*i)/d`` of Q(i), stored in lowest terms with ``d > 0``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussRat) and im == 0:
            self._a, self._b, self._d = re._a, re._b, re._d
            return
        re = to_fraction(re)
        im = to_fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a, self._b, self._d = a, b, d

    @classmethod
    def _raw(cls, a, b, d):
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        """Parse ``"a/b"``, ``"a/b+c/d*i"``, ``"c/d*i"``, ``"-i"`` and similar."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty scalar")
        try:
            if not s.endswith("i"):
                return cls(Fraction(s))
            body = s[:-1]
            if body.endswith("*"):
                body = body[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut > 0:
                re_part, im_str = Fraction(body[:cut]), body[cut:]
            else:
                re_part, im_str = Fraction(0), body
            if im_str in ("", "+"):
                im_part = Fraction(1)
            elif im_str == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(im_str)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse scalar {text!r}") from exc
        return cls(re_part, im_part)

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def denominator(self) -> int:
        return self._d

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussRat":
        return GaussRat._raw(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRat(x)
        return None

    def __add__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._d, o._d
        if d1 == d2:
            return GaussRat._raw(self._a + o._a, self._b + o._b, d1)
        return GaussRat._raw(self._a * d2 + o._a * d1, self._b * d2 + o._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussRat._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        n = self._a * self._a + self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GaussRat division by zero")
        return GaussRat._raw(self._a * self._d, -self._b * self._d, n)

    def __truediv__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = GaussRat(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        o = GaussRat._lift(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def sort_key(self):
        return (self.re, self.im)

    def __str__(self):
        re_s = _fmt_fraction(self.re)
        if self._b == 0:
            return re_s
        im = self.im
        mag = abs(im)
        im_s = "i" if mag == 1 else f"{_fmt_fraction(mag)}*i"
        if self._a == 0:
            return ("-" if im < 0 else "") + im_s
        return f"{re_s}{'-' if im < 0 else '+'}{im_s}"

    def __repr__(self):
        return f"GaussRat('{self}')"


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


I = GaussRat(0, 1)
_G0 = GaussRat(0)
_G1 = GaussRat(1)


class Radical:
    """A finite sum ``sum_r c_r * sqrt(r)`` with ``c_r`` in Q(i).

    Radicands are squarefree positive integers; radicand 1 carries the
    Gaussian-rational part.  The span of these square roots over Q(i) is a
    field (a multiquadratic extension), so every nonzero value is invertible.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        acc: dict[int, GaussRat] = {}
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = {1: terms}
        for r, c in terms.items():
            if r < 1:
                raise ValueError(f"radicand must be positive, got {r}")
            k, sf = squarefree_split(r)
            c = GaussRat(c) * k
            if c:
                acc[sf] = acc.get(sf, _G0) + c
        self._terms = tuple(sorted((r, c) for r, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _from_sorted(cls, items):
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @classmethod
    def _from_map(cls, acc: dict):
        return cls._from_sorted(tuple(sorted((r, c) for r, c in acc.items() if c)))

    @staticmethod
    def _lift(x):
        if isinstance(x, Radical):
            return x
        if isinstance(x, (int, Fraction, GaussRat)):
            g = GaussRat(x)
            return Radical._from_sorted(((1, g),) if g else ())
        return None

    @property
    def terms(self) -> dict[int, GaussRat]:
        return dict(self._terms)

    def items(self):
        return self._terms

    def radicands(self) -> list[int]:
        return [r for r, _ in self._terms]

    def is_gauss(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 1)

    def as_gauss(self) -> GaussRat:
        if not self._terms:
            return _G0
        if self.is_gauss():
            return self._terms[0][1]
        raise ValueError(f"{self} is not in Q(i)")

    def __add__(self, other):
        o = Radical._lift(other)
        if o is None:
            return NotImplemented
        if not o._terms:
            return self
        if not self._terms:
            return o
        acc = dict(self._terms)
        for r, c in o._terms:
            acc[r] = acc[r] + c if r in acc else c
        return Radical._from_map(acc)

    __radd__ = __add__

    def __neg__(self):
        return Radical._from_sorted(tuple((r, -c) for r, c in self._terms))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = Radical._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Radical._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            if not other:
                return Radical._from_sorted(())
            return Radical._from_sorted(tuple((r, c * other) for r, c in self._terms))
        if not isinstance(other, Radical):
            return NotImplemented
        acc: dict[int, GaussRat] = {}
        for r1, c1 in self._terms:
            for r2, c2 in other._terms:
                # sqrt(r1)*sqrt(r2) = g*sqrt(r1*r2/g^2) for squarefree r1, r2
                g = gcd(r1, r2)
                r = (r1 // g) * (r2 // g)
                c = c1 * c2 if g == 1 else c1 * c2 * g
                acc[r] = acc[r] + c if r in acc else c
        return Radical._from_map(acc)

    __rmul__ = __mul__

    def conjugate_at(self, p: int) -> "Radical":
        """Apply the field automorphism sqrt(p) -> -sqrt(p) for a prime ``p``."""
        return Radical._from_sorted(tuple((r, -c if r % p == 0 else c) for r, c in self._terms))

    def inverse(self) -> "Radical":
        if not self._terms:
            raise ZeroDivisionError("Radical division by zero")
        if len(self._terms) == 1:
            r, c = self._terms[0]
            # 1/(c sqrt r) = sqrt(r)/(c r)
            return Radical._from_sorted(((r, (c * r).inverse()),))
        primes = sorted({p for r, _ in self._terms for p in _prime_factors(r)})
        num = Radical._lift(1)
        y = self
        for p in primes:
            c = y.conjugate_at(p)
            num = num * c
            y = y * c
        return num * y.as_gauss().inverse()

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            return self * GaussRat(other).inverse()
        if isinstance(other, Radical):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        o = Radical._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Radical._lift(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        o = Radical._lift(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.as_gauss()) if self.is_gauss() else hash(self._terms)
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for r, c in self._terms:
            cs = str(c)
            if r == 1:
                parts.append(cs)
            elif c == 1:
                parts.append(f"sqrt({r})")
            else:
                parts.append(f"({cs})*sqrt({r})")
        return " + ".join(parts)

    def __repr__(self):
        return f"Radical({self})"


def rat_sqrt_lift(q, branch=1) -> Radical:
    """A square root of the rational ``q`` as a single-term :class:`Radical`.

    ``branch`` is ``+1``/``-1`` (or ``"+"``/``"-"``).  The ``+`` branch is
    ``c*sqrt(r)`` with ``c > 0`` for ``q > 0`` and ``c*i*sqrt(r)`` with
    ``c > 0`` for ``q < 0``.  ``q == 0`` gives zero for either branch.
    """
    q = to_fraction(q)
    sign = _branch_sign(branch)
    if q == 0:
        return Radical()
    mag = abs(q)
    k, r = squarefree_split(mag.numerator * mag.denominator)
    coeff = GaussRat(Fraction(k, mag.denominator))
    if q < 0:
        coeff = coeff * I
    return Radical({r: coeff * sign})


def _branch_sign(branch) -> int:
    if branch in (1, "+", "+1"):
        return 1
    if branch in (-1, "-", "-1"):
        return -1
    raise ValueError(f"branch must be + or -, got {branch!r}")


def ring_of(x) -> str:
    if isinstance(x, (int, Fraction)):
        return "rat"
    if isinstance(x, GaussRat):
        return "gauss"
    if isinstance(x, Radical):
        return "radical"
    raise TypeError(f"not an exact scalar: {type(x).__name__}")


def join_rings(*rings: str) -> str:
    return RINGS[max((RINGS.index(r) for r in rings), default=0)]


def coerce(x, ring: str):
    if ring == "rat":
        return to_fraction(x)
    if ring == "gauss":
        if isinstance(x, GaussRat):
            return x
        if isinstance(x, Radical):
            return x.as_gauss()
        return GaussRat(x)
    if ring == "radical":
        if isinstance(x, Radical):
            return x
        return Radical._lift(x)
    raise ValueError(f"unknown ring {ring!r}")
