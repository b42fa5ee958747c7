"""JSON documents for exact scalars, matrices and points."""

from __future__ import annotations

from fractions import Fraction

from .arith import GaussRat, Radical, coerce
from .linalg import Matrix
from .variety import PointP

__all__ = [
    "rat_to_text",
    "scalar_to_json",
    "scalar_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "point_to_json",
    "point_from_json",
]


def rat_to_text(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def scalar_to_json(x):
    """Rat as ``"a/b"``, GaussRat as ``"a/b+c/d*i"``, Radical as ``[{re, im, rad}, ...]``."""
    if isinstance(x, Radical):
        return [{"re": rat_to_text(c.re), "im": rat_to_text(c.im), "rad": r} for r, c in x.items()]
    if isinstance(x, GaussRat):
        return str(x)
    return rat_to_text(x)


def scalar_from_json(v, ring: str | None = None):
    if isinstance(v, list):
        out = Radical({})
        for term in v:
            c = GaussRat(Fraction(term.get("re", "0")), Fraction(term.get("im", "0")))
            out = out + Radical({int(term["rad"]): c})
        x = out
    elif isinstance(v, bool):
        raise ValueError(f"not a scalar: {v!r}")
    elif isinstance(v, int):
        x = Fraction(v)
    elif isinstance(v, str):
        g = GaussRat.parse(v)
        x = g.re if g.is_real() else g
    else:
        raise ValueError(f"not a scalar: {v!r}")
    return x if ring is None else coerce(x, ring)


def matrix_to_json(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "ring": m.ring,
        "entries": [[scalar_to_json(x) for x in row] for row in m.tolist()],
    }


def matrix_from_json(doc: dict) -> Matrix:
    rows, cols = int(doc["rows"]), int(doc["cols"])
    ring = doc.get("ring")
    entries = doc["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError(f"entries do not form a {rows}x{cols} array")
    data = [[scalar_from_json(x) for x in row] for row in entries]
    if ring is None:
        return Matrix(data)
    return Matrix(data, ring)


def point_to_json(p) -> dict:
    p = p if isinstance(p, PointP) else PointP(tuple(p))
    return {"s": p.s, "coords": [scalar_to_json(x) for x in p.coords]}


def point_from_json(doc: dict) -> PointP:
    coords = tuple(scalar_from_json(x, "gauss") for x in doc["coords"])
    s = int(doc.get("s", len(coords) // 2))
    if len(coords) != 2 * s:
        raise ValueError(f"a point with s = {s} needs {2 * s} coordinates, got {len(coords)}")
    return PointP(coords)
