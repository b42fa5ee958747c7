"""Canonical direct sums of lam*P_m, Q_m and R_m blocks for skew-symmetric matrices."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .arith import GaussRat
from .blocks import build_P, build_Q, build_R
from .errors import DimensionMismatch, NotSkewSymmetric, PairingViolation, UnsupportedEigenvalues
from .jordan import ElementaryDivisor, gaussian_roots, rank_sequence, validate_skew_pairing
from .linalg import Matrix, charpoly, direct_sum

__all__ = [
    "PBlock",
    "QBlock",
    "RBlock",
    "NormalFormPlan",
    "Certificate",
    "canonical_sign",
    "plan_blocks",
    "assemble",
    "normal_form",
    "similar",
    "signed_permutation",
]


def canonical_sign(lam: GaussRat) -> GaussRat:
    """The representative of ``{lam, -lam}`` with positive real part (or, if
    purely imaginary, positive imaginary part)."""
    lam = GaussRat(lam)
    if lam.re > 0 or (lam.re == 0 and lam.im > 0):
        return lam
    return -lam


@dataclass(frozen=True)
class PBlock:
    lam: GaussRat
    m: int
    kind = "P"

    def __post_init__(self):
        object.__setattr__(self, "lam", canonical_sign(self.lam))
        if self.lam == 0 or self.m < 2 or self.m % 2:
            raise ValueError(f"PBlock needs lam != 0 and even m, got {self.lam}, {self.m}")

    def matrix(self) -> Matrix:
        return build_P(self.m).scale(self.lam)


@dataclass(frozen=True)
class QBlock:
    m: int
    kind = "Q"

    def __post_init__(self):
        if self.m < 4 or self.m % 4:
            raise ValueError(f"QBlock needs m divisible by 4, got {self.m}")

    def matrix(self) -> Matrix:
        return build_Q(self.m)


@dataclass(frozen=True)
class RBlock:
    m: int
    kind = "R"

    def __post_init__(self):
        if self.m < 1 or self.m % 2 == 0:
            raise ValueError(f"RBlock needs odd m, got {self.m}")

    def matrix(self) -> Matrix:
        return build_R(self.m)


_KIND_ORDER = {"R": 0, "Q": 1, "P": 2}


def _block_key(b):
    lam = b.lam.sort_key() if b.kind == "P" else ()
    return (_KIND_ORDER[b.kind], b.m, lam)


@dataclass(frozen=True)
class NormalFormPlan:
    """Blocks of the normal form in canonical order: R, then Q, then P;
    ascending size within a kind, P-blocks further ordered by ``(re, im)``."""

    blocks: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=_block_key)))

    @property
    def size(self) -> int:
        return sum(b.m for b in self.blocks)


@dataclass
class Certificate:
    """Similarity evidence: equal charpolys and, at every eigenvalue, equal
    rank sequences of ``(A - lam I)^k`` for the input and the normal form."""

    charpoly_equal: bool
    rank_sequences: dict = field(default_factory=dict)  # lam -> (input ranks, normal-form ranks)

    @property
    def holds(self) -> bool:
        return self.charpoly_equal and all(a == b for a, b in self.rank_sequences.values())


def plan_blocks(divisors) -> NormalFormPlan:
    """Group elementary divisors into P/Q/R blocks."""
    divisors = list(divisors)
    if not validate_skew_pairing(divisors):
        raise PairingViolation("elementary divisors do not satisfy the skew-symmetric pairing")
    table: dict[GaussRat, Counter] = {}
    for d in divisors:
        table.setdefault(d.eigenvalue, Counter())[d.size] += d.count
    blocks = []
    for lam, sizes in table.items():
        if lam == 0:
            for size, count in sizes.items():
                if size % 2:
                    blocks.extend(RBlock(size) for _ in range(count))
                else:
                    blocks.extend(QBlock(2 * size) for _ in range(count // 2))
        elif canonical_sign(lam) == lam:
            for size, count in sizes.items():
                blocks.extend(PBlock(lam, 2 * size) for _ in range(count))
    return NormalFormPlan(tuple(blocks))


def assemble(plan: NormalFormPlan) -> Matrix:
    """Direct sum of the plan's blocks, in plan order."""
    if not plan.blocks:
        return Matrix([], "radical")
    return direct_sum([b.matrix() for b in plan.blocks]).as_ring("radical")


def _divisors_from_roots(a: Matrix, roots) -> tuple[list[ElementaryDivisor], dict]:
    divisors, ranks = [], {}
    for lam, _ in roots:
        seq = rank_sequence(a, lam)
        ranks[lam] = seq
        ge = [seq[k - 1] - seq[k] for k in range(1, len(seq))] + [0]
        for k in range(1, len(ge)):
            c = ge[k - 1] - ge[k]
            if c:
                divisors.append(ElementaryDivisor(lam, k, c))
    return divisors, ranks


def normal_form(a: Matrix) -> tuple[NormalFormPlan, Matrix, Certificate]:
    """Normal form of a skew-symmetric matrix with eigenvalues in Q(i).

    Returns ``(plan, N, certificate)`` with ``N = assemble(plan)``.  The
    certificate shows ``a`` and ``N`` are similar; skew-symmetric matrices
    that are similar are orthogonally similar, so no transition matrix is
    computed.
    """
    if not a.is_skew_symmetric():
        raise NotSkewSymmetric("input matrix is not skew-symmetric")
    f = charpoly(a)
    roots, rem = gaussian_roots(f)
    if rem.degree > 0:
        raise UnsupportedEigenvalues(f"factor without roots in Q(i): {rem}")
    divisors, ranks_a = _divisors_from_roots(a, roots)
    plan = plan_blocks(divisors)
    n = assemble(plan)
    cert = Certificate(charpoly(n) == f if n.rows else f.degree == 0)
    for lam, seq in ranks_a.items():
        cert.rank_sequences[lam] = (seq, rank_sequence(n, lam))
    return plan, n, cert


def similar(a: Matrix, b: Matrix) -> bool:
    """Similarity over the field, for matrices whose eigenvalues lie in Q(i)."""
    if not (a.is_square() and b.is_square()) or a.rows != b.rows:
        raise DimensionMismatch("similar() needs square matrices of equal size")
    f = charpoly(a)
    roots, rem = gaussian_roots(f)
    if rem.degree > 0:
        raise UnsupportedEigenvalues(f"factor without roots in Q(i): {rem}")
    if charpoly(b) != f:
        return False
    return all(rank_sequence(a, lam) == rank_sequence(b, lam) for lam, _ in roots)


def signed_permutation(perm, signs) -> Matrix:
    """Orthogonal matrix sending basis vector ``j`` to ``signs[j] * e_{perm[j]}``."""
    n = len(perm)
    m = [[0] * n for _ in range(n)]
    for j, (p, s) in enumerate(zip(perm, signs)):
        m[p][j] = s
    return Matrix(m)
