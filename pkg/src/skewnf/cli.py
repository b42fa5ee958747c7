"""Command-line interface: JSON in, JSON out, deterministic exit codes.

Exit status is 0 when the command succeeded, 1 when a verification came out
false and 2 for unsupported input or any other error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import blocks, combinatorics, polysolve, variety
from .errors import SkewNFError
from .jordan import jordan_at
from .linalg import Poly, charpoly, rank
from .normal_form import normal_form
from .serialize import (
    matrix_from_json,
    matrix_to_json,
    point_from_json,
    point_to_json,
    scalar_from_json,
    scalar_to_json,
)

EXIT_CODES = {"ok": 0, "fail": 1, "unsupported": 2}


@dataclass
class CommandResult:
    status: str
    payload: dict
    diagnostics: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


def _verdict(payload: dict, checks: dict, diagnostics=None) -> CommandResult:
    payload = dict(payload, checks=checks)
    failed = [k for k, v in checks.items() if not v]
    return CommandResult("fail" if failed else "ok", payload, [f"check failed: {k}" for k in failed] + (diagnostics or []))


def _parse_signs(text: str | None):
    if text is None:
        return None
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        else:
            raise ValueError(f"bad sign {tok!r}; use + or -")
    return out


def _load(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------- commands


def cmd_block(args) -> CommandResult:
    signs = _parse_signs(args.signs)
    if args.kind == "p":
        m = blocks.build_P(args.size, signs)
    elif args.kind == "r":
        m = blocks.build_R(args.size, signs)
    else:
        if signs is not None:
            raise ValueError("Q blocks take no signs")
        m = blocks.build_Q(args.size)
    return CommandResult("ok", matrix_to_json(m))


def _block_json(b) -> dict:
    out = {"kind": b.kind, "m": b.m}
    if b.kind == "P":
        out["lam"] = scalar_to_json(b.lam)
    return out


def cmd_normal_form(args) -> CommandResult:
    a = matrix_from_json(_load(args.input))
    plan, n, cert = normal_form(a)
    payload = {
        "plan": [_block_json(b) for b in plan.blocks],
        "matrix": matrix_to_json(n),
        "certificate": {
            "charpoly_equal": cert.charpoly_equal,
            "rank_sequences": [
                {"lam": scalar_to_json(lam), "input": ra, "normal_form": rn}
                for lam, (ra, rn) in sorted(cert.rank_sequences.items(), key=lambda kv: kv[0].sort_key())
            ],
            "holds": cert.holds,
        },
    }
    return _verdict(payload, {"certificate": cert.holds})


def _verify_blocks(s: int) -> dict:
    t = Poly.t()
    q = blocks.build_Q(4 * s)
    n = 4 * s
    return {
        f"Q_{n} charpoly": charpoly(q) == Poly.monomial(n),
        f"Q_{n} rank": rank(q) == n - 2,
        f"Q_{n} power {2 * s} vanishes": (q ** (2 * s)).is_zero(),
        f"Q_{n} power {2 * s - 1} nonzero": not (q ** (2 * s - 1)).is_zero(),
        f"Q_{n} jordan type": jordan_at(q, 0) == [2 * s, 2 * s],
        f"P_{2 * s} charpoly": charpoly(blocks.build_P(2 * s)) == (t * t - 1) ** s,
        f"R_{2 * s + 1} charpoly": charpoly(blocks.build_R(2 * s + 1)) == Poly.monomial(2 * s + 1),
    }


def cmd_verify(args) -> CommandResult:
    s = args.s
    if s < 1:
        raise ValueError("--s must be positive")
    if args.what == "identities":
        checks = {"identities": combinatorics.verify_identities(s)}
        if s <= 8:
            checks["dp equals enumeration"] = all(
                combinatorics.ident_lhs(s, k) == combinatorics.ident_lhs_bruteforce(s, k) for k in range(1, s + 1)
            )
        values = {str(k): scalar_to_json(combinatorics.ident_lhs(s, k)) for k in range(1, s + 1)}
        return _verdict({"what": "identities", "s": s, "sums": values}, checks)
    if args.what == "givental":
        checks = {"grid": combinatorics.check_grid(20, 20)}
        checks.update({f"truncation d={d}": combinatorics.check_truncation(d) for d in range(1, s + 1)})
        if s >= 2:
            checks["I - Y"] = combinatorics.check_IY(s)
        return _verdict({"what": "givental", "s": s}, checks)
    return _verdict({"what": "blocks", "s": s}, _verify_blocks(s))


def cmd_variety(args) -> CommandResult:
    doc = _load(args.input)
    op = args.op
    if op == "member":
        p = point_from_json(doc)
        ok = variety.in_V(p)
        return CommandResult("ok" if ok else "fail", {"member": ok, "point": point_to_json(p)})
    if op == "signature":
        p = point_from_json(doc)
        return CommandResult("ok", {"signature": list(variety.signature(p))})
    if op == "fibers":
        p = point_from_json(doc)
        segs = variety.fiber_factor(p)
        return CommandResult("ok", {
            "signature": list(variety.signature(p)),
            "segments": [point_to_json(seg) for seg in segs],
        })
    if op == "invert":
        t = matrix_from_json(doc)
        return CommandResult("ok", point_to_json(variety.cf_invert(t)))
    if op == "phi":
        a = [scalar_from_json(x, "gauss") for x in doc["superdiagonal"]]
        return CommandResult("ok", point_to_json(variety.skew_phi(a)))
    p = point_from_json(doc)
    signs = _parse_signs(args.signs)
    lift = variety.skew_lift(p, signs)
    nonzero = sum(1 for x in p.coords if x != 0)
    payload = {
        "superdiagonal": [scalar_to_json(x) for x in lift],
        "lift_count": 2 ** nonzero,
        "round_trip": variety.skew_phi(lift) == p,
    }
    return _verdict(payload, {"round trip": payload["round_trip"]})


def cmd_census(args) -> CommandResult:
    if args.case == "impossibility-n4":
        report = polysolve.impossibility_report(4, args.seed)
        return _verdict(report, {"no [2, 2] type": report["holds"]})
    if args.s is None:
        raise ValueError("--s is required for this census")
    fn = polysolve.odd_special_census if args.case == "odd" else polysolve.even_special_census
    res = fn(args.s, args.seed)
    checks = {
        "verified modulo eliminant": res.verified,
        "all coordinates nonzero": res.all_nonzero,
        "within Bezout bound": res.lifted_count <= res.bezout_bound,
    }
    return _verdict(dict(res.as_dict(), case=args.case), checks)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewnf", description="Exact canonical forms of skew-symmetric matrices.")
    parser.add_argument("--seed", type=int, default=0, help="seed for every randomized step")
    parser.add_argument("--output", default="-", help="output file, '-' for standard output")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--output", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("block", parents=[common], help="build a canonical block")
    p.add_argument("--kind", choices=("p", "q", "r"), required=True)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--signs", help="comma-separated + or - per superdiagonal entry")
    p.set_defaults(func=cmd_block)

    p = sub.add_parser("normal-form", parents=[common], help="normal form of a skew-symmetric matrix")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("verify", parents=[common], help="run an identity check")
    p.add_argument("--what", choices=("identities", "givental", "blocks"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("variety", parents=[common], help="operations on points of V_s")
    p.add_argument("op", choices=("member", "signature", "fibers", "invert", "phi", "lift"))
    p.add_argument("--input", required=True)
    p.add_argument("--signs", help="branch signs for lift")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("census", parents=[common], help="count special bidiagonal solutions")
    p.add_argument("--case", choices=("odd", "even", "impossibility-n4"), required=True)
    p.add_argument("--s", type=int)
    p.set_defaults(func=cmd_census)
    return parser


def dispatch(argv=None) -> CommandResult:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SkewNFError, ValueError, TypeError, KeyError, ZeroDivisionError, OSError, json.JSONDecodeError) as exc:
        return CommandResult("unsupported", {"error": type(exc).__name__, "message": str(exc)}, [str(exc)])


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    result = dispatch(argv)
    text = json.dumps(result.payload, indent=2, sort_keys=True) + "\n"
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
