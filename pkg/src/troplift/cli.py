"""Command-line front end.

Exit codes: 0 success (and positive verdicts), 1 negative verdict or
impossible lift, 2 input or usage error, 3 enumeration size limit.
Configuration precedence is flags, then TROPLIFT_* environment variables,
then defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import jsonio, lifts, membership, newton, oracle, trees
from .config import Config, default_truncation
from .errors import (
    MinorSignsOpposed,
    NotBarvinok2,
    NotCaterpillar,
    NotRank2,
    NotSingular,
    SameSigns,
    SizeLimit,
    TropliftError,
)
from .fixtures import FIXTURE_NAMES, fixture, fixture_json
from .monomials import sym_det_monomials
from .tropical import sym_trop_det, sym_trop_rank, trop_det, trop_rank

NEGATIVE_ERRORS = (
    NotBarvinok2,
    NotCaterpillar,
    NotRank2,
    NotSingular,
    SameSigns,
    MinorSignsOpposed,
)


def _env(name, cast, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    return cast(raw)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="master seed for randomized constructions")
    common.add_argument("--trunc", type=str, default=None, help="series truncation order (p/q)")
    common.add_argument("--max-n", type=int, default=None, help="enumeration bound (max 8)")
    common.add_argument(
        "--acknowledge-large",
        action="store_true",
        help="accept an enumeration bound above 8 (uniqueness verdicts get slow)",
    )
    common.add_argument("--format", choices=("json", "dot", "text"), default=None)
    p = argparse.ArgumentParser(
        prog="troplift",
        description="Tropical rank tests, membership oracles, and certified Puiseux lifts",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_cmd(name, help_text, with_in=True):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if with_in:
            sp.add_argument("--in", dest="infile", required=True, help="input JSON file")
        sp.add_argument("--out", dest="outfile", default=None, help="output file (default stdout)")
        return sp

    add_cmd("trop-det", "tropical determinant with argmin and tie data")
    add_cmd("rank", "tropical rank (and symmetric tropical rank)")
    add_cmd("tree", "bicolored tree of a rank <= 2 matrix")
    for name in ("member", "lift"):
        sp = add_cmd(name, f"{name} for a matrix set and field mode")
        sp.add_argument(
            "--variety", required=True, choices=("rank2", "sym_rank2", "corank1", "sym_corank1")
        )
        sp.add_argument("--mode", required=True, choices=("C", "R", "C+", "R+"))
    add_cmd("verify", "re-verify a certificate file")
    sp = add_cmd("polytope", "monomial classes, vertices, and edges", with_in=False)
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--what", choices=("monomials", "vertices", "edges"), default="monomials")
    sp.add_argument("--table2", action="store_true", help="emit the bundled 4x4 showcase rows")
    add_cmd("verify-suite", "run the brute-force oracle cross-checks", with_in=False)
    sp = sub.add_parser("fixtures", help="write a bundled example input as JSON", parents=[common])
    sp.add_argument("name", choices=FIXTURE_NAMES)
    sp.add_argument("--out", dest="outdir", default=".")
    return p


def _config(args) -> Config:
    seed = args.seed if args.seed is not None else _env("TROPLIFT_SEED", int, 1)
    trunc = args.trunc if args.trunc is not None else os.environ.get("TROPLIFT_TRUNC")
    bound = args.max_n if args.max_n is not None else _env("TROPLIFT_MAX_N", int, 8)
    fmt = args.format if args.format is not None else _env("TROPLIFT_FORMAT", str, "json")
    return Config(
        truncation_order=None if trunc is None else Fraction(trunc),
        enumeration_bound=bound,
        seed=seed,
        output_format=fmt,
        acknowledge_large=getattr(args, "acknowledge_large", False),
    )


def _read_matrix(path):
    with open(path) as fh:
        return jsonio.decode_matrix(json.load(fh))


def _emit(text: str, outfile):
    if outfile:
        Path(outfile).write_text(text + "\n")
    else:
        print(text)


def _det_payload(res):
    return {
        "min_value": res.min_value,
        "tie": res.tie,
        "argmin": [
            {
                "monomial": cls.monomial_str(),
                "representative": list(cls.representative),
                "sign": cls.sign,
                "coefficient": cls.coefficient,
            }
            for cls in res.argmin
        ],
    }


def dispatch(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = _config(args)
    cmd = args.command

    if cmd == "trop-det":
        a = _read_matrix(args.infile)
        payload = {"plain": _det_payload(trop_det(a, cfg.enumeration_bound))}
        payload["symmetric"] = (
            _det_payload(sym_trop_det(a, cfg.enumeration_bound)) if a.symmetric else None
        )
        _emit(jsonio.dumps(payload), args.outfile)
        return 0

    if cmd == "rank":
        a = _read_matrix(args.infile)
        payload = {"tropical_rank": trop_rank(a, cfg.enumeration_bound)}
        payload["symmetric_tropical_rank"] = (
            sym_trop_rank(a, cfg.enumeration_bound) if a.symmetric else None
        )
        if cfg.output_format == "text":
            bits = [f"tropical rank {payload['tropical_rank']}"]
            if payload["symmetric_tropical_rank"] is not None:
                bits.append(f"symmetric tropical rank {payload['symmetric_tropical_rank']}")
            _emit(", ".join(bits), args.outfile)
        else:
            _emit(jsonio.dumps(payload), args.outfile)
        return 0

    if cmd == "tree":
        a = _read_matrix(args.infile)
        tree = trees.tree_from_rank2(a, bound=cfg.enumeration_bound)
        if cfg.output_format == "dot":
            _emit(trees.tree_to_dot(tree), args.outfile)
        else:
            _emit(jsonio.dumps(jsonio.encode_tree(tree)), args.outfile)
        return 0

    if cmd == "member":
        a = _read_matrix(args.infile)
        fn = {
            "rank2": membership.member_rank2,
            "sym_rank2": membership.member_sym_rank2,
            "corank1": membership.member_corank1,
            "sym_corank1": membership.member_sym_corank1,
        }[args.variety]
        verdict = fn(a, args.mode, cfg.enumeration_bound)
        if cfg.output_format == "text":
            word = "member" if verdict.verdict else "not a member"
            _emit(f"{verdict.variety} over {verdict.mode}: {word}", args.outfile)
        else:
            _emit(
                jsonio.dumps(
                    {
                        "variety": verdict.variety,
                        "mode": verdict.mode,
                        "verdict": verdict.verdict,
                        "reason": verdict.reason,
                    }
                ),
                args.outfile,
            )
        return 0 if verdict.verdict else 1

    if cmd == "lift":
        a = _read_matrix(args.infile)
        cert = _run_lift(a, args.variety, args.mode, cfg)
        _emit(jsonio.dumps(jsonio.encode_certificate(cert)), args.outfile)
        return 0 if cert.valid else 1

    if cmd == "verify":
        with open(args.infile) as fh:
            cert = jsonio.decode_certificate(json.load(fh))
        lifts.verify_lift(cert)
        _emit(jsonio.dumps(jsonio.encode_certificate(cert)), args.outfile)
        return 0 if cert.valid else 1

    if cmd == "polytope":
        if args.table2:
            _emit(jsonio.dumps(fixture_json("table2")), args.outfile)
            return 0
        if args.what == "monomials":
            payload = [jsonio.encode_class(c) for c in sym_det_monomials(args.n)]
        elif args.what == "vertices":
            payload = [jsonio.encode_class(c) for c in newton.polytope_vertices(args.n)]
        else:
            payload = [jsonio.encode_value(e) for e in newton.polytope_edges(args.n)]
        _emit(jsonio.dumps(payload), args.outfile)
        return 0

    if cmd == "verify-suite":
        reports = run_verify_suite(cfg.seed, min(cfg.enumeration_bound, 4))
        payload = [
            {
                "subject": r.subject,
                "instance": r.instance,
                "fast": r.fast_result,
                "brute": r.brute_result,
                "agree": r.agree,
            }
            for r in reports
        ]
        _emit(jsonio.dumps(payload), args.outfile)
        return 0 if all(r.agree for r in reports) else 1

    if cmd == "fixtures":
        path = Path(args.outdir) / f"{args.name}.json"
        path.write_text(jsonio.dumps(fixture_json(args.name)) + "\n")
        print(str(path))
        return 0

    raise AssertionError(f"unhandled command {cmd}")


def _run_lift(a, variety, mode, cfg: Config):
    if variety == "rank2":
        if mode in ("C+", "R+"):
            return lifts.lift_rank2_positive(a, seed=cfg.seed)
        return lifts.lift_rank2_real(a, seed=cfg.seed)
    if variety == "sym_rank2":
        if mode in ("C+", "R+"):
            return lifts.lift_sym_caterpillar(a, seed=cfg.seed)
        return lifts.lift_sym_rank2_real(a, seed=cfg.seed)
    real_mode = "R+" if mode.endswith("+") else "R"
    if variety == "corank1":
        return lifts.lift_corank1(a, real_mode, seed=cfg.seed, trunc=cfg.truncation_order)
    if variety == "sym_corank1":
        return lifts.lift_sym_corank1(a, real_mode, seed=cfg.seed, trunc=cfg.truncation_order)
    raise ValueError(variety)


def run_verify_suite(seed: int, max_n: int):
    """Cross-check fast paths against the brute oracles on seeded samples."""
    import random

    from . import samples
    from .tropical import barvinok_rank2, sym_barvinok_rank2
    from .tropmat import TropMatrix

    rng = random.Random(seed)
    reports = []
    for k in range(20):
        d = rng.randint(2, max_n)
        n = rng.randint(2, max_n)
        a = samples.random_rank2_matrix(rng, d, n)
        fast, _, _ = barvinok_rank2(a)
        reports.append(
            oracle.OracleReport(
                "barvinok_rank2", repr(a.entries), fast, oracle.brute_barvinok2(a)
            )
        )
    for k in range(10):
        n = rng.randint(2, max_n)
        a = samples.random_sym_rank2_matrix(rng, n)
        a = TropMatrix.make(a.entries, symmetric=True)
        fast, _, _ = sym_barvinok_rank2(a)
        reports.append(
            oracle.OracleReport(
                "sym_barvinok_rank2", repr(a.entries), fast, oracle.brute_sym_barvinok2(a)
            )
        )
    classes = sym_det_monomials(4)
    pts = [
        tuple(c.exponent[i][j] for i in range(4) for j in range(i, 4)) for c in classes
    ]
    hull_v, hull_e = oracle.brute_hull(pts)
    fast_v = sorted(classes.index(c) for c in newton.polytope_vertices(4))
    reports.append(
        oracle.OracleReport("polytope_vertices_4", "symmetric determinant exponents", fast_v, sorted(hull_v))
    )
    fast_e = sorted(
        tuple(sorted((classes.index(e.u), classes.index(e.v)))) for e in newton.polytope_edges(4)
    )
    reports.append(
        oracle.OracleReport(
            "polytope_edges_4",
            "symmetric determinant exponents",
            fast_e,
            sorted(tuple(sorted(p)) for p in hull_e),
        )
    )
    cc = oracle.cocircuit_fixture()
    reports.append(
        oracle.OracleReport("cocircuit_rank", "ternary affine plane", trop_rank(cc), 3)
    )
    return reports


def main(argv=None) -> int:
    try:
        code = dispatch(argv)
    except SizeLimit as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return 3
    except NEGATIVE_ERRORS as exc:
        print(f"negative result: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (TropliftError, OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"input error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
