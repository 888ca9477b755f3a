"""Command-line front end.

Subcommands: gen poly|primary|hall, check congruences, transform
forward|inverse, hankel table|verify-invariance|verify-divisibility,
rational detect, theta table, capacity bound|estimate, audit.

Exit codes: 0 success, 1 a checked property failed (violations found),
2 input error.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import formats
from .analytic import Hedgehog, dubinin_bound, estimate_transfinite_diameter
from .audit import AuditConfig, VERDICT_CONGRUENCE_VIOLATION, ruzsa_audit
from .binomial import binomial_transform, inverse_binomial_transform
from .core import ExactSequence, InputError, InternalInvariantError, NumericError
from .hankel import (
    detect_rationality,
    hankel_table,
    max_order,
    verify_transform_invariance,
)
from .sequences import (
    check_congruences,
    eval_polynomial_sequence,
    generate_hall_like,
    generate_primary,
)

OK = 0
PROPERTY_FAILED = 1
INPUT_ERROR = 2


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _read_sequence(args) -> ExactSequence:
    return formats.parse_sequence(_read_text(args.input))


def _parse_endpoints(text: str) -> Hedgehog:
    points = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            points.append(complex(piece))
        except ValueError as exc:
            raise InputError(
                f"bad endpoint {piece!r} (use python complex syntax, e.g. 1+2j)"
            ) from exc
    if not points:
        raise InputError("no endpoints given")
    return Hedgehog(tuple(points))


def _input_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", default="-", help="sequence file ('-' for stdin)")
    return p


def _add_format(parser, choices, default):
    parser.add_argument("--format", choices=choices, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudopoly",
        description="Exact congruence, Hankel determinant and capacity audits "
        "for integer sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    seq_in = _input_parent()

    gen = sub.add_parser("gen", help="generate sequences")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    g_poly = gen_sub.add_parser("poly", help="evaluate an integer polynomial")
    g_poly.add_argument(
        "--coeffs",
        required=True,
        help="JSON array of decimal-string coefficients, lowest degree first, "
        "or @path to a file holding one",
    )
    g_poly.add_argument("--n-max", type=int, required=True, help="number of terms")
    _add_format(g_poly, ["lines", "json"], "lines")
    g_primary = gen_sub.add_parser(
        "primary", help="primorial-scaled inverse-transform generator"
    )
    g_primary.add_argument("--n-max", type=int, required=True)
    g_primary.add_argument("--seed", type=int, default=0)
    g_primary.add_argument(
        "--bound", type=int, default=5, help="coefficients drawn from [-bound, bound]"
    )
    _add_format(g_primary, ["lines", "json"], "lines")
    g_hall = gen_sub.add_parser("hall", help="inductive congruence-preserving generator")
    g_hall.add_argument("--n-max", type=int, required=True)
    g_hall.add_argument(
        "--seed",
        type=int,
        default=None,
        help="randomize the perturbation (default: all zeros)",
    )
    g_hall.add_argument("--bound", type=int, default=2)
    _add_format(g_hall, ["lines", "json"], "lines")

    check = sub.add_parser("check", help="congruence checks")
    check_sub = check.add_subparsers(dest="checker", required=True)
    c_cong = check_sub.add_parser("congruences", parents=[seq_in])
    c_cong.add_argument("--mode", choices=["primary", "full"], default="primary")
    _add_format(c_cong, ["json", "csv"], "json")

    transform = sub.add_parser("transform", help="binomial transform pair")
    t_sub = transform.add_subparsers(dest="direction", required=True)
    for name in ("forward", "inverse"):
        t = t_sub.add_parser(name, parents=[seq_in])
        _add_format(t, ["lines", "json"], "lines")

    hankel = sub.add_parser("hankel", help="Hankel determinant audits")
    h_sub = hankel.add_subparsers(dest="action", required=True)
    h_table = h_sub.add_parser("table", parents=[seq_in])
    h_table.add_argument("--n-max", type=int, default=None)
    _add_format(h_table, ["csv", "json"], "csv")
    h_inv = h_sub.add_parser("verify-invariance", parents=[seq_in])
    h_inv.add_argument("--n-max", type=int, default=None)
    _add_format(h_inv, ["json"], "json")
    h_div = h_sub.add_parser("verify-divisibility", parents=[seq_in])
    h_div.add_argument("--n-max", type=int, default=None)
    _add_format(h_div, ["csv", "json"], "csv")

    rational = sub.add_parser("rational", help="rationality detection")
    r_sub = rational.add_subparsers(dest="action", required=True)
    r_detect = r_sub.add_parser("detect", parents=[seq_in])
    r_detect.add_argument("--window", type=int, default=3)
    _add_format(r_detect, ["json", "csv"], "json")

    theta = sub.add_parser("theta", help="Chebyshev theta tables")
    th_sub = theta.add_subparsers(dest="action", required=True)
    th_table = th_sub.add_parser("table")
    th_table.add_argument("--n-max", type=int, required=True)
    _add_format(th_table, ["csv"], "csv")

    capacity = sub.add_parser("capacity", help="hedgehog capacity bounds")
    cap_sub = capacity.add_subparsers(dest="action", required=True)
    cap_bound = cap_sub.add_parser("bound")
    cap_bound.add_argument(
        "--endpoints", required=True, help="comma-separated complex endpoints"
    )
    _add_format(cap_bound, ["json"], "json")
    cap_est = cap_sub.add_parser("estimate")
    cap_est.add_argument("--endpoints", required=True)
    cap_est.add_argument("--leja-points", type=int, default=64)
    cap_est.add_argument("--discretization", type=int, default=2048)
    _add_format(cap_est, ["json"], "json")

    audit = sub.add_parser("audit", parents=[seq_in], help="full pipeline")
    audit.add_argument("--window", type=int, default=3)
    audit.add_argument("--growth-bound", type=float, default=None)
    audit.add_argument("--n-max", type=int, default=None)
    _add_format(audit, ["json", "csv"], "json")
    return parser


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _cmd_gen(args) -> int:
    if args.generator == "poly":
        raw = args.coeffs
        if raw.startswith("@"):
            raw = _read_text(raw[1:])
        poly = formats.parse_polynomial(raw)
        seq = eval_polynomial_sequence(poly, args.n_max)
    elif args.generator == "primary":
        rng = random.Random(args.seed)
        coeffs = [rng.randint(-args.bound, args.bound) for _ in range(args.n_max)]
        seq = generate_primary(coeffs, args.n_max)
    else:
        if args.seed is None:
            pert = [0] * args.n_max
        else:
            rng = random.Random(args.seed)
            pert = [rng.randint(-args.bound, args.bound) for _ in range(args.n_max)]
        seq = generate_hall_like(args.n_max, pert)
    _emit(formats.render_sequence(seq, args.format))
    return OK


def _cmd_check(args) -> int:
    seq = _read_sequence(args)
    report = check_congruences(seq, args.mode)
    if args.format == "json":
        _emit(formats.dumps(formats.congruence_json_obj(report)))
    else:
        _emit(formats.congruence_csv(report))
    return OK if report.ok else PROPERTY_FAILED


def _cmd_transform(args) -> int:
    seq = _read_sequence(args)
    out = (
        binomial_transform(seq)
        if args.direction == "forward"
        else inverse_binomial_transform(seq)
    )
    _emit(formats.render_sequence(out, args.format))
    return OK


def _cmd_hankel(args) -> int:
    seq = _read_sequence(args)
    n_max = args.n_max if args.n_max is not None else max_order(seq)
    if args.action == "verify-invariance":
        report = verify_transform_invariance(seq, n_max)
        _emit(formats.dumps(formats.invariance_json_obj(report)))
        return OK if report.passed else PROPERTY_FAILED
    records = hankel_table(seq, n_max)
    if args.format == "json":
        _emit(formats.dumps(formats.hankel_json_obj(records)))
    else:
        _emit(formats.hankel_csv(records))
    if args.action == "verify-divisibility":
        return OK if all(r.divisible for r in records) else PROPERTY_FAILED
    return OK


def _cmd_rational(args) -> int:
    seq = _read_sequence(args)
    detection = detect_rationality(seq, args.window)
    if args.format == "json":
        _emit(formats.dumps(formats.rationality_json_obj(detection)))
    else:
        _emit(formats.rationality_csv(detection))
    return OK


def _cmd_theta(args) -> int:
    _emit(formats.theta_csv(args.n_max))
    return OK


def _cmd_capacity(args) -> int:
    hedgehog = _parse_endpoints(args.endpoints)
    bound = dubinin_bound(hedgehog)
    obj = {
        "endpoints": [[z.real, z.imag] for z in hedgehog.endpoints],
        "bound": bound,
    }
    if args.action == "estimate":
        obj["estimate"] = estimate_transfinite_diameter(
            hedgehog, args.leja_points, args.discretization
        )
        obj["leja_points"] = args.leja_points
        obj["discretization"] = args.discretization
    _emit(formats.dumps(obj))
    return OK


def _cmd_audit(args) -> int:
    seq = _read_sequence(args)
    kwargs = {"window": args.window, "n_max": args.n_max}
    if args.growth_bound is not None:
        kwargs["growth_bound"] = args.growth_bound
    report = ruzsa_audit(seq, AuditConfig(**kwargs))
    if args.format == "json":
        _emit(formats.dumps(formats.audit_json_obj(report)))
    else:
        _emit(formats.audit_csv(report))
    return OK if report.verdict != VERDICT_CONGRUENCE_VIOLATION else PROPERTY_FAILED


def run_cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    handlers = {
        "gen": _cmd_gen,
        "check": _cmd_check,
        "transform": _cmd_transform,
        "hankel": _cmd_hankel,
        "rational": _cmd_rational,
        "theta": _cmd_theta,
        "capacity": _cmd_capacity,
        "audit": _cmd_audit,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except InternalInvariantError as exc:
        print(f"INTERNAL INVARIANT VIOLATED (this is a bug): {exc}", file=sys.stderr)
        return PROPERTY_FAILED
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return PROPERTY_FAILED


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
