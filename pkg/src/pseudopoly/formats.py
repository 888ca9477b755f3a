"""Shared file formats and report serialization.

Sequence files are either newline-delimited decimal integers or a JSON
array of decimal strings; both are exact, floats are rejected.
Polynomials are JSON arrays of decimal-string coefficients, lowest degree
first.  Report serialization is deterministic: identical inputs yield
byte-identical JSON.
"""
from __future__ import annotations

import json
import math

from .analytic import SingularityReport
from .audit import AuditReport
from .core import ExactSequence, IntPolynomial, InputError
from .hankel import InvarianceReport, RationalityDetection
from .primes import sieve_flags
from .sequences import CongruenceReport


def parse_sequence(text: str) -> ExactSequence:
    """Read the shared sequence format (newline integers or JSON strings)."""
    stripped = text.strip()
    if not stripped:
        raise InputError("empty sequence input")
    if stripped[0] == "[":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON sequence: {exc}") from exc
        if not isinstance(data, list):
            raise InputError("JSON sequence must be an array")
        terms = []
        for v in data:
            if isinstance(v, str):
                try:
                    terms.append(int(v))
                except ValueError as exc:
                    raise InputError(f"not a decimal integer string: {v!r}") from exc
            elif isinstance(v, int) and not isinstance(v, bool):
                terms.append(v)
            else:
                raise InputError(
                    f"sequence entries must be decimal strings, got {v!r}"
                )
        return ExactSequence.of(terms)
    terms = []
    for line_no, line in enumerate(stripped.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            terms.append(int(line))
        except ValueError as exc:
            raise InputError(f"line {line_no} is not a decimal integer: {line!r}") from exc
    return ExactSequence.of(terms)


def render_sequence(seq: ExactSequence, fmt: str = "lines") -> str:
    if fmt == "lines":
        return "\n".join(str(t) for t in seq.terms) + "\n"
    if fmt == "json":
        return json.dumps([str(t) for t in seq.terms]) + "\n"
    raise InputError(f"unknown sequence format {fmt!r}")


def parse_polynomial(text: str) -> IntPolynomial:
    """Read a polynomial: JSON array of decimal strings, lowest degree first."""
    try:
        data = json.loads(text.strip())
    except json.JSONDecodeError as exc:
        raise InputError(f"bad JSON polynomial: {exc}") from exc
    if not isinstance(data, list):
        raise InputError("polynomial must be a JSON array of decimal strings")
    coeffs = []
    for v in data:
        if isinstance(v, str):
            try:
                coeffs.append(int(v))
            except ValueError as exc:
                raise InputError(f"not a decimal integer string: {v!r}") from exc
        elif isinstance(v, int) and not isinstance(v, bool):
            coeffs.append(v)
        else:
            raise InputError(f"polynomial coefficients must be decimal strings, got {v!r}")
    return IntPolynomial(tuple(coeffs))


def render_polynomial(poly: IntPolynomial) -> str:
    return json.dumps([str(c) for c in poly.coefficients])


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _valuation_value(v):
    return "inf" if v == math.inf else v


def congruence_json_obj(report: CongruenceReport) -> dict:
    return {
        "mode": report.mode,
        "length": report.length,
        "checked_pairs": report.checked_pairs,
        "ok": report.ok,
        "violations": [
            {"n": v.n, "modulus": v.modulus, "lhs_residue": v.lhs_residue,
             "rhs_residue": v.rhs_residue}
            for v in report.violations
        ],
    }


def congruence_csv(report: CongruenceReport) -> str:
    lines = ["n,modulus,lhs_residue,rhs_residue"]
    lines += [f"{v.n},{v.modulus},{v.lhs_residue},{v.rhs_residue}"
              for v in report.violations]
    return "\n".join(lines) + "\n"


def hankel_json_obj(records) -> list[dict]:
    out = []
    for rec in records:
        out.append(
            {
                "n": rec.n,
                "det": str(rec.det),
                "required_divisor": str(rec.required_divisor),
                "divisible": rec.divisible,
                "normalized_growth": rec.normalized_growth,
                "valuations": {
                    str(p): {"required": req, "actual": _valuation_value(act)}
                    for p, req, act in rec.valuations
                },
            }
        )
    return out


def hankel_csv(records) -> str:
    lines = ["n,det,required_divisor,divisible,normalized_growth"]
    for rec in records:
        growth = "" if rec.normalized_growth is None else repr(rec.normalized_growth)
        lines.append(
            f"{rec.n},{rec.det},{rec.required_divisor},"
            f"{'true' if rec.divisible else 'false'},{growth}"
        )
    return "\n".join(lines) + "\n"


def invariance_json_obj(report: InvarianceReport) -> dict:
    return {
        "passed": report.passed,
        "checked_max": report.checked_max,
        "first_failure": None
        if report.first_failure is None
        else {"n": report.first_failure[0], "check": report.first_failure[1]},
    }


def rationality_json_obj(detection: RationalityDetection) -> dict:
    obj = {
        "rational": detection.function is not None,
        "window": detection.window,
        "zero_run": detection.zero_run,
        "det_table": [str(d) for d in detection.det_table],
    }
    if detection.function is not None:
        func = detection.function
        obj.update(
            {
                "order": func.order,
                "numerator": str(func.numerator),
                "denominator": str(func.denominator),
                "numerator_coefficients": [str(c) for c in func.numerator.coefficients],
                "denominator_coefficients": [
                    str(c) for c in func.denominator.coefficients
                ],
            }
        )
    return obj


def rationality_csv(detection: RationalityDetection) -> str:
    lines = ["n,det"]
    lines += [f"{n},{d}" for n, d in enumerate(detection.det_table, start=1)]
    return "\n".join(lines) + "\n"


def singularity_json_obj(report: SingularityReport) -> dict:
    return {
        "poles": [[z.real, z.imag] for z, _ in report.poles],
        "multiplicities": [m for _, m in report.poles],
        "directions": list(report.directions),
        "direction_count": report.direction_count,
        "radius": report.radius,
    }


def theta_csv(n_max: int) -> str:
    """Rows n = 0..n_max with theta(n), the partial sum over k < n, and the
    partial sum divided by n^2 / 2 (empty at n = 0)."""
    if n_max < 0:
        raise InputError("n_max must be >= 0")
    flags = sieve_flags(n_max)
    lines = ["n,theta,partial_sum,ratio"]
    theta = 0.0
    partial = 0.0  # sum of theta(k) for k < n
    for n in range(n_max + 1):
        ratio = "" if n == 0 else repr(partial / (n * n / 2))
        if flags[n]:
            theta += math.log(n)
        lines.append(f"{n},{theta!r},{partial!r},{ratio}")
        partial += theta
    return "\n".join(lines) + "\n"


def audit_json_obj(report: AuditReport) -> dict:
    obj = {
        "schema": "ruzsa-audit/1",
        "length": report.length,
        "config": {
            "growth_bound": report.config.growth_bound,
            "window": report.config.window,
            "n_max": report.config.n_max,
            "residual_tol": report.config.residual_tol,
            "direction_tol": report.config.direction_tol,
        },
        "congruence": congruence_json_obj(report.congruence),
        "growth": {
            "tail_sup": report.growth.tail_sup,
            "tail_start": report.growth.tail_start,
            "per_n": list(report.growth.per_n),
            "below_bound": report.growth_below_bound,
        },
        "hankel": hankel_json_obj(report.hankel),
        "rationality": rationality_json_obj(report.rationality),
        "singularities": None
        if report.singularities is None
        else singularity_json_obj(report.singularities),
        "denominator_is_power_of_one_minus_x": report.denominator_is_power_of_one_minus_x,
        "verdict": report.verdict,
        "degree": report.degree,
    }
    return obj


def audit_csv(report: AuditReport) -> str:
    """One-row summary; the JSON report carries the full evidence."""
    func = report.rationality.function
    fields = [
        ("verdict", report.verdict),
        ("degree", "" if report.degree is None else report.degree),
        ("length", report.length),
        ("congruence_checked", report.congruence.checked_pairs),
        ("congruence_violations", len(report.congruence.violations)),
        ("growth_tail_sup", repr(report.growth.tail_sup)),
        ("growth_below_bound", str(report.growth_below_bound).lower()),
        ("hankel_orders", len(report.hankel)),
        ("hankel_all_divisible", str(all(r.divisible for r in report.hankel)).lower()),
        ("rational", str(func is not None).lower()),
        ("order", "" if func is None else func.order),
        ("numerator", "" if func is None else str(func.numerator)),
        ("denominator", "" if func is None else str(func.denominator)),
        (
            "denominator_is_power_of_one_minus_x",
            ""
            if report.denominator_is_power_of_one_minus_x is None
            else str(report.denominator_is_power_of_one_minus_x).lower(),
        ),
        (
            "direction_count",
            "" if report.singularities is None else report.singularities.direction_count,
        ),
        ("radius", "" if report.singularities is None else repr(report.singularities.radius)),
        ("zero_run", report.rationality.zero_run),
    ]
    header = ",".join(name for name, _ in fields)
    row = ",".join(str(value) for _, value in fields)
    return header + "\n" + row + "\n"
