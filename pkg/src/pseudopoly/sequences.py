"""Construction and auditing of integer sequences: polynomial sequences,
congruence checks, growth estimation, polynomiality certificates, and two
congruence-preserving generators.

All "for all n" statements are checked on every index the prefix supports;
reports record the checked range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd, lcm
from typing import NamedTuple, Sequence

from .binomial import inverse_binomial_transform, primorials
from .core import (
    ExactSequence,
    IntPolynomial,
    InputError,
    InternalInvariantError,
    log_abs_exact,
)
from .primes import sieve_primes


class Violation(NamedTuple):
    n: int
    modulus: int
    lhs_residue: int  # a_{n+modulus} mod modulus
    rhs_residue: int  # a_n mod modulus


@dataclass(frozen=True)
class CongruenceReport:
    """Result of checking a_{n+m} = a_n (mod m) over a prefix."""

    mode: str  # "primary" (prime moduli) or "full" (all moduli)
    length: int  # prefix length that was checked
    checked_pairs: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class GrowthReport:
    """Finite-prefix growth proxy: per-term n-th roots and their tail maximum.

    ``tail_sup`` is max of ``per_n`` over the upper half of the prefix.  This
    is a heuristic stand-in for limsup |a_n|^(1/n), not a proof of anything.
    """

    tail_sup: float
    per_n: tuple[float, ...]
    tail_start: int


def eval_polynomial_sequence(poly: IntPolynomial, length: int) -> ExactSequence:
    """The integer sequence (P(0), ..., P(length-1))."""
    if length < 1:
        raise InputError("length must be >= 1")
    return ExactSequence.of(poly(n) for n in range(length))


def check_congruences(seq: ExactSequence, mode: str = "primary") -> CongruenceReport:
    """Check the congruence-preservation property over the whole prefix.

    mode="primary" checks a_{n+p} = a_n (mod p) for every prime p with
    n + p inside the prefix; mode="full" checks every modulus k >= 1.
    Violations are listed in lexicographic (n, modulus) order.
    """
    if mode not in ("primary", "full"):
        raise InputError(f"unknown mode {mode!r}")
    a = seq.integer_terms()
    n_terms = len(a)
    if n_terms < 2:
        raise InputError("need at least 2 terms to check congruences")
    if mode == "primary":
        moduli = sieve_primes(n_terms - 1)
    else:
        moduli = list(range(1, n_terms))
    checked = 0
    violations = []
    for n in range(n_terms - 1):
        for m in moduli:
            if n + m > n_terms - 1:
                break
            checked += 1
            if (a[n + m] - a[n]) % m != 0:
                violations.append(Violation(n, m, a[n + m] % m, a[n] % m))
    return CongruenceReport(mode, n_terms, checked, tuple(violations))


def growth_rate(seq: ExactSequence) -> GrowthReport:
    """Per-term |a_n|^(1/n) and the max over the upper half of the prefix.

    ``per_n[0]`` is a placeholder 0.0 (no n-th root is defined at n = 0);
    terms equal to zero also report 0.0.
    """
    n_terms = len(seq)
    if n_terms < 4:
        raise InputError("growth estimation needs at least 4 terms")
    per_n = [0.0] * n_terms
    for n in range(1, n_terms):
        t = seq[n]
        if t != 0:
            per_n[n] = math.exp(log_abs_exact(t) / n)
    tail_start = (n_terms + 1) // 2  # ceil(N/2)
    tail_sup = max(per_n[tail_start:], default=0.0)
    return GrowthReport(tail_sup, tuple(per_n), tail_start)


def polynomial_certificate(seq: ExactSequence) -> int | None:
    """Smallest d whose order-(d+1) forward differences vanish on the prefix.

    Demands at least two zero witnesses (prefix length >= d + 3) to reduce
    false positives; returns None when no such d exists.  A returned d is a
    prefix-level certificate only, not a statement about the full sequence.
    """
    n_terms = len(seq)
    if n_terms < 3:
        raise InputError("certificate needs at least 3 terms")
    diffs = list(seq.terms)
    for d in range(n_terms - 2):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        if all(x == 0 for x in diffs):
            return d
    return None


def generate_primary(coeffs: Sequence[int] | ExactSequence, length: int) -> ExactSequence:
    """Generate a sequence passing the primary congruence check.

    Scales coeffs[n] by the n-th primorial and applies the inverse binomial
    transform.  The primary congruence property of the result is verified,
    not assumed; a verification failure raises InternalInvariantError.
    """
    if length < 1:
        raise InputError("length must be >= 1")
    if isinstance(coeffs, ExactSequence):
        c = coeffs.integer_terms()
    else:
        c = [int(v) for v in coeffs]
    if len(c) < length:
        raise InputError(f"need at least {length} coefficients, got {len(c)}")
    table = primorials(length - 1)
    b = ExactSequence.of(table[n] * c[n] for n in range(length))
    result = inverse_binomial_transform(b)
    if length >= 2:
        report = check_congruences(result, "primary")
        if not report.ok:
            raise InternalInvariantError(
                "generated sequence failed the primary congruence check at "
                f"{report.violations[0]}; primorial divisibility of the "
                "transform did not force the congruences"
            )
    return result


def _crt_combine(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Solve x = r1 (mod m1), x = r2 (mod m2); returns (x, lcm) with 0 <= x < lcm."""
    g = gcd(m1, m2)
    if (r2 - r1) % g != 0:
        raise InternalInvariantError(
            f"inconsistent congruence system: x={r1} (mod {m1}), x={r2} (mod {m2})"
        )
    m2g = m2 // g
    t = ((r2 - r1) // g) * pow(m1 // g, -1, m2g) % m2g
    modulus = m1 * m2g
    return (r1 + m1 * t) % modulus, modulus


def generate_hall_like(length: int, perturbation: Sequence[int]) -> ExactSequence:
    """Inductive congruence-preserving construction with a free perturbation.

    Term n is the smallest nonnegative solution mod lcm(1..n) of
    x = a_{n-k} (mod k) for k = 1..n, shifted by perturbation[n] * lcm(1..n).
    The system is consistent because the prefix already preserves
    congruences, so the result passes the full congruence check by
    construction.
    """
    if length < 1:
        raise InputError("length must be >= 1")
    pert = [int(v) for v in perturbation]
    if len(pert) < length:
        raise InputError(f"need at least {length} perturbation entries, got {len(pert)}")
    a = [pert[0]]
    for n in range(1, length):
        x, modulus = 0, 1
        for k in range(1, n + 1):
            x, modulus = _crt_combine(x, modulus, a[n - k] % k, k)
        if modulus != lcm(*range(1, n + 1)):
            raise InternalInvariantError("combined modulus is not lcm(1..n)")
        a.append(x + pert[n] * modulus)
    return ExactSequence.of(a)
