"""Chebyshev theta, the exact primorial-power exponent identity, asymptotic
ratios, capacity bounds for hedgehog compacts, a Leja-point transfinite
diameter estimator, and singular-direction extraction for rational
functions.

The exponent identity is verified as exact integer counting, never as a
floating-point log comparison; only the explicitly approximate quantities
(theta sums, capacity estimates, polynomial roots) use doubles.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import InputError, NumericError
from .hankel import RationalFunction
from .polyarith import from_int_polynomial, squarefree_factors
from .primes import sieve_flags, sieve_primes

DIRECTION_TOL = 1e-6  # radians; argument clustering for singular directions
RESIDUAL_TOL = 1e-9  # relative residual accepted from the root finder


@dataclass(frozen=True)
class Hedgehog:
    """Union of segments from 0 to each endpoint.

    Endpoints must be nonzero with pairwise distinct arguments (within
    DIRECTION_TOL), so the segments only meet at the origin.
    """

    endpoints: tuple[complex, ...]

    def __post_init__(self):
        if not isinstance(self.endpoints, tuple):
            object.__setattr__(self, "endpoints", tuple(self.endpoints))
        if len(self.endpoints) < 1:
            raise InputError("a hedgehog needs at least one endpoint")
        pts = tuple(complex(z) for z in self.endpoints)
        object.__setattr__(self, "endpoints", pts)
        for z in pts:
            if z == 0:
                raise InputError("hedgehog endpoints must be nonzero")
        args = [cmath.phase(z) for z in pts]
        for i in range(len(args)):
            for j in range(i + 1, len(args)):
                d = abs(args[i] - args[j])
                if min(d, 2 * math.pi - d) <= DIRECTION_TOL:
                    raise InputError(
                        f"endpoints {pts[i]} and {pts[j]} share a direction; "
                        "segments must be disjoint away from 0"
                    )

    @property
    def spike_count(self) -> int:
        return len(self.endpoints)


@dataclass(frozen=True)
class SingularityReport:
    """Poles of a rational function with their argument classes.

    ``directions`` are the distinct principal arguments of the poles,
    clustered at DIRECTION_TOL and sorted ascending; ``radius`` is the
    smallest pole modulus.
    """

    poles: tuple[tuple[complex, int], ...]  # (location, multiplicity)
    directions: tuple[float, ...]
    direction_count: int
    radius: float


def chebyshev_theta(x: float) -> float:
    """Sum of log p over primes p <= x, accumulated in ascending order."""
    if x < 0:
        raise InputError("theta is defined for x >= 0")
    total = 0.0
    for p in sieve_primes(int(math.floor(x))):
        total += math.log(p)
    return total


@dataclass(frozen=True)
class ExponentIdentityReport:
    """Per-prime comparison of counted against required exponents."""

    n: int
    passed: bool
    per_prime: tuple[tuple[int, int, int], ...]  # (prime, counted, required)


def exponent_identity_check(n: int) -> ExponentIdentityReport:
    """Verify, by exact counting, that the summed theta values up to n - 1
    carry each prime p <= n - 1 with multiplicity exactly n - p.

    The left side is counted by decomposing every theta term into its
    primes; no logarithm is evaluated, so the verdict is exact.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    primes = sieve_primes(n - 1)
    counted = {p: 0 for p in primes}
    for k in range(n):
        for p in primes:
            if p > k:
                break
            counted[p] += 1
    per_prime = tuple((p, counted[p], n - p) for p in primes)
    passed = all(c == r for _, c, r in per_prime)
    return ExponentIdentityReport(n, passed, per_prime)


@dataclass(frozen=True)
class ExponentIdentitySweep:
    checked_max: int
    passed: bool
    first_failure: int | None


def exponent_identity_sweep(n_max: int) -> ExponentIdentitySweep:
    """Run the exponent identity check for every n = 1..n_max.

    Counts incrementally (each k contributes one unit to every prime <= k)
    so the whole sweep costs what a single check at n_max does.
    """
    if n_max < 1:
        raise InputError("n_max must be >= 1")
    primes = sieve_primes(n_max - 1)
    counted = {p: 0 for p in primes}
    for n in range(1, n_max + 1):
        k = n - 1
        for p in primes:
            if p > k:
                break
            counted[p] += 1
        for p in primes:
            if p > n - 1:
                break
            if counted[p] != n - p:
                return ExponentIdentitySweep(n_max, False, n)
    return ExponentIdentitySweep(n_max, True, None)


def theta_partial_sum(n: int) -> float:
    """Sum of theta(k) for k = 0..n-1 via one sieve and a running total."""
    if n < 1:
        raise InputError("n must be >= 1")
    flags = sieve_flags(n - 1)
    theta = 0.0
    total = 0.0
    for k in range(n):
        if flags[k]:
            theta += math.log(k)
        total += theta
    return total


def asymptotic_ratio(n: int) -> float:
    """Partial theta sum divided by n^2 / 2.

    Tends to 1 as n grows (prime number theorem); well below 1 for small n
    because theta undercounts there.
    """
    if n < 10:
        raise InputError("the ratio is meaningful for n >= 10")
    return theta_partial_sum(n) / (n * n / 2)


def dubinin_bound(hedgehog: Hedgehog) -> float:
    """Sharp upper bound max|endpoint| / 4^(1/r) for the transfinite
    diameter of a hedgehog with r spikes; equality holds exactly for the
    vertices of a regular r-gon centered at the origin."""
    r = hedgehog.spike_count
    return max(abs(z) for z in hedgehog.endpoints) / 4 ** (1 / r)


def polya_bound_for_series(rho: float, r: int) -> float:
    """Capacity-driven ceiling 1 / (4^(1/r) * rho) on the normalized Hankel
    determinant growth of a series with convergence radius rho and at most
    r singular directions."""
    if rho <= 0:
        raise InputError("rho must be positive")
    if r < 1:
        raise InputError("r must be a positive integer")
    return 1 / (4 ** (1 / r) * rho)


def estimate_transfinite_diameter(
    hedgehog: Hedgehog, leja_points: int = 64, discretization: int = 2048
) -> float:
    """Greedy Leja estimate of the transfinite diameter of a hedgehog.

    Each spike is discretized into ``discretization`` uniform points; the
    first Leja point is a maximum-modulus endpoint and every subsequent
    point maximizes the product of distances to those already chosen.

    The raw pairwise geometric mean of an m-point configuration,
    (prod_{i<j} |z_i - z_j|)^(2/(m(m-1))), overshoots the diameter by a
    factor 1 + O(log m / m).  The leading term is removed by fitting it
    against the half-size configuration drawn from the same Leja sequence,
    which leaves a slightly-low estimate of the true diameter (for m < 5
    the fit is ill-posed and the raw mean is returned).
    """
    m = leja_points
    if m < 2:
        raise InputError("need at least 2 Leja points")
    if discretization < 16:
        raise InputError("need at least 16 discretization points per spike")
    spikes = [
        np.linspace(0.0 + 0.0j, complex(z), discretization)
        for z in hedgehog.endpoints
    ]
    candidates = np.concatenate(spikes)
    distinct = len(candidates) - (len(spikes) - 1)  # origin shared by all spikes
    if m > distinct:
        raise InputError(
            f"{m} Leja points need at least {m} distinct candidates, have {distinct}"
        )
    start_spike = int(np.argmax([abs(z) for z in hedgehog.endpoints]))
    selected = np.empty(m, dtype=complex)
    selected[0] = spikes[start_spike][-1]
    increments = []  # log prod of distances from each new point to the chosen ones
    with np.errstate(divide="ignore"):
        log_dist = np.log(np.abs(candidates - selected[0]))
        for t in range(1, m):
            pick = int(np.argmax(log_dist))
            increments.append(float(log_dist[pick]))
            selected[t] = candidates[pick]
            log_dist += np.log(np.abs(candidates - selected[t]))

    def log_pairwise_mean(t: int) -> float:
        return 2 * sum(increments[: t - 1]) / (t * (t - 1))

    raw = log_pairwise_mean(m)
    half = m // 2
    if half < 2:
        return math.exp(raw)
    u_half, u_full = math.log(half) / half, math.log(m) / m
    if abs(u_half - u_full) < 1e-12:
        return math.exp(raw)
    slope = (log_pairwise_mean(half) - raw) / (u_half - u_full)
    return math.exp(raw - slope * u_full)


def _cluster_directions(args: list[float], tol: float) -> list[float]:
    """Distinct argument classes: chained clustering with 2*pi wraparound."""
    if not args:
        return []
    ordered = sorted(args)
    clusters = [[ordered[0]]]
    for a in ordered[1:]:
        if a - clusters[-1][-1] <= tol:
            clusters[-1].append(a)
        else:
            clusters.append([a])
    if len(clusters) > 1 and (clusters[0][0] + 2 * math.pi) - clusters[-1][-1] <= tol:
        clusters[0] = clusters.pop() + clusters[0]
    return sorted(c[0] for c in clusters)


def singular_directions(
    function: RationalFunction,
    tol: float = RESIDUAL_TOL,
    direction_tol: float = DIRECTION_TOL,
) -> SingularityReport:
    """Locate the poles of a rational function and group their arguments.

    Multiplicities are obtained exactly (squarefree decomposition over the
    rationals), so the root finder only ever sees simple roots; each root
    must pass a relative residual test at ``tol`` or NumericError is
    raised.  Directions are principal arguments clustered at
    ``direction_tol``; the radius is the smallest pole modulus.
    """
    den = function.denominator
    if den.degree < 1:
        raise InputError("denominator must have degree >= 1")
    poles: list[tuple[complex, int]] = []
    for factor, multiplicity in squarefree_factors(from_int_polynomial(den)):
        coeffs = np.array([float(c) for c in reversed(factor)])
        roots = np.roots(coeffs)
        scale = float(np.max(np.abs(coeffs)))
        deg = len(coeffs) - 1
        bad = []
        for z in roots:
            residual = abs(np.polyval(coeffs, z))
            allowed = tol * scale * max(1.0, abs(z)) ** deg
            if residual > allowed:
                bad.append((complex(z), residual))
        if bad:
            raise NumericError(f"root residuals exceed tolerance {tol}: {bad}")
        poles.extend((complex(z), multiplicity) for z in roots)
    poles.sort(key=lambda pm: (pm[0].real, pm[0].imag))
    directions = _cluster_directions([cmath.phase(z) for z, _ in poles], direction_tol)
    radius = min(abs(z) for z, _ in poles)
    return SingularityReport(
        tuple(poles), tuple(directions), len(directions), radius
    )
