#!/usr/bin/env python3
"""Congruence-preserving sequences: what they are and how to build them.

A sequence preserves congruences when a_{n+k} = a_n (mod k) for all n, k;
the primary variant only asks this for prime k.  Every integer polynomial
gives one; the interesting question is which other sequences do.
"""
import random

from pseudopoly import (
    ExactSequence,
    IntPolynomial,
    check_congruences,
    eval_polynomial_sequence,
    generate_hall_like,
    generate_primary,
    growth_rate,
    polynomial_certificate,
)

rng = random.Random(42)

print("=" * 70)
print("1. Polynomial sequences preserve congruences")
print("=" * 70)
cubic = IntPolynomial.of([2, -7, 0, 1])  # x^3 - 7x + 2
seq = eval_polynomial_sequence(cubic, 12)
print(f"P = {cubic},  P(0..11) = {list(seq)}")
rep = check_congruences(seq, "full")
print(f"full congruence check: {rep.checked_pairs} pairs, ok = {rep.ok}")
print(f"difference certificate: degree {polynomial_certificate(seq)}")

print()
print("=" * 70)
print("2. Geometric growth breaks them")
print("=" * 70)
pow2 = ExactSequence.of([2**n for n in range(12)])
rep = check_congruences(pow2, "primary")
print(f"2^n primary check: ok = {rep.ok}")
for v in rep.violations[:3]:
    print(f"  violation: a_{v.n + v.modulus} = {v.lhs_residue} but "
          f"a_{v.n} = {v.rhs_residue}  (mod {v.modulus})")
print(f"  ... {len(rep.violations)} violations total")

print()
print("=" * 70)
print("3. Generator A: primorial-scaled transform coefficients")
print("=" * 70)
c = [rng.randint(-5, 5) for _ in range(16)]
gen = generate_primary(c, 16)
print(f"coefficients c = {c}")
print(f"sequence       = {list(gen)}")
rep = check_congruences(gen, "primary")
print(f"primary check: {rep.checked_pairs} pairs, ok = {rep.ok} (verified, not assumed)")
print(f"certificate: {polynomial_certificate(gen)}  (None means no polynomial pattern)")

print()
print("=" * 70)
print("4. Generator B: minimal CRT solutions plus a free perturbation")
print("=" * 70)
pert = [0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0]
hall = generate_hall_like(12, pert)
print(f"perturbation = {pert}")
print(f"sequence     = {list(hall)}")
rep = check_congruences(hall, "full")
print(f"full check: ok = {rep.ok}; certificate: {polynomial_certificate(hall)}")
g = growth_rate(hall)
print(f"growth proxy tail_sup = {g.tail_sup:.3f} over n >= {g.tail_start}")
print("(the perturbed construction grows roughly like lcm(1..n) ~ e^n)")
