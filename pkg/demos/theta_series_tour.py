#!/usr/bin/env python3
"""Theta series of root lattices, two ways.

The theta series of a positive-definite even lattice lists how many vectors
it has of each norm.  For the root lattices A_n and D_n there are classical
closed forms built from the Jacobi theta function; this demo computes those
and confronts them, coefficient by coefficient, with exhaustive counting.
"""

from latq import lattices as lt
from latq import qseries as qs

PREC = 24


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Jacobi building block")
t3 = qs.theta3(8)
print("theta3(tau) starts:", [t3.coefficient(e / 2) for e in range(9)], "on the half-integer grid")
print("theta3(tau + 1)   :", [qs.shift_tau_by_one(t3).coefficient(e / 2) for e in range(9)])
print("theta3(6 tau)     :", [qs.scale_tau(t3, 6).coefficient(e) for e in range(8)])

section("Closed forms vs exhaustive counting")
pairs = [
    ("A5", qs.theta_A(5, PREC), lt.A(5)),
    ("D6", qs.theta_D(6, PREC), lt.D(6)),
    ("A2", qs.theta_A(2, PREC), lt.A(2)),
]
for name, closed, lattice in pairs:
    enum = lt.theta_counts(lattice, PREC)
    match = list(closed.coeffs) == enum
    print(f"{name}: first coefficients {list(closed.coeffs[:7])} ... closed == enumerated: {match}")

section("A direct sum multiplies theta series")
a1d4 = qs.theta_A(1, PREC) * qs.theta_D(4, PREC)
enum = lt.theta_counts(lt.standard_lattice("A1+D4"), PREC)
print("A1+D4 via product    :", list(a1d4.coeffs[:7]))
print("A1+D4 via enumeration:", enum[:7])
print("agree:", list(a1d4.coeffs) == enum)

section("The counting combination behind the degree thresholds")
d6 = qs.theta_D(6, 103)
a5 = qs.theta_A(5, 103)
a1d4 = qs.theta_A(1, 103) * qs.theta_D(4, 103)
comb = 5 * d6 - 30 * a1d4 - 16 * a5
negatives = [m for m in range(1, 103) if comb.coeffs[m] < 0]
print("5*D6 - 30*(A1+D4) - 16*A5 has negative coefficients exactly at:", negatives)
print("(everything from 20 on, and 17, is positive)")
