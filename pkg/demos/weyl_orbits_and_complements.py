#!/usr/bin/env python3
"""Reflection-group orbits of root sublattices, and orthogonal complements.

The Weyl group of a root lattice acts on embedded configurations of roots;
closing a canonical set of configurations under the simple reflections
splits it into orbits.  Orthogonal complements are computed by exact integer
kernels, and identified up to isometry by backtracking.
"""

from latq import lattices as lt
from latq import weyl


def section(title):
    print()
    print(title)
    print("-" * len(title))


e7 = lt.E7()
e8 = lt.E8()

section("Root systems")
for name, L in (("A2", lt.A(2)), ("A5", lt.A(5)), ("D6", lt.D(6)), ("E7", e7), ("E8", e8)):
    print(f"{name}: rank {L.rank}, determinant {L.det}, {len(lt.roots(L))} roots")

section("Orbits of root configurations")
for L, kind in ((e7, "A1+A1"), (e7, "A2"), (e8, "4A1")):
    objects, orbits, sizes = weyl.orbit_summary(L, kind)
    print(f"{kind:6s} inside {L.label}: {objects:6d} configurations, {orbits} orbit(s), sizes {sizes}")
print("(the two 4A1 orbits are distinguished by whether the four root lines")
print(" extend to a D4 configuration; transitivity fails there and only there)")

section("Orthogonal complements, certified up to isometry")
r = lt.roots(e7)[0]
perp = lt.orthogonal_complement(e7, [r])
print(f"a root's complement in E7: rank {perp.rank}, det {perp.det}, {len(lt.roots(perp))} roots; isometric to D6: {lt.is_isometric(perp, lt.D(6))}")

a = lt.roots(e7)[0]
b = next(s for s in lt.roots(e7) if lt.inner(e7, a, s) == -1)
perp2 = lt.orthogonal_complement(e7, [a, b])
print(f"an A2's complement in E7: rank {perp2.rank}, det {perp2.det}; isometric to A5: {lt.is_isometric(perp2, lt.A(5))}")

d6 = lt.D(6)
perp3 = lt.orthogonal_complement(d6, [lt.roots(d6)[0]])
print(f"a root's complement in D6: det {perp3.det}; isometric to A1+D4: {lt.is_isometric(perp3, lt.standard_lattice('A1+D4'))}")

section("Discriminant groups")
for name in ("A5", "D4", "D6", "E7", "E8", "A1+D4"):
    L = lt.standard_lattice(name)
    dg = lt.discriminant_group(L)
    qs = ", ".join(str(q) for q in dg.q_values)
    print(f"{name:6s}: invariant factors {dg.invariant_factors}, q-values mod 2: [{qs}]")
print("(A1+D4 has no isotropic classes, which is why it is maximal and alone in its genus)")
