#!/usr/bin/env python3
"""Classifying polarisation vectors of the rank-23 lattice 3U+2E8(-1)+<-2t>.

A primitive vector h of norm 2d is pinned down, up to the stable orthogonal
group, by its divisor f and a residue c mod f; existence and the number of
orbits follow from the congruence f^2 | d + c^2 t.  The closed case-split
formula is compared against direct residue counting, and the orthogonal
complement of h is computed both abstractly and through the generic lattice
kernel machinery.
"""

from math import gcd

from latq import lattices as lt
from latq import polarisation as po


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Divisor 1 and 2 are the uniquely-determined cases")
print("f=1 always gives exactly one orbit; a sample:")
for t, d in [(1, 5), (4, 9), (7, 3)]:
    rep = po.orbit_count_formula(t, d, 1)
    print(f"  t={t}, d={d}: exists={rep.exists}, orbits={rep.count}")
print("f=2 exists exactly when d + t = 0 mod 4:")
for t, d in [(3, 1), (3, 2), (1, 7), (5, 5)]:
    count = po.orbit_count_oracle(t, d, 2)
    print(f"  t={t}, d={d}: d+t={d+t}, orbits={count}")

section("Larger divisors give zero or several orbits")
shown = 0
for t in range(2, 31):
    for d in range(2, 31):
        g = gcd(2 * t, 2 * d)
        for f in range(3, g + 1):
            if g % f:
                continue
            rep = po.orbit_count_formula(t, d, f)
            oracle = po.orbit_count_oracle(t, d, f)
            assert rep.count == oracle
            if rep.count > 1 and shown < 6:
                print(f"  t={t:2d}, d={d:2d}, f={f}: case {rep.case:>16s}, orbits={rep.count}, witnesses c = {po.orbit_witnesses(t, d, f)}")
                shown += 1

section("The rank-2 tail of the orthogonal complement")
t, d, f, c = 3, 1, 2, 1
bmat = po.perp_gram(t, d, f, c)
print(f"t={t}, d={d}, f={f}, c={c}: B = {bmat}, det = {bmat[0][0]*bmat[1][1]-bmat[0][1]**2} = 4dt/f^2")
amb = lt.direct_sum(lt.U(), lt.span(-2 * t))
b = (d + c * c * t) // (f * f)
h = (f, f * b, c)
print(f"explicit vector h = {h} in U + <-6>: norm {lt.norm(amb, h)}, divisor {lt.divisor(amb, h)}")
print("complement via the generic kernel:", lt.orthogonal_complement(amb, [h]).gram)

section("How much bigger the full stabilizer is than the stable one")
print(" t  f  index  (equal groups exactly when the index is 1)")
for t, d, f in [(1, 5, 1), (6, 5, 1), (4, 3, 2), (8, 2, 2), (9, 3, 3), (12, 9, 3)]:
    try:
        idx = po.stable_index_formula(t, d, f)
        assert idx == po.stable_index_oracle(t, d, f)
        print(f"{t:2d} {f:2d}  {idx}")
    except po.HypothesisViolation as exc:
        print(f"{t:2d} {f:2d}  refused ({exc})")

section("Discriminant automorphisms form an elementary abelian 2-group")
print("orders for t = 1..16:", [po.disc_auto_order(t) for t in range(1, 17)])
dg = lt.discriminant_group(lt.hyperkahler_lattice(6))
print("discriminant group of 3U+2E8(-1)+<-12> is cyclic of order", dg.order)
