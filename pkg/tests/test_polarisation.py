from math import gcd

import pytest

from latq import lattices as lt
from latq import polarisation as po


def divisors_of_gcd(t, d):
    g = gcd(2 * t, 2 * d)
    return [f for f in range(1, g + 1) if g % f == 0]


def test_query_invariants():
    q = po.PolarisationQuery.build(6, 3, 3)
    assert (q.g, q.w, q.g1, q.f1, q.t1, q.d1) == (2, 1, 2, 3, 2, 1)
    with pytest.raises(ValueError):
        po.PolarisationQuery.build(1, 1, 4)


def test_split_case_always_one_orbit():
    for t in range(1, 12):
        for d in range(1, 12):
            rep = po.orbit_count_formula(t, d, 1)
            assert rep.exists and rep.count == 1 and rep.witness_c == 0


def test_f2_congruence_rule():
    for t in range(1, 20):
        for d in range(1, 20):
            if gcd(2 * t, 2 * d) % 2:
                continue
            count = po.orbit_count_oracle(t, d, 2)
            assert (count == 1) == ((d + t) % 4 == 0)
            assert count <= 1


def test_formula_matches_oracle_sweep():
    for t in range(1, 21):
        for d in range(1, 21):
            for f in divisors_of_gcd(t, d):
                rep = po.orbit_count_formula(t, d, f)
                assert rep.count == po.orbit_count_oracle(t, d, f), (t, d, f)


def test_multiplicity_dichotomy():
    # f <= 2 gives at most one orbit; f > 2 gives zero or more than one
    for t in range(1, 31):
        for d in range(1, 31):
            for f in divisors_of_gcd(t, d):
                count = po.orbit_count_oracle(t, d, f)
                if f <= 2:
                    assert count <= 1
                else:
                    assert count != 1, (t, d, f)


def test_existence_symmetry():
    for t in range(1, 25):
        for d in range(1, 25):
            for f in divisors_of_gcd(t, d):
                a = po.orbit_count_oracle(t, d, f) > 0
                b = po.orbit_count_oracle(d, t, f) > 0
                assert a == b


def test_orbit_example_multi():
    rep = po.orbit_count_formula(6, 3, 3)
    assert rep.exists and rep.count == 2 and rep.case == "i"


def test_perp_gram_examples():
    assert po.perp_gram(3, 1, 2, 1) == ((-2, 3), (3, -6))
    for t, d in [(1, 1), (2, 5), (3, 7)]:
        b = po.perp_gram(t, d, 1, 0)
        assert b == ((-2 * d, 0), (0, -2 * t))
    with pytest.raises(ValueError):
        po.perp_gram(3, 1, 2, 2)  # c not coprime to f


def test_perp_gram_properties():
    for t in range(1, 16):
        for d in range(1, 16):
            for f in divisors_of_gcd(t, d):
                for c in po.orbit_witnesses(t, d, f):
                    bmat = po.perp_gram(t, d, f, c)
                    det = bmat[0][0] * bmat[1][1] - bmat[0][1] ** 2
                    assert det == 4 * d * t // (f * f)
                    assert bmat[0][0] < 0 and det > 0  # negative definite
                    q = po.PolarisationQuery.build(t, d, f)
                    b = (d + c * c * t) // (f * f)
                    entries_gcd = gcd(gcd(abs(bmat[0][0]), abs(bmat[0][1])), abs(bmat[1][1]))
                    assert entries_gcd == q.g1 * gcd(2 * b // q.g1, q.w)


def test_perp_gram_matches_lattice_complement():
    # the complement computed by the generic kernel machinery agrees with the
    # stated 2x2 Gram up to a unimodular change of basis
    for t, d, f, c in [(3, 1, 2, 1), (6, 3, 3, 1), (1, 3, 2, 1), (5, 4, 2, 1), (6, 3, 3, 2)]:
        if (d + c * c * t) % (f * f):
            continue
        b = (d + c * c * t) // (f * f)
        amb = lt.direct_sum(lt.U(), lt.span(-2 * t))
        h = (f, f * b, c)
        assert lt.divisor(amb, h) == f and lt.norm(amb, h) == 2 * d
        perp = lt.orthogonal_complement(amb, [h])
        bmat = po.perp_gram(t, d, f, c)
        detp = perp.det
        detb = bmat[0][0] * bmat[1][1] - bmat[0][1] ** 2
        assert detp == detb
        # compare reduced positive definite forms of the negations
        ra = _gauss_reduce(-perp.gram[0][0], -perp.gram[0][1], -perp.gram[1][1])
        rb = _gauss_reduce(-bmat[0][0], -bmat[0][1], -bmat[1][1])
        assert ra == rb, (t, d, f, c, ra, rb)


def _gauss_reduce(a, b, c):
    """GL2(Z)-canonical (a, |b|, c) of the positive definite Gram
    [[a, b], [b, c]]: classical reduction to |2b| <= a <= c."""
    assert a > 0 and a * c - b * b > 0
    while True:
        k = (2 * b + a) // (2 * a)  # nearest integer to b/a (ties go down)
        if k:
            c = c - 2 * k * b + k * k * a
            b = b - k * a
            continue
        if c < a:
            a, b, c = c, -b, a
            continue
        return a, abs(b), c


def test_stable_index_examples():
    assert po.stable_index_formula(1, 5, 1) == 1
    assert po.stable_index_formula(1, 3, 2) == 1
    # f = t odd forces index 1 (the two groups coincide)
    for t in (3, 5, 9, 15):
        for d in range(1, 30):
            if gcd(2 * t, 2 * d) % t:
                continue
            try:
                assert po.stable_index_formula(t, d, t) == 1
            except po.HypothesisViolation:
                pass
    assert po.stable_index_formula(6, 5, 1) == 4  # rho(6) = 2


def test_stable_index_formula_matches_oracle():
    for t in range(1, 31):
        for d in range(1, 31):
            for f in divisors_of_gcd(t, d):
                try:
                    a = po.stable_index_formula(t, d, f)
                except po.HypothesisViolation:
                    with pytest.raises(po.HypothesisViolation):
                        po.stable_index_oracle(t, d, f)
                    continue
                b = po.stable_index_oracle(t, d, f)
                assert a == b
                assert a & (a - 1) == 0  # power of two


def test_stable_index_refuses_w_not_1():
    with pytest.raises(po.HypothesisViolation):
        po.stable_index_formula(4, 4, 4)


def test_disc_auto_order():
    assert po.disc_auto_order(1) == 1
    assert po.disc_auto_order(2) == 2
    for t in range(1, 101):
        n = po.disc_auto_order(t)
        # elementary abelian 2-group: order is a power of two
        assert n & (n - 1) == 0
        group = [x for x in range(2 * t) if (x * x - 1) % (4 * t) == 0]
        for x in group:
            for y in group:
                assert ((x * y) % (2 * t)) in group
