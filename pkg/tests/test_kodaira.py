import random

import pytest

from latq import kodaira as ko
from latq import lattices as lt


E7 = lt.E7()


def test_witness_table_rows():
    for d, p, lam in ko.WITNESS_TABLE:
        assert lt.norm(E7, lam) == 2 * d
        assert ko.orthogonal_root_count(lam) == 2 * p


def test_orthogonal_root_count_basics():
    root = lt.roots(E7)[0]
    assert ko.orthogonal_root_count(root) == 60
    assert ko.orthogonal_root_count((2, 1, 2, -2, 0, 0, 1)) == 14
    assert ko.orthogonal_root_count((-1, 2, 3, 1, 2, 1, 3)) == 16
    with pytest.raises(ValueError):
        ko.orthogonal_root_count((0,) * 7)


def test_counts_invariant_under_reflections():
    rng = random.Random(13)
    rts = lt.roots(E7)
    for _ in range(15):
        v = tuple(rng.randint(-2, 2) for _ in range(7))
        if not any(v):
            continue
        w = v
        for _ in range(rng.randint(1, 4)):
            w = lt.reflection(E7, rng.choice(rts), w)
        assert ko.orthogonal_root_count(v) == ko.orthogonal_root_count(w)


def test_coordinate_model_round_trip():
    rng = random.Random(17)
    for _ in range(30):
        lam = tuple(rng.randint(-4, 4) for _ in range(7))
        z = ko.lambda_to_doubled(lam)
        assert ko.doubled_to_lambda(z) == lam
        assert sum(x * x for x in z) == 4 * lt.norm(E7, lam)


def test_search_against_generic_enumeration():
    # certify the symmetry-class search against the Fincke-Pohst kernel
    for d in (1, 2, 3):
        res = ko.search(d)
        counts = sorted(
            {
                ko.orthogonal_root_count(v)
                for v in lt.enumerate_norm(E7, 2 * d)
            }
        )
        eligible = [n for n in counts if n >= 2]
        assert list(res.achievable) == eligible
        assert res.shell_size == len(lt.enumerate_norm(E7, 2 * d))


def test_search_small_degrees():
    res = ko.search(1)
    assert res.achievable == (60,)
    assert res.min_orthogonal == 60
    assert lt.norm(E7, res.witness) == 2
    assert ko.search(9).achievable[0] == 16
    assert ko.search(11).achievable[0] == 16
    assert ko.search(10).achievable[0] == 18


def test_search_witness_properties():
    for d in (12, 13, 19):
        res = ko.search(d)
        assert lt.norm(E7, res.witness) == 2 * d
        assert ko.orthogonal_root_count(res.witness) == res.min_orthogonal
        assert res.min_orthogonal <= 14
        assert res.success
        # deterministic
        assert ko.search(d).witness == res.witness


def test_achievable_counts_are_even():
    for d in (1, 2, 5, 9, 12):
        res = ko.search(d)
        assert all(n % 2 == 0 for n in res.achievable)
        assert all(2 <= n <= 126 for n in res.achievable)


def test_weight():
    assert ko.weight(14) == 19
    assert ko.weight(16) == 20
    assert ko.weight(2) == 13
    with pytest.raises(ValueError):
        ko.weight(15)
    with pytest.raises(ValueError):
        ko.weight(0)


def test_inequality_examples():
    assert ko.inequality_check(17, 5) == (True, 12120)
    holds, slack = ko.inequality_check(19, 5)
    assert not holds and slack < 0
    assert ko.inequality_check(12, 6)[0]
    with pytest.raises(ValueError):
        ko.inequality_check(5, 7)


def test_inequality_implies_search_success():
    for d in range(1, 31):
        if ko.inequality_check(d, 5)[0]:
            assert ko.search(d).min_orthogonal <= 14, d
        if ko.inequality_check(d, 6)[0]:
            assert ko.search(d).min_orthogonal <= 16, d


def test_verdicts():
    assert ko.verdict(12).classification == "GeneralType"
    assert ko.verdict(12).weight == 19
    v11 = ko.verdict(11)
    assert v11.classification == "NonNegativeKodaira"
    assert v11.weight == 20
    assert lt.norm(E7, v11.witness) == 22
    assert ko.orthogonal_root_count(v11.witness) == 16
    assert ko.verdict(1).classification == "Inconclusive"
    assert ko.verdict(1).weight is None


def test_verdict_certificate():
    cert = ko.verdict(12).certificate
    assert cert["exhaustive"] and cert["weight"] == 19
