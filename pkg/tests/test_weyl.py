import pytest

from latq import lattices as lt, weyl


def test_object_counts():
    e7 = lt.E7()
    assert len(weyl.positive_roots(e7)) == 63
    assert len(weyl.a1a1_sublattices(e7)) == 945
    assert len(weyl.a2_sublattices(e7)) == 336
    assert len(weyl.positive_roots(lt.E8())) == 120


def test_a1a1_orbit_in_e7():
    objects, orbits, sizes = weyl.orbit_summary(lt.E7(), "A1+A1")
    assert objects == 945
    assert orbits == 1
    assert sizes == (945,)


def test_a2_orbit_in_e7():
    objects, orbits, sizes = weyl.orbit_summary(lt.E7(), "A2")
    assert objects == 336
    assert orbits == 1


def test_four_a1_orbits_in_e8():
    objects, orbits, sizes = weyl.orbit_summary(lt.E8(), "4A1")
    assert objects == 122850
    assert orbits == 2
    assert sum(sizes) == 122850


def test_a2_objects_have_a2_grams():
    e7 = lt.E7()
    for obj in weyl.a2_sublattices(e7)[:10]:
        a, b, c = obj
        norms = sorted(abs(lt.inner(e7, x, y)) for x in obj for y in obj if x != y)
        assert all(lt.norm(e7, x) == 2 for x in obj)
        assert norms == [1, 1, 1, 1, 1, 1]
        assert len({a, b, c}) == 3


def test_canonicalization_rejects_zero():
    with pytest.raises(ValueError):
        lt.canonical_object(((0, 0, 0, 0, 0, 0, 0),))


def test_unknown_kind():
    with pytest.raises(ValueError):
        weyl.orbit_summary(lt.E7(), "B2")


def test_reflection_orbits_of_roots_is_single():
    # the root system itself forms one orbit
    a5 = lt.A(5)
    objs = [(r,) for r in weyl.positive_roots(a5)]
    count, sizes, reps = lt.reflection_orbits(a5, objs)
    assert count == 1
    assert sizes == [15]
