import pytest

from ballean.core import (ContractViolation, ImproperSatellite, ball_iary, ball_of_set,
                          ball_point_ideal, component, iary, is_bounded, is_large, is_slowly_oscillating,
                          is_small, is_thick, is_thin, make_satellite, make_subballean, point_ideal,
                          radii_leq, same_balls, verify_axioms)
from ballean.ideals import Ideal
from ballean.subsets import bits, mask
from ballean.verdict import FAILS, HOLDS, HORIZON

I01 = Ideal.principal(4, [0, 1])


@pytest.mark.parametrize("x, a, out", [(3, [0, 1], [3]), (0, [0, 1], [0, 1]), (0, [], [0])])
def test_point_ideal_ball(x, a, out):
    assert bits(ball_point_ideal(I01, x, mask(a))) == out


@pytest.mark.parametrize("x, a, out", [(3, [0, 1], [0, 1, 3]), (0, [0, 1], [0, 1]), (0, [], [0])])
def test_iary_ball(x, a, out):
    assert bits(ball_iary(I01, x, mask(a))) == out


def test_radius_outside_ideal():
    with pytest.raises(ContractViolation):
        ball_point_ideal(I01, 0, mask([2]))
    with pytest.raises(ContractViolation):
        iary(I01).ball(0, mask([0, 3]))


def test_ball_of_set():
    assert ball_of_set(point_ideal(I01), [0, 3], mask([0, 1])) == {0, 1, 3}
    assert ball_of_set(point_ideal(I01), [], mask([0, 1])) == frozenset()
    assert ball_of_set(iary(I01), [3], mask([0, 1])) == {0, 1, 3}


def test_axioms_point_ideal_exhaustive():
    for n in range(1, 6):
        for s in range((1 << n) - 1):
            assert verify_axioms(point_ideal(Ideal(Ideal.principal(n, []).ground, "principal", s)))


def test_iary_symmetry_failure():
    # 0 is in B(1, {0}) = {0, 1} but 1 is not in B(0, {0}) = {0}
    v = verify_axioms(iary(I01))
    assert v.status == FAILS
    assert v.witness == {"axiom": "symmetry", "x": 1, "y": 0, "radius": [0]}


def test_iary_trivial_ideal_is_symmetric():
    assert verify_axioms(iary(Ideal.principal(3, [])))


def test_dropped_centre_fails_containment():
    b = point_ideal(I01)
    broken = make_subballean(b, b.support)
    broken.ball_mask = lambda x, r: r if r >> x & 1 else 0
    v = verify_axioms(broken)
    assert v.witness["axiom"] == "containment" and v.witness["x"] == 0


def test_gamma_table_recorded():
    v = verify_axioms(point_ideal(I01))
    assert [[0], [1], []] in v.witness["gamma"]
    assert [[0, 1], [0, 1], [0, 1]] in v.witness["gamma"]


def test_radii_preorder():
    assert radii_leq(iary(I01), mask([0]), mask([0, 1]))
    assert not radii_leq(point_ideal(I01), mask([0, 1]), mask([1]))
    assert radii_leq(point_ideal(I01), mask([1]), mask([1]))


def test_components_of_points():
    assert component(point_ideal(I01), 0) == {0, 1}
    assert component(point_ideal(I01), 3) == {3}
    assert component(iary(I01), 3) == {0, 1, 3}


def test_bounded():
    b = point_ideal(I01)
    assert is_bounded(b, []).status == HOLDS
    assert is_bounded(b, [0, 1]).witness == {"radius": [0, 1]}
    assert is_bounded(b, [0, 3]).failed
    frechet = point_ideal(Ideal.frechet(10))
    evens = is_bounded(frechet, range(0, 10, 2))
    assert evens.failed and len(evens.witness["misses"]) == len(frechet.radii)
    assert is_bounded(frechet, [0, 3]).status == HORIZON


def test_size_predicates():
    b = point_ideal(I01)
    whole = b.points
    assert is_large(b, whole) and is_thick(b, whole)
    assert is_small(b, whole).failed
    assert is_large(b, []).failed and is_thick(b, []).failed and is_small(b, [])
    a = iary(I01)
    assert is_large(a, [2, 3])


def test_thin():
    assert is_thin(point_ideal(Ideal.frechet(10))).status == HORIZON
    v = is_thin(iary(Ideal.frechet(10)))
    assert v.failed
    b = iary(Ideal.frechet(10))
    # at radius {0,1} the crowded points are still unbounded
    crowded = [x for x in b.points if len(b.ball(x, mask([0, 1]))) > 1]
    assert is_bounded(b, crowded).failed
    assert is_thin(point_ideal(I01), [0, 1])


def test_slowly_oscillating():
    b = point_ideal(Ideal.frechet(10))
    assert is_slowly_oscillating(b, lambda x: 0).status == HORIZON
    assert is_slowly_oscillating(b, lambda x: x % 2).status == HORIZON
    a = iary(Ideal.frechet(10))
    v = is_slowly_oscillating(a, lambda x: x % 2)
    assert v.failed and v.witness["unbounded"] == [1, 3, 5, 7, 9]


def test_subballean():
    a = iary(I01)
    sub = make_subballean(a, [0, 1])
    assert sub.ball(0, mask([0])) == {0}
    assert sub.ball(1, mask([0])) == {0, 1}
    single = make_subballean(a, [3])
    assert all(single.ball(3, r) == {3} for r in a.radii)
    with pytest.raises(ContractViolation):
        make_subballean(point_ideal(Ideal.principal(2, [])), mask([3]))


def test_satellite():
    b = point_ideal(I01)
    sat, fam = make_satellite(b)
    assert same_balls(b, sat)
    assert fam.failed  # {0} and {2} are bounded, {0, 2} is not
    with pytest.raises(ImproperSatellite):
        make_satellite(point_ideal(Ideal.principal(1, [])))
