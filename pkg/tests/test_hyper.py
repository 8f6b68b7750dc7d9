import pytest

from ballean.core import ContractViolation, iary, point_ideal, verify_axioms
from ballean.hyper import (EXP_FLAVORS, FLAVORS, STAR_FLAVORS, EmptySetFlavorMismatch,
                           ProductBallean, are_close, cartesian_ball, close_classes, components,
                           components_exp, dsc, exp_ball_generic, exp_ball_iary,
                           exp_ball_point_ideal, family, flat_support, hyperballean)
from ballean.ideals import Ideal, MethodUnavailable
from ballean.subsets import mask

I12 = Ideal.principal(3, [1, 2])


def test_generic_examples():
    a, k = mask([0, 1]), mask([1, 2])
    assert family(exp_ball_generic(point_ideal(I12), a, k)) == [[0, 1], [0, 2], [0, 1, 2]]
    assert family(exp_ball_generic(iary(I12), a, k)) == [[0], [0, 1], [0, 2], [0, 1, 2]]
    assert family(exp_ball_generic(point_ideal(I12), 0, k)) == [[]]


def test_point_ideal_closed_form():
    assert family(exp_ball_point_ideal(I12, mask([0, 1]), mask([1, 2]))) == [[0, 1], [0, 2], [0, 1, 2]]
    assert family(exp_ball_point_ideal(I12, mask([0]), mask([1, 2]))) == [[0]]
    assert family(exp_ball_point_ideal(I12, mask([1]), mask([1]))) == [[1]]


def test_iary_closed_form():
    assert family(exp_ball_iary(I12, mask([0, 1]), mask([1, 2]))) == [[0], [0, 1], [0, 2], [0, 1, 2]]
    assert family(exp_ball_iary(I12, 0, mask([1, 2]))) == [[]]
    assert family(exp_ball_iary(I12, mask([0]), 0)) == [[0]]


def test_cartesian_ball():
    assert family(cartesian_ball(I12, mask([0, 1]), mask([1, 2]))) == [[0], [0, 1], [0, 2], [0, 1, 2]]
    i0 = Ideal.principal(3, [0])
    assert family(cartesian_ball(i0, 0, mask([0]))) == [[], [0]]
    assert family(cartesian_ball(I12, mask([0, 2]), 0)) == [[0, 2]]
    with pytest.raises(ContractViolation):
        cartesian_ball(I12, 0, mask([0]))


def test_closed_forms_match_generic_exhaustively():
    for n in range(1, 5):
        for s in range((1 << n) - 1):
            ideal = Ideal(Ideal.principal(n, []).ground, "principal", s)
            pb, ab = point_ideal(ideal), iary(ideal)
            for k in ideal.members:
                for a in range(1 << n):
                    assert exp_ball_point_ideal(ideal, a, k) == exp_ball_generic(pb, a, k)
                    assert exp_ball_iary(ideal, a, k) == exp_ball_generic(ab, a, k)


def test_supports(p01):
    assert 0 not in hyperballean(p01, "expStarIary").point_set
    flat = hyperballean(p01, "flatPointIdeal").point_set
    assert flat == {mask(s) for s in ([0], [1], [0, 1], [2], [3])}
    assert hyperballean(p01, "macrocube").point_set == set(p01.members)
    assert set(flat_support(iary(p01))) == flat
    with pytest.raises(MethodUnavailable):
        flat_support(point_ideal(Ideal.frechet(6)))


def test_every_flavor_satisfies_axioms(p01):
    for flavor in FLAVORS:
        assert verify_axioms(hyperballean(p01, flavor)), flavor


def test_closeness():
    assert are_close(Ideal.principal(3, [0, 2]), mask([0, 1]), mask([1, 2]))
    assert are_close(I12, mask([1]), mask([1]), "iary")
    assert are_close(Ideal.principal(3, [0]), 0, mask([0]))
    with pytest.raises(EmptySetFlavorMismatch):
        are_close(Ideal.principal(3, [0]), 0, mask([0]), "iary")


def test_classes_small():
    i0 = Ideal.principal(3, [0])
    parts = components_exp(i0, "iary")
    assert [[]] in [family(c) for c in parts]
    assert len(parts) == 5
    assert components_exp(i0, "iary") == close_classes(i0, "iary")
    m = Ideal.principal(3, [0, 1])
    assert len(components_exp(m, "cartesian")) == 2
    assert len(components_exp(m, "iary")) == 3


def test_dsc_methods(p01):
    assert [dsc(p01, "cartesian", m) for m in ("components", "quotient", "crt")] == [4, 4, 4]
    assert [dsc(p01, "iary", m) for m in ("components", "quotient", "crt")] == [5, 5, 5]
    assert [dsc(p01, f) for f in STAR_FLAVORS] == [7, 4]
    assert dsc(Ideal.principal(3, []), "cartesian", "quotient") == 8
    with pytest.raises(MethodUnavailable):
        dsc(Ideal.frechet(6), "cartesian", "crt")
    with pytest.raises(MethodUnavailable):
        dsc(p01, "macrocube")


def test_point_ideal_components_on_finite_ground(p01):
    # sets disjoint from the union of the ideal are isolated
    assert dsc(p01, "pointIdeal") == 8
    assert dsc(p01, "pointIdeal", "quotient") == 5


def test_generic_flavors_equal_closed(p01):
    for a, b in (("genericPointIdeal", "pointIdeal"), ("genericIary", "iary")):
        ga, gb = hyperballean(p01, a), hyperballean(p01, b)
        assert all(ga.ball(p, k) == gb.ball(p, k) for p in ga.points for k in ga.radii)
    assert set(EXP_FLAVORS) <= set(FLAVORS)


def test_product_ballean(p01):
    c = hyperballean(p01, "cartesian")
    prod = ProductBallean(c, c, 4)
    assert len(prod.points) == 256
    p = mask([0]) | mask([2]) << 4
    assert prod.show_point(p) == [[0], [2]]
    assert len(prod.ball(p, mask([0]) | mask([0, 1]) << 4)) == 8
    assert components(prod) and verify_axioms(prod)
