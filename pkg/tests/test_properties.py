import json

from hypothesis import given, strategies as st

from ballean.core import is_thin, iary, point_ideal, verify_axioms
from ballean.hyper import (are_close, cartesian_ball, components, dsc, exp_ball_iary,
                           exp_ball_point_ideal, hyperballean)
from ballean.ideals import Ideal, ideal_validate, iota, iota_bruteforce, quotient_cosets
from ballean.kcubes import in_image, kcube_f, shape_ok
from ballean.models import parse_ballean
from ballean.subsets import bits, popcount
from ballean.suites import closed_form_agreement


@st.composite
def principal(draw, max_n=5):
    """A proper principal ideal P(S) on a ground of at most max_n points."""
    n = draw(st.integers(1, max_n))
    s = draw(st.integers(0, (1 << n) - 2))
    return Ideal.principal(n, bits(s))


@st.composite
def ideal_and_set(draw, max_n=5):
    ideal = draw(principal(max_n))
    return ideal, draw(st.integers(0, ideal.ground.full))


@given(principal(4))
def test_closed_forms_match_comprehension(ideal):
    assert closed_form_agreement(ideal, exp_ball_iary, iary(ideal)).status == "holds"
    assert closed_form_agreement(ideal, exp_ball_point_ideal, point_ideal(ideal)).status == "holds"


@given(principal())
def test_coset_count_is_two_to_iota(ideal):
    assert len(quotient_cosets(ideal)) == 2 ** iota(ideal)
    assert iota(ideal) == iota_bruteforce(ideal)


@given(principal(4))
def test_cartesian_components_follow_symdiff(ideal):
    h = hyperballean(ideal, "cartesian")
    label = {p: i for i, c in enumerate(components(h)) for p in c}
    for y in h.points:
        for z in h.points:
            assert (label[y] == label[z]) == are_close(ideal, y, z)
    assert len(set(label.values())) == dsc(ideal, "cartesian", "crt")


@given(principal())
def test_point_ideal_axioms(ideal):
    assert ideal_validate(ideal).status == "holds"
    assert verify_axioms(point_ideal(ideal)).status == "holds"


@given(principal())
def test_point_ideal_is_thin(ideal):
    assert is_thin(point_ideal(ideal)).status == "holds"


@given(ideal_and_set(4))
def test_cartesian_ball_size(pair):
    ideal, a = pair
    for k in ideal.members:
        ball = cartesian_ball(ideal, a, k)
        assert len(ball) == 2 ** popcount(k) and a in ball


@given(principal(), st.sampled_from(["pointIdeal", "iary", "cartesian", "macrocube"]))
def test_model_json_round_trip(ideal, kind):
    _, canon = parse_ballean({"ballean": {kind: ideal.to_json()}})
    b, again = parse_ballean(json.loads(json.dumps(canon)))
    assert again == canon
    assert Ideal.from_json(canon["ballean"][kind]) == ideal


@given(st.integers(0, 1 << 12))
def test_kcube_f_shape(m):
    z = kcube_f(m)
    assert in_image(z)
    assert m == 0 or shape_ok(z)


@given(st.integers(0, 1 << 10), st.integers(0, 1 << 10))
def test_kcube_f_injective(m, n):
    assert (kcube_f(m) == kcube_f(n)) == (m == n)
