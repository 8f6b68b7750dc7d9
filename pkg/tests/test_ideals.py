import pytest

from ballean.ideals import (Ideal, InvalidIdeal, MethodUnavailable, ideal_contains, ideal_hat,
                            ideal_normalize, ideal_validate, iota, iota_bruteforce, maximal_ideal,
                            quotient_cosets, symdiff)
from ballean.subsets import GroundSet, bits, interval, lowest, mask, popcount, submasks
from ballean.verdict import FAILS, HOLDS, HORIZON


def ideal(n, kind, data):
    return Ideal.from_json({"ground": {"finite": n}, "ideal": {kind: data}})


def test_masks_round_trip():
    assert bits(mask([3, 0, 5])) == [0, 3, 5]
    assert popcount(mask([1, 4])) == 2
    assert lowest(mask([4, 6])) == 4
    assert interval(2, 4) == mask([2, 3, 4])
    assert list(submasks(0b101)) == [0, 1, 4, 5]


@pytest.mark.parametrize("a, b, out", [([0, 1], [1, 2], [0, 2]), ([0, 3], [0, 3], []),
                                       ([0], [], [0])])
def test_symdiff(a, b, out):
    assert bits(symdiff(mask(a), mask(b))) == out


def test_membership():
    assert ideal_contains(Ideal.principal(4, [0, 1]), mask([1]))
    assert not ideal(6, "sizeBelow", 2).contains(mask([3, 5]))
    assert ideal(4, "generatedBy", [[0], [2]]).contains(mask([0, 2]))


def test_validate_witnesses():
    v = ideal(3, "explicit", [[], [0], [1]])
    out = ideal_validate(v)
    assert out.status == FAILS and out.witness == {"violation": "union", "pair": [[0], [1]]}
    assert ideal_validate(ideal(3, "explicit", [[], [0], [1], [0, 1]])).status == HOLDS
    full = ideal(2, "explicit", [[], [0], [1], [0, 1]])
    assert ideal_validate(full).witness == {"violation": "proper", "set": [0, 1]}
    down = ideal(3, "explicit", [[], [0, 1]])
    assert ideal_validate(down).witness["violation"] == "downward"
    assert ideal_validate(ideal(3, "explicit", [])).failed


def test_validate_size_below_full_is_not_an_ideal():
    out = ideal_validate(ideal(3, "sizeBelow", 3))
    assert out.witness["violation"] == "union"


def test_frechet_window():
    assert ideal_validate(Ideal.frechet(6)).status == HOLDS
    windowed = Ideal(GroundSet.naturals(6), "sizeBelow", 3)
    assert ideal_validate(windowed).failed
    ok = Ideal(GroundSet.naturals(6), "principal", mask([0, 1]))
    assert ideal_validate(ok).status == HORIZON


def test_normalize():
    assert ideal_normalize(ideal(4, "generatedBy", [[0], [1]])) == Ideal.principal(4, [0, 1])
    p = Ideal.principal(4, [2])
    assert ideal_normalize(p) == p
    with pytest.raises(InvalidIdeal):
        ideal_normalize(ideal(3, "explicit", [[], [0], [1]]))
    with pytest.raises(MethodUnavailable):
        ideal_normalize(Ideal.frechet(5))


def test_cosets(p01):
    q = quotient_cosets(p01)
    assert len(q) == 4
    assert q.cosets == (0, 4, 8, 12)
    assert all(len(c) == 4 for c in q.classes)
    assert q.coset_of(mask([1, 3])) == mask([3])
    assert len(quotient_cosets(Ideal.principal(3, []))) == 8
    for n in range(1, 5):
        for x in range(n):
            assert len(quotient_cosets(maximal_ideal(GroundSet.finite(n), x))) == 2


def test_hat_and_iota(p01):
    assert bits(ideal_hat(p01)) == [2, 3]
    assert iota(p01) == iota_bruteforce(p01) == 2
    m = maximal_ideal(GroundSet.finite(4), 2)
    assert bits(ideal_hat(m)) == [2] and iota_bruteforce(m) == 1
    empty = Ideal.principal(3, [])
    assert bits(ideal_hat(empty)) == [0, 1, 2] and iota_bruteforce(empty) == 3


def test_json_round_trip():
    for obj in ({"ground": {"finite": 4}, "ideal": {"principal": [0, 2]}},
                {"ground": {"naturals": {"horizon": 7}}, "ideal": {"frechet": True}},
                {"ground": {"finite": 3}, "ideal": {"explicit": [[], [1]]}},
                {"ground": {"finite": 5}, "ideal": {"sizeBelow": 2}}):
        assert Ideal.from_json(obj).to_json() == obj


@pytest.mark.parametrize("bad", [{"ground": {"finite": 3}, "ideal": {"principal": [1, 0]}},
                                 {"ground": {"finite": 3}, "ideal": {"principal": [0, 0]}},
                                 {"ground": {"finite": 3}, "ideal": {"principal": [3]}},
                                 {"ground": {"finite": 3}, "ideal": {"frechet": True}},
                                 {"ground": {"finite": 0}, "ideal": {"principal": []}},
                                 {"ideal": {"principal": []}}])
def test_rejects_malformed(bad):
    with pytest.raises(ValueError):
        Ideal.from_json(bad)
