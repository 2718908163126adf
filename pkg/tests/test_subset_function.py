from fractions import Fraction

import pytest

from valdelta.cube import INF
from valdelta.subset_function import SubsetFunction, parse_value


def test_parse_value():
    assert parse_value("3/4") == Fraction(3, 4)
    assert parse_value(2) == 2
    for text in ("inf", "+inf", "∞", "oo"):
        assert parse_value(text) == INF
    assert parse_value(float("inf")) == INF
    with pytest.raises(ValueError):
        parse_value(0.5)
    with pytest.raises(ValueError):
        parse_value("abc")


def test_json_round_trip():
    p = SubsetFunction(3, [0, "1/2", INF, 3, -1, 0, 2, INF])
    assert SubsetFunction.from_json(p.to_json()) == p
    assert SubsetFunction.from_json({"n": 3, "values": list(p.values)}) == p


def test_missing_values_default_to_infinity():
    p = SubsetFunction.from_json({"n": 2, "values": {"": "0", "12": "1"}})
    assert p.values == (0, INF, INF, 1)
    assert p.dom == [0, 3] and not p.is_finite


def test_validation():
    with pytest.raises(ValueError):
        SubsetFunction(2, [INF] * 4)
    with pytest.raises(ValueError):
        SubsetFunction(2, [0, 0, 0])
    with pytest.raises(ValueError):
        SubsetFunction.from_json({"values": {}})


def test_immutable():
    p = SubsetFunction(1, [0, 1])
    with pytest.raises(AttributeError):
        p.n = 2
    assert hash(p) == hash(SubsetFunction(1, [0, 1]))


def test_transform():
    p = SubsetFunction(2, [0, 1, INF, 2])
    q = p.transform(2, [1, 0], 3)
    assert q.values == (3, 6, INF, 8)
    with pytest.raises(ValueError):
        p.transform(0)
