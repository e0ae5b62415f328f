import json
import math

import numpy as np
import pytest

from graphenergy import jsonio


def test_floats_round_trip_exactly():
    rng = np.random.default_rng(12345)
    values = list(rng.standard_normal(200)) + [1e-8, 96.00000000000009, 2 / 3, 1e300]
    for x in values:
        x = float(x)
        assert float(jsonio.format_float(x)) == x


def test_integral_floats_keep_a_decimal_point():
    assert jsonio.format_float(12.0) == "12.0"
    assert json.loads(jsonio.dumps({"e": 12.0})) == {"e": 12.0}


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        jsonio.format_float(math.nan)
    with pytest.raises(ValueError):
        jsonio.format_float(math.inf)


def test_nested_structure_and_key_order():
    payload = {"b": [1, {"x": None, "y": True}], "a": "text", "empty": {}, "none": []}
    text = jsonio.dumps(payload)
    assert json.loads(text) == payload
    # insertion order is preserved, not sorted
    assert text.index('"b"') < text.index('"a"')


def test_repeated_dumps_identical():
    payload = {"values": [1 / 3, 2 / 7, 1e-8], "n": 3}
    assert jsonio.dumps(payload) == jsonio.dumps(payload)


def test_rejects_unserializable():
    with pytest.raises(TypeError):
        jsonio.dumps({"x": object()})
    with pytest.raises(TypeError):
        jsonio.dumps({1: "non-string key"})
