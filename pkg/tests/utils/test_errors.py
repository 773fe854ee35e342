"""
Tests for the error hierarchy.
"""

from fractions import Fraction

from utils.errors import ConfigError, EvaluationError, StructuralError, UnknownFormulaError


def test_details_render_in_key_order():
    """Details are appended as key = value pairs, sorted by key."""
    error = StructuralError("Bad exponent", details={"got": (1, 2), "expected": 7})
    assert str(error) == "Bad exponent; expected = 7; got = (1, 2)"


def test_cause_is_named():
    """The wrapped exception type and text follow the message."""
    error = ConfigError("Invalid TOML", config_file="a.toml", cause=ValueError("line 1"))
    assert str(error) == "Invalid TOML; config_file = a.toml (from ValueError: line 1)"
    assert error.config_file == "a.toml"


def test_to_dict_is_string_valued():
    """to_dict carries the class name and string details."""
    error = EvaluationError("Denominator vanishes", point={"x0": Fraction(1, 2)})
    data = error.to_dict()
    assert data["error"] == "EvaluationError"
    assert data["details"] == {"point": "{'x0': '1/2'}"}
    assert data["cause"] is None


def test_unknown_formula_lists_some_names():
    """Long name lists are cut after eight entries."""
    error = UnknownFormulaError("nope", known=[f"f{k}" for k in range(10)])
    assert error.name == "nope"
    assert error.details["known"].endswith(", ...")
    assert str(error).startswith("Unknown formula or target: nope; known = f0, f1")
