import pytest

import wpcl


def test_monoids_present():
    names = wpcl.monoids()
    assert "max-avg-plus" in names
    assert "min-avg-plus" in names
    assert "min-maj-max" in names


def test_evaluate_coalesce():
    assert wpcl.evaluate("w(2) (#) w(4)", "{{p},{q}}", ["p", "q"]) == "6"
    assert wpcl.evaluate("w(2) (#) w(4)", "{{p}}", ["p", "q"]) == "-inf"


def test_normalize_weighted_monomial():
    out = wpcl.normalize("[m: p . !q] (x) w(3)", ["p", "q"])
    assert out == "3 @ {{p}}"


def test_normalize_constant():
    assert wpcl.normalize("w(5)", ["p"]) == "CONST 5"


def test_equivalent_closure_expansion():
    z = "w(2) (+) [m: p]"
    assert wpcl.equivalent(
        f"close({z})", f"({z}) (+) (({z}) (#) w(0))", ["p", "q"]
    )
    assert not wpcl.equivalent("w(2)", "w(3)", ["p"])


def test_table_covers_every_configuration():
    rows = wpcl.table("w(7)", ["p"])
    assert rows == [("{{p}}", "7")]


def test_reprint_is_canonical():
    assert wpcl.reprint("(w(1) (+) w(2))", ["p"]) == "w(1) (+) w(2)"


def test_errors_are_typed():
    with pytest.raises(wpcl.InputError):
        wpcl.evaluate("w(", "{{p}}", ["p"])
    with pytest.raises(wpcl.InputError):
        wpcl.evaluate("w(1)", "{{p}}", ["p"], monoid="no-such-monoid")
    with pytest.raises(wpcl.ResourceLimit):
        wpcl.normalize("[true]", ["a", "b", "c", "d", "e"])
