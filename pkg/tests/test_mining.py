import pytest

from absorbing.cli import classify_target, dumps
from absorbing.spec import parse_spec
from absorbing.suite.mining import mine, parse_query


def test_parse_query():
    assert parse_query(["2ap=+", "1AP=-"]) == {"two_absorbing_primary": True,
                                               "one_absorbing_primary": False}
    assert parse_query(["prime=true"]) == {"prime": True}
    with pytest.raises(KeyError):
        parse_query(["shiny=+"])
    with pytest.raises(ValueError):
        parse_query(["prime"])
    with pytest.raises(ValueError):
        parse_query(["prime=maybe"])


def test_two_ap_but_not_one_ap_in_zn():
    found = mine({"two_absorbing_primary": True, "one_absorbing_primary": False}, "zn",
                 limit=3)
    assert [w["module"] for w in found] == ["regular(Z/6)", "regular(Z/10)", "regular(Z/12)"]
    assert found[0]["target"] == []          # the zero submodule
    assert found[0]["report"]["witnesses"]["one_absorbing_primary"] == [2, 2, 3]
    z12 = mine({"two_absorbing_primary": True, "one_absorbing_primary": False}, "zn:12")
    assert [w["target"] for w in z12] == [[], [6]]


def test_prime_in_z12_in_lattice_order():
    found = mine({"prime": True}, "zn:12")
    assert [w["target"] for w in found] == [[3], [2]]


def test_zint_family():
    found = mine({"two_absorbing_primary": True, "one_absorbing_primary": False}, "zint",
                 limit=3)
    assert [w["target"] for w in found] == [[6], [10], [12]]


@pytest.mark.parametrize("family", ["small-finite", "zn:2..40", "z2"])
def test_one_ap_implies_primary_on_searched_families(family):
    assert mine({"one_absorbing_primary": True, "primary": False}, family) == []


def test_budget_and_limit():
    q = {"proper": True}
    assert len(mine(q, "zn:2..10", budget=5)) <= 5
    assert len(mine(q, "zn:2..10", limit=2)) == 2
    with pytest.raises(KeyError):
        mine(q, "nope")


@pytest.mark.parametrize("family", ["zn:2..16", "zint:40", "z2"])
def test_witness_specs_reclassify_identically(family):
    for w in mine({"one_absorbing_primary": False}, family, limit=8):
        spec = parse_spec(w["spec"])
        (name,) = spec.targets
        again = classify_target(spec, name)["report"]
        assert dumps(again) == dumps(w["report"])
