import json

import pytest

import weakunits as wu


def test_builtin_models_validate():
    for name in wu.builtin_names():
        cert = wu.validate(wu.builtin(name))
        assert cert["result"] == "pass", name
        assert cert["counterexamples"] == []


def test_model_json_round_trip():
    m = wu.builtin("zg")
    back = wu.model_from_json(m.to_json())
    assert back.hash() == m.hash()
    assert (back.objects, back.one_cells, back.two_cells) == (m.objects, m.one_cells, m.two_cells)


def test_zg_has_two_units():
    cert = wu.find_units(wu.builtin("zg"))
    assert len(cert["summary"]["units"]) == 2


@pytest.mark.parametrize("theorem", ["A", "B", "C", "E", "actions"])
def test_verify_and_recheck(theorem):
    cert = wu.verify(wu.builtin("z2p"), theorem, seed=3)
    assert cert["result"] == "pass"
    assert cert["seed"] == 3
    ok, count, mismatches = wu.recheck(cert)
    assert ok and not mismatches
    assert count == len(cert["checked_equations"])


def test_all_choices_share_one_associator():
    cert = wu.synth(wu.builtin("zg"), all_choices=True)
    assert cert["result"] == "pass"
    assert all(u["packs"] == 16 for u in cert["summary"]["units"])


def test_dimension_one_on_a_monoid():
    z3 = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    assert wu.verify(wu.monoid(z3), "dim1")["result"] == "pass"
    assert wu.verify(wu.builtin("zg"), "dim1")["result"] == "fail"


def test_tampered_certificate_is_caught():
    cert = wu.verify(wu.builtin("zg"), "C")
    cert["checked_equations"][0]["rhs_value"] += 1
    ok, _, mismatches = wu.recheck(cert)
    assert not ok and mismatches


def test_errors():
    with pytest.raises(wu.StructuralError):
        wu.builtin("nonsense")
    with pytest.raises(wu.StructuralError):
        wu.verify(wu.builtin("m3"), "Z")
    with pytest.raises(ValueError):
        wu.model_from_json(json.dumps({"objects": 1}))
