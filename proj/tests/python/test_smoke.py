import json

import pytest

import rdga


def test_builtins_listed():
    names = rdga.builtin_geometry_names()
    assert "flat2" in names and "sphere2" in names


def test_verify_flat2_passes():
    rep = rdga.verify(rdga.load_geometry("flat2"), "riemann", samples=5, seed=3)
    assert rep.all_pass()
    assert all(c.passed and c.max_residual == 0 for c in rep.checks)


def test_ricci_sphere_is_metric():
    rep = rdga.ricci_report(rdga.load_geometry("sphere2"), samples=5)
    assert rep.all_pass()
    ids = {c.id for c in rep.checks}
    assert "ricci.einstein" in ids


def test_json_round_trip():
    rep = rdga.z2_report()
    data = json.loads(rep.json())
    assert len(data["checks"]) == len(rep.checks)
    assert rep.all_pass()


def test_quantize_table_shows_bracket():
    rep = rdga.quantize_report(rdga.load_geometry("flat2"), samples=3)
    assert any("[x, dx]" in t for t in rep.tables)


def test_spacetime_needs_conformal_data():
    with pytest.raises(rdga.UsageError):
        rdga.spacetime_report(rdga.load_geometry("flat2"), samples=2)


def test_parse_error_position():
    with pytest.raises(rdga.ParseError) as e:
        rdga.parse_geometry("name = bad\ncoords = x y\nmetric = [\n  1 0\n  0 )\n]\n")
    assert isinstance(e.value, rdga.Error)


def test_bad_lambda():
    with pytest.raises(rdga.UsageError):
        rdga.quantize_report(rdga.load_geometry("flat2"), lambda_="one")
