import json
import math

import pytest

import asymass

FAST = {"radii": (4.0, 2.0, 4), "quad": (16, 32, 8)}


def test_version():
    assert asymass.__version__.startswith("0.1.0")


def test_catalog():
    names = {e["name"] for e in asymass.catalog_entries()}
    assert {"euclidean_half", "schwarzschild_half", "ads_schwarzschild_half"} <= names


def test_metric_value_and_curvature():
    g = asymass.Metric("schwarzschild_half", m=1.0)
    v = g.value([2.0, 0.0, 0.0])
    assert v.shape == (3, 3)
    assert v[0, 0] == pytest.approx(1.25**4)
    assert abs(g.scalar_curvature([1.3, -0.7, 0.9])) < 1e-12


def test_schwarzschild_mass():
    report = asymass.Metric("schwarzschild_half", m=2.0).evaluate("mass_adm", **FAST)
    assert report["limit"] == pytest.approx(1.0, rel=1e-2)
    assert len(report["samples"]) == 4
    assert not report["flagged"]


def test_hyperbolic_model_vanishes():
    report = asymass.evaluate(asymass.Metric("hyperbolic_half"), "hyp_charge", 0, radii=(3.0, 0.5, 3))
    assert all(abs(s["value"]) < 1e-10 for s in report["samples"])


def test_errors():
    with pytest.raises(asymass.ConfigError):
        asymass.Metric("kerr")
    with pytest.raises(ValueError):
        asymass.Metric("schwarzschild_half", spin=1.0)
    with pytest.raises(asymass.DegenerateMassError):
        asymass.Metric("euclidean_half").evaluate("center_adm", 1, **FAST)


def test_extrapolate_and_fit():
    out = asymass.extrapolate([4.0, 8.0, 16.0], [2.25, 2.125, 2.0625])
    assert out["limit"] == pytest.approx(2.0)
    r = [8.0 * 2**k for k in range(6)]
    assert asymass.decay_fit(r, [x**-1.5 for x in r])["rate"] == pytest.approx(1.5)
    assert math.isinf(asymass.decay_fit(r, [0.0] * 6)["rate"])


def test_pohozaev():
    out = asymass.pohozaev_check(count=5, seed=1)
    assert out["pass"] and out["max"] < 1e-8


def test_cli_in_process():
    code, out, err = asymass.run_cli("catalog", "list")
    assert code == 0 and json.loads(out)
    code, _, err = asymass.run_cli("mass", "--metric", "kerr")
    assert code == 2 and "kerr" in err
