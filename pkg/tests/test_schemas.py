import json

import jsonschema
import pytest
from hypothesis import given, settings

from qtorus import schemas
from qtorus.alternating import alt_gf, full_suite
from qtorus.cli import main
from qtorus.repcheck import RepConfig, clock_shift, perturb, residual_suite
from qtorus.series import BiTorusSeries, omega_series
from strategies import ratfuncs, torus_elements


def _valid(doc, schema):
    jsonschema.validate(json.loads(json.dumps(doc)), schema)


@settings(max_examples=50)
@given(ratfuncs())
def test_ratfunc(a):
    _valid(a.to_json(), schemas.RATFUNC)


@settings(max_examples=50)
@given(torus_elements())
def test_torus_element(u):
    _valid(u.to_json(), schemas.TORUS_ELEMENT)


def test_series():
    _valid(omega_series(6).to_json(), schemas.SERIES)
    _valid(alt_gf("G", 5).to_json(), schemas.SERIES)
    bi = BiTorusSeries.in_s(alt_gf("Wplus", 3), 2)
    _valid(bi.to_json(), schemas.BI_SERIES)


@pytest.mark.parametrize("fault", [None, "gtilde-plus-t", "z-q-cubed"])
def test_exact_reports(fault):
    report = full_suite(6, 4, 4, 6, 8, 10, fault=fault)
    _valid(report.to_json(), schemas.REPORT)


def test_numeric_reports():
    cfg = RepConfig(5)
    _valid(residual_suite(cfg, 3).to_json(), schemas.REPORT)
    bad = residual_suite(cfg, 3, perturb(clock_shift(cfg)))
    _valid(bad.to_json(), schemas.REPORT)


def test_report_schema_rejects_failure_without_witness():
    doc = {"checks": [{"name": "a", "truncation": [1], "status": "fail", "witness": None}]}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(doc, schemas.REPORT)


def test_cli_json(capsys):
    main(["elem", "--family", "G", "--k", "3", "--format", "json"])
    _valid(json.loads(capsys.readouterr().out), schemas.TORUS_ELEMENT)
    main(["eval", "--expr", "q", "--format", "json"])
    _valid(json.loads(capsys.readouterr().out), schemas.TORUS_ELEMENT)
