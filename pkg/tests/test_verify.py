import json

import numpy as np
import pytest

from dirac_isospectral import families as fam
from dirac_isospectral import fixtures as fx
from dirac_isospectral import verify
from dirac_isospectral.deform import compute_I
from dirac_isospectral.errors import ParameterError, SpuriousEigenvalueError
from dirac_isospectral.numerics import EigenResult, GridSpec

RADIAL = fam.RadialOscillator(3.0, 1.0, 1)
SCARF = fam.ScarfI(4.0, 2.0, 1)
GPT = fam.GPT(2.0, 5.0, 1)


@pytest.fixture(scope="module")
def radial_table():
    return compute_I(RADIAL)


def _names(report):
    return [c.name for c in report.checks]


def test_check_constructors():
    c = verify.Check.upper("a", "claim", 1e-4, 1e-3)
    assert c.passed and c.sense == "max"
    c = verify.Check.lower("b", "claim", 5.0, 10.0)
    assert not c.passed and c.sense == "min"


def test_report_rendering_and_determinism():
    a = verify.check_spectrum(RADIAL, 4)
    b = verify.check_spectrum(RADIAL, 4)
    assert a.to_json() == b.to_json()
    assert a.to_text() == b.to_text()
    tree = json.loads(a.to_json())
    assert tree["passed"] and tree["n_failed"] == 0
    assert {"package", "numpy", "scipy", "python", "family", "grid"} <= set(tree["metadata"])
    text = a.to_text()
    assert text.endswith("overall: PASS (2/2 checks passed)\n")
    assert "[PASS] spectrum.sector1 |" in text


def test_empty_lambda_list_gives_empty_passing_report():
    r = verify.check_isospectrality(RADIAL, [])
    assert r.passed and r.checks == []


@pytest.mark.parametrize("p", [RADIAL, GPT, fam.RadialOscillator(3.0, 1.0, 2)], ids=str)
def test_isospectrality(p):
    r = verify.check_isospectrality(p, [0.05, 0.1, 1.0, 10.0, -1.5], k=4)
    assert r.passed, r.to_text()
    assert len(r.checks) == 5


def test_isospectrality_rejects_limit_values():
    with pytest.raises(ParameterError):
        verify.check_isospectrality(RADIAL, [0.0])


@pytest.mark.parametrize("kind", ["pursey", "am"])
@pytest.mark.parametrize("p", [RADIAL, SCARF], ids=str)
def test_state_deletion(p, kind):
    r = verify.check_state_deletion(p, kind, k=3)
    assert r.passed, r.to_text()
    assert _names(r) == [
        f"deletion.{kind}.spectrum",
        f"deletion.{kind}.no_zero_mode",
        f"deletion.{kind}.candidate_diverges",
    ]
    ratio = r.checks[2].measured
    assert ratio > 1e3


def test_state_deletion_rejects_generic():
    with pytest.raises(ParameterError):
        verify.check_state_deletion(RADIAL, "generic")


@pytest.mark.parametrize("p, n_max", [(RADIAL, 3), (SCARF, 3), (GPT, 1), (fam.GPT(3.0, 7.5, 2), 2)], ids=str)
def test_susy_relations(p, n_max):
    r = verify.check_susy_relations(p, n_max)
    assert r.passed, r.to_text()
    names = _names(r)
    assert "susy.nodes1.n0" in names


def test_susy_relations_ground_level_only():
    r = verify.check_susy_relations(RADIAL, 0)
    assert r.passed
    assert _names(r) == [
        "susy.zero_mode",
        "susy.residual1.n0",
        "susy.nodes1.n0",
        "susy.residual2.n0",
        "susy.intertwine.n0",
        "susy.nodes2.n0",
    ]


def test_two_routes_and_normalisation(radial_table):
    assert verify.check_two_routes(RADIAL, table=radial_table).passed
    r = verify.check_normalization(RADIAL, table=radial_table)
    assert r.passed, r.to_text()
    assert "limit.psi0.lambda=-100000000.0" in _names(r)


def test_closed_forms_pass():
    r = verify.check_closed_forms()
    assert r.passed, r.to_text()
    assert len(r.checks) == 22
    for c in r.checks:
        assert c.measured < 1e-6


def test_transcription_flag(monkeypatch):
    good = fx.radial_psi0
    monkeypatch.setattr(fx, "radial_psi0", lambda r: 1.001 * good(r))
    r = verify.check_closed_forms(("radial",))
    bad = r.failures()
    assert [c.name for c in bad] == ["fixture.radial.psi0"]
    assert "probable transcription issue in fixture" in bad[0].detail


def test_spurious_eigenvalue_raises(monkeypatch, radial_table):
    def fake(V, grid, k, tol=None, full_output=False):
        vals = np.array([-0.5] + [6.0 * (i + 1) for i in range(k - 1)])
        return EigenResult(vals, vals, vals, np.zeros(k))

    monkeypatch.setattr(verify, "fd_eigensolve", fake)
    with pytest.raises(SpuriousEigenvalueError, match="too close"):
        verify.check_state_deletion(RADIAL, "pursey", table=radial_table)


def test_coarse_grid_fails_with_reason():
    r = verify.check_spectrum(RADIAL, 4, grid=GridSpec(1e-4, 8.0, 200))
    assert not r.passed
    assert "grid too coarse" in r.failures()[0].detail


def test_run_all_fixture_family_includes_closed_forms():
    r = verify.run_all(GPT)
    assert r.passed, r.to_text()
    assert any(n.startswith("fixture.gpt.") for n in _names(r))


def test_run_all_other_parameters_skips_closed_forms():
    r = verify.run_all(fam.GPT(3.0, 7.5, 2))
    assert r.passed, r.to_text()
    assert not any(n.startswith("fixture.") for n in _names(r))
    assert verify.fixture_family(GPT) and not verify.fixture_family(fam.GPT(3.0, 7.5, 2))
