import json
import math

import pytest

import tunnelsplit as ts


def test_pcf_hermite_order_one():
    # D_1(z) = z exp(-z^2/4)
    v = ts.pcf_d(1.0, -2.0)
    assert v.value == pytest.approx(-2.0 * math.exp(-1.0), rel=1e-12)
    assert v.regime == ts.PcfRegime.series


def test_symmetric_quartic_forms_and_oracle():
    eta = 6.0
    model = ts.PotentialModel.quartic_tilt(1.0 / (8 * eta * eta), eta)
    params = ts.extract_well_parameters(model)
    assert params.a == pytest.approx(eta)
    assert params.n == 0
    reg = ts.splitting_regularized_form(model, 0)
    turn = ts.splitting_turning_form(model, 0)
    assert reg.actions.gamma_a == pytest.approx(math.log(2.0), abs=1e-10)
    assert abs(turn.Delta_l / reg.Delta_l - 1) < 0.02
    oracle = ts.oracle_splitting(model, 0)
    assert abs(reg.Delta_l / oracle.gap - 1) < 0.05
    assert abs(oracle.wronskian_splitting() / oracle.gap - 1) < 0.05


def test_piecewise_exact_levels():
    p = ts.VdParameters.from_alpha(4.0, 0, 0.0)
    lo, hi = ts.vd_eigenlevels(p, 0)
    q = ts.vd_quadratic_delta(p, 0)
    assert q.splitting == pytest.approx(2 * q.R_l, rel=1e-14)
    assert abs((hi - lo) / q.splitting - 1) < 0.05


def test_turning_form_refuses_kink():
    model = ts.PotentialModel.piecewise_quadratic(4.0, 4.0)
    with pytest.raises(ts.TunnelsplitError) as info:
        ts.splitting_turning_form(model, 0)
    assert info.value.kind == "non_smooth"


def test_two_state_dynamics():
    tr = ts.evolve_two_state(1.0, 1.0, 20.0, 400)
    peak = max(tr["p_left"])
    assert peak <= ts.max_transfer_probability(1.0, 1.0) + 1e-12
    assert all(abs(a + b - 1) < 1e-12 for a, b in zip(tr["p_right"], tr["p_left"]))


def test_cli_round_trip(tmp_path):
    cfg = tmp_path / "vd.json"
    cfg.write_text(json.dumps({"potential": {"kind": "piecewise_quadratic", "alpha": 4, "beta": 4}}))
    code, out, err = ts.run_cli(["exact-vd", "--config", str(cfg)])
    assert code == 0, err
    report = json.loads(out)
    assert abs(report["symmetric_reference"]["roots_relative_difference"]) < 0.05
    code, _, err = ts.run_cli(["split", "--config", str(tmp_path / "missing.json")])
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "schema"
