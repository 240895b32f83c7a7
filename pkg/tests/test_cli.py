import orjson
from typer.testing import CliRunner

from theta_orbits.cli.main import EXIT_PARAMETER, EXIT_VERIFICATION, app

runner = CliRunner()


def _json(result):
    assert result.exit_code == 0, result.output
    return orjson.loads(result.stdout)


def test_associated_cycle_of_trivial_lift():
    payload = _json(runner.invoke(app, ["orbits", "ac", "--family", "osp", "-p", "6", "-q", "4", "-n", "2"]))
    assert payload == {
        "pair": "osp:6,4,0,2",
        "cycle": [{"mult": 1, "orbit": "2+^2 2-^2 1+^2"}],
        "provenance": "eq7",
    }


def test_associated_cycle_with_compact_type():
    payload = _json(runner.invoke(app, ["orbits", "ac", "-p", "8", "-q", "4", "-t", "4", "-n", "2", "--mu", "1"]))
    assert payload["multiplicity"] == 2
    assert payload["case"] == "I"
    assert payload["mu"] == "[1]"


def test_associated_cycle_table_output():
    result = runner.invoke(app, ["orbits", "ac", "-p", "6", "-q", "4", "-n", "2", "--output", "table"])
    assert result.exit_code == 0
    assert "2₊²2₋²1₊²" in result.stdout


def test_associated_cycle_truncation_exit_code():
    result = runner.invoke(app, ["orbits", "ac", "-p", "4", "-q", "1", "-t", "5", "-n", "2", "--dmax", "1"])
    assert result.exit_code == EXIT_VERIFICATION


def test_orbit_lift():
    payload = _json(runner.invoke(app, ["orbits", "lift", "-p", "8", "-q", "4", "-t", "2", "-n", "3"]))
    assert payload == {
        "pair": "osp:8,4,2,3",
        "orbit": "3+^2 2+ 2- 1+^2",
        "signature": [8, 4],
        "dims": {"complex": 40, "K": 20},
        "provenance": "eq6",
    }


def test_unipotent_check():
    payload = _json(runner.invoke(app, ["unipotent", "check", "-p", "8", "-q", "4", "-t", "2", "-n", "3"]))
    assert payload["passed"] is True
    assert payload["dual_orbit"] == [5, 5, 1, 1]


def test_unipotent_check_with_unmet_hypotheses_still_succeeds():
    result = runner.invoke(app, ["unipotent", "check", "-p", "8", "-q", "4", "-t", "2", "-n", "3", "--dim-mu", "2"])
    assert result.exit_code == 0


def test_numeric_verify():
    payload = _json(runner.invoke(app, ["numeric", "verify", "--pair", "osp:6,4,0,2", "--count", "3", "--seed", "1"]))
    assert payload["pair"] == "osp:6,4,0,2"
    assert payload["seed"] == 1
    assert all(check["pass"] for check in payload["checks"])


def test_numeric_verify_seed_from_environment(monkeypatch):
    monkeypatch.setenv("THETA_ORBITS_SEED", "5")
    payload = _json(runner.invoke(app, ["numeric", "verify", "--pair", "osp:6,4,0,2", "--count", "2"]))
    assert payload["seed"] == 5


def test_spectrum():
    payload = _json(runner.invoke(app, ["spectrum", "--pair", "osp:4,4,0,1", "--dmax", "2"]))
    assert [entry["dim"] for entry in payload["degrees"]] == [1, 0, 16]


def test_normalize():
    payload = _json(runner.invoke(app, ["normalize", "-p", "4", "-q", "4", "-n", "2"]))
    assert payload["status"] == "remapped"
    assert payload["n_effective"] == 1


def test_bad_parameters_exit_code():
    for args in (
        ["orbits", "lift", "-p", "4", "-q", "4", "-n", "2"],
        ["orbits", "lift", "--family", "uu", "-p", "6", "-q", "4", "-n", "2"],
        ["numeric", "verify", "--pair", "osp:6,4"],
        ["orbits", "ac", "-p", "8", "-q", "4", "-t", "2", "-n", "3", "--mu", "a"],
        ["spectrum", "--pair", "osp:8,4,2,3"],
        ["normalize", "-p", "6", "-q", "4", "-n", "2"],
    ):
        result = runner.invoke(app, args)
        assert result.exit_code == EXIT_PARAMETER, args


def test_log_level_option():
    result = runner.invoke(app, ["--log-level", "debug", "orbits", "lift", "-p", "6", "-q", "4", "-n", "2"])
    assert result.exit_code == 0
