import json

import numpy as np
import pytest

import pairinglab as pl
from pairinglab import cli, statefile
from pairinglab.errors import ParseError, ValidationError

from conftest import MC_COEFFS


@pytest.fixture
def mc_file(tmp_path, mc_state):
    path = tmp_path / "mc.json"
    statefile.save_state(path, mc_state, label="mc")
    return path


@pytest.fixture
def iso_file(tmp_path):
    path = tmp_path / "iso.json"
    statefile.save_state(path, pl.named_counterexample("isotropic", p=0.5).state)
    return path


class TestStateFile:
    def test_round_trip_bit_exact(self, tmp_path, rng):
        bs = pl.random_bipartite_state(2, 3, rng)
        path = tmp_path / "state.json"
        statefile.save_state(path, bs)
        back = statefile.load_state(path)
        assert isinstance(back, pl.BipartiteState)
        assert back.d_A == 2 and back.d_B == 3
        assert np.array_equal(back.mat, bs.mat)

    def test_single_system_round_trip(self, tmp_path, plus_rho):
        path = tmp_path / "plus.json"
        statefile.save_state(path, plus_rho, label="plus")
        back = statefile.load_state(path)
        assert isinstance(back, pl.DensityMatrix)
        assert np.array_equal(back.mat, plus_rho.mat)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            statefile.load_state(tmp_path / "nope.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ParseError):
            statefile.load_state(path)

    def test_malformed_entry_location(self, tmp_path):
        doc = {"dims": [2], "matrix": [[[0.5, 0], [0.5]], [[0.5, 0], [0.5, 0]]]}
        path = tmp_path / "entry.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(ParseError, match=r"matrix\[0\]\[1\]"):
            statefile.load_state(path)

    def test_non_density_matrix(self, tmp_path):
        doc = {"dims": [2], "matrix": [[[1.0, 0], [0, 0]], [[0, 0], [1.0, 0]]]}
        path = tmp_path / "trace2.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(ValidationError):
            statefile.load_state(path)


class TestMeasureCommand:
    def test_text_output(self, mc_file, capsys):
        assert cli.main(["measure", str(mc_file)]) == 0
        out = capsys.readouterr().out
        assert "C_l1" in out and "0.6" in out

    def test_json_output(self, mc_file, capsys):
        assert cli.main(["measure", str(mc_file), "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["entries"]["N"] == pytest.approx(0.6, abs=1e-9)

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("[")
        assert cli.main(["measure", str(bad)]) == 2

    def test_validation_error_exit_code(self, tmp_path, capsys):
        doc = {"dims": [2], "matrix": [[[1.0, 0], [0, 0]], [[0, 0], [1.0, 0]]]}
        path = tmp_path / "trace2.json"
        path.write_text(json.dumps(doc))
        assert cli.main(["measure", str(path)]) == 3


class TestDetectCommand:
    def test_pairing_state(self, mc_file, capsys):
        assert cli.main(["detect", str(mc_file)]) == 0
        assert "pairing number: 1" in capsys.readouterr().out

    def test_decompose_json(self, mc_file, capsys):
        assert cli.main(["detect", str(mc_file), "--decompose", "--json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["measures"]["E_D"] == pytest.approx(0.2780719051126377, abs=1e-9)
        assert doc["measures"]["E_PPT"] == pytest.approx(0.6780719051126377, abs=1e-9)

    def test_not_pairing_exit_code(self, iso_file, capsys):
        assert cli.main(["detect", str(iso_file)]) == 4

    def test_single_system_file_rejected(self, tmp_path, plus_rho, capsys):
        path = tmp_path / "plus.json"
        statefile.save_state(path, plus_rho)
        assert cli.main(["detect", str(path)]) == 3


class TestConstructCommand:
    def test_mc(self, tmp_path, capsys):
        out = tmp_path / "mc.json"
        code = cli.main([
            "construct", "mc", "--out", str(out),
            "--coeffs", json.dumps([[0.5, 0.3], [0.3, 0.5]]),
            "--a-labels", "0", "1", "--b-labels", "0", "1",
            "--dims", "2", "2",
        ])
        assert code == 0
        report = json.loads((tmp_path / "mc.json.report.json").read_text())
        assert report["report"]["N"] == pytest.approx(0.6, abs=1e-9)
        back = statefile.load_state(out)
        assert np.allclose(back.mat[np.ix_([0, 3], [0, 3])], MC_COEFFS)

    def test_qubit_qudit(self, tmp_path, capsys):
        spec = {
            "p0": 0.0,
            "diag": [0.0] * 8,
            "blocks": [
                {"p": 0.5, "coeffs": [[0.5, 0.5], [0.5, 0.5]], "columns": [0, 1]},
                {"p": 0.5, "coeffs": [[0.5, 0.3], [0.3, 0.5]], "columns": [2, 3]},
            ],
        }
        spec_path = tmp_path / "spec.json"
        spec_path.write_text(json.dumps(spec))
        out = tmp_path / "qq.json"
        assert cli.main(["construct", "qubit-qudit", "--spec", str(spec_path),
                         "--out", str(out)]) == 0
        report = json.loads((tmp_path / "qq.json.report.json").read_text())
        assert report["report"]["pairing_number"] == 2

    def test_cnot_embed(self, tmp_path, plus_rho, capsys):
        inp = tmp_path / "plus.json"
        statefile.save_state(inp, plus_rho)
        out = tmp_path / "bell.json"
        assert cli.main(["construct", "cnot-embed", "--input", str(inp),
                         "--out", str(out)]) == 0
        back = statefile.load_state(out)
        n, _ = pl.negativity(back)
        assert n == pytest.approx(1.0, abs=1e-9)

    def test_appendix_a(self, tmp_path, plus_rho, capsys):
        inp = tmp_path / "plus.json"
        statefile.save_state(inp, plus_rho)
        out = tmp_path / "chain.json"
        assert cli.main(["construct", "appendix-a", "--input", str(inp),
                         "--out", str(out), "--L", "1"]) == 0
        report = json.loads((tmp_path / "chain.json.report.json").read_text())
        assert report["report"]["K"] == 4
        assert report["report"]["trace_M"] == pytest.approx(0.5, abs=1e-12)

    def test_appendix_a_cap_exit_code(self, tmp_path, plus_rho, capsys):
        inp = tmp_path / "plus.json"
        statefile.save_state(inp, plus_rho)
        assert cli.main(["construct", "appendix-a", "--input", str(inp),
                         "--out", str(tmp_path / "x.json"), "--dim-cap", "8"]) == 5

    def test_counterexample(self, tmp_path, capsys):
        out = tmp_path / "iso.json"
        assert cli.main(["construct", "counterexample", "--name", "isotropic",
                         "--p", "0.5", "--out", str(out)]) == 0
        report = json.loads((tmp_path / "iso.json.report.json").read_text())
        assert report["report"]["C_l1"] > report["report"]["N"]

    def test_unknown_counterexample_exit_code(self, tmp_path, capsys):
        assert cli.main(["construct", "counterexample", "--name", "nope",
                         "--out", str(tmp_path / "x.json")]) == 5


class TestVerifyCommand:
    def test_single_suite_ok(self, capsys):
        code = cli.main(["verify", "--suite", "negativity-bound",
                         "--trials", "20", "--seed", "7"])
        assert code == 0
        assert "negativity-bound" in capsys.readouterr().out

    def test_all_suites_json(self, capsys):
        code = cli.main(["verify", "--suite", "all", "--trials", "10",
                         "--seed", "3", "--dims", "2", "4", "--json"])
        assert code == 0
        reports = json.loads(capsys.readouterr().out)
        assert len(reports) == len(cli.verify.SUITES)
        assert all(r["violations"] == [] for r in reports)
        assert all(r["algorithm"] == "philox4x64" for r in reports)

    def test_unknown_suite_exit_code(self, capsys):
        assert cli.main(["verify", "--suite", "nonsense", "--trials", "5"]) == 5

    def test_env_seed(self, monkeypatch, capsys):
        monkeypatch.setenv("PAIRINGLAB_SEED", "42")
        cli.main(["verify", "--suite", "negativity-bound", "--trials", "5"])
        assert "seed=42" in capsys.readouterr().out

    def test_seed_reproducible_reports(self, capsys):
        args = ["verify", "--suite", "pairing-roundtrip", "--trials", "15",
                "--seed", "99", "--json"]
        cli.main(args)
        first = json.loads(capsys.readouterr().out)
        cli.main(args)
        second = json.loads(capsys.readouterr().out)
        assert first[0]["worst_gap"] == second[0]["worst_gap"]


class TestWitnessCommand:
    def test_pairing_state(self, mc_file, capsys):
        assert cli.main(["witness", str(mc_file)]) == 0
        out = capsys.readouterr().out
        assert "block negativity = 0.6" in out

    def test_not_pairing_exit_code(self, iso_file, capsys):
        assert cli.main(["witness", str(iso_file)]) == 4

    def test_diagonal_has_nothing_to_distill(self, tmp_path, diagonal_state, capsys):
        path = tmp_path / "diag.json"
        statefile.save_state(path, diagonal_state)
        assert cli.main(["witness", str(path)]) == 4
