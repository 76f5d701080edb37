"""Command-line interface: exit codes, wire formats, fixtures."""

import json

import pytest

from troplift import jsonio
from troplift.cli import dispatch, main
from troplift.fixtures import FIXTURE_NAMES, fixture


@pytest.fixture()
def fixture_dir(tmp_path):
    for name in FIXTURE_NAMES:
        assert main(["fixtures", name, "--out", str(tmp_path)]) == 0
    return tmp_path


class TestFixtures:
    def test_all_names_written(self, fixture_dir):
        for name in FIXTURE_NAMES:
            assert (fixture_dir / f"{name}.json").exists()

    def test_unknown_fixture_is_usage_error(self, tmp_path, capsys):
        with pytest.raises(SystemExit):
            dispatch(["fixtures", "nope", "--out", str(tmp_path)])

    def test_matrix_fixtures_reparse(self, fixture_dir):
        for name in ("eq1", "fig2a", "fig3b", "fig3c", "fig4a", "ex52", "cocircuit-ag23"):
            obj = json.loads((fixture_dir / f"{name}.json").read_text())
            assert jsonio.decode_matrix(obj).entries == fixture(name).entries


class TestExitCodes:
    def test_member_positive_and_negative(self, fixture_dir):
        ex52 = str(fixture_dir / "ex52.json")
        assert main(["member", "--variety", "sym_corank1", "--mode", "C+", "--in", ex52]) == 0
        assert main(["member", "--variety", "sym_corank1", "--mode", "R+", "--in", ex52]) == 1

    def test_input_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        assert main(["rank", "--in", str(bad)]) == 2
        assert main(["rank", "--in", str(tmp_path / "missing.json")]) == 2

    def test_infinite_entries_rejected_at_parse_time(self, tmp_path):
        bad = tmp_path / "inf.json"
        bad.write_text(json.dumps({"symmetric": False, "entries": [["0", "inf"], ["1", "2"]]}))
        assert main(["rank", "--in", str(bad)]) == 2

    def test_size_limit(self, tmp_path):
        big = tmp_path / "big.json"
        big.write_text(
            json.dumps({"symmetric": False, "entries": [["0"] * 9 for _ in range(9)]})
        )
        assert main(["trop-det", "--in", str(big)]) == 3

    def test_impossible_lift_is_negative(self, fixture_dir):
        eq1 = str(fixture_dir / "eq1.json")
        assert main(["lift", "--variety", "rank2", "--mode", "R+", "--in", eq1]) == 1
        ex52 = str(fixture_dir / "ex52.json")
        assert main(["lift", "--variety", "sym_corank1", "--mode", "R+", "--in", ex52]) == 1


class TestCommands:
    def test_trop_det_output(self, fixture_dir, capsys):
        assert main(["trop-det", "--in", str(fixture_dir / "eq1.json")]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["plain"]["tie"] is True
        assert payload["plain"]["min_value"] == "0"
        assert payload["symmetric"]["tie"] is False

    def test_rank_output(self, fixture_dir, capsys):
        assert main(["rank", "--in", str(fixture_dir / "eq1.json")]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"tropical_rank": 2, "symmetric_tropical_rank": 3}

    def test_cocircuit_rank(self, fixture_dir, capsys):
        assert main(["rank", "--in", str(fixture_dir / "cocircuit-ag23.json")]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["tropical_rank"] == 3

    def test_tree_dot(self, fixture_dir, capsys):
        assert main(["tree", "--in", str(fixture_dir / "eq1.json"), "--format", "dot"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph") and "leaf_red_3" in out

    def test_tree_json_reparses(self, fixture_dir, capsys):
        assert main(["tree", "--in", str(fixture_dir / "fig2a.json")]) == 0
        obj = json.loads(capsys.readouterr().out)
        tree = jsonio.decode_tree(obj)
        assert tree.red_count == tree.blue_count == 3

    def test_lift_verify_roundtrip(self, fixture_dir, tmp_path, capsys):
        cert_file = tmp_path / "cert.json"
        code = main(
            [
                "lift", "--variety", "sym_rank2", "--mode", "C+",
                "--in", str(fixture_dir / "fig2a.json"), "--out", str(cert_file),
            ]
        )
        assert code == 0
        assert main(["verify", "--in", str(cert_file)]) == 0
        # tamper with one exponent and re-verify
        obj = json.loads(cert_file.read_text())
        obj["lift"][0][1]["terms"][0]["exp"] = "13"
        cert_file.write_text(json.dumps(obj))
        assert main(["verify", "--in", str(cert_file)]) == 1

    def test_polytope_table2(self, capsys):
        assert main(["polytope", "--table2"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 5
        assert rows[0]["monomial"] == "2*x12*x13*x23*x44"

    def test_polytope_counts(self, capsys):
        assert main(["polytope", "--n", "4", "--what", "vertices"]) == 0
        assert len(json.loads(capsys.readouterr().out)) == 14

    def test_table2_fixture_matches_cli(self, fixture_dir, capsys):
        assert main(["polytope", "--table2"]) == 0
        via_cli = json.loads(capsys.readouterr().out)
        via_fixture = json.loads((fixture_dir / "table2.json").read_text())
        assert via_cli == via_fixture

    def test_seed_env_override(self, fixture_dir, tmp_path, capsys, monkeypatch):
        ex52 = str(fixture_dir / "ex52.json")
        monkeypatch.setenv("TROPLIFT_SEED", "7")
        assert main(["lift", "--variety", "sym_corank1", "--mode", "R", "--in", ex52]) == 0
        via_env = json.loads(capsys.readouterr().out)
        assert via_env["seed"] == 7
        monkeypatch.delenv("TROPLIFT_SEED")
        assert main(["lift", "--variety", "sym_corank1", "--mode", "R", "--in", ex52, "--seed", "7"]) == 0
        via_flag = json.loads(capsys.readouterr().out)
        assert via_flag == via_env
