"""End-to-end tests of the crossint-lab command line."""

import json

import jsonschema
import pytest

from crossint_lab.cli import run
from crossint_lab.constructions import (
    acz_pair,
    canonical_pair,
    legal_canonical_params,
)
from crossint_lab.io.fam_format import encode_pair, read_pair
from crossint_lab.models.params import CanonicalParams
from crossint_lab.search import apply_relabeling

pytestmark = pytest.mark.integration


@pytest.fixture
def acz_file(tmp_path):
    path = tmp_path / "pair.fam"
    assert run(["construct", "--kind", "acz", "--n", "4", "--ell", "1", "-o", str(path)]) == 0
    return path


def _json_out(capsys):
    return json.loads(capsys.readouterr().out)


class TestConstruct:
    def test_writes_acz_pair(self, tmp_path, capsys):
        path = tmp_path / "pair.fam"
        args = ["construct", "--kind", "acz", "--n", "4", "--ell", "1"]
        assert run(args + ["-o", str(path)]) == 0
        assert path.read_text(encoding="utf-8") == encode_pair(acz_pair(4, 1))
        out = capsys.readouterr().out
        assert out.startswith(f"wrote {path}")
        assert "product=8" in out

    def test_prints_pair_without_output(self, capsys):
        assert run(["construct", "--kind", "acz", "--n", "2", "--ell", "1"]) == 0
        assert capsys.readouterr().out == encode_pair(acz_pair(2, 1))

    def test_canonical_json(self, capsys, load_schema):
        code = run(
            [
                "construct", "--kind", "canonical", "--n", "5", "--ell", "2",
                "--kappa", "3", "--tau", "1", "--nprime", "4", "--json",
            ]
        )
        assert code == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("construct"))
        assert payload["product"] == 12
        assert payload["params"]["kappa"] == 3

    def test_matrix_json(self, capsys, load_schema):
        code = run(
            [
                "construct", "--kind", "matrix", "--variant", "o2",
                "--n", "4", "--ell", "1", "--k", "3", "--json",
            ]
        )
        assert code == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("construct"))
        assert payload["params"] == {"variant": "o2", "k": 3, "h": 1}
        assert payload["product"] == 8

    def test_canonical_needs_all_parameters(self, capsys):
        code = run(["construct", "--kind", "canonical", "--n", "5", "--ell", "2"])
        assert code == 2
        assert "PARAMETER_ERROR" in capsys.readouterr().err

    def test_illegal_canonical_parameters(self, capsys):
        code = run(
            [
                "construct", "--kind", "canonical", "--n", "5", "--ell", "2",
                "--kappa", "2", "--tau", "0", "--nprime", "5",
            ]
        )
        assert code == 2

    def test_too_small_ground_set(self, tmp_path, capsys):
        out = tmp_path / "never.fam"
        code = run(["construct", "--kind", "acz", "--n", "3", "--ell", "2", "-o", str(out)])
        assert code == 2
        assert not out.exists()


class TestVerify:
    def test_true(self, acz_file, capsys):
        assert run(["verify", str(acz_file)]) == 0
        assert capsys.readouterr().out.strip() == "cross-intersecting: true"

    def test_false_with_ell_override(self, acz_file, capsys):
        assert run(["verify", str(acz_file), "--ell", "2"]) == 1
        assert capsys.readouterr().out.strip() == "cross-intersecting: false"

    def test_json(self, acz_file, capsys, load_schema):
        assert run(["verify", str(acz_file), "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("verify"))
        assert payload["product"] == 8

    def test_missing_file(self, tmp_path, capsys):
        assert run(["verify", str(tmp_path / "missing.fam")]) == 2
        assert capsys.readouterr().err.startswith("error: IO_ERROR:")

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "bad.fam"
        path.write_text("n 3\nA: 3,1\n%%\nell 1\n", encoding="utf-8")
        assert run(["verify", str(path), "--json"]) == 2
        error = json.loads(capsys.readouterr().err)
        assert error["error"] == "FORMAT_ERROR"
        assert error["details"]["line"] == 2


class TestSearch:
    def test_json_value(self, capsys, load_schema):
        assert run(["search", "--n", "4", "--ell", "2", "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("search"))
        assert payload["value"] == 6
        assert payload["conjectured_max"] == 6
        assert len(payload["witnesses"]) == 1

    def test_all_optima_and_witness_file(self, tmp_path, capsys):
        out = tmp_path / "best.fam"
        code = run(
            ["search", "--n", "3", "--ell", "1", "--all-optima", "--json", "-o", str(out)]
        )
        assert code == 0
        payload = _json_out(capsys)
        assert len(payload["witnesses"]) > 1
        assert encode_pair(read_pair(out)) == payload["witnesses"][0]

    def test_prune_flags(self, capsys):
        assert run(["search", "--n", "4", "--ell", "1", "--prune", "none", "--json"]) == 0
        assert _json_out(capsys)["value"] == 8
        code = run(
            [
                "search", "--n", "4", "--ell", "1", "--prune", "product",
                "--prune", "dimension", "--json",
            ]
        )
        assert code == 0
        assert _json_out(capsys)["value"] == 8

    def test_none_is_exclusive(self, capsys):
        code = run(
            ["search", "--n", "4", "--ell", "1", "--prune", "none", "--prune", "product"]
        )
        assert code == 2

    def test_table(self, capsys):
        assert run(["search", "--n", "3", "--ell", "1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("P_1(3)")
        assert "ell 1" in out

    def test_hard_cap(self, capsys):
        assert run(["search", "--n", "9", "--ell", "1", "--json"]) == 2
        error = json.loads(capsys.readouterr().err)
        assert error["error"] == "PARAMETER_ERROR"
        assert error["details"]["parameter"] == "n"

    def test_hard_cap_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("CROSSINT_HARD_CAP", "3")
        assert run(["search", "--n", "4", "--ell", "1"]) == 2

    def test_bad_configuration(self, monkeypatch, capsys):
        monkeypatch.setenv("CROSSINT_HARD_CAP", "99")
        assert run(["search", "--n", "4", "--ell", "1"]) == 2
        assert "CONFIGURATION_ERROR" in capsys.readouterr().err


class TestBounds:
    def test_json(self, capsys, load_schema):
        assert run(["bounds", "--n", "6", "--ell", "2", "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("bounds"))
        assert payload["conjectured_max"] == 24
        assert payload["theorem_backed_value"] == 24

    def test_unproven_ell(self, capsys):
        assert run(["bounds", "--n", "8", "--ell", "3", "--json"]) == 0
        payload = _json_out(capsys)
        assert payload["theorem_backed_value"] is None
        assert payload["known_upper_bound"] == 128

    def test_table_to_file(self, tmp_path, capsys):
        out = tmp_path / "bounds.txt"
        assert run(["bounds", "--n", "5", "--ell", "1", "-o", str(out)]) == 0
        assert "frankl rodl" in out.read_text(encoding="utf-8")


class TestAnalyze:
    def test_acz_report(self, acz_file, capsys, load_schema):
        assert run(["analyze", str(acz_file), "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("analyze"))
        assert (payload["k"], payload["h"], payload["k_plus_h"]) == (1, 3, 4)
        assert payload["pivot_cols"] == [1]
        assert payload["duality"] is True
        assert (payload["r"], payload["s"], payload["c"]) == (0, 1, 0)

    def test_bad_b1(self, acz_file, capsys):
        assert run(["analyze", str(acz_file), "--b1", "9"]) == 2

    def test_duality_not_applicable(self, tmp_path, capsys, load_schema):
        path = tmp_path / "small.fam"
        path.write_text("n 3\nA: 1\n%%\nB: 1\nell 1\n", encoding="utf-8")
        assert run(["analyze", str(path), "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("analyze"))
        assert payload["duality"] == "n/a"

    def test_duality_skipped_when_not_cross_intersecting(
        self, tmp_path, capsys, load_schema
    ):
        path = tmp_path / "broken.fam"
        path.write_text("n 2\nA: 1\n%%\nB: 2\nB: 1,2\nell 1\n", encoding="utf-8")
        assert run(["analyze", str(path), "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("analyze"))
        assert payload["k"] + payload["h"] == 2
        assert payload["duality"] == "n/a"
        assert run(["verify", str(path)]) == 1

    def test_strategy_flag(self, tmp_path, capsys):
        path = tmp_path / "o1.fam"
        assert run(
            [
                "construct", "--kind", "matrix", "--variant", "o1",
                "--n", "7", "--ell", "2", "-o", str(path),
            ]
        ) == 0
        capsys.readouterr()
        assert run(["analyze", str(path), "--strategy", "first-column"]) == 0
        assert "k plus h" in capsys.readouterr().out


def _pipeline_params():
    for ell in range(0, 4):
        for n in range(max(1, 2 * ell), 9):
            marks = [pytest.mark.slow] if n > 5 else []
            for p in legal_canonical_params(n, ell):
                yield pytest.param(
                    p,
                    marks=marks,
                    id=f"n{n}-l{ell}-k{p.kappa}-t{p.tau}-m{p.nprime}",
                )


class TestClassify:
    @pytest.mark.parametrize("params", list(_pipeline_params()))
    def test_pipeline(self, params, tmp_path, capsys, load_schema):
        path = tmp_path / "canonical.fam"
        args = [
            "construct", "--kind", "canonical",
            "--n", str(params.n), "--ell", str(params.ell),
            "--kappa", str(params.kappa), "--tau", str(params.tau),
            "--nprime", str(params.nprime), "-o", str(path),
        ]
        assert run(args) == 0
        assert run(["verify", str(path)]) == 0
        capsys.readouterr()
        assert run(["classify", str(path), "--json"]) == 0
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("classify"))
        assert payload["matched"] is True
        assert payload["extension_beyond_theorem"] is (params.ell == 0)
        rebuilt = apply_relabeling(
            canonical_pair(CanonicalParams(**payload["params"])),
            payload["relabeling"],
            payload["swapped"],
        )
        assert rebuilt == read_pair(path)

    def test_unmatched(self, tmp_path, capsys, load_schema):
        path = tmp_path / "small.fam"
        path.write_text("n 3\nA: 1\n%%\nB: 1,2\nell 1\n", encoding="utf-8")
        assert run(["classify", str(path), "--json"]) == 1
        payload = _json_out(capsys)
        jsonschema.validate(payload, load_schema("classify"))
        assert payload["params"] is None

    def test_table(self, acz_file, capsys):
        assert run(["classify", str(acz_file)]) == 0
        out = capsys.readouterr().out
        assert "kappa" in out and "relabeling" in out


class TestUsage:
    def test_unknown_flag(self, capsys):
        assert run(["search", "--n", "4", "--ell", "1", "--fast"]) == 2

    def test_no_command(self, capsys):
        assert run([]) == 2

    def test_help(self, capsys):
        assert run(["--help"]) == 0
        assert "selftest" not in capsys.readouterr().out

    def test_selftest(self, capsys):
        assert run(["selftest", "--seed", "3", "--rounds", "5", "--json"]) == 0
        payload = _json_out(capsys)
        assert payload["rounds"] == 5
        assert all(failed == [] for failed in payload["failures"].values())

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_selftest_default_rounds(self, seed, capsys):
        assert run(["selftest", "--seed", str(seed), "--json"]) == 0
        payload = _json_out(capsys)
        assert payload["rounds"] == 20
        assert all(failed == [] for failed in payload["failures"].values())

    def test_selftest_full_rounds(self, capsys):
        assert run(["selftest", "--seed", "1", "--rounds", "200", "--json"]) == 0
        payload = _json_out(capsys)
        assert all(failed == [] for failed in payload["failures"].values())

    def test_selftest_is_deterministic(self, capsys):
        run(["selftest", "--seed", "9", "--rounds", "3", "--json"])
        first = capsys.readouterr().out
        run(["selftest", "--seed", "9", "--rounds", "3", "--json"])
        assert capsys.readouterr().out == first
