import json

import pytest

from app.cli.main import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, main
from app.formats import DataRepository
from app.formats.schemas import ColouringFile, StateFile


def _report(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_game_on_square_passes_with_summary_line(capsys):
    assert main(["game", "--example", "square"]) == EXIT_PASS

    assert capsys.readouterr().out.startswith("game: coherent (pass)")


def test_validate_accepts_every_small_example(capsys):
    for name in ("square", "cube", "pyramid", "pyramid-distinct", "polygon-3"):
        assert main(["validate", "--example", name]) == EXIT_PASS
    assert "valid (pass)" in capsys.readouterr().out


def test_links_fail_for_alternating_state_loaded_from_file(tmp_path, capsys):
    state_path = DataRepository(tmp_path).write_model(tmp_path / "state.json", StateFile(stati=["O", "I", "O", "I"]))

    code = main(["links", "--example", "square", "--state", str(state_path), "--k", "1", "--json"])

    report = _report(capsys)
    assert code == EXIT_FAIL
    assert report["passed"] is False
    assert report["config"]["inputs"]["state"] == str(state_path)


def test_input_errors_exit_with_code_two(tmp_path, capsys):
    assert main(["game", "--example", "dodecahedron"]) == EXIT_INPUT
    assert "invalid_input:unknown_example:dodecahedron" in capsys.readouterr().err
    assert main([]) == EXIT_INPUT
    assert main(["game", "--example", "square", "--state", str(tmp_path / "absent.json")]) == EXIT_INPUT
    assert "missing_file" in capsys.readouterr().err


def test_game_without_example_needs_the_data_files(tmp_path, capsys):
    assert main(["game", "--data-dir", str(tmp_path / "empty")]) == EXIT_INPUT
    assert "missing_file" in capsys.readouterr().err


def test_chi_json_report_for_polygon(capsys):
    assert main(["chi", "--example", "polygon-3", "--json", "--seed", "5"]) == EXIT_PASS

    report = _report(capsys)
    assert report["verdict"] == "chi=-3"
    assert report["format_version"] == 1
    assert report["config"]["seed"] == 5
    assert report["config"]["inputs"] == {"example": "polygon-3"}


def test_b1_expectation_decides_exit_code(capsys):
    assert main(["b1", "--example", "cube", "--expect", "3"]) == EXIT_PASS
    assert main(["b1", "--example", "cube", "--expect", "4"]) == EXIT_FAIL
    assert "b1=3 (fail)" in capsys.readouterr().out


def test_cubulate_cube_with_betti_numbers(capsys):
    assert main(["cubulate", "--example", "cube", "--betti", "--json"]) == EXIT_PASS

    assert _report(capsys)["verdict"] == "consistent"


def test_cover_growth_on_polygon_satisfies_euler_identity(capsys):
    assert main(["cover", "--example", "polygon-2", "--ell", "1", "2", "--json"]) == EXIT_PASS

    report = _report(capsys)
    claims = {claim["name"]: claim["value"] for claim in report["claims"]}
    assert claims["euler_identity"] == [True, True]
    assert claims["euler_characteristic"] == -1


def test_perturb_distinct_pyramid_and_write_report(tmp_path, capsys):
    out = tmp_path / "reports" / "perturb.json"
    emitted = tmp_path / "character.json"

    code = main(
        [
            "perturb",
            "--example",
            "pyramid-distinct",
            "--target",
            "7",
            "--out",
            str(out),
            "--emit-character",
            str(emitted),
        ]
    )

    assert code == EXIT_PASS
    written = json.loads(out.read_text(encoding="utf-8"))
    claims = {claim["name"]: claim["value"] for claim in written["claims"]}
    assert written["verdict"] == "certified"
    assert claims["target_7.coefficients"] == ["1", "2"]
    assert claims["target_7.candidates_checked"] == 11
    assert claims["target_7.two_pi"] and all(claims["target_7.two_pi"])
    assert json.loads(emitted.read_text(encoding="utf-8"))["cusps"][0]["values"] == [[4, 1], [8, 1]]
    assert "certified (pass)" in capsys.readouterr().out


def test_perturb_without_cusps_is_an_input_error(capsys):
    assert main(["perturb", "--example", "cube", "--target", "1"]) == EXIT_INPUT
    assert "no_cusps" in capsys.readouterr().err


@pytest.mark.parametrize("name", ["pyramid", "pyramid-distinct"])
def test_cusps_report_surjective_conditions(name, capsys):
    assert main(["cusps", "--example", name, "--iota", "--json"]) == EXIT_PASS

    assert _report(capsys)["verdict"] == "Surjective"


def test_validate_fails_on_corrupted_colouring_file(tmp_path, capsys):
    path = DataRepository(tmp_path).write_model(tmp_path / "colouring.json", ColouringFile(palette=2, colours=[1, 1, 1, 2]))

    assert main(["validate", "--example", "square", "--colouring", str(path), "--json"]) == EXIT_FAIL

    report = json.dumps(_report(capsys))
    assert "adjacent facets share colour 1:0,1" in report


def test_perturb_sequence_reports_distinct_kernel_cusps(capsys):
    code = main(["perturb", "--example", "pyramid-distinct", "--target", "1", "2", "3", "7", "--json"])

    report = _report(capsys)
    claims = {claim["name"]: claim["value"] for claim in report["claims"]}
    assert code == EXIT_PASS
    assert report["verdict"] == "certified"
    assert claims["target_1.coefficients"] == ["0", "1"]
    assert claims["target_2.coefficients"] == ["1", "0"]
    assert claims["target_3.coefficients"] == ["1", "1"]
    assert claims["target_7.coefficients"] == ["1", "2"]
    assert claims["distinct_kernel_cusps"] == [[0, 0], [0, 1]]


@pytest.mark.slow
def test_cubulate_p8_squares_fit_the_default_cell_cap(capsys):
    assert main(["cubulate", "--example", "p8", "--dim", "1"]) == EXIT_PASS
    assert "(pass)" in capsys.readouterr().out


@pytest.mark.slow
def test_gen_colouring_with_state_search_writes_a_balanced_state(tmp_path, capsys):
    code = main(
        [
            "gen-colouring",
            "--example",
            "p8",
            "--out-dir",
            str(tmp_path),
            "--search-attempts",
            "2",
            "--seed",
            "3",
            "--json",
        ]
    )

    report = _report(capsys)
    claims = {claim["name"]: claim["value"] for claim in report["claims"]}
    assert code == EXIT_PASS
    assert claims["balanced"] is True
    assert claims["state_search"]["attempts"] <= 2
    assert claims["state_search"]["coherent_candidates"] >= 1
