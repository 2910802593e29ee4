import json
from fractions import Fraction

import pytest

from app.characters import Character, cusp_tori
from app.errors import InputError
from app.formats import DataRepository
from app.formats.convert import (
    character_from_file,
    character_to_file,
    colouring_from_file,
    colouring_to_file,
    gram_from_file,
    gram_to_file,
    moves_from_file,
    moves_to_file,
    polytope_from_file,
    polytope_to_file,
    state_from_file,
    state_to_file,
)
from app.formats.schemas import CharacterFile, ColouringFile, GramFile, MovesFile, PolytopeFile, StateFile
from app.game import State


def test_pyramid_inputs_survive_a_trip_through_data_files(tmp_path, pyramid_distinct):
    P, colouring, state, moves = pyramid_distinct
    repository = DataRepository(tmp_path)

    repository.write_model(repository.path("p.json"), polytope_to_file(P))
    repository.write_model(repository.path("c.json"), colouring_to_file(colouring))
    repository.write_model(repository.path("s.json"), state_to_file(state))
    repository.write_model(repository.path("m.json"), moves_to_file(moves))

    loaded = polytope_from_file(repository.load_model(repository.path("p.json"), PolytopeFile))
    assert loaded.dim == P.dim
    assert loaded.num_facets == P.num_facets
    assert loaded.adjacency == P.adjacency
    assert loaded.finite_vertices == P.finite_vertices
    assert [vertex.pairs for vertex in loaded.ideal_vertices] == [vertex.pairs for vertex in P.ideal_vertices]
    assert colouring_from_file(repository.load_model(repository.path("c.json"), ColouringFile)) == colouring
    assert state_from_file(repository.load_model(repository.path("s.json"), StateFile)) == state
    assert moves_from_file(repository.load_model(repository.path("m.json"), MovesFile)) == moves


def test_character_file_keeps_exact_fractions(tmp_path):
    repository = DataRepository(tmp_path)
    character = Character.build({(0, 0): [Fraction(1, 3), -2], (0, 1): [0, Fraction(-5, 7)]})

    path = repository.write_model(repository.path("chi.json"), character_to_file(character))
    payload = json.loads(path.read_text(encoding="utf-8"))
    loaded = character_from_file(repository.load_model(path, CharacterFile))

    assert payload["format_version"] == 1
    assert payload["cusps"][0]["values"] == [[1, 3], [-2, 1]]
    assert loaded == character


def test_gram_file_round_trips_default_cusp_metrics(tmp_path, pyramid_distinct):
    P, colouring, _, _ = pyramid_distinct
    repository = DataRepository(tmp_path)
    tori = cusp_tori(P, colouring)

    path = repository.write_model(repository.path("gram.json"), gram_to_file(tori))
    grams = gram_from_file(repository.load_model(path, GramFile))

    assert sorted(grams) == [torus.key for torus in tori]
    assert all(grams[torus.key] == torus.gram for torus in tori)


def test_load_model_reports_missing_and_malformed_files(tmp_path):
    repository = DataRepository(tmp_path)
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")

    with pytest.raises(InputError, match="^invalid_input:missing_file:"):
        repository.load_model(tmp_path / "absent.json", StateFile)
    with pytest.raises(InputError, match="^invalid_input:malformed_json:"):
        repository.load_model(broken, StateFile)


def test_load_model_rejects_unknown_version_and_status_labels(tmp_path):
    repository = DataRepository(tmp_path)
    future = repository.write_json(tmp_path / "future.json", {"format_version": 2, "stati": ["I"]})
    odd = repository.write_json(tmp_path / "odd.json", {"format_version": 1, "stati": ["I", "X"]})
    zero = repository.write_json(
        tmp_path / "zero.json",
        {"format_version": 1, "cusps": [{"ideal_vertex": 0, "base": 0, "values": [[1, 0]]}]},
    )

    with pytest.raises(InputError, match="invalid_StateFile:format_version"):
        repository.load_model(future, StateFile)
    with pytest.raises(InputError, match="invalid_StateFile:stati.1"):
        repository.load_model(odd, StateFile)
    with pytest.raises(InputError, match="invalid_CharacterFile"):
        repository.load_model(zero, CharacterFile)


def test_state_labels_outside_i_and_o_are_rejected_by_the_domain_loader():
    with pytest.raises(ValueError, match="unsupported_status:X"):
        State.from_labels(["I", "X"])


def test_read_json_falls_back_to_default(tmp_path):
    repository = DataRepository(tmp_path)
    (tmp_path / "bad.json").write_text("[1,", encoding="utf-8")

    assert repository.read_json(tmp_path / "absent.json", {"empty": True}) == {"empty": True}
    assert repository.read_json(tmp_path / "bad.json", []) == []


def test_write_json_is_atomic_and_encodes_fractions(tmp_path):
    repository = DataRepository(tmp_path)
    path = repository.write_json(tmp_path / "nested" / "out.json", {"value": Fraction(-3, 4), "set": {3, 1}})

    text = path.read_text(encoding="utf-8")
    assert text.endswith("\n")
    assert json.loads(text) == {"value": [-3, 4], "set": [1, 3]}
    assert [entry.name for entry in path.parent.iterdir()] == ["out.json"]
