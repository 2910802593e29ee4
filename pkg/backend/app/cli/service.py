"""Subcommand pipelines: load inputs, run the library, assemble a report."""

from __future__ import annotations

import argparse
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from sympy import Matrix, Rational

from app.characters import (
    TWO_PI,
    Character,
    CuspVerdict,
    PairCondition,
    all_surjectivity_conditions,
    case_cocycle,
    character_from_cocycle,
    choi_park_b1,
    cusp_loops,
    cusp_tori,
    evaluate_torus,
    iota_star_matrix,
    perturb,
    perturb_sequence,
)
from app.cli.reports import Report, RunConfig, plain
from app.cubulation import (
    build,
    chain_complex,
    cocycle,
    cover_boundary_components,
    cover_growth,
    euler_characteristic,
    euler_characteristic_from_nerve,
    orient,
    orientation_cocycle,
    poincare_lefschetz_check,
)
from app.errors import BadPairPresent, InputError
from app.formats import (
    CharacterFile,
    ColouringFile,
    DataRepository,
    GramFile,
    MovesFile,
    PolytopeFile,
    StateFile,
    character_from_file,
    character_to_file,
    colouring_from_file,
    colouring_to_file,
    gram_from_file,
    moves_from_file,
    moves_to_file,
    polytope_from_file,
    polytope_to_file,
    state_from_file,
    state_to_file,
)
from app.game import Moves, State, classify_all, halfspace_state, is_balanced, validate_moves, validate_state
from app.homology.betti import betti
from app.morse import check_all_links, search_state
from app.paths import p8_paths
from app.polytope import (
    Colouring,
    Polytope,
    cube_colouring,
    cube_polytope,
    cusp_bases,
    cusp_count,
    face_numbers,
    frame_colouring,
    gosset_p8,
    polygon_colouring,
    polygon_with_ideal_vertex,
    pyramid_colouring,
    pyramid_polytope,
    square_colouring,
    square_polytope,
    validate_colouring,
    validate_polytope,
    vertex_type_census,
)
from app.settings import RunSettings
from app.worker.pool import resolve_jobs

logger = logging.getLogger(__name__)

P8_FACETS = 240
P8_PALETTE = 15


@dataclass
class Inputs:
    polytope: Polytope
    colouring: Colouring | None = None
    state: State | None = None
    moves: Moves | None = None
    sources: dict[str, str] = field(default_factory=dict)

    def require_colouring(self) -> Colouring:
        if self.colouring is None:
            raise InputError("colouring_required")
        return self.colouring

    def require_game(self) -> tuple[Colouring, State, Moves]:
        colouring = self.require_colouring()
        if self.state is None or self.moves is None:
            raise InputError("state_and_moves_required")
        return colouring, self.state, self.moves


def _single_outward_state(num_facets: int) -> State:
    return State(tuple(facet == 0 for facet in range(num_facets)))


def example_inputs(name: str) -> Inputs:
    """Built-in inputs: square, cube, pyramid, pyramid-distinct, polygon-N (the 2N-gon) and p8."""
    key = str(name).strip().lower()
    if key == "square":
        P, colouring = square_polytope(), square_colouring()
        state = _single_outward_state(P.num_facets)
    elif key == "cube":
        P, colouring = cube_polytope(), cube_colouring()
        state = _single_outward_state(P.num_facets)
    elif key in {"pyramid", "pyramid-distinct"}:
        P, colouring = pyramid_polytope(), pyramid_colouring(distinct_sides=key == "pyramid-distinct")
        state = _single_outward_state(P.num_facets)
    elif key.startswith("polygon-"):
        try:
            n = int(key.split("-", 1)[1])
        except ValueError as exc:
            raise InputError(f"unknown_example:{name}") from exc
        P, colouring = polygon_with_ideal_vertex(n), polygon_colouring(n)
        state = _single_outward_state(P.num_facets)
    elif key == "p8":
        P, colouring, state = gosset_p8(), frame_colouring(), halfspace_state()
    else:
        raise InputError(f"unknown_example:{name}")
    moves = Moves.discrete(colouring.palette_size)
    return Inputs(P, colouring, state, moves, {"example": key})


def load_inputs(args: argparse.Namespace, settings: RunSettings) -> Inputs:
    """Example data overlaid with explicit files; without an example, the P8 files of the data directory."""
    data_dir = Path(args.data_dir) if getattr(args, "data_dir", None) else settings.data_dir
    repository = DataRepository(data_dir)
    example = getattr(args, "example", None)
    if example:
        inputs = example_inputs(example)
        defaults: dict[str, Path] = {}
    else:
        polytope_path = getattr(args, "polytope", None) or p8_paths(data_dir)["polytope"]
        inputs = Inputs(polytope_from_file(repository.load_model(Path(polytope_path), PolytopeFile)))
        inputs.sources["polytope"] = str(polytope_path)
        defaults = p8_paths(data_dir)

    loaders = (
        ("colouring", ColouringFile, colouring_from_file),
        ("state", StateFile, state_from_file),
        ("moves", MovesFile, moves_from_file),
    )
    for name, model, convert in loaders:
        explicit = getattr(args, name, None)
        path = Path(explicit) if explicit else defaults.get(name)
        if path is None or (not explicit and not path.exists()):
            continue
        setattr(inputs, name, convert(repository.load_model(path, model)))
        inputs.sources[name] = str(path)
    return inputs


def _checked_game(inputs: Inputs) -> tuple[Colouring, State, Moves]:
    colouring, state, moves = inputs.require_game()
    for report in (validate_state(state, inputs.polytope.num_facets), validate_moves(moves, colouring.palette_size)):
        if not report.is_valid:
            raise InputError(report.violations[0])
    return colouring, state, moves


def _parse_vertices(raw) -> list[int] | None:
    if not raw:
        return None
    return sorted({int(value) for value in raw})


def make_config(args: argparse.Namespace, settings: RunSettings, inputs: Inputs | None) -> RunConfig:
    skipped = {"command", "handler", "polytope", "colouring", "state", "moves", "out", "json", "jobs", "seed", "data_dir"}
    params = {key: value for key, value in sorted(vars(args).items()) if key not in skipped and value is not None}
    return RunConfig(
        command=args.command,
        inputs=dict(sorted((inputs.sources if inputs else {}).items())),
        params=plain(params),
        jobs=resolve_jobs(getattr(args, "jobs", None)),
        cell_cap=settings.cell_cap,
        tietze_budget=settings.tietze_budget,
        seed=settings.random_seed if getattr(args, "seed", None) is None else int(args.seed),
    )


def run_gen_p8(args: argparse.Namespace, settings: RunSettings) -> Report:
    out_dir = Path(args.out_dir) if args.out_dir else (Path(args.data_dir) if args.data_dir else settings.data_dir)
    repository = DataRepository(out_dir)
    targets = p8_paths(out_dir)
    P = gosset_p8()
    written = {"polytope": repository.write_model(targets["polytope"], polytope_to_file(P))}
    if args.with_colouring:
        written["colouring"] = repository.write_model(targets["colouring"], colouring_to_file(frame_colouring()))
    if args.with_state:
        written["state"] = repository.write_model(targets["state"], state_to_file(halfspace_state()))
        written["moves"] = repository.write_model(targets["moves"], moves_to_file(Moves.discrete(P8_PALETTE)))
    validation = validate_polytope(P)
    inputs = Inputs(P, sources={name: str(path) for name, path in written.items()})
    report = Report(
        command=args.command,
        passed=validation.is_valid,
        verdict="written" if validation.is_valid else "invalid",
        config=make_config(args, settings, inputs),
    )
    report.claim("facets", P.num_facets, "polytope.gosset_p8")
    report.claim("ideal_vertices", len(P.ideal_vertices), "polytope.gosset_p8")
    report.claim("finite_vertices", len(P.finite_vertices), "polytope.gosset_p8")
    report.claim("violations", validation.violations, "polytope.validate_polytope")
    return report


def run_gen_colouring(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    if inputs.polytope.num_facets != P8_FACETS:
        raise InputError(f"frame_colouring_needs_p8:{inputs.polytope.num_facets}")
    out_dir = Path(args.out_dir) if args.out_dir else (Path(args.data_dir) if args.data_dir else settings.data_dir)
    repository = DataRepository(out_dir)
    targets = p8_paths(out_dir)
    colouring, state, moves = frame_colouring(), halfspace_state(), Moves.discrete(P8_PALETTE)
    search = None
    if args.search_attempts:
        seed = settings.random_seed if args.seed is None else int(args.seed)
        search = search_state(inputs.polytope, colouring, moves, attempts=int(args.search_attempts), seed=seed)
        state = search.state
    repository.write_model(targets["colouring"], colouring_to_file(colouring))
    repository.write_model(targets["state"], state_to_file(state))
    repository.write_model(targets["moves"], moves_to_file(moves))
    validation = validate_colouring(inputs.polytope, colouring)
    balanced = is_balanced(colouring, state)
    report = Report(
        command=args.command,
        passed=validation.is_valid and balanced,
        verdict="written",
        config=make_config(args, settings, inputs),
    )
    report.claim("palette", colouring.palette_size, "polytope.frame_colouring")
    report.claim("vertex_types", vertex_type_census(inputs.polytope, colouring), "polytope.vertex_type_census")
    report.claim("balanced", balanced, "game.is_balanced")
    if search is not None:
        report.claim("state_search", search.as_dict(), "morse.search_state")
    report.claim("violations", validation.violations, "polytope.validate_colouring")
    return report


def run_validate(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P = inputs.polytope
    checks = {"polytope": validate_polytope(P)}
    if inputs.colouring is not None:
        checks["colouring"] = validate_colouring(P, inputs.colouring)
    if inputs.state is not None:
        checks["state"] = validate_state(inputs.state, P.num_facets)
    if inputs.moves is not None and inputs.colouring is not None:
        checks["moves"] = validate_moves(inputs.moves, inputs.colouring.palette_size)
    passed = all(check.is_valid for check in checks.values())
    report = Report(
        command=args.command,
        passed=passed,
        verdict="valid" if passed else "invalid",
        config=make_config(args, settings, inputs),
    )
    for name, check in checks.items():
        report.claim(f"{name}_violations", check.violations, f"validation.{name}")
        report.details[name] = check.as_dict()
    if inputs.colouring is not None and "state" in checks and checks["state"].is_valid:
        report.claim("balanced", is_balanced(inputs.colouring, inputs.state), "game.is_balanced")
    return report


def run_game(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    colouring, state, moves = _checked_game(inputs)
    game = classify_all(inputs.polytope, colouring, state, moves)
    if game.coherent:
        verdict = "coherent"
    elif game.cocycle_ok:
        verdict = "cocycle_only"
    else:
        verdict = "bad_pairs"
    report = Report(command=args.command, passed=game.coherent, verdict=verdict, config=make_config(args, settings, inputs))
    report.claim("pair_counts", game.counts, "game.classify_all")
    report.claim("bad_pairs", [list(pair) for pair in game.bad_pairs], "game.classify_all")
    report.claim("balanced", is_balanced(colouring, state), "game.is_balanced")
    return report


def _boundary_betti(P: Polytope, colouring: Colouring) -> list[int]:
    """Betti numbers of the disjoint union of cusp tori, each a flat (n-1)-torus."""
    cusps = cusp_count(P, colouring).total
    return [cusps * math.comb(P.dim - 1, i) for i in range(P.dim)]


def run_cubulate(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P = inputs.polytope
    colouring = inputs.require_colouring()
    dim = P.dim if args.dim is None else int(args.dim)
    C = build(P, colouring, dim, cell_cap=settings.cell_cap)
    checks_ok = True
    report = Report(command=args.command, passed=True, verdict="built", config=make_config(args, settings, inputs))
    report.claim("cell_counts", C.cell_counts(), "cubulation.build")
    chi_nerve = euler_characteristic_from_nerve(P, colouring)
    report.claim("euler_characteristic_from_nerve", chi_nerve, "cubulation.euler_characteristic_from_nerve")
    if C.is_complete:
        chi = euler_characteristic(C)
        report.claim("euler_characteristic", chi, "cubulation.euler_characteristic")
        checks_ok &= chi == chi_nerve
    if inputs.state is not None and inputs.moves is not None:
        _, state, moves = _checked_game(inputs)
        try:
            z = cocycle(orient(C, state, moves))
            report.claim("cocycle", "ok" if C.top_dim >= 2 else "unverified", "cubulation.cocycle")
            report.claim("cocycle_sum", int(z.values.sum()), "cubulation.cocycle")
        except BadPairPresent as exc:
            report.claim("cocycle", f"bad_pair:{exc.pair[0]},{exc.pair[1]}", "cubulation.cocycle")
    if args.betti:
        values = betti(chain_complex(C), field=args.field)
        report.claim("betti", values, f"homology.betti[{args.field}]")
        if C.is_complete and P.ideal_vertices:
            rows = poincare_lefschetz_check(values, _boundary_betti(P, colouring), P.dim)
            report.claim(
                "lefschetz",
                [{"degree": row.degree, "lhs": row.lhs, "rhs": row.rhs, "holds": row.holds} for row in rows],
                "cubulation.poincare_lefschetz_check",
            )
            checks_ok &= all(row.holds for row in rows)
    report.passed = bool(checks_ok)
    report.verdict = "consistent" if checks_ok else "inconsistent"
    return report


def run_cover(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P = inputs.polytope
    colouring, state, moves = _checked_game(inputs)
    ells = sorted({int(ell) for ell in args.ell})
    C = orient(build(P, colouring, P.dim, cell_cap=settings.cell_cap), state, moves)
    z = cocycle(C)
    base_chi = euler_characteristic(C)
    growth = cover_growth(C, z, ells, field=args.field)
    identities = [chi == ell * base_chi for ell, chi in zip(growth.ells, growth.euler, strict=True)]
    report = Report(
        command=args.command,
        passed=all(identities),
        verdict="consistent" if all(identities) else "inconsistent",
        config=make_config(args, settings, inputs),
    )
    report.claim("euler_characteristic", base_chi, "cubulation.euler_characteristic")
    report.claim("covers", growth.rows(), "cubulation.cover_growth")
    report.claim("euler_identity", identities, "cubulation.cover_growth")
    if len(ells) > 1:
        report.claim("slopes", [round(value, 6) for value in growth.slopes], "cubulation.cover_growth")
    if P.ideal_vertices:
        tori = cusp_tori(P, colouring)
        boundary = []
        for ell in ells:
            total = 0
            for torus in tori:
                values = [int(value) for value in evaluate_torus(z, torus)]
                total += cover_boundary_components(math.gcd(*values), ell)
            boundary.append({"ell": ell, "boundary_components": total})
        report.claim("boundary_components", boundary, "cubulation.cover_boundary_components")
    return report


def run_links(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    colouring, state, moves = _checked_game(inputs)
    result = check_all_links(inputs.polytope, colouring, state, moves, k=int(args.k), jobs=args.jobs)
    report = Report(
        command=args.command,
        passed=result.passed,
        verdict=result.verdict,
        config=make_config(args, settings, inputs),
    )
    report.claim("level", result.level, "morse.check_all_links")
    report.claim("patterns", result.patterns, "morse.check_all_links")
    report.claim("failures", len(result.failures), "morse.check_all_links")
    report.claim("unknowns", len(result.unknowns), "morse.check_all_links")
    report.details["links"] = result.as_dict(include_passing=bool(args.all_links))
    return report


def _rank(matrix: list[list]) -> int:
    if not matrix or not matrix[0]:
        return 0
    return int(Matrix([[Rational(v.numerator, v.denominator) for v in row] for row in matrix]).rank())


def run_cusps(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P = inputs.polytope
    colouring = inputs.require_colouring()
    vertex_ids = _parse_vertices(args.vertex)
    conditions = all_surjectivity_conditions(P, colouring, vertex_ids)
    verdicts = Counter(result.verdict.value for result in conditions)
    pair_kinds = Counter(condition.value for result in conditions for condition in result.conditions)
    surjective = all(result.verdict is CuspVerdict.SURJECTIVE for result in conditions)
    report = Report(command=args.command, passed=surjective, verdict="", config=make_config(args, settings, inputs))
    report.claim("vertex_types", vertex_type_census(P, colouring), "polytope.vertex_type_census")
    report.claim("cusps", cusp_count(P, colouring).total, "polytope.cusp_count")
    report.claim("verdicts", dict(sorted(verdicts.items())), "characters.surjectivity_conditions")
    report.claim("pair_conditions", dict(sorted(pair_kinds.items())), "characters.surjectivity_conditions")
    if args.iota:
        forests: dict = {}
        full_rank = True
        diagonals: Counter = Counter()
        for result in conditions:
            base = cusp_bases(P, colouring, result.ideal_vertex)[0]
            matrix = iota_star_matrix(P, colouring, result.ideal_vertex, base, forests)
            for index, row in enumerate(matrix):
                if result.conditions[index] is not PairCondition.NONE:
                    diagonals[str(abs(row[index]))] += 1
            if result.verdict is CuspVerdict.SURJECTIVE:
                full_rank &= _rank(matrix) == len(result.conditions)
        report.claim("iota_star_diagonal", dict(sorted(diagonals.items())), "characters.iota_star_matrix")
        report.claim("iota_star_full_rank", full_rank, "characters.iota_star_matrix")
        report.passed = surjective and full_rank
    if surjective:
        report.verdict = CuspVerdict.SURJECTIVE.value
    elif verdicts.get(CuspVerdict.NON_TRIVIAL.value) or verdicts.get(CuspVerdict.SURJECTIVE.value):
        report.verdict = CuspVerdict.NON_TRIVIAL.value
    else:
        report.verdict = CuspVerdict.INCONCLUSIVE.value
    return report


def run_b1(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    value = choi_park_b1(inputs.polytope, inputs.require_colouring(), jobs=args.jobs)
    passed = args.expect is None or value == int(args.expect)
    report = Report(
        command=args.command,
        passed=passed,
        verdict=f"b1={value}",
        config=make_config(args, settings, inputs),
    )
    report.claim("b1", value, "characters.choi_park_b1")
    return report


def run_census(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P, colouring = inputs.polytope, inputs.require_colouring()
    classes = Counter(len(colouring.colour_class(colour)) for colour in range(1, colouring.palette_size + 1))
    report = Report(command=args.command, passed=True, verdict="counted", config=make_config(args, settings, inputs))
    report.claim("facets", P.num_facets, "polytope.Polytope")
    report.claim("finite_vertices", len(P.finite_vertices), "polytope.Polytope")
    report.claim("ideal_vertices", len(P.ideal_vertices), "polytope.Polytope")
    report.claim("colour_class_sizes", dict(sorted(classes.items())), "polytope.Colouring")
    report.claim("vertex_types", vertex_type_census(P, colouring), "polytope.vertex_type_census")
    report.claim("cusps", cusp_count(P, colouring).total, "polytope.cusp_count")
    return report


def run_chi(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P, colouring = inputs.polytope, inputs.require_colouring()
    numbers = face_numbers(P)
    chi = euler_characteristic_from_nerve(P, colouring)
    report = Report(command=args.command, passed=True, verdict=f"chi={chi}", config=make_config(args, settings, inputs))
    report.claim("face_numbers", numbers, "polytope.face_numbers")
    report.claim("euler_characteristic", chi, "cubulation.euler_characteristic_from_nerve")
    return report


def _tori_with_gram(P: Polytope, colouring: Colouring, vertex_ids, gram_path: str | None, repository: DataRepository):
    tori = cusp_tori(P, colouring, vertex_ids)
    if not gram_path:
        return tori
    grams = gram_from_file(repository.load_model(Path(gram_path), GramFile))
    return [
        cusp_loops(P, colouring, torus.ideal_vertex, torus.base, grams[torus.key]) if torus.key in grams else torus
        for torus in tori
    ]


def _case_characters(P: Polytope, colouring: Colouring, tori) -> list[Character]:
    forests: dict = {}
    characters = []
    for vertex_id in sorted({torus.ideal_vertex for torus in tori}):
        for result in all_surjectivity_conditions(P, colouring, [vertex_id]):
            for index, condition in enumerate(result.conditions):
                if condition is PairCondition.NONE:
                    continue
                construction = case_cocycle(P, colouring, vertex_id, index, forests)
                z = orientation_cocycle(colouring, construction.state, construction.moves)
                characters.append(character_from_cocycle(z, tori))
    return characters


def run_perturb(args: argparse.Namespace, settings: RunSettings) -> Report:
    inputs = load_inputs(args, settings)
    P, colouring = inputs.polytope, inputs.require_colouring()
    repository = DataRepository(Path(args.data_dir) if args.data_dir else settings.data_dir)
    tori = _tori_with_gram(P, colouring, _parse_vertices(args.vertex), args.gram, repository)
    if not tori:
        raise InputError("no_cusps")

    if args.character:
        chi = character_from_file(repository.load_model(Path(args.character), CharacterFile))
        inputs.sources["character"] = str(args.character)
    else:
        _, state, moves = _checked_game(inputs)
        game = classify_all(P, colouring, state, moves)
        if game.bad_pairs:
            raise BadPairPresent(game.bad_pairs[0])
        chi = character_from_cocycle(orientation_cocycle(colouring, state, moves), tori)
    if args.aux:
        aux = [character_from_file(repository.load_model(Path(path), CharacterFile)) for path in args.aux]
    else:
        aux = _case_characters(P, colouring, tori)

    targets = list(args.target)
    config = make_config(args, settings, inputs)
    if len(targets) == 1:
        results = [perturb(chi, targets[0], tori, aux, jobs=args.jobs)]
        distinct = None
    else:
        sequence = perturb_sequence(chi, targets, tori, aux, jobs=args.jobs)
        results = list(sequence.results)
        distinct = sequence.filling.distinct_cusps

    certified = all(result.certified for result in results)
    two_pi_ok = all(check.passed for result in results if result.target >= TWO_PI for check in result.two_pi)
    passed = certified and two_pi_ok and (distinct is None or bool(distinct))
    report = Report(
        command=args.command,
        passed=passed,
        verdict="certified" if passed else "not_certified",
        config=config,
    )
    report.claim("cusps", len(tori), "characters.cusp_tori")
    report.claim("auxiliary_characters", len(aux), "characters.case_cocycle")
    for result in results:
        label = f"target_{result.target}"
        report.claim(f"{label}.coefficients", result.coefficients, "characters.perturb")
        report.claim(f"{label}.candidates_checked", result.candidates_checked, "characters.perturb")
        report.claim(
            f"{label}.short_vectors",
            sum(len(cusp.vectors) for cusp in result.cusps),
            "characters.short_vectors",
        )
        report.claim(f"{label}.two_pi", [check.passed for check in result.two_pi], "characters.two_pi_check")
        report.details[label] = {
            "cusps": [
                {
                    "ideal_vertex": cusp.key[0],
                    "base": cusp.key[1],
                    "values": [str(value) for value in cusp.values],
                    "vectors": [
                        {"vector": list(item.vector), "squared_length": str(item.squared_length), "value": str(item.value)}
                        for item in cusp.vectors
                    ],
                }
                for cusp in result.cusps
            ],
            "two_pi": [
                {"ideal_vertex": check.key[0], "base": check.key[1], "passed": check.passed, "reason": check.reason}
                for check in result.two_pi
            ],
        }
    if distinct is not None:
        report.claim("distinct_kernel_cusps", [list(key) for key in distinct], "characters.filling_certificate")
    if args.emit_character:
        repository.write_model(Path(args.emit_character), character_to_file(results[-1].character))
    return report


HANDLERS = {
    "gen-p8": run_gen_p8,
    "gen-colouring": run_gen_colouring,
    "validate": run_validate,
    "game": run_game,
    "cubulate": run_cubulate,
    "links": run_links,
    "cusps": run_cusps,
    "b1": run_b1,
    "cover": run_cover,
    "perturb": run_perturb,
    "census": run_census,
    "chi": run_chi,
}


__all__ = ["HANDLERS", "Inputs", "example_inputs", "load_inputs", "make_config"]
