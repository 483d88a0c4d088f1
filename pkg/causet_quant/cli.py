# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Command-line front end.

Machine-readable results go to files; a short human summary goes to stdout.
Exit codes: 0 success, 1 failed validation, 2 invalid flags or configuration,
3 file or format error, 4 frame not synchronized, 5 frames not coordinated.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Callable, Optional

from causet_quant import __version__
from causet_quant._constants import (
    _COORDINATED_REL_STD,
    _DEFAULT_SEED,
    _EXIT_INVALID_FLAGS,
    _EXIT_IO_FAILURE,
    _EXIT_NOT_COORDINATED,
    _EXIT_NOT_SYNCHRONIZED,
    _EXIT_OK,
    _EXIT_VALIDATION_FAILED,
    _SCENARIO_NAMES,
)
from causet_quant._exceptions import (
    CausetQuantError,
    InvalidConfigError,
    NotCoordinatedError,
    NotSynchronizedError,
    SerializationError,
)
from causet_quant._io._json import _dumps, _frame_payload
from causet_quant.api import load_object, save_object
from causet_quant.causet import CausalSet
from causet_quant.frames import (
    FrameRelation,
    measure_frame_relation,
    scale_pair,
    transform_pair,
)
from causet_quant.oracle import SprinkleConfig, sprinkle, standard_scenario
from causet_quant.oracle.scenarios import Scenario
from causet_quant.pythagoras import OrthogonalConfig, verify_pythagoras
from causet_quant.quantify import (
    Frame,
    PairQuant,
    QuantificationRow,
    QuantificationTable,
    build_frame,
    quantify_events,
    quantify_intervals,
)
from causet_quant.validate import SUITE_NAMES, run_validation

logger = logging.getLogger(__name__)


def _parse_box(text: str, dimension: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    """Parse ``t0,x0[,y0],t1,x1[,y1]`` into region bounds."""
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError as e:
        raise InvalidConfigError(f"Invalid --box {text!r}: {e}") from e
    if len(values) != 2 * dimension:
        raise InvalidConfigError(
            f"--box needs {2 * dimension} comma-separated values for --dim {dimension}"
        )
    return tuple(values[:dimension]), tuple(values[dimension:])


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{name}" for name in names if getattr(args, name) is None]
    if missing:
        raise InvalidConfigError(f"{args.command} requires {', '.join(missing)}")


def _checked_frame(cs: CausalSet, frame: Frame) -> Frame:
    return build_frame(cs, frame.P, frame.Q)


def _seed(args: argparse.Namespace) -> int:
    return _DEFAULT_SEED if args.seed is None else args.seed


def _sidecar_path(output: Path) -> Path:
    return output.with_name(output.stem + ".unquantified.json")


def cmd_gen(args: argparse.Namespace) -> int:
    _require(args, "seed", "box", "density", "output")
    config = SprinkleConfig(
        dimension=args.dim,
        region=_parse_box(args.box, args.dim),
        density=args.density,
        seed=args.seed,
    )
    ec = sprinkle(config)
    save_object(ec, args.output)
    print(
        f"Sprinkled {ec.event_count} events into volume {config.volume:g} "
        f"at density {config.density:g} (seed {config.seed}) -> {args.output}"
    )
    return _EXIT_OK


def _scenario_table(scenario: Scenario) -> QuantificationTable:
    """One row per selected event pair, or every event in the first frame."""
    pairs = [s for s in scenario.selections if s.frame is not None and len(s.events) == 2]
    if not pairs:
        frame = _checked_frame(scenario.causet, scenario.frame())
        return quantify_events(scenario.causet, frame)
    rows: list[QuantificationRow] = []
    missing: list[int] = []
    for selection in pairs:
        frame = _checked_frame(scenario.causet, scenario.frame(selection.frame))
        a, b = selection.events
        table = quantify_intervals(scenario.causet, frame, [(a, b)])
        rows.extend(table.rows)
        missing.extend(table.unquantified)
    return QuantificationTable(rows=tuple(rows), unquantified=tuple(missing))


def cmd_quantify(args: argparse.Namespace) -> int:
    _require(args, "output")
    if args.scenario is not None:
        table = _scenario_table(standard_scenario(args.scenario, seed=_seed(args)))
    else:
        _require(args, "input", "frame")
        cs = load_object(args.input, CausalSet)
        frame = _checked_frame(cs, load_object(args.frame, Frame))
        table = quantify_events(cs, frame)
    output = Path(save_object(table, args.output))
    sidecar = _sidecar_path(output)
    sidecar.write_text(_dumps({"unquantified": list(table.unquantified)}), encoding="utf-8")
    print(
        f"Quantified {len(table)} events, {len(table.unquantified)} unquantifiable "
        f"-> {output} ({sidecar.name})"
    )
    return _EXIT_OK


def cmd_frames(args: argparse.Namespace) -> int:
    tolerance = _COORDINATED_REL_STD if args.tolerance is None else args.tolerance
    if args.scenario is not None:
        scenario = standard_scenario(args.scenario, seed=_seed(args))
        names = list(scenario.frames)
        first = args.frame or names[0]
        second = args.frame2 or (names[1] if len(names) > 1 else names[0])
        cs = scenario.causet
        frame1, frame2 = scenario.frame(first), scenario.frame(second)
    else:
        _require(args, "input", "frame", "frame2")
        cs = load_object(args.input, CausalSet)
        frame1 = _checked_frame(cs, load_object(args.frame, Frame))
        frame2 = _checked_frame(cs, load_object(args.frame2, Frame))
    relation = measure_frame_relation(cs, frame1, frame2, tolerance=tolerance)
    if args.output is not None:
        save_object(relation, args.output)
    print(
        f"m={relation.m:.6g} n={relation.n:.6g} rho={relation.rho:.6g} "
        f"beta={relation.beta:.6g} gamma={relation.gamma:.6g}"
    )
    return _EXIT_OK


def cmd_transform(args: argparse.Namespace) -> int:
    _require(args, "input", "relation", "output")
    table = load_object(args.input, QuantificationTable)
    relation = load_object(args.relation, FrameRelation)
    rows = tuple(
        QuantificationRow.from_pair(
            row.event_id,
            scale_pair(transform_pair(PairQuant(row.p, row.q), relation.rho), relation.sigma),
        )
        for row in table.rows
    )
    save_object(QuantificationTable(rows=rows), args.output)
    print(
        f"Transformed {len(rows)} rows with rho={relation.rho:.6g} "
        f"sigma={relation.sigma:.6g} -> {args.output}"
    )
    return _EXIT_OK


def cmd_pythagoras(args: argparse.Namespace) -> int:
    tolerance = 1e-9 if args.tolerance is None else args.tolerance
    if args.scenario is not None:
        scenario = standard_scenario(args.scenario, seed=_seed(args))
        cs, cfg = scenario.causet, scenario.orthogonal_config()
    else:
        _require(args, "input", "frame")
        cs = load_object(args.input, CausalSet)
        cfg = load_object(args.frame, OrthogonalConfig)
    report = verify_pythagoras(cs, cfg, tolerance=tolerance)
    if args.output is not None:
        save_object(report, args.output)
    print(
        f"dd2={report.dd2:g} dx2={report.dx2:g} dy2={report.dy2:g} "
        f"residual={report.residual:g} {'ok' if report.ok else 'FAILED'}"
    )
    return _EXIT_OK if report.ok else _EXIT_VALIDATION_FAILED


def cmd_validate(args: argparse.Namespace) -> int:
    only = None if args.only is None else [s.strip() for s in args.only.split(",") if s.strip()]
    summary = run_validation(only=only, seed=_seed(args))
    for suite in summary.suites:
        status = "PASS" if suite.passed else "FAIL"
        print(f"{suite.name:<14} {status}  {suite.checks:>7} checks  {suite.seconds:6.2f}s")
    if args.output is not None:
        save_object(summary, args.output)
    if summary.passed:
        print("All suites passed")
        return _EXIT_OK
    print(f"Failed suites: {', '.join(summary.failed)}")
    return _EXIT_VALIDATION_FAILED


def cmd_scenario(args: argparse.Namespace) -> int:
    _require(args, "scenario", "output")
    scenario = standard_scenario(args.scenario, seed=_seed(args))
    directory = Path(args.output)
    save_object(scenario.embedded, directory / "causet.json")
    frames = {name: scenario.frame(name) for name in scenario.frames}
    for name, frame in frames.items():
        save_object(frame, directory / f"frame-{name}.json")
    (directory / "frames.json").write_text(
        _dumps({name: _frame_payload(frame) for name, frame in frames.items()}),
        encoding="utf-8",
    )
    selections: dict[str, Any] = {
        s.name: {"events": list(s.events), "frame": s.frame, "expected": s.expected}
        for s in scenario.selections
    }
    (directory / "selections.json").write_text(_dumps(selections), encoding="utf-8")
    if {"D", "X", "Y"} <= set(scenario.frames):
        save_object(scenario.orthogonal_config(), directory / "orthogonal.json")
    print(
        f"Wrote scenario {scenario.name} ({scenario.embedded.event_count} events, "
        f"{len(frames)} frames) to {directory}"
    )
    return _EXIT_OK


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "gen": cmd_gen,
    "quantify": cmd_quantify,
    "frames": cmd_frames,
    "transform": cmd_transform,
    "pythagoras": cmd_pythagoras,
    "validate": cmd_validate,
    "scenario": cmd_scenario,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causet-quant",
        description="Quantify intervals of causal sets with pairs of observer chains.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Sprinkle a causal set into a box")
    gen.add_argument("--dim", type=int, choices=(2, 3), default=2, help="Spacetime dimension")
    gen.add_argument("--box", help="Region bounds t0,x0[,y0],t1,x1[,y1]")
    gen.add_argument("--density", type=float, help="Expected events per unit volume")
    gen.add_argument("--seed", type=int, help="Generator seed (required)")
    gen.add_argument("--output", help="Causal-set JSON to write")

    quantify = commands.add_parser("quantify", help="Quantify events in a frame")
    quantify.add_argument("--input", help="Causal-set JSON")
    quantify.add_argument("--frame", help="Frame JSON")
    quantify.add_argument("--scenario", choices=_SCENARIO_NAMES, help="Standard scenario")
    quantify.add_argument("--seed", type=int, help="Scenario seed")
    quantify.add_argument("--output", help="CSV to write; a sidecar lists unquantified events")

    frames = commands.add_parser("frames", help="Measure how one frame projects onto another")
    frames.add_argument("--input", help="Causal-set JSON")
    frames.add_argument("--frame", help="Reference frame JSON, or frame name with --scenario")
    frames.add_argument("--frame2", help="Measured frame JSON, or frame name with --scenario")
    frames.add_argument("--scenario", choices=_SCENARIO_NAMES, help="Standard scenario")
    frames.add_argument("--seed", type=int, help="Scenario seed")
    frames.add_argument("--tolerance", type=float, help="Largest relative std of projections")
    frames.add_argument("--output", help="Relation report JSON to write")

    transform = commands.add_parser("transform", help="Transform a table into another frame")
    transform.add_argument("--input", help="Quantification CSV")
    transform.add_argument("--relation", help="Relation report JSON")
    transform.add_argument("--output", help="CSV to write")

    pythagoras = commands.add_parser("pythagoras", help="Check an orthogonal decomposition")
    pythagoras.add_argument("--input", help="Causal-set JSON")
    pythagoras.add_argument("--frame", help="Orthogonal configuration JSON")
    pythagoras.add_argument("--scenario", choices=("fig7",), help="Standard scenario")
    pythagoras.add_argument("--seed", type=int, help="Scenario seed")
    pythagoras.add_argument("--tolerance", type=float, help="Largest accepted residual")
    pythagoras.add_argument("--output", help="Report JSON to write")

    validate = commands.add_parser("validate", help="Run the validation suites")
    validate.add_argument("--only", help=f"Comma-separated suites from {', '.join(SUITE_NAMES)}")
    validate.add_argument("--seed", type=int, help="Seed of every suite")
    validate.add_argument("--output", help="Summary JSON to write")

    scenario = commands.add_parser("scenario", help="Write a standard scenario to a directory")
    scenario.add_argument("--scenario", choices=_SCENARIO_NAMES, help="Scenario name")
    scenario.add_argument("--seed", type=int, help="Scenario seed")
    scenario.add_argument("--output", help="Directory to write")
    return parser


def _exit_code(error: Exception) -> int:
    if isinstance(error, NotSynchronizedError):
        return _EXIT_NOT_SYNCHRONIZED
    if isinstance(error, NotCoordinatedError):
        return _EXIT_NOT_COORDINATED
    if isinstance(error, (SerializationError, OSError)):
        return _EXIT_IO_FAILURE
    return _EXIT_INVALID_FLAGS


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else _EXIT_INVALID_FLAGS
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except (CausetQuantError, OSError) as e:
        code = _exit_code(e)
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return code


__all__ = ["build_parser", "main"]
