# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Self-contained validation suites.

Every suite builds its own inputs from a seed, so ``run_validation`` needs no
files. Suites are independent: each draws from its own generator, and running
one alone gives the same result as running it with the others.
"""

import logging
import math
import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import networkx as nx
import numpy as np

from causet_quant import frames
from causet_quant._constants import _DEFAULT_SEED
from causet_quant._exceptions import CausetQuantError, InvalidConfigError
from causet_quant._utils import _relative_error
from causet_quant.causet import build_causal_set
from causet_quant.oracle import (
    composition_scenario,
    coordinate_scenario,
    fig2b,
    fig3,
    fig5,
    fig7,
    pythagoras_trend,
    radar_pythagoras,
    radar_quantify,
    speed_scenario,
)
from causet_quant.pythagoras import verify_pythagoras
from causet_quant.quantify import (
    Coordinates,
    IntervalClass,
    PairQuant,
    audit_scalar_candidates,
    check_synchronized,
    classify,
    coordinates,
    cross_validate,
    decompose,
    interval_scalar,
    pair_from_coordinates,
    power_identity_holds,
    project_many,
    quantify_intervals,
)

logger = logging.getLogger(__name__)

SUITE_NAMES = (
    "poset",
    "decomposition",
    "candidates",
    "invariance",
    "lorentz",
    "coordinates",
    "speed",
    "pythagoras",
    "consistency",
)

_SPEED_TOLERANCE = 0.05
_PAIR_SAMPLES = 10_000


@dataclass(frozen=True)
class SuiteResult:
    """Outcome of one suite."""

    name: str
    passed: bool
    checks: int
    details: dict[str, Any] = field(default_factory=dict)
    seconds: float = 0.0


@dataclass(frozen=True)
class ValidationSummary:
    """Outcome of a validation run."""

    suites: tuple[SuiteResult, ...]
    seed: int = _DEFAULT_SEED

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def failed(self) -> list[str]:
        return [s.name for s in self.suites if not s.passed]

    def as_dict(self) -> dict[str, Any]:
        """JSON-ready summary. Timings are left out so reruns compare equal."""
        return {
            "passed": self.passed,
            "seed": self.seed,
            "suites": [
                {
                    "name": s.name,
                    "passed": s.passed,
                    "checks": s.checks,
                    "details": s.details,
                }
                for s in self.suites
            ],
        }


_Outcome = tuple[bool, int, dict[str, Any]]


def _random_dag(rng: np.random.Generator, n: int) -> list[tuple[int, int]]:
    """Random edges between shuffled ids, acyclic by construction."""
    labels = rng.permutation(n)
    p = min(1.0, 4.0 / max(n, 1))
    rows, cols = np.nonzero(np.triu(rng.random((n, n)) < p, k=1))
    return [(int(labels[i]), int(labels[j])) for i, j in zip(rows, cols)]


def _suite_poset(rng: np.random.Generator) -> _Outcome:
    checks = 0
    closure_ok = True
    for _ in range(100):
        n = int(rng.integers(2, 201))
        edges = _random_dag(rng, n)
        cs = build_causal_set(n, edges)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(edges)
        for a in range(n):
            expected = np.zeros(n, dtype=bool)
            expected[a] = True
            expected[list(nx.descendants(graph, a))] = True
            closure_ok &= bool(np.array_equal(cs.successors(a), expected))
            checks += 1
        closure_ok &= build_causal_set(n, cs.covers) == cs
        checks += 1

    scenario = fig2b(seed=int(rng.integers(2**31)))
    cs = scenario.causet
    chains = [scenario.embedded.chains["P"], scenario.embedded.chains["Q"]]
    projected = [project_many(cs, range(cs.event_count), chain) for chain in chains]
    projection_ok = True
    for _ in range(_PAIR_SAMPLES):
        x = int(rng.integers(cs.event_count))
        k = int(rng.integers(len(chains)))
        chain = chains[k]
        scan = next(
            (v for e, v in zip(chain.events, chain.valuations) if cs.leq(x, e)),
            None,
        )
        projection_ok &= projected[k][x] == scan
        checks += 1

    monotone_ok = True
    closure = cs.submatrix(range(cs.event_count))
    for values in projected:
        for x, y in zip(*np.nonzero(closure)):
            px, py = values[x], values[y]
            if px is not None and py is not None:
                monotone_ok &= px <= py
                checks += 1
    return (
        closure_ok and projection_ok and monotone_ok,
        checks,
        {"closure": closure_ok, "projection": projection_ok, "monotone": monotone_ok},
    )


def _suite_decomposition(rng: np.random.Generator) -> _Outcome:
    samples = rng.integers(-1000, 1001, size=(_PAIR_SAMPLES, 2)).tolist()
    failures = 0
    for p, q in samples:
        pair = PairQuant(p, q)
        sym, anti = decompose(pair)
        ok = sym + anti == pair
        ok &= interval_scalar(pair) == sym.p * sym.p - anti.p * anti.p
        ok &= all(power_identity_holds(pair, k) for k in (1, 2, 3))
        failures += not ok
    return failures == 0, len(samples), {"failures": failures}


def _suite_candidates(rng: np.random.Generator) -> _Outcome:
    samples = rng.uniform(-10.0, 10.0, size=(1000, 2))
    audit = audit_scalar_candidates(samples)
    decomposes = all(r.passes_decomposition for r in audit.results)
    survivors = audit.survivors()
    counterexamples = {
        tag: audit[tag].counterexample for tag in ("F5", "F4(n=3)")
    }
    passed = (
        decomposes
        and survivors == ["F3", "F4(n=1)"]
        and all(c is not None for c in counterexamples.values())
    )
    return (
        passed,
        audit.sample_count * len(audit.results),
        {
            "survivors": survivors,
            "counterexamples": {k: list(v) if v else None for k, v in counterexamples.items()},
        },
    )


def _same_signs(before: PairQuant, after: PairQuant) -> bool:
    return bool(
        np.sign(after.p) == np.sign(before.p) and np.sign(after.q) == np.sign(before.q)
    )


def _suite_invariance(rng: np.random.Generator) -> _Outcome:
    pairs = rng.uniform(-100.0, 100.0, size=(_PAIR_SAMPLES, 2))
    rhos = np.exp(rng.uniform(math.log(0.1), math.log(10.0), size=_PAIR_SAMPLES))
    sigmas = rng.choice([1.0, 2.0], size=_PAIR_SAMPLES)
    failures = 0
    lightlike_failures = 0
    order_failures = 0
    for (p, q), rho, sigma in zip(pairs.tolist(), rhos.tolist(), sigmas.tolist()):
        pair = PairQuant(p, q)
        result = frames.invariance_check(pair, rho, sigma)
        failures += not result.ok
        # A boost scales p and q by positive factors, so neither may change sign.
        moved = frames.transform_pair(pair, rho)
        order_failures += not _same_signs(pair, moved)
        for light in (PairQuant(p, 0.0), PairQuant(0.0, q)):
            moved = frames.transform_pair(light, rho)
            lightlike_failures += classify(moved) is not IntervalClass.LIGHTLIKE
            order_failures += not _same_signs(light, moved)
    return (
        failures == 0 and lightlike_failures == 0 and order_failures == 0,
        3 * _PAIR_SAMPLES,
        {
            "failures": failures,
            "lightlike_failures": lightlike_failures,
            "order_failures": order_failures,
        },
    )


def _suite_lorentz(rng: np.random.Generator) -> _Outcome:
    samples = rng.uniform(-100.0, 100.0, size=(_PAIR_SAMPLES, 2))
    betas = rng.uniform(-0.99, 0.99, size=_PAIR_SAMPLES)
    worst = 0.0
    for (t, x), beta in zip(samples.tolist(), betas.tolist()):
        boost = frames.boost_from_beta(beta)
        direct = frames.lorentz_transform(Coordinates(t, x), boost)
        pair = pair_from_coordinates(Coordinates(t, x))
        via_pair = coordinates(frames.transform_pair(pair, boost.rho))
        scale = boost.gamma * (abs(t) + abs(x))
        worst = max(
            worst,
            _relative_error(via_pair.t, direct.t, scale=scale),
            _relative_error(via_pair.x, direct.x, scale=scale),
        )
    return worst <= 1e-12, _PAIR_SAMPLES, {"max_relative_error": worst}


def _suite_coordinates(rng: np.random.Generator) -> _Outcome:
    scenario = coordinate_scenario(seed=int(rng.integers(2**31)))
    frame = scenario.frame("PQ")
    events = scenario.selection("interior").events
    if not events:
        return False, 0, {"events": 0}
    diffs = []
    for e in events:
        radar = radar_quantify(scenario.embedded, e, frame)
        discrete = coordinates(radar.discrete)
        continuum = coordinates(radar.continuum)
        diffs.append((float(discrete.t) - continuum.t, float(discrete.x) - continuum.x))
    errors = np.asarray(diffs, dtype=float)
    max_error = float(np.abs(errors).max())
    offset = errors.mean(axis=0)
    mean_error = float(np.abs(errors - offset).mean())
    passed = len(events) >= 500 and max_error < 1.0 and mean_error <= 0.5
    return (
        passed,
        len(events),
        {
            "events": len(events),
            "max_error": max_error,
            "mean_error": mean_error,
            "offset": [float(v) for v in offset],
        },
    )


def _suite_speed(rng: np.random.Generator) -> _Outcome:
    measured = {}
    ok = True
    for velocity in (0.0, 0.2, 0.5, 0.8):
        scenario = speed_scenario(velocity)
        moving = scenario.frame("moving")
        relation = frames.measure_frame_relation(scenario.causet, scenario.frame("rest"), moving)
        sync = check_synchronized(scenario.causet, moving.P, moving.Q)
        measured[str(velocity)] = relation.beta
        ok &= sync.ok and abs(relation.beta - velocity) <= _SPEED_TOLERANCE

    analytic_error = 0.0
    for b12, b23 in rng.uniform(-0.9, 0.9, size=(1000, 2)).tolist():
        composed = frames.compose_relations(
            frames.relation_from_rho(frames.boost_from_beta(b12).rho),
            frames.relation_from_rho(frames.boost_from_beta(b23).rho),
        )
        analytic_error = max(
            analytic_error, abs(composed.beta - frames.velocity_addition(b12, b23))
        )
    ok &= analytic_error <= 1e-12

    scenario = composition_scenario()
    cs = scenario.causet
    r12 = frames.measure_frame_relation(cs, scenario.frame("F1"), scenario.frame("F2"))
    r23 = frames.measure_frame_relation(cs, scenario.frame("F2"), scenario.frame("F3"))
    r13 = frames.measure_frame_relation(cs, scenario.frame("F1"), scenario.frame("F3"))
    composed_beta = frames.compose_relations(r12, r23).beta
    ok &= abs(composed_beta - r13.beta) <= _SPEED_TOLERANCE
    return (
        ok,
        len(measured) + 1001,
        {
            "measured_beta": measured,
            "analytic_error": analytic_error,
            "composed_beta": composed_beta,
            "measured_beta13": r13.beta,
        },
    )


def _suite_pythagoras(rng: np.random.Generator) -> _Outcome:
    scenario = fig7()
    cfg = scenario.orthogonal_config()
    continuum = radar_pythagoras(scenario.embedded, cfg)
    continuum_ok = (
        abs(continuum.dd2 - 25) <= 1e-9
        and abs(continuum.dx2 - 16) <= 1e-9
        and abs(continuum.dy2 - 9) <= 1e-9
    )
    discrete = verify_pythagoras(scenario.causet, cfg, tolerance=1e-9)
    trend = pythagoras_trend(seed=int(rng.integers(2**31)))
    return (
        continuum_ok and discrete.ok and trend.monotone,
        3 + len(trend.densities),
        {
            "continuum": [continuum.dd2, continuum.dx2, continuum.dy2],
            "discrete_residual": discrete.residual,
            "trend": list(trend.mean_relative_residuals),
        },
    )


def _suite_consistency(rng: np.random.Generator) -> _Outcome:
    scenario = fig5()
    a, b = scenario.selection("ab").events
    frame_names = list(scenario.frames)
    report = cross_validate(
        scenario.causet, a, b, [scenario.frame(name) for name in frame_names]
    )
    bounding = frame_names.index("QR")
    entry = report.entries[bounding]
    flagged = [frame_names[i] for i in report.non_bounding]
    positive = all(
        min(report.entries[i].pair.oriented()) > 0  # type: ignore[union-attr]
        for i in report.non_bounding
    )
    ok = (
        flagged == ["PQ", "RS"]
        and entry.scalar is not None
        and entry.scalar < 0
        and positive
        and not report.consensus
    )

    panels = fig3()
    classes = {}
    for selection in panels.selections:
        table = quantify_intervals(panels.causet, panels.frame(selection.frame), [selection.events])
        classes[selection.name] = table.rows[0].interval_class.value if table.rows else None
        ok &= classes[selection.name] == selection.expected
    return (
        ok,
        1 + len(classes),
        {"non_bounding": flagged, "bounding_scalar": entry.scalar, "fig3": classes},
    )


_SUITES: dict[str, Callable[[np.random.Generator], _Outcome]] = {
    "poset": _suite_poset,
    "decomposition": _suite_decomposition,
    "candidates": _suite_candidates,
    "invariance": _suite_invariance,
    "lorentz": _suite_lorentz,
    "coordinates": _suite_coordinates,
    "speed": _suite_speed,
    "pythagoras": _suite_pythagoras,
    "consistency": _suite_consistency,
}


def run_suite(name: str, seed: int = _DEFAULT_SEED) -> SuiteResult:
    """
    Run one named suite.

    Domain errors raised inside a suite count as a failure and are reported
    in ``details["error"]``.
    """
    if name not in _SUITES:
        raise InvalidConfigError(
            f"Unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}"
        )
    rng = np.random.default_rng([seed, SUITE_NAMES.index(name)])
    start = time.perf_counter()
    try:
        passed, checks, details = _SUITES[name](rng)
    except CausetQuantError as e:
        logger.warning("Suite %s raised %s: %s", name, type(e).__name__, e)
        passed, checks, details = False, 0, {"error": f"{type(e).__name__}: {e}"}
    seconds = time.perf_counter() - start
    logger.info("Suite %s %s in %.2fs", name, "passed" if passed else "FAILED", seconds)
    return SuiteResult(
        name=name, passed=bool(passed), checks=checks, details=details, seconds=seconds
    )


def run_validation(
    only: Optional[Sequence[str]] = None, seed: int = _DEFAULT_SEED
) -> ValidationSummary:
    """
    Run the validation suites.

    Parameters
    ----------
    only : Sequence[str], optional
        Suite names to run, in the given order. Defaults to every suite.
    seed : int
        Seed every suite derives its generator from.

    Returns
    -------
    ValidationSummary
        One result per suite that ran.

    Raises
    ------
    InvalidConfigError
        If ``only`` names an unknown suite.

    Examples
    --------
    >>> run_validation(only=["decomposition"]).passed
    True
    """
    names = list(SUITE_NAMES) if only is None else list(only)
    unknown = [name for name in names if name not in _SUITES]
    if unknown:
        raise InvalidConfigError(
            f"Unknown suites: {', '.join(unknown)}; expected one of {', '.join(SUITE_NAMES)}"
        )
    return ValidationSummary(suites=tuple(run_suite(name, seed) for name in names), seed=seed)


__all__ = [
    "SUITE_NAMES",
    "SuiteResult",
    "ValidationSummary",
    "run_suite",
    "run_validation",
]
