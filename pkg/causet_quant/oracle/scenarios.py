# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Deterministic oracle constructions.

Every builder returns a :class:`Scenario`: an embedded causal set, named
frames (pairs of chain names) and named event selections.
"""

import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from causet_quant._constants import _DEFAULT_SEED, _SCENARIO_NAMES
from causet_quant._exceptions import InvalidConfigError
from causet_quant._types import Bounds, EventId
from causet_quant.causet import CausalSet
from causet_quant.frames import velocity_addition
from causet_quant.oracle._sprinkle import EmbeddedCauset, SprinkleConfig, _assemble, sprinkle
from causet_quant.oracle._worldlines import (
    WorldlineSpec,
    moving_frame_specs,
    rest_worldline,
    worldline_ticks,
)
from causet_quant.pythagoras import OrthogonalConfig, verify_pythagoras
from causet_quant.quantify import Frame

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Selection:
    """Named events of a scenario, optionally tied to one of its frames."""

    name: str
    events: tuple[EventId, ...]
    frame: Optional[str] = None
    expected: Optional[str] = None


@dataclass(frozen=True, eq=False)
class Scenario:
    """An embedded causal set with named frames and event selections."""

    name: str
    embedded: EmbeddedCauset
    frames: Mapping[str, tuple[str, str]]
    selections: tuple[Selection, ...] = ()
    parameters: Mapping[str, Any] = field(default_factory=dict)

    @property
    def causet(self) -> CausalSet:
        return self.embedded.causet

    def frame(self, name: Optional[str] = None) -> Frame:
        """The named frame, or the first one."""
        if name is None:
            name = next(iter(self.frames))
        try:
            p_name, q_name = self.frames[name]
        except KeyError as e:
            raise InvalidConfigError(f"Scenario {self.name} has no frame {name!r}") from e
        return self.embedded.frame(p_name, q_name)

    def selection(self, name: str) -> Selection:
        for selection in self.selections:
            if selection.name == name:
                return selection
        raise InvalidConfigError(f"Scenario {self.name} has no selection {name!r}")

    def orthogonal_config(self) -> OrthogonalConfig:
        """The D, X and Y frames with events e1, e2, e3 of an orthogonal scenario."""
        named = self.embedded.named
        try:
            return OrthogonalConfig(
                D_frame=self.frame("D"),
                X_frame=self.frame("X"),
                Y_frame=self.frame("Y"),
                e1=named["e1"],
                e2=named["e2"],
                e3=named["e3"],
            )
        except KeyError as e:
            raise InvalidConfigError(f"Scenario {self.name} has no event {e}") from e


def _build(
    region: Bounds,
    specs: Mapping[str, WorldlineSpec],
    named_points: Optional[Mapping[str, Sequence[float]]] = None,
    background: Optional[np.ndarray] = None,
) -> EmbeddedCauset:
    """Assemble background points, named points and worldline ticks in one pass."""
    dimension = len(region[0])
    blocks = [np.zeros((0, dimension)) if background is None else np.asarray(background)]
    offset = blocks[0].shape[0]
    named: dict[str, int] = {}
    for name, point in (named_points or {}).items():
        named[name] = offset
        blocks.append(np.asarray(point, dtype=float).reshape(1, dimension))
        offset += 1
    chains: dict[str, tuple[Sequence[int], Sequence[int]]] = {}
    for name, spec in specs.items():
        ticks, labels = worldline_ticks(spec, region)
        chains[name] = (range(offset, offset + len(labels)), labels)
        blocks.append(ticks)
        offset += len(labels)
    return _assemble(region, np.vstack(blocks), chains=chains, worldlines=specs, named=named)


def _unchained(ec: EmbeddedCauset) -> list[EventId]:
    on_chain = {e for chain in ec.chains.values() for e in chain.events}
    named = set(ec.named.values())
    return [e for e in range(ec.event_count) if e not in on_chain and e not in named]


def fig2b(seed: int = _DEFAULT_SEED, density: float = 0.25) -> Scenario:
    """Two synchronized rest chains eight units apart over a sparse sprinkle."""
    region: Bounds = ((0.0, 0.0), (40.0, 8.0))
    background = sprinkle(SprinkleConfig(2, region, density, seed)).coords
    ec = _build(
        region,
        {"P": rest_worldline((0.0,)), "Q": rest_worldline((8.0,))},
        background=background,
    )
    sprinkled = tuple(e for e in _unchained(ec) if ec.coords[e, 0] <= 30.0)
    return Scenario(
        name="fig2b",
        embedded=ec,
        frames={"PQ": ("P", "Q")},
        selections=(Selection("sprinkled", sprinkled, frame="PQ"),),
        parameters={"seed": seed, "density": density, "separation": 8},
    )


_FIG3_PANELS = (
    ("top-left", (10.0, 3.0), (10.0, 5.0), "spacelike"),
    ("top-right", (12.0, 4.0), (15.0, 4.0), "timelike"),
    ("bottom-left", (20.0, 2.0), (24.0, 4.0), "timelike"),
    ("bottom-center", (20.0, 5.0), (22.0, 7.0), "lightlike"),
    ("bottom-right", (26.0, 1.0), (27.0, 6.0), "spacelike"),
)


def fig3() -> Scenario:
    """Five event pairs between rest chains at 0 and 8, one per interval class."""
    region: Bounds = ((0.0, 0.0), (40.0, 8.0))
    points: dict[str, Sequence[float]] = {}
    for panel, a, b, _ in _FIG3_PANELS:
        points[f"{panel}:a"] = a
        points[f"{panel}:b"] = b
    ec = _build(
        region, {"P": rest_worldline((0.0,)), "Q": rest_worldline((8.0,))}, named_points=points
    )
    selections = tuple(
        Selection(
            panel,
            (ec.named[f"{panel}:a"], ec.named[f"{panel}:b"]),
            frame="PQ",
            expected=expected,
        )
        for panel, _, _, expected in _FIG3_PANELS
    )
    return Scenario(name="fig3", embedded=ec, frames={"PQ": ("P", "Q")}, selections=selections)


def fig5() -> Scenario:
    """
    Four rest chains at 0, 8, 16 and 24 and a spacelike pair between the middle two.

    Only the ``QR`` frame spans the pair; ``PQ`` and ``RS`` see it as purely
    time separated.
    """
    region: Bounds = ((0.0, 0.0), (40.0, 24.0))
    specs = {name: rest_worldline((x,)) for name, x in zip("PQRS", (0.0, 8.0, 16.0, 24.0))}
    ec = _build(region, specs, named_points={"a": (10.0, 10.0), "b": (10.0, 14.0)})
    return Scenario(
        name="fig5",
        embedded=ec,
        frames={"PQ": ("P", "Q"), "QR": ("Q", "R"), "RS": ("R", "S")},
        selections=(
            Selection("ab", (ec.named["a"], ec.named["b"]), frame="QR", expected="spacelike"),
        ),
    )


def speed_scenario(
    velocity: float,
    ticks: int = 100,
    tick_interval: float = 12.0,
    name: Optional[str] = None,
) -> Scenario:
    """
    A rest frame with unit ticks and a frame moving at ``velocity``.

    The moving pair starts just right of the rest ``P`` chain and travels for
    ``ticks`` ticks; the rest ``Q`` chain sits beyond its drift. Expected
    projections are ``m = gamma * tick_interval * (1 + v)`` and
    ``n = gamma * tick_interval * (1 - v)``.
    """
    gamma = 1 / math.sqrt(1 - velocity * velocity)
    duration = gamma * tick_interval * (ticks + 1)
    trailing, leading = moving_frame_specs(
        velocity,
        tick_interval,
        position0=0.5,
        separation=2 * tick_interval / gamma,
        tick_count=ticks,
    )
    far_edge = leading.position0[0] + velocity * duration
    width = float(math.ceil(far_edge + 2))
    horizon = float(math.ceil(duration + width + 2))
    region: Bounds = ((0.0, 0.0), (horizon, width))
    specs = {
        "P": rest_worldline((0.0,)),
        "Q": rest_worldline((width,)),
        "P2": trailing,
        "Q2": leading,
    }
    ec = _build(region, specs)
    return Scenario(
        name=name or f"speed-{velocity:g}",
        embedded=ec,
        frames={"rest": ("P", "Q"), "moving": ("P2", "Q2")},
        parameters={
            "velocity": velocity,
            "ticks": ticks,
            "tick_interval": tick_interval,
            "gamma": gamma,
            "expected_m": gamma * tick_interval * (1 + velocity),
            "expected_n": gamma * tick_interval * (1 - velocity),
        },
    )


def fig6(velocity: float = 0.6) -> Scenario:
    """A frame moving at 0.6 with ticks of 8, so that ``m = 16`` and ``n = 4``."""
    return speed_scenario(velocity, ticks=40, tick_interval=8.0, name="fig6")


def composition_scenario(v12: float = 0.3, v23: float = 0.3, ticks: int = 20) -> Scenario:
    """
    Three frames ``F1`` (rest), ``F2`` (``v12``) and ``F3`` (``v23`` relative to ``F2``).

    ``F3`` stays between both chains of ``F2`` and of ``F1`` while it ticks.
    """
    v13 = velocity_addition(v12, v23)
    f2_p, f2_q = moving_frame_specs(v12, 10.0, position0=0.5, separation=700.0)
    f3_p, f3_q = moving_frame_specs(v13, 100.0, position0=1.0, separation=50.0, tick_count=ticks)
    width, horizon = 2200.0, 5000.0
    region: Bounds = ((0.0, 0.0), (horizon, width))
    specs = {
        "P1": rest_worldline((0.0,)),
        "Q1": rest_worldline((width,)),
        "P2": f2_p,
        "Q2": f2_q,
        "P3": f3_p,
        "Q3": f3_q,
    }
    ec = _build(region, specs)
    return Scenario(
        name="composition",
        embedded=ec,
        frames={"F1": ("P1", "Q1"), "F2": ("P2", "Q2"), "F3": ("P3", "Q3")},
        parameters={"v12": v12, "v23": v23, "v13": v13},
    )


def orthogonal_scenario(
    tick_interval: float = 1.0,
    scale: float = 1.0,
    arms: Sequence[float] = (5.0, 5.0, 5.0),
    event_time: float = 2.0,
    name: str = "fig7",
) -> Scenario:
    """
    A 3-4-5 right triangle at equal time in 2+1D with three chain pairs.

    ``e1`` is the right-angle vertex at the origin, ``e3 = (4, 0)`` and
    ``e2 = (0, 3)``, all scaled by ``scale``. Each frame's chains sit on the
    line through the events it quantifies, ``arms[i]`` beyond each end.
    """
    e1 = np.array([0.0, 0.0])
    e3 = np.array([4.0, 0.0]) * scale
    e2 = np.array([0.0, 3.0]) * scale
    a_d, a_x, a_y = arms
    u = (e3 - e2) / np.linalg.norm(e3 - e2)
    positions = {
        "DP": e3 + a_d * u,
        "DQ": e2 - a_d * u,
        "XP": e3 + a_x * np.array([1.0, 0.0]),
        "XQ": e1 - a_x * np.array([1.0, 0.0]),
        "YP": e2 + a_y * np.array([0.0, 1.0]),
        "YQ": e1 - a_y * np.array([0.0, 1.0]),
    }
    stacked = np.vstack(list(positions.values()))
    low = np.floor(stacked.min(axis=0)) - 1.0
    high = np.ceil(stacked.max(axis=0)) + 1.0
    horizon = math.ceil(event_time + max(arms) + 5.0 * scale + 2 * tick_interval + 2.0)
    region: Bounds = (
        (0.0, float(low[0]), float(low[1])),
        (float(horizon), float(high[0]), float(high[1])),
    )
    specs = {
        name_: rest_worldline(tuple(pos.tolist()), tick_interval=tick_interval)
        for name_, pos in positions.items()
    }
    points = {
        "e1": (event_time, *e1.tolist()),
        "e2": (event_time, *e2.tolist()),
        "e3": (event_time, *e3.tolist()),
    }
    ec = _build(region, specs, named_points=points)
    return Scenario(
        name=name,
        embedded=ec,
        frames={"D": ("DP", "DQ"), "X": ("XP", "XQ"), "Y": ("YP", "YQ")},
        selections=(
            Selection("triangle", (ec.named["e1"], ec.named["e2"], ec.named["e3"])),
        ),
        parameters={
            "tick_interval": tick_interval,
            "scale": scale,
            "dd2": 25.0 * scale * scale,
            "dx2": 16.0 * scale * scale,
            "dy2": 9.0 * scale * scale,
        },
    )


def fig7() -> Scenario:
    return orthogonal_scenario()


def coordinate_scenario(
    seed: int = _DEFAULT_SEED,
    density: float = 4.0,
    size: float = 64.0,
    separation: float = 8.0,
) -> Scenario:
    """
    A sprinkled square with rest chains ``separation`` apart around its middle.

    The ``interior`` selection holds sprinkled events strictly between the
    chains that are early enough to project onto both.
    """
    region: Bounds = ((0.0, 0.0), (size, size))
    x_p = size / 2 - separation / 2
    x_q = size / 2 + separation / 2
    background = sprinkle(SprinkleConfig(2, region, density, seed)).coords
    ec = _build(
        region,
        {"P": rest_worldline((x_p,)), "Q": rest_worldline((x_q,))},
        background=background,
    )
    coords = ec.coords
    interior = tuple(
        e
        for e in _unchained(ec)
        if x_p < coords[e, 1] < x_q and coords[e, 0] < size - separation - 1
    )
    return Scenario(
        name="coordinates",
        embedded=ec,
        frames={"PQ": ("P", "Q")},
        selections=(Selection("interior", interior, frame="PQ"),),
        parameters={"seed": seed, "density": density, "size": size, "separation": separation},
    )


@dataclass(frozen=True)
class TrendReport:
    """Mean relative Pythagorean residual per density."""

    densities: tuple[float, ...]
    tick_intervals: tuple[float, ...]
    mean_relative_residuals: tuple[float, ...]

    @property
    def monotone(self) -> bool:
        r = self.mean_relative_residuals
        return all(b <= a for a, b in zip(r, r[1:]))


def pythagoras_trend(
    densities: Sequence[float] = (1.0, 4.0, 16.0),
    trials: int = 128,
    seed: int = _DEFAULT_SEED,
) -> TrendReport:
    """
    Discrete Pythagorean residual as the observers' clocks get finer.

    In 2+1D the density sets the tick interval to ``density ** (-1 / 3)``.
    Each trial draws a triangle scale in ``[0.9, 1.1]``, chain distances in
    ``[2, 4]`` and an event time offset within one tick. The residual is
    reported relative to the physical squared hypotenuse.
    """
    rng = np.random.default_rng(seed)
    intervals = []
    means = []
    for density in densities:
        h = float(density) ** (-1.0 / 3.0)
        relative = []
        for _ in range(trials):
            scale = float(rng.uniform(0.9, 1.1))
            arms = tuple(float(a) for a in rng.uniform(2.0, 4.0, size=3))
            event_time = 1.0 + float(rng.uniform(0.0, h))
            scenario = orthogonal_scenario(
                tick_interval=h, scale=scale, arms=arms, event_time=event_time, name="trend"
            )
            report = verify_pythagoras(
                scenario.causet, scenario.orthogonal_config(), tolerance=math.inf
            )
            relative.append(report.residual * h * h / (25.0 * scale * scale))
        intervals.append(h)
        means.append(float(np.mean(relative)))
        logger.info("Density %g: mean relative residual %.4g", density, means[-1])
    return TrendReport(
        densities=tuple(float(d) for d in densities),
        tick_intervals=tuple(intervals),
        mean_relative_residuals=tuple(means),
    )


_BUILDERS = {
    "fig2b": fig2b,
    "fig3": fig3,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
}


def standard_scenario(name: str, seed: int = _DEFAULT_SEED) -> Scenario:
    """
    Build one of the standard scenarios by name.

    Raises
    ------
    InvalidConfigError
        If ``name`` is not a standard scenario.
    """
    if name not in _BUILDERS:
        raise InvalidConfigError(
            f"Unknown scenario {name!r}; expected one of {', '.join(_SCENARIO_NAMES)}"
        )
    if name == "fig2b":
        return fig2b(seed=seed)
    return _BUILDERS[name]()


def build_standard_scenarios(seed: int = _DEFAULT_SEED) -> dict[str, Scenario]:
    """Every standard scenario, keyed by its stable name."""
    return {name: standard_scenario(name, seed=seed) for name in _SCENARIO_NAMES}


__all__ = [
    "Scenario",
    "Selection",
    "TrendReport",
    "build_standard_scenarios",
    "composition_scenario",
    "coordinate_scenario",
    "fig2b",
    "fig3",
    "fig5",
    "fig6",
    "fig7",
    "orthogonal_scenario",
    "pythagoras_trend",
    "speed_scenario",
    "standard_scenario",
]
