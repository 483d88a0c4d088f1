# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Inertial observer worldlines, their tick events and continuum radar labels."""

import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from causet_quant._constants import _EQUAL_TIME_CONTINUUM
from causet_quant._exceptions import (
    InvalidConfigError,
    NotEqualTimeError,
    OutsideCoverageError,
    SpeedOutOfRangeError,
    WorldlineOutsideRegionError,
)
from causet_quant._types import Bounds, EventId
from causet_quant.oracle._sprinkle import EmbeddedCauset, MinkowskiPoint, _assemble
from causet_quant.pythagoras import OrthogonalConfig, PythagorasReport, pythagoras_from_pairs
from causet_quant.quantify import (
    Frame,
    ObserverChain,
    PairQuant,
    coordinates,
    interval_pair,
    quantify_event,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorldlineSpec:
    """
    An inertial clock.

    Parameters
    ----------
    position0 : tuple[float, ...]
        Spatial position at the region's start time.
    velocity : tuple[float, ...]
        Spatial velocity, norm below one.
    tick_interval : float
        Proper time between ticks.
    phase : float
        Proper time of tick 0 after the region's start time.
    tick_count : int, optional
        Stop after this many ticks.
    """

    position0: tuple[float, ...]
    velocity: tuple[float, ...]
    tick_interval: float
    phase: float = 0.0
    tick_count: Optional[int] = None

    def __post_init__(self) -> None:
        if len(self.position0) != len(self.velocity):
            raise InvalidConfigError(
                f"Position {self.position0} and velocity {self.velocity} differ in dimension"
            )
        if not sum(v * v for v in self.velocity) < 1:
            raise SpeedOutOfRangeError(f"Worldline speed must be below 1: {self.velocity}")
        if not self.tick_interval > 0:
            raise InvalidConfigError(f"Tick interval must be positive: {self.tick_interval}")
        if self.phase < 0:
            raise InvalidConfigError(f"Phase must be non-negative: {self.phase}")

    @property
    def gamma(self) -> float:
        return 1 / math.sqrt(1 - sum(v * v for v in self.velocity))


def rest_worldline(
    position: Sequence[float], tick_interval: float = 1.0, phase: float = 0.0
) -> WorldlineSpec:
    """A clock at rest at ``position``."""
    position0 = tuple(float(x) for x in position)
    return WorldlineSpec(position0, (0.0,) * len(position0), tick_interval, phase)


def worldline_ticks(spec: WorldlineSpec, region: Bounds) -> tuple[np.ndarray, list[int]]:
    """
    Tick events of a worldline inside ``region``.

    Tick ``k`` happens at proper time ``phase + k * tick_interval``, i.e. at
    coordinate time ``t0 + gamma * (phase + k * tick_interval)``. Ticks stop
    when the worldline leaves the region.

    Returns
    -------
    tuple[numpy.ndarray, list[int]]
        ``(K, dimension)`` tick coordinates and the labels ``0 .. K - 1``.

    Raises
    ------
    WorldlineOutsideRegionError
        If the worldline starts outside the region or yields no tick.
    """
    low = np.asarray(region[0], dtype=float)
    high = np.asarray(region[1], dtype=float)
    position0 = np.asarray(spec.position0, dtype=float)
    velocity = np.asarray(spec.velocity, dtype=float)
    if position0.shape != low[1:].shape:
        raise InvalidConfigError(
            f"Worldline has {position0.size} spatial components, region has {low.size - 1}"
        )
    if np.any(position0 < low[1:]) or np.any(position0 > high[1:]):
        raise WorldlineOutsideRegionError(
            f"Worldline starts outside the region at {spec.position0}"
        )

    gamma = spec.gamma
    rows = []
    k = 0
    while spec.tick_count is None or k < spec.tick_count:
        elapsed = gamma * (spec.phase + k * spec.tick_interval)
        t = low[0] + elapsed
        if t > high[0]:
            break
        position = position0 + velocity * elapsed
        if np.any(position < low[1:]) or np.any(position > high[1:]):
            break
        rows.append((t, *position.tolist()))
        k += 1
    if not rows:
        raise WorldlineOutsideRegionError("Worldline produces no tick inside the region")
    return np.asarray(rows, dtype=float), list(range(len(rows)))


def embed_observers(ec: EmbeddedCauset, specs: Mapping[str, WorldlineSpec]) -> EmbeddedCauset:
    """
    Insert the ticks of several worldlines and rebuild the order once.

    Raises
    ------
    InvalidConfigError
        If a chain name is already used.
    WorldlineOutsideRegionError
        If a worldline yields no tick inside the region.
    """
    blocks = [ec.coords]
    chains: dict[str, tuple[Sequence[int], Sequence[int]]] = {
        name: (chain.events, chain.valuations) for name, chain in ec.chains.items()
    }
    offset = ec.event_count
    for name, spec in specs.items():
        if name in chains:
            raise InvalidConfigError(f"Chain {name!r} already exists")
        ticks, labels = worldline_ticks(spec, ec.region)
        chains[name] = (range(offset, offset + len(labels)), labels)
        blocks.append(ticks)
        offset += len(labels)
        logger.debug("Worldline %s contributes %d ticks", name, len(labels))
    return _assemble(
        ec.region,
        np.vstack(blocks),
        chains=chains,
        worldlines={**ec.worldlines, **specs},
        named=ec.named,
    )


def embed_observer(
    ec: EmbeddedCauset, spec: WorldlineSpec, name: str = "P"
) -> tuple[EmbeddedCauset, ObserverChain]:
    """
    Insert one worldline's ticks.

    Returns
    -------
    tuple[EmbeddedCauset, ObserverChain]
        The new embedded causal set and the chain of the inserted ticks.
    """
    embedded = embed_observers(ec, {name: spec})
    return embedded, embedded.chains[name]


def continuum_projection(ec: EmbeddedCauset, point: MinkowskiPoint, chain_name: str) -> float:
    """
    Radar label of ``point`` on the worldline of ``chain_name``.

    The light signal from ``point`` meets the worldline after a coordinate time
    ``s`` solving ``|a + v s| = s`` with ``a`` the worldline's offset at the
    point's time. The label is the worldline's proper time at arrival in tick
    units, so the discrete projection is its ceiling.
    """
    try:
        spec = ec.worldlines[chain_name]
    except KeyError as e:
        raise InvalidConfigError(f"Unknown chain {chain_name!r}") from e
    t_start = float(ec.region[0][0])
    velocity = np.asarray(spec.velocity, dtype=float)
    position = np.asarray(spec.position0, dtype=float) + velocity * (point.t - t_start)
    a = position - np.asarray(point.spatial, dtype=float)
    av = float(a @ velocity)
    a2 = float(a @ a)
    v2 = float(velocity @ velocity)
    s = (av + math.sqrt(av * av + (1 - v2) * a2)) / (1 - v2)
    proper = (point.t + s - t_start) / spec.gamma
    return (proper - spec.phase) / spec.tick_interval


@dataclass(frozen=True)
class RadarQuantification:
    continuum: PairQuant
    discrete: PairQuant


def radar_quantify(ec: EmbeddedCauset, e: EventId, frame: Frame) -> RadarQuantification:
    """
    Continuum radar pair and discrete projection pair of an event.

    Raises
    ------
    OutsideCoverageError
        If the event has no projection onto a chain of the frame.
    """
    discrete = quantify_event(ec.causet, e, frame)
    if discrete is None:
        raise OutsideCoverageError(f"Event {e} is not below any tick of the frame")
    point = ec.point(e)
    continuum = PairQuant(
        continuum_projection(ec, point, ec.chain_name(frame.P)),
        continuum_projection(ec, point, ec.chain_name(frame.Q)),
    )
    return RadarQuantification(continuum=continuum, discrete=discrete)


def _continuum_interval(ec: EmbeddedCauset, a: EventId, b: EventId, frame: Frame) -> PairQuant:
    p_name = ec.chain_name(frame.P)
    q_name = ec.chain_name(frame.Q)
    pa, pb = ec.point(a), ec.point(b)
    return interval_pair(
        PairQuant(continuum_projection(ec, pa, p_name), continuum_projection(ec, pa, q_name)),
        PairQuant(continuum_projection(ec, pb, p_name), continuum_projection(ec, pb, q_name)),
    )


def radar_pythagoras(
    ec: EmbeddedCauset,
    cfg: OrthogonalConfig,
    tolerance: float = 1e-9,
    equal_time_tolerance: float = _EQUAL_TIME_CONTINUUM,
) -> PythagorasReport:
    """
    Pythagorean check on continuum radar quantifications.

    Raises
    ------
    NotEqualTimeError
        If a leg's time separation exceeds ``equal_time_tolerance``.
    """
    legs = {
        "D": _continuum_interval(ec, cfg.e2, cfg.e3, cfg.D_frame),
        "X": _continuum_interval(ec, cfg.e1, cfg.e3, cfg.X_frame),
        "Y": _continuum_interval(ec, cfg.e1, cfg.e2, cfg.Y_frame),
    }
    for label, pair in legs.items():
        dt = float(coordinates(pair).t)
        if abs(dt) > equal_time_tolerance:
            raise NotEqualTimeError(f"Events are not at equal time in the {label} frame: dt={dt}")
    return pythagoras_from_pairs(legs["D"], legs["X"], legs["Y"], tolerance)


def _frac(value: float) -> float:
    return value - math.floor(value)


def moving_frame_specs(
    velocity: float,
    tick_interval: float,
    position0: float,
    separation: float,
    tick_count: Optional[int] = None,
) -> tuple[WorldlineSpec, WorldlineSpec]:
    """
    Two comoving 1+1D clocks forming a synchronized frame.

    Both clocks start at the region's start time, so in their rest frame the
    trailing clock is ahead by ``gamma * v * d`` for a lab separation ``d``.
    Ticks then project with offsets ``gamma * d * (1 +- v) / tick_interval``;
    ``d`` is nudged upward until both offsets have fractional parts in
    ``[0.1, 0.9]`` so that no projection lands on a tick.

    Returns
    -------
    tuple[WorldlineSpec, WorldlineSpec]
        The trailing (``P``) and leading (``Q``) clocks.
    """
    gamma = WorldlineSpec((0.0,), (velocity,), tick_interval).gamma
    step = tick_interval / (97 * gamma)
    lab_separation = separation
    for _ in range(1000):
        forward = _frac(gamma * lab_separation * (1 + velocity) / tick_interval)
        backward = _frac(gamma * lab_separation * (1 - velocity) / tick_interval)
        if 0.1 <= forward <= 0.9 and 0.1 <= backward <= 0.9:
            break
        lab_separation += step
    trailing = WorldlineSpec((position0,), (velocity,), tick_interval, tick_count=tick_count)
    leading = WorldlineSpec(
        (position0 + lab_separation,), (velocity,), tick_interval, tick_count=tick_count
    )
    return trailing, leading


__all__ = [
    "RadarQuantification",
    "WorldlineSpec",
    "continuum_projection",
    "embed_observer",
    "embed_observers",
    "moving_frame_specs",
    "radar_pythagoras",
    "radar_quantify",
    "rest_worldline",
    "worldline_ticks",
]
