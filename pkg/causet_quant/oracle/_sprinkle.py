# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Poisson sprinkling into flat 1+1D and 2+1D spacetime."""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

import numpy as np

from causet_quant._constants import _LIGHT_CONE_CHUNK, _LIGHT_CONE_REL_TOL
from causet_quant._exceptions import InvalidConfigError, RegionEmptyError
from causet_quant._types import Bounds, EventId
from causet_quant.causet import CausalSet
from causet_quant.quantify import Frame, ObserverChain

if TYPE_CHECKING:
    from causet_quant.oracle._worldlines import WorldlineSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinkowskiPoint:
    """A spacetime point in natural units (light speed 1)."""

    t: float
    spatial: tuple[float, ...]

    def as_tuple(self) -> tuple[float, ...]:
        return (self.t, *self.spatial)


def _check_region(dimension: int, region: Bounds) -> tuple[np.ndarray, np.ndarray]:
    if dimension not in (2, 3):
        raise InvalidConfigError(f"Spacetime dimension must be 2 or 3, got {dimension}")
    low = np.asarray(region[0], dtype=float)
    high = np.asarray(region[1], dtype=float)
    if low.shape != (dimension,) or high.shape != (dimension,):
        raise InvalidConfigError(
            f"Region bounds must have {dimension} components, got {region}"
        )
    if not np.all(high > low):
        raise RegionEmptyError(f"Region has no volume: {region}")
    return low, high


@dataclass(frozen=True)
class SprinkleConfig:
    """
    Parameters of a sprinkling.

    Parameters
    ----------
    dimension : int
        Spacetime dimension, 2 or 3.
    region : Bounds
        ``((t0, x0[, y0]), (t1, x1[, y1]))`` axis-aligned box.
    density : float
        Expected events per unit spacetime volume.
    seed : int
        Seed of the PCG64 generator.

    Raises
    ------
    InvalidConfigError
        If the dimension or bounds are malformed.
    RegionEmptyError
        If the region has no volume or the density is not positive.
    """

    dimension: int
    region: Bounds
    density: float
    seed: int

    def __post_init__(self) -> None:
        _check_region(self.dimension, self.region)
        if not self.density > 0:
            raise RegionEmptyError(f"Density must be positive, got {self.density}")

    @property
    def volume(self) -> float:
        low, high = _check_region(self.dimension, self.region)
        return float(np.prod(high - low))


@dataclass(frozen=True, eq=False)
class EmbeddedCauset:
    """
    A causal set whose events carry Minkowski coordinates.

    Event ids are sorted by coordinate time, so the id order is a linear
    extension of the causal order.

    Attributes
    ----------
    causet : CausalSet
        The order derived from light cones.
    coords : numpy.ndarray
        ``(N, dimension)`` array; column 0 is time.
    region : Bounds
        The spacetime box.
    chains : Mapping[str, ObserverChain]
        Observer chains embedded so far, by name.
    worldlines : Mapping[str, WorldlineSpec]
        The worldline each chain was generated from.
    named : Mapping[str, EventId]
        Named events placed explicitly.
    """

    causet: CausalSet
    coords: np.ndarray
    region: Bounds
    chains: Mapping[str, ObserverChain] = field(default_factory=dict)
    worldlines: Mapping[str, "WorldlineSpec"] = field(default_factory=dict)
    named: Mapping[str, EventId] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return int(self.coords.shape[1])

    @property
    def event_count(self) -> int:
        return self.causet.event_count

    def point(self, event: EventId) -> MinkowskiPoint:
        row = self.coords[self.causet.check_id(event)]
        return MinkowskiPoint(float(row[0]), tuple(float(v) for v in row[1:]))

    def frame(self, p_name: str, q_name: str) -> Frame:
        """Pair two named chains into a frame, without checking synchronization."""
        try:
            return Frame(self.chains[p_name], self.chains[q_name])
        except KeyError as e:
            raise InvalidConfigError(f"Unknown chain {e}") from e

    def chain_name(self, chain: ObserverChain) -> str:
        for name, candidate in self.chains.items():
            if candidate == chain:
                return name
        raise InvalidConfigError("Chain is not an embedded worldline of this causal set")


def _in_future_cone(dt: np.ndarray, dist2: np.ndarray) -> np.ndarray:
    """Timelike or null future separation, with null tested up to a relative tolerance."""
    dt2 = dt * dt
    return (dt > 0) & (dt2 - dist2 >= -_LIGHT_CONE_REL_TOL * (dt2 + dist2))


def light_cone_leq(p: Sequence[float], q: Sequence[float]) -> bool:
    """
    Whether ``p`` is in the causal past of ``q`` (or equal to it).

    Examples
    --------
    >>> light_cone_leq((0.0, 0.0), (2.0, 1.0))
    True
    >>> light_cone_leq((0.0, 0.0), (1.0, 2.0))
    False
    """
    a = np.asarray(p, dtype=float)
    b = np.asarray(q, dtype=float)
    if np.array_equal(a, b):
        return True
    dt = b[0] - a[0]
    return bool(_in_future_cone(dt, np.sum((b[1:] - a[1:]) ** 2)))


def _light_cone_closure(coords: np.ndarray) -> CausalSet:
    """Packed light-cone order of time-sorted points, computed in row blocks."""
    n = coords.shape[0]
    packed = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    t = coords[:, 0]
    spatial = coords[:, 1:]
    for start in range(0, n, _LIGHT_CONE_CHUNK):
        stop = min(start + _LIGHT_CONE_CHUNK, n)
        dt = t[None, start:] - t[start:stop, None]
        dist2 = np.zeros_like(dt)
        for k in range(spatial.shape[1]):
            delta = spatial[None, start:, k] - spatial[start:stop, None, k]
            dist2 += delta * delta
        block = np.zeros((stop - start, n), dtype=bool)
        block[:, start:] = _in_future_cone(dt, dist2)
        block[np.arange(stop - start), np.arange(start, stop)] = True
        packed[start:stop] = np.packbits(block, axis=1)
    return CausalSet(n, packed)


def _assemble(
    region: Bounds,
    coords: np.ndarray,
    chains: Optional[Mapping[str, tuple[Sequence[int], Sequence[int]]]] = None,
    worldlines: Optional[Mapping[str, "WorldlineSpec"]] = None,
    named: Optional[Mapping[str, int]] = None,
) -> EmbeddedCauset:
    """
    Sort points by time, build the light-cone order and remap indices.

    ``chains`` and ``named`` refer to row indices of ``coords``.
    """
    coords = np.asarray(coords, dtype=float)
    order = np.argsort(coords[:, 0], kind="stable")
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    sorted_coords = coords[order]
    sorted_coords.setflags(write=False)
    causet = _light_cone_closure(sorted_coords)
    new_chains = {
        name: ObserverChain(
            tuple(int(rank[i]) for i in events), tuple(int(v) for v in valuations)
        )
        for name, (events, valuations) in (chains or {}).items()
    }
    new_named = {name: int(rank[i]) for name, i in (named or {}).items()}
    logger.debug("Assembled embedded causal set with %d events", causet.event_count)
    return EmbeddedCauset(
        causet=causet,
        coords=sorted_coords,
        region=region,
        chains=new_chains,
        worldlines=dict(worldlines or {}),
        named=new_named,
    )


def embed_points(
    dimension: int,
    region: Bounds,
    points: Sequence[Sequence[float]],
    names: Optional[Mapping[str, int]] = None,
) -> EmbeddedCauset:
    """
    An embedded causal set from explicit coordinates.

    Parameters
    ----------
    dimension : int
        Spacetime dimension, 2 or 3.
    region : Bounds
        The spacetime box the points live in.
    points : Sequence[Sequence[float]]
        ``(t, x[, y])`` per event.
    names : Mapping[str, int], optional
        Names for some points, by index into ``points``.
    """
    _check_region(dimension, region)
    coords = np.asarray(points, dtype=float).reshape(-1, dimension)
    return _assemble(region, coords, named=names)


def sprinkle(config: SprinkleConfig) -> EmbeddedCauset:
    """
    Sprinkle a Poisson number of uniform points into the region.

    The count and positions come from ``numpy.random.default_rng(seed)``
    (PCG64), so a seed reproduces the causal set bit for bit.

    Examples
    --------
    >>> ec = sprinkle(SprinkleConfig(2, ((0, 0), (4, 4)), density=2.0, seed=7))
    >>> ec.dimension
    2
    """
    low, high = _check_region(config.dimension, config.region)
    rng = np.random.default_rng(config.seed)
    count = int(rng.poisson(config.density * config.volume))
    coords = rng.uniform(low, high, size=(count, config.dimension))
    logger.info(
        "Sprinkled %d events (expected %.1f) with seed %d",
        count,
        config.density * config.volume,
        config.seed,
    )
    return _assemble(config.region, coords)


__all__ = [
    "EmbeddedCauset",
    "MinkowskiPoint",
    "SprinkleConfig",
    "embed_points",
    "light_cone_leq",
    "sprinkle",
]
