# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Relations between frames: projections ``(m, n)``, the ratio ``rho``, speed
``beta``, pair transformations and the coordinate-form Lorentz boost.

Conventions: ``rho = sqrt(m / n)``, a pair transforms as ``(p / rho, q * rho)``
and ``beta = (m - n) / (m + n) = (rho**2 - 1) / (rho**2 + 1)``.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from causet_quant._constants import _COORDINATED_REL_STD, _INVARIANCE_REL_TOL
from causet_quant._exceptions import (
    NonPositiveProjectionError,
    NonPositiveRhoError,
    NoProjectionError,
    NotCoordinatedError,
    SpeedOutOfRangeError,
)
from causet_quant._types import Scalar
from causet_quant._utils import _relative_error
from causet_quant.causet import CausalSet
from causet_quant.quantify import (
    Coordinates,
    Frame,
    ObserverChain,
    PairQuant,
    interval_scalar,
    project_many,
)

logger = logging.getLogger(__name__)


def _check_projections(m: float, n: float) -> None:
    if not (m > 0 and n > 0):
        raise NonPositiveProjectionError(f"Projections must be positive, got m={m}, n={n}")


def rho_from_mn(m: float, n: float) -> float:
    """
    The frame ratio ``sqrt(m / n)``.

    Examples
    --------
    >>> rho_from_mn(4, 1)
    2.0
    """
    _check_projections(m, n)
    return math.sqrt(m / n)


def beta_from_mn(m: float, n: float) -> float:
    """
    The relative speed ``(m - n) / (m + n)``, always inside ``(-1, 1)``.

    Examples
    --------
    >>> beta_from_mn(4, 1)
    0.6
    """
    _check_projections(m, n)
    return (m - n) / (m + n)


@dataclass(frozen=True)
class FrameRelation:
    """
    How one frame's ticks project onto another frame's chains.

    Use :func:`relation_from_mn` or :func:`relation_from_rho` to build one
    with consistent ``rho`` and ``beta``.
    """

    m: float
    n: float
    rho: float
    beta: float
    sigma: float = 1.0
    m_variance: float = 0.0
    n_variance: float = 0.0

    @property
    def gamma(self) -> float:
        return (self.rho + 1 / self.rho) / 2

    def as_dict(self) -> dict[str, float]:
        return {
            "m": self.m,
            "n": self.n,
            "rho": self.rho,
            "beta": self.beta,
            "gamma": self.gamma,
            "sigma": self.sigma,
            "m_variance": self.m_variance,
            "n_variance": self.n_variance,
        }


def relation_from_mn(
    m: float,
    n: float,
    sigma: float = 1.0,
    m_variance: float = 0.0,
    n_variance: float = 0.0,
) -> FrameRelation:
    """Build a :class:`FrameRelation` from mean projections."""
    return FrameRelation(
        m=float(m),
        n=float(n),
        rho=rho_from_mn(m, n),
        beta=beta_from_mn(m, n),
        sigma=float(sigma),
        m_variance=float(m_variance),
        n_variance=float(n_variance),
    )


def relation_from_rho(rho: float, sigma: float = 1.0) -> FrameRelation:
    """
    The relation with ``m = rho`` and ``n = 1 / rho``.

    Raises
    ------
    NonPositiveRhoError
        If ``rho <= 0``.
    """
    if not rho > 0:
        raise NonPositiveRhoError(f"rho must be positive, got {rho}")
    return relation_from_mn(rho, 1 / rho, sigma=sigma)


def inverse_relation(r: FrameRelation) -> FrameRelation:
    """The relation seen from the other frame: ``rho -> 1 / rho``, ``beta -> -beta``."""
    return relation_from_mn(
        1 / r.m,
        1 / r.n,
        sigma=1 / r.sigma,
        m_variance=r.m_variance / r.m**4,
        n_variance=r.n_variance / r.n**4,
    )


def compose_relations(r12: FrameRelation, r23: FrameRelation) -> FrameRelation:
    """
    Compose frame relations; ``rho`` and ``sigma`` multiply.

    The speeds then combine as ``(b12 + b23) / (1 + b12 * b23)``. Variances
    of ``m`` and ``n`` are propagated to first order.

    Examples
    --------
    >>> r = compose_relations(relation_from_rho(math.sqrt(3)), relation_from_rho(math.sqrt(3)))
    >>> round(r.beta, 12)
    0.8
    """
    m = r12.m * r23.m
    n = r12.n * r23.n
    m_variance = r23.m**2 * r12.m_variance + r12.m**2 * r23.m_variance
    n_variance = r23.n**2 * r12.n_variance + r12.n**2 * r23.n_variance
    return FrameRelation(
        m=m,
        n=n,
        rho=r12.rho * r23.rho,
        beta=(r12.beta + r23.beta) / (1 + r12.beta * r23.beta),
        sigma=r12.sigma * r23.sigma,
        m_variance=m_variance,
        n_variance=n_variance,
    )


@dataclass(frozen=True)
class Boost:
    """A coordinate-form Lorentz boost."""

    beta: float
    gamma: float

    @property
    def rho(self) -> float:
        return math.sqrt((1 + self.beta) / (1 - self.beta))


def boost_from_beta(beta: float) -> Boost:
    """
    Boost with speed ``beta``.

    Raises
    ------
    SpeedOutOfRangeError
        If ``|beta| >= 1``.
    """
    if not -1 < beta < 1:
        raise SpeedOutOfRangeError(f"Speed must lie in (-1, 1), got {beta}")
    return Boost(beta=beta, gamma=1 / math.sqrt(1 - beta * beta))


def boost_from_rho(rho: float) -> Boost:
    if not rho > 0:
        raise NonPositiveRhoError(f"rho must be positive, got {rho}")
    rho2 = rho * rho
    return Boost(beta=(rho2 - 1) / (rho2 + 1), gamma=(rho + 1 / rho) / 2)


def transform_pair(pair: PairQuant, rho: float) -> PairQuant:
    """
    Transform a pair into a frame related by ``rho``: ``(p / rho, q * rho)``.

    Raises
    ------
    NonPositiveRhoError
        If ``rho <= 0``.

    Examples
    --------
    >>> transform_pair(PairQuant(4.0, 1.0), 2.0)
    PairQuant(p=2.0, q=2.0)
    """
    if not rho > 0:
        raise NonPositiveRhoError(f"rho must be positive, got {rho}")
    return PairQuant(pair.p / rho, pair.q * rho)


def scale_pair(pair: PairQuant, sigma: float) -> PairQuant:
    """Scale both components by ``sigma``."""
    return PairQuant(pair.p * sigma, pair.q * sigma)


def lorentz_transform(c: Coordinates, boost: Boost) -> Coordinates:
    """
    ``t' = gamma (t - beta x)``, ``x' = gamma (x - beta t)``.

    Examples
    --------
    >>> lorentz_transform(Coordinates(1.0, 0.0), boost_from_beta(0.6))
    Coordinates(t=1.25, x=-0.75)
    """
    if not -1 < boost.beta < 1:
        raise SpeedOutOfRangeError(f"Speed must lie in (-1, 1), got {boost.beta}")
    t = float(c.t)
    x = float(c.x)
    return Coordinates(
        t=boost.gamma * (t - boost.beta * x),
        x=boost.gamma * (x - boost.beta * t),
    )


@dataclass(frozen=True)
class InvarianceResult:
    s1: Scalar
    s2: Scalar
    ok: bool


def invariance_check(
    pair: PairQuant,
    rho: float,
    sigma: float = 1.0,
    tolerance: float = _INVARIANCE_REL_TOL,
) -> InvarianceResult:
    """
    Check that the interval scalar scales by ``sigma ** 2`` under a transformation.

    Parameters
    ----------
    pair : PairQuant
        The interval pair in the first frame.
    rho : float
        Frame ratio.
    sigma : float
        Observer-selected scale.
    tolerance : float
        Relative tolerance.

    Returns
    -------
    InvarianceResult
        ``s1`` of the original pair, ``s2`` of the transformed and scaled pair,
        and whether ``s2 == sigma**2 * s1``.
    """
    s1 = interval_scalar(pair)
    s2 = interval_scalar(scale_pair(transform_pair(pair, rho), sigma))
    expected = sigma * sigma * s1
    scale = max(abs(float(s2)), abs(float(expected)))
    ok = scale == 0.0 or _relative_error(s2, expected, scale=scale) <= tolerance
    return InvarianceResult(s1=s1, s2=s2, ok=ok)


def _tick_differences(
    cs: CausalSet, chains: tuple[ObserverChain, ...], onto: ObserverChain
) -> list[int]:
    diffs: list[int] = []
    for chain in chains:
        values = project_many(cs, chain.events, onto)
        for prev, cur in zip(values, values[1:]):
            if prev is not None and cur is not None:
                diffs.append(cur - prev)
    return diffs


def measure_frame_relation(
    cs: CausalSet,
    frame1: Frame,
    frame2: Frame,
    tolerance: float = _COORDINATED_REL_STD,
    sigma: float = 1.0,
) -> FrameRelation:
    """
    Measure how successive ticks of ``frame2`` project onto ``frame1``.

    Parameters
    ----------
    cs : CausalSet
        Causal set holding both frames.
    frame1 : Frame
        Reference frame.
    frame2 : Frame
        Measured frame.
    tolerance : float
        Largest accepted relative standard deviation of the per-tick
        projection differences.
    sigma : float
        Scale stored in the relation.

    Returns
    -------
    FrameRelation
        ``m`` and ``n`` are the means of successive-tick projection
        differences of both chains of ``frame2`` onto ``frame1.P`` and
        ``frame1.Q``.

    Raises
    ------
    NoProjectionError
        If fewer than two successive ticks project onto a reference chain.
    NotCoordinatedError
        If the projection differences are not constant within ``tolerance``.
    NonPositiveProjectionError
        If a mean projection is not positive.
    """
    chains = (frame2.P, frame2.Q)
    stats: dict[str, tuple[float, float]] = {}
    for label, onto in (("m", frame1.P), ("n", frame1.Q)):
        diffs = np.asarray(_tick_differences(cs, chains, onto), dtype=float)
        if diffs.size == 0:
            raise NoProjectionError(f"Fewer than two ticks project onto the {label} chain")
        mean = float(diffs.mean())
        variance = float(diffs.var())
        if mean <= 0:
            raise NonPositiveProjectionError(f"Mean projection {label}={mean} is not positive")
        rel_std = math.sqrt(variance) / mean
        if rel_std > tolerance:
            raise NotCoordinatedError(
                f"Projections onto the {label} chain vary: relative std {rel_std:.3g} "
                f"exceeds {tolerance}"
            )
        stats[label] = (mean, variance)
    (m, m_var), (n, n_var) = stats["m"], stats["n"]
    relation = relation_from_mn(m, n, sigma=sigma, m_variance=m_var, n_variance=n_var)
    logger.info("Measured frame relation m=%.6g n=%.6g beta=%.6g", m, n, relation.beta)
    return relation


def velocity_addition(beta12: float, beta23: float) -> float:
    """Relativistic composition of two speeds."""
    return (beta12 + beta23) / (1 + beta12 * beta23)


__all__ = [
    "Boost",
    "FrameRelation",
    "InvarianceResult",
    "beta_from_mn",
    "boost_from_beta",
    "boost_from_rho",
    "compose_relations",
    "inverse_relation",
    "invariance_check",
    "lorentz_transform",
    "measure_frame_relation",
    "relation_from_mn",
    "relation_from_rho",
    "rho_from_mn",
    "scale_pair",
    "transform_pair",
    "velocity_addition",
]
