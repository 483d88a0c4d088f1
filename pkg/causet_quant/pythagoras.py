# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Orthogonal decomposition of a spacelike interval using three chain pairs."""

import logging
from dataclasses import dataclass, replace

from causet_quant._constants import _EQUAL_TIME_TICKS
from causet_quant._exceptions import NotEqualTimeError, UnquantifiableInFrameError
from causet_quant._types import EventId
from causet_quant.causet import CausalSet
from causet_quant.quantify import (
    Frame,
    PairQuant,
    coordinates,
    interval_pair,
    interval_scalar,
    quantify_event,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrthogonalConfig:
    """
    Three frames and three events for a Pythagorean decomposition.

    ``D_frame`` quantifies ``(e2, e3)``, ``X_frame`` quantifies ``(e1, e3)``
    and ``Y_frame`` quantifies ``(e1, e2)``. Event 1 sits at the foot of the
    perpendicular so that the X and Y legs are orthogonal.
    """

    D_frame: Frame
    X_frame: Frame
    Y_frame: Frame
    e1: EventId
    e2: EventId
    e3: EventId


@dataclass(frozen=True)
class PythagorasReport:
    """Squared lengths of the hypotenuse and legs, and their residual."""

    dd2: float
    dx2: float
    dy2: float
    residual: float
    ok: bool = True

    def interval_scalar(self, dt: float) -> tuple[float, float]:
        """
        Both composed forms of the interval scalar for a time separation ``dt``.

        Returns
        -------
        tuple[float, float]
            ``dt**2 - dx2 - dy2`` and ``dt**2 - dd2``.
        """
        return dt * dt - self.dx2 - self.dy2, dt * dt - self.dd2


def orthogonal_event_constraint(
    d2: float, d3: float, x3: float, y2: float
) -> tuple[float, float]:
    """
    Coordinates ``(x1, y1)`` event 1 needs for the leg scalars to sum.

    Examples
    --------
    >>> orthogonal_event_constraint(3, 4, 4, 3)
    (0, 0)
    """
    return d3 - x3, d2 - y2


def pythagoras_from_pairs(
    d_pair: PairQuant, x_pair: PairQuant, y_pair: PairQuant, tolerance: float
) -> PythagorasReport:
    """
    Compare ``-s(d)`` against ``-s(x) - s(y)`` for equal-time interval pairs.

    Parameters
    ----------
    d_pair, x_pair, y_pair : PairQuant
        Interval pairs of the hypotenuse and the two legs.
    tolerance : float
        Largest accepted absolute residual.
    """
    dd2 = -float(interval_scalar(d_pair))
    dx2 = -float(interval_scalar(x_pair))
    dy2 = -float(interval_scalar(y_pair))
    residual = abs(dd2 - dx2 - dy2)
    return PythagorasReport(
        dd2=dd2, dx2=dx2, dy2=dy2, residual=residual, ok=residual <= tolerance
    )


def _frame_interval(cs: CausalSet, a: EventId, b: EventId, frame: Frame, label: str) -> PairQuant:
    qa = quantify_event(cs, a, frame)
    qb = quantify_event(cs, b, frame)
    if qa is None or qb is None:
        missing = a if qa is None else b
        raise UnquantifiableInFrameError(f"Event {missing} has no projection onto {label}")
    return interval_pair(qa, qb)


def verify_pythagoras(
    cs: CausalSet,
    cfg: OrthogonalConfig,
    tolerance: float,
    equal_time_tolerance: float = _EQUAL_TIME_TICKS,
) -> PythagorasReport:
    """
    Quantify the three intervals in their frames and check the decomposition.

    Raises
    ------
    UnquantifiableInFrameError
        If an event does not project onto a chain of its frame.
    NotEqualTimeError
        If a quantified interval has a time separation above
        ``equal_time_tolerance``.
    """
    legs = {
        "D": _frame_interval(cs, cfg.e2, cfg.e3, cfg.D_frame, "D"),
        "X": _frame_interval(cs, cfg.e1, cfg.e3, cfg.X_frame, "X"),
        "Y": _frame_interval(cs, cfg.e1, cfg.e2, cfg.Y_frame, "Y"),
    }
    for label, pair in legs.items():
        dt = coordinates(pair).t
        if abs(dt) > equal_time_tolerance:
            raise NotEqualTimeError(
                f"Events are not at equal time in the {label} frame: dt={dt}"
            )
    report = pythagoras_from_pairs(legs["D"], legs["X"], legs["Y"], tolerance)
    logger.debug(
        "Pythagoras dd2=%s dx2=%s dy2=%s residual=%s",
        report.dd2,
        report.dx2,
        report.dy2,
        report.residual,
    )
    return report


def swap_legs(cfg: OrthogonalConfig) -> OrthogonalConfig:
    """Exchange the roles of the X and Y legs."""
    return replace(cfg, X_frame=cfg.Y_frame, Y_frame=cfg.X_frame, e2=cfg.e3, e3=cfg.e2)


__all__ = [
    "OrthogonalConfig",
    "PythagorasReport",
    "orthogonal_event_constraint",
    "pythagoras_from_pairs",
    "swap_legs",
    "verify_pythagoras",
]
