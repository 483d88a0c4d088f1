# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Quantification of events by projection onto observer chains.

An observer chain carries integer valuations on its quantifying events. An
event is quantified in a frame (a synchronized pair of chains ``P``, ``Q``)
by the valuations of the least chain events above it.
"""

import enum
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Generic, Optional, TypeVar

import numpy as np

from causet_quant._constants import _CONSENSUS_REL_TOL, _VALUATION_STEP
from causet_quant._exceptions import (
    EmptyChainError,
    InvalidChainError,
    InvalidConfigError,
    NotSynchronizedError,
    UnquantifiableInFrameError,
)
from causet_quant._scalars import (
    CandidateAudit,
    CandidateResult,
    ScalarCandidate,
    audit_scalar_candidates,
    scalar_candidates,
)
from causet_quant._types import EventId, Scalar
from causet_quant._utils import _is_integral, _to_exact, _values_agree
from causet_quant.causet import CausalSet, is_chain

logger = logging.getLogger(__name__)

T = TypeVar("T", int, float, Fraction)


def _halve(value: Scalar) -> Scalar:
    half = _to_exact(value) / 2
    if isinstance(half, Fraction) and half.denominator == 1:
        return int(half)
    return half


class IntervalClass(str, enum.Enum):
    """Causal character of an interval pair."""

    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"
    SPACELIKE = "spacelike"


@dataclass(frozen=True)
class PairQuant(Generic[T]):
    """
    A pair ``(p, q)`` of projections or projection differences.

    Examples
    --------
    >>> PairQuant(4, 3) - PairQuant(1, 2)
    PairQuant(p=3, q=1)
    """

    p: T
    q: T

    def __add__(self, other: "PairQuant") -> "PairQuant":
        return PairQuant(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "PairQuant") -> "PairQuant":
        return PairQuant(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "PairQuant":
        return PairQuant(-self.p, -self.q)

    def __iter__(self) -> Iterator[T]:
        yield self.p
        yield self.q

    def oriented(self) -> "PairQuant":
        """The pair or its negation, whichever has a non-negative symmetric part."""
        if self.p + self.q < 0:
            return -self
        return self

    def as_float(self) -> "PairQuant[float]":
        return PairQuant(float(self.p), float(self.q))


@dataclass(frozen=True)
class Coordinates:
    """Time and space coordinates ``(t, x)`` of an interval."""

    t: Scalar
    x: Scalar


@dataclass(frozen=True)
class ObserverChain:
    """
    Quantifying events of a chain with successive integer valuations.

    Parameters
    ----------
    events : tuple[EventId, ...]
        Quantifying events, in chain order.
    valuations : tuple[int, ...]
        One valuation per event, increasing by exactly one.

    Raises
    ------
    InvalidChainError
        If the lengths differ or the valuations do not step by one.
    """

    events: tuple[EventId, ...]
    valuations: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.events) != len(self.valuations):
            raise InvalidChainError(
                f"{len(self.events)} events but {len(self.valuations)} valuations"
            )
        for i in range(1, len(self.valuations)):
            if self.valuations[i] - self.valuations[i - 1] != _VALUATION_STEP:
                raise InvalidChainError(
                    f"Valuations must step by {_VALUATION_STEP}: "
                    f"{self.valuations[i - 1]} -> {self.valuations[i]} at index {i}"
                )

    def __len__(self) -> int:
        return len(self.events)

    def valuation_of(self, event: EventId) -> Optional[int]:
        """Valuation of a quantifying event, or None if it is not on the chain."""
        try:
            return self.valuations[self.events.index(event)]
        except ValueError:
            return None


@dataclass(frozen=True)
class Frame:
    """A synchronized pair of observer chains."""

    P: ObserverChain
    Q: ObserverChain


@dataclass(frozen=True)
class SyncReport:
    """Result of :func:`check_synchronized`."""

    ok: bool
    first_violation: Optional[int] = None
    direction: Optional[str] = None


def validate_chain(cs: CausalSet, chain: ObserverChain) -> ObserverChain:
    """
    Check that ``chain`` is a chain of ``cs`` listed in causal order.

    Raises
    ------
    IdOutOfRangeError
        If an event is not in ``cs``.
    InvalidChainError
        If two events are incomparable or listed out of order.
    """
    events = chain.events
    if len(set(events)) != len(events):
        raise InvalidChainError(f"Chain repeats an event: {list(events)}")
    if not is_chain(cs, events):
        raise InvalidChainError("Chain events are not pairwise comparable")
    for before, after in zip(events, events[1:]):
        if not cs.leq(before, after):
            raise InvalidChainError(f"Chain events out of order: {after} precedes {before}")
    return chain


def observer_chain(cs: CausalSet, events: Iterable[EventId], start: int = 0) -> ObserverChain:
    """
    Build and validate a chain valued ``start, start + 1, ...``.

    Examples
    --------
    >>> from causet_quant.causet import build_causal_set
    >>> cs = build_causal_set(3, [(0, 1), (1, 2)])
    >>> observer_chain(cs, [0, 1, 2], start=5).valuations
    (5, 6, 7)
    """
    ids = tuple(int(e) for e in events)
    chain = ObserverChain(ids, tuple(range(start, start + len(ids))))
    return validate_chain(cs, chain)


def _below_matrix(cs: CausalSet, events: np.ndarray, chain: ObserverChain) -> np.ndarray:
    ticks = np.asarray(chain.events, dtype=np.int64)
    cols = cs.packed_closure[np.ix_(events, ticks >> 3)]
    masks = (0x80 >> (ticks & 7)).astype(np.uint8)
    return (cols & masks) != 0


def _projection_indices(
    cs: CausalSet, events: Sequence[EventId], chain: ObserverChain
) -> np.ndarray:
    """Index into ``chain`` of the least tick above each event, -1 when absent."""
    index = np.asarray([cs.check_id(e) for e in events], dtype=np.int64)
    if len(chain) == 0 or index.size == 0:
        return np.full(index.size, -1, dtype=np.int64)
    below = _below_matrix(cs, index, chain)
    return np.where(below.any(axis=1), below.argmax(axis=1), -1)


def project_many(
    cs: CausalSet, events: Sequence[EventId], chain: ObserverChain
) -> list[Optional[int]]:
    """Vectorized :func:`project` over ``events``."""
    valuations = chain.valuations
    return [
        None if i < 0 else valuations[i]
        for i in _projection_indices(cs, events, chain).tolist()
    ]


def project(cs: CausalSet, x: EventId, chain: ObserverChain) -> Optional[int]:
    """
    Valuation of the least quantifying event ``p`` of ``chain`` with ``x <= p``.

    Parameters
    ----------
    cs : CausalSet
        The causal set.
    x : EventId
        The event to project.
    chain : ObserverChain
        A chain of ``cs``, in causal order.

    Returns
    -------
    Optional[int]
        The valuation, or None when no chain event is above ``x``.

    Examples
    --------
    >>> from causet_quant.causet import build_causal_set
    >>> cs = build_causal_set(4, [(0, 1), (1, 2), (3, 2)])
    >>> chain = observer_chain(cs, [0, 1, 2])
    >>> project(cs, 3, chain)
    2
    """
    return project_many(cs, [x], chain)[0]


def _first_step_violation(valuations: list[Optional[int]]) -> Optional[int]:
    defined = [(i, v) for i, v in enumerate(valuations) if v is not None]
    for (_, prev), (i, cur) in zip(defined, defined[1:]):
        if cur - prev != _VALUATION_STEP:
            return i
    return None


def check_synchronized(
    cs: CausalSet,
    P: ObserverChain,  # noqa: N803
    Q: ObserverChain,  # noqa: N803
) -> SyncReport:
    """
    Check that successive ticks of each chain project to successive ticks of the other.

    Parameters
    ----------
    cs : CausalSet
        The causal set holding both chains.
    P, Q : ObserverChain
        The chains.

    Returns
    -------
    SyncReport
        ``ok`` is True when, in both directions, every two successive ticks
        with defined projections project to valuations one apart. Otherwise
        ``first_violation`` is the smallest tick index at which a projection
        step differs from one, and ``direction`` names the failing direction.

    Raises
    ------
    EmptyChainError
        If either chain has no quantifying events.
    """
    if len(P) == 0 or len(Q) == 0:
        raise EmptyChainError("Cannot check synchronization of an empty chain")
    violations = []
    q_on_p = _first_step_violation(project_many(cs, Q.events, P))
    if q_on_p is not None:
        violations.append((q_on_p, "Q->P"))
    p_on_q = _first_step_violation(project_many(cs, P.events, Q))
    if p_on_q is not None:
        violations.append((p_on_q, "P->Q"))
    if not violations:
        return SyncReport(ok=True)
    index, direction = min(violations)
    logger.debug("Chains not synchronized: %s step violation at tick %d", direction, index)
    return SyncReport(ok=False, first_violation=index, direction=direction)


def build_frame(cs: CausalSet, P: ObserverChain, Q: ObserverChain) -> Frame:  # noqa: N803
    """
    Validate two chains and pair them into a frame.

    Raises
    ------
    InvalidChainError
        If either chain is not a chain of ``cs``.
    NotSynchronizedError
        If :func:`check_synchronized` fails.
    """
    validate_chain(cs, P)
    validate_chain(cs, Q)
    report = check_synchronized(cs, P, Q)
    if not report.ok:
        raise NotSynchronizedError(
            f"Frame chains are not synchronized ({report.direction} "
            f"violation at tick {report.first_violation})"
        )
    return Frame(P, Q)


def quantify_event(cs: CausalSet, x: EventId, f: Frame) -> Optional[PairQuant]:
    """
    Quantify ``x`` by its projections onto both chains of a frame.

    Returns
    -------
    Optional[PairQuant]
        ``(project(x, P), project(x, Q))``, or None if either is absent.
    """
    p = project(cs, x, f.P)
    q = project(cs, x, f.Q)
    if p is None or q is None:
        return None
    return PairQuant(p, q)


def interval_pair(a: PairQuant, b: PairQuant) -> PairQuant:
    """
    The pair difference ``b - a``.

    Examples
    --------
    >>> interval_pair(PairQuant(1, 2), PairQuant(4, 3))
    PairQuant(p=3, q=1)
    """
    return b - a


def decompose(pair: PairQuant) -> tuple[PairQuant, PairQuant]:
    """
    Split a pair into its symmetric and antisymmetric parts.

    Integer inputs are halved exactly (with ``Fraction`` when odd).

    Examples
    --------
    >>> decompose(PairQuant(5, 3))
    (PairQuant(p=4, q=4), PairQuant(p=1, q=-1))
    """
    s = _halve(pair.p + pair.q)
    d = _halve(pair.p - pair.q)
    return PairQuant(s, s), PairQuant(d, -d)


def interval_scalar(pair: PairQuant) -> Scalar:
    """The interval scalar ``p * q``."""
    return pair.p * pair.q


def symmetric_scalar(pair: PairQuant) -> Scalar:
    """The symmetric scalar ``p + q``."""
    return pair.p + pair.q


def antisymmetric_scalar(pair: PairQuant) -> Scalar:
    """``p - q``; additive under decomposition but not associative."""
    return pair.p - pair.q


def coordinates(pair: PairQuant) -> Coordinates:
    """
    Coordinates ``t = (p + q) / 2`` and ``x = (p - q) / 2``.

    Examples
    --------
    >>> coordinates(PairQuant(5, 3))
    Coordinates(t=4, x=1)
    """
    return Coordinates(t=_halve(pair.p + pair.q), x=_halve(pair.p - pair.q))


def pair_from_coordinates(c: Coordinates) -> PairQuant:
    """The pair ``(t + x, t - x)``."""
    return PairQuant(c.t + c.x, c.t - c.x)


def classify(pair: PairQuant) -> IntervalClass:
    """
    Classify an interval by the sign of its interval scalar.

    Examples
    --------
    >>> classify(PairQuant(2, -3)).value
    'spacelike'
    """
    s = interval_scalar(pair)
    if s > 0:
        return IntervalClass.TIMELIKE
    if s < 0:
        return IntervalClass.SPACELIKE
    return IntervalClass.LIGHTLIKE


def power_decomposition(pair: PairQuant, k: int) -> tuple[PairQuant, PairQuant]:
    """Decomposition of ``(p ** k, q ** k)``."""
    return decompose(PairQuant(_to_exact(pair.p) ** k, _to_exact(pair.q) ** k))


def power_identity_holds(pair: PairQuant, k: int, tolerance: float = 1e-12) -> bool:
    """
    Check ``p^k q^k = ((p^k + q^k) / 2)^2 - ((p^k - q^k) / 2)^2``.

    Exact for integer and ``Fraction`` inputs, relative ``tolerance`` for floats.
    """
    sym, anti = power_decomposition(pair, k)
    lhs = _to_exact(pair.p) ** k * _to_exact(pair.q) ** k
    rhs = sym.p * sym.p - anti.p * anti.p
    if _is_integral(lhs) or isinstance(lhs, Fraction):
        return bool(lhs == rhs)
    scale = max(abs(float(lhs)), float(sym.p * sym.p))
    return scale == 0 or abs(float(lhs) - float(rhs)) <= tolerance * scale


@dataclass(frozen=True)
class FrameQuantification:
    """Quantification of one event pair in one frame."""

    frame_index: int
    pair: Optional[PairQuant] = None
    scalar: Optional[Scalar] = None
    coords: Optional[Coordinates] = None
    error: Optional[str] = None
    bounding: bool = True


@dataclass(frozen=True)
class CrossValidationReport:
    """Per-frame quantifications of an event pair and their consensus."""

    entries: tuple[FrameQuantification, ...]
    consensus: bool
    reference_scalar: Optional[Scalar] = None

    @property
    def non_bounding(self) -> list[int]:
        return [e.frame_index for e in self.entries if e.error is None and not e.bounding]

    @property
    def failed(self) -> list[int]:
        return [e.frame_index for e in self.entries if e.error is not None]


def _quantify_interval(cs: CausalSet, a: EventId, b: EventId, f: Frame) -> PairQuant:
    qa = quantify_event(cs, a, f)
    qb = quantify_event(cs, b, f)
    if qa is None or qb is None:
        missing = a if qa is None else b
        raise UnquantifiableInFrameError(f"Event {missing} has no projection onto the frame")
    return interval_pair(qa, qb)


def _largest_agreeing(scalars: list[tuple[int, Scalar]], rel_tol: float) -> Optional[Scalar]:
    best: Optional[Scalar] = None
    best_count = 0
    for _, s in scalars:
        count = sum(_values_agree(s, other, rel_tol) for _, other in scalars)
        if count > best_count:
            best, best_count = s, count
    return best


def cross_validate(
    cs: CausalSet,
    a: EventId,
    b: EventId,
    frames: Sequence[Frame],
    tolerance: float = _CONSENSUS_REL_TOL,
) -> CrossValidationReport:
    """
    Quantify the interval ``(a, b)`` in every frame and compare the scalars.

    Frames whose interval pair has components of opposite sign see the
    events as separated on both sides and form the reference; when there is
    no such frame the largest group of agreeing frames is used. Frames whose
    scalar disagrees with the reference are marked non-bounding.

    Parameters
    ----------
    cs : CausalSet
        The causal set.
    a, b : EventId
        The interval's events.
    frames : Sequence[Frame]
        At least one frame.
    tolerance : float
        Relative tolerance for non-integer scalars; integers compare exactly.

    Returns
    -------
    CrossValidationReport
        ``consensus`` is True iff every quantified frame agrees.

    Raises
    ------
    InvalidConfigError
        If ``frames`` is empty.
    """
    if not frames:
        raise InvalidConfigError("cross_validate needs at least one frame")

    quantified: list[tuple[int, PairQuant]] = []
    errors: dict[int, str] = {}
    for index, f in enumerate(frames):
        try:
            quantified.append((index, _quantify_interval(cs, a, b, f)))
        except UnquantifiableInFrameError as e:
            errors[index] = str(e)
            logger.debug("Frame %d cannot quantify (%d, %d): %s", index, a, b, e)

    scalars = [(i, interval_scalar(pair)) for i, pair in quantified]
    opposite = [(i, s) for (i, pair), (_, s) in zip(quantified, scalars) if pair.p * pair.q < 0]
    reference = _largest_agreeing(opposite or scalars, tolerance)

    entries = []
    for index in range(len(frames)):
        if index in errors:
            entries.append(FrameQuantification(frame_index=index, error=errors[index]))
            continue
        pair = dict(quantified)[index]
        scalar = interval_scalar(pair)
        bounding = reference is None or _values_agree(scalar, reference, tolerance)
        entries.append(
            FrameQuantification(
                frame_index=index,
                pair=pair,
                scalar=scalar,
                coords=coordinates(pair),
                bounding=bounding,
            )
        )
    consensus = all(
        _values_agree(s, scalars[0][1], tolerance) for _, s in scalars
    )
    return CrossValidationReport(
        entries=tuple(entries), consensus=consensus, reference_scalar=reference
    )


@dataclass(frozen=True)
class QuantificationRow:
    """One quantified event (or event pair) of a table."""

    event_id: EventId
    p: Scalar
    q: Scalar
    t: Scalar
    x: Scalar
    scalar: Scalar
    interval_class: IntervalClass

    @classmethod
    def from_pair(cls, event_id: EventId, pair: PairQuant) -> "QuantificationRow":
        c = coordinates(pair)
        return cls(
            event_id=event_id,
            p=pair.p,
            q=pair.q,
            t=c.t,
            x=c.x,
            scalar=interval_scalar(pair),
            interval_class=classify(pair),
        )


@dataclass(frozen=True)
class QuantificationTable:
    """Quantified events plus the ids that could not be quantified."""

    rows: tuple[QuantificationRow, ...]
    unquantified: tuple[EventId, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.rows)


def quantify_events(
    cs: CausalSet,
    frame: Frame,
    origin: Optional[PairQuant] = None,
    events: Optional[Sequence[EventId]] = None,
) -> QuantificationTable:
    """
    Quantify events of ``cs`` in ``frame``.

    Parameters
    ----------
    cs : CausalSet
        The causal set.
    frame : Frame
        The quantifying frame.
    origin : PairQuant, optional
        Subtracted from every pair; defaults to ``(0, 0)``.
    events : Sequence[EventId], optional
        Events to quantify; defaults to every event.

    Returns
    -------
    QuantificationTable
        One row per quantifiable event, in id order.
    """
    ids = list(range(cs.event_count)) if events is None else [int(e) for e in events]
    origin = PairQuant(0, 0) if origin is None else origin
    ps = project_many(cs, ids, frame.P)
    qs = project_many(cs, ids, frame.Q)
    rows = []
    missing = []
    for event, p, q in zip(ids, ps, qs):
        if p is None or q is None:
            missing.append(event)
            continue
        rows.append(QuantificationRow.from_pair(event, interval_pair(origin, PairQuant(p, q))))
    logger.debug("Quantified %d events, %d unquantifiable", len(rows), len(missing))
    return QuantificationTable(rows=tuple(rows), unquantified=tuple(missing))


def quantify_intervals(
    cs: CausalSet, frame: Frame, pairs: Sequence[tuple[EventId, EventId]]
) -> QuantificationTable:
    """
    One row per event pair ``(a, b)``, holding the interval pair from ``a`` to ``b``.

    The row's ``event_id`` is ``b``. Pairs that cannot be quantified list ``b``
    as unquantified.
    """
    rows = []
    missing = []
    for a, b in pairs:
        try:
            rows.append(QuantificationRow.from_pair(b, _quantify_interval(cs, a, b, frame)))
        except UnquantifiableInFrameError:
            missing.append(b)
    return QuantificationTable(rows=tuple(rows), unquantified=tuple(missing))


__all__ = [
    "CandidateAudit",
    "CandidateResult",
    "Coordinates",
    "CrossValidationReport",
    "Frame",
    "FrameQuantification",
    "IntervalClass",
    "ObserverChain",
    "PairQuant",
    "QuantificationRow",
    "QuantificationTable",
    "ScalarCandidate",
    "SyncReport",
    "antisymmetric_scalar",
    "audit_scalar_candidates",
    "build_frame",
    "check_synchronized",
    "classify",
    "coordinates",
    "cross_validate",
    "decompose",
    "interval_pair",
    "interval_scalar",
    "observer_chain",
    "pair_from_coordinates",
    "power_decomposition",
    "power_identity_holds",
    "project",
    "project_many",
    "quantify_event",
    "quantify_events",
    "quantify_intervals",
    "scalar_candidates",
    "symmetric_scalar",
    "validate_chain",
]
