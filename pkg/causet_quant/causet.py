# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Finite causal sets and order queries.

A causal set stores its reflexive-transitive closure as a bit-packed numpy
matrix, one row of ``ceil(N / 8)`` bytes per event, so that ``a <= b`` is a
single bit lookup. The covering relation is derived lazily from the closure.
"""

import enum
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

import networkx as nx
import numpy as np

from causet_quant._constants import _LIGHT_CONE_CHUNK
from causet_quant._exceptions import (
    CausetQuantError,
    CycleDetectedError,
    DuplicateEventError,
    IdOutOfRangeError,
)
from causet_quant._types import EventId, Relation

logger = logging.getLogger(__name__)


class Order(str, enum.Enum):
    """Outcome of comparing two events."""

    BEFORE = "before"
    AFTER = "after"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class EventSubset:
    """An ordered list of distinct event ids."""

    members: tuple[EventId, ...]

    def __post_init__(self) -> None:
        if len(set(self.members)) != len(self.members):
            raise DuplicateEventError(f"Duplicate event ids in subset: {list(self.members)}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[EventId]:
        return iter(self.members)


class CausalSet:
    """
    Immutable finite causal set.

    Instances are created with :func:`build_causal_set` or
    :func:`causal_set_from_closure`; the constructor trusts its input.

    Parameters
    ----------
    event_count : int
        Number of events. Event ids are ``0 .. event_count - 1``.
    packed_closure : numpy.ndarray
        ``uint8`` array of shape ``(event_count, ceil(event_count / 8))``
        holding the reflexive-transitive closure packed with
        ``numpy.packbits`` (big bit order). Bit ``b`` of row ``a`` is set
        iff ``a <= b``.

    See Also
    --------
    build_causal_set : Build a causal set from a list of relations.
    causal_set_from_closure : Build a causal set from a dense boolean closure.
    """

    def __init__(self, event_count: int, packed_closure: np.ndarray):
        self._event_count = int(event_count)
        self._packed = packed_closure
        self._packed.setflags(write=False)

    @property
    def event_count(self) -> int:
        return self._event_count

    def __len__(self) -> int:
        return self._event_count

    def __repr__(self) -> str:
        return f"CausalSet(event_count={self._event_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CausalSet):
            return NotImplemented
        return self._event_count == other._event_count and np.array_equal(
            self._packed, other._packed
        )

    def __hash__(self) -> int:
        return hash((self._event_count, self._packed.tobytes()))

    @property
    def packed_closure(self) -> np.ndarray:
        """Read-only view of the bit-packed closure."""
        return self._packed

    def check_id(self, event: EventId) -> int:
        """Return ``event`` as an int, raising ``IdOutOfRangeError`` if invalid."""
        index = int(event)
        if index < 0 or index >= self._event_count:
            raise IdOutOfRangeError(
                f"Event id {event} outside [0, {self._event_count})"
            )
        return index

    def leq(self, a: EventId, b: EventId) -> bool:
        """
        Whether ``a <= b`` in the reflexive-transitive closure.

        Parameters
        ----------
        a, b : EventId
            Valid event ids.

        Returns
        -------
        bool
            True iff ``a == b`` or a directed path from ``a`` to ``b`` exists.

        Examples
        --------
        >>> cs = build_causal_set(3, [(0, 1), (1, 2)])
        >>> cs.leq(0, 2), cs.leq(2, 0)
        (True, False)
        """
        a = self.check_id(a)
        b = self.check_id(b)
        return bool(self._packed[a, b >> 3] & (0x80 >> (b & 7)))

    def successors(self, a: EventId) -> np.ndarray:
        """Boolean row of every ``b`` with ``a <= b`` (``a`` included)."""
        a = self.check_id(a)
        return np.unpackbits(self._packed[a], count=self._event_count).astype(bool)

    def submatrix(self, members: Sequence[EventId]) -> np.ndarray:
        """
        Dense closure restricted to ``members``.

        Entry ``[i, j]`` is True iff ``members[i] <= members[j]``.
        """
        index = np.asarray([self.check_id(m) for m in members], dtype=np.int64)
        if index.size == 0:
            return np.zeros((0, 0), dtype=bool)
        rows = np.unpackbits(self._packed[index], axis=1, count=self._event_count)
        return rows[:, index].astype(bool)

    def _iter_row_blocks(self) -> Iterable[tuple[int, np.ndarray]]:
        n = self._event_count
        for start in range(0, n, _LIGHT_CONE_CHUNK):
            block = np.unpackbits(
                self._packed[start : start + _LIGHT_CONE_CHUNK], axis=1, count=n
            ).astype(bool)
            yield start, block

    def predecessor_counts(self) -> np.ndarray:
        """Number of events ``c`` with ``c <= b`` for every ``b``."""
        counts = np.zeros(self._event_count, dtype=np.int64)
        for _, block in self._iter_row_blocks():
            counts += block.sum(axis=0)
        return counts

    def relation_pairs(self) -> list[Relation]:
        """
        Every strict pair ``(a, b)`` with ``a < b`` in the closure.

        Returns
        -------
        list[Relation]
            Pairs sorted lexicographically.
        """
        pairs: list[Relation] = []
        for start, block in self._iter_row_blocks():
            rows, cols = np.nonzero(block)
            rows = rows + start
            keep = rows != cols
            pairs.extend(zip(rows[keep].tolist(), cols[keep].tolist()))
        return pairs

    @cached_property
    def is_naturally_ordered(self) -> bool:
        """Whether ``a <= b`` implies ``a <= b`` as integers (ids are a linear extension)."""
        for start, block in self._iter_row_blocks():
            lower = np.tril(block, k=start - 1)
            if lower.any():
                return False
        return True

    @cached_property
    def covers(self) -> tuple[Relation, ...]:
        """
        The covering relation (transitive reduction), sorted.

        For each event, candidates above it are visited along a linear
        extension; the first not yet reachable through an earlier link is a
        new link, and everything above it becomes reachable.
        """
        n = self._event_count
        if n == 0:
            return ()
        if self.is_naturally_ordered:
            order = np.arange(n)
            packed = self._packed
        else:
            order = np.asarray(linear_extension(self), dtype=np.int64)
            dense = np.unpackbits(self._packed, axis=1, count=n)[np.ix_(order, order)]
            packed = np.packbits(dense, axis=1)

        links: list[Relation] = []
        for a in range(n):
            above = packed[a].copy()
            above[a >> 3] &= ~np.uint8(0x80 >> (a & 7))
            reached = np.zeros_like(above)
            while True:
                remaining = above & ~reached
                nonzero = np.flatnonzero(remaining)
                if nonzero.size == 0:
                    break
                byte = int(nonzero[0])
                bit = 7 - int(remaining[byte]).bit_length() + 1
                b = byte * 8 + bit
                links.append((int(order[a]), int(order[b])))
                reached |= packed[b]
        links.sort()
        logger.debug("Derived %d covers for %d events", len(links), n)
        return tuple(links)


def _pack_rows(dense: np.ndarray) -> np.ndarray:
    return np.packbits(np.asarray(dense, dtype=bool), axis=1)


def build_causal_set(event_count: int, relations: Iterable[Sequence[int]]) -> CausalSet:
    """
    Build a causal set from ordered pairs.

    Parameters
    ----------
    event_count : int
        Number of events.
    relations : Iterable[Sequence[int]]
        Ordered pairs ``(a, b)`` meaning ``a <= b``. Transitive and repeated
        pairs are allowed; ``(a, a)`` pairs are ignored.

    Returns
    -------
    CausalSet
        A causal set whose closure is the transitive closure of ``relations``.

    Raises
    ------
    IdOutOfRangeError
        If an id lies outside ``[0, event_count)``.
    CycleDetectedError
        If the relations contain a directed cycle.

    Examples
    --------
    >>> cs = build_causal_set(3, [(0, 1), (1, 2)])
    >>> cs.leq(0, 2)
    True
    >>> cs.covers
    ((0, 1), (1, 2))
    """
    n = int(event_count)
    if n < 0:
        raise IdOutOfRangeError(f"Negative event count: {event_count}")
    pairs = np.asarray(list(relations), dtype=np.int64).reshape(-1, 2)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= n):
        bad = pairs[(pairs < 0).any(axis=1) | (pairs >= n).any(axis=1)][0]
        raise IdOutOfRangeError(f"Relation {tuple(bad.tolist())} outside [0, {n})")
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]

    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs.tolist())
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CycleDetectedError(f"Relations contain a cycle: {cycle}")

    packed = np.zeros((n, (n + 7) // 8), dtype=np.uint8)
    for v in reversed(list(nx.topological_sort(graph))):
        packed[v, v >> 3] |= np.uint8(0x80 >> (v & 7))
        succ = list(graph.successors(v))
        if succ:
            packed[v] |= np.bitwise_or.reduce(packed[succ], axis=0)
    logger.debug("Built causal set with %d events from %d relations", n, len(pairs))
    return CausalSet(n, packed)


def causal_set_from_closure(matrix: np.ndarray) -> CausalSet:
    """
    Build a causal set from a dense boolean closure matrix.

    Parameters
    ----------
    matrix : numpy.ndarray
        Square boolean array; ``matrix[a, b]`` is True iff ``a <= b``. It must
        already be transitive.

    Returns
    -------
    CausalSet

    Raises
    ------
    CausetQuantError
        If the matrix is not square.
    CycleDetectedError
        If the matrix is not reflexive or not antisymmetric.
    """
    dense = np.asarray(matrix, dtype=bool)
    if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
        raise CausetQuantError(f"Closure must be a square matrix, got shape {dense.shape}")
    if not dense.diagonal().all():
        raise CycleDetectedError("Closure is not reflexive")
    both = dense & dense.T
    np.fill_diagonal(both, False)
    if both.any():
        a, b = np.argwhere(both)[0].tolist()
        raise CycleDetectedError(f"Closure is not antisymmetric: {a} <= {b} <= {a}")
    return CausalSet(dense.shape[0], _pack_rows(dense))


def order_relation(cs: CausalSet, a: EventId, b: EventId) -> Order:
    """
    Compare two events.

    Examples
    --------
    >>> cs = build_causal_set(3, [(0, 1), (1, 2)])
    >>> order_relation(cs, 0, 2).value
    'before'
    >>> order_relation(build_causal_set(2, []), 0, 1).value
    'incomparable'
    """
    if cs.check_id(a) == cs.check_id(b):
        return Order.EQUAL
    if cs.leq(a, b):
        return Order.BEFORE
    if cs.leq(b, a):
        return Order.AFTER
    return Order.INCOMPARABLE


def _as_members(s: Union[EventSubset, Sequence[EventId]]) -> tuple[EventId, ...]:
    if isinstance(s, EventSubset):
        return s.members
    return event_subset(s).members


def is_chain(cs: CausalSet, s: Union[EventSubset, Sequence[EventId]]) -> bool:
    """True iff every pair of ``s`` is comparable."""
    sub = cs.submatrix(_as_members(s))
    return bool((sub | sub.T).all())


def is_antichain(cs: CausalSet, s: Union[EventSubset, Sequence[EventId]]) -> bool:
    """True iff every pair of distinct members of ``s`` is incomparable."""
    sub = cs.submatrix(_as_members(s))
    comparable = sub | sub.T
    return bool(np.array_equal(comparable, np.eye(len(sub), dtype=bool)))


def event_subset(ids: Iterable[EventId], cs: Optional[CausalSet] = None) -> EventSubset:
    """
    Build an :class:`EventSubset`.

    Parameters
    ----------
    ids : Iterable[EventId]
        Distinct event ids, in order.
    cs : CausalSet, optional
        When given, every id is checked against it.

    Raises
    ------
    DuplicateEventError
        If an id appears twice.
    IdOutOfRangeError
        If ``cs`` is given and an id is not one of its events.
    """
    members = tuple(int(i) for i in ids)
    if cs is not None:
        for m in members:
            cs.check_id(m)
    return EventSubset(members)


def linear_extension(cs: CausalSet) -> list[EventId]:
    """
    Order event ids compatibly with the causal order.

    If ``a < b`` then the predecessors of ``a`` are a strict subset of the
    predecessors of ``b``, so sorting by predecessor count is a linear
    extension. Ties are broken by id.
    """
    if cs.event_count == 0:
        return []
    return np.argsort(cs.predecessor_counts(), kind="stable").tolist()


__all__ = [
    "CausalSet",
    "EventSubset",
    "Order",
    "build_causal_set",
    "causal_set_from_closure",
    "event_subset",
    "is_antichain",
    "is_chain",
    "linear_extension",
    "order_relation",
]
