# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Tests for projection, frames and interval quantification."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from causet_quant._exceptions import (
    EmptyChainError,
    InvalidChainError,
    InvalidConfigError,
    NotSynchronizedError,
)
from causet_quant.causet import build_causal_set
from causet_quant.quantify import (
    Coordinates,
    Frame,
    IntervalClass,
    ObserverChain,
    PairQuant,
    antisymmetric_scalar,
    build_frame,
    check_synchronized,
    classify,
    coordinates,
    cross_validate,
    decompose,
    interval_pair,
    interval_scalar,
    observer_chain,
    pair_from_coordinates,
    power_identity_holds,
    project,
    project_many,
    quantify_event,
    quantify_events,
    quantify_intervals,
    symmetric_scalar,
)

small_ints = st.integers(min_value=-10_000, max_value=10_000)


def test_observer_chain_valuations_step_by_one():
    """Test that valuations must increase by exactly one."""
    with pytest.raises(InvalidChainError, match="step"):
        ObserverChain((0, 1, 2), (0, 1, 3))
    with pytest.raises(InvalidChainError):
        ObserverChain((0, 1), (0,))
    assert ObserverChain((4, 7), (10, 11)).valuation_of(7) == 11
    assert ObserverChain((4, 7), (10, 11)).valuation_of(5) is None


def test_observer_chain_must_be_a_chain(diamond):
    """Test that incomparable or misordered events are rejected."""
    with pytest.raises(InvalidChainError):
        observer_chain(diamond, [0, 1, 2])
    with pytest.raises(InvalidChainError, match="order"):
        observer_chain(diamond, [3, 1, 0])


def test_project_ladder(ladder):
    """Test projections of every tick of P onto Q."""
    cs, frame = ladder
    assert project_many(cs, frame.P.events, frame.Q) == [1, 2, None]
    assert project_many(cs, frame.Q.events, frame.P) == [1, 2, None]
    assert project(cs, 7, frame.P) is None


def test_project_chain_event_is_its_own_projection(ladder):
    """Test that a quantifying event projects onto its own valuation."""
    cs, frame = ladder
    for event, valuation in zip(frame.P.events, frame.P.valuations):
        assert project(cs, event, frame.P) == valuation


def test_project_is_monotone(ladder):
    """Test that x <= y implies project(x) <= project(y) when both exist."""
    cs, frame = ladder
    for chain in (frame.P, frame.Q):
        values = project_many(cs, range(cs.event_count), chain)
        for x in range(cs.event_count):
            for y in range(cs.event_count):
                if cs.leq(x, y) and values[x] is not None and values[y] is not None:
                    assert values[x] <= values[y]


def test_quantify_event_ladder(ladder):
    """Test quantification of events in the ladder frame."""
    cs, frame = ladder
    assert quantify_event(cs, 6, frame) == PairQuant(1, 1)
    assert quantify_event(cs, 0, frame) == PairQuant(0, 1)
    assert quantify_event(cs, 7, frame) is None


def test_check_synchronized_ladder(ladder):
    """Test that the ladder chains are synchronized."""
    cs, frame = ladder
    assert check_synchronized(cs, frame.P, frame.Q).ok
    assert build_frame(cs, frame.P, frame.Q) == frame


def test_check_synchronized_detects_skipped_tick():
    """Test a chain whose successive ticks project two valuations apart."""
    # P = 0, 1, 2; Q = 3, 4, 5, 6, 7; P ticks project onto Q ticks 0, 2 and 4.
    relations = [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 7), (0, 3), (1, 5), (2, 7)]
    cs = build_causal_set(8, relations)
    p_chain = observer_chain(cs, [0, 1, 2])
    q_chain = observer_chain(cs, [3, 4, 5, 6, 7])
    report = check_synchronized(cs, p_chain, q_chain)
    assert not report.ok
    assert report.first_violation == 1
    assert report.direction == "P->Q"
    with pytest.raises(NotSynchronizedError):
        build_frame(cs, p_chain, q_chain)


def test_check_synchronized_empty_chain(diamond):
    """Test that an empty chain cannot be checked."""
    with pytest.raises(EmptyChainError):
        check_synchronized(diamond, ObserverChain((), ()), observer_chain(diamond, [0, 1]))


def test_quantify_events_table(ladder):
    """Test the table of every event, with unquantifiable ids listed apart."""
    cs, frame = ladder
    table = quantify_events(cs, frame)
    assert table.unquantified == (4, 5, 7)
    assert [row.event_id for row in table.rows] == [0, 1, 2, 3, 6]
    row = {row.event_id: row for row in table.rows}[6]
    assert (row.p, row.q, row.t, row.x, row.scalar) == (1, 1, 1, 0, 1)
    assert row.interval_class is IntervalClass.TIMELIKE


def test_quantify_events_with_origin(ladder):
    """Test that the origin is subtracted from every pair."""
    cs, frame = ladder
    table = quantify_events(cs, frame, origin=PairQuant(1, 1), events=[0, 6])
    assert [(row.p, row.q) for row in table.rows] == [(-1, 0), (0, 0)]
    assert table.rows[1].interval_class is IntervalClass.LIGHTLIKE


def test_quantify_intervals(ladder):
    """Test rows of event pairs keyed by the second event."""
    cs, frame = ladder
    table = quantify_intervals(cs, frame, [(0, 6), (6, 7)])
    assert len(table) == 1
    assert table.rows[0].event_id == 6
    assert (table.rows[0].p, table.rows[0].q) == (1, 0)
    assert table.unquantified == (7,)


def test_interval_pair_and_scalars():
    """Test the interval pair and the scalars built from it."""
    pair = interval_pair(PairQuant(1, 2), PairQuant(6, 3))
    assert pair == PairQuant(5, 1)
    assert interval_scalar(pair) == 5
    assert symmetric_scalar(pair) == 6
    assert antisymmetric_scalar(pair) == 4


def test_decompose_odd_sum_is_exact():
    """Test that odd sums are halved exactly."""
    sym, anti = decompose(PairQuant(4, 1))
    assert sym == PairQuant(Fraction(5, 2), Fraction(5, 2))
    assert anti == PairQuant(Fraction(3, 2), Fraction(-3, 2))
    assert sym + anti == PairQuant(4, 1)


@given(small_ints, small_ints)
def test_decompose_recombines(p, q):
    """Test that the parts sum back to the pair and the scalar splits into squares."""
    sym, anti = decompose(PairQuant(p, q))
    assert sym + anti == PairQuant(p, q)
    assert sym.p == sym.q
    assert anti.p == -anti.q
    assert p * q == sym.p**2 - anti.p**2


@given(small_ints, small_ints)
def test_coordinates_round_trip(p, q):
    """Test that coordinates and pairs convert into each other exactly."""
    c = coordinates(PairQuant(p, q))
    assert pair_from_coordinates(c) == PairQuant(p, q)
    assert interval_scalar(PairQuant(p, q)) == c.t**2 - c.x**2


@pytest.mark.parametrize(
    "pair,expected",
    [
        (PairQuant(2, 3), IntervalClass.TIMELIKE),
        (PairQuant(-2, -3), IntervalClass.TIMELIKE),
        (PairQuant(0, 3), IntervalClass.LIGHTLIKE),
        (PairQuant(0, 0), IntervalClass.LIGHTLIKE),
        (PairQuant(2, -3), IntervalClass.SPACELIKE),
    ],
)
def test_classify(pair, expected):
    """Test interval classification by the sign of p * q."""
    assert classify(pair) is expected


def test_coordinates_example():
    """Test coordinates of a simple pair."""
    assert coordinates(PairQuant(5, 3)) == Coordinates(t=4, x=1)


@pytest.mark.parametrize("k", [1, 2, 3, 7])
def test_power_identity(k):
    """Test the decomposition identity for powers of the pair."""
    assert power_identity_holds(PairQuant(3, -5), k)
    assert power_identity_holds(PairQuant(0.7, 2.9), k)


def test_pair_oriented():
    """Test that oriented flips pairs with a negative symmetric part."""
    assert PairQuant(-3, 1).oriented() == PairQuant(3, -1)
    assert PairQuant(3, -1).oriented() == PairQuant(3, -1)


def test_cross_validate_agreeing_frames(ladder):
    """Test that one frame listed twice agrees with itself."""
    cs, frame = ladder
    report = cross_validate(cs, 0, 6, [frame, frame])
    assert report.consensus
    assert report.non_bounding == []
    assert report.reference_scalar == 0
    assert report.entries[0].coords == Coordinates(t=Fraction(1, 2), x=Fraction(1, 2))


def test_cross_validate_reports_failed_frames(ladder):
    """Test that frames unable to quantify an event are listed as failed."""
    cs, frame = ladder
    report = cross_validate(cs, 0, 7, [frame])
    assert report.failed == [0]
    assert report.entries[0].error is not None
    assert report.consensus


def test_cross_validate_needs_frames(ladder):
    """Test that an empty frame list is a configuration error."""
    cs, _ = ladder
    with pytest.raises(InvalidConfigError):
        cross_validate(cs, 0, 6, [])


def test_cross_validate_fig5(fig5_scenario):
    """Test that only the frame bracketing both events gives the true scalar."""
    sel = fig5_scenario.selection("ab")
    a, b = sel.events
    names = list(fig5_scenario.frames)
    frames = [fig5_scenario.frame(name) for name in names]
    report = cross_validate(fig5_scenario.causet, a, b, frames)
    assert not report.consensus
    assert [names[i] for i in report.non_bounding] == ["PQ", "RS"]
    bounding = report.entries[names.index("QR")]
    assert bounding.scalar < 0
    assert classify(bounding.pair).value == sel.expected
    for index in report.non_bounding:
        pair = report.entries[index].pair
        assert interval_scalar(pair.oriented()) > 0


def test_frame_is_hashable(ladder):
    """Test that frames compare and hash by value."""
    _, frame = ladder
    assert {frame, Frame(frame.P, frame.Q)} == {frame}
