# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Tests for frame relations, pair transformations and boosts."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from causet_quant._exceptions import (
    NonPositiveProjectionError,
    NonPositiveRhoError,
    NoProjectionError,
    NotCoordinatedError,
    SpeedOutOfRangeError,
)
from causet_quant.frames import (
    beta_from_mn,
    boost_from_beta,
    boost_from_rho,
    compose_relations,
    invariance_check,
    inverse_relation,
    lorentz_transform,
    measure_frame_relation,
    relation_from_mn,
    relation_from_rho,
    rho_from_mn,
    scale_pair,
    transform_pair,
    velocity_addition,
)
from causet_quant.causet import build_causal_set
from causet_quant.oracle import composition_scenario, speed_scenario
from causet_quant.quantify import (
    Coordinates,
    Frame,
    ObserverChain,
    PairQuant,
    coordinates,
    interval_scalar,
    observer_chain,
    pair_from_coordinates,
)

rhos = st.floats(min_value=0.05, max_value=20.0)
components = st.one_of(
    st.just(0.0),
    st.floats(min_value=1e-3, max_value=1e3),
    st.floats(min_value=-1e3, max_value=-1e-3),
)
speeds = st.floats(min_value=-0.95, max_value=0.95)


def test_rho_and_beta_from_projections():
    """Test rho and beta of the standard 16 / 4 projections."""
    assert rho_from_mn(16, 4) == 2.0
    assert beta_from_mn(16, 4) == 0.6
    assert beta_from_mn(3, 3) == 0.0
    relation = relation_from_mn(16, 4)
    assert relation.gamma == pytest.approx(1.25)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (-2, 3)])
def test_non_positive_projections(m, n):
    """Test that zero or negative projections are rejected."""
    with pytest.raises(NonPositiveProjectionError):
        rho_from_mn(m, n)
    with pytest.raises(NonPositiveProjectionError):
        beta_from_mn(m, n)


@pytest.mark.parametrize("rho", [0.0, -1.0])
def test_non_positive_rho(rho):
    """Test that rho must be positive everywhere it is accepted."""
    with pytest.raises(NonPositiveRhoError):
        transform_pair(PairQuant(1.0, 1.0), rho)
    with pytest.raises(NonPositiveRhoError):
        relation_from_rho(rho)
    with pytest.raises(NonPositiveRhoError):
        boost_from_rho(rho)


@pytest.mark.parametrize("beta", [1.0, -1.0, 1.5])
def test_speed_out_of_range(beta):
    """Test that boosts need |beta| < 1."""
    with pytest.raises(SpeedOutOfRangeError):
        boost_from_beta(beta)


@given(st.floats(min_value=1e-3, max_value=1e3), st.floats(min_value=1e-3, max_value=1e3))
def test_beta_stays_below_light_speed(m, n):
    """Test that every positive m, n gives |beta| < 1."""
    assert -1 < beta_from_mn(m, n) < 1


@given(components, components, rhos)
def test_transform_preserves_interval_scalar(p, q, rho):
    """Test invariance of p * q under the pair transformation."""
    result = invariance_check(PairQuant(p, q), rho)
    assert result.ok
    moved = transform_pair(PairQuant(p, q), rho)
    assert interval_scalar(moved) == pytest.approx(p * q, rel=1e-12)


@given(components, components, rhos, st.floats(min_value=0.1, max_value=10.0))
def test_scaled_transform_scales_scalar(p, q, rho, sigma):
    """Test that an observer scale multiplies the scalar by sigma squared."""
    result = invariance_check(PairQuant(p, q), rho, sigma=sigma)
    assert result.ok
    assert result.s1 == p * q


def test_invariance_check_detects_broken_transform(monkeypatch):
    """Test that a transformation that does not preserve p * q is caught."""
    import causet_quant.frames as frames

    def stretch_q(pair, rho):
        return PairQuant(pair.p, pair.q * rho)

    monkeypatch.setattr(frames, "transform_pair", stretch_q)
    assert not frames.invariance_check(PairQuant(3.0, 2.0), 2.0).ok


@given(components, components, rhos)
def test_pair_transform_matches_lorentz_boost(p, q, rho):
    """Test that the pair transformation is the coordinate boost with speed from rho."""
    pair = PairQuant(p, q)
    via_pair = coordinates(transform_pair(pair, rho))
    via_boost = lorentz_transform(coordinates(pair), boost_from_rho(rho))
    scale = abs(p) + abs(q) + 1.0
    assert abs(float(via_pair.t) - via_boost.t) <= 1e-9 * scale * (rho + 1 / rho)
    assert abs(float(via_pair.x) - via_boost.x) <= 1e-9 * scale * (rho + 1 / rho)


def test_lorentz_transform_example():
    """Test a unit time interval boosted to 0.6."""
    boosted = lorentz_transform(Coordinates(1.0, 0.0), boost_from_beta(0.6))
    assert boosted.t == pytest.approx(1.25)
    assert boosted.x == pytest.approx(-0.75)
    back = pair_from_coordinates(boosted)
    assert back.p * back.q == pytest.approx(1.0)


@given(speeds)
def test_boost_from_beta_and_rho_agree(beta):
    """Test that both boost constructors describe the same boost."""
    boost = boost_from_beta(beta)
    other = boost_from_rho(boost.rho)
    assert other.beta == pytest.approx(beta, abs=1e-12)
    assert other.gamma == pytest.approx(boost.gamma, rel=1e-12)


@given(speeds, speeds)
def test_composition_matches_velocity_addition(b12, b23):
    """Test that composing relations multiplies rho and adds velocities relativistically."""
    r12 = relation_from_rho(boost_from_beta(b12).rho)
    r23 = relation_from_rho(boost_from_beta(b23).rho)
    composed = compose_relations(r12, r23)
    assert composed.rho == pytest.approx(r12.rho * r23.rho, rel=1e-12)
    assert composed.beta == pytest.approx(velocity_addition(b12, b23), abs=1e-12)
    assert -1 < composed.beta < 1


def test_inverse_relation_negates_beta():
    """Test that viewing the relation from the other frame inverts rho and negates beta."""
    relation = relation_from_mn(16, 4, sigma=2.0)
    inverse = inverse_relation(relation)
    assert inverse.rho == pytest.approx(0.5)
    assert inverse.beta == pytest.approx(-0.6)
    assert inverse.sigma == pytest.approx(0.5)
    identity = compose_relations(relation, inverse)
    assert identity.beta == pytest.approx(0.0, abs=1e-12)


def test_scale_pair():
    """Test scaling both components."""
    assert scale_pair(PairQuant(2.0, -3.0), 2.0) == PairQuant(4.0, -6.0)


def test_measure_fig6(fig6_scenario):
    """Test that the 0.6 frame projects with m = 16 and n = 4."""
    relation = measure_frame_relation(
        fig6_scenario.causet, fig6_scenario.frame("rest"), fig6_scenario.frame("moving")
    )
    assert relation.m == pytest.approx(16.0)
    assert relation.n == pytest.approx(4.0)
    assert relation.beta == pytest.approx(0.6, abs=0.05)
    assert relation.rho == pytest.approx(2.0, rel=0.05)


def test_measure_swapped_frame_negates_beta(fig6_scenario):
    """Test that swapping P and Q of the reference frame negates beta."""
    rest = fig6_scenario.frame("rest")
    moving = fig6_scenario.frame("moving")
    relation = measure_frame_relation(fig6_scenario.causet, rest, moving)
    swapped = measure_frame_relation(
        fig6_scenario.causet, Frame(rest.Q, rest.P), Frame(moving.Q, moving.P)
    )
    assert swapped.beta == pytest.approx(-relation.beta)
    assert swapped.m == pytest.approx(relation.n)


def test_measure_identical_frames(fig6_scenario):
    """Test that a frame measured against itself has beta 0."""
    rest = fig6_scenario.frame("rest")
    relation = measure_frame_relation(fig6_scenario.causet, rest, rest)
    assert relation.beta == 0.0
    assert relation.rho == 1.0


@pytest.mark.slow
@pytest.mark.parametrize("velocity", [0.0, 0.2, 0.5, 0.8])
def test_measure_speed_scenarios(velocity):
    """Test that the measured speed matches the worldline speed."""
    scenario = speed_scenario(velocity)
    relation = measure_frame_relation(
        scenario.causet, scenario.frame("rest"), scenario.frame("moving")
    )
    assert relation.beta == pytest.approx(velocity, abs=0.05)
    assert relation.m == pytest.approx(scenario.parameters["expected_m"], rel=0.05)
    assert relation.n == pytest.approx(scenario.parameters["expected_n"], rel=0.05)


@pytest.mark.slow
def test_measure_composition():
    """Test that measured relations compose like velocities."""
    scenario = composition_scenario()
    cs = scenario.causet
    f1, f2, f3 = (scenario.frame(name) for name in ("F1", "F2", "F3"))
    r12 = measure_frame_relation(cs, f1, f2)
    r23 = measure_frame_relation(cs, f2, f3)
    r13 = measure_frame_relation(cs, f1, f3)
    assert compose_relations(r12, r23).beta == pytest.approx(r13.beta, abs=0.05)
    assert r13.beta == pytest.approx(scenario.parameters["v13"], abs=0.05)


def test_measure_needs_projections(ladder):
    """Test that a frame with no projecting ticks cannot be measured."""
    cs, frame = ladder
    lonely = ObserverChain((7,), (0,))
    lonely_frame = Frame(lonely, lonely)
    with pytest.raises(NoProjectionError):
        measure_frame_relation(cs, frame, lonely_frame)


def test_measure_rejects_uncoordinated_frames():
    """Test ticks whose projections alternate between one and three valuations apart."""
    relations = [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 7), (0, 3), (1, 4), (2, 7)]
    cs = build_causal_set(8, relations)
    p_chain = observer_chain(cs, [0, 1, 2])
    q_chain = observer_chain(cs, [3, 4, 5, 6, 7])
    with pytest.raises(NotCoordinatedError):
        measure_frame_relation(cs, Frame(q_chain, q_chain), Frame(p_chain, p_chain))
    relation = measure_frame_relation(
        cs, Frame(q_chain, q_chain), Frame(p_chain, p_chain), tolerance=1.0
    )
    assert relation.m == 2.0
    assert relation.m_variance == 1.0


def test_relation_as_dict():
    """Test the exported fields of a relation."""
    data = relation_from_rho(math.sqrt(3)).as_dict()
    assert set(data) == {"m", "n", "rho", "beta", "gamma", "sigma", "m_variance", "n_variance"}
    assert data["beta"] == pytest.approx(0.5)
