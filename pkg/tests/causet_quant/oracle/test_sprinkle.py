# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Tests for Poisson sprinkling and light-cone orders."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causet_quant._exceptions import IdOutOfRangeError, InvalidConfigError, RegionEmptyError
from causet_quant.oracle import SprinkleConfig, embed_points, light_cone_leq, sprinkle


def test_sprinkle_is_reproducible():
    """Test that a seed reproduces the sprinkling bit for bit."""
    config = SprinkleConfig(2, ((0.0, 0.0), (10.0, 10.0)), density=1.0, seed=3)
    first = sprinkle(config)
    second = sprinkle(config)
    assert first.causet == second.causet
    np.testing.assert_array_equal(first.coords, second.coords)


def test_sprinkle_seeds_differ():
    """Test that different seeds give different points."""
    region = ((0.0, 0.0), (10.0, 10.0))
    first = sprinkle(SprinkleConfig(2, region, density=1.0, seed=3))
    second = sprinkle(SprinkleConfig(2, region, density=1.0, seed=4))
    assert first.coords.shape != second.coords.shape or not np.array_equal(
        first.coords, second.coords
    )


def test_sprinkle_points_in_region_and_sorted():
    """Test that points lie in the box and ids follow coordinate time."""
    region = ((0.0, -2.0, -3.0), (5.0, 2.0, 3.0))
    ec = sprinkle(SprinkleConfig(3, region, density=2.0, seed=11))
    assert ec.dimension == 3
    coords = ec.coords
    assert np.all(coords >= np.asarray(region[0]))
    assert np.all(coords <= np.asarray(region[1]))
    assert np.all(np.diff(coords[:, 0]) >= 0)
    assert ec.causet.is_naturally_ordered


def test_sprinkle_count_is_near_expectation():
    """Test the Poisson count against its mean."""
    config = SprinkleConfig(2, ((0.0, 0.0), (40.0, 40.0)), density=1.0, seed=5)
    ec = sprinkle(config)
    # The mean is 1600 with a standard deviation of 40.
    assert abs(ec.event_count - config.volume) < 200


@pytest.mark.parametrize(
    "region,density,error",
    [
        (((0.0, 0.0), (0.0, 1.0)), 1.0, RegionEmptyError),
        (((0.0, 0.0), (1.0, 1.0)), 0.0, RegionEmptyError),
        (((0.0, 0.0), (1.0, 1.0)), -1.0, RegionEmptyError),
        (((0.0,), (1.0,)), 1.0, InvalidConfigError),
    ],
)
def test_sprinkle_config_rejects_bad_regions(region, density, error):
    """Test that empty regions, non-positive densities and bad bounds are rejected."""
    with pytest.raises(error):
        SprinkleConfig(2, region, density=density, seed=0)


def test_sprinkle_config_rejects_dimension():
    """Test that only 1+1D and 2+1D are supported."""
    with pytest.raises(InvalidConfigError):
        SprinkleConfig(4, ((0, 0, 0, 0), (1, 1, 1, 1)), density=1.0, seed=0)


@pytest.mark.parametrize(
    "p,q,expected",
    [
        ((0.0, 0.0), (2.0, 1.0), True),
        ((0.0, 0.0), (1.0, 1.0), True),
        ((0.0, 0.0), (1.0, 2.0), False),
        ((1.0, 0.0), (0.0, 0.0), False),
        ((1.0, 1.0), (1.0, 1.0), True),
        ((0.0, 0.0, 0.0), (5.0, 3.0, 4.0), True),
        ((0.0, 0.0, 0.0), (4.9, 3.0, 4.0), False),
        ((0.0, 0.0), (0.3, 0.1 + 0.2), True),
    ],
)
def test_light_cone_leq(p, q, expected):
    """Test the light-cone order, with null separations included."""
    assert light_cone_leq(p, q) is expected


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=2**31))
def test_causet_matches_light_cones(seed):
    """Test every pair of a small sprinkling against the light-cone predicate."""
    ec = sprinkle(SprinkleConfig(2, ((0.0, 0.0), (6.0, 6.0)), density=1.0, seed=seed))
    for a in range(ec.event_count):
        for b in range(ec.event_count):
            assert ec.causet.leq(a, b) == light_cone_leq(ec.coords[a], ec.coords[b])


def test_embed_points_names_follow_sorting():
    """Test that named points keep their names after time sorting."""
    region = ((0.0, 0.0), (10.0, 10.0))
    ec = embed_points(2, region, [(5.0, 5.0), (1.0, 5.0), (3.0, 5.0)], names={"late": 0})
    assert ec.named["late"] == 2
    assert ec.point(2).t == 5.0
    assert ec.point(0).spatial == (5.0,)
    assert ec.causet.covers == ((0, 1), (1, 2))
    with pytest.raises(IdOutOfRangeError):
        ec.point(3)


def test_embedded_frame_unknown_chain():
    """Test that pairing unknown chains is a configuration error."""
    ec = embed_points(2, ((0.0, 0.0), (1.0, 1.0)), [(0.5, 0.5)])
    with pytest.raises(InvalidConfigError):
        ec.frame("P", "Q")


def test_embedded_coords_are_read_only():
    """Test that the coordinates of an embedded causal set cannot be mutated."""
    ec = embed_points(2, ((0.0, 0.0), (1.0, 1.0)), [(0.5, 0.5)])
    with pytest.raises(ValueError):
        ec.coords[0, 0] = 1.0


def test_rounded_null_chain_stays_related():
    """Test that points on one light ray stay ordered after floating-point rounding."""
    ec = embed_points(2, ((0.0, 0.0), (1.0, 1.0)), [(0.0, 0.0), (0.1, 0.1), (0.3, 0.1 + 0.2)])
    assert ec.causet.leq(0, 1)
    assert ec.causet.leq(1, 2)
    assert ec.causet.leq(0, 2)
    assert ec.causet.covers == ((0, 1), (1, 2))
