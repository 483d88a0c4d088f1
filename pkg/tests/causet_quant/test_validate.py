# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Tests for the validation suites."""

import pytest

from causet_quant._exceptions import InvalidConfigError
from causet_quant.quantify import PairQuant
from causet_quant.validate import SUITE_NAMES, run_suite, run_validation


@pytest.mark.parametrize("name", ["decomposition", "candidates", "invariance", "lorentz"])
def test_fast_suites_pass(name):
    """Test that the algebraic suites pass with the default seed."""
    result = run_suite(name)
    assert result.passed, result.details
    assert result.checks > 0


def test_consistency_suite():
    """Test the cross-chain and interval-class suite."""
    result = run_suite("consistency")
    assert result.passed, result.details
    assert result.details["non_bounding"] == ["PQ", "RS"]
    assert result.details["bounding_scalar"] < 0


@pytest.mark.slow
@pytest.mark.parametrize("name", ["poset", "coordinates", "speed", "pythagoras"])
def test_slow_suites_pass(name):
    """Test the suites that build sprinkled or large scenarios."""
    result = run_suite(name)
    assert result.passed, result.details


def test_suite_order():
    """Test the names of the suites in run order."""
    assert SUITE_NAMES == (
        "poset",
        "decomposition",
        "candidates",
        "invariance",
        "lorentz",
        "coordinates",
        "speed",
        "pythagoras",
        "consistency",
    )


def test_unknown_suite():
    """Test that unknown names are rejected before any suite runs."""
    with pytest.raises(InvalidConfigError, match="bogus"):
        run_validation(only=["decomposition", "bogus"])
    with pytest.raises(InvalidConfigError):
        run_suite("bogus")


def test_suite_alone_matches_suite_in_a_run():
    """Test that a suite's result does not depend on which suites ran before it."""
    alone = run_validation(only=["lorentz"], seed=7).as_dict()["suites"][0]
    together = run_validation(only=["invariance", "lorentz"], seed=7).as_dict()["suites"][1]
    assert alone == together


def test_broken_transform_fails_invariance(monkeypatch):
    """Test that the invariance suite catches a transformation that does not preserve p * q."""
    import causet_quant.frames as frames

    def stretch_q(pair, rho):
        return PairQuant(pair.p, pair.q * rho)

    monkeypatch.setattr(frames, "transform_pair", stretch_q)
    summary = run_validation(only=["invariance"])
    assert not summary.passed
    assert summary.failed == ["invariance"]
    assert summary.suites[0].details["failures"] > 0


def test_summary_as_dict_has_no_timings():
    """Test that the exported summary leaves timings out."""
    summary = run_validation(only=["decomposition"], seed=3)
    data = summary.as_dict()
    assert data["passed"] is True
    assert data["seed"] == 3
    assert "seconds" not in data["suites"][0]
    assert summary.suites[0].seconds >= 0.0


def test_order_reversing_transform_fails_invariance(monkeypatch):
    """Test that flipping both signs fails the suite even though p * q is unchanged."""
    import causet_quant.frames as frames

    def flip_signs(pair, rho):
        return PairQuant(-pair.p / rho, -pair.q * rho)

    monkeypatch.setattr(frames, "transform_pair", flip_signs)
    result = run_suite("invariance")
    assert not result.passed
    assert result.details["failures"] == 0
    assert result.details["order_failures"] > 0
