# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Test configuration and fixtures."""

import logging

import pytest

from causet_quant.causet import CausalSet, build_causal_set
from causet_quant.oracle import Scenario, fig3, fig5, fig6, fig7
from causet_quant.quantify import Frame, observer_chain

logging.basicConfig(level=logging.DEBUG)


@pytest.fixture
def diamond() -> CausalSet:
    """
    Four events ``0 <= 1, 2 <= 3`` with ``1`` and ``2`` incomparable.

    Examples
    --------
    >>> def test_example(diamond):
    ...     assert diamond.leq(0, 3)
    """
    return build_causal_set(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture
def ladder() -> tuple[CausalSet, Frame]:
    """
    Two synchronized three-tick chains with a rung at every tick.

    Events ``0, 2, 4`` form ``P`` and ``1, 3, 5`` form ``Q``; tick ``k`` of
    each chain is below tick ``k + 1`` of the other. Event ``6`` is below
    ticks 1 of both chains and event ``7`` is below nothing.
    """
    relations = [(0, 2), (2, 4), (1, 3), (3, 5), (0, 3), (1, 2), (2, 5), (3, 4), (6, 2), (6, 3)]
    cs = build_causal_set(8, relations)
    return cs, Frame(observer_chain(cs, [0, 2, 4]), observer_chain(cs, [1, 3, 5]))


@pytest.fixture(scope="session")
def fig3_scenario() -> Scenario:
    return fig3()


@pytest.fixture(scope="session")
def fig5_scenario() -> Scenario:
    return fig5()


@pytest.fixture(scope="session")
def fig6_scenario() -> Scenario:
    return fig6()


@pytest.fixture(scope="session")
def fig7_scenario() -> Scenario:
    return fig7()
