# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Ground-truth causal sets from flat spacetime.

Events are sprinkled into 1+1D or 2+1D Minkowski boxes, observers are inertial
clocks whose ticks become chains, and continuum radar labels give the values
the discrete projections should approximate.
"""

from causet_quant.oracle._sprinkle import (
    EmbeddedCauset,
    MinkowskiPoint,
    SprinkleConfig,
    embed_points,
    light_cone_leq,
    sprinkle,
)
from causet_quant.oracle._worldlines import (
    RadarQuantification,
    WorldlineSpec,
    continuum_projection,
    embed_observer,
    embed_observers,
    moving_frame_specs,
    radar_pythagoras,
    radar_quantify,
    rest_worldline,
    worldline_ticks,
)
from causet_quant.oracle.scenarios import (
    Scenario,
    Selection,
    TrendReport,
    build_standard_scenarios,
    composition_scenario,
    coordinate_scenario,
    fig2b,
    fig3,
    fig5,
    fig6,
    fig7,
    orthogonal_scenario,
    pythagoras_trend,
    speed_scenario,
    standard_scenario,
)

__all__ = [
    "EmbeddedCauset",
    "MinkowskiPoint",
    "RadarQuantification",
    "Scenario",
    "Selection",
    "SprinkleConfig",
    "TrendReport",
    "WorldlineSpec",
    "build_standard_scenarios",
    "composition_scenario",
    "continuum_projection",
    "coordinate_scenario",
    "embed_observer",
    "embed_observers",
    "embed_points",
    "fig2b",
    "fig3",
    "fig5",
    "fig6",
    "fig7",
    "light_cone_leq",
    "moving_frame_specs",
    "orthogonal_scenario",
    "pythagoras_trend",
    "radar_pythagoras",
    "radar_quantify",
    "rest_worldline",
    "speed_scenario",
    "sprinkle",
    "standard_scenario",
    "worldline_ticks",
]
