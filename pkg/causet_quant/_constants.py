# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Constants and default tolerances for causet-quant."""

_JSON_FORMAT = "application/json"
_CSV_FORMAT = "text/csv"

# Successive quantifying events differ by exactly this valuation.
_VALUATION_STEP = 1

_CONSENSUS_REL_TOL = 1e-9
_INVARIANCE_REL_TOL = 1e-12
_CANDIDATE_REL_TOL = 1e-9
_COORDINATED_REL_STD = 0.1
_EQUAL_TIME_TICKS = 1.0
_EQUAL_TIME_CONTINUUM = 1e-9

# Rows of the light-cone matrix computed per numpy block.
_LIGHT_CONE_CHUNK = 256
# Null separations computed in floating point may miss the cone by a few ulps.
_LIGHT_CONE_REL_TOL = 1e-12

_DEFAULT_SEED = 20120423

_SCENARIO_NAMES = ("fig2b", "fig3", "fig5", "fig6", "fig7")

_QUANTIFICATION_COLUMNS = ("event_id", "p", "q", "t", "x", "scalar", "class")

_EXIT_OK = 0
_EXIT_VALIDATION_FAILED = 1
_EXIT_INVALID_FLAGS = 2
_EXIT_IO_FAILURE = 3
_EXIT_NOT_SYNCHRONIZED = 4
_EXIT_NOT_COORDINATED = 5


__all__ = [
    "_CANDIDATE_REL_TOL",
    "_CONSENSUS_REL_TOL",
    "_COORDINATED_REL_STD",
    "_CSV_FORMAT",
    "_DEFAULT_SEED",
    "_EQUAL_TIME_CONTINUUM",
    "_EQUAL_TIME_TICKS",
    "_EXIT_INVALID_FLAGS",
    "_EXIT_IO_FAILURE",
    "_EXIT_NOT_COORDINATED",
    "_EXIT_NOT_SYNCHRONIZED",
    "_EXIT_OK",
    "_EXIT_VALIDATION_FAILED",
    "_INVARIANCE_REL_TOL",
    "_JSON_FORMAT",
    "_LIGHT_CONE_CHUNK",
    "_LIGHT_CONE_REL_TOL",
    "_QUANTIFICATION_COLUMNS",
    "_SCENARIO_NAMES",
    "_VALUATION_STEP",
]
