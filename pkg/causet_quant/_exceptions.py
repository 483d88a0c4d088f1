# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Exceptions raised by causet-quant."""


class CausetQuantError(ValueError):
    """Base class for every domain error of the package."""


class CycleDetectedError(CausetQuantError):
    """The input relations contain a directed cycle."""


class IdOutOfRangeError(CausetQuantError):
    """An event id lies outside ``[0, event_count)``."""


class DuplicateEventError(CausetQuantError):
    """An event subset lists the same event id twice."""


class InvalidChainError(CausetQuantError):
    """Events are not a chain or valuations do not step by one."""


class EmptyChainError(CausetQuantError):
    """A chain has no quantifying events."""


class NotSynchronizedError(CausetQuantError):
    """Two chains do not project successive ticks onto successive ticks."""


class UnquantifiableInFrameError(CausetQuantError):
    """An event has no projection onto one of the chains of a frame."""


class DegenerateSamplesError(CausetQuantError):
    """No sample pair has non-zero ``a``, ``b``, ``a + b`` and ``a - b``."""


class NotCoordinatedError(CausetQuantError):
    """Projections of successive ticks are not constant within tolerance."""


class NoProjectionError(CausetQuantError):
    """Too few ticks of a frame project onto the reference chains."""


class NonPositiveProjectionError(CausetQuantError):
    """A projection ``m`` or ``n`` is zero or negative."""


class NonPositiveRhoError(CausetQuantError):
    """The frame ratio ``rho`` is zero or negative."""


class SpeedOutOfRangeError(CausetQuantError):
    """A speed ``beta`` is not strictly inside ``(-1, 1)``."""


class NotEqualTimeError(CausetQuantError):
    """Events of an orthogonal configuration do not share a time coordinate."""


class RegionEmptyError(CausetQuantError):
    """A sprinkling region has no volume or the density is not positive."""


class WorldlineOutsideRegionError(CausetQuantError):
    """An observer worldline produces no tick inside the region."""


class OutsideCoverageError(CausetQuantError):
    """An event is not below any tick of a chain."""


class InvalidConfigError(CausetQuantError):
    """A run or scenario configuration is malformed."""


class SerializationError(CausetQuantError):
    """An object cannot be encoded, or a file cannot be decoded."""


__all__ = [
    "CausetQuantError",
    "CycleDetectedError",
    "DegenerateSamplesError",
    "DuplicateEventError",
    "EmptyChainError",
    "IdOutOfRangeError",
    "InvalidChainError",
    "InvalidConfigError",
    "NoProjectionError",
    "NonPositiveProjectionError",
    "NonPositiveRhoError",
    "NotCoordinatedError",
    "NotEqualTimeError",
    "NotSynchronizedError",
    "OutsideCoverageError",
    "RegionEmptyError",
    "SerializationError",
    "SpeedOutOfRangeError",
    "UnquantifiableInFrameError",
    "WorldlineOutsideRegionError",
]
