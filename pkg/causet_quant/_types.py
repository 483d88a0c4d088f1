# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Type definitions for causal sets, quantification and serialization."""

from fractions import Fraction
from typing import Any, Callable, Union

from typing_extensions import TypeAlias

EventId: TypeAlias = int
Relation: TypeAlias = tuple[int, int]
Scalar: TypeAlias = Union[int, float, Fraction]
SpatialPoint: TypeAlias = tuple[float, ...]
Bounds: TypeAlias = tuple[tuple[float, ...], tuple[float, ...]]

ModuleTypeTuple: TypeAlias = tuple[str, str]
EncodeFunc: TypeAlias = Callable[[Any], str]
DecodeFunc: TypeAlias = Callable[[str], Any]
FormatFuncs: TypeAlias = tuple[str, EncodeFunc, DecodeFunc]
FormatMapping: TypeAlias = dict[ModuleTypeTuple, FormatFuncs]
