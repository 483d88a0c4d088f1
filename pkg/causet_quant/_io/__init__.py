# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Serialization and deserialization module for causet-quant."""

from causet_quant._io._api import _deserialize, _serialize

__all__ = ["_deserialize", "_serialize"]
