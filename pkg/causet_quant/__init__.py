# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Quantify intervals of a causal set with pairs of observer chains.
"""

from causet_quant.api import deserialize_object, load_object, save_object, serialize_object

__version__ = "0.1.0"
__all__ = [
    "__version__",
    "deserialize_object",
    "load_object",
    "save_object",
    "serialize_object",
]
