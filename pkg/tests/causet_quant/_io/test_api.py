# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Tests for IO serialization functions."""

import pytest

from causet_quant._constants import _CSV_FORMAT, _JSON_FORMAT
from causet_quant._exceptions import SerializationError
from causet_quant._io._api import _deserialize, _serialize
from causet_quant._registry import _FORMATS as FORMATS
from causet_quant.frames import relation_from_mn
from causet_quant.quantify import quantify_events


def test_serialize_causal_set(diamond):
    """Test serialize function with a causal set."""
    serialized_data, format_name = _serialize(diamond, FORMATS)

    assert isinstance(serialized_data, str)
    assert format_name == _JSON_FORMAT
    assert '"event_count": 4' in serialized_data


def test_serialize_quantification_table(ladder):
    """Test serialize function with a quantification table."""
    cs, frame = ladder
    serialized_data, format_name = _serialize(quantify_events(cs, frame), FORMATS)

    assert format_name == _CSV_FORMAT
    assert serialized_data.splitlines()[0].replace('"', "") == "event_id,p,q,t,x,scalar,class"


def test_serialize_unsupported_object():
    """Test serialize function with an unregistered object."""
    with pytest.raises(SerializationError, match="Unsupported object"):
        _serialize({"key": "value"}, FORMATS)


def test_deserialize_causal_set(diamond):
    """Test deserialize function with causal set data."""
    serialized_data, format_name = _serialize(diamond, FORMATS)

    metadata = {_JSON_FORMAT: {"type": ("causet_quant.causet", "CausalSet")}}
    restored = _deserialize(serialized_data, FORMATS, metadata, format_name)

    assert restored == diamond


def test_deserialize_default_format(diamond):
    """Test deserialize function picking the format from the metadata."""
    serialized_data, _ = _serialize(diamond, FORMATS)

    metadata = {_JSON_FORMAT: {"type": ("causet_quant.causet", "CausalSet")}}
    assert _deserialize(serialized_data, FORMATS, metadata) == diamond


def test_deserialize_frame_relation():
    """Test deserialize function with a frame relation."""
    relation = relation_from_mn(16, 4)
    serialized_data, format_name = _serialize(relation, FORMATS)

    metadata = {format_name: {"type": ("causet_quant.frames", "FrameRelation")}}
    assert _deserialize(serialized_data, FORMATS, metadata, format_name) == relation


def test_deserialize_unknown_type():
    """Test deserialize function with a type that is not registered."""
    metadata = {_JSON_FORMAT: {"type": ("builtins", "dict")}}
    with pytest.raises(SerializationError, match="Unsupported type"):
        _deserialize("{}", FORMATS, metadata, _JSON_FORMAT)


def test_deserialize_empty_metadata():
    """Test deserialize function without metadata."""
    with pytest.raises(SerializationError):
        _deserialize("{}", FORMATS, {})


def test_deserialize_format_mismatch(diamond):
    """Test deserialize function when the format is not the registered one."""
    serialized_data, _ = _serialize(diamond, FORMATS)

    metadata = {_CSV_FORMAT: {"type": ("causet_quant.causet", "CausalSet")}}
    with pytest.raises(SerializationError, match="stored as"):
        _deserialize(serialized_data, FORMATS, metadata, _CSV_FORMAT)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"event_count": 2}',
        '{"event_count": 2, "relations": [[0, 1], [1, 0]]}',
        '{"event_count": 2, "relations": [[0, 5]]}',
    ],
)
def test_deserialize_invalid_data(text):
    """Test deserialize function with malformed or inconsistent data."""
    metadata = {_JSON_FORMAT: {"type": ("causet_quant.causet", "CausalSet")}}
    with pytest.raises(SerializationError):
        _deserialize(text, FORMATS, metadata, _JSON_FORMAT)
