# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Tests for core API functions in __init__.py module."""

import pytest

from causet_quant import (
    __version__,
    deserialize_object,
    load_object,
    save_object,
    serialize_object,
)
from causet_quant._constants import _CSV_FORMAT, _JSON_FORMAT
from causet_quant._exceptions import SerializationError
from causet_quant.causet import CausalSet
from causet_quant.frames import FrameRelation, relation_from_mn
from causet_quant.quantify import Frame, QuantificationTable, quantify_events


def test_version_exists():
    """Test that __version__ is defined and is a valid version string."""
    assert isinstance(__version__, str)
    assert len(__version__) > 0


def test_serialize_object_causal_set(diamond):
    """Test serialize_object with a causal set."""
    data, metadata = serialize_object(diamond)

    assert isinstance(data, str)
    assert metadata == {_JSON_FORMAT: {"type": ("causet_quant.causet", "CausalSet")}}


def test_serialize_object_table(ladder):
    """Test serialize_object with a quantification table."""
    cs, frame = ladder
    _, metadata = serialize_object(quantify_events(cs, frame))

    assert list(metadata) == [_CSV_FORMAT]


def test_serialize_object_generic():
    """Test serialize_object with an unregistered object."""
    with pytest.raises(SerializationError):
        serialize_object([1, 2, 3])


def test_deserialize_object_causal_set(diamond):
    """Test deserialize_object with a causal set."""
    data, metadata = serialize_object(diamond)

    restored = deserialize_object(data, metadata)
    assert isinstance(restored, CausalSet)
    assert restored == diamond


def test_deserialize_object_empty_metadata():
    """Test deserialize_object without metadata."""
    with pytest.raises(SerializationError, match="No valid"):
        deserialize_object("{}", {})


def test_save_and_load_frame(tmp_path, ladder):
    """Test that a saved frame loads back, creating parent directories."""
    _, frame = ladder
    target = save_object(frame, tmp_path / "nested" / "frame.json")

    assert target.exists()
    assert load_object(target, Frame) == frame


def test_save_and_load_relation(tmp_path):
    """Test that a frame relation keeps its fields through a file."""
    relation = relation_from_mn(16, 4, m_variance=0.25)
    path = save_object(relation, str(tmp_path / "relation.json"))

    restored = load_object(path, FrameRelation)
    assert restored == relation
    assert restored.beta == pytest.approx(0.6)


def test_save_and_load_table(tmp_path, ladder):
    """Test that a table written as CSV loads back with the same rows."""
    cs, frame = ladder
    table = quantify_events(cs, frame)
    path = save_object(table, tmp_path / "table.csv")

    assert load_object(path, QuantificationTable).rows == table.rows


def test_load_object_unregistered_type(tmp_path):
    """Test load_object with a class that has no format."""
    path = tmp_path / "data.json"
    path.write_text("{}", encoding="utf-8")
    with pytest.raises(SerializationError, match="Unsupported type"):
        load_object(path, dict)


def test_load_object_wrong_format(tmp_path, diamond):
    """Test load_object with a format that does not match the class."""
    path = save_object(diamond, tmp_path / "cs.json")
    with pytest.raises(SerializationError):
        load_object(path, CausalSet, format_name=_CSV_FORMAT)


def test_load_object_missing_file(tmp_path):
    """Test that a missing file is an OS error."""
    with pytest.raises(OSError):
        load_object(tmp_path / "missing.json", CausalSet)
