# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Read and write causal sets, frames, tables and reports.
"""

import logging
from pathlib import Path
from typing import Any, Optional, TypeVar, Union

from causet_quant._exceptions import SerializationError
from causet_quant._io import _deserialize, _serialize
from causet_quant._registry import _FORMATS
from causet_quant._utils import _get_format_funcs_for_mod_type, _get_type_key

logger = logging.getLogger(__name__)

T = TypeVar("T")


def serialize_object(obj: Any) -> tuple[str, dict[str, Any]]:
    """
    Serialize an object to text in its registered format.

    Parameters
    ----------
    obj : Any
        A registered object: causal set, chain, frame, table or report.

    Returns
    -------
    tuple[str, dict[str, Any]]
        The text and the metadata ``{format: {"type": (module, qualname)}}``
        that :func:`deserialize_object` needs to rebuild it.

    Raises
    ------
    SerializationError
        If the object's type is not registered or encoding fails.

    See Also
    --------
    save_object : Serialize straight to a file.

    Examples
    --------
    >>> from causet_quant.causet import build_causal_set
    >>> text, metadata = serialize_object(build_causal_set(2, [(0, 1)]))
    >>> metadata
    {'application/json': {'type': ('causet_quant.causet', 'CausalSet')}}
    """
    text, format_name = _serialize(obj, formats=_FORMATS)
    mod, var_type = _get_type_key(type(obj))
    return text, {format_name: {"type": (mod, var_type)}}


def deserialize_object(data: str, metadata: dict[str, Any]) -> Any:
    """
    Rebuild an object from text produced by :func:`serialize_object`.

    Parameters
    ----------
    data : str
        The encoded text.
    metadata : dict[str, Any]
        ``{format: {"type": (module, qualname)}}``.

    Returns
    -------
    Any
        The decoded object.

    Raises
    ------
    SerializationError
        If the metadata names no registered type or decoding fails.
    """
    for format_name in metadata:
        return _deserialize(data, formats=_FORMATS, metadata=metadata, format_name=format_name)
    raise SerializationError("No valid deserialization data found")


def save_object(obj: Any, path: Union[str, Path]) -> Path:
    """
    Write an object to ``path`` in its registered format.

    Parent directories are created as needed.

    Raises
    ------
    SerializationError
        If the object cannot be encoded.
    OSError
        If the file cannot be written.
    """
    text, _ = serialize_object(obj)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.debug("Wrote %s to %s", type(obj).__qualname__, target)
    return target


def load_object(path: Union[str, Path], cls: type[T], format_name: Optional[str] = None) -> T:
    """
    Read an object of type ``cls`` from ``path``.

    Parameters
    ----------
    path : str or Path
        File to read.
    cls : type
        Registered class to decode into.
    format_name : str, optional
        Format of the file; defaults to the one registered for ``cls``.

    Raises
    ------
    SerializationError
        If ``cls`` is not registered or the file cannot be decoded.
    OSError
        If the file cannot be read.

    Examples
    --------
    >>> from causet_quant.quantify import Frame
    >>> frame = load_object("frame.json", Frame)  # doctest: +SKIP
    """
    mod, var_type = _get_type_key(cls)
    registered, _, _ = _get_format_funcs_for_mod_type(mod, var_type, formats=_FORMATS)
    if registered is None:
        raise SerializationError(f"Unsupported type: {mod}.{var_type}")
    format_name = registered if format_name is None else format_name
    text = Path(path).read_text(encoding="utf-8")
    logger.debug("Read %s from %s", var_type, path)
    return _deserialize(
        text,
        formats=_FORMATS,
        metadata={format_name: {"type": (mod, var_type)}},
        format_name=format_name,
    )


__all__ = [
    "deserialize_object",
    "load_object",
    "save_object",
    "serialize_object",
]
