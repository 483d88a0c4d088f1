# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Serialization and deserialization functions for causet-quant."""

from typing import Any, Optional

from causet_quant._exceptions import CausetQuantError, SerializationError
from causet_quant._types import FormatMapping
from causet_quant._utils import _get_format_funcs_for_mod_type, _get_format_funcs_for_obj


def _serialize(
    obj: Any,
    formats: FormatMapping,
) -> tuple[str, str]:
    """
    Serialize an object to text.

    The codec is chosen from ``formats`` by the type of ``obj``.

    Parameters
    ----------
    obj : Any
        The object to serialize.
    formats : FormatMapping
        A mapping of (module, class) to (format, encode_func, decode_func).

    Returns
    -------
    tuple[str, str]
        The encoded text and the format used.

    Raises
    ------
    SerializationError
        If the type is not registered or encoding fails.

    See Also
    --------
    _deserialize : Decode text produced by this function.

    Examples
    --------
    >>> from causet_quant._registry import _FORMATS
    >>> from causet_quant.causet import build_causal_set
    >>> text, format_name = _serialize(build_causal_set(2, [(0, 1)]), _FORMATS)
    >>> format_name
    'application/json'
    """
    format_name, encode_func, _ = _get_format_funcs_for_obj(obj, formats=formats)
    if encode_func is None or format_name is None:
        raise SerializationError(f"Unsupported object: {type(obj).__qualname__}")
    try:
        return encode_func(obj), format_name
    except Exception as e:
        raise SerializationError(f"Serialization failed for {format_name}: {e}") from e


def _deserialize(
    string_object: str,
    formats: FormatMapping,
    metadata: dict[str, Any],
    format_name: Optional[str] = None,
) -> Any:
    """
    Deserialize an object from text.

    Parameters
    ----------
    string_object : str
        The encoded text.
    formats : FormatMapping
        A mapping of (module, class) to (format, encode_func, decode_func).
    metadata : dict[str, Any]
        ``{format_name: {"type": (module, qualname)}}`` naming the target type.
    format_name : str, optional
        Format of the text. Defaults to the format registered for the type.

    Returns
    -------
    Any
        The decoded object.

    Raises
    ------
    SerializationError
        If the type is unknown, the format does not match, or decoding fails.

    Notes
    -----
    Domain validation errors raised while rebuilding the object (a cycle in
    the relations, a broken chain) are wrapped as well, so callers only need
    to handle ``SerializationError``.
    """
    metadata = metadata or {}
    if format_name is None:
        format_name = next(iter(metadata), None)
    mod, var_type = metadata.get(format_name, {}).get("type", (None, None))
    registered_format, _, decode_func = _get_format_funcs_for_mod_type(
        mod, var_type, formats=formats
    )
    if decode_func is None:
        raise SerializationError(f"Unsupported type for {format_name}: {mod}.{var_type}")
    if registered_format != format_name:
        raise SerializationError(
            f"{var_type} is stored as {registered_format}, not {format_name}"
        )
    try:
        return decode_func(string_object)
    except (CausetQuantError, ValueError, KeyError, TypeError) as e:
        raise SerializationError(f"Deserialization failed for {format_name}: {e}") from e
