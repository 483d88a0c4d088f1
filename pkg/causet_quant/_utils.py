# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Common utilities for causet-quant."""

import math
from fractions import Fraction
from numbers import Integral
from typing import Any, Optional, Union

from causet_quant._types import DecodeFunc, EncodeFunc, FormatMapping, Scalar


def _get_serialized_type(variable: Any) -> tuple[Union[str, None], str]:
    """
    Describe the type of a Python object as tuple[module, name].

    Parameters
    ----------
    variable : Any
        The object whose type is described.

    Returns
    -------
    tuple[Union[str, None], str]
        A tuple containing the module name (or None) and the qualified name.

    See Also
    --------
    _get_format_funcs_for_obj : Registry lookup that uses this key.

    Examples
    --------
    >>> from causet_quant.causet import build_causal_set
    >>> _get_serialized_type(build_causal_set(0, []))
    ('causet_quant.causet', 'CausalSet')
    """
    variable_type = type(variable)
    return (
        getattr(variable_type, "__module__", None),
        variable_type.__qualname__,
    )


def _get_type_key(cls: type) -> tuple[str, str]:
    """
    Describe a class as the tuple[module, name] used by the format registry.

    Parameters
    ----------
    cls : type
        The class to describe.

    Returns
    -------
    tuple[str, str]
        The module name and the qualified name of ``cls``.
    """
    return cls.__module__, cls.__qualname__


def _get_format_funcs_for_obj(
    obj: Any, formats: FormatMapping
) -> tuple[Optional[str], Optional[EncodeFunc], Optional[DecodeFunc]]:
    """
    Get the format and codec functions registered for the type of an object.

    Parameters
    ----------
    obj : Any
        The object for which to get the format and functions.
    formats : FormatMapping
        A mapping of (module, class) to (format, encode_func, decode_func).

    Returns
    -------
    tuple[Optional[str], Optional[EncodeFunc], Optional[DecodeFunc]]
        The format name and the codec functions, or (None, None, None) if the
        type is not registered.

    See Also
    --------
    _get_format_funcs_for_mod_type : Lookup by an explicit type key.
    """
    mod, var_type = _get_serialized_type(obj)
    return _get_format_funcs_for_mod_type(mod, var_type, formats=formats)


def _get_format_funcs_for_mod_type(
    mod: Optional[str], var_type: Optional[str], formats: FormatMapping
) -> tuple[Optional[str], Optional[EncodeFunc], Optional[DecodeFunc]]:
    """
    Get the format and codec functions for a module and type name.

    Parameters
    ----------
    mod : Optional[str]
        The module name to look up.
    var_type : Optional[str]
        The qualified type name to look up.
    formats : FormatMapping
        A mapping of (module, class) to (format, encode_func, decode_func).

    Returns
    -------
    tuple[Optional[str], Optional[EncodeFunc], Optional[DecodeFunc]]
        The format name and the codec functions, or (None, None, None) if the
        type is not registered.
    """
    if mod and var_type:
        for key, value in formats.items():
            _mod, _type = key
            if _mod == mod and _type == var_type:
                return value
    return None, None, None


def _is_integral(value: Any) -> bool:
    """Return True for ints and numpy integers, False for bools."""
    return isinstance(value, Integral) and not isinstance(value, bool)


def _to_exact(value: Scalar) -> Scalar:
    """Promote integers to Fraction so that halving stays exact."""
    if _is_integral(value):
        return Fraction(int(value))
    return value


def _relative_error(actual: float, expected: float, scale: Optional[float] = None) -> float:
    """
    Relative deviation of ``actual`` from ``expected``.

    Parameters
    ----------
    actual : float
        The computed value.
    expected : float
        The reference value.
    scale : float, optional
        Magnitude to divide by. Defaults to ``max(|actual|, |expected|)``.

    Returns
    -------
    float
        ``|actual - expected| / scale``; 0 when both values are zero.

    Examples
    --------
    >>> _relative_error(1.0, 1.0)
    0.0
    >>> _relative_error(2.0, 1.0)
    0.5
    """
    diff = abs(float(actual) - float(expected))
    if scale is None:
        scale = max(abs(float(actual)), abs(float(expected)))
    if scale == 0.0:
        return 0.0 if diff == 0.0 else math.inf
    return diff / scale


def _values_agree(a: Scalar, b: Scalar, rel_tol: float) -> bool:
    """
    Compare two scalars, exactly for integers and relatively for reals.

    Parameters
    ----------
    a, b : Scalar
        Values to compare.
    rel_tol : float
        Relative tolerance used when either value is not an integer.

    Returns
    -------
    bool
        Whether the values agree.

    Examples
    --------
    >>> _values_agree(3, 3, 1e-9)
    True
    >>> _values_agree(1000000000, 1000000001, 1e-9)
    False
    >>> _values_agree(0.1 + 0.2, 0.3, 1e-9)
    True
    """
    if (_is_integral(a) or isinstance(a, Fraction)) and (
        _is_integral(b) or isinstance(b, Fraction)
    ):
        return bool(a == b)
    return math.isclose(float(a), float(b), rel_tol=rel_tol, abs_tol=0.0) or a == b
