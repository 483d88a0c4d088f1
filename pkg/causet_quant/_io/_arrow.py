# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Arrow integration: quantification tables as CSV."""

from fractions import Fraction
from typing import Any

from causet_quant._constants import _QUANTIFICATION_COLUMNS
from causet_quant._exceptions import SerializationError
from causet_quant._types import Scalar
from causet_quant._utils import _is_integral
from causet_quant.quantify import IntervalClass, QuantificationRow, QuantificationTable

_NUMERIC_FIELDS = ("p", "q", "t", "x", "scalar")


def _is_whole(value: Scalar) -> bool:
    if _is_integral(value):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return False


def _numeric_array(values: list[Scalar]) -> Any:
    """Integers when every value is whole, doubles otherwise."""
    import pyarrow as pa

    if all(_is_whole(v) for v in values):
        return pa.array([int(v) for v in values], type=pa.int64())
    return pa.array([float(v) for v in values], type=pa.float64())


def _table_to_arrow(table: QuantificationTable) -> Any:
    import pyarrow as pa

    rows = table.rows
    columns = [pa.array([row.event_id for row in rows], type=pa.int64())]
    for name in _NUMERIC_FIELDS:
        columns.append(_numeric_array([getattr(row, name) for row in rows]))
    columns.append(pa.array([row.interval_class.value for row in rows], type=pa.string()))
    return pa.Table.from_arrays(columns, names=list(_QUANTIFICATION_COLUMNS))


def _serialize_quantification_table(table: QuantificationTable) -> str:
    """
    Write the rows of a quantification table as CSV.

    Columns are ``event_id, p, q, t, x, scalar, class``. Unquantified ids are
    not part of the CSV.

    Parameters
    ----------
    table : QuantificationTable
        The table to write.

    Returns
    -------
    str
        CSV text with a header line.

    See Also
    --------
    _deserialize_quantification_table : Read the CSV back.
    """
    import pyarrow as pa
    import pyarrow.csv as pa_csv

    sink = pa.BufferOutputStream()
    pa_csv.write_csv(_table_to_arrow(table), sink)
    return sink.getvalue().to_pybytes().decode("utf-8")


def _to_scalar(value: Any) -> Scalar:
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return value


def _deserialize_quantification_table(text: str) -> QuantificationTable:
    """
    Read a quantification CSV.

    Raises
    ------
    SerializationError
        If a column is missing or a class is unknown.
    """
    import pyarrow as pa
    import pyarrow.csv as pa_csv

    column_types = {"event_id": pa.int64(), "class": pa.string()}
    column_types.update({name: pa.float64() for name in _NUMERIC_FIELDS})
    arrow_table = pa_csv.read_csv(
        pa.BufferReader(text.encode("utf-8")),
        convert_options=pa_csv.ConvertOptions(column_types=column_types),
    )
    missing = [c for c in _QUANTIFICATION_COLUMNS if c not in arrow_table.column_names]
    if missing:
        raise SerializationError(f"Quantification CSV lacks columns: {', '.join(missing)}")
    data = arrow_table.to_pydict()
    rows = []
    for i, event_id in enumerate(data["event_id"]):
        try:
            interval_class = IntervalClass(data["class"][i])
        except ValueError as e:
            raise SerializationError(f"Unknown interval class in row {i}: {e}") from e
        rows.append(
            QuantificationRow(
                event_id=int(event_id),
                p=_to_scalar(data["p"][i]),
                q=_to_scalar(data["q"][i]),
                t=_to_scalar(data["t"][i]),
                x=_to_scalar(data["x"][i]),
                scalar=_to_scalar(data["scalar"][i]),
                interval_class=interval_class,
            )
        )
    return QuantificationTable(rows=tuple(rows))
