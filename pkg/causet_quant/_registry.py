# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""Registry of the file formats of every serializable type."""

from causet_quant._constants import _CSV_FORMAT, _JSON_FORMAT
from causet_quant._exceptions import SerializationError
from causet_quant._io._arrow import (
    _deserialize_quantification_table,
    _serialize_quantification_table,
)
from causet_quant._io._json import (
    _decode_causal_set,
    _decode_chain,
    _decode_embedded_causet,
    _decode_frame,
    _decode_frame_relation,
    _decode_orthogonal_config,
    _decode_pythagoras_report,
    _dumps,
    _encode_causal_set,
    _encode_chain,
    _encode_embedded_causet,
    _encode_frame,
    _encode_frame_relation,
    _encode_orthogonal_config,
    _encode_pythagoras_report,
    _loads,
)
from causet_quant._types import FormatMapping
from causet_quant.validate import SuiteResult, ValidationSummary


def _encode_validation_summary(summary: ValidationSummary) -> str:
    return _dumps(summary.as_dict())


def _decode_validation_summary(text: str) -> ValidationSummary:
    payload = _loads(text)
    try:
        suites = tuple(
            SuiteResult(
                name=s["name"],
                passed=bool(s["passed"]),
                checks=int(s["checks"]),
                details=dict(s.get("details", {})),
            )
            for s in payload["suites"]
        )
    except (KeyError, TypeError) as e:
        raise SerializationError(f"Malformed validation summary: {e}") from e
    return ValidationSummary(suites=suites, seed=int(payload.get("seed", 0)))


_FORMATS: FormatMapping = {
    # Mapping of (module, class) to (format, encode_func, decode_func)
    ("causet_quant.causet", "CausalSet"): (
        _JSON_FORMAT,
        _encode_causal_set,
        _decode_causal_set,
    ),
    ("causet_quant.oracle._sprinkle", "EmbeddedCauset"): (
        _JSON_FORMAT,
        _encode_embedded_causet,
        _decode_embedded_causet,
    ),
    ("causet_quant.quantify", "ObserverChain"): (
        _JSON_FORMAT,
        _encode_chain,
        _decode_chain,
    ),
    ("causet_quant.quantify", "Frame"): (
        _JSON_FORMAT,
        _encode_frame,
        _decode_frame,
    ),
    ("causet_quant.quantify", "QuantificationTable"): (
        _CSV_FORMAT,
        _serialize_quantification_table,
        _deserialize_quantification_table,
    ),
    ("causet_quant.frames", "FrameRelation"): (
        _JSON_FORMAT,
        _encode_frame_relation,
        _decode_frame_relation,
    ),
    ("causet_quant.pythagoras", "OrthogonalConfig"): (
        _JSON_FORMAT,
        _encode_orthogonal_config,
        _decode_orthogonal_config,
    ),
    ("causet_quant.pythagoras", "PythagorasReport"): (
        _JSON_FORMAT,
        _encode_pythagoras_report,
        _decode_pythagoras_report,
    ),
    ("causet_quant.validate", "ValidationSummary"): (
        _JSON_FORMAT,
        _encode_validation_summary,
        _decode_validation_summary,
    ),
}

__all__ = ["_FORMATS"]
