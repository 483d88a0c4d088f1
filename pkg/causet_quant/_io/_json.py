# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""JSON codecs for causal sets, frames and reports."""

import json
from collections.abc import Mapping
from typing import Any

import numpy as np

from causet_quant._exceptions import SerializationError
from causet_quant.causet import CausalSet, build_causal_set
from causet_quant.frames import FrameRelation
from causet_quant.oracle._sprinkle import EmbeddedCauset, _light_cone_closure
from causet_quant.oracle._worldlines import WorldlineSpec
from causet_quant.pythagoras import OrthogonalConfig, PythagorasReport
from causet_quant.quantify import Frame, ObserverChain


def _dumps(payload: Any) -> str:
    """Key order follows the payload; floats use ``repr`` so output is reproducible."""
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _loads(text: str) -> Any:
    payload = json.loads(text)
    if not isinstance(payload, dict):
        raise SerializationError(f"Expected a JSON object, got {type(payload).__name__}")
    return payload


def _require(payload: Mapping[str, Any], *keys: str) -> None:
    missing = [key for key in keys if key not in payload]
    if missing:
        raise SerializationError(f"Missing keys: {', '.join(missing)}")


def _causal_set_payload(cs: CausalSet) -> dict[str, Any]:
    return {
        "event_count": cs.event_count,
        "relations": [[a, b] for a, b in cs.covers],
    }


def _encode_causal_set(cs: CausalSet) -> str:
    """
    Encode a causal set as its covering relations.

    Transitive relations are implied by the covers and rebuilt on load.
    """
    return _dumps(_causal_set_payload(cs))


def _decode_causal_set(text: str) -> CausalSet:
    payload = _loads(text)
    _require(payload, "event_count", "relations")
    cs = build_causal_set(int(payload["event_count"]), payload["relations"])
    if "embedding" in payload:
        _check_embedding(cs, payload["embedding"])
    return cs


def _check_embedding(cs: CausalSet, embedding: Any) -> np.ndarray:
    coords = np.asarray(embedding, dtype=float)
    if coords.ndim != 2 or coords.shape[0] != cs.event_count or coords.shape[1] not in (2, 3):
        raise SerializationError(
            f"Embedding of shape {coords.shape} does not fit {cs.event_count} events"
        )
    if np.any(np.diff(coords[:, 0]) < 0):
        raise SerializationError("Embedded events must be sorted by time")
    if _light_cone_closure(coords) != cs:
        raise SerializationError("Relations do not match the light cones of the embedding")
    return coords


def _chain_payload(chain: ObserverChain) -> dict[str, list[int]]:
    return {"events": list(chain.events), "valuations": list(chain.valuations)}


def _chain_from_payload(payload: Mapping[str, Any]) -> ObserverChain:
    _require(payload, "events", "valuations")
    return ObserverChain(
        tuple(int(e) for e in payload["events"]),
        tuple(int(v) for v in payload["valuations"]),
    )


def _encode_chain(chain: ObserverChain) -> str:
    return _dumps(_chain_payload(chain))


def _decode_chain(text: str) -> ObserverChain:
    return _chain_from_payload(_loads(text))


def _frame_payload(frame: Frame) -> dict[str, Any]:
    return {"P": _chain_payload(frame.P), "Q": _chain_payload(frame.Q)}


def _frame_from_payload(payload: Mapping[str, Any]) -> Frame:
    _require(payload, "P", "Q")
    return Frame(_chain_from_payload(payload["P"]), _chain_from_payload(payload["Q"]))


def _encode_frame(frame: Frame) -> str:
    return _dumps(_frame_payload(frame))


def _decode_frame(text: str) -> Frame:
    return _frame_from_payload(_loads(text))


def _worldline_payload(spec: WorldlineSpec) -> dict[str, Any]:
    return {
        "position0": list(spec.position0),
        "velocity": list(spec.velocity),
        "tick_interval": spec.tick_interval,
        "phase": spec.phase,
        "tick_count": spec.tick_count,
    }


def _encode_embedded_causet(ec: EmbeddedCauset) -> str:
    """
    Encode the causal set together with its coordinates, chains and worldlines.

    The result is also a valid plain causal-set document.
    """
    payload = _causal_set_payload(ec.causet)
    payload["embedding"] = ec.coords.tolist()
    payload["region"] = [[float(v) for v in ec.region[0]], [float(v) for v in ec.region[1]]]
    payload["chains"] = {name: _chain_payload(chain) for name, chain in ec.chains.items()}
    payload["worldlines"] = {
        name: _worldline_payload(spec) for name, spec in ec.worldlines.items()
    }
    payload["named"] = dict(ec.named)
    return _dumps(payload)


def _decode_embedded_causet(text: str) -> EmbeddedCauset:
    payload = _loads(text)
    _require(payload, "event_count", "relations", "embedding", "region")
    cs = build_causal_set(int(payload["event_count"]), payload["relations"])
    coords = _check_embedding(cs, payload["embedding"])
    coords.setflags(write=False)
    low, high = payload["region"]
    worldlines = {
        name: WorldlineSpec(
            position0=tuple(spec["position0"]),
            velocity=tuple(spec["velocity"]),
            tick_interval=spec["tick_interval"],
            phase=spec.get("phase", 0.0),
            tick_count=spec.get("tick_count"),
        )
        for name, spec in payload.get("worldlines", {}).items()
    }
    return EmbeddedCauset(
        causet=cs,
        coords=coords,
        region=(tuple(float(v) for v in low), tuple(float(v) for v in high)),
        chains={
            name: _chain_from_payload(chain)
            for name, chain in payload.get("chains", {}).items()
        },
        worldlines=worldlines,
        named={name: int(e) for name, e in payload.get("named", {}).items()},
    )


def _encode_frame_relation(relation: FrameRelation) -> str:
    return _dumps(relation.as_dict())


def _decode_frame_relation(text: str) -> FrameRelation:
    payload = _loads(text)
    _require(payload, "m", "n", "rho", "beta")
    return FrameRelation(
        m=float(payload["m"]),
        n=float(payload["n"]),
        rho=float(payload["rho"]),
        beta=float(payload["beta"]),
        sigma=float(payload.get("sigma", 1.0)),
        m_variance=float(payload.get("m_variance", 0.0)),
        n_variance=float(payload.get("n_variance", 0.0)),
    )


def _encode_orthogonal_config(cfg: OrthogonalConfig) -> str:
    return _dumps(
        {
            "D": _frame_payload(cfg.D_frame),
            "X": _frame_payload(cfg.X_frame),
            "Y": _frame_payload(cfg.Y_frame),
            "e1": cfg.e1,
            "e2": cfg.e2,
            "e3": cfg.e3,
        }
    )


def _decode_orthogonal_config(text: str) -> OrthogonalConfig:
    payload = _loads(text)
    _require(payload, "D", "X", "Y", "e1", "e2", "e3")
    return OrthogonalConfig(
        D_frame=_frame_from_payload(payload["D"]),
        X_frame=_frame_from_payload(payload["X"]),
        Y_frame=_frame_from_payload(payload["Y"]),
        e1=int(payload["e1"]),
        e2=int(payload["e2"]),
        e3=int(payload["e3"]),
    )


def _encode_pythagoras_report(report: PythagorasReport) -> str:
    return _dumps(
        {
            "dd2": report.dd2,
            "dx2": report.dx2,
            "dy2": report.dy2,
            "residual": report.residual,
            "ok": report.ok,
        }
    )


def _decode_pythagoras_report(text: str) -> PythagorasReport:
    payload = _loads(text)
    _require(payload, "dd2", "dx2", "dy2", "residual")
    return PythagorasReport(
        dd2=float(payload["dd2"]),
        dx2=float(payload["dx2"]),
        dy2=float(payload["dy2"]),
        residual=float(payload["residual"]),
        ok=bool(payload.get("ok", True)),
    )
