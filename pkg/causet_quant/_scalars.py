# Copyright (c) 2023-2024 Datalayer, Inc.
#
# BSD 3-Clause License

"""
Scalar measures of a pair and the audit that selects the consistent ones.

A candidate ``f(a, b)`` must be additive under the symmetric/antisymmetric
decomposition,

    f(a, b) = f(s, s) + f(d, -d),  s = (a + b) / 2,  d = (a - b) / 2,

and must admit a ``g`` with ``g(f(a, b)) = g(a) + g(b)``. Only the identity
and ``log|.|`` are tried for ``g``.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from causet_quant._constants import _CANDIDATE_REL_TOL
from causet_quant._exceptions import DegenerateSamplesError
from causet_quant._utils import _relative_error

logger = logging.getLogger(__name__)

_G_FAMILY: dict[str, Callable[[float], float]] = {
    "identity": lambda v: v,
    "log-abs": lambda v: math.log(abs(v)),
}


@dataclass(frozen=True)
class ScalarCandidate:
    """A candidate map from a pair ``(a, b)`` to a real scalar."""

    tag: str
    evaluator: Callable[[float, float], float] = field(compare=False, repr=False)
    n: Optional[int] = None

    def __call__(self, a: float, b: float) -> float:
        return self.evaluator(a, b)


def _power_sum(n: int) -> Callable[[float, float], float]:
    return lambda a, b: (a + b) ** n


def scalar_candidates(odd_powers: Sequence[int] = (1, 3, 5)) -> list[ScalarCandidate]:
    """
    The solutions of the decomposition equation, in audit order.

    Parameters
    ----------
    odd_powers : Sequence[int]
        Exponents tried for the ``(a + b) ** n`` family.

    Returns
    -------
    list[ScalarCandidate]
        ``F1 = a``, ``F2 = b``, ``F3 = ab``, ``F4(n) = (a + b)^n`` for each
        exponent and ``F5 = a^2 + b^2``.
    """
    candidates = [
        ScalarCandidate("F1", lambda a, b: a),
        ScalarCandidate("F2", lambda a, b: b),
        ScalarCandidate("F3", lambda a, b: a * b),
    ]
    candidates.extend(ScalarCandidate(f"F4(n={n})", _power_sum(n), n=n) for n in odd_powers)
    candidates.append(ScalarCandidate("F5", lambda a, b: a * a + b * b))
    return candidates


@dataclass(frozen=True)
class CandidateResult:
    """Audit outcome for one candidate."""

    tag: str
    passes_decomposition: bool
    passes_associativity: bool
    g: Optional[str] = None
    counterexample: Optional[tuple[float, float, float]] = None

    @property
    def survives(self) -> bool:
        return self.passes_decomposition and self.passes_associativity


@dataclass(frozen=True)
class CandidateAudit:
    """Audit table over every candidate."""

    results: tuple[CandidateResult, ...]
    sample_count: int

    def survivors(self) -> list[str]:
        return [r.tag for r in self.results if r.survives]

    def __getitem__(self, tag: str) -> CandidateResult:
        for result in self.results:
            if result.tag == tag:
                return result
        raise KeyError(tag)


def _filter_samples(samples: Sequence[Sequence[float]]) -> np.ndarray:
    pairs = np.asarray(samples, dtype=float).reshape(-1, 2)
    a, b = pairs[:, 0], pairs[:, 1]
    keep = (a != 0) & (b != 0) & (a + b != 0) & (a - b != 0) & np.isfinite(a) & np.isfinite(b)
    return pairs[keep]


def _additive(f: ScalarCandidate, a: float, b: float, rel_tol: float) -> bool:
    s = (a + b) / 2
    d = (a - b) / 2
    whole = f(a, b)
    sym = f(s, s)
    anti = f(d, -d)
    scale = max(abs(whole), abs(sym), abs(anti))
    return _relative_error(whole, sym + anti, scale=scale) <= rel_tol


def _g_consistent(
    f: ScalarCandidate, g: Callable[[float], float], a: float, b: float, rel_tol: float
) -> bool:
    value = f(a, b)
    if value == 0:
        return False
    lhs = g(value)
    ga, gb = g(a), g(b)
    scale = max(abs(lhs), abs(ga) + abs(gb))
    return _relative_error(lhs, ga + gb, scale=scale) <= rel_tol


def _find_counterexample(
    f: ScalarCandidate, pairs: np.ndarray, rel_tol: float
) -> Optional[tuple[float, float, float]]:
    values = pairs.ravel().tolist()
    for i in range(len(values) - 2):
        a, b, c = values[i], values[i + 1], values[i + 2]
        left = f(f(a, b), c)
        right = f(a, f(b, c))
        if not (math.isfinite(left) and math.isfinite(right)):
            continue
        scale = max(abs(left), abs(right), abs(a) + abs(b) + abs(c))
        if _relative_error(left, right, scale=scale) > rel_tol:
            return a, b, c
    return None


def audit_scalar_candidates(
    samples: Sequence[Sequence[float]],
    tolerance: float = _CANDIDATE_REL_TOL,
    candidates: Optional[Sequence[ScalarCandidate]] = None,
) -> CandidateAudit:
    """
    Audit every scalar candidate against decomposition and associativity.

    Parameters
    ----------
    samples : Sequence[Sequence[float]]
        Real pairs ``(a, b)``. Pairs where ``a``, ``b``, ``a + b`` or
        ``a - b`` is zero are skipped.
    tolerance : float
        Relative tolerance of every numeric comparison.
    candidates : Sequence[ScalarCandidate], optional
        Defaults to :func:`scalar_candidates`.

    Returns
    -------
    CandidateAudit
        One row per candidate. A candidate passes associativity when some
        ``g`` of the tested family satisfies ``g(f(a, b)) = g(a) + g(b)`` on
        every sample; a triple ``(a, b, c)`` with
        ``f(f(a, b), c) != f(a, f(b, c))`` is reported when one is found.

    Raises
    ------
    DegenerateSamplesError
        If no sample survives filtering.

    Examples
    --------
    >>> audit = audit_scalar_candidates([(1.5, 2.5), (3.0, -0.5), (2.0, 7.0)])
    >>> audit.survivors()
    ['F3', 'F4(n=1)']
    """
    pairs = _filter_samples(samples)
    if len(pairs) == 0:
        raise DegenerateSamplesError("No sample has non-zero a, b, a + b and a - b")
    if candidates is None:
        candidates = scalar_candidates()

    results = []
    for f in candidates:
        decomposes = all(_additive(f, a, b, tolerance) for a, b in pairs.tolist())
        g_name = None
        for name, g in _G_FAMILY.items():
            if all(_g_consistent(f, g, a, b, tolerance) for a, b in pairs.tolist()):
                g_name = name
                break
        counterexample = _find_counterexample(f, pairs, tolerance)
        results.append(
            CandidateResult(
                tag=f.tag,
                passes_decomposition=decomposes,
                passes_associativity=g_name is not None,
                g=g_name,
                counterexample=counterexample,
            )
        )
        logger.debug(
            "Candidate %s: decomposition=%s g=%s counterexample=%s",
            f.tag,
            decomposes,
            g_name,
            counterexample,
        )
    return CandidateAudit(results=tuple(results), sample_count=len(pairs))
