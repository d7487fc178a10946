"""Quantum code parameters from the improved Cartesian codes.

CSS codes come straight from a dual-containing ``C(L(delta))``.  Steane
enlargement pairs it with ``C(L(delta - 1))``, which adds exactly
``tau(delta - 1)`` dimensions.  Parameters are then placed against the
stabilizer Gilbert-Varshamov bound and the quantum Singleton bound.  All
bound arithmetic uses Python integers, so nothing overflows at ``n = 1024``
and beyond.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    BadRange,
    ConsistencyError,
    EmptyCode,
    EnlargementTooSmall,
    KTooSmall,
    NotDualContaining,
    ParityViolation,
)
from .footprint import (
    ProductSpec,
    _check_delta,
    defining_set_dimension,
    enlarge_guarantee,
    is_dual_containing,
    smallest_sigma_at_least,
    tau,
)


@dataclass(frozen=True)
class ClassicalParams:
    n: int
    k: int
    d: int
    d_exact: bool = True

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]"


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    q: int
    construction: str = "CSS"
    d_is_lower_bound: bool = False

    def __str__(self) -> str:
        d = f">={self.d}" if self.d_is_lower_bound else str(self.d)
        return f"[[{self.n},{self.k},{d}]]"


class Verdict(enum.Enum):
    EXCEEDS = "exceeds"
    MEETS = "meets"
    NEITHER = "neither"


@dataclass(frozen=True)
class GvClass:
    verdict: Verdict
    applied_k: int

    @property
    def marker(self) -> str:
        return {Verdict.EXCEEDS: "!", Verdict.MEETS: "*", Verdict.NEITHER: ""}[self.verdict]


class SteaneResult(NamedTuple):
    params: QuantumParams
    increase: int
    prop4_applies: bool


def classical_params(spec: ProductSpec, delta: int) -> ClassicalParams:
    """``[n, k, d]`` of ``C(L(delta))``; the distance is exact."""
    _check_delta(spec, delta)
    if delta == spec.n + 1:
        raise EmptyCode(f"L({delta}) is empty for n={spec.n}")
    k = defining_set_dimension(spec, delta)
    return ClassicalParams(spec.n, k, smallest_sigma_at_least(spec, delta), True)


def css_params(spec: ProductSpec, delta: int) -> QuantumParams:
    c = classical_params(spec, delta)
    if not is_dual_containing(spec, delta):
        raise NotDualContaining(
            f"C(L({delta})) does not contain its Euclidean dual (p={spec.p}, r={spec.r_vec})"
        )
    if 2 * c.k < c.n:
        raise NotDualContaining(f"k={c.k} < n-k={c.n - c.k}")
    out = QuantumParams(c.n, 2 * c.k - c.n, c.d, spec.q, "CSS", False)
    _assert_singleton(out)
    return out


def enlarged_distance(q: int, d_prime: int) -> int:
    """``ceil((1 + 1/q) * d_prime)`` in exact integer arithmetic."""
    return -(-(q + 1) * d_prime // q)


def steane_params(spec: ProductSpec, delta: int) -> SteaneResult:
    """Enlarge ``C(L(delta))`` by ``C(L(delta - 1))``.

    The reported distance is a lower bound.  ``prop4_applies`` says whether
    ``delta`` is in the edge range where an increase is guaranteed without
    counting.
    """
    css = css_params(spec, delta)
    if delta < 3:
        raise EnlargementTooSmall(f"delta={delta}: enlargement needs delta >= 3")
    increase = tau(spec, delta - 1)
    if increase < 2:
        raise EnlargementTooSmall(f"tau({delta - 1})={increase} < 2")
    # C(L(delta-1)) has distance exactly delta-1 because tau(delta-1) > 0
    d = min(css.d, enlarged_distance(spec.q, delta - 1))
    out = QuantumParams(css.n, css.k + increase, d, spec.q, "Steane", True)
    _assert_singleton(out)
    return SteaneResult(out, increase, enlarge_guarantee(spec, delta) is not None)


def gv_satisfied(n: int, k: int, d: int, q: int) -> bool:
    """Whether ``sum_{i<d} (q^2-1)^i C(n,i) < q^(n-k+2) - 1`` holds."""
    if not (n > k >= 2 and d >= 2):
        raise BadRange(f"need n > k >= 2 and d >= 2, got n={n}, k={k}, d={d}")
    if (n - k) % 2:
        raise ParityViolation(f"n={n} and k={k} differ in parity")
    lhs = sum((q * q - 1) ** i * math.comb(n, i) for i in range(1, d))
    return lhs < q ** (n - k + 2) - 1


def gv_classify(params: QuantumParams) -> GvClass:
    n, k, d, q = params.n, params.k, params.d, params.q
    applied_k = k if (n - k) % 2 == 0 else k - 1
    if applied_k < 2:
        raise KTooSmall(f"k={k} too small for the Gilbert-Varshamov comparison")
    if not gv_satisfied(n, applied_k, d, q):
        return GvClass(Verdict.EXCEEDS, applied_k)
    if not gv_satisfied(n, applied_k, d + 1, q):
        return GvClass(Verdict.MEETS, applied_k)
    return GvClass(Verdict.NEITHER, applied_k)


def singleton_slack(params: QuantumParams) -> int:
    """``(n - k + 2) - 2d``; zero for quantum MDS codes."""
    slack = params.n - params.k + 2 - 2 * params.d
    if slack < 0:
        warnings.warn(f"{params} violates the quantum Singleton bound", RuntimeWarning, stacklevel=2)
    return slack


def _assert_singleton(params: QuantumParams) -> None:
    if params.n - params.k + 2 - 2 * params.d < 0:
        raise ConsistencyError(f"constructed {params} violates the quantum Singleton bound")


def distance_pinned(params: QuantumParams) -> bool:
    """True when the Singleton bound forbids any distance above ``params.d``."""
    return params.n - params.k + 2 - 2 * (params.d + 1) < 0
