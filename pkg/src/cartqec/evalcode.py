"""Explicit generator matrices for ``C(L)`` and brute-force ground truth.

Everything here materialises dense matrices over ``F_q``, so lengths are
capped (``n <= 4096`` unless ``CARTQEC_MATRIX_CAP`` says otherwise).  These
routines exist to check the counting formulas in :mod:`cartqec.footprint`
against actual linear algebra on small instances.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Sequence, TextIO

import numpy as np

from .errors import IncompatibleAmbient, TooLarge
from .field import Field, field_new, subfield_elements
from .footprint import (
    DefiningSet,
    Exponent,
    ProductSpec,
    _check_exponent,
    dual_defining_set,
    improved_defining_set,
)

DEFAULT_MATRIX_CAP = 1 << 12
BRUTE_FORCE_CAP = 1 << 22


def matrix_cap() -> int:
    return int(os.environ.get("CARTQEC_MATRIX_CAP", DEFAULT_MATRIX_CAP))


@dataclass(frozen=True)
class PointSet:
    spec: ProductSpec
    field: Field
    points: np.ndarray  # shape (n, m), last coordinate varies fastest

    @property
    def n(self) -> int:
        return self.points.shape[0]


@dataclass(frozen=True)
class EvalCode:
    points: PointSet
    defining_set: DefiningSet
    gen: np.ndarray

    @property
    def field(self) -> Field:
        return self.points.field

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]


def _field_for(spec: ProductSpec, ambient_r: int | None = None) -> Field:
    r = spec.r if ambient_r is None else ambient_r
    if any(r % x for x in spec.r_vec):
        raise IncompatibleAmbient(f"r={r} is not a multiple of every r_i in {spec.r_vec}")
    return field_new(spec.p, r)


def point_set(spec: ProductSpec, field: Field | None = None) -> PointSet:
    field = field or _field_for(spec)
    if spec.n > matrix_cap():
        raise TooLarge(f"n={spec.n} exceeds the matrix cap {matrix_cap()}")
    axes = [subfield_elements(field, ri) for ri in spec.r_vec]
    pts = np.array(list(itertools.product(*axes)), dtype=np.int64).reshape(spec.n, spec.m)
    return PointSet(spec, field, pts)


def evaluate_monomials(ps: PointSet, exps: Sequence[Exponent]) -> np.ndarray:
    """Matrix whose row ``j`` is ``ev(X^exps[j])``."""
    f, spec = ps.field, ps.spec
    out = np.ones((len(exps), ps.n), dtype=np.int64)
    if not len(exps):
        return out
    E = np.array(exps, dtype=np.int64).reshape(len(exps), spec.m)
    for i, size in enumerate(spec.sizes):
        table = f.power(ps.points[None, :, i], np.arange(size)[:, None])  # (size, n)
        out = f.mul(out, table[E[:, i]])
    return out


def build_code(spec: ProductSpec, L: DefiningSet, ambient_r: int | None = None) -> EvalCode:
    ps = point_set(spec, _field_for(spec, ambient_r))
    return EvalCode(ps, L, evaluate_monomials(ps, L.members))


def improved_code(spec: ProductSpec, delta: int) -> EvalCode:
    return build_code(spec, improved_defining_set(spec, delta))


def _span(field: Field, rows: np.ndarray) -> np.ndarray:
    """All ``q^len(rows)`` linear combinations of ``rows``, built by repeated scaling."""
    words = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for g in rows:
        scaled = field.mul(np.arange(field.q, dtype=np.int64)[:, None], g[None, :])
        words = field.add(words[None, :, :], scaled[:, None, :]).reshape(-1, rows.shape[1])
    return words


def brute_min_distance(code: EvalCode) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    Only messages whose first nonzero symbol is 1 are enumerated; scalar
    multiples share a weight.  The combinations of the trailing rows are
    tabulated once and shifted by each combination of the leading ones.
    """
    f, G = code.field, code.gen
    k, n = G.shape
    if k == 0:
        raise ValueError("the zero code has no minimum distance")
    if f.q**k > BRUTE_FORCE_CAP:
        raise TooLarge(f"q^k = {f.q}^{k} exceeds the enumeration cap {BRUTE_FORCE_CAP}")
    best = n
    low_rows = 0
    while low_rows < k - 1 and f.q ** (low_rows + 1) <= 1 << 14:
        low_rows += 1
    low = _span(f, G[k - low_rows :])
    for lead in range(k):
        mid = G[lead + 1 : max(lead + 1, k - low_rows)]
        tail = low if lead < k - low_rows else _span(f, G[lead + 1 :])
        for offset in f.add(_span(f, mid), G[lead][None, :]):
            words = f.add(tail, offset[None, :])
            best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


def _root_choices(field: Field, spec: ProductSpec, a: Exponent) -> list[np.ndarray]:
    return [subfield_elements(field, ri)[:aj] for ri, aj in zip(spec.r_vec, a)]


def min_weight_witness(spec: ProductSpec, field: Field | None, a: Sequence[int]) -> np.ndarray:
    """Evaluation of ``prod_j prod_{i < a_j} (X_j - v_i^(j))`` over the points.

    The roots ``v_i^(j)`` are the first ``a_j`` elements of the coordinate's
    subfield in canonical order.  The word has weight ``sigma(a)``.
    """
    a = _check_exponent(spec, a)
    ps = point_set(spec, field)
    f = ps.field
    word = np.ones(ps.n, dtype=np.int64)
    for j, roots in enumerate(_root_choices(f, spec, a)):
        for v in roots:
            word = f.mul(word, f.sub(ps.points[:, j], v))
    return word


def witness_polynomial(spec: ProductSpec, field: Field | None, a: Sequence[int]) -> dict[Exponent, int]:
    """Monomial expansion of the witness polynomial, ``{exponent: coefficient}``."""
    a = _check_exponent(spec, a)
    f = field or _field_for(spec)
    factors = []
    for roots in _root_choices(f, spec, a):
        poly = np.array([1], dtype=np.int64)  # coefficients, constant first
        for v in roots:
            shifted = np.concatenate([[0], poly])
            scaled = np.concatenate([f.mul(poly, f.neg(v)), [0]])
            poly = f.add(shifted, scaled)
        factors.append(poly)
    out = {}
    for combo in itertools.product(*(range(len(c)) for c in factors)):
        coeff = 1
        for c, e in zip(factors, combo):
            coeff = int(f.mul(coeff, c[e]))
        if coeff:
            out[combo] = coeff
    return out


def rowspace_contains(field: Field, G: np.ndarray, H: np.ndarray) -> bool:
    """Whether every row of ``H`` lies in the row space of ``G``."""
    if H.shape[0] == 0:
        return True
    return field.rank(np.vstack([G, H])) == field.rank(G)


def verify_dual_identity(spec: ProductSpec, field: Field | None, delta: int) -> bool:
    """Check ``C(L(delta))^perp == C(L_perp(delta))`` on explicit matrices."""
    ps = point_set(spec, field)
    f = ps.field
    G = evaluate_monomials(ps, improved_defining_set(spec, delta).members)
    H = evaluate_monomials(ps, dual_defining_set(spec, delta).members)
    if G.shape[0] and H.shape[0] and np.any(f.matmul(G, H.T)):
        return False
    return f.rank(G) + f.rank(H) == spec.n


def dump_matrix(code: EvalCode, fh: TextIO) -> None:
    """Write ``q n k`` then one generator row per line as integer codes."""
    fh.write(f"{code.field.q} {code.n} {code.k}\n")
    for row in code.gen:
        fh.write(" ".join(str(int(x)) for x in row) + "\n")


def load_matrix(fh: TextIO) -> tuple[int, np.ndarray]:
    q, n, k = (int(x) for x in fh.readline().split())
    rows = [[int(x) for x in line.split()] for line in fh if line.strip()]
    M = np.array(rows, dtype=np.int64).reshape(k, n)
    return q, M
