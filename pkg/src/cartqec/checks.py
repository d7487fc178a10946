"""Cross-checks of the counting formulas against explicit matrices."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import TooLarge
from .evalcode import (
    BRUTE_FORCE_CAP,
    build_code,
    brute_min_distance,
    evaluate_monomials,
    min_weight_witness,
    rowspace_contains,
)
from .footprint import (
    ProductSpec,
    defining_set_dimension,
    dual_defining_set,
    exponents,
    improved_defining_set,
    is_dual_containing,
    sigma,
    tau,
)

GRAM_CAP = 1024


class Check(NamedTuple):
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def orthogonality_mismatches(spec: ProductSpec, gram: np.ndarray, exps: np.ndarray) -> int:
    """Pairs where the divisibility criterion disagrees with the Gram matrix."""
    sizes = np.array(spec.sizes, dtype=np.int64)
    bad = 0
    for start in range(0, len(exps), 256):
        s = exps[start : start + 256, None, :] + exps[None, :, :]
        nonorth = np.all((s > 0) & (s % (sizes - 1) == 0), axis=2)
        bad += int(np.count_nonzero(nonorth != (gram[start : start + 256] != 0)))
    return bad


def combinatorial_checks(spec: ProductSpec, delta: int) -> list[Check]:
    n = spec.n
    total = sum(tau(spec, s) for s in range(1, n + 1))
    L = improved_defining_set(spec, delta)
    Lp = dual_defining_set(spec, delta)
    return [
        Check("tau_sum", _status(total == n), f"sum_tau={total} n={n}"),
        Check(
            "dimension_count",
            _status(len(L) == defining_set_dimension(spec, delta)),
            f"size={len(L)} counted={defining_set_dimension(spec, delta)}",
        ),
        Check("dual_count", _status(len(L) + len(Lp) == n), f"size={len(L)} dual_size={len(Lp)} n={n}"),
        Check("decreasing", _status(L.is_decreasing()), f"size={len(L)}"),
    ]


def matrix_checks(spec: ProductSpec, delta: int) -> list[Check]:
    L = improved_defining_set(spec, delta)
    Lp = dual_defining_set(spec, delta)
    code = build_code(spec, L)
    f, G = code.field, code.gen
    ps = code.points
    H = evaluate_monomials(ps, Lp.members)
    out = []

    rank_g = f.rank(G)
    out.append(Check("rank", _status(rank_g == len(L)), f"rank={rank_g} size={len(L)}"))

    rank_h = f.rank(H)
    orth = not (G.size and H.size and np.any(f.matmul(G, H.T)))
    out.append(
        Check(
            "dual_identity",
            _status(orth and rank_g + rank_h == spec.n),
            f"GH^T=0:{orth} rank_G={rank_g} rank_H={rank_h} n={spec.n}",
        )
    )

    if spec.n <= GRAM_CAP:
        all_exps = np.array(list(exponents(spec)), dtype=np.int64)
        E = evaluate_monomials(ps, [tuple(a) for a in all_exps])
        bad = orthogonality_mismatches(spec, f.matmul(E, E.T), all_exps)
        out.append(Check("orthogonality", _status(bad == 0), f"pairs={spec.n ** 2} mismatches={bad}"))
    else:
        out.append(Check("orthogonality", "SKIP", f"n={spec.n} > {GRAM_CAP}"))

    combin = is_dual_containing(spec, delta)
    matrix = rowspace_contains(f, G, H)
    out.append(
        Check("dual_containing", _status(combin == matrix), f"combinatorial={combin} rowspace={matrix}")
    )

    if not len(L):
        return out
    designed = min(sigma(spec, a) for a in L)
    try:
        brute = brute_min_distance(code)
        out.append(
            Check("distance", _status(brute == designed), f"dist_brute={brute} dist_designed={designed}")
        )
    except TooLarge:
        out.append(Check("distance", "SKIP", f"q^k={f.q}^{len(L)} > {BRUTE_FORCE_CAP}"))

    minimal = [a for a in L if sigma(spec, a) == designed]
    words = np.array([min_weight_witness(spec, f, a) for a in minimal])
    weights_ok = all(np.count_nonzero(w) == designed for w in words)
    inside = rowspace_contains(f, G, words)
    out.append(
        Check(
            "witness",
            _status(weights_ok and inside),
            f"witnesses={len(minimal)} weight={designed} in_code={inside}",
        )
    )
    return out


def run_checks(spec: ProductSpec, delta: int, level: str = "matrix") -> list[Check]:
    checks = combinatorial_checks(spec, delta)
    if level == "matrix":
        checks += matrix_checks(spec, delta)
    return checks

