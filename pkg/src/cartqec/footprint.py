"""Monomial combinatorics on the box ``Delta(r) = {a : 0 <= a_i < p^{r_i}}``.

A monomial ``X^a`` is identified with its exponent tuple ``a``.  Its
footprint value is ``sigma(a) = prod(p^{r_i} - a_i)`` and its dual weight is
``mu(a) = prod(a_i + 1)``.  The improved code of designed distance ``delta``
keeps the monomials with ``sigma >= delta``; its dual keeps those with
``mu < delta``.

Nothing here touches field arithmetic, so there is no size cap: the
counting routines work for lengths far beyond what can be materialised.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from .errors import BadDelta, BadSpec, BoundUndefined, IncompatibleAmbient, OutOfRange, RenderCap
from .field import is_prime, lcm_all

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class ProductSpec:
    """Cartesian product ``F_{p^{r_1}} x ... x F_{p^{r_m}}`` inside ``F_{p^r}``.

    ``r`` is the ambient extension degree; it defaults to ``lcm(r_i)``.
    """

    p: int
    r_vec: tuple[int, ...]
    r: int = 0

    def __post_init__(self):
        r_vec = tuple(int(x) for x in self.r_vec)
        object.__setattr__(self, "r_vec", r_vec)
        if not is_prime(self.p):
            raise BadSpec(f"p={self.p} is not prime")
        if not r_vec or any(x < 1 for x in r_vec):
            raise BadSpec(f"r_vec must be a non-empty vector of positive integers, got {r_vec}")
        if any(a < b for a, b in zip(r_vec, r_vec[1:])):
            raise BadSpec(f"r_vec must be non-increasing, got {r_vec}")
        if self.r == 0:
            object.__setattr__(self, "r", lcm_all(r_vec))
        if any(self.r % x for x in r_vec):
            raise IncompatibleAmbient(f"every r_i must divide r={self.r}; got {r_vec}")

    @property
    def m(self) -> int:
        return len(self.r_vec)

    @functools.cached_property
    def sizes(self) -> tuple[int, ...]:
        return tuple(self.p**x for x in self.r_vec)

    @functools.cached_property
    def n(self) -> int:
        return math.prod(self.sizes)

    @property
    def q(self) -> int:
        return self.p**self.r

    def with_ambient(self, r: int) -> "ProductSpec":
        return ProductSpec(self.p, self.r_vec, r)


def _check_exponent(spec: ProductSpec, a: Sequence[int]) -> Exponent:
    a = tuple(map(int, a))
    sizes = spec.sizes
    if len(a) != len(sizes) or not all(0 <= x < s for x, s in zip(a, sizes)):
        raise OutOfRange(f"{a} is not in Delta{spec.r_vec} for p={spec.p}")
    return a


def _check_delta(spec: ProductSpec, delta: int) -> None:
    if not 1 <= delta <= spec.n + 1:
        raise BadDelta(f"delta={delta} outside [1, {spec.n + 1}]")


def sigma(spec: ProductSpec, a: Sequence[int]) -> int:
    a = _check_exponent(spec, a)
    return math.prod(s - x for s, x in zip(spec.sizes, a))


def mu(spec: ProductSpec, a: Sequence[int]) -> int:
    a = _check_exponent(spec, a)
    return math.prod(x + 1 for x in a)


def complement(spec: ProductSpec, a: Sequence[int]) -> Exponent:
    """``b_i = p^{r_i} - 1 - a_i``; satisfies ``mu(b) == sigma(a)``."""
    a = _check_exponent(spec, a)
    return tuple(s - 1 - x for s, x in zip(spec.sizes, a))


def exponents(spec: ProductSpec) -> Iterator[Exponent]:
    """All of ``Delta(r)`` in canonical (lexicographic) order."""
    return itertools.product(*(range(s) for s in spec.sizes))


@dataclass(frozen=True)
class DefiningSet:
    spec: ProductSpec
    members: tuple[Exponent, ...]
    _index: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        members = tuple(sorted(_check_exponent(self.spec, a) for a in self.members))
        index = frozenset(members)
        if len(index) != len(members):
            raise ValueError("defining set has duplicate monomials")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, a) -> bool:
        return tuple(a) in self._index

    def is_decreasing(self) -> bool:
        """Closed under lowering any single coordinate by one."""
        for a in self.members:
            for i, x in enumerate(a):
                if x and a[:i] + (x - 1,) + a[i + 1 :] not in self._index:
                    return False
        return True


def _sigma_at_least(sizes: tuple[int, ...], delta: int) -> Iterator[Exponent]:
    # remaining[i] = max achievable product of factors i..m-1
    remaining = [math.prod(sizes[i:]) for i in range(len(sizes) + 1)]

    def rec(i: int, prefix: tuple, prod: int):
        if i == len(sizes):
            yield prefix
            return
        s = sizes[i]
        for x in range(s):
            if prod * (s - x) * remaining[i + 1] < delta:
                break
            yield from rec(i + 1, prefix + (x,), prod * (s - x))

    return rec(0, (), 1)


def _mu_below(sizes: tuple[int, ...], bound: int) -> Iterator[Exponent]:
    def rec(i: int, prefix: tuple, prod: int):
        if i == len(sizes):
            yield prefix
            return
        for x in range(sizes[i]):
            if prod * (x + 1) >= bound:
                break
            yield from rec(i + 1, prefix + (x,), prod * (x + 1))

    return rec(0, (), 1)


def improved_defining_set(spec: ProductSpec, delta: int) -> DefiningSet:
    """``L(delta)``: monomials whose footprint value is at least ``delta``."""
    _check_delta(spec, delta)
    return DefiningSet(spec, tuple(_sigma_at_least(spec.sizes, delta)))


def dual_defining_set(spec: ProductSpec, delta: int) -> DefiningSet:
    """``L_perp(delta)``: monomials with ``mu < delta``."""
    _check_delta(spec, delta)
    return DefiningSet(spec, tuple(_mu_below(spec.sizes, delta)))


def is_dual_containing(spec: ProductSpec, delta: int) -> bool:
    """True iff ``L_perp(delta)`` is contained in ``L(delta)``.

    Only the (usually few) monomials with ``mu < delta`` are visited, so this
    is cheap even when ``n`` is huge.
    """
    _check_delta(spec, delta)
    sizes = spec.sizes
    return all(
        math.prod(s - x for s, x in zip(sizes, a)) >= delta for a in _mu_below(sizes, delta)
    )


def monomials_orthogonal(spec: ProductSpec, a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether ``ev(X^a)`` and ``ev(X^b)`` are orthogonal over the point set.

    Non-orthogonal exactly when every coordinate has ``a_i + b_i > 0`` and
    ``a_i + b_i`` divisible by ``p^{r_i} - 1``.
    """
    a = _check_exponent(spec, a)
    b = _check_exponent(spec, b)
    return not all(x + y > 0 and (x + y) % (s - 1) == 0 for x, y, s in zip(a, b, spec.sizes))


class _Counter:
    __slots__ = ("leaves",)

    def __init__(self):
        self.leaves = 0


def _tau(sizes: tuple[int, ...], s: int, counter: _Counter | None) -> int:
    if len(sizes) == 1:
        if counter is not None:
            counter.leaves += 1
        return 1 if s <= sizes[0] else 0
    c = 0
    for d in range(1, min(sizes[0], s) + 1):
        if s % d == 0:
            c += _tau(sizes[1:], s // d, counter)
    return c


def tau(spec: ProductSpec, s: int) -> int:
    """Number of tuples ``1 <= d_i <= p^{r_i}`` with ``prod d_i == s``.

    Equivalently the number of monomials with ``sigma == s``.  Recurses on
    the first coordinate over its divisors of ``s``.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    if s > spec.n:
        return 0
    return _tau(spec.sizes, s, None)


def exact_increase(spec: ProductSpec, delta: int) -> int:
    """Dimension gained going from ``L(delta)`` to ``L(delta - 1)``, i.e. ``tau(delta - 1)``."""
    _check_delta(spec, delta)
    return tau(spec, delta - 1) if delta >= 2 else 0


def tau_leaf_calls(spec: ProductSpec, s: int) -> int:
    """Base-case evaluations performed by :func:`tau` for this ``s``."""
    counter = _Counter()
    if 1 <= s <= spec.n:
        _tau(spec.sizes, s, counter)
    return counter.leaves


def edge_count(spec: ProductSpec, s: int) -> int:
    """Largest ``K`` with ``s <= p^{r_K}`` (0 when ``s > p^{r_1}``)."""
    return sum(1 for size in spec.sizes if s <= size)


class TauBound(NamedTuple):
    K: int
    bound: int
    exact: bool


def tau_lower_bound(spec: ProductSpec, s: int) -> TauBound:
    """Closed-form lower bound on ``tau(s)`` from the edges of the box.

    Prime ``s`` gives exactly ``K``; a square gives ``K + C(K, 2)``; any
    other composite gives ``K**2``.
    """
    if s < 2 or s > spec.sizes[0]:
        raise BoundUndefined(f"s={s} must lie in [2, {spec.sizes[0]}]")
    K = edge_count(spec, s)
    if is_prime(s):
        return TauBound(K, K, True)
    if math.isqrt(s) ** 2 == s:
        return TauBound(K, K + math.comb(K, 2), False)
    return TauBound(K, K * K, False)


def enlarge_guarantee(spec: ProductSpec, delta: int) -> int | None:
    """Guaranteed enlargement increase ``K``, or None outside ``2 < delta <= p^{r_2} + 1``."""
    if spec.m < 2 or not 2 < delta <= spec.sizes[1] + 1:
        return None
    return edge_count(spec, delta - 1)


def defining_set_dimension(spec: ProductSpec, delta: int) -> int:
    """``|L(delta)|`` by counting, without listing the monomials."""
    _check_delta(spec, delta)
    return spec.n - sum(tau(spec, s) for s in range(1, delta))


def smallest_sigma_at_least(spec: ProductSpec, delta: int) -> int | None:
    """Smallest attained footprint value ``>= delta``; None if there is none."""
    for s in range(max(delta, 1), spec.n + 1):
        if tau(spec, s):
            return s
    return None


def designed_distance(spec: ProductSpec, L: DefiningSet) -> int:
    if not len(L):
        raise ValueError("empty defining set has no distance")
    return min(sigma(spec, a) for a in L)


def sigma_grid(spec: ProductSpec) -> np.ndarray:
    """Array of shape ``sizes`` with ``grid[a] == sigma(a)``."""
    if spec.m > 3:
        raise RenderCap(f"grid rendering supports m <= 3, got m={spec.m}")
    if spec.n > 1 << 16:
        raise RenderCap(f"n={spec.n} too large to render")
    grid = np.ones((), dtype=np.int64)
    for s in spec.sizes:
        grid = np.multiply.outer(grid, s - np.arange(s))
    return grid
