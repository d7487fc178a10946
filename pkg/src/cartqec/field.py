"""Arithmetic in GF(p^r) and dense linear algebra over it.

Elements are plain integers ``0 <= a < q``.  The integer ``a`` encodes the
residue ``c_0 + c_1 X + ... + c_{r-1} X^{r-1}`` modulo the field's modulus
through its base-``p`` digits, ``a = c_0 + c_1 p + ... + c_{r-1} p^{r-1}``.
Integer order on these codes is the canonical element order, so sorting
elements is just sorting integers.

All vectorised routines accept and return ``numpy`` integer arrays.
Multiplication goes through exp/log tables built from the smallest
primitive element; addition is digit-wise mod ``p`` (XOR when ``p = 2``).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import CompositeP, LengthMismatch, NotADivisor, TooLarge

FIELD_CAP = 1 << 20
ADD_TABLE_CAP = 1024
# above this degree the r^2 plane products lose to rank-one table updates
MATMUL_PLANE_MAX_R = 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, constant term first ---------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_powmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(list(a), f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: ``f`` has no factor of degree ``d <= deg f / 2``.

    Uses ``gcd(X^(p^d) - X, f) = 1`` for every such ``d``.
    """
    f = _trim([c % p for c in f])
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    xpow = [0, 1]
    for _ in range(1, deg // 2 + 1):
        xpow = _poly_powmod(xpow, p, f, p)
        g = list(xpow) + [0] * max(0, 2 - len(xpow))
        g[1] = (g[1] - 1) % p
        if len(_poly_gcd(f, _trim(g), p)) > 1:
            return False
    return True


def canonical_modulus(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``r``.

    Candidates are the tuples ``(c_0, ..., c_{r-1})`` in lexicographic order,
    constant term compared first; the returned tuple includes the leading 1.
    """
    for low in itertools.product(range(p), repeat=r):
        if r > 1 and low[0] == 0:
            continue  # divisible by X
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {r} over F_{p}")


class Field:
    """The finite field ``F_q`` with ``q = p**r`` and a fixed modulus."""

    def __init__(self, p: int, r: int, modulus: Sequence[int]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = tuple(int(c) for c in modulus)
        self._pw = p ** np.arange(r, dtype=np.int64)
        self._add_table = self._neg_table = None
        # x^t mod f as digit vectors, t < 2r - 1; used by matmul
        self._xred = np.array(
            [self._pad(_poly_mod([0] * t + [1], list(self.modulus), p)) for t in range(2 * r - 1)],
            dtype=np.int64,
        )
        self.primitive = self._find_primitive()
        self._build_tables()

    def __repr__(self) -> str:
        return f"Field(p={self.p}, r={self.r}, modulus={self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.r, self.modulus) == (
            other.p,
            other.r,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    # -- scalar helpers ----------------------------------------------------

    def _pad(self, c: list[int]) -> list[int]:
        return list(c) + [0] * (self.r - len(c))

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector ``(c_0, ..., c_{r-1})`` of element ``a``."""
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of F_{self.q}")
        out = []
        for _ in range(self.r):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, c: Sequence[int]) -> int:
        if len(c) != self.r:
            raise LengthMismatch(f"expected {self.r} coefficients, got {len(c)}")
        return sum((int(x) % self.p) * self.p**i for i, x in enumerate(c))

    def _slow_mul(self, a: int, b: int) -> int:
        prod = _poly_mul(list(self.coeffs(a)), list(self.coeffs(b)), self.p)
        return self.from_coeffs(self._pad(_poly_mod(prod, list(self.modulus), self.p)))

    def _slow_pow(self, a: int, e: int) -> int:
        c = _poly_powmod(list(self.coeffs(a)), e, list(self.modulus), self.p)
        return self.from_coeffs(self._pad(c))

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        cofactors = [order // l for l in prime_factors(order)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("multiplicative group is not cyclic?")

    def _build_tables(self) -> None:
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        exp[0] = 1
        filled, step = 1, self.primitive
        while filled < q - 1:
            take = min(filled, q - 1 - filled)
            exp[filled : filled + take] = self._mul_const(exp[:take], step)
            filled += take
            step = self._slow_mul(step, step)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        if len(np.unique(exp)) != q - 1:
            raise AssertionError("exp table is not a permutation")
        self._exp = exp
        self._log = log
        # branch-free product: log(0) points past the doubled exp table into zeros
        self._exp_ext = np.zeros(4 * (q - 1) + 1, dtype=np.int64)
        self._exp_ext[: 2 * (q - 1)] = np.tile(exp, 2)
        self._log_z = log.copy()
        self._log_z[0] = 2 * (q - 1)

    def _mul_const(self, a: np.ndarray, c: int) -> np.ndarray:
        """Multiply an array by a fixed element via its F_p-linear matrix."""
        cols = np.array([self.coeffs(self._slow_mul(c, self.p**j)) for j in range(self.r)])
        return self.from_digits(self.digits(a) @ cols % self.p)

    # -- vectorised arithmetic ---------------------------------------------

    def digits(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._pw) % self.p

    def from_digits(self, d) -> np.ndarray:
        return np.asarray(d, dtype=np.int64) @ self._pw

    def _add_tables(self):
        # odd p, r > 1: digit-wise addition is slow enough to be worth a q x q table
        if self._add_table is None and self.q <= ADD_TABLE_CAP:
            x = np.arange(self.q, dtype=np.int64)
            d = self.digits(x)
            self._add_table = self.from_digits((d[:, None, :] + d[None, :, :]) % self.p).astype(np.int32)
            self._neg_table = self.from_digits((-d) % self.p)
        return self._add_table

    def add(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        table = self._add_tables()
        if table is not None:
            return table[a, b].astype(np.int64)
        return self.from_digits((self.digits(a) + self.digits(b)) % self.p)

    def neg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.r == 1:
            return (-a) % self.p
        if self._add_tables() is not None:
            return self._neg_table[a]
        return self.from_digits((-self.digits(a)) % self.p)

    def sub(self, a, b) -> np.ndarray:
        return self.add(a, self.neg(b))

    def mul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self._exp_ext[self._log_z[a] + self._log_z[b]]

    def inv(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b) -> np.ndarray:
        return self.mul(a, self.inv(b))

    def power(self, a, e) -> np.ndarray:
        """Elementwise ``a**e`` for integer ``e >= 0`` with ``0**0 = 1``."""
        a = np.asarray(a, dtype=np.int64)
        e = np.asarray(e, dtype=np.int64)
        if np.any(e < 0):
            raise ValueError("negative exponent")
        out = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
        return np.where(a == 0, np.where(e == 0, 1, 0), out)

    def sum(self, a, axis=None) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis) if a.size else np.zeros((), np.int64)
        if self.r == 1:
            return a.sum(axis=axis) % self.p
        d = self.digits(a)
        if axis is None:
            return self.from_digits(d.reshape(-1, self.r).sum(axis=0) % self.p)
        axis = axis % a.ndim
        return self.from_digits(d.sum(axis=axis) % self.p)

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over F_q.

        Splits both operands into base-p digit planes, multiplies the planes
        as ordinary float matrices (exact at these sizes), and folds the
        resulting polynomial coefficients back through ``X^t mod f``.
        """
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.ndim != 2 or B.ndim != 2 or A.shape[1] != B.shape[0]:
            raise LengthMismatch(f"cannot multiply {A.shape} by {B.shape}")
        if self.r == 1:
            return (A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % self.p
        if self.r > MATMUL_PLANE_MAX_R:
            return self._matmul_tables(A, B)
        p, r = self.p, self.r
        # planes first and contiguous, otherwise numpy skips BLAS
        Da = np.ascontiguousarray(np.moveaxis(self.digits(A), -1, 0), dtype=np.float64)
        Db = np.ascontiguousarray(np.moveaxis(self.digits(B), -1, 0), dtype=np.float64)
        acc = np.zeros((A.shape[0], B.shape[1], r), dtype=np.int64)
        for t in range(2 * r - 1):
            plane = np.zeros((A.shape[0], B.shape[1]), dtype=np.float64)
            for i in range(max(0, t - r + 1), min(t, r - 1) + 1):
                plane += Da[i] @ Db[t - i]
            acc += (plane.astype(np.int64) % p)[:, :, None] * self._xred[t]
        return self.from_digits(acc % p)

    def _matmul_tables(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        # rank-one updates through the log tables; cost independent of r
        if self.p == 2:
            acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
            for k in range(A.shape[1]):
                acc ^= self.mul(A[:, k, None], B[None, k, :])
            return acc
        acc = np.zeros((A.shape[0], B.shape[1], self.r), dtype=np.int64)
        for k in range(A.shape[1]):
            acc += self.digits(self.mul(A[:, k, None], B[None, k, :]))
        return self.from_digits(acc % self.p)

    def dot(self, u, v) -> int:
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        if u.shape != v.shape or u.ndim != 1:
            raise LengthMismatch(f"dot of shapes {u.shape} and {v.shape}")
        return int(self.sum(self.mul(u, v)))

    # -- elimination -------------------------------------------------------

    def rref(self, A) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        M = np.array(A, dtype=np.int64, copy=True)
        if M.ndim != 2:
            raise ValueError("rref expects a 2-d array")
        rows, cols = M.shape
        pivots: list[int] = []
        row = 0
        for c in range(cols):
            if row == rows:
                break
            nz = np.flatnonzero(M[row:, c])
            if nz.size == 0:
                continue
            i = row + nz[0]
            if i != row:
                M[[row, i]] = M[[i, row]]
            M[row, c:] = self.mul(M[row, c:], self.inv(M[row, c]))
            col = M[:, c].copy()
            col[row] = 0
            hit = np.flatnonzero(col)
            if hit.size:
                M[np.ix_(hit, np.arange(c, cols))] = self.sub(
                    M[hit, c:], self.mul(col[hit, None], M[row, c:][None, :])
                )
            pivots.append(c)
            row += 1
        return M, pivots

    def pivots(self, A) -> list[int]:
        """Pivot columns of the row echelon form; forward elimination only."""
        M = np.array(A, dtype=np.int64, copy=True)
        if M.ndim != 2:
            raise ValueError("pivots expects a 2-d array")
        rows, cols = M.shape
        pivots: list[int] = []
        row = 0
        for c in range(cols):
            if row == rows:
                break
            nz = np.flatnonzero(M[row:, c])
            if nz.size == 0:
                continue
            i = row + nz[0]
            if i != row:
                M[[row, i]] = M[[i, row]]
            hit = row + 1 + np.flatnonzero(M[row + 1 :, c])
            if hit.size:
                factor = self.div(M[hit, c], M[row, c])
                M[hit, c:] = self.sub(M[hit, c:], self.mul(factor[:, None], M[row, c:][None, :]))
            pivots.append(c)
            row += 1
        return pivots

    def rank(self, A) -> int:
        A = np.asarray(A, dtype=np.int64)
        if A.size == 0:
            return 0
        return len(self.pivots(A))

    def nullspace(self, A) -> np.ndarray:
        """Basis (as rows) of ``{x : A x = 0}``."""
        A = np.asarray(A, dtype=np.int64)
        cols = A.shape[1]
        if A.shape[0] == 0:
            return np.eye(cols, dtype=np.int64)
        R, pivots = self.rref(A)
        free = [c for c in range(cols) if c not in set(pivots)]
        basis = np.zeros((len(free), cols), dtype=np.int64)
        for k, f in enumerate(free):
            basis[k, f] = 1
            for i, pc in enumerate(pivots):
                basis[k, pc] = self.neg(R[i, f])
        return basis


@lru_cache(maxsize=None)
def field_new(p: int, r: int) -> Field:
    """``F_{p^r}`` with the canonical modulus."""
    if not is_prime(p):
        raise CompositeP(f"p={p} is not prime")
    if r < 1:
        raise ValueError(f"extension degree must be positive, got {r}")
    if p**r > FIELD_CAP:
        raise TooLarge(f"q={p}^{r} exceeds the cap {FIELD_CAP}")
    return Field(p, r, canonical_modulus(p, r))


def subfield_elements(f: Field, s: int) -> np.ndarray:
    """Sorted elements of the subfield ``F_{p^s}``: the fixed points of ``x -> x^(p^s)``."""
    if s < 1 or f.r % s:
        raise NotADivisor(f"{s} does not divide {f.r}")
    x = np.arange(f.q, dtype=np.int64)
    return x[f.power(x, f.p**s) == x]


def mat_rank(m, f: Field) -> int:
    return f.rank(m)


def dot(u, v, f: Field) -> int:
    return f.dot(u, v)


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out


def prefix_ranks(f: Field, M) -> np.ndarray:
    """``out[i] = rank(M[:i])`` for ``i = 0..rows``, from one elimination of ``M.T``."""
    M = np.asarray(M, dtype=np.int64)
    out = np.zeros(M.shape[0] + 1, dtype=np.int64)
    if M.size == 0:
        return out
    pivots = f.pivots(M.T)
    mark = np.zeros(M.shape[0], dtype=np.int64)
    mark[pivots] = 1
    out[1:] = np.cumsum(mark)
    return out
