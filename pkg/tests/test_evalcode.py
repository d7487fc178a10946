import io
import itertools

import numpy as np
import pytest

from cartqec.errors import IncompatibleAmbient, TooLarge
from cartqec.evalcode import (
    brute_min_distance,
    build_code,
    dump_matrix,
    evaluate_monomials,
    improved_code,
    load_matrix,
    min_weight_witness,
    point_set,
    rowspace_contains,
    verify_dual_identity,
    witness_polynomial,
)
from cartqec.field import field_new
from cartqec.footprint import DefiningSet, ProductSpec, exponents, improved_defining_set, sigma

# C(L(4)) for p=3, r=(1,1): monomials 1, y, x, xy at the points of F_3^2 in
# lexicographic order, written out by hand
GOLDEN_33_4 = """3 9 4
1 1 1 1 1 1 1 1 1
0 1 2 0 1 2 0 1 2
0 0 0 1 1 1 2 2 2
0 0 0 0 1 2 0 2 1
"""


def _naive_min_distance(G, p):
    """All q^k messages over a prime field with plain modular arithmetic."""
    k, n = G.shape
    best = n
    for msg in itertools.product(range(p), repeat=k):
        if not any(msg):
            continue
        word = [sum(m * int(g) for m, g in zip(msg, G[:, j])) % p for j in range(n)]
        best = min(best, sum(1 for x in word if x))
    return best


def test_point_set_order():
    ps = point_set(ProductSpec(3, (1, 1)))
    assert ps.points.tolist() == [list(t) for t in itertools.product(range(3), repeat=2)]
    ps2 = point_set(ProductSpec(2, (2, 1)))
    assert ps2.n == 8 and ps2.field.q == 4
    assert set(ps2.points[:, 1].tolist()) == {0, 1}


def test_golden_generator_matrix():
    code = improved_code(ProductSpec(3, (1, 1)), 4)
    buf = io.StringIO()
    dump_matrix(code, buf)
    assert buf.getvalue() == GOLDEN_33_4
    q, M = load_matrix(io.StringIO(GOLDEN_33_4))
    assert q == 3 and np.array_equal(M, code.gen)


def test_build_code_examples():
    code = improved_code(ProductSpec(3, (1, 1)), 4)
    assert (code.n, code.k) == (9, 4)
    assert brute_min_distance(code) == 4
    code = improved_code(ProductSpec(2, (2, 1)), 3)
    assert (code.n, code.k) == (8, 5)
    assert brute_min_distance(code) == 3


def test_ambient_override():
    spec = ProductSpec(2, (2, 1))
    L = improved_defining_set(spec, 3)
    code = build_code(spec, L, ambient_r=4)
    assert code.field.q == 16 and code.k == 5
    assert brute_min_distance(build_code(spec, L)) == 3
    with pytest.raises(IncompatibleAmbient):
        build_code(spec, L, ambient_r=3)


@pytest.mark.parametrize("p,r_vec", [(2, (1, 1, 1)), (3, (1, 1)), (5, (1, 1)), (2, (1, 1, 1, 1))])
def test_brute_distance_matches_naive(p, r_vec):
    spec = ProductSpec(p, r_vec)
    for delta in range(1, spec.n + 1):
        code = improved_code(spec, delta)
        if p**code.k > 4096:
            continue
        assert brute_min_distance(code) == _naive_min_distance(code.gen, p)


def test_brute_distance_on_non_decreasing_set():
    spec = ProductSpec(3, (1, 1))
    code = build_code(spec, DefiningSet(spec, ((2, 0),)))
    assert brute_min_distance(code) == _naive_min_distance(code.gen, 3)


def test_brute_distance_cap():
    code = improved_code(ProductSpec(2, (4, 4)), 3)
    with pytest.raises(TooLarge):
        brute_min_distance(code)


def test_witness_examples():
    spec = ProductSpec(3, (2, 1))
    w = min_weight_witness(spec, None, (1, 1))
    assert np.count_nonzero(w) == 16
    assert witness_polynomial(spec, None, (1, 1)) == {(1, 1): 1}
    assert np.count_nonzero(min_weight_witness(spec, None, (0, 0))) == 27


@pytest.mark.parametrize("p,r_vec", [(3, (2, 1)), (2, (2, 2)), (2, (3, 1, 1)), (5, (1, 1))])
def test_witness_weight_and_membership(p, r_vec):
    spec = ProductSpec(p, r_vec)
    ps = point_set(spec)
    f = ps.field
    for a in exponents(spec):
        w = min_weight_witness(spec, f, a)
        assert np.count_nonzero(w) == sigma(spec, a)
        poly = witness_polynomial(spec, f, a)
        # evaluating the expansion reproduces the word
        ev = evaluate_monomials(ps, list(poly))
        coeffs = np.array(list(poly.values()), dtype=np.int64)
        assert np.array_equal(f.matmul(coeffs[None, :], ev)[0], w)
        # the expansion only uses monomials below a, so it lies in any decreasing set holding a
        assert all(all(e <= ai for e, ai in zip(b, a)) for b in poly)


def test_witness_in_code():
    spec = ProductSpec(3, (2, 1))
    code = improved_code(spec, 5)
    words = np.array([min_weight_witness(spec, code.field, a) for a in code.defining_set if sigma(spec, a) == 5])
    assert len(words) and rowspace_contains(code.field, code.gen, words)


def test_rowspace_contains():
    f = field_new(2, 1)
    G = np.array([[1, 0, 1], [0, 1, 1]])
    assert rowspace_contains(f, G, np.array([[1, 1, 0]]))
    assert not rowspace_contains(f, G, np.array([[1, 0, 0]]))
    assert rowspace_contains(f, G, np.zeros((0, 3), dtype=np.int64))


@pytest.mark.parametrize("p,r_vec,delta", [(3, (2, 1), 4), (2, (2, 2), 3), (3, (2, 1), 1), (5, (1, 1, 1), 7)])
def test_dual_identity(p, r_vec, delta):
    assert verify_dual_identity(ProductSpec(p, r_vec), None, delta)

