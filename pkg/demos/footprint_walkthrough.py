"""
Footprint values on a small product set
=======================================

Points of F_9 x F_3 inside F_9, monomials X^a Y^b with a < 9 and b < 3.
"""

import numpy as np

from cartqec import ProductSpec, improved_defining_set, dual_defining_set, sigma_grid, tau, tau_lower_bound
from cartqec.footprint import exponents, mu, sigma

spec = ProductSpec(3, (2, 1))
print("n =", spec.n, " sizes =", spec.sizes, " ambient q =", spec.q)

# sigma(a) = (9 - a1)(3 - a2); rows are a2, columns a1
grid = sigma_grid(spec)
print(grid.T)

# L(delta) keeps the monomials with sigma >= delta
for delta in (3, 5, 7):
    L = improved_defining_set(spec, delta)
    Lp = dual_defining_set(spec, delta)
    print(f"delta={delta}: |L|={len(L)}  |L_perp|={len(Lp)}  L_perp in L: {set(Lp) <= set(L)}")

# mu is sigma read from the opposite corner
a = (2, 1)
b = tuple(s - 1 - x for s, x in zip(spec.sizes, a))
print("sigma", a, "=", sigma(spec, a), " mu", b, "=", mu(spec, b))

#---------------------------------------------------------------
# tau(s) counts the monomials with sigma == s
counts = np.bincount(grid.ravel(), minlength=spec.n + 1)
taus = np.array([0] + [tau(spec, s) for s in range(1, spec.n + 1)])
print("tau matches the histogram:", np.array_equal(counts, taus))
print("s with tau(s) > 0:", [s for s in range(1, spec.n + 1) if taus[s]])

# closed-form lower bounds only exist for 2 <= s <= 9
for s in (2, 4, 6):
    b = tau_lower_bound(spec, s)
    print(f"s={s}: tau={taus[s]}  K={b.K}  bound={b.bound}  exact={b.exact}")

# the same sigma values, one per exponent, in canonical order
print(list(exponents(spec))[:5], "...")
