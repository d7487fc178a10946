"""Quantum codes from evaluation codes on Cartesian product point sets."""

from .evalcode import brute_min_distance, build_code, improved_code, min_weight_witness, verify_dual_identity
from .field import Field, dot, field_new, mat_rank, subfield_elements
from .footprint import (
    DefiningSet,
    ProductSpec,
    dual_defining_set,
    exact_increase,
    improved_defining_set,
    is_dual_containing,
    monomials_orthogonal,
    mu,
    sigma,
    sigma_grid,
    tau,
    tau_lower_bound,
)
from .quantum import classical_params, css_params, gv_classify, gv_satisfied, singleton_slack, steane_params

__version__ = "0.1.0"
