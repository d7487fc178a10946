"""
CSS codes and their Steane enlargements
=======================================

Walks the delta range for q=16, r=(4,4,2) and prints both codes, the GV
verdicts and how many dimensions the enlargement actually adds.
"""

from cartqec import ProductSpec, css_params, exact_increase, gv_classify, singleton_slack, steane_params
from cartqec.errors import HypothesisError
from cartqec.footprint import enlarge_guarantee, tau_lower_bound

spec = ProductSpec(2, (4, 4, 2))
print("n =", spec.n, " q =", spec.q)

for delta in range(3, 18):
    try:
        css = css_params(spec, delta)
        st = steane_params(spec, delta)
    except HypothesisError as exc:
        print(delta, "skipped:", exc)
        continue
    cor = tau_lower_bound(spec, delta - 1)
    print(
        f"{delta:3d}  {str(css):18s} {gv_classify(css).marker:1s}  {str(st.params):20s} {gv_classify(st.params).marker:1s}"
        f"  guaranteed={enlarge_guarantee(spec, delta)}  bound={cor.bound}  actual={exact_increase(spec, delta)}"
    )

#---------------------------------------------------------------
# An MDS example: the enlarged code meets the Singleton bound
small = ProductSpec(3, (2, 1))
st = steane_params(small, 3)
print(st.params, "singleton slack:", singleton_slack(st.params), " GV:", gv_classify(st.params).verdict.value)

# Past the edge range the increase is still computable, just not guaranteed
for delta in (5, 7):
    st = steane_params(small, delta)
    print(delta, st.params, "increase", st.increase, "guaranteed" if st.prop4_applies else "counted")
