"""Build Leibniz algebroids from Lie-Rinehart data and look at their locality."""

from leibniz_lm.algebroid import check_leibniz_algebroid, check_local, hemi_semi_algebroid, reduce_algebroid, theorem2_functor
from leibniz_lm.corpus import truncated, unstable_squares_algebroid
from leibniz_lm.derivations import universal_derivations
from leibniz_lm.exactlin import QQ, arrays_equal
from leibniz_lm.lie_rinehart import build_tautological, check_theorem1_object, derivation_pair
from leibniz_lm.lm import identity_algebra_object

for n in (2, 3):
    pair = derivation_pair(truncated(QQ, n))
    package = build_tautological(pair)
    algebroid = theorem2_functor(package)
    same = arrays_equal(algebroid.E.bracket, hemi_semi_algebroid(pair).E.bracket)
    local = check_local(algebroid)
    print(f"x^{n}: package {check_theorem1_object(package).verdict}, algebroid dim {algebroid.dim} "
          f"{check_leibniz_algebroid(algebroid).verdict}, matches hemi-semi: {same}")
    print(f"      local: {local.verdict} ({len(local.violations)} witnesses)")
    lie_slots = range(pair.A.dim, algebroid.dim)
    print(f"      local with the second slot in the Lie part: {check_local(algebroid, second_slot=lie_slots).verdict}")
    if local.violations:
        print("      first witness:", local.violations[0])

universal = universal_derivations(identity_algebra_object(truncated(QQ, 3))).as_theorem1()
print("universal object over x^3:", check_leibniz_algebroid(theorem2_functor(universal)).verdict)

red = reduce_algebroid(unstable_squares_algebroid(QQ))
print("reduction of an algebroid with unstable squares:", red.report.axioms(), red.report.witnesses("A-stable")[:3])
