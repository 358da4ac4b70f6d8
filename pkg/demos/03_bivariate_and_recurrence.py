"""
Tracking m+n with a second variable
===================================

Weight each partition by x^(m+n).  The result equals S(x) = sum_r (x)_{r+1} x^r,
which satisfies S(x) = 1 - q x^2 - q^2 x^3 S(qx).  Differentiating in x and
setting x = 1 gives back the (m+n)-weighted sum.
"""

from qfranklin import SForm, WeightSelector as W, diff_bridge, recurrence_residual, s_series, signed_partition_sum, x_identity_rhs

print(x_identity_rhs(15, 9))

for form in SForm:
    print(form.value, s_series(60, 25, form) == x_identity_rhs(60, 25))

print(signed_partition_sum(30, W.X_POWER_MN) == x_identity_rhs(30, 31))

# the recurrence only closes with q^2 in front of x^3 S(qx)
for power in (1, 2, 3):
    res = recurrence_residual(30, 15, q_power=power)
    print(power, "zero" if res.is_zero() else f"first nonzero term: {next(res.terms())}")

print(diff_bridge(15))
print(signed_partition_sum(15, W.SUM_MN))
