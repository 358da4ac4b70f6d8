"""
Zagier's identity
=================

sum_n [(q)_oo - (q)_n] = (q)_oo sum_k q^k/(1-q^k) + sum_r (-1)^r [(3r-1) q^(r(3r-1)/2) + 3r q^(r(3r+1)/2)]

The left side weights each distinct-part partition by its largest part m,
the product term by minus its number of parts n.  Franklin's map keeps m+n,
so the (m+n)-weighted sum collapses onto the staircases.
"""

from qfranklin import WeightSelector as W, first_mismatch, signed_partition_sum, zagier_lhs, zagier_rhs
from qfranklin.identities import cancellation_check, nsum_lhs

lhs, rhs = zagier_lhs(300), zagier_rhs(300)
print("order 300 mismatch:", first_mismatch(lhs, rhs))
print(zagier_lhs(12))

# the two halves, each matched against direct enumeration
N = 40
print(signed_partition_sum(N, W.LARGEST_PART) == zagier_lhs(N))
print(signed_partition_sum(N, W.NUM_PARTS) == nsum_lhs(N))
print(signed_partition_sum(N, W.SUM_MN))

# weight 12 is a pentagonal number (r=3): every orbit pair cancels, the staircase (5,4,3) is what remains
rep = cancellation_check(12)
print(rep.pair_sums, rep.exceptional_total, rep.total)
