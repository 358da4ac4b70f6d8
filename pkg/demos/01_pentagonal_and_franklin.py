"""
Euler's product and Franklin's involution
=========================================

Expand (q)_oo two ways: as a truncated product, and by summing (-1)^n over
partitions into distinct parts.  Then watch Franklin's map pair those
partitions off so only the staircases survive.
"""

from qfranklin import INF, WeightSelector, pochhammer_q, signed_partition_sum
from qfranklin.identities import orbit_pairs, pentagonal_census

# the product (1-q)(1-q^2)(1-q^3)... to order 26
print(pochhammer_q(INF, 26))

# the same series, one partition at a time
print(signed_partition_sum(26, WeightSelector.UNIT) == pochhammer_q(INF, 26))

# weight 9: eight partitions, four orbits, nothing left over
pairs, leftover = orbit_pairs(9)
for p in pairs:
    print(f"{p.first} <-> {p.second}")
print("unpaired:", leftover)

# at pentagonal weights exactly one staircase is left unpaired
for row in pentagonal_census(15):
    if row.witness is not None:
        print(row.weight, row.signed_count, row.witness)
