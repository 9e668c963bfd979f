"""
Which pairs of reciprocal slopes give a homology sphere?
========================================================

For two unknots with linking number l and slopes 1/q1, 1/q2 the order of
H_1 is |q1 q2 l^2 - 1|.  Brute force shows that apart from the unlinked
family only |l| = 1 with {|q1|, |q2|} = {1, 2} survives.
"""

import collections

from surgery.enumeration import (
    enumerate_pair_solutions,
    enumerate_triple_obstructions,
    split_pair_solutions,
)

zero, exceptional = split_pair_solutions(enumerate_pair_solutions(25, 25))
print(len(zero), "unlinked solutions")
for row in exceptional:
    print("  lk = %2d, q = (%2d, %2d)" % row)

# three components whose pairs all look fine but whose full surgery is not
# a homology sphere
orders = collections.Counter(o.order for o in enumerate_triple_obstructions(3))
print("triple obstructions by |H_1|:", dict(sorted(orders.items(), key=str)))
