"""
Dual slopes of a surgery presentation of S^3
============================================

Surgery on a chain with unimodular framing matrix gives back S^3.  The cores
of the filling tori form a new link, and surgery on it with the dual slopes
undoes the first surgery.  Two independent routes to the same answer.
"""

from surgery.chains import (
    ChainPresentation,
    chain_linking_matrix,
    dual_link_oracle,
    dual_slopes_integral,
)

for text in ("1", "1,2", "1,1,1", "2,1,1"):
    chain = ChainPresentation.parse(text)
    B = chain_linking_matrix(chain)
    by_matrix = dual_slopes_integral(B)
    by_moves = dual_link_oracle(chain)
    print(f"{text:>8}  B = {B}")
    print(" " * 10, "slopes", [str(s) for s in by_matrix[1]], "linking", by_matrix[0])
    assert by_matrix == by_moves

# rational slopes: 1/k surgery on an unknot is undone by -1/k on its core
print("1/3 ->", [str(s) for s in dual_link_oracle("1/3")[1]])
