"""
A chain of three unknots and the lens space it presents
=======================================================
"""

from surgery.chains import (
    ChainPresentation,
    LensSpace,
    apply_moves,
    chain_to_lens,
    lens_equivalent,
    reduce_chain,
    slam_dunk,
)
from surgery.homology import h1
from surgery.links import FramedLink

chain = ChainPresentation.parse("1/2,1,1/2")
lens = chain_to_lens(chain)
print(chain, "->", lens, "= -" + str(lens.mirror()))
print("same as L(3,1) up to orientation:", lens_equivalent(lens, LensSpace(3, 1), oriented=False))
print("same as L(3,1) as oriented manifolds:", lens_equivalent(lens, LensSpace(3, 1)))

# blow down the middle unknot, then twist the survivor away
reduced, script = reduce_chain(chain)
print("moves:", script, "->", reduced)
assert apply_moves(chain, script) == reduced

# slam-dunking the last unknot gives an integral tail
print("slam-dunk:", slam_dunk(chain))

# the order of H_1 is the p of the lens space
link = FramedLink([[0, 1, 0], [1, 0, 1], [0, 1, 0]], chain.coeffs)
print("H1 =", h1(link))
