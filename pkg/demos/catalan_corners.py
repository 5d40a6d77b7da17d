"""A first walk through Katalan functions and their extremal cases."""

from katalan.katalan_fn import evaluate, index
from katalan.rootideal import RootIdeal, Multiset
from katalan.symfunc import SymFunc, dual_groth_raise, kappa, schur
from katalan.cli import render_index

# A Katalan function K(Psi; M; gamma) is indexed by a root ideal Psi
# inside the staircase, a multiset M of column indices, and an integer
# weight gamma.  Build a small index and draw it.
psi = RootIdeal(4, (2, 1, 1, 0))
idx = index(psi, [3, 4, 4], (2, 2, 1, 1))
print(render_index(idx))

# evaluate() returns the exact expansion in the complete homogeneous
# basis of the k-bounded ring.
f = evaluate(idx)
print("K =", f)
print()

# The four corners of the (Psi, M) square recover classical families.
gamma = (3, 1, 1)
empty = RootIdeal.empty(3)
full = RootIdeal.full(3)
lfull = Multiset.from_ideal(full)
none = Multiset.empty(3)

cases = [
    ("g (dual Grothendieck)", index(empty, none, gamma), dual_groth_raise(gamma)),
    ("kappa", index(full, none, gamma), kappa(gamma)),
    ("s (Schur)", index(empty, lfull, gamma), schur(gamma)),
    ("h", index(full, lfull, gamma), SymFunc.h(gamma)),
]
for name, corner, expected in cases:
    got = evaluate(corner)
    print(f"{name:24s} {got}   matches: {got == expected}")
