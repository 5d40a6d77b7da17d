"""K-k-Schur functions: branching, shift invariance, rectangles."""

from katalan.kkschur import branch, g_closed, g_kk, shift
from katalan.partitions import k_rectangle
from katalan.serialize import canonical_json
from katalan.symfunc import dual_groth_det

# The K-k-Schur family g^{(k)} interpolates between the dual
# Grothendieck polynomials (large k) and a much smaller ring (small k).
lam = (2, 2, 1)
for k in (2, 3, 4, 5):
    print(f"g^({k})_{lam} =", g_kk(k, lam))
print()

# For k at least |lam| the member collapses to the dual Grothendieck
# polynomial; more precisely this happens as soon as lam fits in a
# k-rectangle, meaning lam_1 + len(lam) - 1 <= k.
fits = min(k for k in range(1, 9) if lam[0] + len(lam) - 1 <= k)
print("collapse at k =", fits,
      "->", g_kk(fits, lam) == dual_groth_det(lam))
print()

# Branching: each member expands in the level k+1 family with signs
# alternating relative to |lam|, and coefficient 1 on lam itself.
rep = branch(2, (2, 2, 1))
print("branch report:", canonical_json(rep.to_json()))
print()

# Shift invariance: adding a full column to lam, moving one level up,
# and applying the column-removal operator recovers the member.
for k in (2, 3):
    ok = shift(k, lam) == g_kk(k, lam)
    print(f"shift invariance at k={k}: {ok}")
print()

# The closed family multiplies k-rectangles away entirely.
k = 3
rect = k_rectangle(k, 2)
print("closed member at the rectangle", rect, "is",
      g_closed(k, rect) == dual_groth_det(rect))
