"""Sweeping the open positivity conjectures at desk scale."""

from katalan.kkschur import conjecture_sweep, expand_report
from katalan.katalan_fn import evaluate, index
from katalan.rootideal import Multiset, RootIdeal

# Each sweep enumerates a range of levels, weights, and (for kpos) all
# root ideals, expands the relevant functions over a labeled family,
# and records any sign violation as a witness instead of raising.
for which in ("c", "d", "e", "f"):
    rep = conjecture_sweep(which, ks=(2,), max_size=5, max_ell=3)
    print(f"conjecture {which}: checked {rep.checked},",
          "witnesses" if rep.witnesses else "clean")
print()

# The strongest statement: for any root ideal Psi with maxband at most
# k, K(Psi; Psi; lam) alternates in the closed family and
# K(Psi; RC^a(Psi); lam) is nonnegative in the k-Schur family.
rep = conjecture_sweep("kpos", ks=(2,), max_size=5, max_ell=3)
print(f"kpos: checked {rep.checked},",
      "witnesses" if rep.witnesses else "clean")
print()

# A single instance, by hand: one ideal, lowered by the columns of its
# complement ideal RC(Psi), expanded over the k-Schur family.
psi = RootIdeal(3, (2, 1, 0))
f = evaluate(index(psi, Multiset.from_ideal(psi.rc()), (2, 2, 1)))
print("expansion:", expand_report(f, "kschur", 2).to_json())
