"""One vertical Pieri product computed three independent ways."""

from katalan.affine import (
    SignedHecke,
    enumerate_cyclic,
    hecke_product,
    is_grassmannian,
    partition_of_grassmannian,
    perm_of_partition,
)
from katalan.kkschur import g_kk, pieri_triple
from katalan.symfunc import dual_groth_det, multiply

k, lam, r = 2, (2, 1), 2

# Way one: plain multiplication of the two h-expansions.
product = multiply(dual_groth_det((1,) * r), g_kk(k, lam))
print("g_{1^r} * g^(k)_lam =", product)
print()

# Way two: a signed sum over cyclically increasing 0-Hecke words acting
# on the affine Grassmannian permutation of lam.
start = SignedHecke.of(perm_of_partition(k, lam))
terms = []
for word in enumerate_cyclic(k, r):
    res = hecke_product(word, start)
    if not res.is_zero() and is_grassmannian(res.perm):
        mu = partition_of_grassmannian(res.perm)
        terms.append((word, res.sign, mu))
for word, sign, mu in terms:
    print(f"word {word}: sign {sign:+d}, lands on {mu}")
print()

# Way three: a sum of Katalan functions with bumped weights; the
# library wraps all three and they agree coefficient by coefficient.
lhs, hecke, katalan = pieri_triple(k, lam, r)
print("product == hecke sum == katalan sum:",
      lhs == hecke == katalan)
