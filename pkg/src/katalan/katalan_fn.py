"""Katalan functions: indexed triples and their exact expansion.

A Katalan function is indexed by a root ideal Psi, a column multiset M, and a
weight gamma, all of a common rank ell:

    K(Psi; M; gamma) = prod_{j in M} (1 - L_j)
                       prod_{(i,j) in Delta+ \\ Psi} (1 - R_ij)  k_gamma

where L_j lowers slot j by one, R_ij moves a unit from slot j to slot i, and
k_gamma = k_{gamma_1}^{(0)} ... k_{gamma_ell}^{(ell-1)}.  All the operators
commute, so the product may be applied in any order.

The Catalan function H(Psi; gamma) is the same expansion with h_gamma in
place of k_gamma and no lowering factors.

The production engine processes columns from the right.  Once column c has
received its raising factors (the nonroots (i, c)) and its lowering factors,
slot c can never change again, so it is contracted immediately: negative
values kill the state, nonnegative values multiply the accumulated h-monomial
by the slot generator.  Contraction merges states early and keeps the live
support far below that of a naive expansion.  A configurable support cap
guards against blowup; correctness is order-independent and asserted by the
debug evaluator, which replays the factors in random order on raw weights.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import LimitExceeded, MismatchedRank
from .partitions import Partition, Weight, weight
from .rootideal import Multiset, RootIdeal
from .symfunc import SymFunc, binomial, k_hom, kappa

DEFAULT_SUPPORT_CAP = 5_000_000


@dataclass(frozen=True)
class KatalanIndex:
    psi: RootIdeal
    mult: Multiset
    gamma: Weight

    def __post_init__(self):
        if not (self.psi.ell == self.mult.ell == len(self.gamma)):
            raise MismatchedRank(
                f"ranks differ: ideal {self.psi.ell}, multiset {self.mult.ell}, "
                f"weight length {len(self.gamma)}")

    @property
    def ell(self) -> int:
        return self.psi.ell

    def to_json(self) -> dict:
        return {"psi": self.psi.to_json(), "mult": self.mult.to_json(),
                "gamma": list(self.gamma)}

    @classmethod
    def from_json(cls, data: dict) -> "KatalanIndex":
        return cls(RootIdeal.from_json(data["psi"]), Multiset.from_json(data["mult"]),
                   weight(data["gamma"]))


def index(psi: RootIdeal, mult: Multiset | Sequence[int] | None,
          gamma: Sequence[int]) -> KatalanIndex:
    """Convenience constructor; mult may be a Multiset, item list, or None."""
    gamma = weight(gamma)
    if mult is None:
        mult = Multiset.empty(psi.ell)
    elif not isinstance(mult, Multiset):
        mult = Multiset.from_items(psi.ell, mult)
    return KatalanIndex(psi, mult, gamma)


def normalize(idx: KatalanIndex) -> KatalanIndex:
    """Strip trailing zero weight entries, restricting Psi and M to match."""
    gamma = idx.gamma
    n = len(gamma)
    while n and gamma[n - 1] == 0:
        n -= 1
    if n == idx.ell:
        return idx
    return KatalanIndex(idx.psi.restrict(n), idx.mult.restrict(n), gamma[:n])


def _insert_part(acc: Partition, d: int) -> Partition:
    if d == 0:
        return acc
    lst = list(acc)
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] >= d:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, d)
    return tuple(lst)


def _expand(idx: KatalanIndex, slot_terms: Callable[[int, int], list[tuple[int, int]]],
            support_cap: int) -> SymFunc:
    """Right-to-left contraction engine.

    slot_terms(value, column) lists (part, coeff) pairs for the generator
    attached to a finalized slot; part = 0 stands for the empty h-monomial.
    """
    ell = idx.ell
    rows = idx.psi.rows
    mult = idx.mult.mult
    # nonroots grouped by column: column c gets rows i < c with (i, c) not in Psi
    nonroot_rows = [[] for _ in range(ell + 1)]
    for i in range(1, ell + 1):
        for j in range(i + 1, ell - rows[i - 1] + 1):
            nonroot_rows[j].append(i)

    states: dict[tuple[Weight, Partition], int] = {(idx.gamma, ()): 1}
    for c in range(ell, 0, -1):
        ci = c - 1
        for i in nonroot_rows[c]:
            ii = i - 1
            nxt: dict[tuple[Weight, Partition], int] = {}
            get = nxt.get
            for key, coef in states.items():
                act, acc = key
                prev = get(key)
                nxt[key] = coef if prev is None else prev + coef
                lst = list(act)
                lst[ii] += 1
                lst[ci] -= 1
                key2 = (tuple(lst), acc)
                prev = get(key2)
                nxt[key2] = -coef if prev is None else prev - coef
            states = {k: v for k, v in nxt.items() if v}
            if len(states) > support_cap:
                raise LimitExceeded(f"support passed {support_cap} states")
        m = mult[ci]
        if m:
            binoms = [(-1) ** t * binomial(m, t) for t in range(m + 1)]
            nxt = {}
            get = nxt.get
            for (act, acc), coef in states.items():
                base = act[ci]
                for t, b in enumerate(binoms):
                    lst = list(act)
                    lst[ci] = base - t
                    key2 = (tuple(lst), acc)
                    prev = get(key2)
                    val = coef * b
                    nxt[key2] = val if prev is None else prev + val
            states = {k: v for k, v in nxt.items() if v}
            if len(states) > support_cap:
                raise LimitExceeded(f"support passed {support_cap} states")
        # finalize slot c
        nxt = {}
        get = nxt.get
        for (act, acc), coef in states.items():
            v = act[ci]
            if v < 0:
                continue
            rest = act[:ci]
            for part, kc in slot_terms(v, c):
                key2 = (rest, _insert_part(acc, part))
                prev = get(key2)
                val = coef * kc
                nxt[key2] = val if prev is None else prev + val
        states = {k: v for k, v in nxt.items() if v}
        if len(states) > support_cap:
            raise LimitExceeded(f"support passed {support_cap} states")

    return SymFunc({acc: coef for (_, acc), coef in states.items()})


def _k_slot_terms(v: int, c: int) -> list[tuple[int, int]]:
    out = []
    for part, coeff in k_hom(v, c - 1)._terms.items():
        out.append((part[0] if part else 0, coeff))
    return out


def _h_slot_terms(v: int, c: int) -> list[tuple[int, int]]:
    return [(v, 1)]


def evaluate(idx: KatalanIndex, support_cap: int | None = None) -> SymFunc:
    """K(Psi; M; gamma) as an exact h-expansion."""
    cap = DEFAULT_SUPPORT_CAP if support_cap is None else support_cap
    return _expand(idx, _k_slot_terms, cap)


def catalan_H(psi: RootIdeal, gamma: Sequence[int],
              support_cap: int | None = None) -> SymFunc:
    """H(Psi; gamma) = prod over nonroots (1 - R_ij) applied to h_gamma."""
    cap = DEFAULT_SUPPORT_CAP if support_cap is None else support_cap
    idx = KatalanIndex(psi, Multiset.empty(psi.ell), weight(gamma))
    return _expand(idx, _h_slot_terms, cap)


def eval_via_H(idx: KatalanIndex, support_cap: int | None = None) -> SymFunc:
    """Evaluate K(Psi; M; gamma) as a signed sum of Catalan functions H.

    Expanding the product over M of (1 - L_j) gives an alternating sum over
    sub-multisets A of M, and expanding each slot generator into h's via
    k_m^(r) = sum_i binom(r+i-1, i) h_{m-i} turns every summand into an H
    evaluation:

        K(Psi; M; gamma)
            = sum_A (-1)^|A| sum_iota c_iota H(Psi; gamma - eps_A - iota)

    with c_iota = prod_j binom(j-2+iota_j, iota_j) over iota in Z_{>=0}^ell.
    Instances of a column are distinguishable, so choosing t copies from
    multiplicity m carries a weight binom(m, t).  Exponential reference path;
    use evaluate for real work.
    """
    ell = idx.ell
    weights: dict[Weight, int] = {idx.gamma: 1}
    for j in range(1, ell + 1):
        m = idx.mult.count(j)
        if not m:
            continue
        nxt: dict[Weight, int] = {}
        for w, c in weights.items():
            for t in range(m + 1):
                lst = list(w)
                lst[j - 1] -= t
                key = tuple(lst)
                val = nxt.get(key, 0) + c * ((-1) ** t) * binomial(m, t)
                if val:
                    nxt[key] = val
                else:
                    nxt.pop(key, None)
        weights = nxt
    # slot j = 1 has generator h already; binom(i-1, i) = 0 kills i > 0 there
    for j in range(2, ell + 1):
        nxt = {}
        for w, c in weights.items():
            room = sum(w)
            if room < 0:
                continue
            for i in range(room + 1):
                lst = list(w)
                lst[j - 1] -= i
                key = tuple(lst)
                val = nxt.get(key, 0) + c * binomial(j - 2 + i, i)
                if val:
                    nxt[key] = val
                else:
                    nxt.pop(key, None)
        weights = nxt
    total = SymFunc.zero()
    for w, c in weights.items():
        total = total + catalan_H(idx.psi, w, support_cap) * c
    return total


# -- debug path ------------------------------------------------------------

def evaluate_pure(idx: KatalanIndex, order: Sequence[int] | None = None) -> SymFunc:
    """Reference evaluator: raw weight map, one factor at a time, then kappa.

    order, when given, is a permutation of the factor list (nonroot raising
    factors first, then one lowering factor per multiset element, in the
    natural enumeration).
    """
    factors: list[tuple] = [("R", i, j) for (i, j) in idx.psi.complement_roots()]
    factors.extend(("L", j) for j in idx.mult.items())
    if order is not None:
        factors = [factors[t] for t in order]
    weights: dict[Weight, int] = {idx.gamma: 1}
    for factor in factors:
        nxt: dict[Weight, int] = {}
        for w, c in weights.items():
            nxt[w] = nxt.get(w, 0) + c
            lst = list(w)
            if factor[0] == "R":
                lst[factor[1] - 1] += 1
                lst[factor[2] - 1] -= 1
            else:
                lst[factor[1] - 1] -= 1
            key = tuple(lst)
            nxt[key] = nxt.get(key, 0) - c
        weights = {w: c for w, c in nxt.items() if c}
    total = SymFunc.zero()
    for w, c in weights.items():
        term = kappa(w)
        if term:
            total = total + term * c
    return total


def evaluate_checked(idx: KatalanIndex, rng: random.Random | None = None) -> SymFunc:
    """Production result, asserted against two random factor orders."""
    rng = rng or random.Random(0)
    result = evaluate(idx)
    n = sum(1 for _ in idx.psi.complement_roots()) + idx.mult.total()
    for _ in range(2):
        order = list(range(n))
        rng.shuffle(order)
        assert evaluate_pure(idx, order) == result, \
            f"factor order changed the value at {idx}"
    return result
