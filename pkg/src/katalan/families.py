"""Identity families: fixture and generated-instance checkers.

Each family function checks one exact identity over a stream of conforming
instances and returns a FamilyReport carrying counterexample witnesses, so a
verification run can keep going after a failure.  Pinned fixtures are checked
first, then instances drawn by seeded rejection sampling from
enumerate_ideals per rank; hypothesis-laden identities scan the sampled ideal
for sites satisfying the ideal-side conditions and then construct multiset
and weight data to match.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .katalan_fn import KatalanIndex, catalan_H, evaluate, normalize
from .partitions import Weight, kbounded_partitions
from .rootideal import Multiset, RootIdeal, delta_k, diagonal, enumerate_ideals
from .serialize import symfunc_to_json
from .symfunc import (SymFunc, dual_groth_det, dual_groth_raise, e_perp,
                      kappa, schur)


@dataclass
class FamilyReport:
    family: str
    identity: str
    checked: int = 0
    failures: list = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"family": self.family, "identity": self.identity,
                "checked": self.checked, "failures": self.failures}


def _check(rep: FamilyReport, desc: dict, lhs: SymFunc, rhs: SymFunc) -> None:
    rep.checked += 1
    if lhs != rhs:
        rep.failures.append({**desc, "difference": symfunc_to_json(lhs - rhs)})


@lru_cache(maxsize=None)
def _pool(ell: int) -> tuple[RootIdeal, ...]:
    return tuple(enumerate_ideals(ell))


def _random_index(rng: random.Random, max_ell: int = 4, lo: int = -2,
                  hi: int = 4, max_mult: int = 2) -> KatalanIndex:
    ell = rng.randint(1, max_ell)
    psi = rng.choice(_pool(ell))
    mult = Multiset(ell, tuple(rng.randint(0, max_mult) for _ in range(ell)))
    gamma = tuple(rng.randint(lo, hi) for _ in range(ell))
    return KatalanIndex(psi, mult, gamma)


def _bump(gamma: Weight, places: dict) -> Weight:
    lst = list(gamma)
    for pos, d in places.items():
        lst[pos - 1] += d
    return tuple(lst)


def _desc(idx: KatalanIndex, **extra) -> dict:
    return {"index": idx.to_json(), **extra}


def _segment(psi: RootIdeal, a: int, b: int) -> list[int]:
    """Bounce path indices from a down to b inclusive; empty when b < a."""
    if b < a:
        return []
    return psi.bpath(a, b)


# -- specialization families ------------------------------------------------

def specializations(max_ell: int = 4, lo: int = 0, hi: int = 3) -> FamilyReport:
    rep = FamilyReport(
        "specializations",
        "K(empty;empty;g)=g_g; K(full;empty;g)=k_g; K(empty;full;g)=s_g; "
        "K(full;full;g)=h_g")
    for ell in range(1, max_ell + 1):
        empty = RootIdeal.empty(ell)
        full = RootIdeal.full(ell)
        lfull = Multiset.from_ideal(full)
        none = Multiset.empty(ell)
        for gam in itertools.product(range(lo, hi + 1), repeat=ell):
            base = {"ell": ell, "gamma": list(gam)}
            _check(rep, {**base, "case": "dual-groth"},
                   evaluate(KatalanIndex(empty, none, gam)), dual_groth_raise(gam))
            _check(rep, {**base, "case": "kappa"},
                   evaluate(KatalanIndex(full, none, gam)), kappa(gam))
            _check(rep, {**base, "case": "schur"},
                   evaluate(KatalanIndex(empty, lfull, gam)), schur(gam))
            _check(rep, {**base, "case": "h"},
                   evaluate(KatalanIndex(full, lfull, gam)), SymFunc.h(gam))
    return rep


def det_vs_raise(max_ell: int = 4, lo: int = -2, hi: int = 4,
                 extra: int = 200, seed: int = 0) -> FamilyReport:
    rep = FamilyReport("det-vs-raise",
                       "det(k_{g_i+j-i}^{(i-1)}) = prod(1-R_ij) k_g")
    for ell in range(0, max_ell + 1):
        for gam in itertools.product(range(lo, hi + 1), repeat=ell):
            _check(rep, {"ell": ell, "gamma": list(gam)},
                   dual_groth_det(gam), dual_groth_raise(gam))
    rng = random.Random(seed)
    for _ in range(extra):
        ell = rng.randint(5, 6)
        gam = tuple(rng.randint(-2, 4) for _ in range(ell))
        _check(rep, {"ell": ell, "gamma": list(gam)},
               dual_groth_det(gam), dual_groth_raise(gam))
    return rep


# -- rank-3 identity families ----------------------------------------------

def root_expansions(count: int = 600, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "root-expansions",
        "(a) K = K(+b;m) - K(+b;m+e_b); (b) K = K(-a;m) + K(m+e_a); "
        "(c) K = K(M-y;m) - K(M-y;m-e_y); (d) K = K(M+y;m) + K(m-e_y)")
    rng = random.Random(seed)
    while rep.checked < count:
        idx = _random_index(rng)
        psi, mult, gam = idx.psi, idx.mult, idx.gamma
        lhs = evaluate(idx)
        which = rng.randrange(4)
        if which == 0:
            adds = psi.addable_roots()
            if not adds:
                continue
            beta = rng.choice(adds)
            big = psi.add(beta)
            rhs = evaluate(KatalanIndex(big, mult, gam)) \
                - evaluate(KatalanIndex(big, mult, _bump(gam, {beta[0]: 1, beta[1]: -1})))
            _check(rep, _desc(idx, part="a", root=list(beta)), lhs, rhs)
        elif which == 1:
            rems = psi.removable_roots()
            if not rems:
                continue
            alpha = rng.choice(rems)
            rhs = evaluate(KatalanIndex(psi.remove(alpha), mult, gam)) \
                + evaluate(KatalanIndex(psi, mult, _bump(gam, {alpha[0]: 1, alpha[1]: -1})))
            _check(rep, _desc(idx, part="b", root=list(alpha)), lhs, rhs)
        elif which == 2:
            cols = [j for j in range(1, idx.ell + 1) if mult.count(j)]
            if not cols:
                continue
            y = rng.choice(cols)
            less = mult.remove(y)
            rhs = evaluate(KatalanIndex(psi, less, gam)) \
                - evaluate(KatalanIndex(psi, less, _bump(gam, {y: -1})))
            _check(rep, _desc(idx, part="c", column=y), lhs, rhs)
        else:
            y = rng.randint(1, idx.ell)
            rhs = evaluate(KatalanIndex(psi, mult.union([y]), gam)) \
                + evaluate(KatalanIndex(psi, mult, _bump(gam, {y: -1})))
            _check(rep, _desc(idx, part="d", column=y), lhs, rhs)
    return rep


def straightening(count: int = 600, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "straightening",
        "s_i Psi = Psi and m(i+1) = m(i)+1 imply "
        "K(g) + K(s_i g - e_i + e_{i+1}) = 0")
    rng = random.Random(seed)
    while rep.checked < count:
        ell = rng.randint(2, 5)
        psi = rng.choice(_pool(ell))
        sites = [z for z in range(1, ell)
                 if psi.has_ceiling(z) and psi.has_wall(z)]
        if not sites:
            continue
        z = rng.choice(sites)
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[z] = m[z - 1] + 1
        gam = [rng.randint(-2, 4) for _ in range(ell)]
        flip = list(gam)
        flip[z - 1], flip[z] = gam[z] - 1, gam[z - 1] + 1
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(gam))
        other = KatalanIndex(psi, idx.mult, tuple(flip))
        _check(rep, _desc(idx, i=z), evaluate(idx) + evaluate(other),
               SymFunc.zero())
    return rep


def zero_lemma(count: int = 600, seed: int = 0) -> FamilyReport:
    rep = FamilyReport("zero-lemma",
                       "K(Psi;M;(g,0)) = K(restricted Psi;restricted M;g)")
    rng = random.Random(seed)
    while rep.checked < count:
        idx = _random_index(rng, max_ell=4)
        ell = idx.ell
        padded = KatalanIndex(idx.psi, idx.mult, idx.gamma[:ell - 1] + (0,))
        small = KatalanIndex(idx.psi.restrict(ell - 1),
                             idx.mult.restrict(ell - 1), idx.gamma[:ell - 1])
        if ell == 1:
            small_val = SymFunc.one()
        else:
            small_val = evaluate(small)
        _check(rep, _desc(padded), evaluate(padded), small_val)
        norm = normalize(padded)
        _check(rep, _desc(padded, case="normalize"), evaluate(padded),
               evaluate(norm) if norm.ell else SymFunc.one())
    return rep


def gen_pascal(count: int = 600, seed: int = 0) -> FamilyReport:
    rep = FamilyReport("gen-pascal",
                       "prod_{j=r+1}^{r+s} (1-L_j)^r k_{(0^r,g)} = k_g")
    rng = random.Random(seed)
    while rep.checked < count:
        r = rng.randint(1, 3)
        s = rng.randint(1, 3)
        ell = r + s
        gam = tuple(rng.randint(-1, 3) for _ in range(s))
        mult = Multiset(ell, (0,) * r + (r,) * s)
        idx = KatalanIndex(RootIdeal.full(ell), mult, (0,) * r + gam)
        _check(rep, _desc(idx, r=r, s=s), evaluate(idx), kappa(gam))
    return rep


def concatenation(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "concatenation",
        "K(Psi;L;a) K(Psi';L';b) = K(Psi cat Psi'; L cat L'; ab)")
    rng = random.Random(seed)
    fixture_left = RootIdeal(3, (2, 0, 0))
    fixture_right = RootIdeal(4, (2, 1, 1, 0))
    assert fixture_left.concat(fixture_right).rows == (6, 4, 4, 2, 1, 1, 0)
    while rep.checked < count:
        e1 = rng.randint(1, 3)
        e2 = rng.randint(1, 3)
        psi1, low1 = rng.choice(_pool(e1)), rng.choice(_pool(e1))
        psi2, low2 = rng.choice(_pool(e2)), rng.choice(_pool(e2))
        a = tuple(rng.randint(-1, 3) for _ in range(e1))
        b = tuple(rng.randint(-1, 3) for _ in range(e2))
        lhs = evaluate(KatalanIndex(psi1, Multiset.from_ideal(low1), a)) \
            * evaluate(KatalanIndex(psi2, Multiset.from_ideal(low2), b))
        joined = KatalanIndex(psi1.concat(psi2),
                              Multiset.from_ideal(low1.concat(low2)), a + b)
        _check(rep, _desc(joined), lhs, evaluate(joined))
    return rep


def sliding(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "sliding",
        "mu_l = 1, l in M, removable (x,l): K = K(Psi-a;M-l;mu) "
        "+ K(hat Psi; hat M + x; mu')")
    fix = KatalanIndex(RootIdeal(7, (6, 4, 2, 1, 0, 0, 0)),
                       Multiset(7, (0, 0, 1, 1, 2, 3, 4)),
                       (4, 3, 1, 1, 1, 1, 1))
    _check_sliding(rep, fix, 4)
    rng = random.Random(seed)
    while rep.checked < count:
        ell = rng.randint(2, 5)
        psi = rng.choice(_pool(ell))
        if not psi.has_up(ell):
            continue
        x = psi.up(ell)
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[ell - 1] = max(1, m[ell - 1])
        gam = [rng.randint(-1, 3) for _ in range(ell)]
        gam[ell - 1] = 1
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(gam))
        _check_sliding(rep, idx, x)
    return rep


def _check_sliding(rep: FamilyReport, idx: KatalanIndex, x: int) -> None:
    ell = idx.ell
    first = KatalanIndex(idx.psi.remove((x, ell)), idx.mult.remove(ell),
                         idx.gamma)
    hat_mult = idx.mult.restrict(ell - 1).union([x])
    hat_gam = _bump(idx.gamma[:ell - 1], {x: 1})
    second = KatalanIndex(idx.psi.restrict(ell - 1), hat_mult, hat_gam)
    _check(rep, _desc(idx, x=x), evaluate(idx),
           evaluate(first) + evaluate(second))


# -- mirror suite -----------------------------------------------------------

def mirror_base(count: int = 600, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "mirror-base",
        "ceiling z,z+1; wall z,z+1; mu_z = mu_{z+1}-1: "
        "m(z+1)=m(z)+1 gives K=0; m(z)=m(z+1) gives K = K(mu-e_{z+1})")
    base_psi = RootIdeal(6, (5, 2, 2, 2, 0, 0))
    mu = (3, 2, 3, 2, 1, 1)
    zero_idx = KatalanIndex(base_psi, Multiset(6, (0, 0, 1, 1, 2, 4)), mu)
    _check(rep, _desc(zero_idx, case="fixture-zero"), evaluate(zero_idx),
           SymFunc.zero())
    drop_idx = KatalanIndex(base_psi, Multiset(6, (0, 1, 1, 1, 2, 4)), mu)
    _check(rep, _desc(drop_idx, case="fixture-drop"), evaluate(drop_idx),
           evaluate(KatalanIndex(base_psi, drop_idx.mult, (3, 2, 2, 2, 1, 1))))
    rng = random.Random(seed)
    while rep.checked < count:
        ell = rng.randint(2, 5)
        psi = rng.choice(_pool(ell))
        sites = [z for z in range(1, ell)
                 if psi.has_ceiling(z) and psi.has_wall(z)]
        if not sites:
            continue
        z = rng.choice(sites)
        zero_case = rng.random() < 0.5
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[z] = m[z - 1] + 1 if zero_case else m[z - 1]
        gam = [rng.randint(-1, 3) for _ in range(ell)]
        gam[z] = gam[z - 1] + 1
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(gam))
        if zero_case:
            _check(rep, _desc(idx, z=z, case="zero"), evaluate(idx),
                   SymFunc.zero())
        else:
            other = KatalanIndex(psi, idx.mult, _bump(idx.gamma, {z + 1: -1}))
            _check(rep, _desc(idx, z=z, case="drop"), evaluate(idx),
                   evaluate(other))
    return rep


@lru_cache(maxsize=None)
def _mirror_sites(ell: int) -> tuple:
    """(psi, y, z) with the ideal-side mirror lemma conditions and z > y."""
    out = []
    for psi in _pool(ell):
        for y in range(1, ell):
            if not psi.has_ceiling(y):
                continue
            path = psi.downpath(y)
            for z in path[1:]:
                if z >= ell:
                    continue
                if not psi.has_wall(z):
                    continue
                seg = _segment(psi, y, psi.up(z))
                if all(psi.has_mirror(x) for x in seg):
                    out.append((psi, y, z))
    return tuple(out)


def mirror_lemma(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "mirror-lemma",
        "mirror chain from y to z: m(y+1)=m(y)+1 gives K=0; "
        "m(y)=m(y+1) gives K = K(mu-e_{z+1})")
    rng = random.Random(seed)
    sites = [s for ell in range(3, 7) for s in _mirror_sites(ell)]
    while rep.checked < count:
        psi, y, z = rng.choice(sites)
        ell = psi.ell
        zero_case = rng.random() < 0.5
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[y] = m[y - 1] + 1 if zero_case else m[y - 1]
        for x in _segment(psi, psi.down(y), z):
            m[x] = m[x - 1] + 1
        mu = [rng.randint(-1, 3) for _ in range(ell)]
        for x in _segment(psi, y, psi.up(z)):
            mu[x] = mu[x - 1]
        mu[z] = mu[z - 1] + 1
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(mu))
        if zero_case:
            _check(rep, _desc(idx, y=y, z=z, case="zero"), evaluate(idx),
                   SymFunc.zero())
        else:
            other = KatalanIndex(psi, idx.mult, _bump(idx.gamma, {z + 1: -1}))
            _check(rep, _desc(idx, y=y, z=z, case="drop"), evaluate(idx),
                   evaluate(other))
    return rep


def baby_staircase(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "baby-staircase",
        "removable (i,j), ceiling+wall at j, m(j+1)=m(j)+1, g_j=g_{j+1}: "
        "K = K(Psi - (i,j))")
    fix_psi = RootIdeal(4, (2, 2, 0, 0))
    fix = KatalanIndex(fix_psi, Multiset(4, (0, 0, 1, 2)), (4, 3, 2, 2))
    _check(rep, _desc(fix, case="fixture"), evaluate(fix),
           evaluate(KatalanIndex(RootIdeal(4, (2, 1, 0, 0)), fix.mult,
                                 fix.gamma)))
    rng = random.Random(seed)
    while rep.checked < count:
        ell = rng.randint(2, 5)
        psi = rng.choice(_pool(ell))
        sites = [(i, j) for (i, j) in psi.removable_roots()
                 if j < ell and psi.has_ceiling(j) and psi.has_wall(j)]
        if not sites:
            continue
        i, j = rng.choice(sites)
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[j] = m[j - 1] + 1
        gam = [rng.randint(-1, 3) for _ in range(ell)]
        gam[j] = gam[j - 1]
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(gam))
        _check(rep, _desc(idx, root=[i, j]), evaluate(idx),
               evaluate(KatalanIndex(psi.remove((i, j)), idx.mult, idx.gamma)))
    return rep


def staircase(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "staircase",
        "j in M, ceiling+wall at j, m(j+1)=m(j), g_j=g_{j+1}: "
        "K = K(M-j); with removable (i,j) also K = K(Psi-(i,j); M-j)")
    fix_psi = RootIdeal(4, (2, 2, 0, 0))
    fix = KatalanIndex(fix_psi, Multiset(4, (0, 0, 2, 2)), (4, 3, 2, 2))
    _check(rep, _desc(fix, case="fixture-multiset"), evaluate(fix),
           evaluate(KatalanIndex(fix_psi, Multiset(4, (0, 0, 1, 2)),
                                 fix.gamma)))
    _check(rep, _desc(fix, case="fixture-both"), evaluate(fix),
           evaluate(KatalanIndex(RootIdeal(4, (2, 1, 0, 0)),
                                 Multiset(4, (0, 0, 1, 2)), fix.gamma)))
    rng = random.Random(seed)
    while rep.checked < count:
        ell = rng.randint(2, 5)
        psi = rng.choice(_pool(ell))
        sites = [j for j in range(1, ell)
                 if psi.has_ceiling(j) and psi.has_wall(j)]
        if not sites:
            continue
        j = rng.choice(sites)
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[j - 1] = max(1, m[j - 1])
        m[j] = m[j - 1]
        gam = [rng.randint(-1, 3) for _ in range(ell)]
        gam[j] = gam[j - 1]
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(gam))
        dropped = idx.mult.remove(j)
        _check(rep, _desc(idx, j=j), evaluate(idx),
               evaluate(KatalanIndex(psi, dropped, idx.gamma)))
        rem = [r for r in psi.removable_roots() if r[1] == j]
        if rem:
            _check(rep, _desc(idx, j=j, root=list(rem[0])), evaluate(idx),
                   evaluate(KatalanIndex(psi.remove(rem[0]), dropped,
                                         idx.gamma)))
    return rep


@lru_cache(maxsize=None)
def _straightening_sites(ell: int) -> tuple:
    """(psi, y, z) for the mirror straightening lemma: same bounce path,
    removable root in column y+1 whose partner in column y is addable,
    mirrors along the path, wall at z."""
    out = []
    for psi in _pool(ell):
        addable = set(psi.addable_roots())
        for y in range(1, ell):
            if not psi.has_up(y + 1):
                continue
            row = psi.up(y + 1)
            if (row, y) not in addable:
                continue
            for z in psi.downpath(y):
                if z >= ell or not psi.has_wall(z):
                    continue
                seg = _segment(psi, y, psi.up(z)) if z > y else []
                if all(psi.has_mirror(x) for x in seg):
                    out.append((psi, y, z))
    return tuple(out)


def mirror_straightening(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "mirror-straightening",
        "K(Psi;M;mu) = K(Psi+a; M+(y+1); mu+e_{up(y+1)}-e_{z+1}) "
        "+ K(Psi;M;mu-e_{z+1})")
    fix = KatalanIndex(RootIdeal(6, (4, 2, 1, 0, 0, 0)),
                       Multiset(6, (0, 0, 0, 1, 1, 2)), (5, 4, 4, 4, 3, 4))
    _check_mirror_straightening(rep, fix, 2, 5, case="fixture")
    rng = random.Random(seed)
    sites = [s for ell in range(2, 7) for s in _straightening_sites(ell)]
    while rep.checked < count:
        psi, y, z = rng.choice(sites)
        ell = psi.ell
        m = [rng.randint(0, 2) for _ in range(ell)]
        m[y] = m[y - 1]
        for x in _segment(psi, psi.down(y), z) if z > y else []:
            m[x] = m[x - 1] + 1
        mu = [rng.randint(-1, 3) for _ in range(ell)]
        for x in _segment(psi, y, psi.up(z)) if z > y else []:
            mu[x] = mu[x - 1]
        mu[z] = mu[z - 1] + 1
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(mu))
        _check_mirror_straightening(rep, idx, y, z)
    return rep


def _check_mirror_straightening(rep: FamilyReport, idx: KatalanIndex,
                                y: int, z: int, case: str = "generated") -> None:
    psi = idx.psi
    row = psi.up(y + 1)
    added = KatalanIndex(psi.add((row, y)), idx.mult.union([y + 1]),
                         _bump(idx.gamma, {row: 1, z + 1: -1}))
    kept = KatalanIndex(psi, idx.mult, _bump(idx.gamma, {z + 1: -1}))
    _check(rep, _desc(idx, y=y, z=z, case=case), evaluate(idx),
           evaluate(added) + evaluate(kept))


@lru_cache(maxsize=None)
def _diagonal_sites(ell: int) -> tuple:
    """(psi, x, y, z) for diagonal removal: the whole diagonal through (x,y)
    up to column z-1 is removable, ceiling at z-1,z, wall in rows y..z."""
    out = []
    for psi in _pool(ell):
        removable = set(psi.removable_roots())
        for x in range(1, ell):
            for y in range(x + 1, ell + 1):
                for z in range(y + 1, ell + 1):
                    diag = diagonal(x, y, z - 1, ell)
                    if not set(diag) <= removable:
                        continue
                    if not psi.has_ceiling(z - 1):
                        continue
                    if len(set(psi.rows[y - 1:z])) != 1:
                        continue
                    out.append((psi, x, y, z))
    return tuple(out)


def diagonal_removal(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "diagonal-removal",
        "removable diagonal D to column z-1 with matching multiset chain: "
        "K(Psi;M;g) = K(Psi - D; M - L(D); g)")
    rng = random.Random(seed)
    sites = [s for ell in range(3, 7) for s in _diagonal_sites(ell)]
    while rep.checked < count:
        psi, x, y, z = rng.choice(sites)
        ell = psi.ell
        diag = diagonal(x, y, z - 1, ell)
        m = [rng.randint(0, 1) for _ in range(ell)]
        m[y - 1] = max(1, m[y - 1])
        for col in range(y + 1, z):
            m[col - 1] = m[y - 1] + (col - y)
        m[z - 1] = m[z - 2]
        gam = [rng.randint(-1, 3) for _ in range(ell)]
        for t in range(y, z + 1):
            gam[t - 1] = gam[y - 1]
        idx = KatalanIndex(psi, Multiset(ell, tuple(m)), tuple(gam))
        rows = list(psi.rows)
        for (i, _) in diag:
            rows[i - 1] -= 1
        small_mult = idx.mult
        for (_, j) in diag:
            small_mult = small_mult.remove(j)
        small = KatalanIndex(RootIdeal(ell, tuple(rows)), small_mult,
                             idx.gamma)
        _check(rep, _desc(idx, x=x, y=y, z=z), evaluate(idx), evaluate(small))
    return rep


# -- k-Schur index families -------------------------------------------------

def _pieri_straightening_instance(rep: FamilyReport, k: int, lam: tuple,
                                  s_set: tuple, case_tag: str) -> None:
    m = len(lam)
    ell = max(s_set)
    mu = list(lam) + [0] * (ell - m)
    for j in s_set:
        mu[j - 1] += 1
    mu = tuple(mu)
    psi = delta_k(k, ell, mu)
    low = Multiset.from_ideal(delta_k(k + 1, ell, mu))
    j = min(s_set)
    idx = KatalanIndex(psi, low.union(s_set), mu)
    lhs = evaluate(idx)
    top_prev = psi.top(j - 1)
    top_j = psi.top(j)
    rest = tuple(t for t in s_set if t != j)
    desc = {"k": k, "lam": list(lam), "S": list(s_set), "case": case_tag}
    if top_prev > top_j:
        y = top_prev
        nu = _bump(mu, {psi.up(y + 1): 1, j: -1})
        rhs_idx = KatalanIndex(delta_k(k, ell, nu),
                               Multiset.from_ideal(delta_k(k + 1, ell, nu))
                               .union(rest), nu)
        _check(rep, {**desc, "branch": "swap"}, lhs, evaluate(rhs_idx))
    elif top_j > top_prev + 1:
        rhs_idx = KatalanIndex(psi, low.union(rest), _bump(mu, {j: -1}))
        _check(rep, {**desc, "branch": "negate"}, lhs,
               SymFunc.zero() - evaluate(rhs_idx))
    else:
        _check(rep, {**desc, "branch": "vanish"}, lhs, SymFunc.zero())


def pieri_straightening(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "pieri-straightening",
        "K(D^k(mu); L(D^{k+1}(mu)) + S; mu) straightens by the bounce tops "
        "of rows j-1, j")
    for lam, s_set in [((3, 2, 2, 2), (6,)), ((3, 3, 2, 2), (6,)),
                       ((3, 1, 1, 1), (7,))]:
        _pieri_straightening_instance(rep, 3, lam, s_set, "fixture")
    rng = random.Random(seed)
    while rep.checked < count:
        k = rng.randint(2, 4)
        lams = [p for p in kbounded_partitions(k, 7) if p and len(p) <= 3]
        lam = rng.choice(lams)
        m = len(lam)
        start = m + 2 + rng.randint(0, 1)
        width = rng.randint(1, min(k - 1, 2) + 1)
        cols = sorted(rng.sample(range(start, start + min(k - 1, 3) + 1),
                                 min(width, min(k - 1, 3) + 1)))
        _pieri_straightening_instance(rep, k, lam, tuple(cols), "generated")
    return rep


def kbounded(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport("kbounded",
                       "maxband(Psi,g) <= k implies every h-part of K <= k")
    rng = random.Random(seed)
    while rep.checked < count:
        idx = _random_index(rng, max_ell=4, lo=0, hi=3)
        band = idx.psi.maxband(idx.gamma)
        if band < 0:
            continue
        rep.checked += 1
        val = evaluate(idx)
        if not val.is_k_bounded(band):
            rep.failures.append(_desc(idx, maxband=band,
                                      value=symfunc_to_json(val)))
    return rep


def eperp(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport(
        "eperp",
        "e_s-perp K(Psi;M;g) = sum over s-subsets S of K(Psi;M;g-e_S)")
    rng = random.Random(seed)
    while rep.checked < count:
        idx = _random_index(rng, max_ell=4, lo=-1, hi=3, max_mult=1)
        s = rng.randint(1, idx.ell)
        lhs = e_perp(s, evaluate(idx))
        rhs = SymFunc.zero()
        for subset in itertools.combinations(range(1, idx.ell + 1), s):
            rhs = rhs + evaluate(KatalanIndex(
                idx.psi, idx.mult, _bump(idx.gamma, {t: -1 for t in subset})))
        _check(rep, _desc(idx, s=s), lhs, rhs)
    return rep


def catalan_h_agrees(count: int = 500, seed: int = 0) -> FamilyReport:
    rep = FamilyReport("catalan-h",
                       "H(Psi;g) = K(Psi; L(full staircase); g)")
    rng = random.Random(seed)
    while rep.checked < count:
        ell = rng.randint(1, 4)
        psi = rng.choice(_pool(ell))
        gam = tuple(rng.randint(-1, 3) for _ in range(ell))
        full = Multiset.from_ideal(RootIdeal.full(ell))
        _check(rep, {"psi": psi.to_json(), "gamma": list(gam)},
               catalan_H(psi, gam),
               evaluate(KatalanIndex(psi, full, gam)))
    return rep


FAMILIES = {
    "specializations": specializations,
    "det-vs-raise": det_vs_raise,
    "root-expansions": root_expansions,
    "straightening": straightening,
    "zero-lemma": zero_lemma,
    "gen-pascal": gen_pascal,
    "concatenation": concatenation,
    "sliding": sliding,
    "mirror-base": mirror_base,
    "mirror-lemma": mirror_lemma,
    "baby-staircase": baby_staircase,
    "staircase": staircase,
    "mirror-straightening": mirror_straightening,
    "diagonal-removal": diagonal_removal,
    "pieri-straightening": pieri_straightening,
    "kbounded": kbounded,
    "eperp": eperp,
    "catalan-h": catalan_h_agrees,
}
