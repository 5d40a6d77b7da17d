"""Affine symmetric group elements, 0-Hecke products, and cores.

AffinePerm stores the window w(1)..w(n) for n = k+1; all other data
(length, descents, reduced words) is derived from it.  Cores carry their
residue combinatorics, and the translation maps between k-bounded
partitions, Grassmannian elements, and cores live here as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import (FullSupport, InvalidWindow, MismatchedRank, NotACore,
                     NotKBounded)
from .partitions import Partition

Word = tuple[int, ...]


@dataclass(frozen=True)
class AffinePerm:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise MismatchedRank("window rank must be at least 2")
        if len(self.window) != self.n:
            raise MismatchedRank("window length must equal n")
        if sorted(v % self.n for v in self.window) != list(range(self.n)):
            raise InvalidWindow("window entries must be distinct mod n")
        if sum(self.window) != self.n * (self.n + 1) // 2:
            raise InvalidWindow("window entries must sum to n(n+1)/2")

    @classmethod
    def identity(cls, n: int) -> "AffinePerm":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "AffinePerm":
        return cls.identity(n).times_s(i)

    @property
    def k(self) -> int:
        return self.n - 1

    def apply(self, i: int) -> int:
        """Value w(i) of the extended bijection Z -> Z."""
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def mul(self, other: "AffinePerm") -> "AffinePerm":
        if self.n != other.n:
            raise MismatchedRank("cannot multiply different ranks")
        return AffinePerm(self.n, tuple(self.apply(v) for v in other.window))

    def inverse(self) -> "AffinePerm":
        inv = [0] * self.n
        for pos, val in enumerate(self.window, 1):
            q, r = divmod(val - 1, self.n)
            inv[r] = pos - q * self.n
        return AffinePerm(self.n, tuple(inv))

    def times_s(self, i: int) -> "AffinePerm":
        """Right product w s_i: swap the entries in positions i, i+1."""
        i %= self.n
        win = list(self.window)
        if i == 0:
            win[0] = self.window[-1] - self.n
            win[-1] = self.window[0] + self.n
        else:
            win[i - 1], win[i] = win[i], win[i - 1]
        return AffinePerm(self.n, tuple(win))

    def s_times(self, i: int) -> "AffinePerm":
        """Left product s_i w: swap the values i, i+1 mod n."""
        i %= self.n
        nxt = (i + 1) % self.n

        def act(v: int) -> int:
            r = v % self.n
            if r == i:
                return v + 1
            if r == nxt:
                return v - 1
            return v

        return AffinePerm(self.n, tuple(act(v) for v in self.window))

    def length(self) -> int:
        return _length(self.n, self.window)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    def has_right_descent(self, i: int) -> bool:
        return self.apply(i) > self.apply(i + 1)

    def right_descents(self) -> list[int]:
        return [i for i in range(self.n) if self.has_right_descent(i)]

    def left_descents(self) -> list[int]:
        return self.inverse().right_descents()

    def reduced_word(self) -> Word:
        """Strip the smallest right descent until the identity remains."""
        w = self
        out = []
        while True:
            ds = w.right_descents()
            if not ds:
                break
            i = min(ds)
            out.append(i)
            w = w.times_s(i)
        return tuple(reversed(out))

    def to_json(self) -> dict:
        return {"k": self.n - 1, "window": list(self.window)}

    @classmethod
    def from_json(cls, payload: dict) -> "AffinePerm":
        return cls(payload["k"] + 1, tuple(payload["window"]))


@lru_cache(maxsize=None)
def _length(n: int, window: tuple[int, ...]) -> int:
    total = 0
    for a in range(n):
        for b in range(a + 1, n):
            total += abs((window[b] - window[a]) // n)
    return total


def word_of_partition(k: int, lam: Partition) -> Word:
    """Row r contributes letters lam_r - r down to 1 - r, rows read bottom up."""
    if any(p > k for p in lam):
        raise NotKBounded(f"partition has a part exceeding {k}")
    n = k + 1
    word = []
    for r in range(len(lam), 0, -1):
        word.extend(c % n for c in range(lam[r - 1] - r, -r, -1))
    return tuple(word)


def perm_of_word(k: int, word) -> AffinePerm:
    w = AffinePerm.identity(k + 1)
    for i in word:
        w = w.times_s(i)
    return w


def perm_of_partition(k: int, lam: Partition) -> AffinePerm:
    word = word_of_partition(k, lam)
    w = perm_of_word(k, word)
    assert w.length() == sum(lam)
    return w


def is_grassmannian(w: AffinePerm) -> bool:
    return not any(w.has_right_descent(i) for i in range(1, w.n))


@lru_cache(maxsize=None)
def _bruhat_leq(n: int, uw: tuple, ww: tuple) -> bool:
    if uw == ww:
        return True
    u = AffinePerm(n, uw)
    w = AffinePerm(n, ww)
    lu = u.length()
    lw = w.length()
    if lu >= lw:
        return False
    i = next(i for i in range(n) if w.s_times(i).length() < lw)
    siw = w.s_times(i)
    siu = u.s_times(i)
    if siu.length() < lu:
        return _bruhat_leq(n, siu.window, siw.window)
    return _bruhat_leq(n, uw, siw.window)


def bruhat_leq(u: AffinePerm, w: AffinePerm) -> bool:
    if u.n != w.n:
        raise MismatchedRank("Bruhat comparison needs equal ranks")
    return _bruhat_leq(u.n, u.window, w.window)


@dataclass(frozen=True)
class SignedHecke:
    sign: int
    perm: AffinePerm | None

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise InvalidWindow("sign must be -1, 0, or +1")
        if (self.sign == 0) != (self.perm is None):
            raise InvalidWindow("zero element has no permutation")

    @classmethod
    def zero(cls) -> "SignedHecke":
        return cls(0, None)

    @classmethod
    def of(cls, perm: AffinePerm, sign: int = 1) -> "SignedHecke":
        return cls(sign, perm)

    def is_zero(self) -> bool:
        return self.sign == 0

    def negate(self) -> "SignedHecke":
        if self.is_zero():
            return self
        return SignedHecke(-self.sign, self.perm)


def hecke_product(word, start: SignedHecke) -> SignedHecke:
    """Apply T_i for the letters of word right to left."""
    cur = start
    if cur.is_zero():
        return cur
    for i in reversed(tuple(word)):
        w = cur.perm
        sw = w.s_times(i)
        if sw.length() > w.length():
            cur = SignedHecke(cur.sign, sw)
        else:
            cur = SignedHecke(-cur.sign, w)
    return cur


def hecke_of_word(k: int, word) -> SignedHecke:
    return hecke_product(word, SignedHecke.of(AffinePerm.identity(k + 1)))


@dataclass(frozen=True)
class Core:
    kplus1: int
    shape: tuple[int, ...]

    def __post_init__(self):
        if self.kplus1 < 2:
            raise MismatchedRank("kplus1 must be at least 2")
        if any(self.shape[i] < self.shape[i + 1]
               for i in range(len(self.shape) - 1)) \
                or (self.shape and self.shape[-1] <= 0):
            raise NotACore("shape must be a partition without trailing zeros")
        for r in range(1, len(self.shape) + 1):
            for c in range(1, self.shape[r - 1] + 1):
                if self.hook(r, c) == self.kplus1:
                    raise NotACore(
                        f"cell ({r},{c}) has hook length {self.kplus1}")

    def length(self) -> int:
        return len(self.shape)

    def size(self) -> int:
        return sum(self.shape)

    def row(self, a: int) -> int:
        return self.shape[a - 1] if a <= len(self.shape) else 0

    def hook(self, r: int, c: int) -> int:
        arm = self.shape[r - 1] - c
        leg = sum(1 for j in range(r, len(self.shape)) if self.shape[j] >= c)
        return arm + leg + 1

    def residue(self, r: int, c: int) -> int:
        return (c - r) % self.kplus1

    def row_residue(self, a: int) -> int:
        return (self.row(a) - a) % self.kplus1

    def to_json(self) -> dict:
        return {"kplus1": self.kplus1, "shape": list(self.shape)}

    @classmethod
    def from_json(cls, payload: dict) -> "Core":
        return cls(payload["kplus1"], tuple(payload["shape"]))


def corners(core: Core, i: int) -> dict:
    """Rows holding addable and removable corners of residue i."""
    n = core.kplus1
    i %= n
    shape = core.shape
    ell = len(shape)
    addable = []
    removable = []
    for r in range(1, ell + 2):
        cur = core.row(r)
        if (r == 1 or shape[r - 2] > cur) and (cur + 1 - r) % n == i:
            addable.append(r)
        if r <= ell and core.row(r + 1) < cur and (cur - r) % n == i:
            removable.append(r)
    return {"addable": addable, "removable": removable}


def core_action(core: Core, i: int) -> Core:
    """s_i acts by adding all addable i-corners, else removing removable ones."""
    cs = corners(core, i)
    shape = list(core.shape)
    if cs["addable"]:
        for r in cs["addable"]:
            if r == len(shape) + 1:
                shape.append(1)
            else:
                shape[r - 1] += 1
    elif cs["removable"]:
        for r in cs["removable"]:
            shape[r - 1] -= 1
        while shape and shape[-1] == 0:
            shape.pop()
    return Core(core.kplus1, tuple(shape))


def core_of(k: int, lam: Partition) -> Core:
    word = word_of_partition(k, lam)
    core = Core(k + 1, ())
    for i in reversed(word):
        core = core_action(core, i)
    assert partition_of(core) == tuple(p for p in lam if p)
    return core


def partition_of(core: Core) -> Partition:
    """Row r counts the cells of row r with hook length at most k."""
    k = core.kplus1 - 1
    return tuple(
        sum(1 for c in range(1, core.shape[r - 1] + 1)
            if core.hook(r, c) <= k)
        for r in range(1, len(core.shape) + 1))


def row_residue(core: Core, a: int) -> int:
    return core.row_residue(a)


def cyclic_word(k: int, a_set, direction: str = "inc") -> Word:
    """Canonical word listing a_set cyclically starting after the smallest gap."""
    n = k + 1
    elems = {x % n for x in a_set}
    if len(elems) >= n:
        raise FullSupport("a proper subset of residues is required")
    if direction not in ("inc", "dec"):
        raise ValueError("direction must be 'inc' or 'dec'")
    gap = min(g for g in range(n) if g not in elems)
    order = [(gap + t) % n for t in range(1, n)]
    word = tuple(x for x in order if x in elems)
    if direction == "dec":
        word = tuple(reversed(word))
    return word


def enumerate_cyclic(k: int, r: int, direction: str = "inc"):
    for combo in itertools.combinations(range(k + 1), r):
        yield cyclic_word(k, combo, direction)


def rm(k: int, s_set) -> frozenset:
    return frozenset((-s) % (k + 1) for s in s_set)


def rm_inverse(ell: int, k: int, r_set) -> frozenset:
    """Preimage of a residue set: the largest run below -ell stays above ell."""
    n = k + 1
    rs = {x % n for x in r_set}
    if len(rs) > k:
        raise FullSupport("at most k residues allowed")
    b = 0
    while b < n and (-(ell + b + 1)) % n in rs:
        b += 1
    out = set()
    for x in rs:
        i = (-x - ell) % n or n
        out.add(ell + i if i <= b else ell + i - n)
    result = frozenset(out)
    assert rm(k, result) == frozenset(rs)
    return result


def tau_word(k: int, word) -> Word:
    return tuple((-i) % (k + 1) for i in word)


def tau(obj, k: int | None = None):
    """Apply the index flip i -> k+1-i to a word or an affine permutation."""
    if isinstance(obj, AffinePerm):
        kk = obj.n - 1
        return perm_of_word(kk, tau_word(kk, obj.reduced_word()))
    if k is None:
        raise ValueError("k is required when flipping a bare word")
    return tau_word(k, obj)


def partition_of_grassmannian(w: AffinePerm) -> Partition:
    """Recover the partition of a Grassmannian element through the core action."""
    core = Core(w.n, ())
    for i in reversed(w.reduced_word()):
        core = core_action(core, i)
    return partition_of(core)


def k_conjugate(k: int, mu: Partition) -> Partition:
    if any(p > k for p in mu):
        raise NotKBounded(f"partition has a part exceeding {k}")
    word = word_of_partition(k, mu)
    v = perm_of_word(k, tau_word(k, word))
    return partition_of_grassmannian(v)


def w0(k: int) -> tuple[int, ...]:
    """Longest element of the finite symmetric group, one line notation."""
    return tuple(range(k + 1, 0, -1))


def _check_finite(k: int, w) -> tuple[int, ...]:
    n = k + 1
    w = tuple(w)
    if sorted(w) != list(range(1, n + 1)):
        raise InvalidWindow("expected a finite permutation in one line form")
    return w


def zeta(k: int, w) -> Partition:
    """Partition whose i-th column is binom(k+1-i,2) + Inv_i(w0 w)."""
    n = k + 1
    w = _check_finite(k, w)
    flip = tuple(n + 1 - v for v in w)
    inv = tuple(sum(1 for b in range(a + 1, n) if flip[b] < flip[a])
                for a in range(n))
    colvec = tuple(comb(n - i, 2) + inv[i - 1] for i in range(1, n + 1))
    height = colvec[0] if colvec else 0
    return tuple(sum(1 for c in colvec if c >= r)
                 for r in range(1, height + 1))


def irreducible_reduce(k: int, mu: Partition) -> Partition:
    """Delete k-rectangles: keep the part count of i modulo k+1-i."""
    out = []
    for part in sorted(set(mu), reverse=True):
        if part <= 0:
            continue
        if part > k:
            raise NotKBounded(f"partition has a part exceeding {k}")
        keep = mu.count(part) % (k + 1 - part)
        out.extend([part] * keep)
    return tuple(out)


def theta(k: int, w) -> Partition:
    return irreducible_reduce(k, zeta(k, w))
