"""Root ideals of the type-A staircase and column multisets.

The positive roots of rank ell are the pairs Delta+ = {(i, j) : 1 <= i < j <=
ell}, drawn as the strictly-upper cells of an ell x ell grid.  A root ideal is
an upper order ideal for the order (a,b) <= (c,d) iff a >= c and b <= d, so
each row occupies a suffix of its columns and the per-row counts r_i weakly
decrease with r_i <= ell - i.  The counts are the stored representation:
(i, j) is a root exactly when j > ell - r_i.

A Multiset records nonnegative column multiplicities m(1..ell); L(Psi) is the
multiset of column indices of a root ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (FullSupport, InvalidIdeal, InvalidMultiset, InvalidWeight,
                     MismatchedRank, NotSamePath)

Root = tuple[int, int]


@dataclass(frozen=True)
class RootIdeal:
    ell: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.ell < 0 or len(self.rows) != self.ell:
            raise InvalidIdeal(f"need {self.ell} row counts, got {self.rows}")
        for i, r in enumerate(self.rows, start=1):
            if not 0 <= r <= self.ell - i:
                raise InvalidIdeal(f"row {i} count {r} outside [0, {self.ell - i}]")
        if any(a < b for a, b in zip(self.rows, self.rows[1:])):
            raise InvalidIdeal(f"row counts {self.rows} not weakly decreasing")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, ell: int) -> "RootIdeal":
        return cls(ell, (0,) * ell)

    @classmethod
    def full(cls, ell: int) -> "RootIdeal":
        return cls(ell, tuple(ell - i for i in range(1, ell + 1)))

    @classmethod
    def from_roots(cls, ell: int, roots: Iterable[Root]) -> "RootIdeal":
        rows = [0] * ell
        seen = set()
        for (i, j) in roots:
            if not 1 <= i < j <= ell:
                raise InvalidIdeal(f"({i},{j}) is not a positive root of rank {ell}")
            seen.add((i, j))
            rows[i - 1] += 1
        psi = cls(ell, tuple(rows))
        if set(psi.roots()) != seen:
            raise InvalidIdeal("root set is not an upper order ideal")
        return psi

    # -- membership and iteration ------------------------------------------

    def __contains__(self, root: Root) -> bool:
        i, j = root
        return 1 <= i < j <= self.ell and j > self.ell - self.rows[i - 1]

    def roots(self) -> Iterator[Root]:
        for i, r in enumerate(self.rows, start=1):
            for j in range(self.ell - r + 1, self.ell + 1):
                yield (i, j)

    def complement_roots(self) -> Iterator[Root]:
        """Roots of Delta+ outside the ideal, row by row."""
        for i, r in enumerate(self.rows, start=1):
            for j in range(i + 1, self.ell - r + 1):
                yield (i, j)

    def size(self) -> int:
        return sum(self.rows)

    def col_count(self, j: int) -> int:
        """Number of roots in column j."""
        return sum(1 for i in range(1, j) if j > self.ell - self.rows[i - 1])

    def nonroot_count(self, i: int) -> int:
        """nr(Psi)_i = number of nonroots (i, j) to the right of the diagonal."""
        return (self.ell - i) - self.rows[i - 1]

    def maxband(self, gamma: Sequence[int]) -> int:
        """max over rows of gamma_i + nr(Psi)_i."""
        if len(gamma) != self.ell:
            raise MismatchedRank(f"weight length {len(gamma)} != ell {self.ell}")
        if self.ell == 0:
            return 0
        return max(gamma[i - 1] + self.nonroot_count(i) for i in range(1, self.ell + 1))

    # -- removable / addable ----------------------------------------------

    def removable_roots(self) -> list[Root]:
        """Roots whose removal leaves an upper order ideal.

        These are the leftmost roots (i, ell - r_i + 1) of rows with
        r_i > r_{i+1} (taking r_{ell+1} = 0).
        """
        out = []
        for i in range(1, self.ell + 1):
            r = self.rows[i - 1]
            nxt = self.rows[i] if i < self.ell else 0
            if r > nxt:
                out.append((i, self.ell - r + 1))
        return out

    def addable_roots(self) -> list[Root]:
        """Nonroots whose addition gives an upper order ideal."""
        out = []
        for i in range(1, self.ell + 1):
            r = self.rows[i - 1]
            if r >= self.ell - i:
                continue
            if i == 1 or self.rows[i - 2] >= r + 1:
                out.append((i, self.ell - r))
        return out

    def remove(self, root: Root) -> "RootIdeal":
        if root not in self.removable_roots():
            raise InvalidIdeal(f"{root} is not removable from {self.rows}")
        i = root[0]
        rows = list(self.rows)
        rows[i - 1] -= 1
        return RootIdeal(self.ell, tuple(rows))

    def add(self, root: Root) -> "RootIdeal":
        if root not in self.addable_roots():
            raise InvalidIdeal(f"{root} is not addable to {self.rows}")
        i = root[0]
        rows = list(self.rows)
        rows[i - 1] += 1
        return RootIdeal(self.ell, tuple(rows))

    def rc(self) -> "RootIdeal":
        """Strip every removable root at once."""
        removable = {r[0] for r in self.removable_roots()}
        rows = tuple(r - 1 if i + 1 in removable else r
                     for i, r in enumerate(self.rows))
        return RootIdeal(self.ell, rows)

    def rc_power(self, a: int) -> "RootIdeal":
        out = self
        for _ in range(a):
            out = out.rc()
        return out

    # -- bounce structure --------------------------------------------------

    def down(self, x: int) -> int:
        """Column of the removable root in row x; FullSupport if none."""
        for (i, j) in self.removable_roots():
            if i == x:
                return j
        raise FullSupport(f"row {x} has no removable root in {self.rows}")

    def up(self, x: int) -> int:
        """Row of the removable root in column x; FullSupport if none."""
        for (i, j) in self.removable_roots():
            if j == x:
                return i
        raise FullSupport(f"column {x} has no removable root in {self.rows}")

    def has_down(self, x: int) -> bool:
        return any(i == x for i, _ in self.removable_roots())

    def has_up(self, x: int) -> bool:
        return any(j == x for _, j in self.removable_roots())

    def top(self, x: int) -> int:
        """Minimum of the bounce path through x."""
        while self.has_up(x):
            x = self.up(x)
        return x

    def uppath(self, x: int) -> list[int]:
        """x, up(x), up(up(x)), ... down to the top of the path."""
        out = [x]
        while self.has_up(out[-1]):
            out.append(self.up(out[-1]))
        return out

    def downpath(self, x: int) -> list[int]:
        out = [x]
        while self.has_down(out[-1]):
            out.append(self.down(out[-1]))
        return out

    def bpath(self, a: int, b: int) -> list[int]:
        """The segment of the common bounce path from a to b inclusive."""
        if a > b:
            a, b = b, a
        path = self.downpath(a)
        if b not in path:
            raise NotSamePath(f"{a} and {b} are not on a common bounce path")
        return path[:path.index(b) + 1]

    def same_path(self, a: int, b: int) -> bool:
        return self.top(a) == self.top(b)

    def bounce_paths(self) -> list[list[int]]:
        """All maximal bounce paths, ordered by their top row."""
        tops = [x for x in range(1, self.ell + 1) if not self.has_up(x)]
        return [self.downpath(t) for t in sorted(tops)]

    def path_id(self, x: int) -> int:
        """Index of the bounce path containing x, in bounce_paths() order."""
        for idx, path in enumerate(self.bounce_paths()):
            if x in path:
                return idx
        raise FullSupport(f"row {x} outside [1, {self.ell}]")

    def structure(self, x: int) -> dict:
        """Bounce data at x; down and up are None when undefined."""
        return {
            "down": self.down(x) if self.has_down(x) else None,
            "up": self.up(x) if self.has_up(x) else None,
            "top": self.top(x),
            "uppath": self.uppath(x),
            "path_id": self.path_id(x),
        }

    # -- shape predicates --------------------------------------------------

    def has_ceiling(self, c: int, d: int = 1) -> bool:
        """Columns c, c+1, ..., c+d all have the same number of roots."""
        counts = {self.col_count(j) for j in range(c, c + d + 1)}
        return len(counts) == 1

    def has_wall(self, r: int, d: int = 1) -> bool:
        """Rows r, ..., r+d all have the same number of roots."""
        if r + d > self.ell:
            return False
        return len(set(self.rows[r - 1:r + d])) == 1

    def has_mirror(self, r: int) -> bool:
        """Rows r, r+1 have removable roots (r, c), (r+1, c+1) with c > r+1."""
        if not (self.has_down(r) and self.has_down(r + 1)):
            return False
        c = self.down(r)
        return self.down(r + 1) == c + 1 and c > r + 1

    # -- surgery -----------------------------------------------------------

    def restrict(self, new_ell: int) -> "RootIdeal":
        """Keep roots with both coordinates at most new_ell."""
        if new_ell > self.ell:
            raise InvalidIdeal(f"cannot restrict rank {self.ell} to {new_ell}")
        drop = self.ell - new_ell
        rows = tuple(max(0, self.rows[i] - drop) for i in range(new_ell))
        return RootIdeal(new_ell, rows)

    def concat(self, other: "RootIdeal") -> "RootIdeal":
        """Psi 'join' Psi': the complement is the disjoint union of the two
        complements, the second shifted by ell."""
        big = self.ell + other.ell
        nonroots = [self.nonroot_count(i) for i in range(1, self.ell + 1)]
        nonroots += [other.nonroot_count(i) for i in range(1, other.ell + 1)]
        rows = tuple((big - i) - nonroots[i - 1] for i in range(1, big + 1))
        return RootIdeal(big, rows)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"ell": self.ell, "rows": list(self.rows)}

    @classmethod
    def from_json(cls, data: dict) -> "RootIdeal":
        return cls(int(data["ell"]), tuple(int(r) for r in data["rows"]))


@dataclass(frozen=True)
class Multiset:
    ell: int
    mult: tuple[int, ...]

    def __post_init__(self):
        if len(self.mult) != self.ell:
            raise InvalidMultiset(f"need {self.ell} multiplicities, got {self.mult}")
        if any(m < 0 for m in self.mult):
            raise InvalidMultiset(f"negative multiplicity in {self.mult}")

    @classmethod
    def empty(cls, ell: int) -> "Multiset":
        return cls(ell, (0,) * ell)

    @classmethod
    def from_ideal(cls, psi: RootIdeal) -> "Multiset":
        """L(Psi): each root contributes its column index."""
        return cls(psi.ell, tuple(psi.col_count(j) for j in range(1, psi.ell + 1)))

    @classmethod
    def from_items(cls, ell: int, items: Iterable[int]) -> "Multiset":
        mult = [0] * ell
        for j in items:
            if not 1 <= j <= ell:
                raise InvalidMultiset(f"column {j} outside [1, {ell}]")
            mult[j - 1] += 1
        return cls(ell, tuple(mult))

    def count(self, j: int) -> int:
        return self.mult[j - 1] if 1 <= j <= self.ell else 0

    def items(self) -> Iterator[int]:
        """Columns with multiplicity, in increasing order."""
        for j, m in enumerate(self.mult, start=1):
            for _ in range(m):
                yield j

    def total(self) -> int:
        return sum(self.mult)

    def union(self, other: "Multiset | Iterable[int]") -> "Multiset":
        if isinstance(other, Multiset):
            if other.ell != self.ell:
                raise MismatchedRank(f"{other.ell} != {self.ell}")
            extra = other.mult
            return Multiset(self.ell, tuple(a + b for a, b in zip(self.mult, extra)))
        return self.union(Multiset.from_items(self.ell, other))

    def remove(self, j: int, times: int = 1) -> "Multiset":
        if self.count(j) < times:
            raise InvalidMultiset(f"column {j} has multiplicity {self.count(j)}")
        mult = list(self.mult)
        mult[j - 1] -= times
        return Multiset(self.ell, tuple(mult))

    def restrict(self, new_ell: int) -> "Multiset":
        return Multiset(new_ell, self.mult[:new_ell])

    def concat(self, other: "Multiset") -> "Multiset":
        return Multiset(self.ell + other.ell, self.mult + other.mult)

    def to_json(self) -> dict:
        return {"ell": self.ell, "mult": list(self.mult)}

    @classmethod
    def from_json(cls, data: dict) -> "Multiset":
        return cls(int(data["ell"]), tuple(int(m) for m in data["mult"]))


# -- constructions ---------------------------------------------------------

def delta_k(k: int, ell: int, mu: Sequence[int]) -> RootIdeal:
    """Delta^k(mu) = {(i,j) : k - mu_i + i < j}, for mu with mu_i <= k and
    mu_i >= mu_{i+1} - 1.
    """
    mu = tuple(int(m) for m in mu)
    if len(mu) != ell:
        raise MismatchedRank(f"weight length {len(mu)} != ell {ell}")
    for i, m in enumerate(mu):
        if m > k:
            raise InvalidWeight(f"entry {m} exceeds k={k}")
        if i + 1 < ell and m < mu[i + 1] - 1:
            raise InvalidWeight(f"entries {m}, {mu[i + 1]} violate the step bound")
    rows = tuple(max(0, ell - k + mu[i] - (i + 1)) for i in range(ell))
    return RootIdeal(ell, rows)


def diagonal(x: int, y: int, z: int, ell: int) -> list[Root]:
    """D^z_{x,y}: the diagonal through (x, y) truncated to columns y..z."""
    if not (1 <= x < y <= z <= ell):
        raise InvalidIdeal(f"bad diagonal parameters x={x}, y={y}, z={z}")
    return [(x + t, y + t) for t in range(z - y + 1)]


def staircase(x: int, y: int, z: int, h: int, ell: int) -> list[Root]:
    """E^{z,h}_{x,y}: the union of h successive diagonals starting at (x, y)."""
    out: list[Root] = []
    for t in range(h):
        out.extend(diagonal(x + t, y, z, ell))
    return out


def enumerate_ideals(ell: int) -> list[RootIdeal]:
    """All root ideals of rank ell, by lexicographic row counts.

    len(enumerate_ideals(ell)) is the Catalan number C_ell.
    """
    out: list[RootIdeal] = []

    def rec(prefix: list[int]):
        i = len(prefix)
        if i == ell:
            out.append(RootIdeal(ell, tuple(prefix)))
            return
        hi = min(ell - i - 1, prefix[-1] if prefix else ell - 1)
        for r in range(hi + 1):
            rec(prefix + [r])

    rec([])
    return out


def si_action_roots(i: int, roots: Iterable[Root]) -> set[Root]:
    """Swap coordinate values i and i+1 in every root; raw set, may leave
    the staircase."""
    def swap(a: int) -> int:
        if a == i:
            return i + 1
        if a == i + 1:
            return i
        return a

    return {(swap(a), swap(b)) for (a, b) in roots}


def si_action_ideal(i: int, psi: RootIdeal) -> tuple[set[Root], bool]:
    """(raw image, is-it-still-a-root-ideal flag)."""
    image = si_action_roots(i, psi.roots())
    try:
        RootIdeal.from_roots(psi.ell, image)
    except InvalidIdeal:
        return image, False
    return image, True


def si_fixes_ideal(i: int, psi: RootIdeal) -> bool:
    image, ok = si_action_ideal(i, psi)
    return ok and image == set(psi.roots())


def si_action_multiset(i: int, m: Multiset) -> Multiset:
    """New multiset with m'(a) = m(s_i(a))."""
    mult = list(m.mult)
    if 1 <= i < m.ell:
        mult[i - 1], mult[i] = mult[i], mult[i - 1]
    return Multiset(m.ell, tuple(mult))
