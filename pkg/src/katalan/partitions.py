"""Integer partitions and weight vectors as plain tuples.

A partition is a tuple of weakly decreasing positive integers; the empty
partition is ``()``.  A weight is a tuple of arbitrary integers whose length
is significant.  Both are hashable and usable as dict keys, which the rest of
the package relies on heavily.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Partition = tuple[int, ...]
Weight = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Canonical partition: sort descending, drop zeros, reject negatives.

    >>> partition([1, 3, 0, 2])
    (3, 2, 1)
    """
    out = sorted((int(p) for p in parts), reverse=True)
    while out and out[-1] == 0:
        out.pop()
    if out and out[-1] < 0:
        raise ValueError(f"negative part in {parts!r}")
    return tuple(out)


def is_partition(seq: Iterable[int]) -> bool:
    lst = list(seq)
    return all(a >= b for a, b in zip(lst, lst[1:])) and all(p > 0 for p in lst)


def weight(seq: Iterable[int]) -> Weight:
    return tuple(int(x) for x in seq)


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= c) for c in range(1, p[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    """Containment of Young diagrams, inner fits inside outer."""
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def union(p: Partition, q: Partition) -> Partition:
    """Multiset union of parts, sorted back into a partition."""
    return tuple(sorted(p + q, reverse=True))


def pad(p: Partition, length: int) -> Weight:
    if len(p) > length:
        raise ValueError(f"cannot pad {p} to shorter length {length}")
    return p + (0,) * (length - len(p))


def trim(w: Weight) -> Weight:
    """Drop trailing zeros; interior entries are untouched."""
    n = len(w)
    while n and w[n - 1] == 0:
        n -= 1
    return w[:n]


def k_rectangle(k: int, i: int) -> Partition:
    """The rectangle with i rows of length k+1-i, for 1 <= i <= k."""
    if not 1 <= i <= k:
        raise ValueError(f"rectangle index {i} out of range for k={k}")
    return (k + 1 - i,) * i


def is_k_bounded(p: Partition, k: int) -> bool:
    return not p or p[0] <= k


def partitions_of(n: int, max_part: int | None = None,
                  max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest first part first (descending lex)."""
    if n < 0:
        return
    first_cap = n if max_part is None else min(max_part, n)
    if n == 0:
        yield ()
        return
    if max_length == 0 or first_cap == 0:
        return
    rest_len = None if max_length is None else max_length - 1
    for first in range(first_cap, 0, -1):
        for rest in partitions_of(n - first, max_part=first, max_length=rest_len):
            yield (first,) + rest


def partitions_up_to(max_size: int, max_part: int | None = None,
                     max_length: int | None = None) -> list[Partition]:
    """All partitions of size 0..max_size, ordered by (size, reverse-lex)."""
    out: list[Partition] = []
    for n in range(max_size + 1):
        out.extend(partitions_of(n, max_part=max_part, max_length=max_length))
    return out


def kbounded_partitions(k: int, max_size: int,
                        max_length: int | None = None) -> list[Partition]:
    return partitions_up_to(max_size, max_part=k, max_length=max_length)


def hook_length(p: Partition, r: int, c: int) -> int:
    """Hook length of cell (r, c), rows and columns starting at 1."""
    conj = conjugate(p)
    return p[r - 1] - c + conj[c - 1] - r + 1


def term_sort_key(p: Partition) -> tuple:
    """Canonical term order: by degree, then reverse-lex within a degree."""
    return (sum(p), tuple(-part for part in p))


if __name__ == "__main__":
    import doctest

    doctest.testmod()
