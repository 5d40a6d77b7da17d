"""Symmetric functions as exact integer combinations of h-monomials.

Everything lives in Lambda = Z[h_1, h_2, ...], with h_lambda = h_{lambda_1}
h_{lambda_2} ... as the monomial basis.  A SymFunc is a finitely supported map
from partitions to integers with no explicit zero coefficients; coefficients
are arbitrary-precision ints.

The inhomogeneous generators

    k_m^{(r)} = sum_{i=0..m} binom(r+i-1, i) h_{m-i}

(with the generalized binomial, k_m^{(0)} = h_m, and k_m^{(r)} = 0 for m < 0)
drive the dual stable Grothendieck functions

    g_gamma = det( k_{gamma_i + j - i}^{(i-1)} )_{1<=i,j<=ell}

which equal the raising-operator expansion prod_{i<j} (1 - R_ij) k_gamma
applied to k_gamma = k_{gamma_1}^{(0)} ... k_{gamma_ell}^{(ell-1)}.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import NonIntegral, NonUnique, NotInSpan
from .partitions import (Partition, Weight, partition, term_sort_key, weight)

NEG_INF = float("-inf")


def binomial(n: int, i: int) -> int:
    """Generalized binomial n(n-1)...(n-i+1)/i!, defined for any integer n.

    >>> binomial(-2, 2)
    3
    >>> binomial(5, 0)
    1
    """
    if i < 0:
        return 0
    if i == 0:
        return 1
    num = 1
    for t in range(i):
        num *= n - t
    return num // math.factorial(i)


def _merge(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def _insert(p: Partition, part: int) -> Partition:
    """Insert a single positive part into a sorted-descending tuple."""
    lst = list(p)
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] >= part:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, part)
    return tuple(lst)


class SymFunc:
    """Finitely supported Partition -> int mapping in the h-basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, int] | None = None):
        data: dict[Partition, int] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = int(coeff)
                if coeff:
                    data[tuple(key)] = coeff
        self._terms = data

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): 1})

    @classmethod
    def h(cls, gamma: Iterable[int]) -> "SymFunc":
        """h_gamma for an arbitrary integer vector: h_0 = 1, h_d = 0 for d < 0."""
        parts = []
        for d in gamma:
            if d < 0:
                return cls.zero()
            if d > 0:
                parts.append(d)
        return cls({tuple(sorted(parts, reverse=True)): 1})

    @classmethod
    def term(cls, lam: Partition, coeff: int = 1) -> "SymFunc":
        return cls({partition(lam): coeff})

    # -- queries -----------------------------------------------------------

    def coeff(self, lam: Iterable[int]) -> int:
        return self._terms.get(partition(lam), 0)

    def items(self) -> Iterator[tuple[Partition, int]]:
        """Terms in canonical (degree, reverse-lex) order."""
        for key in sorted(self._terms, key=term_sort_key):
            yield key, self._terms[key]

    def support(self) -> list[Partition]:
        return sorted(self._terms, key=term_sort_key)

    def degree(self) -> int | float:
        """Top degree; minus infinity for the zero function."""
        if not self._terms:
            return NEG_INF
        return max(sum(key) for key in self._terms)

    def max_part(self) -> int:
        return max((key[0] for key in self._terms if key), default=0)

    def is_k_bounded(self, k: int) -> bool:
        """True when every h-index appearing is at most k."""
        return self.max_part() <= k

    def homogeneous_component(self, d: int) -> "SymFunc":
        return SymFunc({key: c for key, c in self._terms.items() if sum(key) == d})

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymFunc):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "SymFunc | int") -> "SymFunc":
        if isinstance(other, int):
            other = SymFunc({(): other})
        data = dict(self._terms)
        for key, coeff in other._terms.items():
            new = data.get(key, 0) + coeff
            if new:
                data[key] = new
            else:
                data.pop(key, None)
        out = SymFunc.__new__(SymFunc)
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        out = SymFunc.__new__(SymFunc)
        out._terms = {key: -coeff for key, coeff in self._terms.items()}
        return out

    def __sub__(self, other: "SymFunc | int") -> "SymFunc":
        if isinstance(other, int):
            other = SymFunc({(): other})
        return self + (-other)

    def __rsub__(self, other: int) -> "SymFunc":
        return SymFunc({(): other}) + (-self)

    def __mul__(self, other: "SymFunc | int") -> "SymFunc":
        if isinstance(other, int):
            if not other:
                return SymFunc.zero()
            out = SymFunc.__new__(SymFunc)
            out._terms = {key: coeff * other for key, coeff in self._terms.items()}
            return out
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        data: dict[Partition, int] = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                key = _merge(ka, kb)
                new = data.get(key, 0) + ca * cb
                if new:
                    data[key] = new
                else:
                    del data[key]
        out = SymFunc.__new__(SymFunc)
        out._terms = data
        return out

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if not self._terms:
            return "SymFunc(0)"
        bits = []
        for key, coeff in self.items():
            mono = "1" if not key else "h" + "".join(f"[{p}]" for p in key)
            bits.append(f"{coeff:+d}*{mono}")
        return "SymFunc(" + " ".join(bits) + ")"


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    return f * g


def prod(funcs: Iterable[SymFunc]) -> SymFunc:
    out = SymFunc.one()
    for f in funcs:
        out = out * f
    return out


# -- generators ------------------------------------------------------------

@lru_cache(maxsize=None)
def k_hom(m: int, r: int) -> SymFunc:
    """The generator k_m^{(r)} = sum_i binom(r+i-1, i) h_{m-i}.

    >>> k_hom(1, 1) == SymFunc.h([1]) + 1
    True
    """
    if m < 0:
        return SymFunc.zero()
    data: dict[Partition, int] = {}
    for i in range(m + 1):
        c = binomial(r + i - 1, i)
        if c:
            d = m - i
            data[(d,) if d else ()] = c
    return SymFunc(data)


def kappa(gamma: Sequence[int]) -> SymFunc:
    """k_gamma = k_{gamma_1}^{(0)} k_{gamma_2}^{(1)} ... (zero off the support)."""
    gamma = weight(gamma)
    if any(g < 0 for g in gamma):
        return SymFunc.zero()
    return _kappa_cached(gamma)


@lru_cache(maxsize=200_000)
def _kappa_cached(gamma: Weight) -> SymFunc:
    out = SymFunc.one()
    for i, g in enumerate(gamma):
        if g:
            out = out * k_hom(g, i)
    return out


# -- determinants ----------------------------------------------------------

def schur(gamma: Sequence[int]) -> SymFunc:
    """s_gamma = det(h_{gamma_i + j - i}) for any integer vector gamma."""
    gamma = weight(gamma)
    return _schur_cached(gamma)


@lru_cache(maxsize=None)
def _schur_cached(gamma: Weight) -> SymFunc:
    ell = len(gamma)
    shifts = [gamma[i] - i - 1 for i in range(ell)]  # entry (i,j) = h_{shifts[i]+j}

    # expand along columns; memo on the bitmask of remaining rows
    memo: dict[int, SymFunc] = {}

    def det(mask: int) -> SymFunc:
        if mask == 0:
            return SymFunc.one()
        cached = memo.get(mask)
        if cached is not None:
            return cached
        col = ell - bin(mask).count("1") + 1
        total = SymFunc.zero()
        sign = 1
        for i in range(ell):
            if not mask & (1 << i):
                continue
            d = shifts[i] + col
            if d >= 0:
                sub = det(mask & ~(1 << i))
                if sub:
                    if d == 0:
                        total = total + sub * sign
                    else:
                        bump = SymFunc({_insert(key, d): c * sign
                                        for key, c in sub._terms.items()})
                        total = total + bump
            sign = -sign
        memo[mask] = total
        return total

    return det((1 << ell) - 1)


@lru_cache(maxsize=None)
def elementary(d: int) -> SymFunc:
    """e_d = s_{1^d}."""
    if d < 0:
        return SymFunc.zero()
    return schur((1,) * d)


def dual_groth_det(gamma: Sequence[int]) -> SymFunc:
    """g_gamma via the determinant det(k_{gamma_i+j-i}^{(i-1)})."""
    gamma = weight(gamma)
    return _dual_groth_det_cached(gamma)


@lru_cache(maxsize=None)
def _dual_groth_det_cached(gamma: Weight) -> SymFunc:
    ell = len(gamma)
    memo: dict[int, SymFunc] = {}

    def det(mask: int) -> SymFunc:
        if mask == 0:
            return SymFunc.one()
        cached = memo.get(mask)
        if cached is not None:
            return cached
        col = ell - bin(mask).count("1") + 1
        total = SymFunc.zero()
        sign = 1
        for i in range(ell):
            if not mask & (1 << i):
                continue
            entry = k_hom(gamma[i] + col - i - 1, i)
            if entry:
                sub = det(mask & ~(1 << i))
                if sub:
                    total = total + entry * sub * sign
            sign = -sign
        memo[mask] = total
        return total

    return det((1 << ell) - 1)


def dual_groth_raise(gamma: Sequence[int]) -> SymFunc:
    """g_gamma via prod_{i<j} (1 - R_ij) applied to k_gamma.

    R_ij bumps slot i up and slot j down; the final pass maps each surviving
    weight through kappa.  Agrees with dual_groth_det everywhere.
    """
    gamma = weight(gamma)
    ell = len(gamma)
    weights: dict[Weight, int] = {gamma: 1}
    for i in range(ell):
        for j in range(i + 1, ell):
            nxt: dict[Weight, int] = {}
            for w, c in weights.items():
                nxt[w] = nxt.get(w, 0) + c
                lst = list(w)
                lst[i] += 1
                lst[j] -= 1
                shifted = tuple(lst)
                nxt[shifted] = nxt.get(shifted, 0) - c
            weights = {w: c for w, c in nxt.items() if c}
    total = SymFunc.zero()
    for w, c in weights.items():
        term = kappa(w)
        if term:
            total = total + term * c
    return total


# -- lowering operators ----------------------------------------------------

def e_perp(s: int, f: SymFunc) -> SymFunc:
    """Adjoint of multiplication by e_s, via the h-monomial recursion

    e_s-perp (h_m g) = h_m (e_s-perp g) + h_{m-1} (e_{s-1}-perp g).
    """
    if s < 0:
        return SymFunc.zero()
    if s == 0:
        return f
    total: dict[Partition, int] = {}
    for key, coeff in f._terms.items():
        for part, c in _e_perp_monomial(s, key)._terms.items():
            new = total.get(part, 0) + coeff * c
            if new:
                total[part] = new
            else:
                del total[part]
    out = SymFunc.__new__(SymFunc)
    out._terms = total
    return out


@lru_cache(maxsize=500_000)
def _e_perp_monomial(s: int, lam: Partition) -> SymFunc:
    if s == 0:
        return SymFunc({lam: 1})
    if not lam:
        return SymFunc.zero()
    head, rest = lam[0], lam[1:]
    out = SymFunc.h([head]) * _e_perp_monomial(s, rest)
    lower = _e_perp_monomial(s - 1, rest)
    if lower:
        out = out + SymFunc.h([head - 1]) * lower
    return out


def g_column_perp(m: int, f: SymFunc) -> SymFunc:
    """G_{1^m}-perp where G_{1^m} = sum_i (-1)^i binom(m-1+i, m-1) e_{m+i}."""
    if m <= 0:
        raise ValueError("column height must be positive")
    deg = f.degree()
    if deg is NEG_INF:
        return SymFunc.zero()
    total = SymFunc.zero()
    i = 0
    while m + i <= deg:
        c = binomial(m - 1 + i, m - 1) * (-1) ** i
        total = total + e_perp(m + i, f) * c
        i += 1
    return total


def one_minus_G1_perp(f: SymFunc) -> SymFunc:
    """(1 - G_1-perp) f = sum_i (-1)^i e_i-perp f."""
    deg = f.degree()
    if deg is NEG_INF:
        return SymFunc.zero()
    total = SymFunc.zero()
    for i in range(int(deg) + 1):
        total = total + e_perp(i, f) * ((-1) ** i)
    return total


# -- ring maps -------------------------------------------------------------

@lru_cache(maxsize=None)
def _omega_h(r: int) -> SymFunc:
    return dual_groth_det((1,) * r)


def omega(f: SymFunc) -> SymFunc:
    """Algebra map h_r -> g_{1^r}; an involution on k-bounded inputs."""
    total = SymFunc.zero()
    for key, coeff in f._terms.items():
        mono = SymFunc.one()
        for part in key:
            mono = mono * _omega_h(part)
        total = total + mono * coeff
    return total


@lru_cache(maxsize=None)
def _F_h(r: int) -> SymFunc:
    return SymFunc({(d,) if d else (): 1 for d in range(r + 1)})


def F_auto(f: SymFunc) -> SymFunc:
    """Algebra map h_i -> h_i + h_{i-1} + ... + h_1 + 1.

    Inverse of (1 - G_1-perp) as an operator on Lambda.
    """
    total = SymFunc.zero()
    for key, coeff in f._terms.items():
        mono = SymFunc.one()
        for part in key:
            mono = mono * _F_h(part)
        total = total + mono * coeff
    return total


# -- linear algebra --------------------------------------------------------

def expand_in_basis(f: SymFunc, family: Sequence[tuple[object, SymFunc]]) -> dict:
    """Exact coefficients of f in the given (label, SymFunc) family.

    Solves by rational Gaussian elimination over the union of h-supports,
    rows ordered by (degree, reverse-lex).  Raises NonUnique when the family
    is linearly dependent, NotInSpan when a nonzero residual remains, and
    NonIntegral when the unique rational solution is not integral.
    """
    labels = [lab for lab, _ in family]
    cols = [g for _, g in family]
    rows: set[Partition] = set(f._terms)
    for g in cols:
        rows.update(g._terms)
    row_order = sorted(rows, key=term_sort_key)
    n = len(cols)

    matrix = [[Fraction(g._terms.get(r, 0)) for g in cols] + [Fraction(f._terms.get(r, 0))]
              for r in row_order]

    pivot_rows: list[int] = []
    rank = 0
    for col in range(n):
        sel = None
        for r in range(len(matrix)):
            if r in pivot_rows:
                continue
            if matrix[r][col]:
                sel = r
                break
        if sel is None:
            continue
        pivot_rows.append(sel)
        pv = matrix[sel][col]
        matrix[sel] = [x / pv for x in matrix[sel]]
        for r in range(len(matrix)):
            if r != sel and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[sel])]
        rank += 1
    if rank < n:
        raise NonUnique(f"family of size {n} has rank {rank}")

    solution = [Fraction(0)] * n
    for idx, r in enumerate(pivot_rows):
        col = next(c for c in range(n) if matrix[r][c])
        solution[col] = matrix[r][n]
    for r in range(len(matrix)):
        if r not in pivot_rows and matrix[r][n]:
            raise NotInSpan("nonzero residual outside the family span")
    out = {}
    for lab, val in zip(labels, solution):
        if val.denominator != 1:
            raise NonIntegral(f"coefficient {val} at {lab!r}")
        out[lab] = int(val)
    # re-multiplied check: the reported combination reproduces f exactly
    recon = SymFunc.zero()
    for g, c in zip(cols, solution):
        recon = recon + g * int(c)
    if recon != f:
        raise NotInSpan("residual check failed")
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
