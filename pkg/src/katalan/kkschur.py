"""K-k-Schur and closed k-Schur Katalan functions with verification suites.

The K-k-Schur function of a k-bounded partition lambda is the Katalan
function K(Delta^k(lambda); Delta^{k+1}(lambda); lambda); replacing the
lowering multiset by Delta^k(lambda) gives the closed variant.  Both
families are bases of Z[h_1..h_k], graded-cached here alongside the
k-Schur functions H(Delta^k(mu); mu) and the dual stable Grothendieck
polynomials.  On top of the families sit the vertical Pieri three-way
check (raising-operator product, 0-Hecke sum, unstraightened Katalan
sum), shift invariance, branching into the k+1 family, tilde-g built
from a finite permutation through the Bruhat order, and sweeps for the
alternating/positivity conjectures over root ideals.
"""

from __future__ import annotations

import hashlib
import itertools
import os
import random
import tempfile
from dataclasses import dataclass, field
from typing import Callable

from .affine import (SignedHecke, bruhat_leq, enumerate_cyclic, hecke_product,
                     is_grassmannian, k_conjugate, partition_of_grassmannian,
                     perm_of_partition, rm_inverse, theta, w0)
from .errors import InvalidWeight, KatalanError, NotKBounded
from .families import FamilyReport
from .katalan_fn import catalan_H, evaluate, index
from .partitions import (Partition, conjugate, is_partition, k_rectangle,
                         kbounded_partitions, partitions_up_to, size,
                         term_sort_key)
from .rootideal import Multiset, delta_k, enumerate_ideals
from .serialize import canonical_json, symfunc_from_json, symfunc_to_json
from .symfunc import (SymFunc, dual_groth_det, expand_in_basis, g_column_perp,
                      multiply, omega, one_minus_G1_perp, prod, schur)


# -- cached families --------------------------------------------------------

class LabeledFamily:
    """Members of a (k, partition)-labeled family, cached in memory and
    optionally on disk.

    A disk entry stores the value together with a digest of its canonical
    JSON; unreadable or stale entries are silently recomputed.  Writes go
    through a temporary file and an atomic rename so that concurrent
    workers can share one directory.  When audit_rate is positive, loaded
    entries are re-verified against a fresh evaluation with that
    probability and a mismatch raises KatalanError.
    """

    def __init__(self, name: str, compute: Callable[[int, Partition], SymFunc],
                 cache_dir: str | None = None):
        self.name = name
        self.compute = compute
        self.cache_dir = cache_dir
        self.memory: dict[tuple[int, Partition], SymFunc] = {}
        self.audit_rate = 0.0
        self.audit_rng = random.Random(0)
        self.audits = 0

    def directory(self) -> str | None:
        return self.cache_dir or os.environ.get("KATALAN_CACHE_DIR") or None

    def path(self, k: int, lam: Partition) -> str:
        name = "-".join(str(p) for p in lam) or "0"
        return os.path.join(self.directory(), self.name, f"k{k}_{name}.json")

    def member(self, k: int, lam) -> SymFunc:
        lam = tuple(int(p) for p in lam)
        key = (k, lam)
        hit = self.memory.get(key)
        if hit is not None:
            return hit
        value = self._load(k, lam) if self.directory() else None
        if value is None:
            value = self.compute(k, lam)
            if self.directory():
                self._store(k, lam, value)
        self.memory[key] = value
        return value

    def _digest(self, value: SymFunc) -> str:
        blob = canonical_json(symfunc_to_json(value))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()

    def _load(self, k: int, lam: Partition) -> SymFunc | None:
        import json

        try:
            with open(self.path(k, lam), "r", encoding="utf-8") as fh:
                entry = json.load(fh)
            if entry["family"] != self.name or entry["k"] != k \
                    or tuple(entry["lambda"]) != lam:
                return None
            value = symfunc_from_json(entry["value"])
            if entry["digest"] != self._digest(value):
                return None
        except (OSError, ValueError, KeyError, TypeError):
            return None
        if self.audit_rate and self.audit_rng.random() < self.audit_rate:
            self.audits += 1
            if self.compute(k, lam) != value:
                raise KatalanError(
                    f"cache audit mismatch for {self.name} k={k} lambda={lam}")
        return value

    def _store(self, k: int, lam: Partition, value: SymFunc) -> None:
        path = self.path(k, lam)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        entry = {"family": self.name, "k": k, "lambda": list(lam),
                 "digest": self._digest(value),
                 "value": symfunc_to_json(value)}
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(canonical_json(entry))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def _checked_partition(k: int, lam) -> Partition:
    lam = tuple(int(p) for p in lam)
    if not is_partition(lam) or (lam and lam[-1] == 0):
        raise InvalidWeight(f"{lam} is not a partition")
    if lam and lam[0] > k:
        raise NotKBounded(f"{lam} is not {k}-bounded")
    return lam


def _g_kk_raw(k: int, lam: Partition) -> SymFunc:
    lam = _checked_partition(k, lam)
    ell = len(lam)
    if ell == 0:
        return SymFunc.one()
    psi = delta_k(k, ell, lam)
    low = Multiset.from_ideal(delta_k(k + 1, ell, lam))
    return evaluate(index(psi, low, lam))


def _g_closed_raw(k: int, lam: Partition) -> SymFunc:
    lam = _checked_partition(k, lam)
    ell = len(lam)
    if ell == 0:
        return SymFunc.one()
    psi = delta_k(k, ell, lam)
    return evaluate(index(psi, Multiset.from_ideal(psi), lam))


def _kschur_raw(k: int, mu: Partition) -> SymFunc:
    mu = _checked_partition(k, mu)
    if not mu:
        return SymFunc.one()
    return catalan_H(delta_k(k, len(mu), mu), mu)


def _dual_groth_raw(k: int, lam: Partition) -> SymFunc:
    del k  # label uniformity; the polynomial does not depend on k
    return dual_groth_det(lam)


G_KK = LabeledFamily("g_kk", _g_kk_raw)
CLOSED = LabeledFamily("closed", _g_closed_raw)
KSCHUR = LabeledFamily("kschur", _kschur_raw)
DUAL_GROTH = LabeledFamily("dual-groth", _dual_groth_raw)

FAMILIES = {f.name: f for f in (G_KK, CLOSED, KSCHUR, DUAL_GROTH)}


def set_cache(cache_dir: str | None = None, audit_rate: float = 0.0,
              seed: int = 0) -> None:
    """Point every family at cache_dir with the given audit sampling.

    cache_dir None falls back to the KATALAN_CACHE_DIR environment
    variable.  The in-memory layer is reset so the configured run
    starts cold.
    """
    for fam in FAMILIES.values():
        fam.cache_dir = cache_dir
        fam.audit_rate = audit_rate
        fam.audit_rng = random.Random(seed)
        fam.memory.clear()


def g_kk(k: int, lam) -> SymFunc:
    """K-k-Schur function of a k-bounded partition."""
    return G_KK.member(k, lam)


def g_closed(k: int, lam) -> SymFunc:
    """Closed k-Schur Katalan function of a k-bounded partition."""
    return CLOSED.member(k, lam)


def kschur(k: int, mu) -> SymFunc:
    """k-Schur function H(Delta^k(mu); mu); the Schur function for large k."""
    return KSCHUR.member(k, mu)


def family_members(kind: str, k: int, max_size: int,
                   max_length: int | None = None) -> list[tuple[Partition, SymFunc]]:
    """Family members up to a degree bound, ordered by (size, reverse-lex).

    The dual Grothendieck family ranges over all partitions; the other
    kinds are k-bounded.
    """
    fam = FAMILIES[kind]
    if kind == "dual-groth":
        labels = partitions_up_to(max_size, max_length=max_length)
    else:
        labels = kbounded_partitions(k, max_size, max_length=max_length)
    return [(mu, fam.member(k, mu)) for mu in labels]


# -- expansion reports ------------------------------------------------------

_EXPECTED = {"dual-groth": "alternating", "g_kk": "alternating",
             "closed": "alternating", "kschur": "positive"}


@dataclass
class BranchReport:
    """Coefficients of one function over a labeled family, with the sign
    pattern measured against ref_degree."""

    family: str
    family_k: int
    coeffs: dict
    ref_degree: int
    source_k: int | None = None
    source_lambda: Partition | None = None
    expected: str | None = None

    def nonzero(self) -> list[tuple[Partition, int]]:
        items = [(mu, c) for mu, c in self.coeffs.items() if c]
        items.sort(key=lambda mc: term_sort_key(mc[0]))
        return items

    def alternating(self) -> bool:
        return all(c * (-1) ** ((self.ref_degree - size(mu)) % 2) >= 0
                   for mu, c in self.coeffs.items())

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def verdict(self) -> str:
        if not any(self.coeffs.values()):
            return "zero"
        if self.alternating():
            return "alternating"
        if self.nonnegative():
            return "positive"
        return "mixed"

    def sign_flaw(self) -> dict | None:
        """First coefficient violating the expected sign pattern, if any."""
        if self.expected is None:
            return None
        for mu, c in self.nonzero():
            if self.expected == "alternating":
                bad = c * (-1) ** ((self.ref_degree - size(mu)) % 2) < 0
            else:
                bad = c < 0
            if bad:
                return {"mu": list(mu), "c": str(c), "expected": self.expected}
        return None

    def to_json(self) -> dict:
        source: dict = {"k": self.source_k if self.source_k is not None
                        else self.family_k}
        if self.source_lambda is not None:
            source["lambda"] = list(self.source_lambda)
        out = {"source": source,
               "coeffs": [{"mu": list(mu), "c": str(c)}
                          for mu, c in self.nonzero()],
               "verdict": self.verdict()}
        flaw = self.sign_flaw()
        if flaw is not None:
            out["signFlaw"] = flaw
        return out


def expand_report(f: SymFunc, family_kind: str, k: int,
                  source: tuple[int, Partition] | None = None,
                  ref_degree: int | None = None,
                  expected: str | object = "default") -> BranchReport:
    """Expand f over the requested family and report coefficient signs.

    The expansion is exact over the members of degree up to deg(f); the
    recombination is re-multiplied as a second check.
    """
    deg = f.degree()
    max_size = int(deg) if f else 0
    fam = family_members(family_kind, k, max_size)
    coeffs = expand_in_basis(f, fam)
    recombined = SymFunc.zero()
    for mu, g in fam:
        if coeffs[mu]:
            recombined = recombined + g * coeffs[mu]
    if recombined != f:
        raise KatalanError("recombination check failed")
    if expected == "default":
        expected = _EXPECTED[family_kind]
    return BranchReport(
        family=family_kind, family_k=k, coeffs=coeffs,
        ref_degree=max_size if ref_degree is None else ref_degree,
        source_k=source[0] if source else None,
        source_lambda=tuple(source[1]) if source else None,
        expected=expected)


def branch(k: int, lam) -> BranchReport:
    """Expansion of the K-k-Schur function over the k+1 family."""
    lam = _checked_partition(k, lam)
    return expand_report(g_kk(k, lam), "g_kk", k + 1, source=(k, lam),
                         ref_degree=size(lam), expected="alternating")


# -- the Pieri rule, three ways ---------------------------------------------

def pieri_triple(k: int, lam, r: int) -> tuple[SymFunc, SymFunc, SymFunc]:
    """g_{1^r} g^(k)_lam as a product, a 0-Hecke sum, and a Katalan sum.

    The 0-Hecke sum runs over cyclically increasing words of length r
    acting on T_{w_lam} and keeps the Grassmannian outcomes with their
    product signs.  The Katalan sum runs over r-subsets R of the residues
    mod k+1, lifted to row sets A at ambient rank len(lam)+k+1, one
    unstraightened index per subset.
    """
    lam = _checked_partition(k, lam)
    if not 0 <= r <= k:
        raise ValueError(f"column height {r} outside [0, {k}]")
    lhs = multiply(dual_groth_det((1,) * r), g_kk(k, lam))

    base = SignedHecke.of(perm_of_partition(k, lam))
    rhs_hecke = SymFunc.zero()
    for word in enumerate_cyclic(k, r, "inc"):
        res = hecke_product(word, base)
        if is_grassmannian(res.perm):
            mu = partition_of_grassmannian(res.perm)
            rhs_hecke = rhs_hecke + g_kk(k, mu) * res.sign

    n = k + 1
    ambient = len(lam) + n
    rhs_katalan = SymFunc.zero()
    for combo in itertools.combinations(range(n), r):
        a_set = rm_inverse(ambient, k, frozenset(combo))
        rank = max([len(lam)] + [a for a in a_set])
        mu = tuple((lam[i] if i < len(lam) else 0) + (1 if i + 1 in a_set else 0)
                   for i in range(rank))
        psi = delta_k(k, rank, mu)
        low = Multiset.from_ideal(delta_k(k + 1, rank, mu)).union(sorted(a_set))
        rhs_katalan = rhs_katalan + evaluate(index(psi, low, mu))
    return lhs, rhs_hecke, rhs_katalan


# -- shift invariance -------------------------------------------------------

def shift(k: int, lam) -> SymFunc:
    """G_{1^ell}-perp of the k+1 member at lam+1^ell; equals g_kk(k, lam)."""
    lam = _checked_partition(k, lam)
    up = g_kk(k + 1, tuple(p + 1 for p in lam))
    return g_column_perp(len(lam), up) if lam else up


def shift_closed(k: int, lam) -> SymFunc:
    """Closed-family analogue of shift; equals g_closed(k, lam)."""
    lam = _checked_partition(k, lam)
    up = g_closed(k + 1, tuple(p + 1 for p in lam))
    return g_column_perp(len(lam), up) if lam else up


# -- tilde-g from a finite permutation --------------------------------------

def tilde_g_w(k: int, w) -> SymFunc:
    """(1 - G_1-perp) of the Bruhat interval sum below w_lambda, for
    lambda the k-conjugate of theta(w)."""
    lam = k_conjugate(k, theta(k, tuple(w)))
    wl = perm_of_partition(k, lam)
    total = SymFunc.zero()
    for mu in kbounded_partitions(k, size(lam)):
        if bruhat_leq(perm_of_partition(k, mu), wl):
            total = total + g_kk(k, mu)
    return one_minus_G1_perp(total)


# -- conjecture sweeps ------------------------------------------------------

@dataclass
class SweepReport:
    conjecture: str
    identity: str
    params: dict
    checked: int = 0
    witnesses: list = field(default_factory=list)

    def ok(self) -> bool:
        return not self.witnesses

    def to_json(self) -> dict:
        return {"conjecture": self.conjecture, "identity": self.identity,
                "params": self.params, "checked": self.checked,
                "ok": self.ok(), "witnesses": self.witnesses}


def _sweep_c(rep: SweepReport, ks, max_size: int, max_ell: int | None) -> None:
    for k in ks:
        for mu in kbounded_partitions(k, max_size, max_length=max_ell):
            if not mu:
                continue
            f = g_closed(k, mu)
            for m in range(1, len(mu) + 1):
                lowered = g_column_perp(m, f)
                report = expand_report(lowered, "closed", k)
                rep.checked += 1
                flaw = report.sign_flaw()
                if flaw is not None:
                    rep.witnesses.append(
                        {"k": k, "mu": list(mu), "m": m, "flaw": flaw})


def _sweep_d(rep: SweepReport, ks, max_size: int, max_ell: int | None) -> None:
    for k in ks:
        for mu in kbounded_partitions(k, max_size, max_length=max_ell):
            report = expand_report(g_closed(k, mu), "closed", k + 1,
                                   source=(k, mu), ref_degree=size(mu))
            rep.checked += 1
            flaw = report.sign_flaw()
            if flaw is not None:
                rep.witnesses.append({"k": k, "mu": list(mu), "flaw": flaw})


def _sweep_e(rep: SweepReport, ks, max_size: int, max_ell: int | None) -> None:
    for k in ks:
        for mu in kbounded_partitions(k, max_size, max_length=max_ell):
            report = expand_report(g_closed(k, mu), "g_kk", k,
                                   source=(k, mu), ref_degree=size(mu))
            rep.checked += 1
            flaw = report.sign_flaw()
            if flaw is not None:
                rep.witnesses.append({"k": k, "mu": list(mu), "flaw": flaw})


def _sweep_f(rep: SweepReport, ks, max_size: int, max_ell: int | None) -> None:
    for k in ks:
        for mu in kbounded_partitions(k, max_size, max_length=max_ell):
            for d in range(1, k + 1):
                rect = k_rectangle(k, d)
                lhs = multiply(dual_groth_det(rect), g_closed(k, mu))
                union = tuple(sorted(mu + rect, reverse=True))
                rhs = g_closed(k, union)
                rep.checked += 1
                if lhs != rhs:
                    rep.witnesses.append(
                        {"k": k, "mu": list(mu), "d": d,
                         "difference": symfunc_to_json(lhs - rhs)})


def _sweep_kpos(rep: SweepReport, ks, max_size: int, max_ell: int) -> None:
    for k in ks:
        for ell in range(1, max_ell + 1):
            for psi in enumerate_ideals(ell):
                for lam in kbounded_partitions(k, max_size, max_length=ell):
                    padded = lam + (0,) * (ell - len(lam))
                    if psi.maxband(padded) > k:
                        continue
                    base = {"k": k, "psi": list(psi.rows), "lambda": list(lam)}
                    report = expand_report(
                        evaluate(index(psi, Multiset.from_ideal(psi), padded)),
                        "closed", k, ref_degree=size(lam))
                    rep.checked += 1
                    _note_kpos(rep, base, report, "Kpos1", ell, None)
                    lowering = psi
                    a = 0
                    while True:
                        report = expand_report(
                            evaluate(index(psi, Multiset.from_ideal(lowering),
                                           padded)),
                            "kschur", k, ref_degree=size(lam))
                        rep.checked += 1
                        _note_kpos(rep, base, report, "Kpos2", ell, a)
                        if lowering.size() == 0:
                            break
                        lowering = lowering.rc()
                        a += 1


def _note_kpos(rep: SweepReport, base: dict, report: BranchReport,
               display: str, ell: int, a: int | None) -> None:
    witness = dict(base, display=display)
    if a is not None:
        witness["a"] = a
    flaw = report.sign_flaw()
    if flaw is not None:
        rep.witnesses.append(dict(witness, flaw=flaw))
    for mu, c in report.nonzero():
        if len(mu) > ell:
            rep.witnesses.append(
                dict(witness, flaw={"mu": list(mu), "c": str(c),
                                    "expected": f"length <= {ell}"}))
            break


SWEEPS = {
    "c": (_sweep_c, "alternating dual Pieri: G_{1^m}-perp of closed members "
          "expands with alternating signs in the closed family"),
    "d": (_sweep_d, "k-branching: closed members expand with alternating "
          "signs in the closed k+1 family"),
    "e": (_sweep_e, "closed members expand with alternating signs in the "
          "K-k-Schur family"),
    "f": (_sweep_f, "k-rectangle property: g_{R_d} times a closed member is "
          "the closed member of the sorted union"),
    "kpos": (_sweep_kpos, "K(Psi;Psi;lam) expands alternating in the closed "
             "family and K(Psi;RC^a(Psi);lam) expands nonnegative in the "
             "k-Schur family, for maxband(Psi,lam) <= k"),
}


def conjecture_sweep(which: str, ks=(2, 3), max_size: int = 7,
                     max_ell: int | None = 4) -> SweepReport:
    """Run one conjecture checker over the requested ranges.

    Counterexamples are recorded as witnesses, never raised; the report
    is the result of the sweep.
    """
    runner, identity = SWEEPS[which]
    rep = SweepReport(which, identity,
                      {"ks": list(ks), "max_size": max_size,
                       "max_ell": max_ell})
    runner(rep, tuple(ks), max_size, max_ell)
    return rep


# -- verification suites ----------------------------------------------------

def _suite_check(rep: FamilyReport, desc: dict, lhs: SymFunc, rhs: SymFunc) -> None:
    rep.checked += 1
    if lhs != rhs:
        rep.failures.append({**desc, "difference": symfunc_to_json(lhs - rhs)})


def verify_pieri(ks=(1, 2, 3), max_size: int = 8) -> FamilyReport:
    rep = FamilyReport(
        "pieri", "g_{1^r} g^(k)_lam: product = 0-Hecke sum = Katalan sum")
    for k in ks:
        for lam in kbounded_partitions(k, max_size):
            for r in range(k + 1):
                lhs, rhs_hecke, rhs_katalan = pieri_triple(k, lam, r)
                desc = {"k": k, "lambda": list(lam), "r": r}
                _suite_check(rep, {**desc, "side": "hecke"}, lhs, rhs_hecke)
                _suite_check(rep, {**desc, "side": "katalan"}, lhs, rhs_katalan)
    return rep


def verify_shift(ks=(1, 2, 3), max_size: int = 8) -> FamilyReport:
    rep = FamilyReport(
        "shift", "G_{1^ell}-perp of the k+1 member at lam+1^ell equals the "
        "k member, open and closed")
    for k in ks:
        for lam in kbounded_partitions(k, max_size):
            desc = {"k": k, "lambda": list(lam)}
            _suite_check(rep, {**desc, "kind": "open"}, shift(k, lam),
                         g_kk(k, lam))
            _suite_check(rep, {**desc, "kind": "closed"}, shift_closed(k, lam),
                         g_closed(k, lam))
    return rep


def verify_branch(ks=(2, 3), max_size: int = 8) -> FamilyReport:
    rep = FamilyReport(
        "branch", "K-k-Schur members expand in the k+1 family with "
        "alternating signs and unit diagonal")
    for k in ks:
        for lam in kbounded_partitions(k, max_size):
            report = branch(k, lam)
            rep.checked += 1
            flaw = report.sign_flaw()
            if flaw is not None:
                rep.failures.append({"k": k, "lambda": list(lam), "flaw": flaw})
            if report.coeffs.get(lam) != 1:
                rep.failures.append(
                    {"k": k, "lambda": list(lam), "diagonal":
                     str(report.coeffs.get(lam))})
    return rep


def verify_collapse(max_k: int = 5, max_size: int = 10) -> FamilyReport:
    rep = FamilyReport(
        "collapse", "members indexed by a partition inside a k-rectangle "
        "equal the dual Grothendieck polynomial")
    for k in range(1, max_k + 1):
        for mu in kbounded_partitions(k, max_size):
            if mu and mu[0] + len(mu) - 1 > k:
                continue
            expected = dual_groth_det(mu)
            desc = {"k": k, "mu": list(mu)}
            _suite_check(rep, {**desc, "kind": "open"}, g_kk(k, mu), expected)
            _suite_check(rep, {**desc, "kind": "closed"}, g_closed(k, mu),
                         expected)
    return rep


def verify_longest_word(ks=(2, 3, 4)) -> FamilyReport:
    rep = FamilyReport(
        "longest-word", "the closed member at the k-conjugate of "
        "theta(w0) factors as prod_i g_{(k-i)^i}")
    for k in ks:
        lam = k_conjugate(k, theta(k, w0(k)))
        rhs = prod(dual_groth_det(k_rectangle(k - 1, i)) for i in range(1, k))
        _suite_check(rep, {"k": k, "lambda": list(lam)}, g_closed(k, lam), rhs)
    return rep


def verify_unitriangular(ks=(1, 2, 3), max_size: int = 6) -> FamilyReport:
    rep = FamilyReport(
        "unitriangular", "K-k-Schur members are unitriangular over the "
        "k-Schur family; closed members over the K-k-Schur family with "
        "lower-degree off-diagonal support")
    for k in ks:
        for lam in kbounded_partitions(k, max_size):
            report = expand_report(g_kk(k, lam), "kschur", k,
                                   source=(k, lam), expected=None)
            rep.checked += 1
            if report.coeffs.get(lam) != 1:
                rep.failures.append({"k": k, "lambda": list(lam),
                                     "family": "kschur",
                                     "diagonal": str(report.coeffs.get(lam))})
            report = expand_report(g_closed(k, lam), "g_kk", k,
                                   source=(k, lam), expected=None)
            rep.checked += 1
            top = [mu for mu, c in report.nonzero() if size(mu) == size(lam)]
            if report.coeffs.get(lam) != 1 or top != [lam]:
                rep.failures.append({"k": k, "lambda": list(lam),
                                     "family": "g_kk",
                                     "top": [list(m) for m in top]})
    return rep


def verify_omega(ks=(1, 2, 3), max_size: int = 6) -> FamilyReport:
    rep = FamilyReport(
        "omega", "omega maps the member at mu to the member at the "
        "k-conjugate of mu, open and closed")
    for k in ks:
        for mu in kbounded_partitions(k, max_size):
            muc = k_conjugate(k, mu)
            desc = {"k": k, "mu": list(mu)}
            _suite_check(rep, {**desc, "kind": "open"}, omega(g_kk(k, mu)),
                         g_kk(k, muc))
            _suite_check(rep, {**desc, "kind": "closed"},
                         omega(g_closed(k, mu)), g_closed(k, muc))
    return rep


def verify_tilde_g(ks=(2, 3, 4), all_w_ks=(2, 3)) -> FamilyReport:
    rep = FamilyReport(
        "tilde-g", "single-descent w: tilde-g equals the dual Grothendieck "
        "polynomial of theta(w)-conjugate and both Katalan members; "
        "all w: tilde-g equals the closed member")
    for k in ks:
        for w in itertools.permutations(range(1, k + 2)):
            descents = [i for i in range(1, k + 1) if w[i - 1] > w[i]]
            if len(descents) != 1:
                continue
            lam = conjugate(theta(k, w))
            expected = dual_groth_det(lam)
            desc = {"k": k, "w": list(w)}
            _suite_check(rep, {**desc, "against": "dual-groth"},
                         tilde_g_w(k, w), expected)
            _suite_check(rep, {**desc, "against": "g_kk"}, g_kk(k, lam),
                         expected)
            _suite_check(rep, {**desc, "against": "closed"}, g_closed(k, lam),
                         expected)
    for k in all_w_ks:
        for w in itertools.permutations(range(1, k + 2)):
            lam = k_conjugate(k, theta(k, w))
            _suite_check(rep, {"k": k, "w": list(w), "against": "closed"},
                         tilde_g_w(k, w), g_closed(k, lam))
    return rep


KK_SUITES = {
    "pieri": verify_pieri,
    "shift": verify_shift,
    "branch": verify_branch,
    "collapse": verify_collapse,
    "longest-word": verify_longest_word,
    "unitriangular": verify_unitriangular,
    "omega": verify_omega,
    "tilde-g": verify_tilde_g,
}
