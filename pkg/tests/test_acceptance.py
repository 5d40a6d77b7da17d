"""Acceptance gate: one test per release criterion.

Each criterion is a single test function, so a verbose run prints one
pass or fail line per criterion.  Ranges are the release ranges, not
the reduced ones used by the unit tests.
"""

import itertools
from math import comb

from katalan.affine import (
    core_of,
    corners,
    hecke_of_word,
    k_conjugate,
    partition_of,
    perm_of_partition,
    theta,
)
from katalan.families import (
    FAMILIES,
    det_vs_raise,
    specializations,
)
from katalan.kkschur import (
    conjecture_sweep,
    verify_branch,
    verify_collapse,
    verify_longest_word,
    verify_pieri,
    verify_shift,
)
from katalan.partitions import kbounded_partitions
from katalan.rootideal import delta_k
from katalan.symfunc import SymFunc, dual_groth_det


def _clean(rep):
    assert rep.ok(), rep.failures[:3]
    return rep.checked


def test_c01_specialization_identities():
    rep = specializations(max_ell=4, lo=0, hi=3)
    assert _clean(rep) == 4 * sum(4 ** ell for ell in range(1, 5))


def test_c02_determinant_vs_raising_operator():
    rep = det_vs_raise(max_ell=4, lo=-2, hi=4, extra=200, seed=0)
    assert _clean(rep) == sum(7 ** ell for ell in range(5)) + 200


def test_c03_identity_suites_500_each():
    done = {"specializations", "det-vs-raise"}
    for name, fn in FAMILIES.items():
        if name in done:
            continue
        rep = fn()
        assert rep.ok(), (name, rep.failures[:3])
        assert rep.checked >= 500, name


def test_c04_pieri_three_ways():
    rep = verify_pieri(ks=(1, 2, 3), max_size=8)
    instances = sum((k + 1) * len(kbounded_partitions(k, 8))
                    for k in (1, 2, 3))
    assert _clean(rep) == 2 * instances


def test_c05_shift_invariance_open_and_closed():
    rep = verify_shift(ks=(1, 2, 3), max_size=8)
    assert _clean(rep) == 2 * sum(len(kbounded_partitions(k, 8))
                                  for k in (1, 2, 3))


def test_c06_branching_signs_and_diagonal():
    rep = verify_branch(ks=(2, 3), max_size=8)
    assert _clean(rep) == sum(len(kbounded_partitions(k, 8))
                              for k in (2, 3))


def test_c07_k_rectangle_collapse():
    rep = verify_collapse(max_k=5, max_size=10)
    inside = sum(
        1 for k in range(1, 6) for mu in kbounded_partitions(k, 10)
        if not mu or mu[0] + len(mu) - 1 <= k)
    assert _clean(rep) == 2 * inside


def test_c08_longest_word_factorization():
    assert dual_groth_det((1, 1)) == SymFunc(
        {(1, 1): 1, (2,): -1, (1,): 1})
    _clean(verify_longest_word(ks=(2, 3, 4)))


def test_c09_theta_and_conjugate_fixtures():
    assert theta(4, (1, 3, 2, 5, 4)) == (3, 2, 2, 1)
    assert k_conjugate(4, (3, 2, 2, 1)) == (3, 2, 1, 1, 1)
    assert theta(2, (2, 1, 3)) == (1,)


def _dictionary_case(k, lam, j):
    n = k + 1
    mu = tuple(lam) + (0,) * (j - len(lam))
    psi = delta_k(k, j, mu)
    kappa = core_of(k, lam)
    cs = corners(kappa, (-j + 1) % n)
    top_prev, top_j = psi.top(j - 1), psi.top(j)
    assert top_prev != top_j
    if top_prev > top_j:
        assert cs["addable"] and not cs["removable"]
        assert max(cs["addable"]) == psi.up(top_prev + 1)
    elif top_j > top_prev + 1:
        assert cs["removable"] and not cs["addable"]
    else:
        assert not cs["addable"] and not cs["removable"]


def test_c10_core_dictionary():
    for k in (1, 2, 3):
        for lam in kbounded_partitions(k, 8):
            core = core_of(k, lam)
            assert partition_of(core) == lam
            assert perm_of_partition(k, lam).length() == sum(lam)
            base = len(lam) + 2
            for j in range(base, base + k + 1):
                _dictionary_case(k, lam, j)
    lam = (5, 3, 2, 2, 2, 2, 1, 1, 1, 1)
    psi = delta_k(5, 15, lam + (0,) * 5)
    assert psi.rows == (14, 11, 9, 8, 7, 6, 4, 3, 2, 1, 0, 0, 0, 0, 0)
    for j in (13, 14, 15):
        _dictionary_case(5, lam, j)


def test_c11_hecke_factorization_count():
    for k in (1, 2, 3):
        n = k + 1
        for m in (1, 2, 3):
            target = perm_of_partition(k, (1,) * m)
            for a in range(1, 7):
                hits = sum(
                    1 for word in itertools.product(range(n), repeat=a)
                    if (h := hecke_of_word(k, word)).sign != 0
                    and h.perm == target)
                assert hits == comb(a - 1, m - 1), (k, m, a)


def test_c12_conjecture_sweeps_clean():
    for which in ("c", "d", "e", "f", "kpos"):
        rep = conjecture_sweep(which, ks=(2, 3), max_size=7, max_ell=4)
        assert rep.ok(), (which, rep.witnesses[:3])
        assert rep.checked > 0, which
