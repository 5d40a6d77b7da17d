"""Affine permutations, 0-Hecke products, cores, and the dictionary."""

import itertools
import random
from math import comb

import pytest

from katalan.affine import (AffinePerm, Core, SignedHecke, bruhat_leq,
                            core_action, core_of, corners, cyclic_word,
                            enumerate_cyclic, hecke_of_word, hecke_product,
                            is_grassmannian, k_conjugate, partition_of,
                            partition_of_grassmannian, perm_of_partition,
                            perm_of_word, rm, rm_inverse, tau, theta,
                            word_of_partition, w0, zeta)
from katalan.errors import (FullSupport, InvalidWindow, MismatchedRank,
                            NotACore, NotKBounded)
from katalan.partitions import conjugate, kbounded_partitions, partitions_up_to
from katalan.rootideal import delta_k


def test_window_validation():
    AffinePerm(4, (0, 2, 3, 5))
    with pytest.raises(InvalidWindow):
        AffinePerm(3, (1, 4, 2))
    with pytest.raises(InvalidWindow):
        AffinePerm(3, (1, 3, 3))
    with pytest.raises(MismatchedRank):
        AffinePerm(3, (1, 2))


def test_json_roundtrip():
    w = AffinePerm(4, (0, 2, 3, 5))
    assert w.to_json() == {"k": 3, "window": [0, 2, 3, 5]}
    assert AffinePerm.from_json(w.to_json()) == w


def test_identity_and_simple():
    e = AffinePerm.identity(3)
    assert e.length() == 0 and e.is_identity()
    s0 = AffinePerm.simple(3, 0)
    assert s0.length() == 1
    assert s0.mul(s0).is_identity()


def test_word_of_partition_fixture():
    assert word_of_partition(3, (3, 2, 2, 1)) == (1, 3, 2, 0, 3, 2, 1, 0)
    assert word_of_partition(3, ()) == ()
    assert word_of_partition(3, (2,)) == (1, 0)
    with pytest.raises(NotKBounded):
        word_of_partition(3, (4,))


def test_length_of_word_perm():
    for k in (1, 2, 3, 4):
        for lam in kbounded_partitions(k, 10):
            w = perm_of_partition(k, lam)
            assert w.length() == sum(lam)
            assert is_grassmannian(w)
            assert partition_of_grassmannian(w) == lam


def test_coxeter_relations():
    rng = random.Random(5)
    for k in (2, 3, 4):
        n = k + 1
        for _ in range(40):
            word = [rng.randrange(n) for _ in range(rng.randint(0, 12))]
            w = perm_of_word(k, word)
            i = rng.randrange(n)
            assert perm_of_word(k, word + [i, i]) == w
            j = (i + 1) % n
            assert perm_of_word(k, word + [i, j, i]) \
                == perm_of_word(k, word + [j, i, j])
            if n >= 4:
                d = (i + 2) % n
                assert perm_of_word(k, word + [i, d]) \
                    == perm_of_word(k, word + [d, i])


def test_inverse_and_apply():
    w = perm_of_partition(3, (3, 2, 2, 1))
    inv = w.inverse()
    for i in range(-5, 10):
        assert inv.apply(w.apply(i)) == i
        assert w.apply(i + 4) == w.apply(i) + 4


def test_reduced_word_reproduces_perm():
    rng = random.Random(11)
    for k in (1, 2, 3):
        for _ in range(30):
            word = [rng.randrange(k + 1) for _ in range(rng.randint(0, 10))]
            w = perm_of_word(k, word)
            red = w.reduced_word()
            assert len(red) == w.length()
            assert perm_of_word(k, red) == w


def test_grassmannian_basics():
    assert is_grassmannian(AffinePerm.identity(3))
    assert not is_grassmannian(AffinePerm.simple(3, 1))
    assert is_grassmannian(AffinePerm.simple(3, 0))


def _bruhat_subword_oracle(u, w):
    word = w.reduced_word()
    target = u.length()
    if target > len(word):
        return False
    for picks in itertools.combinations(range(len(word)), target):
        if perm_of_word(w.n - 1, [word[p] for p in picks]) == u:
            return True
    return False


def test_bruhat_fixture_and_oracle():
    u = perm_of_partition(2, (1,))
    w = perm_of_partition(2, (2, 1))
    assert bruhat_leq(u, w)
    assert not bruhat_leq(w, u)
    assert bruhat_leq(u, u)
    rng = random.Random(7)
    for k in (1, 2):
        for _ in range(60):
            a = perm_of_word(k, [rng.randrange(k + 1)
                                 for _ in range(rng.randint(0, 6))])
            b = perm_of_word(k, [rng.randrange(k + 1)
                                 for _ in range(rng.randint(0, 6))])
            assert bruhat_leq(a, b) == _bruhat_subword_oracle(a, b)
    with pytest.raises(MismatchedRank):
        bruhat_leq(AffinePerm.identity(3), AffinePerm.identity(4))


def test_hecke_idempotent_and_relations():
    rng = random.Random(13)
    for k in (1, 2, 3):
        n = k + 1
        for _ in range(30):
            start = hecke_of_word(k, [rng.randrange(n)
                                      for _ in range(rng.randint(0, 8))])
            i = rng.randrange(n)
            once = hecke_product([i], start)
            twice = hecke_product([i], once)
            assert twice == once.negate()
            if n >= 3:
                j = (i + 1) % n
                assert hecke_product([i, j, i], start) \
                    == hecke_product([j, i, j], start)
            if n >= 4:
                d = (i + 2) % n
                assert hecke_product([i, d], start) \
                    == hecke_product([d, i], start)


def test_hecke_of_reduced_word():
    for lam in kbounded_partitions(3, 6):
        w = perm_of_partition(3, lam)
        h = hecke_of_word(3, w.reduced_word())
        assert h.sign == 1 and h.perm == w


def test_hecke_zero_propagates():
    z = SignedHecke.zero()
    assert hecke_product([0, 1], z).is_zero()


def test_factorization_count():
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


def test_core_fixtures():
    assert core_of(2, (2, 1)).shape == (3, 1)
    assert partition_of(Core(3, (3, 1))) == (2, 1)
    assert core_of(2, ()).shape == ()
    with pytest.raises(NotACore):
        Core(3, (3, 2, 1))


def test_core_worked_example():
    lam = (5, 3, 2, 2, 2, 2, 1, 1, 1, 1)
    kappa = core_of(5, lam)
    assert kappa.shape == (11, 6, 3, 3, 3, 3, 1, 1, 1, 1)
    assert partition_of(kappa) == lam
    for a in (1, 2, 5, 9, 14):
        assert kappa.row_residue(a) == 4
    low_addable = corners(kappa, 5)["addable"]
    assert low_addable and max(low_addable) == 2
    assert corners(kappa, 4)["removable"]
    c0 = corners(kappa, 0)
    assert not c0["addable"] and not c0["removable"]


def test_core_roundtrips():
    for k in (2, 3, 4):
        for shape in partitions_up_to(14):
            try:
                core = Core(k + 1, shape)
            except NotACore:
                continue
            assert core_of(k, partition_of(core)) == core


def test_empty_core_corners():
    empty = Core(3, ())
    assert corners(empty, 0) == {"addable": [1], "removable": []}
    assert corners(empty, 1) == {"addable": [], "removable": []}


def test_core_action_matches_addweak():
    # s_i w_lam stays Grassmannian exactly when kappa has an addable or
    # removable i-corner, and then equals w of the adjusted partition
    for k in (2, 3):
        for lam in kbounded_partitions(k, 8):
            w = perm_of_partition(k, lam)
            kappa = core_of(k, lam)
            for i in range(k + 1):
                sw = w.s_times(i)
                cs = corners(kappa, i)
                hit = bool(cs["addable"]) or bool(cs["removable"])
                assert is_grassmannian(sw) == hit
                if cs["addable"]:
                    a = max(cs["addable"])
                    plus = list(lam) + [0] * (a - len(lam))
                    plus[a - 1] += 1
                    assert sw == perm_of_partition(k, tuple(plus))
                    assert sw.length() == w.length() + 1
                if cs["removable"]:
                    a = max(cs["removable"])
                    minus = list(lam)
                    minus[a - 1] -= 1
                    while minus and minus[-1] == 0:
                        minus.pop()
                    assert sw == perm_of_partition(k, tuple(minus))
                    assert sw.length() == w.length() - 1
                assert not (cs["addable"] and cs["removable"])


def test_row_residue_up_lemma():
    for k in (2, 3):
        for lam in kbounded_partitions(k, 8):
            if not lam:
                continue
            ell = len(lam)
            psi = delta_k(k, ell, lam)
            kappa = core_of(k, lam)
            for x in range(1, ell + 1):
                if psi.has_up(x):
                    assert kappa.row_residue(psi.up(x)) \
                        == kappa.row_residue(x)


def test_bounce_paths_are_residue_classes():
    for k in (2, 3):
        for lam in kbounded_partitions(k, 8):
            if not lam:
                continue
            ell = len(lam)
            psi = delta_k(k, ell, lam)
            kappa = core_of(k, lam)
            paths = psi.bounce_paths()
            assert len(paths) <= k + 1
            by_residue = {}
            for a in range(1, ell + 1):
                by_residue.setdefault(kappa.row_residue(a), []).append(a)
            assert sorted(map(sorted, paths)) \
                == sorted(map(sorted, by_residue.values()))


def _dictionary_case(k, lam, j):
    """Compare top statistics of the padded ideal with i-corners of the core."""
    n = k + 1
    mu = tuple(lam) + (0,) * (j - len(lam))
    psi = delta_k(k, j, mu)
    kappa = core_of(k, lam)
    i = (-j + 1) % n
    cs = corners(kappa, i)
    top_prev = psi.top(j - 1)
    top_j = psi.top(j)
    assert top_prev != top_j
    if top_prev > top_j:
        assert cs["addable"]
        assert max(cs["addable"]) == psi.up(top_prev + 1)
        assert not cs["removable"]
    elif top_j > top_prev + 1:
        assert cs["removable"] and not cs["addable"]
    else:
        assert not cs["addable"] and not cs["removable"]


def test_core_dictionary_exhaustive():
    for k in (2, 3):
        for lam in kbounded_partitions(k, 8):
            base = len(lam) + 2
            for j in range(base, base + k + 1):
                _dictionary_case(k, lam, j)


def test_core_dictionary_worked_example():
    lam = (5, 3, 2, 2, 2, 2, 1, 1, 1, 1)
    mu = lam + (0,) * 5
    psi = delta_k(5, 15, mu)
    assert psi.rows == (14, 11, 9, 8, 7, 6, 4, 3, 2, 1, 0, 0, 0, 0, 0)
    assert psi.top(14) == 1 and psi.top(13) == 4
    assert psi.top(15) == 6 and psi.top(12) == 3
    for j in (13, 14, 15):
        _dictionary_case(5, lam, j)


def test_cyclic_words():
    assert cyclic_word(3, {0, 1, 3}) == (3, 0, 1)
    assert cyclic_word(3, {0, 1, 3}, "dec") == (1, 0, 3)
    assert cyclic_word(3, {2}) == (2,)
    assert list(enumerate_cyclic(3, 2)) == [
        cyclic_word(3, c) for c in itertools.combinations(range(4), 2)]
    assert len(list(enumerate_cyclic(3, 2))) == 6
    with pytest.raises(FullSupport):
        cyclic_word(2, {0, 1, 2})
    with pytest.raises(ValueError):
        cyclic_word(3, {1}, "sideways")


def test_cyclic_word_gap_choice_irrelevant():
    # every gap produces the same group element
    for k in (2, 3):
        n = k + 1
        for r in range(1, n):
            for combo in itertools.combinations(range(n), r):
                elems = set(combo)
                perms = set()
                for gap in range(n):
                    if gap in elems:
                        continue
                    order = [(gap + t) % n for t in range(1, n)]
                    word = [x for x in order if x in elems]
                    perms.add(perm_of_word(k, word))
                assert len(perms) == 1


def test_cyclic_increasing_condition():
    # i never occurs east of i+1 inside the word
    for word in enumerate_cyclic(3, 3):
        for pos, letter in enumerate(word):
            after = word[pos + 1:]
            assert (letter - 1) % 4 not in after


def test_rm_fixtures():
    assert rm_inverse(3, 3, set()) == frozenset()
    assert rm_inverse(3, 3, {0, 3}) == frozenset({4, 5})
    assert rm(3, {4, 5}) == frozenset({0, 3})


def test_rm_roundtrip_and_shape():
    for k in (2, 3, 4):
        n = k + 1
        for ell in range(1, 7):
            for r in range(0, k + 1):
                for combo in itertools.combinations(range(n), r):
                    out = rm_inverse(ell, k, set(combo))
                    assert rm(k, out) == frozenset(combo)
                    assert len(out) == r
                    if out:
                        assert max(out) - min(out) <= k - 1


def test_tau_and_k_conjugate():
    assert tau((1, 3, 2, 0), k=3) == (3, 1, 2, 0)
    w = perm_of_partition(3, (2, 1))
    assert tau(tau(w)) == w
    assert k_conjugate(4, (3, 2, 2, 1)) == (3, 2, 1, 1, 1)
    assert k_conjugate(2, ()) == ()
    for k in (2, 3):
        for mu in kbounded_partitions(k, 7):
            assert k_conjugate(k, k_conjugate(k, mu)) == mu
            fits_rectangle = any(
                (not mu or mu[0] <= t) and len(mu) <= k + 1 - t
                for t in range(1, k + 1))
            if fits_rectangle:
                assert k_conjugate(k, mu) == conjugate(mu)
    with pytest.raises(NotKBounded):
        k_conjugate(2, (3,))


def test_theta_zeta_fixtures():
    assert zeta(4, (1, 3, 2, 5, 4)) == (3, 3, 3, 2, 2, 1, 1, 1, 1, 1)
    assert theta(4, (1, 3, 2, 5, 4)) == (3, 2, 2, 1)
    assert k_conjugate(4, theta(4, (1, 3, 2, 5, 4))) == (3, 2, 1, 1, 1)
    assert zeta(2, (2, 1, 3)) == (2, 1)
    assert theta(2, (2, 1, 3)) == (1,)
    for k in (2, 3, 4):
        expected = tuple(sorted(
            (p for i in range(1, k) for p in [k - i] * i), reverse=True))
        assert theta(k, w0(k)) == expected
    with pytest.raises(InvalidWindow):
        zeta(2, (1, 2))


def test_core_action_is_affine_action():
    # applying a full reduced word of w_lam to the empty core gives c(lam)
    rng = random.Random(3)
    for k in (2, 3):
        for _ in range(20):
            word = [rng.randrange(k + 1) for _ in range(rng.randint(0, 8))]
            core = Core(k + 1, ())
            for i in reversed(word):
                core = core_action(core, i)
            # result is a valid core whose partition is k-bounded
            lam = partition_of(core)
            assert all(p <= k for p in lam)
