"""Tests for the K-k-Schur module: families, Pieri, shift, branch, tilde-g,
sweeps, and the labeled-family cache."""

import json
import os

import pytest

from katalan.errors import InvalidWeight, KatalanError, NotInSpan, NotKBounded
from katalan.kkschur import (BranchReport, FAMILIES, LabeledFamily, branch,
                             conjecture_sweep, expand_report, g_closed, g_kk,
                             kschur, pieri_triple, shift, shift_closed,
                             tilde_g_w, verify_branch, verify_collapse,
                             verify_longest_word, verify_omega, verify_pieri,
                             verify_shift, verify_tilde_g,
                             verify_unitriangular)
from katalan.partitions import kbounded_partitions
from katalan.serialize import symfunc_from_json
from katalan.symfunc import SymFunc, dual_groth_det, kappa, schur

H1 = SymFunc.h([1])


# -- family members ---------------------------------------------------------

def test_g_kk_single_box():
    for k in (1, 2, 3):
        assert g_kk(k, (1,)) == H1


def test_g_kk_column_of_two():
    # rank 2 with k=1: the raising factor set is empty and no lowering
    # applies, so the value is the kappa product k_1^(0) k_1^(1)
    oracle = kappa((1, 1))
    assert oracle == SymFunc({(1, 1): 1, (1,): 1})
    assert g_kk(1, (1, 1)) == oracle


def test_g_kk_empty():
    assert g_kk(3, ()) == SymFunc.one()


def test_g_kk_rectangle_collapse():
    for k in (2, 3, 4):
        for mu in kbounded_partitions(k, 6):
            if mu and mu[0] + len(mu) - 1 > k:
                continue
            assert g_kk(k, mu) == dual_groth_det(mu)
            assert g_closed(k, mu) == dual_groth_det(mu)


def test_g_closed_single_box():
    assert g_closed(2, (1,)) == H1


def test_g_kk_rejects_bad_input():
    with pytest.raises(NotKBounded):
        g_kk(2, (3,))
    with pytest.raises(InvalidWeight):
        g_kk(2, (1, 2))
    with pytest.raises(InvalidWeight):
        g_kk(2, (2, 0))


def test_kschur_values():
    assert kschur(1, (1, 1)) == SymFunc({(1, 1): 1})
    assert kschur(3, ()) == SymFunc.one()
    for mu in kbounded_partitions(5, 5):
        assert kschur(5, mu) == schur(mu)


def test_g_kk_top_component_is_kschur():
    for k in (1, 2, 3):
        for lam in kbounded_partitions(k, 5):
            top = g_kk(k, lam).homogeneous_component(sum(lam))
            assert top == kschur(k, lam)


# -- Pieri three ways -------------------------------------------------------

def test_pieri_r_zero():
    lhs, rhs_hecke, rhs_katalan = pieri_triple(2, (2, 1), 0)
    assert lhs == rhs_hecke == rhs_katalan == g_kk(2, (2, 1))


def test_pieri_single_box():
    # g_1 g^(2)_(1) = h_1^2 = g^(2)_(2) + g^(2)_(11) - g^(2)_(1) by hand
    lhs, rhs_hecke, rhs_katalan = pieri_triple(2, (1,), 1)
    assert lhs == SymFunc({(1, 1): 1})
    assert rhs_hecke == lhs
    assert rhs_katalan == lhs
    assert lhs == g_kk(2, (2,)) + g_kk(2, (1, 1)) - g_kk(2, (1,))


def test_pieri_paper_partition():
    for r in range(4):
        lhs, rhs_hecke, rhs_katalan = pieri_triple(3, (3, 2, 2, 1), r)
        assert lhs == rhs_hecke
        assert lhs == rhs_katalan


def test_pieri_rejects_bad_r():
    with pytest.raises(ValueError):
        pieri_triple(2, (1,), 3)
    with pytest.raises(ValueError):
        pieri_triple(2, (1,), -1)


def test_pieri_suite_small():
    rep = verify_pieri(ks=(1, 2), max_size=5)
    assert rep.ok(), rep.failures
    assert rep.checked > 0


# -- shift invariance -------------------------------------------------------

def test_shift_values():
    assert shift(1, (1,)) == H1
    assert shift(2, ()) == SymFunc.one()
    assert shift(2, (2, 1)) == g_kk(2, (2, 1))
    assert shift_closed(2, (2, 1)) == g_closed(2, (2, 1))


def test_shift_suite_small():
    rep = verify_shift(ks=(1, 2), max_size=5)
    assert rep.ok(), rep.failures


# -- branching and expansion reports ----------------------------------------

def test_branch_trivial_cases():
    assert branch(2, ()).nonzero() == [((), 1)]
    # both sides collapse to g_(1), so the expansion is the diagonal alone
    assert branch(1, (1,)).nonzero() == [((1,), 1)]


def test_branch_two_by_two():
    # by hand: g^(2)_(22) = kappa_(22) = h22+h21+h2, g^(3)_(31) = kappa_(31),
    # g^(3)_(22) = g_(22); the sum telescopes to kappa_(22)
    rep = branch(2, (2, 2))
    assert g_kk(2, (2, 2)) == g_kk(3, (3, 1)) + g_kk(3, (2, 2))
    assert rep.coeffs[(2, 2)] == 1
    assert rep.sign_flaw() is None
    assert rep.to_json() == {
        "source": {"k": 2, "lambda": [2, 2]},
        "coeffs": [{"mu": [3, 1], "c": "1"}, {"mu": [2, 2], "c": "1"}],
        "verdict": "alternating"}


def test_branch_suite_small():
    rep = verify_branch(ks=(2,), max_size=6)
    assert rep.ok(), rep.failures


def test_expand_report_unit_on_own_family():
    rep = expand_report(g_kk(2, (2, 1)), "g_kk", 2, source=(2, (2, 1)))
    assert rep.nonzero() == [((2, 1), 1)]
    assert rep.verdict() == "alternating"


def test_expand_report_dual_groth():
    # h_1^2 + h_1 = g_(11) + g_(2) by the determinant forms
    rep = expand_report(g_kk(1, (1, 1)), "dual-groth", 1)
    assert rep.nonzero() == [((2,), 1), ((1, 1), 1)]
    assert rep.verdict() == "alternating"


def test_expand_report_not_in_span():
    with pytest.raises(NotInSpan):
        expand_report(schur((3,)), "g_kk", 2)


def test_expand_report_flaw_witness():
    # h_2 - h_1 has a sign flaw against the positive pattern at mu=(1)
    f = SymFunc({(2,): 1, (1,): -1})
    rep = expand_report(f, "kschur", 3)
    flaw = rep.sign_flaw()
    assert flaw == {"mu": [1], "c": "-1", "expected": "positive"}
    assert "signFlaw" in rep.to_json()


def test_unitriangular_suite_small():
    rep = verify_unitriangular(ks=(1, 2), max_size=5)
    assert rep.ok(), rep.failures


def test_omega_suite_small():
    rep = verify_omega(ks=(1, 2), max_size=5)
    assert rep.ok(), rep.failures


def test_collapse_suite_small():
    rep = verify_collapse(max_k=4, max_size=7)
    assert rep.ok(), rep.failures


def test_longest_word_small():
    rep = verify_longest_word(ks=(2, 3))
    assert rep.ok(), rep.failures
    # k=2 reduces to the single rectangle factor g_(1)
    assert g_closed(2, (1,)) == dual_groth_det((1,))


# -- tilde-g ----------------------------------------------------------------

def test_tilde_g_fixtures():
    assert tilde_g_w(2, (2, 1, 3)) == H1
    assert tilde_g_w(2, (1, 2, 3)) == SymFunc.one()


def test_tilde_g_matches_closed_all_of_s3():
    from katalan.affine import k_conjugate, theta

    for w in [(1, 2, 3), (2, 1, 3), (1, 3, 2), (3, 1, 2), (2, 3, 1), (3, 2, 1)]:
        lam = k_conjugate(2, theta(2, w))
        assert tilde_g_w(2, w) == g_closed(2, lam)


def test_tilde_g_suite_small():
    rep = verify_tilde_g(ks=(2, 3), all_w_ks=(2,))
    assert rep.ok(), rep.failures


# -- conjecture sweeps ------------------------------------------------------

@pytest.mark.parametrize("which", ["c", "d", "e", "f", "kpos"])
def test_sweep_small(which):
    rep = conjecture_sweep(which, ks=(2,), max_size=4, max_ell=3)
    assert rep.ok(), rep.witnesses
    assert rep.checked > 0
    payload = rep.to_json()
    assert set(payload) == {"conjecture", "identity", "params", "checked",
                            "ok", "witnesses"}
    assert payload["ok"] is True


def test_sweep_unknown_conjecture():
    with pytest.raises(KeyError):
        conjecture_sweep("z")


# -- labeled family cache ---------------------------------------------------

def _counting_family(tmpdir, calls):
    def compute(k, lam):
        calls.append((k, lam))
        return dual_groth_det(lam)

    return LabeledFamily("dual-groth", compute, cache_dir=str(tmpdir))


def test_cache_roundtrip(tmp_path):
    calls = []
    fam = _counting_family(tmp_path, calls)
    value = fam.member(2, (2, 1))
    assert calls == [(2, (2, 1))]
    assert os.path.exists(fam.path(2, (2, 1)))

    reloaded = _counting_family(tmp_path, calls)
    assert reloaded.member(2, (2, 1)) == value
    assert calls == [(2, (2, 1))]  # served from disk

    # memory hit does not touch the compute function either
    assert reloaded.member(2, (2, 1)) == value
    assert calls == [(2, (2, 1))]


def test_cache_ignores_corrupt_entry(tmp_path):
    calls = []
    fam = _counting_family(tmp_path, calls)
    fam.member(2, (2,))
    with open(fam.path(2, (2,)), "w", encoding="utf-8") as fh:
        fh.write("not json")
    fresh = _counting_family(tmp_path, calls)
    assert fresh.member(2, (2,)) == dual_groth_det((2,))
    assert len(calls) == 2


def test_cache_ignores_stale_digest(tmp_path):
    calls = []
    fam = _counting_family(tmp_path, calls)
    fam.member(2, (1,))
    path = fam.path(2, (1,))
    with open(path, encoding="utf-8") as fh:
        entry = json.load(fh)
    entry["value"]["terms"][0]["coeff"] = "7"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(entry, fh)
    fresh = _counting_family(tmp_path, calls)
    assert fresh.member(2, (1,)) == dual_groth_det((1,))
    assert len(calls) == 2


def test_cache_audit_catches_tampering(tmp_path):
    calls = []
    fam = _counting_family(tmp_path, calls)
    fam.member(2, (1, 1))
    path = fam.path(2, (1, 1))
    with open(path, encoding="utf-8") as fh:
        entry = json.load(fh)
    # rewrite the stored value consistently with its digest so only a
    # fresh evaluation can notice
    entry["value"]["terms"][0]["coeff"] = "7"
    entry["digest"] = fam._digest(symfunc_from_json(entry["value"]))
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(entry, fh)

    audited = _counting_family(tmp_path, calls)
    audited.audit_rate = 1.0
    with pytest.raises(KatalanError):
        audited.member(2, (1, 1))


def test_cache_env_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("KATALAN_CACHE_DIR", str(tmp_path))
    calls = []

    def compute(k, lam):
        calls.append((k, lam))
        return dual_groth_det(lam)

    fam = LabeledFamily("dual-groth", compute)
    fam.member(3, (2,))
    assert os.path.exists(os.path.join(str(tmp_path), "dual-groth", "k3_2.json"))


def test_builtin_families_registry():
    assert set(FAMILIES) == {"g_kk", "closed", "kschur", "dual-groth"}
    assert FAMILIES["dual-groth"].member(5, (3, 1)) == dual_groth_det((3, 1))
