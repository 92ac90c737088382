import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from leibniz_lm.algebra import regular_module
from leibniz_lm.corpus import heisenberg, pair_corpus, sl2, theorem1_corpus, truncated
from leibniz_lm.derivations import universal_derivations
from leibniz_lm.exactlin import QQ
from leibniz_lm.lie_rinehart import (
    LieRinehartPair,
    TheoremOneData,
    build_tautological,
    check_lie_rinehart_pair,
    check_lr_module,
    check_theorem1_object,
    derivation_pair,
    theorem1_bullets,
    trivial_theorem1,
)
from leibniz_lm.lm import identity_algebra_object
from leibniz_lm.tensors import random_invertible

import oracles
from conftest import FIELDS

PAIRS = {F.name: pair_corpus(F) for F in FIELDS}
OBJECTS = {F.name: theorem1_corpus(F) for F in FIELDS}


def replace(d: TheoremOneData, **changes) -> TheoremOneData:
    fields = dict(alg=d.alg, lie=d.lie, rho0=d.rho0, rho1=d.rho1, rho2=d.rho2, lam=d.lam, action_L=d.action_L, action_N=d.action_N)
    fields.update(changes)
    return TheoremOneData(**fields)


def bumped(arr, idx, by=1):
    out = np.array(arr, dtype=object, copy=True)
    out[idx] += by
    return out


# -- pairs -------------------------------------------------------------------------


def test_lie_algebra_over_the_field_is_a_pair():
    assert check_lie_rinehart_pair(PAIRS["QQ"]["field_sl2"]).passed


@pytest.mark.parametrize("F", FIELDS, ids=[F.name for F in FIELDS])
def test_corpus_pairs_pass_checker_and_oracle(F):
    for name, p in PAIRS[F.name].items():
        assert check_lie_rinehart_pair(p).passed, name
        assert not oracles.lr_pair_failures(p.A.mult, p.L.bracket, p.action.action, p.anchor), name


def test_derivations_of_truncated_cubic():
    p = derivation_pair(truncated(QQ, 3))
    assert p.L.dim == 2 and check_lie_rinehart_pair(p).passed


def test_scaled_anchor_breaks_linearity():
    p = derivation_pair(truncated(QQ, 3))
    anchor = np.array(p.anchor, dtype=object, copy=True)
    anchor[0] = anchor[0] * 2
    bad = LieRinehartPair(p.A, p.L, p.action, anchor)
    rep = check_lie_rinehart_pair(bad)
    assert "anchor-Alin" in rep.axioms()
    assert set(rep.axioms()) == oracles.lr_pair_failures(bad.A.mult, bad.L.bracket, bad.action.action, bad.anchor)


def test_shape_errors_are_reported():
    p = derivation_pair(truncated(QQ, 2))
    bad = LieRinehartPair(p.A, p.L, p.action, p.anchor[:, :1])
    rep = check_lie_rinehart_pair(bad)
    assert rep.axioms() == ["shape"] and rep.witnesses("shape") == [("anchor",)]


@settings(max_examples=40)
@given(st.sampled_from(sorted(PAIRS["QQ"])), st.integers(0, 2**32 - 1))
def test_pair_corruptions_agree_with_oracle(name, seed):
    p = PAIRS["QQ"][name]
    rng = np.random.default_rng(seed)
    anchor = p.anchor
    if anchor.size:
        idx = tuple(int(rng.integers(s)) for s in anchor.shape)
        anchor = bumped(anchor, idx, QQ(int(rng.integers(1, 3))))
    bad = LieRinehartPair(p.A, p.L, p.action, anchor)
    got = {a for a in check_lie_rinehart_pair(bad).axioms()}
    assert got == oracles.lr_pair_failures(bad.A.mult, bad.L.bracket, bad.action.action, bad.anchor)


# -- modules ---------------------------------------------------------------------------


def test_algebra_is_a_module_through_the_anchor():
    for A in (truncated(QQ, 2), truncated(QQ, 3)):
        p = derivation_pair(A)
        assert check_lr_module(p, regular_module(A), p.anchor).passed


def test_zero_module_action_fails_the_mixed_law():
    A = truncated(QQ, 3)
    p = derivation_pair(A)
    rep = check_lr_module(p, regular_module(A), QQ.zeros(p.anchor.shape))
    assert rep.axioms() == ["compDer1-a"]
    # every witness (xi, a, m) needs rho0(xi)(a) != 0, so a is not the unit
    for xi, a, m in rep.witnesses("compDer1-a"):
        assert any(v != 0 for v in p.anchor[xi][:, a])
    assert (0, 1, 0) in rep.witnesses("compDer1-a")


# -- Lie-Rinehart algebra objects --------------------------------------------------------


def test_trivial_object_is_valid():
    for L in (sl2(QQ), heisenberg(QQ)):
        assert check_theorem1_object(trivial_theorem1(L)).passed


@pytest.mark.parametrize("n", [1, 2, 3])
def test_tautological_objects_are_valid(n):
    assert check_theorem1_object(build_tautological(derivation_pair(truncated(QQ, n)))).passed


def test_universal_derivations_give_valid_objects():
    for n in (2, 3):
        d = universal_derivations(identity_algebra_object(truncated(QQ, n))).as_theorem1()
        assert check_theorem1_object(d).passed


@pytest.mark.parametrize("F", FIELDS, ids=[F.name for F in FIELDS])
def test_corpus_objects_are_valid(F):
    for name, d in OBJECTS[F.name].items():
        assert check_theorem1_object(d).passed, name


def test_corrupted_lambda_is_caught():
    d = build_tautological(derivation_pair(truncated(QQ, 3)))
    rep = check_theorem1_object(replace(d, lam=bumped(d.lam, (0, 0))))
    assert rep.axioms() and all(a.startswith("T1-6/") for a in rep.axioms())


def test_corrupted_rho1_is_caught():
    d = build_tautological(derivation_pair(truncated(QQ, 3)))
    rep = check_theorem1_object(replace(d, rho1=bumped(d.rho1, (0, 0, 1))))
    assert any(a.startswith("T1-7/") for a in rep.axioms())


def test_corrupted_rho2_is_caught():
    d = build_tautological(derivation_pair(truncated(QQ, 2)))
    rep = check_theorem1_object(replace(d, rho2=bumped(d.rho2, (0, 1, 1))))
    assert any(a.startswith("T1-3/") for a in rep.axioms())


def test_shape_mismatch_reported_before_axioms():
    d = build_tautological(derivation_pair(truncated(QQ, 2)))
    rep = check_theorem1_object(replace(d, lam=d.lam[:, :1]))
    assert rep.axioms() == ["shape"] and rep.witnesses("shape") == [("lam",)]


def test_each_law_is_reported_once():
    d = build_tautological(derivation_pair(truncated(QQ, 3)))
    bad = replace(d, rho0=bumped(d.rho0, (1, 2, 1)), rho2=bumped(d.rho2, (0, 0, 0)))
    raw = theorem1_bullets(bad)
    rep = check_theorem1_object(bad)
    keys = [(v.axiom.split("/", 1)[1], v.witness) for v in rep.violations]
    assert len(keys) == len(set(keys))
    assert set(keys) == {(v.axiom, v.witness) for items in raw.values() for v in items}


@settings(max_examples=20)
@given(st.sampled_from(["tautological_trunc2", "tautological_trunc3", "universal_id_trunc2", "trivial_heisenberg"]), st.booleans(), st.integers(0, 2**32 - 1))
def test_verdict_invariant_under_basis_change(name, corrupt, seed):
    d = OBJECTS["QQ"][name]
    if corrupt and d.rho1.size:
        d = replace(d, rho1=bumped(d.rho1, (0,) * d.rho1.ndim))
    rng = np.random.default_rng(seed)
    ps = [random_invertible(QQ, n, rng) for n in (d.alg.A.dim, d.alg.M.dim, d.lie.L.dim, d.lie.dim_N)]
    before = check_theorem1_object(d)
    after = check_theorem1_object(d.rebased(*ps))
    assert before.passed == after.passed
    assert {a.split("/")[0] for a in before.axioms()} == {a.split("/")[0] for a in after.axioms()}
