import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from leibniz_lm.algebra import AModule, regular_module
from leibniz_lm.corpus import leibniz2, nonabelian2, sl2, truncated
from leibniz_lm.exactlin import QQ, arrays_equal, rank
from leibniz_lm.leibniz import reduce
from leibniz_lm.lm import (
    LMAlgebraObject,
    LMLieObject,
    LMMorphism,
    LMObject,
    braiding,
    check_algebra_object,
    check_lie_object,
    check_module_over_algebra_object,
    check_module_over_lie_object,
    check_squares_annihilation,
    check_structure_morphism,
    compose,
    identity,
    identity_algebra_object,
    identity_lie_object,
    ideal_object,
    left_unitor,
    morphism_space,
    reduction_object,
    right_unitor,
    self_action,
    square_zero_object,
    tensor_morphisms,
    tensor_objects,
    unit_object,
    zero_morphism,
)
from leibniz_lm.report import StructureError

import oracles


def obj(rows):
    return LMObject(QQ, QQ.array(rows))


def square(a, b, h1, h0):
    return LMMorphism(a, b, QQ.array(h1), QQ.array(h0))


LINE = obj([[1]])


# -- morphisms -----------------------------------------------------------------


def test_non_commuting_square_is_rejected():
    with pytest.raises(StructureError, match="top basis vector 0"):
        square(LINE, LINE, [[1]], [[2]])


def test_identity_and_zero_composition():
    a = obj([[1, 2], [0, 1]])
    ida = identity(a)
    assert compose(ida, ida).same_as(ida)
    z = zero_morphism(a, a)
    assert compose(ida, z).same_as(z) and compose(z, ida).same_as(z)


def test_compose_rejects_mismatched_objects():
    with pytest.raises(StructureError):
        compose(identity(LINE), identity(obj([[2]])))


def test_compose_is_componentwise_product():
    a = obj([[1, 1], [0, 1]])
    space = morphism_space(a, a)
    g = LMMorphism(a, a, sum((m.h1 for m in space[:2]), QQ.zeros((2, 2))), sum((m.h0 for m in space[:2]), QQ.zeros((2, 2))))
    h = space[-1]
    hg = compose(h, g)
    assert hg.h1.tolist() == oracles.matmul(h.h1, g.h1)
    assert hg.h0.tolist() == oracles.matmul(h.h0, g.h0)


def test_morphism_space_dimension():
    # squares into (V -> W) from the line with u = 1: h1 free, h0 = u' h1
    b = obj([[1, 0], [0, 0], [1, 1]])
    assert len(morphism_space(LINE, b)) == 2
    # zero maps: both components free
    assert len(morphism_space(obj([[0]]), obj([[0, 0]]))) == 2 + 1


# -- tensor product --------------------------------------------------------------


def test_tensor_dimensions():
    t = tensor_objects(LMObject.from_dims(QQ, 1, 2), LMObject.from_dims(QQ, 1, 1))
    assert (t.dim_top, t.dim_bottom) == (3, 2)


def test_tensor_of_identity_with_itself():
    t = tensor_objects(obj(np.eye(2, dtype=int).tolist()), obj(np.eye(2, dtype=int).tolist()))
    assert (t.dim_top, t.dim_bottom) == (8, 4)
    # independent assembly: [I2 (x) I2 | I2 (x) I2]
    rows = [[int(c == r) for c in range(4)] + [int(c == r) for c in range(4)] for r in range(4)]
    assert t.u.tolist() == rows
    assert rank(t.u, QQ) == sympy.Matrix(rows).rank() == 4


def test_tensor_with_unit_is_the_object():
    a = obj([[1, 2, 0], [3, 0, 1]])
    for t in (tensor_objects(unit_object(), a), tensor_objects(a, unit_object())):
        assert t.same_as(a)
    for unitor in (left_unitor(a), right_unitor(a)):
        assert arrays_equal(unitor.h1, QQ.eye(3)) and arrays_equal(unitor.h0, QQ.eye(2))


def test_tensor_of_identities_is_identity():
    a, b = obj([[1, 2]]), obj([[0], [1]])
    assert tensor_morphisms(identity(a), identity(b)).same_as(identity(tensor_objects(a, b)))


def test_tensor_with_zero_morphism():
    a = obj([[1, 2]])
    t = tensor_morphisms(identity(a), zero_morphism(LINE, LINE))
    assert all(x == 0 for x in t.h1.reshape(-1)) and all(x == 0 for x in t.h0.reshape(-1))


def test_tensor_of_scalar_squares():
    g = square(LINE, LINE, [[2]], [[2]])
    h = square(LINE, LINE, [[3]], [[3]])
    t = tensor_morphisms(g, h)
    assert t.h0.tolist() == [[6]]
    # top blocks g1 (x) h0 and g0 (x) h1
    assert t.h1.tolist() == [[6, 0], [0, 6]]


def test_braiding_index_bookkeeping():
    a, b = obj([[1]]), obj([[1], [2]])
    tau = braiding(a, b)
    # source top: v(x)w'0, v(x)w'1, w(x)v'; target top: v'(x)w, w'0(x)v, w'1(x)v
    assert tau.h1.tolist() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert tau.h0.tolist() == [[1, 0], [0, 1]]


def test_braiding_is_an_involution():
    a = obj([[1, 0], [2, 1], [0, 3]])
    tau = braiding(a, a)
    assert compose(tau, tau).same_as(identity(tensor_objects(a, a)))
    b = obj([[1, -1]])
    assert compose(braiding(b, a), braiding(a, b)).same_as(identity(tensor_objects(a, b)))


def test_braiding_with_unit_is_canonical():
    a = obj([[1, 2]])
    tau = braiding(unit_object(), a)
    assert arrays_equal(tau.h1, QQ.eye(2)) and arrays_equal(tau.h0, QQ.eye(1))


_entries = st.integers(-2, 2)


@st.composite
def lm_objects(draw):
    v, w = draw(st.integers(0, 2)), draw(st.integers(0, 2))
    return LMObject.from_dims(QQ, v, w, [[draw(_entries) for _ in range(v)] for _ in range(w)])


@st.composite
def endomorphisms(draw):
    a = draw(lm_objects())
    space = morphism_space(a, a)
    coeffs = [draw(_entries) for _ in space]
    h1 = sum((c * m.h1 for c, m in zip(coeffs, space)), QQ.zeros((a.dim_top, a.dim_top)))
    h0 = sum((c * m.h0 for c, m in zip(coeffs, space)), QQ.zeros((a.dim_bottom, a.dim_bottom)))
    return LMMorphism(a, a, h1, h0)


@given(endomorphisms(), st.data())
def test_compose_associative_with_units(f, data):
    space = morphism_space(f.source, f.source)
    g = data.draw(st.sampled_from(space)) if space else f
    left = compose(compose(f, g), f)
    right = compose(f, compose(g, f))
    assert left.same_as(right)
    ida = identity(f.source)
    assert compose(ida, f).same_as(f) and compose(f, ida).same_as(f)


@given(endomorphisms(), endomorphisms())
def test_tensor_is_functorial(f, g):
    ff, gg = compose(f, f), compose(g, g)
    assert tensor_morphisms(ff, gg).same_as(compose(tensor_morphisms(f, g), tensor_morphisms(f, g)))


# -- algebra objects -------------------------------------------------------------


def test_identity_algebra_object_is_valid():
    assert check_algebra_object(identity_algebra_object(truncated(QQ, 3))).passed


def test_ideal_inclusion_is_valid():
    x = ideal_object(truncated(QQ, 2), [[0, 1]])
    assert x.M.dim == 1 and x.g.tolist() == [[0], [1]]
    assert check_algebra_object(x).passed


def test_non_linear_g_is_reported():
    good = ideal_object(truncated(QQ, 2), [[0, 1]])
    bad = LMAlgebraObject(good.A, good.M, QQ.array([[1], [0]]))
    rep = check_algebra_object(bad)
    assert rep.axioms() == ["g-Alin"]
    # a = x (index 1), m = x (index 0): g(x.x) = 0 but x.g(x) = x
    assert rep.witnesses("g-Alin") == [(1, 0)]
    assert rep.first("g-Alin").residual == (QQ(0), QQ(-1))


def test_square_zero_object_is_valid():
    A = truncated(QQ, 2)
    assert check_algebra_object(square_zero_object(A, regular_module(A))).passed


def _self_module(x):
    """``x`` as a module over itself: alpha(m (x) a) = a . m."""
    dA, dM = x.A.dim, x.M.dim
    alpha = QQ.zeros((dM, dM * dA))
    for m in range(dM):
        for a in range(dA):
            alpha[:, m * dA + a] = x.M.action[a, m]
    return x.object, x.M, regular_module(x.A), alpha


def test_module_over_itself():
    for x in (identity_algebra_object(truncated(QQ, 2)), ideal_object(truncated(QQ, 3), [[0, 1, 0]])):
        v, top, bottom, alpha = _self_module(x)
        assert check_module_over_algebra_object(x, v, top, bottom, alpha).passed


def test_structure_map_failing_descent():
    x = ideal_object(truncated(QQ, 2), [[0, 1]])
    v, top, bottom, alpha = _self_module(x)
    alpha = alpha.copy()
    alpha[0, 1] += 1  # nonzero on m (x) x, which is the relator (x.m) (x) 1 - m (x) x up to sign
    rep = check_module_over_algebra_object(x, v, top, bottom, alpha)
    assert "alpha-descent" in rep.axioms()
    assert (1, 0, 0) in rep.witnesses("alpha-descent")


def test_module_shape_mismatch():
    x = identity_algebra_object(truncated(QQ, 2))
    rep = check_module_over_algebra_object(x, LINE, regular_module(x.A), regular_module(x.A), [[0]])
    assert rep.axioms() == ["shape"]


# -- Lie objects -------------------------------------------------------------------


def test_identity_lie_object_is_valid():
    assert check_lie_object(identity_lie_object(sl2(QQ))).passed


def test_reduction_object_is_valid():
    for g in (leibniz2(QQ), nonabelian2(QQ)):
        assert check_lie_object(reduction_object(g)).passed


def test_non_equivariant_f_matches_loop_oracle():
    L = sl2(QQ)
    f = QQ.array([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    rep = check_lie_object(LMLieObject(L, L.bracket, f))
    assert rep.axioms() == ["equivariant"]
    c = oracles.L(L.bracket)
    fl = oracles.L(f)
    want = set()
    for n in range(3):
        for xi in range(3):
            left = oracles.apply(fl, c[n][xi])
            right = oracles.bracket_vec(c, oracles.apply(fl, oracles.unit(3, n)), oracles.unit(3, xi))
            if left != right:
                want.add((n, xi))
    assert set(rep.witnesses("equivariant")) == want


def test_zero_map_is_equivariant():
    L = sl2(QQ)
    assert check_lie_object(LMLieObject(L, L.bracket, QQ.zeros((3, 3)))).passed


def test_trivial_actions_on_any_object():
    x = identity_lie_object(nonabelian2(QQ))
    v = obj([[1, 2, 0], [0, 1, 1]])
    rep = check_module_over_lie_object(x, v, QQ.zeros((2, 2, 2)), QQ.zeros((2, 2, 3)), QQ.zeros((2, 3, 3)))
    assert rep.passed


@pytest.mark.parametrize("make", [lambda: identity_lie_object(sl2(QQ)), lambda: reduction_object(leibniz2(QQ))])
def test_lie_object_acting_on_itself(make):
    x = make()
    v, a0, a1, a2 = self_action(x)
    assert check_module_over_lie_object(x, v, a0, a1, a2).passed


def test_perturbed_alpha1_breaks_compatibility():
    x = identity_lie_object(sl2(QQ))
    v, a0, a1, a2 = self_action(x)
    a1 = a1.copy()
    a1[0, 0, 0] += 1
    rep = check_module_over_lie_object(x, v, a0, a1, a2)
    assert "compat3" in rep.axioms()


def test_squares_vanish_for_injective_f():
    x = identity_lie_object(sl2(QQ))
    k = truncated(QQ, 1)
    triv = AModule(QQ, QQ.eye(3).reshape(1, 3, 3))
    assert check_squares_annihilation(x, triv, triv, k).passed


def test_squares_annihilation_matches_loop_oracle():
    # N = L = leibniz2 with f the identity, so the bracket on N is the Leibniz bracket
    g = leibniz2(QQ)
    x = LMLieObject(g, g.bracket, QQ.eye(2))
    k = truncated(QQ, 1)
    triv = AModule(QQ, QQ.eye(2).reshape(1, 2, 2))
    rep = check_squares_annihilation(x, triv, triv, k)
    assert rep.passed == all(
        oracles.bracket_vec(oracles.L(g.bracket), oracles.unit(2, n1), oracles.L(g.bracket)[n2][n2]) == [0, 0]
        for n1 in range(2)
        for n2 in range(2)
    )


# -- structure morphisms -------------------------------------------------------------


def test_identity_structure_morphisms():
    x = ideal_object(truncated(QQ, 3), [[0, 1, 0]])
    assert check_structure_morphism(QQ.eye(x.M.dim), QQ.eye(3), x, x, "algebra").passed
    y = reduction_object(leibniz2(QQ))
    assert check_structure_morphism(QQ.eye(2), QQ.eye(1), y, y, "lie").passed


def test_reduction_maps_to_identity_object():
    src = reduction_object(leibniz2(QQ))
    red = reduce(leibniz2(QQ))
    tgt = identity_lie_object(red.lie)
    assert check_structure_morphism(red.pi, QQ.eye(red.lie.dim), src, tgt, "lie").passed


def test_unbalanced_algebra_morphism():
    x = identity_algebra_object(truncated(QQ, 2))
    rep = check_structure_morphism(QQ.array([[1, 0], [0, 2]]), QQ.eye(2), x, x, "algebra")
    assert "algebra-map-1" in rep.axioms() and "algebra-map-0" not in rep.axioms()


def test_unknown_morphism_kind():
    x = identity_algebra_object(truncated(QQ, 2))
    with pytest.raises(ValueError):
        check_structure_morphism(QQ.eye(2), QQ.eye(2), x, x, "group")
