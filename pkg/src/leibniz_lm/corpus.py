"""Named small structures used by the tests, the demos and the CLI recipes.

Every builder takes a field so the same instance can be produced over the
rationals and over a prime field.
"""

from __future__ import annotations

import numpy as np

from .algebra import AModule, CommAlgebra, poly_quotient, product_algebra, regular_module, tensor_algebra, zero_module
from .algebroid import LeibnizAlgebroid, hemi_semi_algebroid, pair_as_algebroid
from .derivations import derivation_lie, endo_lie, universal_derivations
from .exactlin import GF, QQ, Field
from .leibniz import LeibnizAlgebra, LieAlgebra, abelian, direct_sum, hemi_semi_product, tensor_square
from .lie_rinehart import LieRinehartPair, TheoremOneData, build_tautological, derivation_pair, trivial_theorem1
from .lm import LMAlgebraObject, identity_algebra_object, ideal_object, square_zero_object

GF7 = GF(7)


def lie_from_table(F: Field, n: int, table) -> LieAlgebra:
    """``table[(i, j)] = {k: c}`` gives ``[e_i, e_j]`` for ``i < j``; the rest follows by antisymmetry."""
    c = F.zeros((n, n, n))
    for (i, j), out in table.items():
        for k, v in out.items():
            c[i, j, k] += F(v)
            c[j, i, k] -= F(v)
    return LieAlgebra(F, c)


def leibniz_from_table(F: Field, n: int, table) -> LeibnizAlgebra:
    """``table[(i, j)] = {k: c}`` gives ``[e_i, e_j]`` verbatim."""
    c = F.zeros((n, n, n))
    for (i, j), out in table.items():
        for k, v in out.items():
            c[i, j, k] += F(v)
    return LeibnizAlgebra(F, c)


# -- Lie algebras ------------------------------------------------------------


def nonabelian2(F: Field = QQ) -> LieAlgebra:
    """``[x, y] = y``."""
    return lie_from_table(F, 2, {(0, 1): {1: 1}})


def heisenberg(F: Field = QQ) -> LieAlgebra:
    return lie_from_table(F, 3, {(0, 1): {2: 1}})


def sl2(F: Field = QQ) -> LieAlgebra:
    """Basis ``e, h, f`` with ``[h, e] = 2e``, ``[h, f] = -2f``, ``[e, f] = h``."""
    return lie_from_table(F, 3, {(1, 0): {0: 2}, (1, 2): {2: -2}, (0, 2): {1: 1}})


def so3(F: Field = QQ) -> LieAlgebra:
    return lie_from_table(F, 3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (2, 0): {1: 1}})


def gl2(F: Field = QQ) -> LieAlgebra:
    return endo_lie((F, 2))


def solvable3(F: Field = QQ) -> LieAlgebra:
    """``[e0, e1] = e1``, ``[e0, e2] = e1 + e2``."""
    return lie_from_table(F, 3, {(0, 1): {1: 1}, (0, 2): {1: 1, 2: 1}})


def filiform4(F: Field = QQ) -> LieAlgebra:
    return lie_from_table(F, 4, {(0, 1): {2: 1}, (0, 2): {3: 1}})


def heisenberg5(F: Field = QQ) -> LieAlgebra:
    return lie_from_table(F, 5, {(0, 1): {4: 1}, (2, 3): {4: 1}})


def upper_triangular3(F: Field = QQ) -> LieAlgebra:
    """Upper triangular ``3 x 3`` matrices, basis ``E_ij`` for ``i <= j`` in row-major order."""
    idx = [(i, j) for i in range(3) for j in range(i, 3)]
    n = len(idx)
    c = F.zeros((n, n, n))
    for a, (i, j) in enumerate(idx):
        for b, (k, l) in enumerate(idx):
            if j == k:
                c[a, b, idx.index((i, l))] += F.one
            if l == i:
                c[a, b, idx.index((k, j))] -= F.one
    return LieAlgebra(F, c)


def lie_corpus(F: Field = QQ) -> dict[str, LieAlgebra]:
    out = {
        "abelian1": abelian(F, 1),
        "abelian2": abelian(F, 2),
        "abelian3": abelian(F, 3),
        "nonabelian2": nonabelian2(F),
        "heisenberg": heisenberg(F),
        "sl2": sl2(F),
        "so3": so3(F),
        "gl2": gl2(F),
        "solvable3": solvable3(F),
        "filiform4": filiform4(F),
        "heisenberg5": heisenberg5(F),
        "upper_triangular3": upper_triangular3(F),
        "gl3": endo_lie((F, 3)),
        "nonabelian2_sq": direct_sum(nonabelian2(F), nonabelian2(F)),
        "sl2_plus_k": direct_sum(sl2(F), abelian(F, 1)),
        "sl2_plus_sl2": direct_sum(sl2(F), sl2(F)),
        "so3_plus_nonabelian2": direct_sum(so3(F), nonabelian2(F)),
    }
    for n in range(3, 7):
        out[f"der_trunc{n}"] = derivation_lie(truncated(F, n))[0]
    return out


# -- Leibniz algebras --------------------------------------------------------


def leibniz2(F: Field = QQ) -> LeibnizAlgebra:
    """The two-dimensional non-Lie algebra ``[e2, e2] = e1`` (0-based: ``[e_1, e_1] = e_0``)."""
    return leibniz_from_table(F, 2, {(1, 1): {0: 1}})


def standard_module(F: Field, L: LieAlgebra, mats) -> np.ndarray:
    """Left action tensor from one matrix per basis element."""
    mats = [F.array(m) for m in mats]
    d = mats[0].shape[0]
    act = F.zeros((L.dim, d, d))
    for i, m in enumerate(mats):
        act[i] = m.T  # act[i, j, k] = coefficient of v_k in x_i . v_j
    return act


def sl2_natural(F: Field = QQ) -> np.ndarray:
    return standard_module(F, sl2(F), [[[0, 1], [0, 0]], [[1, 0], [0, -1]], [[0, 0], [1, 0]]])


def adjoint_action(L: LieAlgebra) -> np.ndarray:
    """``x_i . x_j = [x_i, x_j]``."""
    return L.bracket


def leibniz_corpus(F: Field = QQ) -> dict[str, LeibnizAlgebra]:
    na2 = nonabelian2(F)
    out = {
        "leibniz2": leibniz2(F),
        # [e2, e2] = e1, [e3, e3] = e1 in 1-based labels
        "leibniz3_two_squares": leibniz_from_table(F, 3, {(1, 1): {0: 1}, (2, 2): {0: 1}}),
        "leibniz3_nilpotent": leibniz_from_table(F, 3, {(2, 2): {0: 1}, (1, 2): {0: 1}}),
        "hemi_sl2_natural": hemi_semi_product(sl2(F), sl2_natural(F)),
        "hemi_sl2_adjoint": hemi_semi_product(sl2(F), adjoint_action(sl2(F))),
        "hemi_nonabelian2_adjoint": hemi_semi_product(na2, adjoint_action(na2)),
        "hemi_heisenberg_adjoint": hemi_semi_product(heisenberg(F), adjoint_action(heisenberg(F))),
        "hemi_so3_adjoint": hemi_semi_product(so3(F), adjoint_action(so3(F))),
        "hemi_gl2_natural": hemi_semi_product(gl2(F), _gl_natural(F, 2)),
        "tensor_square_nonabelian2": tensor_square(na2),
        "tensor_square_heisenberg": tensor_square(heisenberg(F)),
        "tensor_square_sl2": tensor_square(sl2(F)),
        "tensor_square_so3": tensor_square(so3(F)),
        "leibniz2_plus_nonabelian2": direct_sum(leibniz2(F), na2),
    }
    for name, L in lie_corpus(F).items():
        if L.dim <= 9:
            out[f"lie_{name}"] = LeibnizAlgebra(F, L.bracket)
    return out


def _gl_natural(F: Field, n: int) -> np.ndarray:
    # E_ab e_j = delta_bj e_a
    act = F.zeros((n * n, n, n))
    for a in range(n):
        for b in range(n):
            act[a * n + b, b, a] = F.one
    return act


# -- commutative algebras ----------------------------------------------------


def truncated(F: Field, n: int) -> CommAlgebra:
    """``k[x]/(x^n)``."""
    return poly_quotient(F, [0] * n + [1])


def algebra_corpus(F: Field = QQ) -> dict[str, CommAlgebra]:
    d2 = truncated(F, 2)
    out = {f"trunc{n}": truncated(F, n) for n in range(1, 7)}
    out.update(
        {
            "split2": poly_quotient(F, [-1, 0, 1]),  # x^2 = 1
            "idempotent2": poly_quotient(F, [0, -1, 1]),  # x^2 = x
            "gaussian": poly_quotient(F, [1, 0, 1]),  # x^2 = -1
            "cubic": poly_quotient(F, [-2, 0, 0, 1]),
            "mixed3": poly_quotient(F, [0, 1, -2, 1]),  # x (x - 1)^2
            "k_times_k": product_algebra(truncated(F, 1), truncated(F, 1)),
            "k3": product_algebra(product_algebra(truncated(F, 1), truncated(F, 1)), truncated(F, 1)),
            "dual_times_k": product_algebra(d2, truncated(F, 1)),
            "dual_tensor_dual": tensor_algebra(d2, d2),
            "dual_tensor_trunc3": tensor_algebra(d2, truncated(F, 3)),
            "trunc3_tensor_trunc3": tensor_algebra(truncated(F, 3), truncated(F, 3)),
            "dual_tensor_split2": tensor_algebra(d2, poly_quotient(F, [-1, 0, 1])),
            "quartic": poly_quotient(F, [-1, -1, 0, 0, 1]),  # x^4 = x + 1
            "k_times_trunc3": product_algebra(truncated(F, 1), truncated(F, 3)),
            "dual_tensor_trunc4": tensor_algebra(d2, truncated(F, 4)),
            "trunc9": truncated(F, 9),
        }
    )
    return out


# -- algebra objects and Lie-Rinehart data --------------------------------------


def algebra_object_corpus(F: Field = QQ) -> dict[str, LMAlgebraObject]:
    t2, t3, t4 = truncated(F, 2), truncated(F, 3), truncated(F, 4)
    return {
        "id_trunc2": identity_algebra_object(t2),
        "id_trunc3": identity_algebra_object(t3),
        "id_split2": identity_algebra_object(poly_quotient(F, [-1, 0, 1])),
        "ideal_x_trunc3": ideal_object(t3, [[0, 1, 0]]),
        "ideal_x2_trunc4": ideal_object(t4, [[0, 0, 1, 0]]),
        "square_zero_trunc2": square_zero_object(t2, regular_module(t2)),
        "square_zero_k": square_zero_object(truncated(F, 1), regular_module(truncated(F, 1))),
        "zero_into_trunc3": LMAlgebraObject(t3, zero_module(t3), F.zeros((3, 0))),
    }


def pair_corpus(F: Field = QQ) -> dict[str, LieRinehartPair]:
    out = {}
    for name in ("trunc2", "trunc3", "trunc4", "dual_tensor_dual", "mixed3"):
        out[f"der_{name}"] = derivation_pair(algebra_corpus(F)[name])
    k = truncated(F, 1)
    for name in ("sl2", "heisenberg", "nonabelian2"):
        L = lie_corpus(F)[name]
        scalar = AModule(F, F.eye(L.dim).reshape(1, L.dim, L.dim))
        out[f"field_{name}"] = LieRinehartPair(k, L, scalar, F.zeros((L.dim, 1, 1)))
    return out


def theorem1_corpus(F: Field = QQ) -> dict[str, TheoremOneData]:
    pairs = pair_corpus(F)
    objs = algebra_object_corpus(F)
    out = {
        "tautological_trunc2": build_tautological(pairs["der_trunc2"]),
        "tautological_trunc3": build_tautological(pairs["der_trunc3"]),
        "tautological_trunc4": build_tautological(pairs["der_trunc4"]),
        "tautological_dual_tensor_dual": build_tautological(pairs["der_dual_tensor_dual"]),
        "tautological_field_sl2": build_tautological(pairs["field_sl2"]),
        "trivial_sl2": trivial_theorem1(sl2(F)),
        "trivial_heisenberg": trivial_theorem1(heisenberg(F)),
    }
    for name in ("id_trunc2", "id_trunc3", "ideal_x_trunc3", "square_zero_trunc2"):
        out[f"universal_{name}"] = universal_derivations(objs[name]).as_theorem1()
    return out


def algebroid_corpus(F: Field = QQ) -> dict[str, LeibnizAlgebroid]:
    pairs = pair_corpus(F)
    out = {f"pair_{name}": pair_as_algebroid(p) for name, p in pairs.items()}
    for name in ("der_trunc2", "der_trunc3", "der_dual_tensor_dual"):
        out[f"hemi_{name}"] = hemi_semi_algebroid(pairs[name])
    k = truncated(F, 1)
    for name in ("leibniz2", "leibniz3_two_squares", "hemi_sl2_natural"):
        E = leibniz_corpus(F)[name]
        scalar = AModule(F, F.eye(E.dim).reshape(1, E.dim, E.dim))
        out[f"field_{name}"] = LeibnizAlgebroid(k, E, scalar, F.zeros((E.dim, 1, 1)))
    return out


def unstable_squares_algebroid(F: Field = QQ) -> LeibnizAlgebroid:
    """Zero-anchor algebroid over ``k x k`` whose squares ideal is not a submodule.

    ``E = E1 (+) E2`` with ``E1 = <p, q>`` and ``E2 = <r, s>`` the two
    eigenspaces of the idempotents; ``[p, r] = q`` and ``[r, p] = s``, so the
    only square direction is ``q + s``, which the idempotent splits.
    """
    A = product_algebra(truncated(F, 1), truncated(F, 1))
    E = leibniz_from_table(F, 4, {(0, 2): {1: 1}, (2, 0): {3: 1}})
    act = F.zeros((2, 4, 4))
    act[0, 0, 0] = act[0, 1, 1] = F.one
    act[1, 2, 2] = act[1, 3, 3] = F.one
    return LeibnizAlgebroid(A, E, AModule(F, act), F.zeros((4, 2, 2)))


def leibniz2_algebroid(F: Field = QQ) -> LeibnizAlgebroid:
    k = truncated(F, 1)
    return LeibnizAlgebroid(k, leibniz2(F), AModule(F, F.eye(2).reshape(1, 2, 2)), F.zeros((2, 1, 1)))
