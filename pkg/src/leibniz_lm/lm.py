"""The category of linear maps: objects ``u: V -> W``, commuting squares, the
monoidal product and symmetry, and recognizers for algebra objects, Lie
algebra objects and their modules.

Layout of a tensor product ``(V -> W) (x) (V' -> W')``: the top space is
``V (x) W'`` followed by ``W (x) V'``, each block row-major as in ``np.kron``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import AModule, CommAlgebra, check_comm_algebra, module_violations, relator_vectors, square_zero_extension
from .exactlin import QQ, Field, Subspace, arrays_equal, inverse, nullspace
from .exactlin import einsum as xeinsum
from .leibniz import LeibnizAlgebra, LieAlgebra, check_lie, lie_module_violations, reduce, right_module_violations
from .report import CheckReport, StructureError, collect, prefixed
from .tensors import rebase_bilinear

__all__ = [
    "LMObject",
    "LMMorphism",
    "LMAlgebraObject",
    "LMLieObject",
    "identity",
    "zero_morphism",
    "compose",
    "tensor_objects",
    "tensor_morphisms",
    "braiding",
    "unit_object",
    "associator",
    "left_unitor",
    "right_unitor",
    "morphism_space",
    "check_morphism",
    "check_algebra_object",
    "check_lie_object",
    "check_module_over_algebra_object",
    "check_module_over_lie_object",
    "check_squares_annihilation",
    "check_structure_morphism",
    "identity_algebra_object",
    "ideal_object",
    "square_zero_object",
    "identity_lie_object",
    "reduction_object",
    "self_action",
]


def _matrix(field: Field, data, rows: int, cols: int, what: str) -> np.ndarray:
    m = field.array(data, shape=(rows, cols))
    if m.shape != (rows, cols):
        raise StructureError(f"{what} has shape {m.shape}, expected {(rows, cols)}")
    m.flags.writeable = False
    return m


def commutation_matrix(field: Field, m: int, n: int) -> np.ndarray:
    """Matrix of ``x (x) y -> y (x) x`` for ``x`` in ``k^m`` and ``y`` in ``k^n``."""
    K = field.zeros((n * m, m * n))
    for i in range(m):
        for j in range(n):
            K[j * m + i, i * n + j] = field.one
    return K


def block_diag(field: Field, *blocks) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = field.zeros((rows, cols))
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


@dataclass(frozen=True, eq=False)
class LMObject:
    """A linear map ``u: V -> W`` given as a ``(dim W, dim V)`` matrix."""

    field: Field
    u: np.ndarray
    top_label: str = "V"
    bottom_label: str = "W"

    def __post_init__(self):
        u = self.field.array(self.u)
        if u.ndim != 2:
            raise StructureError(f"vertical map must be a matrix, got shape {u.shape}")
        u.flags.writeable = False
        object.__setattr__(self, "u", u)

    @classmethod
    def from_dims(cls, field: Field, dim_top: int, dim_bottom: int, u=None, **labels) -> "LMObject":
        u = field.zeros((dim_bottom, dim_top)) if u is None else _matrix(field, u, dim_bottom, dim_top, "vertical map")
        return cls(field, u, **labels)

    @property
    def dim_top(self) -> int:
        return self.u.shape[1]

    @property
    def dim_bottom(self) -> int:
        return self.u.shape[0]

    def same_as(self, other: "LMObject") -> bool:
        return self.field == other.field and arrays_equal(self.u, other.u)

    def rebased(self, p_top, p_bottom_inv) -> "LMObject":
        return LMObject(self.field, p_bottom_inv @ self.u @ p_top, self.top_label, self.bottom_label)


@dataclass(frozen=True, eq=False)
class LMMorphism:
    """A commuting square ``target.u @ h1 == h0 @ source.u``.

    The square is verified at construction; a failing square raises
    :class:`StructureError` naming the offending column.
    """

    source: LMObject
    target: LMObject
    h1: np.ndarray
    h0: np.ndarray
    verify: bool = True

    def __post_init__(self):
        F = self.source.field
        h1 = _matrix(F, self.h1, self.target.dim_top, self.source.dim_top, "top map h1")
        h0 = _matrix(F, self.h0, self.target.dim_bottom, self.source.dim_bottom, "bottom map h0")
        object.__setattr__(self, "h1", h1)
        object.__setattr__(self, "h0", h0)
        if self.verify:
            rep = check_morphism(self)
            if not rep.passed:
                v = rep.violations[0]
                raise StructureError(f"square does not commute on top basis vector {v.witness[0]}")

    @property
    def field(self) -> Field:
        return self.source.field

    def same_as(self, other: "LMMorphism") -> bool:
        return (
            self.source.same_as(other.source)
            and self.target.same_as(other.target)
            and arrays_equal(self.h1, other.h1)
            and arrays_equal(self.h0, other.h0)
        )


def check_morphism(h: LMMorphism, axiom: str = "square") -> CheckReport:
    res = h.target.u @ h.h1 - h.h0 @ h.source.u
    # witness = column (top basis vector) where the square fails
    return CheckReport("lm_morphism", collect(axiom, res.T, 1), field=h.field)


def identity(a: LMObject) -> LMMorphism:
    F = a.field
    return LMMorphism(a, a, F.eye(a.dim_top), F.eye(a.dim_bottom))


def zero_morphism(a: LMObject, b: LMObject) -> LMMorphism:
    F = a.field
    return LMMorphism(a, b, F.zeros((b.dim_top, a.dim_top)), F.zeros((b.dim_bottom, a.dim_bottom)))


def compose(h: LMMorphism, g: LMMorphism) -> LMMorphism:
    """``h o g = (h1 g1, h0 g0)``; requires ``g.target`` to be ``h.source``."""
    if not g.target.same_as(h.source):
        raise StructureError("cannot compose: target of the first morphism differs from source of the second")
    out = LMMorphism(g.source, h.target, h.h1 @ g.h1, h.h0 @ g.h0, verify=False)
    rep = check_morphism(out, "hgcomp-square")
    if not rep.passed:
        raise StructureError("composite square does not commute")
    return out


def tensor_objects(a: LMObject, b: LMObject) -> LMObject:
    """``V (x) W' (+) W (x) V' -> W (x) W'`` with map ``u (x) 1 + 1 (x) u'``."""
    if a.field != b.field:
        raise StructureError("objects live over different fields")
    F = a.field
    left = _kron(F, a.u, F.eye(b.dim_bottom))
    right = _kron(F, F.eye(a.dim_bottom), b.u)
    u = np.hstack([left, right])
    return LMObject(F, u, f"({a.top_label}{b.bottom_label}+{a.bottom_label}{b.top_label})", f"({a.bottom_label}{b.bottom_label})")


def _kron(F: Field, x, y) -> np.ndarray:
    shape = (x.shape[0] * y.shape[0], x.shape[1] * y.shape[1])
    if 0 in shape:
        return F.zeros(shape)
    return np.kron(x, y)


def tensor_morphisms(g: LMMorphism, h: LMMorphism) -> LMMorphism:
    """``g (x) h = (g1 (x) h0 + g0 (x) h1, g0 (x) h0)``, block diagonal on the top."""
    F = g.field
    src = tensor_objects(g.source, h.source)
    tgt = tensor_objects(g.target, h.target)
    top = block_diag(F, _kron(F, g.h1, h.h0), _kron(F, g.h0, h.h1))
    out = LMMorphism(src, tgt, top, _kron(F, g.h0, h.h0), verify=False)
    if not check_morphism(out, "hgtensor-square").passed:
        raise StructureError("tensor square does not commute")
    return out


def braiding(a: LMObject, b: LMObject) -> LMMorphism:
    """Symmetry ``a (x) b -> b (x) a``.

    ``tau0`` swaps ``W (x) W'``; ``tau1`` sends ``v (x) w'`` to ``w' (x) v``
    (second block of the target) and ``w (x) v'`` to ``v' (x) w`` (first block).
    """
    F = a.field
    V, W, V2, W2 = a.dim_top, a.dim_bottom, b.dim_top, b.dim_bottom
    tau0 = commutation_matrix(F, W, W2)
    src_first, tgt_first = V * W2, V2 * W
    tau1 = F.zeros((V2 * W + W2 * V, V * W2 + W * V2))
    # V (x) W'  ->  W' (x) V
    tau1[tgt_first:, :src_first] = commutation_matrix(F, V, W2)
    # W (x) V'  ->  V' (x) W
    tau1[:tgt_first, src_first:] = commutation_matrix(F, W, V2)
    return LMMorphism(tensor_objects(a, b), tensor_objects(b, a), tau1, tau0)


def unit_object(field: Field = QQ) -> LMObject:
    """``0 -> k``."""
    return LMObject(field, field.zeros((1, 0)), "0", "k")


def left_unitor(a: LMObject) -> LMMorphism:
    """``unit (x) a -> a``; in the chosen layout both maps are identities."""
    F = a.field
    return LMMorphism(tensor_objects(unit_object(F), a), a, F.eye(a.dim_top), F.eye(a.dim_bottom))


def right_unitor(a: LMObject) -> LMMorphism:
    F = a.field
    return LMMorphism(tensor_objects(a, unit_object(F)), a, F.eye(a.dim_top), F.eye(a.dim_bottom))


def _top_keys_left(a, b, c):
    """Basis of the top of ``(a (x) b) (x) c`` as (pattern, i, j, k) keys, in layout order."""
    V1, W1, V2, W2, V3, W3 = a.dim_top, a.dim_bottom, b.dim_top, b.dim_bottom, c.dim_top, c.dim_bottom
    keys = []
    # (V1 W2 + W1 V2) (x) W3
    keys += [("VWW", i, j, k) for i, j, k in product(range(V1), range(W2), range(W3))]
    keys += [("WVW", i, j, k) for i, j, k in product(range(W1), range(V2), range(W3))]
    # (W1 W2) (x) V3
    keys += [("WWV", i, j, k) for i, j, k in product(range(W1), range(W2), range(V3))]
    return keys


def _top_keys_right(a, b, c):
    V1, W1, V2, W2, V3, W3 = a.dim_top, a.dim_bottom, b.dim_top, b.dim_bottom, c.dim_top, c.dim_bottom
    keys = [("VWW", i, j, k) for i, j, k in product(range(V1), range(W2), range(W3))]
    # W1 (x) (V2 W3 + W2 V3), the second factor's blocks nested inside
    for i in range(W1):
        keys += [("WVW", i, j, k) for j, k in product(range(V2), range(W3))]
        keys += [("WWV", i, j, k) for j, k in product(range(W2), range(V3))]
    return keys


def associator(a: LMObject, b: LMObject, c: LMObject) -> LMMorphism:
    """Canonical isomorphism ``(a (x) b) (x) c -> a (x) (b (x) c)``.

    The top map is the permutation matching basis tensors by their factor
    pattern and indices; the bottom map is the identity.
    """
    F = a.field
    src = tensor_objects(tensor_objects(a, b), c)
    tgt = tensor_objects(a, tensor_objects(b, c))
    lk, rk = _top_keys_left(a, b, c), _top_keys_right(a, b, c)
    where = {key: r for r, key in enumerate(rk)}
    P = F.zeros((len(rk), len(lk)))
    for col, key in enumerate(lk):
        P[where[key], col] = F.one
    return LMMorphism(src, tgt, P, F.eye(src.dim_bottom))


def morphism_space(a: LMObject, b: LMObject):
    """Basis of all commuting squares ``a -> b`` as a list of :class:`LMMorphism`."""
    F = a.field
    V, W, V2, W2 = a.dim_top, a.dim_bottom, b.dim_top, b.dim_bottom
    n1, n0 = V2 * V, W2 * W
    # unknowns: h1 row-major then h0 row-major; equation u' h1 - h0 u = 0
    eq = F.zeros((W2 * V, n1 + n0))
    for r in range(W2):
        for c in range(V):
            row = r * V + c
            for s in range(V2):
                eq[row, s * V + c] += b.u[r, s]
            for t in range(W):
                eq[row, n1 + r * W + t] -= a.u[t, c]
    sol = nullspace(eq, F) if eq.shape[1] else Subspace(F, 0)
    out = []
    for vec in sol.basis:
        out.append(LMMorphism(a, b, vec[:n1].reshape(V2, V), vec[n1:].reshape(W2, W)))
    return out


# -- algebra objects ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LMAlgebraObject:
    """``g: M -> A`` with ``A`` commutative and ``M`` a symmetric ``A``-module."""

    A: CommAlgebra
    M: AModule
    g: np.ndarray

    def __post_init__(self):
        if self.M.field != self.A.field:
            raise StructureError("module and algebra over different fields")
        if self.M.algebra_dim != self.A.dim:
            raise StructureError(f"module expects a {self.M.algebra_dim}-dim algebra, got {self.A.dim}")
        object.__setattr__(self, "g", _matrix(self.A.field, self.g, self.A.dim, self.M.dim, "g"))

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def object(self) -> LMObject:
        return LMObject(self.field, self.g, "M", "A")

    def rebased(self, p_algebra, p_module) -> "LMAlgebraObject":
        q = inverse(p_algebra, self.field)
        return LMAlgebraObject(self.A.rebased(p_algebra), self.M.rebased(p_algebra, p_module), q @ self.g @ p_module)


def g_linearity_violations(x: LMAlgebraObject) -> list:
    # g(a_i . m_j) - a_i g(m_j)
    left = xeinsum("ijk,lk->ijl", x.M.action, x.g)
    right = xeinsum("kj,ikl->ijl", x.g, x.A.mult)
    return collect("g-Alin", left - right, 2)


def check_algebra_object(x: LMAlgebraObject) -> CheckReport:
    viol = list(check_comm_algebra(x.A).violations)
    viol += module_violations(x.A, x.M)
    viol += g_linearity_violations(x)
    return CheckReport("algebra_object", viol, field=x.field)


def identity_algebra_object(A: CommAlgebra) -> LMAlgebraObject:
    return LMAlgebraObject(A, AModule(A.field, A.mult), A.field.eye(A.dim))


def ideal_object(A: CommAlgebra, generators) -> LMAlgebraObject:
    """Inclusion ``I -> A`` of the ideal generated by ``generators`` (vectors in ``A``)."""
    F = A.field
    sub = Subspace.span(F, A.dim, [F.array(v) for v in generators])
    while True:
        bigger = sub.extended([A.product(F.unit_vector(A.dim, i), s) for i in range(A.dim) for s in sub.basis])
        if bigger.dim == sub.dim:
            break
        sub = bigger
    B = sub.basis  # rows are the ideal basis, written in A
    incl = B.T.copy()
    act = F.zeros((A.dim, sub.dim, sub.dim))
    for i in range(A.dim):
        for j in range(sub.dim):
            act[i, j] = sub.coordinates(A.product(F.unit_vector(A.dim, i), B[j]))
    return LMAlgebraObject(A, AModule(F, act), incl)


def square_zero_object(A: CommAlgebra, M: AModule) -> LMAlgebraObject:
    """``M -> A (+) M`` into the square-zero extension; ``(a, m')`` acts on ``M`` through ``a``."""
    F = A.field
    B = square_zero_extension(A, M)
    act = F.zeros((B.dim, M.dim, M.dim))
    act[: A.dim] = M.action
    incl = F.zeros((B.dim, M.dim))
    incl[A.dim :, :] = F.eye(M.dim)
    return LMAlgebraObject(B, AModule(F, act), incl)


# -- Lie algebra objects -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class LMLieObject:
    """``f: N -> L`` with ``[n_i, x_j] = sum_k action[i, j, k] n_k`` a right action."""

    L: LeibnizAlgebra
    action: np.ndarray
    f: np.ndarray

    def __post_init__(self):
        F = self.L.field
        act = F.array(self.action)
        if act.ndim != 3 or act.shape[1] != self.L.dim or act.shape[0] != act.shape[2]:
            raise StructureError(f"right action of shape {act.shape} does not fit a {self.L.dim}-dim Lie algebra")
        act.flags.writeable = False
        object.__setattr__(self, "action", act)
        object.__setattr__(self, "f", _matrix(F, self.f, self.L.dim, act.shape[0], "f"))

    @property
    def field(self) -> Field:
        return self.L.field

    @property
    def dim_N(self) -> int:
        return self.action.shape[0]

    @property
    def object(self) -> LMObject:
        return LMObject(self.field, self.f, "N", "L")

    def rebased(self, p_lie, p_n) -> "LMLieObject":
        F = self.field
        q_lie, q_n = inverse(p_lie, F), inverse(p_n, F)
        return LMLieObject(self.L.rebased(p_lie), rebase_bilinear(self.action, p_n, p_lie, q_n), q_lie @ self.f @ p_n)

    def n_bracket(self):
        """Leibniz bracket ``[n1, n2]_N = [n1, f(n2)]`` on ``N`` as a structure tensor."""
        return xeinsum("jb,ajk->abk", self.f, self.action)


def equivariance_violations(x: LMLieObject) -> list:
    # f([n, xi]) - [f(n), xi]
    left = xeinsum("ijk,lk->ijl", x.action, x.f)
    right = xeinsum("ki,kjl->ijl", x.f, x.L.bracket)
    return collect("equivariant", left - right, 2)


def check_lie_object(x: LMLieObject) -> CheckReport:
    viol = list(check_lie(x.L).violations)
    viol += right_module_violations(x.L, x.action)
    viol += equivariance_violations(x)
    return CheckReport("lie_object", viol, field=x.field)


def identity_lie_object(L: LieAlgebra) -> LMLieObject:
    return LMLieObject(L, L.bracket, L.field.eye(L.dim))


def reduction_object(g: LeibnizAlgebra) -> LMLieObject:
    """``pi: g -> g_Lie`` with ``g_Lie`` acting on ``g`` through any lift."""
    red = reduce(g)
    # [n, x] := [n, section(x)]_g
    act = xeinsum("ja,ijk->iak", red.section, g.bracket)
    return LMLieObject(red.lie, act, red.pi)


# -- modules over algebra objects ---------------------------------------------


def check_module_over_algebra_object(
    x: LMAlgebraObject, v: LMObject, top: AModule, bottom: AModule, alpha
) -> CheckReport:
    """``v = (V -> W)`` as a left module over ``x = (M -> A)``.

    ``top`` and ``bottom`` are the ``A``-actions on ``V`` and ``W``; ``alpha``
    is the structure map on ``M (x)_k W`` as a ``(dim V, dim M * dim W)``
    matrix, column ``m * dim W + w``. It must vanish on the relators of
    ``M (x)_A W``, be ``A``-linear and satisfy ``u(alpha(m (x) w)) = g(m).w``.
    """
    F = x.field
    A, M = x.A, x.M
    dV, dW = v.dim_top, v.dim_bottom
    if top.dim != dV or bottom.dim != dW:
        return CheckReport("module_over_algebra_object", [_shape_violation()], field=F)
    alpha = _matrix(F, alpha, dV, M.dim * dW, "structure map")
    viol = prefixed("V", module_violations(A, top)) + prefixed("W", module_violations(A, bottom))
    # u(a . v) - a . u(v)
    left = xeinsum("ijk,lk->ijl", top.action, v.u)
    right = xeinsum("kj,ikl->ijl", v.u, bottom.action)
    viol += collect("u-Alin", left - right, 2)
    if M.dim * dW:
        rel = relator_vectors(A, M, bottom)  # (dA, dM, dW, dM*dW)
        viol += collect("alpha-descent", xeinsum("ijwc,vc->ijwv", rel, alpha), 3)
        a3 = alpha.reshape(dV, M.dim, dW)
        # alpha((a.m) (x) w) - a . alpha(m (x) w)
        first = xeinsum("imk,vkw->imwv", M.action, a3)
        second = xeinsum("smw,isv->imwv", a3, top.action)
        viol += collect("alpha-Alin", first - second, 3)
        # u alpha(m (x) w) - g(m).w
        ua = xeinsum("rv,vmw->mwr", v.u, a3)
        gw = xeinsum("km,kwr->mwr", x.g, bottom.action)
        viol += collect("alpha-ell", ua - gw, 2)
    return CheckReport("module_over_algebra_object", viol, field=F)


def _shape_violation(*witness):
    from .report import Violation

    return Violation("shape", tuple(witness), ())


# -- modules over Lie objects --------------------------------------------------


def check_module_over_lie_object(x: LMLieObject, v: LMObject, alpha0, alpha1, alpha2) -> CheckReport:
    """``v = (V -> W)`` as a left module over ``x = (N -> L)``.

    ``alpha0[i, w, w']``: ``x_i . w``; ``alpha2[i, v, v']``: ``x_i . v``;
    ``alpha1[n, w, v]``: coefficient of ``v`` in ``alpha1(n (x) w)``.
    """
    F = x.field
    L = x.L
    dV, dW, dN = v.dim_top, v.dim_bottom, x.dim_N
    a0, a1, a2 = F.array(alpha0), F.array(alpha1), F.array(alpha2)
    if a0.shape != (L.dim, dW, dW) or a2.shape != (L.dim, dV, dV) or a1.shape != (dN, dW, dV):
        return CheckReport("module_over_lie_object", [_shape_violation()], field=F)
    viol = lie_module_violations(L, a0, "lmod-W") + lie_module_violations(L, a2, "lmod-V")
    # alpha1([n, x] (x) w) = alpha1(n (x) x.w) - x.alpha1(n (x) w), witness (n, x, w)
    lhs = xeinsum("nxk,kwv->nxwv", x.action, a1)
    t1 = xeinsum("xwk,nkv->nxwv", a0, a1)
    t2 = xeinsum("nws,xsv->nxwv", a1, a2)
    viol += collect("compat3", lhs - t1 + t2, 3)
    # u alpha1(n (x) w) = alpha0(f(n) (x) w)
    ua1 = xeinsum("rv,nwv->nwr", v.u, a1)
    af = xeinsum("in,iwr->nwr", x.f, a0)
    viol += collect("compat-u1", ua1 - af, 2)
    # u alpha2(x (x) v) = alpha0(x (x) u(v))
    ua2 = xeinsum("rs,ivs->ivr", v.u, a2)
    au = xeinsum("wv,iwr->ivr", v.u, a0)
    viol += collect("compat-u2", ua2 - au, 2)
    return CheckReport("module_over_lie_object", viol, field=F)


def self_action(x: LMLieObject):
    """``(v, alpha0, alpha1, alpha2)`` for ``x`` acting on itself.

    ``alpha0`` is the adjoint action, ``alpha1(n (x) w) = [n, w]`` and
    ``alpha2(x (x) n) = -[n, x]``.
    """
    a0 = x.L.bracket
    a1 = x.action
    a2 = -np.transpose(x.action, (1, 0, 2))
    return x.object, a0, a1, a2


def check_squares_annihilation(x: LMLieObject, action_N: AModule, action_L: AModule, A: CommAlgebra) -> CheckReport:
    """``[n1, a.[n2, n2]_N]_N = 0`` in polarized form.

    The witness is ``(n1, a, n2, n3)`` with ``n2 <= n3``; for ``n2 < n3`` the
    square is replaced by ``[n2, n3]_N + [n3, n2]_N``, which is linear and
    vanishes exactly when all squares do.
    """
    F = x.field
    del action_L  # A-linearity of f is checked elsewhere; only the N-action enters the law
    br = x.n_bracket()
    sym = br + np.transpose(br, (1, 0, 2))
    dN = x.dim_N
    for i in range(dN):
        sym[i, i] = br[i, i]
    # a . s, then [n1, .]_N
    a_s = xeinsum("bck,akl->abcl", sym, action_N.action)  # (a, n2, n3, N)
    res = xeinsum("abcl,nlm->nabcm", a_s, br)
    viol = [v for v in collect("extra", res, 4) if v.witness[2] <= v.witness[3]]
    return CheckReport("squares_annihilation", viol, field=F)


def check_structure_morphism(phi1, phi0, source, target, kind: str) -> CheckReport:
    """Morphism of algebra objects (``kind="algebra"``) or Lie objects (``kind="lie"``)."""
    if kind == "algebra":
        F = source.field
        phi1 = _matrix(F, phi1, target.M.dim, source.M.dim, "phi1")
        phi0 = _matrix(F, phi0, target.A.dim, source.A.dim, "phi0")
        # phi1(a . m) - phi0(a) . phi1(m)
        left = xeinsum("ijk,lk->ijl", source.M.action, phi1)
        right = xeinsum("pi,qj,pql->ijl", phi0, phi1, target.M.action)
        viol = collect("algebra-map-1", left - right, 2)
        left = xeinsum("ijk,lk->ijl", source.A.mult, phi0)
        right = xeinsum("pi,qj,pql->ijl", phi0, phi0, target.A.mult)
        viol += collect("algebra-map-0", left - right, 2)
        sq = target.g @ phi1 - phi0 @ source.g
    elif kind == "lie":
        F = source.field
        phi1 = _matrix(F, phi1, target.dim_N, source.dim_N, "a1")
        phi0 = _matrix(F, phi0, target.L.dim, source.L.dim, "a0")
        left = xeinsum("ijk,lk->ijl", source.action, phi1)
        right = xeinsum("pi,qj,pql->ijl", phi1, phi0, target.action)
        viol = collect("lie-map-1", left - right, 2)
        left = xeinsum("ijk,lk->ijl", source.L.bracket, phi0)
        right = xeinsum("pi,qj,pql->ijl", phi0, phi0, target.L.bracket)
        viol += collect("lie-map-0", left - right, 2)
        sq = target.f @ phi1 - phi0 @ source.f
    else:
        raise ValueError(f"unknown morphism kind {kind!r}")
    viol += collect("square", sq.T, 1)
    return CheckReport(f"{kind}_morphism", viol, field=F)
