"""Derivations of commutative algebras and of algebra objects.

A linear map ``A -> M`` is stored as a ``(dim M, dim A)`` matrix; a space of
such maps is a :class:`~leibniz_lm.exactlin.Subspace` of the row-major
flattened matrices, so coordinates are read off the pivot columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AModule, CommAlgebra, regular_module
from .exactlin import Field, Subspace, is_zero, nullspace
from .exactlin import einsum as xeinsum
from .leibniz import LieAlgebra
from .lm import LMAlgebraObject, LMLieObject
from .report import CheckReport, PreconditionError, StructureError, Violation, collect
from .tensors import commutator

__all__ = [
    "DerivationSpace",
    "DerivationsLMObject",
    "derivation_space",
    "derivation_violations",
    "derivation_lie",
    "endo_lie",
    "universal_derivations",
    "action_der_identity",
    "check_action_by_derivations",
]


@dataclass(frozen=True, eq=False)
class DerivationSpace:
    """All ``d: A -> M`` with ``d(ab) = a.d(b) + b.d(a)``."""

    A: CommAlgebra
    M: AModule
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> np.ndarray:
        """Basis derivations as an array of shape ``(dim, dim M, dim A)``."""
        return self.space.basis.reshape(self.dim, self.M.dim, self.A.dim)

    def coordinates(self, d) -> np.ndarray:
        """Coordinates of the map ``d``; ``ValueError`` if it is not a derivation."""
        return self.space.coordinates(np.asarray(d, dtype=object).reshape(-1))

    def element(self, coords) -> np.ndarray:
        if not self.dim:
            return self.A.field.zeros((self.M.dim, self.A.dim))
        return xeinsum("t,trc->rc", coords, self.basis)


def _leibniz_system(A: CommAlgebra, M: AModule) -> np.ndarray:
    """Rows: the Leibniz rule at ``(a_i, a_j)`` and output ``m_o``; columns: entries ``d[r, c]``."""
    F = A.field
    dA, dM = A.dim, M.dim
    IA, IM = F.eye(dA), F.eye(dM)
    # d(a_i a_j)_o = sum_c mult[i,j,c] d[o,c]
    t1 = xeinsum("ijc,or->ijorc", A.mult, IM)
    # (a_i . d(a_j))_o = sum_r d[r,j] act[i,r,o]
    t2 = xeinsum("iro,jc->ijorc", M.action, IA)
    t3 = xeinsum("jro,ic->ijorc", M.action, IA)
    return (t1 - t2 - t3).reshape(dA * dA * dM, dM * dA)


def derivation_space(A: CommAlgebra, M: AModule | None = None) -> DerivationSpace:
    """``Der(A, M)`` (``M`` defaults to ``A``) as the nullspace of the Leibniz rule."""
    M = regular_module(A) if M is None else M
    if M.algebra_dim != A.dim or M.field != A.field:
        raise StructureError("module is not over the given algebra")
    n = A.dim * M.dim
    if n == 0:
        return DerivationSpace(A, M, Subspace(A.field, 0))
    return DerivationSpace(A, M, nullspace(_leibniz_system(A, M), A.field))


def derivation_violations(A: CommAlgebra, M: AModule, maps, axiom: str = "der") -> list:
    """Leibniz-rule residuals of each map in ``maps`` (shape ``(k, dim M, dim A)``); witness ``(t, i, j)``."""
    maps = A.field.array(maps)
    if maps.size == 0:
        return []
    d_ab = xeinsum("ijc,toc->tijo", A.mult, maps)
    a_db = xeinsum("trj,iro->tijo", maps, M.action)
    b_da = xeinsum("tri,jro->tijo", maps, M.action)
    return collect(axiom, d_ab - a_db - b_da, 3)


def endo_lie(M) -> LieAlgebra:
    """``Hom(M, M)`` under the commutator; ``E_ij`` has index ``i * dim M + j``.

    ``M`` may be an :class:`AModule` or a pair ``(field, dim)``.
    """
    F, d = (M.field, M.dim) if isinstance(M, AModule) else M
    E = F.zeros((d * d, d, d))
    for i in range(d):
        for j in range(d):
            E[i * d + j, i, j] = F.one
    prod = xeinsum("aij,bjk->abik", E, E)
    br = (prod - np.transpose(prod, (1, 0, 2, 3))).reshape(d * d, d * d, d * d)
    return LieAlgebra(F, br)


def derivation_lie(A: CommAlgebra):
    """``(Der(A), space)``: the commutator Lie algebra on a basis of derivations of ``A``."""
    D = derivation_space(A)
    B = D.basis
    n = D.dim
    br = A.field.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            br[i, j] = D.coordinates(commutator(B[i], B[j]))
    return LieAlgebra(A.field, br), D


@dataclass(frozen=True, eq=False)
class DerivationsLMObject:
    """The universal Lie algebra object of derivations of ``M -> A``.

    ``top`` is ``Der(A, M)``. The bottom Lie algebra is the space of pairs
    ``(alpha, beta)`` in ``Der(A) (+) Hom(M, M)`` with
    ``beta(a.m) = a.beta(m) + alpha(a).m`` and ``g beta = alpha g``, bracketed
    componentwise by commutators. Its elements are listed in ``alphas`` and
    ``betas``; ``embedding`` writes them in the ambient coordinates (``Der(A)``
    coordinates first, then ``Hom(M, M)`` row-major) of dimension
    ``ambient_dim``.
    """

    alg: LMAlgebraObject
    top: DerivationSpace
    der_A: DerivationSpace
    pairs: Subspace
    alphas: np.ndarray
    betas: np.ndarray
    lie: LMLieObject
    action_L: np.ndarray
    action_N: np.ndarray

    @property
    def ambient_dim(self) -> int:
        return self.pairs.ambient_dim

    @property
    def embedding(self) -> np.ndarray:
        return self.pairs.basis.T

    @property
    def field(self) -> Field:
        return self.alg.field

    def pair_coordinates(self, alpha, beta) -> np.ndarray:
        vec = np.concatenate([self.der_A.coordinates(alpha), np.asarray(beta, dtype=object).reshape(-1)])
        return self.pairs.coordinates(vec)

    def rho0(self) -> np.ndarray:
        """``(alpha, beta) -> alpha`` as a hom-valued tensor ``(dim L, dim A, dim A)``."""
        return self.alphas

    def rho2(self) -> np.ndarray:
        return self.betas

    def rho1(self) -> np.ndarray:
        """The identity ``Der(A, M) -> Der(A, M)`` as a tensor ``(dim N, dim M, dim A)``."""
        return self.top.basis

    def lam(self) -> np.ndarray:
        """``lambda(m (x) (alpha, beta)) = (b -> alpha(b).m)`` as a ``(dim N, dim M * dim L)`` matrix."""
        F = self.field
        dM, dL, dN = self.alg.M.dim, self.lie.L.dim, self.lie.dim_N
        out = F.zeros((dN, dM * dL))
        act = self.alg.M.action
        for m in range(dM):
            for x in range(dL):
                # (b -> alpha(b) . m)[r, b] = sum_k alpha[k, b] act[k, m, r]
                d = xeinsum("kb,kr->rb", self.alphas[x], act[:, m, :])
                out[:, m * dL + x] = self.top.coordinates(d)
        return out

    def as_theorem1(self):
        from .lie_rinehart import TheoremOneData

        return TheoremOneData(
            alg=self.alg,
            lie=self.lie,
            rho0=self.rho0(),
            rho1=self.rho1(),
            rho2=self.rho2(),
            lam=self.lam(),
            action_L=AModule(self.field, self.action_L),
            action_N=AModule(self.field, self.action_N),
        )


def _compatible_pairs(x: LMAlgebraObject, der_A: DerivationSpace) -> Subspace:
    F = x.field
    A, M, g = x.A, x.M, x.g
    dA, dM, dD = A.dim, M.dim, der_A.dim
    n = dD + dM * dM
    if n == 0:
        return Subspace(F, 0)
    D = der_A.basis
    act = M.action
    IM = F.eye(dM)
    # beta(a_i . m_j) - a_i . beta(m_j) - alpha(a_i) . m_j = 0, rows (i, j, o)
    rows1 = F.zeros((dA, dM, dM, n))
    # alpha part: alpha(a_i) = sum_k D_t[k, i] a_k acting on m_j
    rows1[..., :dD] = -xeinsum("tki,kjo->ijot", D, act)
    # beta[r, c]: beta(a_i.m_j)_o = sum_c act[i,j,c] beta[o,c];  (a_i.beta(m_j))_o = sum_r beta[r,j] act[i,r,o]
    b1 = xeinsum("ijc,or->ijorc", act, IM)
    b2 = xeinsum("iro,jc->ijorc", act, IM)
    rows1[..., dD:] = (b1 - b2).reshape(dA, dM, dM, dM * dM)
    # g beta(m_j) - alpha(g m_j) = 0, rows (j, o) with o in A
    rows2 = F.zeros((dM, dA, n))
    rows2[..., :dD] = -xeinsum("tok,kj->jot", D, g)
    rows2[..., dD:] = xeinsum("or,jc->jorc", g, IM).reshape(dM, dA, dM * dM)
    system = np.vstack([rows1.reshape(-1, n), rows2.reshape(-1, n)])
    return nullspace(system, F)


def universal_derivations(x: LMAlgebraObject) -> DerivationsLMObject:
    """The universal Lie algebra object of derivations ``Der(A, M) -> pairs``.

    The vertical map is ``d -> (g d, d g)`` and ``(alpha, beta)`` acts on the
    right by ``d -> d alpha - beta d``. The vertical map lands in the pairs
    only when ``g(m).d(a) = g(d(a)).m`` for all ``d``; otherwise
    :class:`PreconditionError` is raised with ``peiffer`` witnesses ``(d, a, m)``.
    """
    F = x.field
    A, M, g = x.A, x.M, x.g
    top = derivation_space(A, M)
    der_A = derivation_space(A)
    pairs = _compatible_pairs(x, der_A)
    dD, dL, dN = der_A.dim, pairs.dim, top.dim

    if dN and M.dim and A.dim:
        N = top.basis
        # g(m) . d(a): sum_k g[k, m] act[k, d(a)]  versus  g(d(a)) . m
        left = xeinsum("km,tra,kro->tamo", g, N, M.action)
        right = xeinsum("kr,tra,kmo->tamo", g, N, M.action)
        viol = collect("peiffer", left - right, 3)
        if viol:
            raise PreconditionError("d -> (g d, d g) does not land in compatible pairs", CheckReport("universal_derivations", viol, field=F))

    vecs = pairs.basis
    alphas = xeinsum("lt,trc->lrc", vecs[:, :dD], der_A.basis) if dD else F.zeros((dL, A.dim, A.dim))
    betas = vecs[:, dD:].reshape(dL, M.dim, M.dim)

    def pair_coords(alpha, beta):
        vec = np.concatenate([der_A.coordinates(alpha), beta.reshape(-1)])
        return pairs.coordinates(vec)

    br = F.zeros((dL, dL, dL))
    for i in range(dL):
        for j in range(dL):
            br[i, j] = pair_coords(commutator(alphas[i], alphas[j]), commutator(betas[i], betas[j]))
    L = LieAlgebra(F, br)

    N = top.basis
    f = F.zeros((dL, dN))
    r = F.zeros((dN, dL, dN))
    for n in range(dN):
        f[:, n] = pair_coords(g @ N[n], N[n] @ g)
        for l in range(dL):
            r[n, l] = top.coordinates(N[n] @ alphas[l] - betas[l] @ N[n])
    lie = LMLieObject(L, r, f)

    # A acts on pairs and on Der(A, M) by post-multiplication
    act_L = F.zeros((A.dim, dL, dL))
    act_N = F.zeros((A.dim, dN, dN))
    for a in range(A.dim):
        ma, mm = A.mult_matrices()[a], M.action_matrices()[a]
        for l in range(dL):
            act_L[a, l] = pair_coords(ma @ alphas[l], mm @ betas[l])
        for n in range(dN):
            act_N[a, n] = top.coordinates(mm @ N[n])
    return DerivationsLMObject(x, top, der_A, pairs, alphas, betas, lie, act_L, act_N)


def action_der_identity(u: DerivationsLMObject, sign: int = 1, ambient: bool = False) -> CheckReport:
    """Right-module identity for ``[d, (alpha, beta)] = d alpha - beta d`` computed on maps.

    With ``sign=1`` the pairs are bracketed by ``([alpha, alpha'], [beta, beta'])``;
    ``sign=-1`` uses ``-[beta, beta']`` in the second slot. ``ambient=True``
    runs over a basis of all of ``Der(A) (+) Hom(M, M)`` rather than the
    compatible pairs. Witness ``(d, xi, zeta)``; residuals are entries of
    ``A -> M`` matrices.
    """
    F = u.field
    dA, dM = u.alg.A.dim, u.alg.M.dim
    if ambient:
        D = u.der_A.basis
        alphas = [D[t] for t in range(u.der_A.dim)] + [F.zeros((dA, dA))] * (dM * dM)
        betas = [F.zeros((dM, dM))] * u.der_A.dim + list(endo_basis(F, dM))
    else:
        alphas, betas = list(u.alphas), list(u.betas)

    def act(d, k):
        return d @ alphas[k] - betas[k] @ d

    viol = []
    N = u.top.basis
    for n in range(u.top.dim):
        d = N[n]
        for i in range(len(alphas)):
            for j in range(len(alphas)):
                ba = commutator(alphas[i], alphas[j])
                bb = sign * commutator(betas[i], betas[j])
                res = (d @ ba - bb @ d) - act(act(d, i), j) + act(act(d, j), i)
                if not is_zero(res):
                    viol.append(Violation("actionDer", (n, i, j), tuple(res.reshape(-1).tolist())))
    return CheckReport("action_der", viol, field=F)


def endo_basis(F: Field, d: int):
    for i in range(d):
        for j in range(d):
            e = F.zeros((d, d))
            e[i, j] = F.one
            yield e


def check_action_by_derivations(x_alg: LMAlgebraObject, x_lie: LMLieObject, rho0, rho1, rho2) -> CheckReport:
    """Action of ``N -> L`` on ``M -> A`` by derivations.

    ``rho0``: ``(dim L, dim A, dim A)`` with ``rho0[x]`` the matrix of a
    derivation of ``A``; ``rho2``: ``(dim L, dim M, dim M)``; ``rho1``:
    ``(dim N, dim M, dim A)``.
    """
    F = x_alg.field
    A, M, g = x_alg.A, x_alg.M, x_alg.g
    L = x_lie.L
    r0, r1, r2 = F.array(rho0), F.array(rho1), F.array(rho2)
    shapes = {
        "rho0": (r0.shape, (L.dim, A.dim, A.dim)),
        "rho1": (r1.shape, (x_lie.dim_N, M.dim, A.dim)),
        "rho2": (r2.shape, (L.dim, M.dim, M.dim)),
    }
    bad = [Violation("shape", (name,), ()) for name, (got, want) in shapes.items() if got != want]
    if bad:
        return CheckReport("action_by_derivations", bad, field=F)
    viol = derivation_violations(A, regular_module(A), r0, "rho0-der")
    viol += _lie_map_violations(L, r0, "rho0-lie")
    viol += _lie_map_violations(L, r2, "rho2-lie")
    viol += derivation_violations(A, M, r1, "rho1-der")
    viol += compder1_violations(x_alg, r0, r2)
    viol += compder3_violations(x_alg, x_lie, r0, r1, r2)
    return CheckReport("action_by_derivations", viol, field=F)


def _lie_map_violations(L: LieAlgebra, rho, axiom: str) -> list:
    """``rho([x, y]) = [rho x, rho y]`` with commutators of matrices; witness ``(x, y)``."""
    if rho.size == 0 or L.dim == 0:
        return []
    left = xeinsum("xyk,krc->xyrc", L.bracket, rho)
    prod = xeinsum("xrs,ysc->xyrc", rho, rho)
    right = prod - np.transpose(prod, (1, 0, 2, 3))
    return collect(axiom, left - right, 2)


def compder1_violations(x_alg: LMAlgebraObject, r0, r2) -> list:
    A, M, g = x_alg.A, x_alg.M, x_alg.g
    if r2.shape[0] == 0 or M.dim == 0:
        return []
    # rho2(x)(a_i . m_j) - a_i . rho2(x)(m_j) - rho0(x)(a_i) . m_j, witness (x, i, j)
    t1 = xeinsum("ijk,xok->xijo", M.action, r2)
    t2 = xeinsum("xrj,iro->xijo", r2, M.action)
    t3 = xeinsum("xki,kjo->xijo", r0, M.action)
    viol = collect("compDer1-a", t1 - t2 - t3, 3)
    # g(rho2(x)(m)) - rho0(x)(g(m)), witness (x, m)
    left = xeinsum("or,xrm->xmo", g, r2)
    right = xeinsum("xok,km->xmo", r0, g)
    viol += collect("compDer1-b", left - right, 2)
    return viol


def compder3_violations(x_alg: LMAlgebraObject, x_lie: LMLieObject, r0, r1, r2) -> list:
    g = x_alg.g
    if r1.shape[0] == 0:
        return []
    # rho1([n, x]) - (rho1(n) rho0(x) - rho2(x) rho1(n)), witness (n, x)
    left = xeinsum("nxk,krc->nxrc", x_lie.action, r1)
    right = xeinsum("nrs,xsc->nxrc", r1, r0) - xeinsum("xrs,nsc->nxrc", r2, r1)
    viol = collect("compDer3-a", left - right, 2)
    # g(rho1(n)(a)) - rho0(f(n))(a), witness (n, a); residual is a vector in A
    left = xeinsum("or,nra->nao", g, r1)
    right = xeinsum("xn,xoa->nao", x_lie.f, r0)
    viol += collect("compDer3-b", left - right, 2)
    return viol
