"""Lie-Rinehart pairs, their modules, and Lie-Rinehart algebra objects in the
category of linear maps.

Hom-valued data are tensors: ``anchor[x]`` is the ``(dim A, dim A)`` matrix
of the derivation attached to ``x``; ``rho2[x]`` acts on ``M``; ``rho1[n]``
is a ``(dim M, dim A)`` matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AModule, CommAlgebra, module_violations, regular_module, relator_vectors
from .derivations import compder1_violations, compder3_violations, derivation_lie, derivation_violations, _lie_map_violations
from .exactlin import Field, inverse
from .exactlin import einsum as xeinsum
from .leibniz import LieAlgebra, check_lie
from .lm import (
    LMAlgebraObject,
    LMLieObject,
    check_algebra_object,
    check_lie_object,
    check_squares_annihilation,
    identity_algebra_object,
    identity_lie_object,
)
from .report import CheckReport, Violation, collect, prefixed
from .tensors import rebase_hom

__all__ = [
    "LieRinehartPair",
    "TheoremOneData",
    "check_lie_rinehart_pair",
    "check_lr_module",
    "check_theorem1_object",
    "derivation_pair",
    "build_tautological",
    "trivial_theorem1",
]


@dataclass(frozen=True, eq=False)
class LieRinehartPair:
    A: CommAlgebra
    L: LieAlgebra
    action: AModule
    anchor: np.ndarray

    def __post_init__(self):
        anchor = self.A.field.array(self.anchor)
        anchor.flags.writeable = False
        object.__setattr__(self, "anchor", anchor)

    @property
    def field(self) -> Field:
        return self.A.field

    def rebased(self, p_algebra, p_lie) -> "LieRinehartPair":
        q = inverse(p_algebra, self.field)
        return LieRinehartPair(
            self.A.rebased(p_algebra),
            self.L.rebased(p_lie),
            self.action.rebased(p_algebra, p_lie),
            rebase_hom(self.anchor, p_lie, p_algebra, q),
        )


def _hom_alin(mult_or_action, act_dom, hom, axiom):
    """``h(a . x) = a . h(x)`` for a hom-valued ``h``; ``a .`` on the codomain is left multiplication."""
    # h(a . x): sum_k act_dom[a, x, k] h[k]
    left = xeinsum("axk,krc->axrc", act_dom, hom)
    # a . h(x): (module matrix of a) @ h[x], module matrix [r, s] = tensor[a, s, r]
    right = xeinsum("asr,xsc->axrc", mult_or_action, hom)
    return collect(axiom, left - right, 2)


def _shape_report(kind, field, problems):
    return CheckReport(kind, [Violation("shape", (name,), ()) for name in problems], field=field)


def check_lie_rinehart_pair(p: LieRinehartPair) -> CheckReport:
    """Anchor in ``Der(A)``, ``A``-linear, a Lie map, and ``[x, a.y] = a.[x,y] + rho(x)(a).y``.

    The Lie axioms of ``L`` and the module axioms of ``A`` on ``L`` are checked
    first (``L/``-prefixed for the module).
    """
    A, L, act, rho = p.A, p.L, p.action.action, p.anchor
    problems = []
    if act.shape != (A.dim, L.dim, L.dim):
        problems.append("action")
    if rho.shape != (L.dim, A.dim, A.dim):
        problems.append("anchor")
    if problems:
        return _shape_report("lie_rinehart_pair", p.field, problems)
    viol = list(check_lie(L).violations)
    viol += prefixed("L", module_violations(A, p.action))
    viol += derivation_violations(A, regular_module(A), rho, "anchor-der")
    viol += _hom_alin(A.mult, act, rho, "anchor-Alin")
    viol += _lie_map_violations(L, rho, "anchor-lie")
    viol += _lr_rule(A, L, act, rho)
    return CheckReport("lie_rinehart_pair", viol, field=p.field)


def _lr_rule(A, L, act, rho):
    # [x, a.y] - a.[x, y] - rho(x)(a).y, witness (x, a, y)
    t1 = xeinsum("ayk,xkl->xayl", act, L.bracket)
    t2 = xeinsum("xyk,akl->xayl", L.bracket, act)
    t3 = xeinsum("xsa,syl->xayl", rho, act)
    return collect("LR-rule", t1 - t2 - t3, 3)


def check_lr_module(p: LieRinehartPair, M: AModule, rho2) -> CheckReport:
    """``M`` as a left ``(A, L)``-module through ``rho2``."""
    F = p.field
    r2 = F.array(rho2)
    if r2.shape != (p.L.dim, M.dim, M.dim) or M.algebra_dim != p.A.dim:
        return _shape_report("lr_module", F, ["rho2"])
    viol = module_violations(p.A, M)
    viol += _lie_map_violations(p.L, r2, "rho2-lie")
    viol += _hom_alin(M.action, p.action.action, r2, "rho2-Alin")
    # reuse the mixed law of compDer1; g plays no role here
    fake = LMAlgebraObject(p.A, M, F.zeros((p.A.dim, M.dim)))
    viol += [v for v in compder1_violations(fake, p.anchor, r2) if v.axiom == "compDer1-a"]
    return CheckReport("lr_module", viol, field=F)


@dataclass(frozen=True, eq=False)
class TheoremOneData:
    """A candidate Lie-Rinehart algebra object ``((M -> A), (N -> L))``.

    ``lam`` is the map ``M (x)_k L -> N`` as a ``(dim N, dim M * dim L)``
    matrix, column ``m * dim L + x``; descent to ``M (x)_A L`` is checked.
    """

    alg: LMAlgebraObject
    lie: LMLieObject
    rho0: np.ndarray
    rho1: np.ndarray
    rho2: np.ndarray
    lam: np.ndarray
    action_L: AModule
    action_N: AModule

    def __post_init__(self):
        F = self.alg.field
        for name in ("rho0", "rho1", "rho2", "lam"):
            arr = F.array(getattr(self, name))
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def field(self) -> Field:
        return self.alg.field

    @property
    def pair(self) -> LieRinehartPair:
        return LieRinehartPair(self.alg.A, self.lie.L, self.action_L, self.rho0)

    def rebased(self, pA, pM, pL, pN) -> "TheoremOneData":
        """Same structure written in new bases (columns of each ``p`` are the new basis vectors)."""
        F = self.field
        qA, qM, qN = (inverse(p, F) for p in (pA, pM, pN))
        alg = self.alg.rebased(pA, pM)
        lie = self.lie.rebased(pL, pN)
        dM, dL = self.alg.M.dim, self.lie.L.dim
        lam = qN @ self.lam @ _kron(F, pM, pL, dM * dL)
        return TheoremOneData(
            alg=alg,
            lie=lie,
            rho0=rebase_hom(self.rho0, pL, pA, qA),
            rho1=rebase_hom(self.rho1, pN, pA, qM),
            rho2=rebase_hom(self.rho2, pL, pM, qM),
            lam=lam,
            action_L=self.action_L.rebased(pA, pL),
            action_N=self.action_N.rebased(pA, pN),
        )


def _kron(F, x, y, n):
    return np.kron(x, y) if n else F.zeros((0, 0))


def _theorem1_shapes(d: TheoremOneData) -> list[str]:
    dA, dM = d.alg.A.dim, d.alg.M.dim
    dL, dN = d.lie.L.dim, d.lie.dim_N
    want = {
        "rho0": (d.rho0.shape, (dL, dA, dA)),
        "rho1": (d.rho1.shape, (dN, dM, dA)),
        "rho2": (d.rho2.shape, (dL, dM, dM)),
        "lam": (d.lam.shape, (dN, dM * dL)),
        "action_L": (d.action_L.action.shape, (dA, dL, dL)),
        "action_N": (d.action_N.action.shape, (dA, dN, dN)),
    }
    bad = [k for k, (got, exp) in want.items() if got != exp]
    if d.lie.field != d.alg.field:
        bad.append("field")
    return bad


def theorem1_bullets(d: TheoremOneData) -> dict[str, list[Violation]]:
    """Violations grouped by condition ``T1-1`` .. ``T1-8`` (before deduplication)."""
    A, M, g = d.alg.A, d.alg.M, d.alg.g
    L, lie = d.lie.L, d.lie
    actL, actN = d.action_L.action, d.action_N.action
    out = {}
    out["T1-1"] = list(check_algebra_object(d.alg).violations) + list(check_lie_object(lie).violations)
    out["T1-2"] = list(check_lie_rinehart_pair(d.pair).violations)
    out["T1-3"] = list(check_lr_module(d.pair, M, d.rho2).violations)

    # N is an A-module and [a.n, x] = a.[n, x] - rho0(x)(a).n, witness (a, n, x)
    t4 = prefixed("N", module_violations(A, d.action_N))
    t1 = xeinsum("ank,kxl->anxl", actN, lie.action)
    t2 = xeinsum("nxk,akl->anxl", lie.action, actN)
    t3 = xeinsum("xsa,snl->anxl", d.rho0, actN)
    t4 += collect("N-mixed", t1 - t2 + t3, 3)
    out["T1-4"] = t4

    # f(a.n) = a.f(n); g(a.m) = a.g(m); equivariance of f and g
    left = xeinsum("ank,lk->anl", actN, lie.f)
    right = xeinsum("kn,akl->anl", lie.f, actL)
    t5 = collect("f-Alin", left - right, 2)
    t5 += [v for v in check_algebra_object(d.alg).violations if v.axiom == "g-Alin"]
    t5 += [v for v in check_lie_object(lie).violations if v.axiom == "equivariant"]
    t5 += [v for v in compder1_violations(d.alg, d.rho0, d.rho2) if v.axiom == "compDer1-b"]
    out["T1-5"] = t5

    t6 = []
    if M.dim * L.dim:
        rel = relator_vectors(A, M, d.action_L)  # (a, m, x, M*L)
        t6 += collect("lambda-descent", xeinsum("amxc,nc->amxn", rel, d.lam), 3)
        lam3 = d.lam.reshape(lie.dim_N, M.dim, L.dim)
        first = xeinsum("amk,nkx->amxn", M.action, lam3)
        second = xeinsum("smx,asn->amxn", lam3, actN)
        t6 += collect("lambda-Alin", first - second, 3)
    out["T1-6"] = t6

    t7 = derivation_violations(A, M, d.rho1, "rho1-der")
    if lie.dim_N:
        t7 += _hom_alin(M.action, actN, d.rho1, "rho1-Alin")
    t7 += compder3_violations(d.alg, lie, d.rho0, d.rho1, d.rho2)
    out["T1-7"] = t7

    out["T1-8"] = list(check_squares_annihilation(lie, d.action_N, d.action_L, A).violations)
    return out


def check_theorem1_object(d: TheoremOneData) -> CheckReport:
    """Every condition for a Lie-Rinehart algebra object, each law reported once.

    Axiom ids are ``T1-k/<law>``; a law that appears under several conditions
    is kept under the first one.
    """
    bad = _theorem1_shapes(d)
    if bad:
        return _shape_report("theorem1", d.field, bad)
    seen = set()
    viol = []
    for bullet, items in theorem1_bullets(d).items():
        for v in items:
            key = (v.axiom, v.witness)
            if key in seen:
                continue
            seen.add(key)
            viol.append(Violation(f"{bullet}/{v.axiom}", v.witness, v.residual))
    return CheckReport("theorem1", viol, field=d.field)


def derivation_pair(A: CommAlgebra) -> LieRinehartPair:
    """``(A, Der(A))`` with the tautological anchor and ``(a.D)(b) = a D(b)``."""
    L, D = derivation_lie(A)
    F = A.field
    B = D.basis
    act = F.zeros((A.dim, D.dim, D.dim))
    mm = A.mult_matrices()
    for a in range(A.dim):
        for t in range(D.dim):
            act[a, t] = D.coordinates(mm[a] @ B[t])
    return LieRinehartPair(A, L, AModule(F, act), B)


def build_tautological(p: LieRinehartPair) -> TheoremOneData:
    """``((A -> A), (L -> L))`` with all three anchors equal to ``rho_L`` and ``lambda(a (x) x) = a.x``."""
    F = p.field
    dA, dL = p.A.dim, p.L.dim
    act = p.action.action
    lam = np.transpose(act, (2, 0, 1)).reshape(dL, dA * dL)
    return TheoremOneData(
        alg=identity_algebra_object(p.A),
        lie=identity_lie_object(p.L),
        rho0=p.anchor,
        rho1=p.anchor,
        rho2=p.anchor,
        lam=lam,
        action_L=p.action,
        action_N=p.action,
    )


def trivial_theorem1(L: LieAlgebra) -> TheoremOneData:
    """Over the base field with ``M = 0``, ``N = L``, ``f = id`` and every map zero."""
    F = L.field
    A = CommAlgebra(F, F.array([[[1]]]), F.array([1]))
    M = AModule(F, F.zeros((1, 0, 0)))
    scalar = AModule(F, F.eye(L.dim).reshape(1, L.dim, L.dim))
    return TheoremOneData(
        alg=LMAlgebraObject(A, M, F.zeros((1, 0))),
        lie=identity_lie_object(L),
        rho0=F.zeros((L.dim, 1, 1)),
        rho1=F.zeros((L.dim, 0, 1)),
        rho2=F.zeros((L.dim, 0, 0)),
        lam=F.zeros((L.dim, 0)),
        action_L=scalar,
        action_N=scalar,
    )
