"""Leibniz algebroids: recognition, construction from Lie-Rinehart algebra
objects and from modules over Lie-Rinehart pairs, and reduction to a pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AModule, CommAlgebra, module_violations, regular_module
from .derivations import derivation_violations
from .exactlin import Field, inverse
from .exactlin import einsum as xeinsum
from .leibniz import LeibnizAlgebra, Reduction, check_leibniz, reduce
from .lie_rinehart import (
    LieRinehartPair,
    TheoremOneData,
    check_lie_rinehart_pair,
    check_lr_module,
    check_theorem1_object,
)
from .lm import block_diag
from .report import CheckReport, PreconditionError, Violation, collect, prefixed
from .tensors import rebase_hom

__all__ = [
    "LeibnizAlgebroid",
    "AlgebroidReduction",
    "check_leibniz_algebroid",
    "check_local",
    "theorem2_functor",
    "hemi_semi_algebroid",
    "pair_as_algebroid",
    "reduce_algebroid",
    "attempt_tensor_square_anchor",
]


@dataclass(frozen=True, eq=False)
class LeibnizAlgebroid:
    """Leibniz algebra ``E`` that is an ``A``-module, with ``anchor[e]`` a ``(dim A, dim A)`` matrix."""

    A: CommAlgebra
    E: LeibnizAlgebra
    action: AModule
    anchor: np.ndarray

    def __post_init__(self):
        anchor = self.A.field.array(self.anchor)
        anchor.flags.writeable = False
        object.__setattr__(self, "anchor", anchor)

    @property
    def field(self) -> Field:
        return self.A.field

    @property
    def dim(self) -> int:
        return self.E.dim

    def rebased(self, p_algebra, p_carrier) -> "LeibnizAlgebroid":
        q = inverse(p_algebra, self.field)
        return LeibnizAlgebroid(
            self.A.rebased(p_algebra),
            self.E.rebased(p_carrier),
            self.action.rebased(p_algebra, p_carrier),
            rebase_hom(self.anchor, p_carrier, p_algebra, q),
        )


def _anchor_alin(A, act, rho):
    left = xeinsum("aek,krc->aerc", act, rho)
    right = xeinsum("asr,esc->aerc", A.mult, rho)
    return collect("anchor-Alin", left - right, 2)


def check_leibniz_algebroid(x: LeibnizAlgebroid) -> CheckReport:
    """Leibniz identity, ``A``-module axioms on ``E`` (``E/``-prefixed), anchor
    in ``Der(A)`` and ``A``-linear, ``rho[e1, e2] = [rho e2, rho e1]`` and
    ``[a.e1, e2] = a.[e1, e2] + rho(e2)(a).e1``.
    """
    A, E, act, rho = x.A, x.E, x.action.action, x.anchor
    bad = []
    if act.shape != (A.dim, E.dim, E.dim):
        bad.append("action")
    if rho.shape != (E.dim, A.dim, A.dim):
        bad.append("anchor")
    if bad:
        return CheckReport("leibniz_algebroid", [Violation("shape", (b,), ()) for b in bad], field=x.field)
    viol = list(check_leibniz(E).violations)
    viol += prefixed("E", module_violations(A, x.action))
    viol += derivation_violations(A, regular_module(A), rho, "anchor-der")
    viol += _anchor_alin(A, act, rho)
    # rho([e1, e2]) - (rho(e2) rho(e1) - rho(e1) rho(e2)), witness (e1, e2)
    left = xeinsum("xyk,krc->xyrc", E.bracket, rho)
    prod = xeinsum("xrs,ysc->xyrc", rho, rho)
    viol += collect("LBanchor-antihom", left - (np.transpose(prod, (1, 0, 2, 3)) - prod), 2)
    # [a.e1, e2] - a.[e1, e2] - rho(e2)(a).e1, witness (a, e1, e2)
    t1 = xeinsum("axk,kyl->axyl", act, E.bracket)
    t2 = xeinsum("xyk,akl->axyl", E.bracket, act)
    t3 = xeinsum("ysa,sxl->axyl", rho, act)
    viol += collect("LBrule", t1 - t2 - t3, 3)
    return CheckReport("leibniz_algebroid", viol, field=x.field)


def check_local(x: LeibnizAlgebroid, second_slot=None) -> CheckReport:
    """``[e1, a.e2] = a.[e1, e2] - rho(e1)(a).e2``, witness ``(e1, a, e2)``.

    ``second_slot`` restricts ``e2`` to the given basis indices.
    """
    A, E, act, rho = x.A, x.E, x.action.action, x.anchor
    t1 = xeinsum("ayk,xkl->xayl", act, E.bracket)
    t2 = xeinsum("xyk,akl->xayl", E.bracket, act)
    t3 = xeinsum("xsa,syl->xayl", rho, act)
    viol = collect("local", t1 - t2 + t3, 3)
    if second_slot is not None:
        keep = set(int(i) for i in second_slot)
        viol = [v for v in viol if v.witness[2] in keep]
    return CheckReport("local", viol, field=x.field)


def theorem2_functor(d: TheoremOneData) -> LeibnizAlgebroid:
    """Leibniz algebroid on ``M (+) N`` (``M`` first).

    ``[m1 + n1, m2 + n2] = -rho2(f n2)(m1) + [n1, f n2]``, anchor ``-rho0(f n)``
    on ``N`` and zero on ``M``. Raises :class:`PreconditionError` carrying the
    recognizer report when ``d`` is not a Lie-Rinehart algebra object.
    """
    report = check_theorem1_object(d)
    if not report.passed:
        raise PreconditionError("input is not a Lie-Rinehart algebra object", report)
    F = d.field
    A = d.alg.A
    dM, dN, dA = d.alg.M.dim, d.lie.dim_N, A.dim
    f = d.lie.f
    n = dM + dN
    c = F.zeros((n, n, n))
    # rho2(f n_j) = sum_x f[x, j] rho2[x]; applied to m_i gives column i
    r2f = xeinsum("xj,xki->jik", f, d.rho2) if dM else F.zeros((dN, 0, 0))
    c[:dM, dM:, :dM] = -np.transpose(r2f, (1, 0, 2))
    c[dM:, dM:, dM:] = d.lie.n_bracket()
    anchor = F.zeros((n, dA, dA))
    anchor[dM:] = -xeinsum("xn,xrc->nrc", f, d.rho0)
    action = AModule(F, _block_action(F, dA, d.alg.M.action, d.action_N.action))
    return LeibnizAlgebroid(A, LeibnizAlgebra(F, c), action, anchor)


def _block_action(F, dA, first, second):
    return np.stack([block_diag(F, first[a], second[a]) for a in range(dA)]) if dA else F.zeros((0, 0, 0))


def hemi_semi_algebroid(p: LieRinehartPair, M: AModule | None = None, nabla=None) -> LeibnizAlgebroid:
    """Leibniz algebroid on ``M (+) L`` with ``[m1 + x, m2 + y] = -nabla_y(m1) + [x, y]`` and anchor ``-rho_L``.

    ``nabla[y]`` is the matrix by which ``y`` acts on ``M``. Without
    arguments ``M`` is ``A`` itself acted on through the anchor.
    """
    F = p.field
    if M is None:
        M = regular_module(p.A)
        nabla = p.anchor if nabla is None else nabla
    nab = F.array(nabla)
    pair_report = check_lie_rinehart_pair(p)
    if not pair_report.passed:
        raise PreconditionError("not a Lie-Rinehart pair", pair_report)
    mod_report = check_lr_module(p, M, nab)
    if not mod_report.passed:
        raise PreconditionError("not a module over the Lie-Rinehart pair", mod_report)
    dM, dL, dA = M.dim, p.L.dim, p.A.dim
    n = dM + dL
    c = F.zeros((n, n, n))
    c[:dM, dM:, :dM] = -np.transpose(nab, (2, 0, 1))
    c[dM:, dM:, dM:] = p.L.bracket
    anchor = F.zeros((n, dA, dA))
    anchor[dM:] = -p.anchor
    action = AModule(F, _block_action(F, dA, M.action, p.action.action))
    return LeibnizAlgebroid(p.A, LeibnizAlgebra(F, c), action, anchor)


def pair_as_algebroid(p: LieRinehartPair) -> LeibnizAlgebroid:
    """A Lie-Rinehart pair as a Leibniz algebroid: same bracket, anchor negated."""
    return LeibnizAlgebroid(p.A, LeibnizAlgebra(p.field, p.L.bracket), p.action, -p.anchor)


@dataclass(frozen=True, eq=False)
class AlgebroidReduction:
    """Outcome of :func:`reduce_algebroid`.

    ``pair`` is ``None`` when the squares ideal is not an ``A``-submodule;
    ``report`` then lists ``A-stable`` violations with witness ``(a, k)``
    (``k`` indexes the ideal basis).
    """

    source: LeibnizAlgebroid
    reduction: Reduction
    pair: LieRinehartPair | None
    report: CheckReport

    @property
    def pi(self) -> np.ndarray:
        return self.reduction.pi

    @property
    def section(self) -> np.ndarray:
        return self.reduction.section


def reduce_algebroid(x: LeibnizAlgebroid) -> AlgebroidReduction:
    """Quotient by the squares ideal, as a Lie-Rinehart pair with anchor ``-rho_E``."""
    F = x.field
    red = reduce(x.E)
    pi, sect = red.pi, red.section
    ideal = red.ideal.basis
    act = x.action.action
    dA, dQ = x.A.dim, red.lie.dim
    # pi(a . s_k) for ideal basis vectors s_k
    res = xeinsum("ke,aef,qf->akq", ideal, act, pi) if ideal.shape[0] else F.zeros((dA, 0, dQ))
    viol = collect("A-stable", res, 2)
    if viol:
        return AlgebroidReduction(x, red, None, CheckReport("reduce_algebroid", viol, field=F))
    qact = xeinsum("eq,aef,rf->aqr", sect, act, pi)
    anchor = -xeinsum("eq,erc->qrc", sect, x.anchor)
    pair = LieRinehartPair(x.A, red.lie, AModule(F, qact), anchor)
    return AlgebroidReduction(x, red, pair, check_lie_rinehart_pair(pair))


def attempt_tensor_square_anchor(p: LieRinehartPair) -> CheckReport:
    """Does ``x (x) y -> rho[x, y]`` commute with ``a.(x (x) y) = (a.x) (x) y``?

    Witness ``(a, x, y)``; a failure shows that this candidate anchor on
    ``L (x) L`` is not ``A``-linear.
    """
    rho, br, act = p.anchor, p.L.bracket, p.action.action
    gamma = xeinsum("xyk,krc->xyrc", br, rho)
    left = xeinsum("axk,kyrc->axyrc", act, gamma)
    right = xeinsum("asr,xysc->axyrc", p.A.mult, gamma)
    return CheckReport("tensor_square_anchor", collect("gamma-Alin", left - right, 3), field=p.field)
