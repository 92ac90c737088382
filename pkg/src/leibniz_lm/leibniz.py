"""Right Leibniz algebras and Lie algebras given by structure constants.

All brackets follow the right convention: ``[x, [y, z]] = [[x, y], z] - [[x, z], y]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactlin import Field, Subspace, inverse, quotient_basis
from .exactlin import einsum as xeinsum
from .report import CheckReport, PreconditionError, StructureError, collect
from .tensors import rebase_bilinear

__all__ = [
    "LeibnizAlgebra",
    "LieAlgebra",
    "Reduction",
    "check_leibniz",
    "check_lie",
    "check_leibniz_morphism",
    "lie_module_violations",
    "right_module_violations",
    "squares_ideal",
    "reduce",
    "reduced_lie",
    "hemi_semi_product",
    "hemi_semi_over_reduced",
    "tensor_square",
    "abelian",
    "direct_sum",
]


@dataclass(frozen=True, eq=False)
class LeibnizAlgebra:
    """``[e_i, e_j] = sum_k bracket[i, j, k] e_k``."""

    field: Field
    bracket: np.ndarray

    def __post_init__(self):
        c = self.field.array(self.bracket)
        if c.ndim != 3 or not (c.shape[0] == c.shape[1] == c.shape[2]):
            raise StructureError(f"bracket tensor must be cubic, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "bracket", c)

    @property
    def dim(self) -> int:
        return self.bracket.shape[0]

    def br(self, x, y):
        return xeinsum("i,j,ijk->k", x, y, self.bracket)

    def rebased(self, p):
        q = inverse(p, self.field)
        return type(self)(self.field, rebase_bilinear(self.bracket, p, p, q))

    def over(self, field: Field):
        return type(self)(field, field.array(self.bracket))


class LieAlgebra(LeibnizAlgebra):
    """A Leibniz algebra that is expected to be antisymmetric; checked by :func:`check_lie`."""


def abelian(field: Field, n: int, cls=LieAlgebra):
    return cls(field, field.zeros((n, n, n)))


def direct_sum(g: LeibnizAlgebra, h: LeibnizAlgebra):
    F = g.field
    n = g.dim + h.dim
    c = F.zeros((n, n, n))
    c[: g.dim, : g.dim, : g.dim] = g.bracket
    c[g.dim :, g.dim :, g.dim :] = h.bracket
    cls = LieAlgebra if isinstance(g, LieAlgebra) and isinstance(h, LieAlgebra) else LeibnizAlgebra
    return cls(F, c)


def _nested(c):
    """``out[x, y, z] = [x, [y, z]]``."""
    return xeinsum("yzk,xkl->xyzl", c, c)


def rlj_residuals(c):
    inner = _nested(c)
    left = xeinsum("xyk,kzl->xyzl", c, c)  # [[x,y],z]
    swapped = xeinsum("xzk,kyl->xyzl", c, c)  # [[x,z],y]
    return inner - left + swapped


def check_leibniz(g: LeibnizAlgebra) -> CheckReport:
    """Right Leibniz identity on every basis triple."""
    return CheckReport("leibniz", collect("RLJ", rlj_residuals(g.bracket), 3), field=g.field)


def check_lie(L: LeibnizAlgebra) -> CheckReport:
    c = L.bracket
    sym = c + np.transpose(c, (1, 0, 2))
    # the diagonal is tested as [x, x] itself, not 2[x, x], so characteristic 2 is handled
    n = L.dim
    diag = np.zeros_like(sym)
    idx = np.arange(n)
    diag[idx, idx] = c[idx, idx]
    off = np.where(np.triu(np.ones((n, n), dtype=bool), 1)[..., None], sym, diag)
    viol = [v for v in collect("antisym", off, 2) if v.witness[0] <= v.witness[1]]
    a = _nested(c)
    jac = a + np.transpose(a, (2, 0, 1, 3)) + np.transpose(a, (1, 2, 0, 3))
    viol += collect("jacobi", jac, 3)
    return CheckReport("lie", viol, field=L.field)


def check_leibniz_morphism(phi, g: LeibnizAlgebra, h: LeibnizAlgebra) -> CheckReport:
    """``phi [x, y] = [phi x, phi y]`` on basis pairs; ``phi`` is a ``(dim h, dim g)`` matrix."""
    F = g.field
    phi = F.array(phi)
    if phi.shape != (h.dim, g.dim):
        raise StructureError(f"map has shape {phi.shape}, expected {(h.dim, g.dim)}")
    left = xeinsum("lk,ijk->ijl", phi, g.bracket)
    half = xeinsum("ai,abl->ibl", phi, h.bracket)
    right = xeinsum("bj,ibl->ijl", phi, half)
    return CheckReport("leibniz_morphism", collect("hom", left - right, 2), field=F)


def lie_module_violations(L: LeibnizAlgebra, action, axiom="lie-module") -> list:
    """Left action ``x_i . v_j = sum_k action[i, j, k] v_k`` must satisfy ``[x,y].v = x.(y.v) - y.(x.v)``."""
    act = L.field.array(action)
    if act.ndim != 3 or act.shape[0] != L.dim or act.shape[1] != act.shape[2]:
        raise StructureError(f"action tensor of shape {act.shape} does not fit a {L.dim}-dim Lie algebra")
    xy = xeinsum("jvk,ikl->ijvl", act, act)  # x_i.(x_j.v)
    br = xeinsum("ijk,kvl->ijvl", L.bracket, act)
    res = br - xy + np.transpose(xy, (1, 0, 2, 3))
    return collect(axiom, res, 3)


def right_module_violations(L: LeibnizAlgebra, action, axiom="rmod") -> list:
    """Right action ``[n_i, x_j] = sum_k action[i, j, k] n_k``."""
    r = L.field.array(action)
    if r.ndim != 3 or r.shape[1] != L.dim or r.shape[0] != r.shape[2]:
        raise StructureError(f"right action of shape {r.shape} does not fit a {L.dim}-dim Lie algebra")
    first = xeinsum("xzk,nkl->nxzl", L.bracket, r)
    second = xeinsum("nxk,kzl->nxzl", r, r)
    third = xeinsum("nzk,kxl->nxzl", r, r)
    return collect(axiom, first - second + third, 3)


def squares_ideal(g: LeibnizAlgebra):
    """Two-sided ideal generated by all squares ``[x, x]``.

    Returns ``(ideal, iterations)`` where ``iterations`` counts closure rounds
    that enlarged the span of squares. It is 0 for every Leibniz algebra; a
    positive count means the input violates the Leibniz identity.
    """
    F, c, n = g.field, g.bracket, g.dim
    gens = [c[i, i] for i in range(n)]
    gens += [c[i, j] + c[j, i] for i in range(n) for j in range(i + 1, n)]
    ideal = Subspace(F, n).extended(gens)
    iterations = 0
    while True:
        new = []
        for s in ideal.basis:
            for i in range(n):
                e = F.unit_vector(n, i)
                new.append(g.br(e, s))
                new.append(g.br(s, e))
        bigger = ideal.extended(new)
        if bigger.dim == ideal.dim:
            return ideal, iterations
        ideal = bigger
        iterations += 1


@dataclass(frozen=True, eq=False)
class Reduction:
    """Quotient of a Leibniz algebra by its squares ideal."""

    source: LeibnizAlgebra
    ideal: Subspace
    iterations: int
    lie: LieAlgebra
    pi: np.ndarray
    section: np.ndarray


def reduce(g: LeibnizAlgebra) -> Reduction:
    ideal, iterations = squares_ideal(g)
    proj, sect = quotient_basis(g.dim, ideal)
    for s in ideal.basis:
        for i in range(g.dim):
            e = g.field.unit_vector(g.dim, i)
            if any(x != 0 for x in proj @ g.br(e, s)) or any(x != 0 for x in proj @ g.br(s, e)):
                raise AssertionError("squares span is not a two-sided ideal after closure")
    lie = LieAlgebra(g.field, rebase_bilinear(g.bracket, sect, sect, proj))
    proj.flags.writeable = False
    sect.flags.writeable = False
    return Reduction(g, ideal, iterations, lie, proj, sect)


def reduced_lie(g: LeibnizAlgebra):
    """``(g_Lie, pi)``: the quotient by the squares ideal and its projection matrix."""
    red = reduce(g)
    return red.lie, red.pi


def hemi_semi_product(L: LieAlgebra, action) -> LeibnizAlgebra:
    """Leibniz algebra on ``V (+) L`` with ``[a + x, b + y] = y(a) - [x, y]``.

    ``action[i, j, k]`` is the coefficient of ``v_k`` in ``x_i . v_j``; the
    ``V`` coordinates come first.
    """
    F = L.field
    act = F.array(action)
    viol = lie_module_violations(L, act)
    if viol:
        raise PreconditionError("action is not a Lie module action", CheckReport("lie_module", viol, field=F))
    dV, dL = act.shape[1], L.dim
    n = dV + dL
    c = F.zeros((n, n, n))
    c[:dV, dV:, :dV] = np.transpose(act, (1, 0, 2))
    c[dV:, dV:, dV:] = -L.bracket
    return LeibnizAlgebra(F, c)


def hemi_semi_over_reduced(g: LeibnizAlgebra, action, reduction: Reduction | None = None) -> LeibnizAlgebra:
    """Leibniz algebra on ``M (+) g`` with ``[m1 + g1, m2 + g2] = -pi(g2)(m1) + [g1, g2]``.

    ``action`` is a left action of ``g_Lie`` (in the basis produced by
    :func:`reduce`) on ``M``.
    """
    F = g.field
    red = reduction if reduction is not None else reduce(g)
    act = F.array(action)
    viol = lie_module_violations(red.lie, act)
    if viol:
        raise PreconditionError("action is not a module over the reduced Lie algebra", CheckReport("lie_module", viol, field=F))
    dM, dg = act.shape[1], g.dim
    n = dM + dg
    c = F.zeros((n, n, n))
    # [m_i, g_j] = -sum_a pi[a, j] (x_a . m_i)
    c[:dM, dM:, :dM] = -xeinsum("aj,aik->ijk", red.pi, act)
    c[dM:, dM:, dM:] = g.bracket
    return LeibnizAlgebra(F, c)


def tensor_square(L: LieAlgebra) -> LeibnizAlgebra:
    """Leibniz bracket on ``L (x) L``:

    ``[x1 (x) y1, x2 (x) y2] = [x1, [x2, y2]] (x) y1 + x1 (x) [y1, [x2, y2]]``

    with ``e_a (x) e_b`` at index ``a * dim L + b``.
    """
    F, c, d = L.field, L.bracket, L.dim
    nested = xeinsum("cdk,akl->acdl", c, c)  # [e_a, [e_c, e_d]]
    I = F.eye(d)
    t1 = xeinsum("acdl,bm->abcdlm", nested, I)
    t2 = xeinsum("al,bcdm->abcdlm", I, nested)
    n = d * d
    return LeibnizAlgebra(F, (t1 + t2).reshape(n, n, n))
