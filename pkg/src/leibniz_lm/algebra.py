"""Commutative unital algebras, their modules, and tensor products over them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exactlin import Field, Subspace, quotient_basis, inverse
from .exactlin import einsum as xeinsum
from .report import CheckReport, StructureError, collect
from .tensors import left_matrices, rebase_bilinear

__all__ = [
    "CommAlgebra",
    "AModule",
    "QuotientDescription",
    "check_comm_algebra",
    "check_a_module",
    "module_violations",
    "tensor_over_A",
    "square_zero_extension",
    "regular_module",
    "zero_module",
    "poly_quotient",
    "product_algebra",
    "tensor_algebra",
]


def _frozen(field: Field, data, ndim: int, what: str) -> np.ndarray:
    arr = field.array(data)
    if arr.ndim != ndim:
        raise StructureError(f"{what} must have {ndim} axes, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class CommAlgebra:
    """``a_i a_j = sum_k mult[i, j, k] a_k`` with unit vector ``unit``."""

    field: Field
    mult: np.ndarray
    unit: np.ndarray

    def __post_init__(self):
        mult = _frozen(self.field, self.mult, 3, "multiplication tensor")
        d = mult.shape[0]
        if mult.shape != (d, d, d):
            raise StructureError(f"multiplication tensor must be cubic, got {mult.shape}")
        unit = _frozen(self.field, self.unit, 1, "unit vector")
        if unit.shape != (d,):
            raise StructureError(f"unit vector has length {unit.shape[0]}, algebra has dimension {d}")
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "unit", unit)

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def mult_matrices(self):
        """``out[i]`` is the matrix of multiplication by ``a_i``."""
        return left_matrices(self.mult)

    def times(self, a):
        """Matrix of multiplication by the element ``a``."""
        return xeinsum("i,ikj->kj", a, self.mult_matrices()) if self.dim else self.field.zeros((0, 0))

    def product(self, x, y):
        return xeinsum("i,j,ijk->k", x, y, self.mult)

    def rebased(self, p) -> "CommAlgebra":
        q = inverse(p, self.field)
        return CommAlgebra(self.field, rebase_bilinear(self.mult, p, p, q), q @ self.unit)

    def over(self, field: Field) -> "CommAlgebra":
        return CommAlgebra(field, field.array(self.mult), field.array(self.unit))


@dataclass(frozen=True, eq=False)
class AModule:
    """Left (= symmetric) module: ``a_i . m_j = sum_k action[i, j, k] m_k``."""

    field: Field
    action: np.ndarray

    def __post_init__(self):
        act = _frozen(self.field, self.action, 3, "action tensor")
        if act.shape[1] != act.shape[2]:
            raise StructureError(f"action tensor must have shape (dA, dM, dM), got {act.shape}")
        object.__setattr__(self, "action", act)

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def algebra_dim(self) -> int:
        return self.action.shape[0]

    def action_matrices(self):
        return left_matrices(self.action)

    def times(self, a):
        """Matrix of the action of the algebra element ``a``."""
        if self.algebra_dim == 0:
            return self.field.zeros((self.dim, self.dim))
        return xeinsum("i,ikj->kj", a, self.action_matrices())

    def rebased(self, p_algebra, p_module) -> "AModule":
        q = inverse(p_module, self.field)
        return AModule(self.field, rebase_bilinear(self.action, p_algebra, p_module, q))

    def over(self, field: Field) -> "AModule":
        return AModule(field, field.array(self.action))


def regular_module(A: CommAlgebra) -> AModule:
    return AModule(A.field, A.mult)


def zero_module(A: CommAlgebra) -> AModule:
    return AModule(A.field, A.field.zeros((A.dim, 0, 0)))


def _unit_violations(A: CommAlgebra):
    # u . a_i - a_i
    res = xeinsum("i,ijk->jk", A.unit, A.mult) - A.field.eye(A.dim)
    return collect("unit", res, 1)


def check_comm_algebra(A: CommAlgebra) -> CheckReport:
    """Commutativity, associativity and unit law on basis elements."""
    c = A.mult
    comm = c - np.transpose(c, (1, 0, 2))
    viol = [v for v in collect("comm", comm, 2) if v.witness[0] < v.witness[1]]
    left = xeinsum("ijl,lkm->ijkm", c, c)
    right = xeinsum("jkl,ilm->ijkm", c, c)
    viol += collect("assoc", left - right, 3)
    viol += _unit_violations(A)
    return CheckReport("comm_algebra", viol, field=A.field)


def module_violations(A: CommAlgebra, M: AModule) -> list:
    if M.field != A.field:
        raise StructureError(f"module over {M.field.name}, algebra over {A.field.name}")
    if M.algebra_dim != A.dim:
        raise StructureError(f"module action expects a {M.algebra_dim}-dim algebra, got {A.dim}")
    d = M.action
    unit = xeinsum("i,ijk->jk", A.unit, d) - A.field.eye(M.dim)
    viol = collect("mod-unit", unit, 1)
    # (a_i a_j) . m_k  versus  a_i . (a_j . m_k)
    left = xeinsum("ijl,lkm->ijkm", A.mult, d)
    right = xeinsum("jkl,ilm->ijkm", d, d)
    viol += collect("mod-assoc", left - right, 3)
    return viol


def check_a_module(A: CommAlgebra, M: AModule) -> CheckReport:
    return CheckReport("a_module", module_violations(A, M), field=A.field)


@dataclass(frozen=True, eq=False)
class QuotientDescription:
    """``M (x)_A W`` as a quotient of ``M (x)_k W``.

    ``m_i (x) w_j`` has index ``i * dim W + j`` in the ambient space.
    """

    ambient_dim: int
    relators: Subspace
    projection: np.ndarray
    section: np.ndarray

    @property
    def dim(self) -> int:
        return self.projection.shape[0]


def relator_vectors(A: CommAlgebra, M: AModule, W: AModule):
    """``(a . m) (x) w - m (x) (a . w)`` for all basis triples, shape ``(dA, dM, dW, dM*dW)``."""
    F = A.field
    IM, IW = F.eye(M.dim), F.eye(W.dim)
    first = xeinsum("ijk,lm->ijlkm", M.action, IW)
    second = xeinsum("jk,ilm->ijlkm", IM, W.action)
    return (first - second).reshape(A.dim, M.dim, W.dim, M.dim * W.dim)


def tensor_over_A(A: CommAlgebra, M: AModule, W: AModule) -> QuotientDescription:
    for X in (M, W):
        if X.algebra_dim != A.dim or X.field != A.field:
            raise StructureError("modules must be over the given algebra")
    n = M.dim * W.dim
    rel = relator_vectors(A, M, W).reshape(-1, n) if n else []
    sub = Subspace(A.field, n, rel if len(rel) else None)
    proj, sect = quotient_basis(n, sub)
    return QuotientDescription(n, sub, proj, sect)


def square_zero_extension(A: CommAlgebra, M: AModule) -> CommAlgebra:
    """``A (+) M`` with ``(a, m)(a', m') = (a a', a.m' + a'.m)``."""
    if M.algebra_dim != A.dim:
        raise StructureError("module is over a different algebra")
    F = A.field
    dA, dM = A.dim, M.dim
    n = dA + dM
    c = F.zeros((n, n, n))
    c[:dA, :dA, :dA] = A.mult
    c[:dA, dA:, dA:] = M.action
    c[dA:, :dA, dA:] = np.transpose(M.action, (1, 0, 2))
    unit = np.concatenate([A.unit, F.zeros(dM)])
    return CommAlgebra(F, c, unit)


def poly_quotient(field: Field, coeffs) -> CommAlgebra:
    """``k[x]/(p)`` for monic ``p = coeffs[0] + coeffs[1] x + ... + x^n``, basis ``1, x, ..., x^{n-1}``."""
    coeffs = [field(c) for c in coeffs]
    n = len(coeffs) - 1
    if n < 1 or coeffs[-1] != 1:
        raise StructureError("need a monic polynomial of degree >= 1")
    # reduce x^e for e < 2n - 1
    powers = []
    for e in range(2 * n - 1):
        v = field.zeros(n)
        if e < n:
            v[e] = field.one
        else:
            prev = powers[e - 1]
            # x * prev, then replace x^n
            v[1:] = prev[:-1]
            top = prev[-1]
            for k in range(n):
                v[k] = v[k] - top * coeffs[k]
        powers.append(v)
    c = field.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            c[i, j] = powers[i + j]
    return CommAlgebra(field, c, field.unit_vector(n, 0))


def product_algebra(A: CommAlgebra, B: CommAlgebra) -> CommAlgebra:
    """Cartesian product ``A x B``."""
    F = A.field
    n = A.dim + B.dim
    c = F.zeros((n, n, n))
    c[: A.dim, : A.dim, : A.dim] = A.mult
    c[A.dim :, A.dim :, A.dim :] = B.mult
    return CommAlgebra(F, c, np.concatenate([A.unit, B.unit]))


def tensor_algebra(A: CommAlgebra, B: CommAlgebra) -> CommAlgebra:
    """``A (x)_k B`` with basis ``a_i (x) b_j`` at index ``i * dim B + j``."""
    F = A.field
    n = A.dim * B.dim
    # (a_i b_j)(a_k b_l) = sum A[i,k,m] B[j,l,n] a_m b_n; axes come out grouped as (ij)(kl)(mn)
    c = xeinsum("ikm,jln->ijklmn", A.mult, B.mult).reshape(n, n, n)
    return CommAlgebra(F, c, np.kron(A.unit, B.unit))
