"""Check reports shared by every axiom checker."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .exactlin import Field, QQ


class StructureError(ValueError):
    """Shapes or fields of the inputs do not fit together."""


class PreconditionError(ValueError):
    """A construction was handed data that fails its axioms.

    ``report`` carries the failing :class:`CheckReport`.
    """

    def __init__(self, message: str, report: "CheckReport"):
        super().__init__(message)
        self.report = report


# Human-readable statement of every axiom id. Ids are a stable vocabulary:
# tests, documents and reports refer to laws through them.
AXIOMS = {
    "comm": "commutativity a_i a_j = a_j a_i",
    "assoc": "associativity (a_i a_j) a_k = a_i (a_j a_k)",
    "unit": "unit law 1 a_i = a_i",
    "mod-unit": "module unit law 1.m = m",
    "mod-assoc": "module associativity (a b).m = a.(b.m)",
    "RLJ": "right Leibniz identity [x,[y,z]] - [[x,y],z] + [[x,z],y] = 0",
    "antisym": "antisymmetry [x,x] = 0 and [x,y] + [y,x] = 0",
    "jacobi": "Jacobi identity [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0",
    "hom": "bracket preservation phi[x,y] = [phi x, phi y]",
    "lie-module": "left Lie module law [x,y].v = x.(y.v) - y.(x.v)",
    "rmod": "right Lie module law [n,[x,y]] = [[n,x],y] - [[n,y],x]",
    "equivariant": "equivariance f([n,x]) = [f(n), x]",
    "square": "commuting square u' h1 = h0 u",
    "hgcomp-square": "commuting square of a composite (hgcomp)",
    "hgtensor-square": "commuting square of a tensor product (hgtensor)",
    "g-Alin": "A-linearity g(a.m) = a g(m)",
    "f-Alin": "A-linearity f(a.n) = a.f(n)",
    "u-Alin": "A-linearity u(a.v) = a.u(v)",
    "alpha-descent": "structure map kills (a.m)(x)w - m(x)(a.w)",
    "alpha-ell": "u(alpha(m (x) w)) = g(m).w (alpha-ell)",
    "alpha-Alin": "structure map is A-linear",
    "lmod-W": "alpha0 is a left L-module action on W",
    "lmod-V": "alpha2 is a left L-module action on V",
    "compat3": "alpha1([n,x] (x) w) = alpha1(n (x) x.w) - x.alpha1(n (x) w) (compatibility3)",
    "compat-u1": "u alpha1 = alpha0 (f (x) 1_W)",
    "compat-u2": "u alpha2 = alpha0 (1_L (x) u)",
    "extra": "[n1, a.[n2,n2]_N]_N = 0 (extra)",
    "algebra-map-1": "phi1(a.m) = phi0(a).phi1(m) (algebra map 1)",
    "algebra-map-0": "phi0(ab) = phi0(a) phi0(b) (algebra map 0)",
    "lie-map-1": "a1([n,x]) = [a1(n), a0(x)] (lie algebra map)",
    "lie-map-0": "a0([x,y]) = [a0(x), a0(y)] (lie algebra map)",
    "der": "Leibniz rule d(ab) = a.d(b) + b.d(a)",
    "der-independent": "derivation basis is linearly independent",
    "rho0-der": "rho0(x) is a derivation of A",
    "rho0-lie": "rho0 preserves brackets",
    "rho2-lie": "rho2 preserves brackets",
    "rho2-Alin": "rho2(a.x) = a rho2(x)",
    "rho1-der": "rho1(n) is a derivation A -> M",
    "rho1-Alin": "rho1(a.n) = a rho1(n)",
    "compDer1-a": "rho2(x)(a.m) = a.rho2(x)(m) + rho0(x)(a).m (compDer1)",
    "compDer1-b": "g(rho2(x)(m)) = rho0(x)(g(m)) (compDer1)",
    "compDer3-a": "rho1([n,x]) = rho1(n) rho0(x) - rho2(x) rho1(n) (compDer3)",
    "compDer3-b": "g(rho1(n)(a)) = rho0(f(n))(a) (compDer3)",
    "actionDer": "right module law for d.(alpha,beta) = d alpha - beta d (actionDer)",
    "peiffer": "g(m).d(a) = g(d(a)).m, needed for the universal derivation object",
    "anchor-der": "anchor lands in Der(A)",
    "anchor-Alin": "anchor is A-linear",
    "anchor-lie": "anchor preserves brackets",
    "LR-rule": "[x, a.y] = a.[x,y] + rho(x)(a).y",
    "N-mixed": "[a.n, x] = a.[n,x] - rho0(x)(a).n",
    "lambda-descent": "lambda kills (a.m)(x)x - m(x)(a.x)",
    "lambda-Alin": "lambda is A-linear",
    "LBanchor-antihom": "anchor antihomomorphism rho[e1,e2] = [rho e2, rho e1]",
    "LBrule": "[a.e1, e2] = a.[e1,e2] + rho(e2)(a).e1 (LBrule)",
    "local": "[e1, a.e2] = a.[e1,e2] - rho(e1)(a).e2",
    "gamma-Alin": "gamma(a.x (x) y) = a.gamma(x (x) y) for gamma = rho([x,y])",
    "A-stable": "A.(squares ideal) stays inside the squares ideal",
    "shape": "dimensions of the parts agree",
}


def describe(axiom: str) -> str:
    base = axiom.rsplit("/", 1)[-1]
    return AXIOMS.get(base, base)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    residual: tuple

    def sort_key(self):
        return (self.axiom, tuple(self.witness))


@dataclass(frozen=True)
class CheckReport:
    """Verdict of one checker run.

    ``violations`` is kept sorted by ``(axiom, witness)`` so two runs on the
    same input produce identical reports.
    """

    kind: str
    violations: tuple = ()
    entity: str = ""
    field: Field = dc_field(default=QQ)

    def __post_init__(self):
        object.__setattr__(self, "violations", tuple(sorted(self.violations, key=Violation.sort_key)))

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def axioms(self) -> list[str]:
        return sorted({v.axiom for v in self.violations})

    def witnesses(self, axiom: str) -> list[tuple]:
        return [v.witness for v in self.violations if v.axiom == axiom]

    def first(self, axiom: str) -> Violation | None:
        return next((v for v in self.violations if v.axiom == axiom), None)

    def with_meta(self, entity: str = None, kind: str = None) -> "CheckReport":
        return CheckReport(
            kind=self.kind if kind is None else kind,
            violations=self.violations,
            entity=self.entity if entity is None else entity,
            field=self.field,
        )

    def __repr__(self):
        return f"CheckReport({self.kind!r}, {self.verdict}, {len(self.violations)} violations)"


def collect(axiom: str, residuals, witness_axes: int) -> list[Violation]:
    """Turn a residual array into violations.

    The first ``witness_axes`` axes of ``residuals`` index the witness; the
    remaining axes are flattened into the residual vector.
    """
    residuals = np.asarray(residuals, dtype=object)
    if residuals.size == 0:
        return []
    lead = residuals.shape[:witness_axes]
    flat = residuals.reshape(lead + (-1,))
    flags = (flat != 0).any(axis=-1)
    out = []
    for idx in zip(*np.nonzero(flags)):
        idx = tuple(int(i) for i in idx)
        out.append(Violation(axiom, idx, tuple(flat[idx].tolist())))
    return out


def prefixed(prefix: str, violations) -> list[Violation]:
    return [Violation(f"{prefix}/{v.axiom}", v.witness, v.residual) for v in violations]
