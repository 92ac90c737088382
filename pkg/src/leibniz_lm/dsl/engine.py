"""Checks, constructions and reports on definition documents."""

from __future__ import annotations

import json

from .. import __version__
from ..algebra import check_a_module, check_comm_algebra
from ..algebroid import (
    attempt_tensor_square_anchor,
    check_leibniz_algebroid,
    check_local,
    hemi_semi_algebroid,
    reduce_algebroid,
    theorem2_functor,
)
from ..derivations import universal_derivations
from ..exactlin import field_from_name
from ..leibniz import (
    check_leibniz,
    check_leibniz_morphism,
    check_lie,
    hemi_semi_product,
    lie_module_violations,
    reduce,
    tensor_square,
)
from ..lie_rinehart import build_tautological, check_lie_rinehart_pair, check_lr_module, check_theorem1_object, derivation_pair
from ..lm import check_algebra_object, check_lie_object, check_morphism, square_zero_object, tensor_objects
from ..report import CheckReport, PreconditionError, Violation, describe
from .document import DefinitionDocument, DocumentBuilder, LRModule
from .jsonpos import Diagnostic, DocumentError, read_json

__all__ = [
    "UsageError",
    "CHECKS",
    "DEFAULT_CHECK",
    "RECIPES",
    "run_check",
    "run_construct",
    "emit_report",
    "emit_reports",
    "parse_report",
]

REPORT_FORMAT = "leibniz-lm-report/1"


class UsageError(ValueError):
    """Unknown check kind or recipe, or an entity of the wrong kind."""


def _a_module(doc, ent):
    return check_a_module(doc.value(ent.refs["algebra"]), ent.value)


def _lie_module(doc, ent):
    m = ent.value
    return CheckReport("lie_module", lie_module_violations(m.lie, m.action), field=doc.field)


def _lr_module(doc, ent):
    m = ent.value
    return check_lr_module(m.pair, m.module, m.rho2)


# check kind -> (entity kinds it applies to, function(doc, entity) -> CheckReport)
CHECKS = {
    "comm_algebra": (("comm_algebra",), lambda doc, e: check_comm_algebra(e.value)),
    "leibniz": (("leibniz", "lie"), lambda doc, e: check_leibniz(e.value)),
    "lie": (("leibniz", "lie"), lambda doc, e: check_lie(e.value)),
    "a_module": (("a_module",), _a_module),
    "lie_module": (("lie_module",), _lie_module),
    "lm_morphism": (("lm_morphism",), lambda doc, e: check_morphism(e.value)),
    "leibniz_morphism": (("leibniz_morphism",), lambda doc, e: check_leibniz_morphism(e.value.map, e.value.source, e.value.target)),
    "algebra_object": (("algebra_object",), lambda doc, e: check_algebra_object(e.value)),
    "lie_object": (("lie_object",), lambda doc, e: check_lie_object(e.value)),
    "lie_rinehart_pair": (("lie_rinehart_pair",), lambda doc, e: check_lie_rinehart_pair(e.value)),
    "lr_module": (("lr_module",), _lr_module),
    "theorem1": (("theorem1",), lambda doc, e: check_theorem1_object(e.value)),
    "algebroid": (("algebroid",), lambda doc, e: check_leibniz_algebroid(e.value)),
    "local": (("algebroid",), lambda doc, e: check_local(e.value)),
    "tensor_square_anchor": (("lie_rinehart_pair",), lambda doc, e: attempt_tensor_square_anchor(e.value)),
}

DEFAULT_CHECK = {
    "comm_algebra": "comm_algebra",
    "leibniz": "leibniz",
    "lie": "lie",
    "a_module": "a_module",
    "lie_module": "lie_module",
    "lm_morphism": "lm_morphism",
    "leibniz_morphism": "leibniz_morphism",
    "algebra_object": "algebra_object",
    "lie_object": "lie_object",
    "lie_rinehart_pair": "lie_rinehart_pair",
    "lr_module": "lr_module",
    "theorem1": "theorem1",
    "algebroid": "algebroid",
}


def _entity(doc: DefinitionDocument, name: str):
    if name not in doc:
        raise UsageError(f"no entity named {name!r}; known: {', '.join(doc.names()) or 'none'}")
    return doc.entity(name)


def run_check(doc: DefinitionDocument, entity: str, kind: str | None = None) -> CheckReport:
    """Run one checker; ``kind`` defaults to the natural check of the entity."""
    ent = _entity(doc, entity)
    if kind is None:
        kind = DEFAULT_CHECK.get(ent.kind)
        if kind is None:
            raise UsageError(f"entity {entity!r} of kind {ent.kind!r} has no default check")
    if kind not in CHECKS:
        raise UsageError(f"unknown check kind {kind!r}; choose from {', '.join(sorted(CHECKS))}")
    applies, fn = CHECKS[kind]
    if ent.kind not in applies:
        raise UsageError(f"check {kind!r} needs an entity of kind {' or '.join(applies)}, {entity!r} is {ent.kind!r}")
    return fn(doc, ent).with_meta(entity=entity, kind=kind)


# -- recipes ---------------------------------------------------------------
# Each recipe receives the builder, the output name, the document and the
# input entities, and returns the name of the constructed entity.


def _r_reduced_lie(b, name, doc, g):
    red = reduce(g.value)
    main = b.bracket(red.lie, name)
    b.tensor(red.pi, f"{name}.pi")
    b.tensor(red.section, f"{name}.section")
    return main


def _r_hemi_semi(b, name, doc, L, mod):
    if mod.refs["lie"] != L.name:
        raise UsageError(f"{mod.name!r} is a module over {mod.refs['lie']!r}, not {L.name!r}")
    return b.bracket(hemi_semi_product(L.value, mod.value.action), name)


def _r_tensor_square(b, name, doc, L):
    return b.bracket(tensor_square(L.value), name)


def _r_lm_tensor(b, name, doc, a, c):
    return b.lm_object(tensor_objects(a.value, c.value), name)


def _r_square_zero(b, name, doc, M):
    A = doc.value(M.refs["algebra"])
    return b.algebra_object(square_zero_object(A, M.value), name)


def _r_derivations(b, name, doc, A):
    return b.pair(derivation_pair(A.value), name)


def _r_universal(b, name, doc, x):
    return b.theorem1(universal_derivations(x.value).as_theorem1(), name)


def _r_tautological(b, name, doc, p):
    report = check_lie_rinehart_pair(p.value)
    if not report.passed:
        raise PreconditionError("not a Lie-Rinehart pair", report)
    return b.theorem1(build_tautological(p.value), name)


def _r_theorem2(b, name, doc, d):
    return b.algebroid(theorem2_functor(d.value), name)


def _r_hemi_semi_algebroid(b, name, doc, m):
    v = m.value
    if isinstance(v, LRModule):
        return b.algebroid(hemi_semi_algebroid(v.pair, v.module, v.rho2), name)
    return b.algebroid(hemi_semi_algebroid(v), name)


def _r_reduce_algebroid(b, name, doc, x):
    report = check_leibniz_algebroid(x.value)
    if not report.passed:
        raise PreconditionError("not a Leibniz algebroid", report)
    out = reduce_algebroid(x.value)
    if out.pair is None:
        raise PreconditionError("the squares ideal is not an A-submodule", out.report)
    main = b.pair(out.pair, name)
    b.tensor(out.pi, f"{name}.pi")
    return main


# recipe -> (input entity kinds, builder function, one-line help)
RECIPES = {
    "reduced-lie": ((("leibniz", "lie"),), _r_reduced_lie, "quotient by the squares ideal, with projection and section"),
    "hemi-semi": ((("lie",), ("lie_module",)), _r_hemi_semi, "Leibniz algebra on V (+) L from a Lie module"),
    "tensor-square": ((("lie",),), _r_tensor_square, "Leibniz algebra on L (x) L"),
    "lm-tensor": ((("lm_object",), ("lm_object",)), _r_lm_tensor, "tensor product of two objects of the linear-map category"),
    "square-zero": ((("a_module",),), _r_square_zero, "M -> A (+) M into the square-zero extension"),
    "derivations": ((("comm_algebra",),), _r_derivations, "the Lie-Rinehart pair (A, Der A)"),
    "universal-derivations": ((("algebra_object",),), _r_universal, "universal Lie algebra object of derivations, packaged"),
    "tautological": ((("lie_rinehart_pair",),), _r_tautological, "((A -> A), (L -> L)) package of a pair"),
    "theorem2": ((("theorem1",),), _r_theorem2, "Leibniz algebroid on M (+) N from a Lie-Rinehart algebra object"),
    "hemi-semi-algebroid": ((("lr_module", "lie_rinehart_pair"),), _r_hemi_semi_algebroid, "Leibniz algebroid on M (+) L (M = A for a bare pair)"),
    "reduce-algebroid": ((("algebroid",),), _r_reduce_algebroid, "Lie-Rinehart pair on the reduced Lie algebra"),
}


def run_construct(doc: DefinitionDocument, recipe: str, inputs, name: str | None = None):
    """Apply ``recipe`` to the named ``inputs``.

    Returns ``(text, main_name)``: the canonical text of a document holding
    the input document plus the constructed entity, and the name of that
    entity. Raises :class:`PreconditionError` when the inputs fail the
    recipe's preconditions and :class:`UsageError` on bad arguments.
    """
    if recipe not in RECIPES:
        raise UsageError(f"unknown recipe {recipe!r}; choose from {', '.join(sorted(RECIPES))}")
    kinds, fn, _ = RECIPES[recipe]
    inputs = list(inputs)
    if len(inputs) != len(kinds):
        raise UsageError(f"recipe {recipe!r} takes {len(kinds)} input entit{'y' if len(kinds) == 1 else 'ies'}, got {len(inputs)}")
    ents = []
    for n, want in zip(inputs, kinds):
        ent = _entity(doc, n)
        if ent.kind not in want:
            raise UsageError(f"recipe {recipe!r} needs {' or '.join(want)} for {n!r}, got {ent.kind!r}")
        ents.append(ent)
    b = DocumentBuilder(doc.field, doc)
    name = name or f"{recipe.replace('-', '_')}_of_{'_'.join(inputs)}"
    if name in doc:
        raise UsageError(f"entity {name!r} already exists")
    main = fn(b, name, doc, *ents)
    meta = {"recipe": recipe, "inputs": inputs, "output": main, "artifact_version": __version__}
    return b.dumps(meta), main


# -- reports -----------------------------------------------------------------


def _report_dict(r: CheckReport) -> dict:
    F = r.field
    return {
        "entity": r.entity,
        "kind": r.kind,
        "field": F.name,
        "verdict": r.verdict,
        "violations": [
            {"axiom": v.axiom, "witness": list(v.witness), "residual": [F.format(x) for x in v.residual]}
            for v in r.violations
        ],
    }


def _human(r: CheckReport) -> str:
    head = f"{r.verdict}: {r.kind} check of {r.entity!r} over {r.field.name}"
    if r.passed:
        return head + ", no violations"
    lines = [head + f", {len(r.violations)} violation{'s' if len(r.violations) != 1 else ''}"]
    for v in r.violations:
        wit = "(" + ", ".join(str(w) for w in v.witness) + ")"
        res = "[" + ", ".join(r.field.format(x) for x in v.residual) + "]"
        lines.append(f"  {v.axiom} [{describe(v.axiom)}] at {wit}: residual {res}")
    return "\n".join(lines)


def emit_report(r: CheckReport, format: str = "human") -> str:
    """``human``: readable lines; ``machine``: canonical JSON with sorted keys."""
    if format == "machine":
        return json.dumps({"format": REPORT_FORMAT, **_report_dict(r)}, sort_keys=True, indent=2) + "\n"
    if format == "human":
        return _human(r) + "\n"
    raise UsageError(f"unknown report format {format!r}")


def emit_reports(reports, format: str = "human") -> str:
    if format == "machine":
        body = {"format": REPORT_FORMAT, "reports": [_report_dict(r) for r in reports]}
        return json.dumps(body, sort_keys=True, indent=2) + "\n"
    return "".join(emit_report(r, format) for r in reports)


def _report_from_dict(d) -> CheckReport:
    F = field_from_name(d["field"])
    viol = []
    for v in d["violations"]:
        viol.append(Violation(v["axiom"], tuple(v["witness"]), tuple(F.parse(x) for x in v["residual"])))
    r = CheckReport(d["kind"], viol, entity=d["entity"], field=F)
    if r.verdict != d["verdict"]:
        raise ValueError("verdict does not match the violation list")
    return r


def parse_report(text):
    """Inverse of :func:`emit_report` (machine format); a report set gives a list."""
    data, _ = read_json(text)
    try:
        if not isinstance(data, dict) or data.get("format") != REPORT_FORMAT:
            raise ValueError("not a machine report")
        if "reports" in data:
            return [_report_from_dict(d) for d in data["reports"]]
        return _report_from_dict(data)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError([Diagnostic("schema", f"malformed report: {exc}", 1, 1)]) from None
