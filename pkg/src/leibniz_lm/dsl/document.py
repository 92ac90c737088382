"""Definition documents: a JSON tree of named structures.

Layout::

    {
      "format": "leibniz-lm/1",
      "field": "QQ",                       # or "GF(p)"
      "tensors":  {name: algebra or bracket},
      "modules":  {name: module},
      "maps":     {name: {"kind": "tensor", "shape": [...], "entries": [...]}},
      "packages": {name: structure referring to other names},
      "meta":     {...}                    # free-form, kept verbatim
    }

Tensors are sparse: ``entries`` is a list of ``[i, j, ..., "scalar"]`` with
0-based indices and scalars written as strings (``"3"``, ``"-1/2"``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field

import numpy as np

from ..algebra import AModule, CommAlgebra
from ..algebroid import LeibnizAlgebroid
from ..exactlin import Field, field_from_name
from ..leibniz import LeibnizAlgebra, LieAlgebra
from ..lie_rinehart import LieRinehartPair, TheoremOneData
from ..lm import LMAlgebraObject, LMLieObject, LMMorphism, LMObject
from ..report import StructureError
from .jsonpos import Diagnostic, DocumentError, read_json

__all__ = [
    "FORMAT",
    "SECTIONS",
    "KINDS",
    "Entity",
    "LieModule",
    "LeibnizMorphism",
    "LRModule",
    "DefinitionDocument",
    "DocumentBuilder",
    "parse_document",
    "dump_document",
]

FORMAT = "leibniz-lm/1"
SECTIONS = ("tensors", "modules", "maps", "packages")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*\Z")

# kind -> (section, {field: expected kind(s) of a reference or a raw value type})
KINDS = {
    "comm_algebra": ("tensors", {"dim": "dim", "mult": "entries", "unit": "vector"}),
    "leibniz": ("tensors", {"dim": "dim", "bracket": "entries"}),
    "lie": ("tensors", {"dim": "dim", "bracket": "entries"}),
    "a_module": ("modules", {"algebra": ("comm_algebra",), "dim": "dim", "action": "entries"}),
    "lie_module": ("modules", {"lie": ("lie",), "dim": "dim", "action": "entries"}),
    "tensor": ("maps", {"shape": "shape", "entries": "entries"}),
    "lm_object": ("packages", {"u": ("tensor",)}),
    "lm_morphism": ("packages", {"source": ("lm_object",), "target": ("lm_object",), "h1": ("tensor",), "h0": ("tensor",)}),
    "leibniz_morphism": ("packages", {"source": ("leibniz", "lie"), "target": ("leibniz", "lie"), "map": ("tensor",)}),
    "algebra_object": ("packages", {"algebra": ("comm_algebra",), "module": ("a_module",), "g": ("tensor",)}),
    "lie_object": ("packages", {"lie": ("lie",), "action": ("tensor",), "f": ("tensor",)}),
    "lie_rinehart_pair": ("packages", {"algebra": ("comm_algebra",), "lie": ("lie",), "action": ("a_module",), "anchor": ("tensor",)}),
    "lr_module": ("packages", {"pair": ("lie_rinehart_pair",), "module": ("a_module",), "rho2": ("tensor",)}),
    "theorem1": (
        "packages",
        {
            "algebra_object": ("algebra_object",),
            "lie_object": ("lie_object",),
            "rho0": ("tensor",),
            "rho1": ("tensor",),
            "rho2": ("tensor",),
            "lambda": ("tensor",),
            "action_L": ("a_module",),
            "action_N": ("a_module",),
        },
    ),
    "algebroid": ("packages", {"algebra": ("comm_algebra",), "bracket": ("leibniz", "lie"), "action": ("a_module",), "anchor": ("tensor",)}),
}


@dataclass(frozen=True, eq=False)
class LieModule:
    lie: LieAlgebra
    action: np.ndarray


@dataclass(frozen=True, eq=False)
class LeibnizMorphism:
    source: LeibnizAlgebra
    target: LeibnizAlgebra
    map: np.ndarray


@dataclass(frozen=True, eq=False)
class LRModule:
    pair: LieRinehartPair
    module: AModule
    rho2: np.ndarray


@dataclass(eq=False)
class Entity:
    name: str
    kind: str
    section: str
    spec: dict
    position: tuple
    value: object = None
    refs: dict = dc_field(default_factory=dict)


@dataclass(eq=False)
class DefinitionDocument:
    field: Field
    entities: dict
    meta: dict
    raw: dict

    def __contains__(self, name):
        return name in self.entities

    def entity(self, name: str) -> Entity:
        return self.entities[name]

    def value(self, name: str):
        return self.entities[name].value

    def names(self, kind: str | None = None) -> list[str]:
        return [n for n, e in self.entities.items() if kind is None or e.kind == kind]

    def dumps(self) -> str:
        return dump_document(self.raw)


def dump_document(raw: dict) -> str:
    """Canonical text of a document: sorted keys, two-space indent, trailing newline."""
    return json.dumps(raw, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


class _Resolver:
    def __init__(self, raw, positions):
        self.raw = raw
        self.positions = positions
        self.diagnostics = []
        self.entities = {}
        self.field = None

    def pos(self, path):
        while path and path not in self.positions:
            path = path[:-1]
        return self.positions.get(path, (1, 1))

    def diag(self, code, message, path, expected=()):
        line, col = self.pos(path)
        self.diagnostics.append(Diagnostic(code, message, line, col, tuple(expected)))

    def run(self):
        raw = self.raw
        if not isinstance(raw, dict):
            self.diag("schema", "document must be an object", ())
            return
        known = {"format", "field", "meta", *SECTIONS}
        for key in raw:
            if key not in known:
                self.diag("schema", f"unknown top-level key {key!r}", (key,), sorted(known))
        fmt = raw.get("format", FORMAT)
        if fmt != FORMAT:
            self.diag("schema", f"unsupported format {fmt!r}", ("format",), (FORMAT,))
        if "meta" in raw and not isinstance(raw["meta"], dict):
            self.diag("schema", "meta must be an object", ("meta",))
        name = raw.get("field")
        if not isinstance(name, str):
            self.diag("schema", "missing or non-string field declaration", ("field",), ("QQ", "GF(p)"))
            return
        try:
            self.field = field_from_name(name)
        except (ValueError, TypeError) as exc:
            self.diag("invalid-scalar", f"unknown field {name!r}: {exc}", ("field",), ("QQ", "GF(p)"))
            return
        for section in SECTIONS:
            block = raw.get(section, {})
            if not isinstance(block, dict):
                self.diag("schema", f"section {section!r} must be an object", (section,))
                continue
            for ename, spec in block.items():
                path = (section, ename)
                if not _NAME.match(ename):
                    self.diag("schema", f"invalid entity name {ename!r}", path)
                    continue
                if ename in self.entities:
                    self.diag("duplicate-name", f"entity {ename!r} declared twice", path)
                    continue
                if not isinstance(spec, dict) or not isinstance(spec.get("kind"), str):
                    self.diag("schema", f"entity {ename!r} needs an object with a string 'kind'", path)
                    continue
                kind = spec["kind"]
                allowed = sorted(k for k, (s, _) in KINDS.items() if s == section)
                if kind not in KINDS or KINDS[kind][0] != section:
                    self.diag("schema", f"kind {kind!r} is not allowed in {section!r}", path + ("kind",), allowed)
                    continue
                self.entities[ename] = Entity(ename, kind, section, spec, self.pos(path))
        self.resolving = set()
        for ename in list(self.entities):
            self.resolve(ename, ())

    # -- resolution ---------------------------------------------------------

    def resolve(self, name, chain):
        ent = self.entities[name]
        if ent.value is not None or ent.refs.get("__failed__"):
            return ent.value
        if name in self.resolving:
            self.diag("unresolved-reference", f"cyclic reference through {name!r}", (ent.section, name))
            ent.refs["__failed__"] = True
            return None
        self.resolving.add(name)
        try:
            value = self.build(ent)
        except _Abort:
            value = None
        except (StructureError, ValueError) as exc:
            self.diag("dimension-clash", f"{name!r}: {exc}", (ent.section, name))
            value = None
        self.resolving.discard(name)
        if value is None:
            ent.refs["__failed__"] = True
        ent.value = value
        return value

    def build(self, ent):
        _, fields = KINDS[ent.kind]
        path = (ent.section, ent.name)
        spec = ent.spec
        for key in spec:
            if key != "kind" and key not in fields:
                self.diag("schema", f"unknown key {key!r} for kind {ent.kind!r}", path + (key,), sorted(fields))
        vals = {}
        ok = True
        for key, want in fields.items():
            if key not in spec:
                self.diag("schema", f"{ent.kind} {ent.name!r} is missing {key!r}", path, (key,))
                ok = False
                continue
            if isinstance(want, tuple):
                vals[key] = self.reference(ent, key, want)
                ok = ok and vals[key] is not None
            elif want in ("dim",):
                v = spec[key]
                if not isinstance(v, int) or isinstance(v, bool) or v < 0 or v > 4096:
                    self.diag("schema", f"{key!r} must be a non-negative integer", path + (key,))
                    ok = False
                vals[key] = v
            elif want == "shape":
                v = spec[key]
                if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x <= 4096 for x in v) or len(v) > 6:
                    self.diag("schema", "shape must be a list of at most six non-negative integers", path + (key,))
                    ok = False
                elif int(np.prod(v, dtype=object)) > 10**6:
                    self.diag("dimension-clash", "tensor too large", path + (key,))
                    ok = False
                vals[key] = v
        if not ok:
            raise _Abort()
        return getattr(self, "make_" + ent.kind)(ent, vals, path)

    def reference(self, ent, key, kinds):
        target = ent.spec[key]
        p = (ent.section, ent.name, key)
        if not isinstance(target, str):
            self.diag("schema", f"{key!r} must name an entity", p)
            return None
        if target not in self.entities:
            self.diag("unresolved-reference", f"{ent.name!r}.{key} refers to undeclared {target!r}", p, kinds)
            return None
        other = self.entities[target]
        if other.kind not in kinds:
            self.diag("schema", f"{ent.name!r}.{key} refers to {target!r} of kind {other.kind!r}", p, kinds)
            return None
        ent.refs[key] = target
        value = self.resolve(target, ())
        if value is None:
            raise _Abort()
        return value

    def scalar(self, text, path):
        F = self.field
        if isinstance(text, bool) or not isinstance(text, (str, int)):
            self.diag("invalid-scalar", f"scalar must be a string or an integer, got {text!r}", path)
            return None
        try:
            return F(text) if isinstance(text, int) else F.parse(text)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            self.diag("invalid-scalar", f"invalid scalar {text!r}: {exc}", path)
            return None

    def tensor(self, ent, key, shape):
        path = (ent.section, ent.name, key)
        entries = ent.spec.get(key)
        F = self.field
        out = F.zeros(tuple(shape))
        if not isinstance(entries, list):
            self.diag("schema", f"{key!r} must be a list of [index..., scalar] entries", path)
            raise _Abort()
        ok = True
        seen = set()
        n = len(shape)
        for t, entry in enumerate(entries):
            p = path + (t,)
            if not isinstance(entry, list) or len(entry) != n + 1:
                self.diag("schema", f"entry must have {n} indices and a scalar", p)
                ok = False
                continue
            idx = entry[:n]
            if not all(isinstance(i, int) and not isinstance(i, bool) for i in idx):
                self.diag("schema", "indices must be integers", p)
                ok = False
                continue
            if not all(0 <= i < d for i, d in zip(idx, shape)):
                self.diag("dimension-clash", f"index {tuple(idx)} outside shape {tuple(shape)}", p)
                ok = False
                continue
            if tuple(idx) in seen:
                self.diag("schema", f"index {tuple(idx)} given twice", p)
                ok = False
                continue
            seen.add(tuple(idx))
            v = self.scalar(entry[n], p + (n,))
            if v is None:
                ok = False
                continue
            out[tuple(idx)] = v
        if not ok:
            raise _Abort()
        return out

    def expect_shape(self, ent, key, arr, shape):
        if tuple(arr.shape) != tuple(shape):
            self.diag(
                "dimension-clash",
                f"{ent.name!r}.{key} has shape {tuple(arr.shape)}, expected {tuple(shape)}",
                (ent.section, ent.name, key),
            )
            raise _Abort()

    # -- per-kind constructors ---------------------------------------------

    def make_comm_algebra(self, ent, v, path):
        d = v["dim"]
        mult = self.tensor(ent, "mult", (d, d, d))
        unit = ent.spec["unit"]
        if not isinstance(unit, list) or len(unit) != d:
            self.diag("dimension-clash", f"unit must list {d} scalars", path + ("unit",))
            raise _Abort()
        vec = [self.scalar(x, path + ("unit", i)) for i, x in enumerate(unit)]
        if any(x is None for x in vec):
            raise _Abort()
        return CommAlgebra(self.field, mult, self.field.array(vec) if d else self.field.zeros(0))

    def make_leibniz(self, ent, v, path):
        d = v["dim"]
        return LeibnizAlgebra(self.field, self.tensor(ent, "bracket", (d, d, d)))

    def make_lie(self, ent, v, path):
        d = v["dim"]
        return LieAlgebra(self.field, self.tensor(ent, "bracket", (d, d, d)))

    def make_a_module(self, ent, v, path):
        A = v["algebra"]
        return AModule(self.field, self.tensor(ent, "action", (A.dim, v["dim"], v["dim"])))

    def make_lie_module(self, ent, v, path):
        L = v["lie"]
        return LieModule(L, self.tensor(ent, "action", (L.dim, v["dim"], v["dim"])))

    def make_tensor(self, ent, v, path):
        return self.tensor(ent, "entries", v["shape"])

    def _matrix(self, ent, key, arr):
        if arr.ndim != 2:
            self.diag("dimension-clash", f"{ent.name!r}.{key} must be a matrix", (ent.section, ent.name, key))
            raise _Abort()
        return arr

    def make_lm_object(self, ent, v, path):
        return LMObject(self.field, self._matrix(ent, "u", v["u"]))

    def make_lm_morphism(self, ent, v, path):
        a, b = v["source"], v["target"]
        self.expect_shape(ent, "h1", v["h1"], (b.dim_top, a.dim_top))
        self.expect_shape(ent, "h0", v["h0"], (b.dim_bottom, a.dim_bottom))
        return LMMorphism(a, b, v["h1"], v["h0"], verify=False)

    def make_leibniz_morphism(self, ent, v, path):
        self.expect_shape(ent, "map", v["map"], (v["target"].dim, v["source"].dim))
        return LeibnizMorphism(v["source"], v["target"], v["map"])

    def make_algebra_object(self, ent, v, path):
        A, M = v["algebra"], v["module"]
        self._same_algebra(ent, "module", "algebra")
        self.expect_shape(ent, "g", v["g"], (A.dim, M.dim))
        return LMAlgebraObject(A, M, v["g"])

    def make_lie_object(self, ent, v, path):
        L, act, f = v["lie"], v["action"], v["f"]
        if act.ndim != 3:
            self.expect_shape(ent, "action", act, ("dim N", L.dim, "dim N"))
        dN = act.shape[0]
        self.expect_shape(ent, "action", act, (dN, L.dim, dN))
        self.expect_shape(ent, "f", f, (L.dim, dN))
        return LMLieObject(L, act, f)

    def make_lie_rinehart_pair(self, ent, v, path):
        A, L, act = v["algebra"], v["lie"], v["action"]
        self._same_algebra(ent, "action", "algebra")
        if act.dim != L.dim:
            self.diag("dimension-clash", f"action module has dimension {act.dim}, Lie algebra {L.dim}", path + ("action",))
            raise _Abort()
        self.expect_shape(ent, "anchor", v["anchor"], (L.dim, A.dim, A.dim))
        return LieRinehartPair(A, L, act, v["anchor"])

    def make_lr_module(self, ent, v, path):
        p, M = v["pair"], v["module"]
        if M.algebra_dim != p.A.dim:
            self.diag("dimension-clash", "module is over an algebra of another dimension", path + ("module",))
            raise _Abort()
        self.expect_shape(ent, "rho2", v["rho2"], (p.L.dim, M.dim, M.dim))
        return LRModule(p, M, v["rho2"])

    def make_theorem1(self, ent, v, path):
        x, y = v["algebra_object"], v["lie_object"]
        dA, dM, dL, dN = x.A.dim, x.M.dim, y.L.dim, y.dim_N
        self.expect_shape(ent, "rho0", v["rho0"], (dL, dA, dA))
        self.expect_shape(ent, "rho1", v["rho1"], (dN, dM, dA))
        self.expect_shape(ent, "rho2", v["rho2"], (dL, dM, dM))
        self.expect_shape(ent, "lambda", v["lambda"], (dN, dM * dL))
        self.expect_shape(ent, "action_L", v["action_L"].action, (dA, dL, dL))
        self.expect_shape(ent, "action_N", v["action_N"].action, (dA, dN, dN))
        return TheoremOneData(
            alg=x,
            lie=y,
            rho0=v["rho0"],
            rho1=v["rho1"],
            rho2=v["rho2"],
            lam=v["lambda"],
            action_L=v["action_L"],
            action_N=v["action_N"],
        )

    def make_algebroid(self, ent, v, path):
        A, E, act = v["algebra"], v["bracket"], v["action"]
        self._same_algebra(ent, "action", "algebra")
        if act.dim != E.dim:
            self.diag("dimension-clash", f"action module has dimension {act.dim}, bracket {E.dim}", path + ("action",))
            raise _Abort()
        self.expect_shape(ent, "anchor", v["anchor"], (E.dim, A.dim, A.dim))
        return LeibnizAlgebroid(A, E, act, v["anchor"])

    def _same_algebra(self, ent, module_key, algebra_key):
        mod = self.entities[ent.refs[module_key]]
        want = ent.refs[algebra_key]
        have = mod.refs.get("algebra")
        if have != want:
            self.diag(
                "dimension-clash",
                f"{ent.name!r}.{module_key} is a module over {have!r}, not {want!r}",
                (ent.section, ent.name, module_key),
            )
            raise _Abort()


class _Abort(Exception):
    """Stops building one entity after its diagnostics were recorded."""


def parse_document(text) -> DefinitionDocument:
    """Parse and resolve a definition document.

    Raises :class:`DocumentError` listing every diagnostic; never raises
    anything else on malformed input.
    """
    raw, positions = read_json(text)
    r = _Resolver(raw, positions)
    try:
        r.run()
    except RecursionError:
        r.diagnostics.append(Diagnostic("schema", "references nest too deeply", 1, 1))
    if r.diagnostics:
        raise DocumentError(r.diagnostics)
    return DefinitionDocument(r.field, r.entities, dict(raw.get("meta", {})), raw)


# -- building documents from objects -------------------------------------------


def _entries(F: Field, arr) -> list:
    arr = np.asarray(arr, dtype=object)
    out = []
    for idx in np.ndindex(arr.shape):
        x = arr[idx]
        if x != 0:
            out.append([int(i) for i in idx] + [F.format(x)])
    return out


class DocumentBuilder:
    """Accumulates named entities; objects already named are referenced, not copied.

    Seed it with a parsed document to extend that document.
    """

    def __init__(self, field: Field, base: DefinitionDocument | None = None):
        self.field = field
        self.raw = {"format": FORMAT, "field": field.name}
        for s in SECTIONS:
            self.raw[s] = {}
        self.names = {}
        self.taken = set()
        if base is not None:
            for s in SECTIONS:
                self.raw[s] = json.loads(json.dumps(base.raw.get(s, {})))
            for name, ent in base.entities.items():
                self.taken.add(name)
                if ent.value is not None:
                    self.names.setdefault(id(ent.value), name)
            self._keep = [e.value for e in base.entities.values()]
        else:
            self._keep = []

    def fresh(self, name: str) -> str:
        base, k = name, 2
        while name in self.taken:
            name = f"{base}_{k}"
            k += 1
        self.taken.add(name)
        return name

    def _put(self, section, name, obj, spec):
        name = self.fresh(name)
        self.raw[section][name] = spec
        if obj is not None:
            self.names[id(obj)] = name
            self._keep.append(obj)
        return name

    def known(self, obj):
        return self.names.get(id(obj))

    def algebra(self, A: CommAlgebra, name: str) -> str:
        if self.known(A):
            return self.known(A)
        spec = {"kind": "comm_algebra", "dim": A.dim, "mult": _entries(self.field, A.mult), "unit": [self.field.format(x) for x in A.unit]}
        return self._put("tensors", name, A, spec)

    def bracket(self, g: LeibnizAlgebra, name: str) -> str:
        if self.known(g):
            return self.known(g)
        kind = "lie" if isinstance(g, LieAlgebra) else "leibniz"
        return self._put("tensors", name, g, {"kind": kind, "dim": g.dim, "bracket": _entries(self.field, g.bracket)})

    def module(self, M: AModule, algebra_name: str, name: str) -> str:
        if self.known(M):
            return self.known(M)
        spec = {"kind": "a_module", "algebra": algebra_name, "dim": M.dim, "action": _entries(self.field, M.action)}
        return self._put("modules", name, M, spec)

    def lie_module(self, mod: LieModule, lie_name: str, name: str) -> str:
        spec = {"kind": "lie_module", "lie": lie_name, "dim": mod.action.shape[1], "action": _entries(self.field, mod.action)}
        return self._put("modules", name, mod, spec)

    def tensor(self, arr, name: str) -> str:
        if self.known(arr):
            return self.known(arr)
        arr = np.asarray(arr, dtype=object)
        spec = {"kind": "tensor", "shape": [int(s) for s in arr.shape], "entries": _entries(self.field, arr)}
        return self._put("maps", name, arr, spec)

    def package(self, obj, name: str, kind: str, refs: dict) -> str:
        if self.known(obj):
            return self.known(obj)
        return self._put("packages", name, obj, {"kind": kind, **refs})

    # composite structures

    def lm_object(self, a: LMObject, name: str) -> str:
        if self.known(a):
            return self.known(a)
        return self.package(a, name, "lm_object", {"u": self.tensor(a.u, f"{name}.u")})

    def algebra_object(self, x: LMAlgebraObject, name: str) -> str:
        if self.known(x):
            return self.known(x)
        A = self.algebra(x.A, f"{name}.algebra")
        refs = {"algebra": A, "module": self.module(x.M, A, f"{name}.module"), "g": self.tensor(x.g, f"{name}.g")}
        return self.package(x, name, "algebra_object", refs)

    def lie_object(self, y: LMLieObject, name: str) -> str:
        if self.known(y):
            return self.known(y)
        refs = {"lie": self.bracket(y.L, f"{name}.lie"), "action": self.tensor(y.action, f"{name}.action"), "f": self.tensor(y.f, f"{name}.f")}
        return self.package(y, name, "lie_object", refs)

    def pair(self, p: LieRinehartPair, name: str) -> str:
        if self.known(p):
            return self.known(p)
        A = self.algebra(p.A, f"{name}.algebra")
        refs = {
            "algebra": A,
            "lie": self.bracket(p.L, f"{name}.lie"),
            "action": self.module(p.action, A, f"{name}.action"),
            "anchor": self.tensor(p.anchor, f"{name}.anchor"),
        }
        return self.package(p, name, "lie_rinehart_pair", refs)

    def theorem1(self, d: TheoremOneData, name: str) -> str:
        if self.known(d):
            return self.known(d)
        x = self.algebra_object(d.alg, f"{name}.alg")
        A = self.known(d.alg.A)
        refs = {
            "algebra_object": x,
            "lie_object": self.lie_object(d.lie, f"{name}.lie"),
            "rho0": self.tensor(d.rho0, f"{name}.rho0"),
            "rho1": self.tensor(d.rho1, f"{name}.rho1"),
            "rho2": self.tensor(d.rho2, f"{name}.rho2"),
            "lambda": self.tensor(d.lam, f"{name}.lambda"),
            "action_L": self.module(d.action_L, A, f"{name}.action_L"),
            "action_N": self.module(d.action_N, A, f"{name}.action_N"),
        }
        return self.package(d, name, "theorem1", refs)

    def algebroid(self, x: LeibnizAlgebroid, name: str) -> str:
        if self.known(x):
            return self.known(x)
        A = self.algebra(x.A, f"{name}.algebra")
        refs = {
            "algebra": A,
            "bracket": self.bracket(x.E, f"{name}.bracket"),
            "action": self.module(x.action, A, f"{name}.action"),
            "anchor": self.tensor(x.anchor, f"{name}.anchor"),
        }
        return self.package(x, name, "algebroid", refs)

    def lr_module(self, m: LRModule, name: str) -> str:
        p = self.pair(m.pair, f"{name}.pair")
        A = self.known(m.pair.A)
        refs = {"pair": p, "module": self.module(m.module, A, f"{name}.module"), "rho2": self.tensor(m.rho2, f"{name}.rho2")}
        return self.package(m, name, "lr_module", refs)

    def add(self, obj, name: str) -> str:
        """Add any supported structure under ``name`` (sub-entities get dotted names)."""
        if isinstance(obj, CommAlgebra):
            return self.algebra(obj, name)
        if isinstance(obj, LeibnizAlgebra):
            return self.bracket(obj, name)
        if isinstance(obj, LMObject):
            return self.lm_object(obj, name)
        if isinstance(obj, LMAlgebraObject):
            return self.algebra_object(obj, name)
        if isinstance(obj, LMLieObject):
            return self.lie_object(obj, name)
        if isinstance(obj, LieRinehartPair):
            return self.pair(obj, name)
        if isinstance(obj, TheoremOneData):
            return self.theorem1(obj, name)
        if isinstance(obj, LeibnizAlgebroid):
            return self.algebroid(obj, name)
        if isinstance(obj, LRModule):
            return self.lr_module(obj, name)
        if isinstance(obj, np.ndarray):
            return self.tensor(obj, name)
        raise TypeError(f"cannot serialize {type(obj).__name__}")

    def document_raw(self, meta: dict | None = None) -> dict:
        raw = {k: v for k, v in self.raw.items() if k not in SECTIONS or v}
        if meta:
            raw["meta"] = meta
        return raw

    def dumps(self, meta: dict | None = None) -> str:
        return dump_document(self.document_raw(meta))
