"""JSON documents: one object per file, validated against a schema per kind.

Every document carries ``"kind"`` and ``"schema": 1``.  A slot that expects
another object accepts either the inline document or a path relative to the
containing file.  Scalars are integers or strings such as ``"-3/4"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema

from .cohomology import Cochain, ModuleSES
from .crossed import GroupXMod, HopfCoComod, HopfXMod, LieTwoAlg, LieXMod, PreCat1Hopf, TwoGroup, precat1_from_lie2
from .enveloping import EnvelopingMorphism
from .functors import functor_fun, functor_kg, functor_u
from .groups import FinGroup
from .hopf import FinDimHopf, dualize, function_algebra, group_algebra
from .lie import FinLieAlgebra, LieModule
from .linalg import SparseMat, SparseVec

__all__ = ["SCHEMA_VERSION", "KINDS", "DocumentError", "Document", "parse_document", "load_document",
           "build", "load", "to_document", "cochain_document", "dump_scalar"]

SCHEMA_VERSION = 1

KINDS = ("group", "lie_algebra", "hopf", "module", "ses", "cocycle", "group_xmod", "lie_xmod",
         "hopf_xmod", "cocomod", "two_group", "lie_two_alg", "precat1")


class DocumentError(ValueError):
    """Malformed input: ``path`` locates the problem inside the document."""

    def __init__(self, path: str, reason: str):
        super().__init__(f"{path}: {reason}")
        self.path, self.reason = path, reason


# -- schemas -------------------------------------------------------------------------

_scalar = {"type": ["integer", "string"], "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"}
_vector = {"type": "array", "items": _scalar}
_matrix = {"type": "array", "items": _vector}
_index = {"type": "integer", "minimum": 0}
_ref = {"type": ["string", "object"]}
_names = {"type": "array", "items": {"type": "string"}}
_triple = {"type": "array", "prefixItems": [_index, _index, _vector], "minItems": 3, "maxItems": 3}
_pair_entry = {"type": "array", "prefixItems": [_index, _index, _scalar], "minItems": 3, "maxItems": 3}
_table = {"type": "array", "items": {"type": "array", "items": _index}}
_module_body = {"type": ["object", "string"], "properties": {"dim": _index, "action": {"type": "array", "items": _matrix},
                                                          "names": _names}}


def _doc(required, properties, any_of=None):
    schema = {
        "type": "object",
        "required": ["kind", "schema"] + list(required),
        "properties": {"kind": {"enum": list(KINDS)}, "schema": {"const": SCHEMA_VERSION}, "name": {"type": "string"},
                       "description": {"type": "string"}, **properties},
    }
    if any_of:
        schema["anyOf"] = [{"required": r} for r in any_of]
    return schema


_construction = {"construction": {"type": "string"}, "source": _ref}

SCHEMAS: Dict[str, dict] = {
    "group": _doc(["order", "mult"], {"order": {"type": "integer", "minimum": 1}, "mult": _table, "names": _names}),
    "lie_algebra": _doc(["dim", "bracket"], {"dim": _index, "bracket": {"type": "array", "items": _triple},
                                             "names": _names}),
    "hopf": _doc([], {**_construction, "construction": {"enum": ["group_algebra", "function_algebra", "dual"]},
                      "dim": _index, "mult": {"type": "array", "items": _triple}, "unit": _vector,
                      "comult": {"type": "array", "items": {"type": "array", "items": _pair_entry}},
                      "counit": _vector, "antipode": _matrix, "names": _names},
                 any_of=[["construction", "source"], ["dim", "mult", "unit", "comult", "counit", "antipode"]]),
    "module": _doc(["dim", "action"], {"algebra": _ref, "dim": _index, "action": {"type": "array", "items": _matrix},
                                       "names": _names}),
    "ses": _doc(["v", "i", "q", "inject", "project"], {"algebra": _ref, "v": _module_body, "i": _module_body,
                                                       "q": _module_body, "inject": _matrix, "project": _matrix}),
    "cocycle": _doc(["values"], {"algebra": _ref, "module": _ref, "degree": {"type": "integer", "minimum": 0,
                                                                            "maximum": 3},
                                 "values": {"type": "array", "items": {"type": "array", "minItems": 1}}}),
    "group_xmod": _doc([], {**_construction, "construction": {"enum": ["conjugation"]}, "group": _ref,
                            "subgroup": {"type": "array", "items": _index}, "m": _ref, "n": _ref,
                            "mu": {"type": "array", "items": _index}, "action": _table},
                       any_of=[["construction", "group", "subgroup"], ["m", "n", "mu", "action"]]),
    "lie_xmod": _doc([], {**_construction, "construction": {"enum": ["ideal"]}, "algebra": _ref, "basis": _matrix,
                          "m": _ref, "n": _ref, "mu": _matrix, "action": {"type": "array", "items": _matrix},
                          "m_names": _names},
                     any_of=[["construction", "algebra", "basis"], ["m", "n", "mu", "action"]]),
    "hopf_xmod": _doc([], {**_construction, "construction": {"enum": ["kg", "u"]}, "degree": _index,
                           "b": _ref, "h": _ref, "gamma": _matrix, "phi": {"type": "array", "items": _triple}},
                      any_of=[["construction", "source"], ["b", "h", "gamma", "phi"]]),
    "cocomod": _doc([], {**_construction, "construction": {"enum": ["fun"]}, "k": _ref, "l": _ref, "zeta": _matrix,
                         "rho": {"type": "array", "items": {"type": "array", "items": _pair_entry}}},
                    any_of=[["construction", "source"], ["k", "l", "zeta", "rho"]]),
    "two_group": _doc([], {**_construction, "construction": {"enum": ["xmod"]}, "g0": _ref, "g1": _ref,
                           "s": {"type": "array", "items": _index}, "t": {"type": "array", "items": _index},
                           "i": {"type": "array", "items": _index}},
                      any_of=[["construction", "source"], ["g0", "g1", "s", "t", "i"]]),
    "lie_two_alg": _doc([], {**_construction, "construction": {"enum": ["xmod"]}, "g0": _ref, "g1": _ref,
                             "s": _matrix, "t": _matrix, "i": _matrix},
                        any_of=[["construction", "source"], ["g0", "g1", "s", "t", "i"]]),
    "precat1": _doc(["construction", "source"], {**_construction, "construction": {"enum": ["lie2"]},
                                                 "degree": _index}),
}

def _locate(path) -> str:
    out = "$"
    for p in path:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


def _validate(schema: dict, obj: Any, prefix: str = "$"):
    err = jsonschema.exceptions.best_match(jsonschema.Draft202012Validator(schema).iter_errors(obj))
    if err is None:
        return
    path = list(err.absolute_path)
    reason = err.message
    if err.validator == "required" and isinstance(err.instance, dict):
        missing = [k for k in err.validator_value if k not in err.instance]
        if missing:
            path.append(missing[0])
            reason = f"missing required field '{missing[0]}'"
    elif err.validator == "anyOf" and isinstance(err.instance, dict):
        options = [" + ".join(s["required"]) for s in err.validator_value]
        reason = "expected one of the field sets: " + "; ".join(options)
    where = _locate(path)
    raise DocumentError(prefix + where[1:], reason)


# -- parsing -------------------------------------------------------------------------------

@dataclass
class Document:
    kind: str
    payload: Dict[str, Any]
    base: Optional[Path] = None
    location: str = "$"


def parse_document(text, base: Optional[Path] = None, location: str = "$") -> Document:
    """Parse and validate one document (a JSON string or an already-decoded object)."""
    if isinstance(text, (str, bytes)):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{location} line {exc.lineno} column {exc.colno}", f"malformed JSON: {exc.msg}")
    else:
        obj = text
    if not isinstance(obj, dict):
        raise DocumentError(location, "document must be a JSON object")
    if "kind" not in obj:
        raise DocumentError(location + ".kind", "missing required field 'kind'")
    if obj["kind"] not in SCHEMAS:
        raise DocumentError(location + ".kind", f"unknown kind {obj['kind']!r}")
    _validate(SCHEMAS[obj["kind"]], obj, location)
    return Document(obj["kind"], obj, base, location)


def load_document(path) -> Document:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(path), f"cannot read file: {exc.strerror}")
    return parse_document(text, base=path.parent, location=f"{path}:$")


def _sub(doc: Document, key: str, want: Optional[str] = None) -> Document:
    ref = doc.payload[key]
    where = f"{doc.location}.{key}"
    if isinstance(ref, str):
        path = (doc.base or Path(".")) / ref
        sub = load_document(path)
    else:
        sub = parse_document(ref, doc.base, where)
    if want is not None and sub.kind != want:
        raise DocumentError(where, f"expected a {want!r} document, got {sub.kind!r}")
    return sub


def _fr(x) -> Fraction:
    return Fraction(str(x).replace(" ", ""))


def _vec(v) -> SparseVec:
    return {i: _fr(c) for i, c in enumerate(v) if _fr(c)}


def _mat(rows, cols: int, where: str) -> SparseMat:
    for r, row in enumerate(rows):
        if len(row) != cols:
            raise DocumentError(f"{where}[{r}]", f"expected {cols} entries, got {len(row)}")
    return SparseMat(len(rows), cols, {(r, c): _fr(x) for r, row in enumerate(rows) for c, x in enumerate(row)
                                       if _fr(x)})


def _shape(m: SparseMat, rows: int, cols: int, where: str):
    if (m.rows, m.cols) != (rows, cols):
        raise DocumentError(where, f"expected a {rows}x{cols} matrix, got {m.rows}x{m.cols}")


def _module(body, g: FinLieAlgebra, where: str) -> LieModule:
    if "dim" not in body or "action" not in body:
        raise DocumentError(where, "module needs 'dim' and 'action'")
    dim = body["dim"]
    mats = [_mat(a, dim, f"{where}.action[{k}]") for k, a in enumerate(body["action"])]
    if len(mats) != g.dim:
        raise DocumentError(f"{where}.action", f"expected {g.dim} matrices, got {len(mats)}")
    for k, m in enumerate(mats):
        _shape(m, dim, dim, f"{where}.action[{k}]")
    return LieModule(g, dim, mats, names=body.get("names"))


def build(doc: Document, context: Optional[dict] = None):
    """Construct the algebraic object described by ``doc``.

    ``context`` may supply ``algebra`` (a :class:`FinLieAlgebra`) or
    ``module`` for documents that leave them implicit.
    """
    context = context or {}
    p, k, loc = doc.payload, doc.kind, doc.location
    if k == "group":
        if len(p["mult"]) != p["order"]:
            raise DocumentError(f"{loc}.mult", f"expected {p['order']} rows")
        return FinGroup(p["mult"], names=p.get("names"))
    if k == "lie_algebra":
        n = p["dim"]
        return FinLieAlgebra(n, {(i, j): _vec(v) for i, j, v in p["bracket"]}, names=p.get("names"))
    if k == "hopf":
        if "construction" in p:
            if p["construction"] == "dual":
                return dualize(build(_sub(doc, "source", "hopf")))
            g = build(_sub(doc, "source", "group"))
            return group_algebra(g) if p["construction"] == "group_algebra" else function_algebra(g)
        n = p["dim"]
        mult = {(i, j): _vec(v) for i, j, v in p["mult"]}
        comult = [{(i, j): _fr(c) for i, j, c in row} for row in p["comult"]]
        anti = _mat(p["antipode"], n, f"{loc}.antipode")
        return FinDimHopf(n, mult, _vec(p["unit"]), comult, _vec(p["counit"]), anti, names=p.get("names"))
    if k == "module":
        g = build(_sub(doc, "algebra", "lie_algebra")) if "algebra" in p else context.get("algebra")
        if g is None:
            raise DocumentError(f"{loc}.algebra", "missing required field 'algebra'")
        return _module(p, g, loc)
    if k == "ses":
        g = build(_sub(doc, "algebra", "lie_algebra")) if "algebra" in p else context.get("algebra")
        if g is None:
            raise DocumentError(f"{loc}.algebra", "missing required field 'algebra'")
        mods = []
        for key in ("v", "i", "q"):
            body = p[key]
            if isinstance(body, str):
                body = _sub(doc, key, "module").payload
            mods.append(_module(body, g, f"{loc}.{key}"))
        V, I, Q = mods
        inj = _mat(p["inject"], V.dim, f"{loc}.inject")
        pro = _mat(p["project"], I.dim, f"{loc}.project")
        _shape(inj, I.dim, V.dim, f"{loc}.inject")
        _shape(pro, Q.dim, I.dim, f"{loc}.project")
        return ModuleSES(V, I, Q, inj, pro)
    if k == "cocycle":
        deg = p.get("degree", 2)
        values = {}
        for r, entry in enumerate(p["values"]):
            idx, v = entry[:-1], entry[-1]
            if len(idx) != deg or not isinstance(v, list) or any(not isinstance(i, int) or i < 0 for i in idx):
                raise DocumentError(f"{loc}.values[{r}]", f"expected {deg} indices and a coordinate list")
            if list(idx) != sorted(set(idx)):
                raise DocumentError(f"{loc}.values[{r}]", "indices must be strictly increasing")
            values[tuple(idx)] = _vec(v)
        return Cochain(deg, values)
    if k == "group_xmod":
        if p.get("construction") == "conjugation":
            return GroupXMod.conjugation(build(_sub(doc, "group", "group")), p["subgroup"])
        M, N = build(_sub(doc, "m", "group")), build(_sub(doc, "n", "group"))
        return GroupXMod(M, N, p["mu"], p["action"])
    if k == "lie_xmod":
        if p.get("construction") == "ideal":
            g = build(_sub(doc, "algebra", "lie_algebra"))
            basis = [_vec(v) for v in p["basis"]]
            return LieXMod.ideal(g, basis, names=p.get("m_names"))
        m, n = build(_sub(doc, "m", "lie_algebra")), build(_sub(doc, "n", "lie_algebra"))
        mu = _mat(p["mu"], m.dim, f"{loc}.mu")
        _shape(mu, n.dim, m.dim, f"{loc}.mu")
        acts = [_mat(a, m.dim, f"{loc}.action[{r}]") for r, a in enumerate(p["action"])]
        if len(acts) != n.dim:
            raise DocumentError(f"{loc}.action", f"expected {n.dim} matrices, got {len(acts)}")
        for r, a in enumerate(acts):
            _shape(a, m.dim, m.dim, f"{loc}.action[{r}]")
        return LieXMod(m, n, mu, acts)
    if k == "hopf_xmod":
        if "construction" in p:
            if p["construction"] == "kg":
                return functor_kg(build(_sub(doc, "source", "group_xmod")))
            return functor_u(build(_sub(doc, "source", "lie_xmod")), p.get("degree", 3))
        B, H = build(_sub(doc, "b", "hopf")), build(_sub(doc, "h", "hopf"))
        gamma = _mat(p["gamma"], B.dim, f"{loc}.gamma")
        _shape(gamma, H.dim, B.dim, f"{loc}.gamma")
        phi = {(i, j): _vec(v) for i, j, v in p["phi"]}
        return HopfXMod.finite(B, H, gamma, phi)
    if k == "cocomod":
        if "construction" in p:
            return functor_fun(build(_sub(doc, "source", "group_xmod")))
        K, L = build(_sub(doc, "k", "hopf")), build(_sub(doc, "l", "hopf"))
        zeta = _mat(p["zeta"], K.dim, f"{loc}.zeta")
        _shape(zeta, L.dim, K.dim, f"{loc}.zeta")
        if len(p["rho"]) != L.dim:
            raise DocumentError(f"{loc}.rho", f"expected {L.dim} rows, got {len(p['rho'])}")
        rho = [{(a, b): _fr(c) for a, b, c in row if _fr(c)} for row in p["rho"]]
        return HopfCoComod.finite(K, L, zeta, rho)
    if k == "two_group":
        from .crossed import xmod_to_2group
        if "construction" in p:
            return xmod_to_2group(build(_sub(doc, "source", "group_xmod")))
        g0, g1 = build(_sub(doc, "g0", "group")), build(_sub(doc, "g1", "group"))
        return TwoGroup(g0, g1, p["s"], p["t"], p["i"], check=context.get("check", False))
    if k == "lie_two_alg":
        from .crossed import liexmod_to_2lie
        if "construction" in p:
            return liexmod_to_2lie(build(_sub(doc, "source", "lie_xmod")))
        g0, g1 = build(_sub(doc, "g0", "lie_algebra")), build(_sub(doc, "g1", "lie_algebra"))
        s, t = _mat(p["s"], g1.dim, f"{loc}.s"), _mat(p["t"], g1.dim, f"{loc}.t")
        i = _mat(p["i"], g0.dim, f"{loc}.i")
        for name, m, r, c in (("s", s, g0.dim, g1.dim), ("t", t, g0.dim, g1.dim), ("i", i, g1.dim, g0.dim)):
            _shape(m, r, c, f"{loc}.{name}")
        return LieTwoAlg(g0, g1, s, t, i, check=context.get("check", False))
    if k == "precat1":
        L = build(_sub(doc, "source", "lie_two_alg"))
        return precat1_from_lie2(L, degree=p.get("degree", 3))
    raise DocumentError(f"{loc}.kind", f"unknown kind {k!r}")


def load(path, context: Optional[dict] = None):
    doc = load_document(path)
    return doc, build(doc, context)


# -- serialization -----------------------------------------------------------------------

def dump_scalar(c) -> Any:
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _dense(v: SparseVec, n: int) -> List:
    return [dump_scalar(v.get(i, 0)) for i in range(n)]


def _dense_mat(m: SparseMat) -> List[List]:
    return [[dump_scalar(x) for x in row] for row in m.to_dense()]


def _head(kind: str) -> dict:
    return {"kind": kind, "schema": SCHEMA_VERSION}


def to_document(obj) -> dict:
    """Inline document for ``obj``; the inverse of :func:`build` up to relabeling."""
    if isinstance(obj, FinGroup):
        return {**_head("group"), "order": obj.order, "mult": [list(r) for r in obj.mult], "names": list(obj.names)}
    if isinstance(obj, FinLieAlgebra):
        return {**_head("lie_algebra"), "dim": obj.dim, "names": list(obj.names),
                "bracket": [[i, j, _dense(v, obj.dim)] for i, j, v in obj.bracket_entries()]}
    if isinstance(obj, FinDimHopf):
        n = obj.dim
        return {**_head("hopf"), "dim": n, "names": list(obj.names),
                "mult": [[i, j, _dense(v, n)] for (i, j), v in sorted(obj.mult_table.items()) if v],
                "unit": _dense(obj.unit_vec, n),
                "comult": [[[i, j, dump_scalar(c)] for (i, j), c in sorted(row.items())] for row in obj._comult],
                "counit": _dense(obj.counit_vec, n), "antipode": _dense_mat(obj.antipode_mat)}
    if isinstance(obj, LieModule):
        return {**_head("module"), "algebra": to_document(obj.algebra), "dim": obj.dim, "names": list(obj.names),
                "action": [_dense_mat(a) for a in obj.action]}
    if isinstance(obj, ModuleSES):
        def body(m):
            return {"dim": m.dim, "names": list(m.names), "action": [_dense_mat(a) for a in m.action]}
        return {**_head("ses"), "algebra": to_document(obj.g), "v": body(obj.v), "i": body(obj.i),
                "q": body(obj.q), "inject": _dense_mat(obj.inject), "project": _dense_mat(obj.project)}
    if isinstance(obj, GroupXMod):
        return {**_head("group_xmod"), "m": to_document(obj.m), "n": to_document(obj.n), "mu": list(obj.mu),
                "action": [list(r) for r in obj.action]}
    if isinstance(obj, LieXMod):
        return {**_head("lie_xmod"), "m": to_document(obj.m), "n": to_document(obj.n), "mu": _dense_mat(obj.mu),
                "action": [_dense_mat(a) for a in obj.action]}
    if isinstance(obj, TwoGroup):
        return {**_head("two_group"), "g0": to_document(obj.g0), "g1": to_document(obj.g1), "s": list(obj.s),
                "t": list(obj.t), "i": list(obj.i)}
    if isinstance(obj, LieTwoAlg):
        return {**_head("lie_two_alg"), "g0": to_document(obj.g0), "g1": to_document(obj.g1),
                "s": _dense_mat(obj.s), "t": _dense_mat(obj.t), "i": _dense_mat(obj.i)}
    if isinstance(obj, HopfXMod):
        if isinstance(obj.source, LieXMod) and isinstance(obj.gamma, EnvelopingMorphism):
            return {**_head("hopf_xmod"), "construction": "u", "source": to_document(obj.source),
                    "degree": obj.degree}
        B, H = obj.b, obj.h
        gamma = SparseMat.from_columns([obj.gamma(k) for k in B.basis()], H.dim)
        phi = [[i, j, _dense(obj.phi(i, j), B.dim)] for i in H.basis() for j in B.basis() if obj.phi(i, j)]
        return {**_head("hopf_xmod"), "b": to_document(B), "h": to_document(H), "gamma": _dense_mat(gamma),
                "phi": phi}
    if isinstance(obj, HopfCoComod):
        K, L = obj.k, obj.l
        zeta = SparseMat.from_columns([obj.zeta(k) for k in K.basis()], L.dim)
        rho = [[[a, b, dump_scalar(c)] for (a, b), c in sorted(obj.rho(l).items())] for l in L.basis()]
        return {**_head("cocomod"), "k": to_document(K), "l": to_document(L), "zeta": _dense_mat(zeta), "rho": rho}
    if isinstance(obj, PreCat1Hopf):
        if isinstance(obj.source, LieTwoAlg):
            return {**_head("precat1"), "construction": "lie2", "source": to_document(obj.source),
                    "degree": obj.degree}
    raise TypeError(f"no document form for {type(obj).__name__}")


def cochain_document(c: Cochain, dim: int, algebra: Optional[FinLieAlgebra] = None) -> dict:
    """Cocycle document with values as dense coordinate lists of length ``dim``."""
    doc = {**_head("cocycle"), "degree": c.degree,
           "values": [list(k) + [_dense(v, dim)] for k, v in sorted(c.values.items())]}
    if algebra is not None:
        doc["algebra"] = to_document(algebra)
    return doc
