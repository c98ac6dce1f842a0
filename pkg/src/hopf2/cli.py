"""Command line: ``hopf2 check | convert | functor | splice | cohomology | roundtrip``.

Exit status 0 means every executed check passed, 1 that some check failed
(the report names the law and its witness), 2 that the input was unusable.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import crossed as cx
from . import functors as fx
from .cohomology import (NotClosed, cohomology_dim, connecting_hom, differential_matrix, is_coboundary, splice,
                         splice_report, _closed_witness)
from .groups import GroupError
from .hopf import NotSplit, verify_hopf
from .io import DocumentError, build, cochain_document, load, load_document, to_document
from .linalg import SparseMat
from .report import AxiomError, Report, jsonable

__all__ = ["RunReport", "run_command", "main", "EXIT_PASS", "EXIT_FAIL", "EXIT_INPUT"]

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    """Command-level misuse: wrong document kind for the requested operation."""


@dataclass
class RunReport:
    """Everything one invocation did, in a stable machine-readable shape."""

    command: List[str]
    exit_code: int = EXIT_PASS
    elapsed: float = 0.0
    reports: List[Report] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    output: Optional[dict] = None
    error: Optional[Dict[str, Any]] = None

    @property
    def status(self) -> str:
        return {EXIT_PASS: "pass", EXIT_FAIL: "fail"}.get(self.exit_code, "error")

    def to_dict(self) -> dict:
        return {"command": list(self.command), "status": self.status, "exit_code": self.exit_code,
                "elapsed": self.elapsed, "reports": [r.to_dict() for r in self.reports],
                "data": jsonable(self.data), "output": self.output, "error": self.error}

    @classmethod
    def from_dict(cls, d: dict) -> "RunReport":
        return cls(list(d["command"]), d["exit_code"], d["elapsed"],
                   [Report.from_dict(r) for r in d["reports"]], d.get("data") or {}, d.get("output"),
                   d.get("error"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"$ hopf2 {' '.join(self.command)}"]
        for r in self.reports:
            lines.append(r.text())
        for k, v in self.data.items():
            lines.append(f"{k}: {json.dumps(jsonable(v))}")
        if self.error:
            lines.append(f"error: {self.error.get('message')}")
        lines.append(f"{self.status.upper()} (exit {self.exit_code}, {self.elapsed:.3f}s)")
        return "\n".join(lines)


def _dense(m: SparseMat):
    return [[str(x) if x.denominator != 1 else x.numerator for x in row] for row in m.to_dense()]


def _expect(doc, obj, *kinds):
    if doc.kind not in kinds:
        raise InputError(f"expected a document of kind {' or '.join(kinds)}, got {doc.kind!r}")
    return obj


# -- commands -----------------------------------------------------------------------

def _check(args, run: RunReport):
    doc, obj = load(args.file, {"check": False})
    k, d = doc.kind, args.max_degree
    if k in ("group", "lie_algebra"):
        rep = Report(f"{k} axioms")
        rep.note("constructed", True, detail="all axioms verified at construction")
        run.reports.append(rep)
    elif k == "hopf":
        run.reports.append(verify_hopf(obj))
    elif k == "module":
        rep = Report("module")
        rep.record("representation", obj.representation_witness())
        run.reports.append(rep)
    elif k == "ses":
        run.reports.append(obj.report())
    elif k == "cocycle":
        rep = Report("cocycle")
        if "algebra" in doc.payload and "module" in doc.payload:
            from .io import _sub
            g = build(_sub(doc, "algebra", "lie_algebra"))
            M = build(_sub(doc, "module", "module"), {"algebra": g})
            w = _closed_witness(g, M, obj)
            rep.record("closed", None if w is None else tuple(g.names[i] for i in w))
        else:
            rep.note("parsed", True, detail="no algebra/module given: closedness not checked")
        run.reports.append(rep)
    elif k == "group_xmod":
        run.reports.append(cx.check_group_xmod(obj))
    elif k == "lie_xmod":
        run.reports.append(cx.check_lie_xmod(obj))
    elif k == "hopf_xmod":
        run.reports.append(cx.check_hopf_xmod(obj, d))
    elif k == "cocomod":
        run.reports.append(cx.check_hopf_cocomod(obj))
    elif k == "two_group":
        run.reports.append(cx.check_two_group(obj))
    elif k == "lie_two_alg":
        run.reports.append(cx.check_lie_two_alg(obj))
    elif k == "precat1":
        run.reports.append(cx.check_precat1(obj, d))
    run.data["kind"] = k


_CONVERT = {
    "2group": ("group_xmod", cx.xmod_to_2group, cx.check_two_group),
    "xmod": ("two_group", cx.twogroup_to_xmod, cx.check_group_xmod),
    "2lie": ("lie_xmod", cx.liexmod_to_2lie, cx.check_lie_two_alg),
    "liexmod": ("lie_two_alg", cx.twolie_to_liexmod, cx.check_lie_xmod),
}


def _convert(args, run: RunReport):
    doc, obj = load(args.file)
    kind, f, check = _CONVERT[args.to]
    _expect(doc, obj, kind)
    out = f(obj)
    run.reports.append(check(out))
    run.output = to_document(out)


def _functor(args, run: RunReport):
    doc, obj = load(args.file)
    d, name = args.max_degree, args.apply
    extra = []
    if name == "u":
        out = fx.functor_u(_expect(doc, obj, "lie_xmod"), d)
        rep = cx.check_hopf_xmod(out, d)
    elif name == "p":
        out = fx.functor_p(_expect(doc, obj, "hopf_xmod"), d)
        rep = cx.check_lie_xmod(out)
    elif name == "kg":
        out = fx.functor_kg(_expect(doc, obj, "group_xmod"))
        rep = cx.check_hopf_xmod(out)
    elif name == "grouplikes":
        out = fx.grouplike_xmod(_expect(doc, obj, "hopf_xmod"))
        rep = cx.check_group_xmod(out)
    elif name == "kfun":
        out = fx.functor_fun(_expect(doc, obj, "group_xmod"))
        rep = cx.check_hopf_cocomod(out)
    elif name == "chi":
        out = fx.functor_chi(_expect(doc, obj, "cocomod"))
        rep = cx.check_group_xmod(out)
        extra.append(fx.lemma4_report(obj))
    else:
        out = fx.cat1hopf_to_xmod(_expect(doc, obj, "precat1"), d)
        rep = cx.check_hopf_xmod(out, d)
    fr = fx.FunctorReport(name, repr(obj), out, rep)
    run.reports.extend([rep] + extra)
    run.data.update({"functor": fr.functor, "input": fr.input, "output": repr(out)})
    run.output = to_document(out)


def _splice(args, run: RunReport):
    gdoc, g = load(args.algebra)
    _expect(gdoc, g, "lie_algebra")
    sdoc = load_document(args.ses)
    _expect(sdoc, None, "ses")
    ses = build(sdoc, {"algebra": g})
    cdoc = load_document(args.cocycle)
    _expect(cdoc, None, "cocycle")
    alpha = build(cdoc)
    x = splice(g, ses, alpha)
    theta = connecting_hom(g, ses, alpha)
    run.reports.append(splice_report(g, x))
    run.data.update({"theta": cochain_document(theta, ses.v.dim)["values"],
                     "theta_is_coboundary": is_coboundary(g, ses.v, theta),
                     "h3_dim": cohomology_dim(g, ses.v, 3)})
    run.output = to_document(x)


def _cohomology(args, run: RunReport):
    gdoc, g = load(args.algebra)
    _expect(gdoc, g, "lie_algebra")
    mdoc = load_document(args.module)
    _expect(mdoc, None, "module")
    M = build(mdoc, {"algebra": g})
    n = args.degree
    rep = Report("Chevalley-Eilenberg complex")
    for p in range(min(n, 2) + 1):
        prod = differential_matrix(g, M, p + 1) @ differential_matrix(g, M, p)
        rep.note(f"d_squared_zero_{p}", not prod.entries)
    run.reports.append(rep)
    run.data.update({"degree": n, "dim": cohomology_dim(g, M, n)})


def _roundtrip(args, run: RunReport):
    doc, x = load(args.file)
    d, path = args.max_degree, args.path
    if path == "u.p":
        _expect(doc, x, "lie_xmod")
        y = fx.functor_p(fx.functor_u(x, d), d)
        rho, sigma = fx.pu_roundtrip_iso(x, y)
        run.reports.append(fx.check_lie_xmod_iso(x, y, rho, sigma))
        run.data.update({"rho": _dense(rho), "sigma": _dense(sigma)})
    elif path in ("kg.gl", "kfun.chi"):
        _expect(doc, x, "group_xmod")
        if path == "kg.gl":
            y = fx.grouplike_xmod(fx.functor_kg(x))
        else:
            co = fx.functor_fun(x)
            y = fx.functor_chi(co)
            run.reports.append(fx.lemma4_report(co))
        _group_iso(x, y, run)
    else:
        if doc.kind == "group_xmod":
            y = cx.twogroup_to_xmod(cx.xmod_to_2group(x))
            _group_iso(x, y, run)
        elif doc.kind == "two_group":
            cx.check_two_group(x).require()
            h = cx.xmod_to_2group(cx.twogroup_to_xmod(x))
            F0, F1 = cx.twogroup_roundtrip_iso(x, h)
            run.reports.append(cx.check_two_group_iso(x, h, F0, F1))
            run.data.update({"F0": F0, "F1": F1})
        elif doc.kind == "lie_xmod":
            y = cx.twolie_to_liexmod(cx.liexmod_to_2lie(x))
            rho, sigma = cx.liexmod_roundtrip_iso(x, y)
            run.reports.append(fx.check_lie_xmod_iso(x, y, rho, sigma))
            run.data.update({"rho": _dense(rho), "sigma": _dense(sigma)})
        else:
            _expect(doc, x, "lie_two_alg")
            cx.check_lie_two_alg(x).require()
            M = cx.liexmod_to_2lie(cx.twolie_to_liexmod(x))
            F0, F1 = cx.twolie_roundtrip_iso(x)
            run.reports.append(cx.check_lie_two_alg_iso(x, M, F0, F1))
            run.data.update({"F0": _dense(F0), "F1": _dense(F1)})


def _group_iso(x, y, run: RunReport):
    rep = Report("group crossed module isomorphism")
    found = cx.find_group_xmod_isomorphism(x, y)
    rep.note("isomorphism_found", found is not None)
    if found is not None:
        rho, sigma = found
        rep.extend(cx.check_crossed_morphism(x, y, rho, sigma))
        run.data.update({"rho": rho, "sigma": sigma})
    run.reports.append(rep)


# -- entry point -----------------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hopf2", description="Exact checks for crossed modules and their functors.")
    ap.add_argument("--report", choices=["json", "text"], default="text", help="output format (default text)")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--report", choices=["json", "text"], default=argparse.SUPPRESS)
        p.add_argument("--max-degree", type=int, default=4, help="PBW degree bound for enveloping checks")

    p = sub.add_parser("check", help="run the checker matching the document kind")
    p.add_argument("file")
    common(p)
    p = sub.add_parser("convert", help="crossed module <-> strict 2-object")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=sorted(_CONVERT))
    p.add_argument("-o", "--output", help="write the converted document here")
    common(p)
    p = sub.add_parser("functor", help="apply a functor and check its output")
    p.add_argument("file")
    p.add_argument("--apply", required=True, choices=["u", "p", "kg", "grouplikes", "kfun", "chi", "cat1"])
    p.add_argument("-o", "--output", help="write the output document here")
    common(p)
    p = sub.add_parser("splice", help="crossed module from a module extension and a 2-cocycle")
    p.add_argument("algebra")
    p.add_argument("ses")
    p.add_argument("cocycle")
    p.add_argument("-o", "--output", help="write the spliced crossed module here")
    common(p)
    p = sub.add_parser("cohomology", help="dimension of Chevalley-Eilenberg cohomology")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--degree", type=int, required=True, choices=range(0, 4), metavar="{0..3}")
    common(p)
    p = sub.add_parser("roundtrip", help="compose a functor with its inverse and certify the isomorphism")
    p.add_argument("file")
    p.add_argument("--path", required=True, choices=["u.p", "kg.gl", "kfun.chi", "xmod.2g.xmod"])
    common(p)
    return ap


_COMMANDS = {"check": _check, "convert": _convert, "functor": _functor, "splice": _splice,
             "cohomology": _cohomology, "roundtrip": _roundtrip}


def run_command(argv: Sequence[str]) -> RunReport:
    """Parse ``argv``, run the command and return its report (never raises on bad input)."""
    argv = list(argv)
    run = RunReport(command=argv)
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        run.exit_code = EXIT_PASS if exc.code == 0 else EXIT_INPUT
        run.error = None if exc.code == 0 else {"type": "usage", "message": "invalid arguments"}
        return run
    start = time.perf_counter()
    try:
        _COMMANDS[args.command](args, run)
        run.exit_code = EXIT_PASS if all(r.passed for r in run.reports) else EXIT_FAIL
        out = getattr(args, "output", None)
        if out and run.output is not None:
            Path(out).write_text(json.dumps(run.output, indent=2) + "\n", encoding="utf-8")
    except (DocumentError, InputError, NotSplit) as exc:
        run.exit_code = EXIT_INPUT
        run.error = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, DocumentError):
            run.error.update({"path": exc.path, "reason": exc.reason})
    except (AxiomError, GroupError) as exc:
        run.exit_code = EXIT_FAIL
        report = getattr(exc, "report", None)
        if report is None:
            report = Report(type(exc).__name__)
            report.record(_law(exc), exc.witness if exc.witness is not None else str(exc), detail=str(exc))
        run.reports.append(report)
        run.error = {"type": type(exc).__name__, "message": str(exc), "witness": jsonable(exc.witness)}
    run.elapsed = round(time.perf_counter() - start, 6)
    return run


def _law(exc) -> str:
    if isinstance(exc, NotClosed):
        return "cocycle_closed"
    return {"NotADerivation": "action_by_derivations", "JacobiError": "jacobi",
            "Lemma1Violation": "lemma1_kernels_commute"}.get(type(exc).__name__, "construction")


def _format(argv: Sequence[str]) -> str:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--report", choices=["json", "text"], default="text")
    try:
        return pre.parse_known_args(list(argv))[0].report
    except SystemExit:
        return "text"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    run = run_command(argv)
    print(run.to_json() if _format(argv) == "json" else run.text())
    return run.exit_code


if __name__ == "__main__":
    sys.exit(main())
