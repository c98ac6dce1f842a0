"""Regenerate the JSON fixture corpus under ``fixtures/``.

Run from the repository root: ``python3 scripts/make_fixtures.py``.
"""

from __future__ import annotations

import json
from pathlib import Path

from hopf2.crossed import GroupXMod, liexmod_to_2lie, xmod_to_2group
from hopf2.groups import alternating, cyclic, symmetric, trivial_group
from hopf2.hopf import coad, function_algebra
from hopf2.io import SCHEMA_VERSION, build, parse_document, to_document
from hopf2.lie import heis3, nonabelian2, sl2, solv3

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def head(kind, description):
    return {"kind": kind, "schema": SCHEMA_VERSION, "description": description}


def write(name, doc):
    (OUT / name).write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")


def z(n):
    return [[0] * n for _ in range(n)]


def main():
    OUT.mkdir(exist_ok=True)
    for name, g, text in (("trivial.json", trivial_group(), "trivial group"),
                          ("c2.json", cyclic(2), "cyclic group of order 2"),
                          ("c3.json", cyclic(3), "cyclic group of order 3"),
                          ("a3.json", alternating(3), "alternating group on three letters"),
                          ("s3.json", symmetric(3), "symmetric group on three letters")):
        write(name, {**to_document(g), "description": text})
    for name, g, text in (("sl2.json", sl2(), "sl2 with [e,f]=h, [h,e]=2e, [h,f]=-2f"),
                          ("heis3.json", heis3(), "Heisenberg algebra [x,y]=z"),
                          ("nonab2.json", nonabelian2(), "two-dimensional nonabelian algebra [a,b]=b"),
                          ("solv3.json", solv3(), "solvable algebra [a,b]=b, [a,c]=c")):
        write(name, {**to_document(g), "description": text})

    for name, kind, src in (("ks3_hopf.json", "group_algebra", "s3.json"),
                            ("fun_s3_hopf.json", "function_algebra", "s3.json"),
                            ("trivial_hopf.json", "group_algebra", "trivial.json")):
        write(name, {**head("hopf", f"{kind} of {src[:-5]}"), "construction": kind, "source": src})

    # group crossed modules
    S3 = symmetric(3)
    a3s3 = GroupXMod.conjugation(S3, [0, 1, 2])
    write("a3_s3_xmod.json", {**head("group_xmod", "A3 in S3 with conjugation"), "m": "a3.json", "n": "s3.json",
                              "mu": list(a3s3.mu), "action": [list(r) for r in a3s3.action]})
    write("s3_id_xmod.json", {**head("group_xmod", "identity of S3 with conjugation"),
                              "construction": "conjugation", "group": "s3.json", "subgroup": list(range(6))})
    write("trivial_c3_xmod.json", {**head("group_xmod", "trivial group into C3"), "m": "trivial.json",
                                   "n": "c3.json", "mu": [0], "action": [[0], [0], [0]]})
    write("a3_s3_2group.json", {**to_document(xmod_to_2group(a3s3)),
                                "description": "strict 2-group of order 18 from A3 in S3"})

    # Lie crossed modules
    write("heis3_xmod.json", {**head("lie_xmod", "center z in heis3 with the adjoint action"),
                              "m": {"kind": "lie_algebra", "schema": 1, "dim": 1, "bracket": [], "names": ["z"]},
                              "n": "heis3.json", "mu": [[0], [0], [1]], "action": [[[0]], [[0]], [[0]]]})
    write("nonab2_xmod.json", {**head("lie_xmod", "ideal spanned by b in the nonabelian algebra"),
                               "construction": "ideal", "algebra": "nonab2.json", "basis": [[0, 1]],
                               "m_names": ["b"]})
    write("zero_xmod.json", {**head("lie_xmod", "zero map from a one-dimensional module, a acting by 1"),
                             "m": {"kind": "lie_algebra", "schema": 1, "dim": 1, "bracket": [], "names": ["v"]},
                             "n": "nonab2.json", "mu": [[0], [0]], "action": [[[1]], [[0]]]})
    write("sl2_id_xmod.json", {**head("lie_xmod", "identity of sl2 with the adjoint action"),
                               "construction": "ideal", "algebra": "sl2.json",
                               "basis": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "m_names": ["e", "f", "h"]})
    x = build(parse_document(json.dumps({**json.loads((OUT / "heis3_xmod.json").read_text()),
                                         "n": to_document(heis3())})))
    write("heis3_2lie.json", {**to_document(liexmod_to_2lie(x)),
                              "description": "strict Lie 2-algebra of z in heis3"})
    write("heis3_precat1.json", {**head("precat1", "U applied to the Lie 2-algebra of z in heis3"),
                                 "construction": "lie2", "source": "heis3_2lie.json", "degree": 3})

    # Hopf crossed modules and comodules
    write("heis3_u_xmod.json", {**head("hopf_xmod", "U of z in heis3"), "construction": "u",
                                "source": "heis3_xmod.json", "degree": 3})
    write("a3_s3_kg_xmod.json", {**head("hopf_xmod", "group algebras of A3 in S3"), "construction": "kg",
                                 "source": "a3_s3_xmod.json"})
    write("a3_s3_fun_cocomod.json", {**head("cocomod", "function algebras of A3 in S3"), "construction": "fun",
                                     "source": "a3_s3_xmod.json"})
    F = function_algebra(cyclic(2))
    coad_rows = [[[a, b, int(c)] for (a, b), c in sorted(coad(F, {l: 1}).items())] for l in range(2)]
    c2 = {**head("cocomod", "functions on C2, zeta = id, rho = adjoint coaction"),
          "k": {"kind": "hopf", "schema": 1, "construction": "function_algebra", "source": "c2.json"},
          "l": {"kind": "hopf", "schema": 1, "construction": "function_algebra", "source": "c2.json"},
          "zeta": [[1, 0], [0, 1]], "rho": coad_rows}
    write("c2_coad_cocomod.json", c2)
    bad = json.loads(json.dumps(c2))
    bad["description"] = "negative control: coaction on d[g] scaled by 2, breaking the counit law"
    bad["rho"][1] = [[a, b, 2 * c] for a, b, c in bad["rho"][1]]
    write("corrupted_cocomod.json", bad)
    write("bad_peiffer.json", {**head("hopf_xmod", "negative control: kS3 -> k by the counit, trivial action"),
                               "b": "ks3_hopf.json", "h": "trivial_hopf.json", "gamma": [[1] * 6],
                               "phi": [[0, j, [1 if k == j else 0 for k in range(6)]] for j in range(6)]})
    write("bad_derivation.json", {**head("lie_xmod", "negative control: x -> x, y -> 0, z -> 0 is no derivation"),
                                  "m": "heis3.json",
                                  "n": {"kind": "lie_algebra", "schema": 1, "dim": 1, "bracket": [], "names": ["t"]},
                                  "mu": [[0, 0, 0]], "action": [[[1, 0, 0], [0, 0, 0], [0, 0, 0]]]})

    # cohomology
    zero3 = [z(1), z(1), z(1)]
    write("heis3_trivial.json", {**head("module", "trivial one-dimensional heis3-module"), "algebra": "heis3.json",
                                 "dim": 1, "action": zero3, "names": ["q"]})
    triv1 = {"dim": 1, "action": zero3}
    write("heis3_ses.json", {**head("ses", "non-split: x moves e2 to e1, V = span(e1), Q = I/V"),
                             "algebra": "heis3.json", "v": {**triv1, "names": ["v"]},
                             "i": {"dim": 2, "action": [[[0, 1], [0, 0]], z(2), z(2)], "names": ["e1", "e2"]},
                             "q": {**triv1, "names": ["q"]}, "inject": [[1], [0]], "project": [[0, 1]]})
    write("heis3_split_ses.json", {**head("ses", "split: I = V + Q, all trivial"), "algebra": "heis3.json",
                                   "v": {**triv1, "names": ["v"]},
                                   "i": {"dim": 2, "action": [z(2), z(2), z(2)], "names": ["e1", "e2"]},
                                   "q": {**triv1, "names": ["q"]}, "inject": [[1], [0]], "project": [[0, 1]]})
    write("heis3_cocycle.json", {**head("cocycle", "alpha = y* ^ z* with values in Q"), "algebra": "heis3.json",
                                 "module": "heis3_trivial.json", "degree": 2, "values": [[1, 2, [1]]]})
    write("heis3_zero_cocycle.json", {**head("cocycle", "alpha = 0"), "algebra": "heis3.json",
                                      "module": "heis3_trivial.json", "degree": 2, "values": []})
    zs = [z(1), z(1), z(1)]
    write("solv3_trivial.json", {**head("module", "trivial one-dimensional solv3-module"), "algebra": "solv3.json",
                                 "dim": 1, "action": zs, "names": ["q"]})
    write("solv3_ses.json", {**head("ses", "split trivial extension over solv3"), "algebra": "solv3.json",
                             "v": {"dim": 1, "action": zs, "names": ["v"]},
                             "i": {"dim": 2, "action": [z(2), z(2), z(2)], "names": ["e1", "e2"]},
                             "q": {"dim": 1, "action": zs, "names": ["q"]}, "inject": [[1], [0]],
                             "project": [[0, 1]]})
    write("bad_cocycle.json", {**head("cocycle", "negative control: b* ^ c* is not closed on solv3"),
                               "algebra": "solv3.json", "module": "solv3_trivial.json", "degree": 2,
                               "values": [[1, 2, [1]]]})


if __name__ == "__main__":
    main()
