"""Command-line front end.

    octavic classify "x^8 - 1"
    octavic isomorphic "x^8+x^6+2x^4+3x^2+1" "x^8+3x^6+2x^4+x^2+1"
    octavic model --tuple "U(2,5,2)"

Exit status: 0 on success, 2 when a classification is disputed, 1 on bad input.
Settings come from defaults, then the JSON file named by OCTAVIC_CONFIG, then flags.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

import mpmath

from .classify import classify, isomorphic, locus_verdict
from .covariants import absolute_invariants, j_invariants
from .dihedral import (
    CurveError, Genus2DihedralPair, NormalForm3, ShapeError, classify_genus2, curve_to_form,
    even_coefficients, subcover_equations, branch_relations, tuple_from_even,
)
from .exact import ExactError
from .loci import LOCUS_IDS, derive_locus
from .models import ModelError, emit_model, field_of_moduli_report
from .oracle import OracleConfig, OracleError, full_group
from .parse import ParseError, parse_curve, parse_polynomial, parse_tuple
from .report import Report
from .tuples import tuple_set, tuple_sort_key

ENV_VAR = "OCTAVIC_CONFIG"
DEFAULTS = {"precision": 128, "tolerance": 1e-20, "snap_denominator": 10 ** 6,
            "max_retries": 3, "format": "text", "seed": 0, "timing": False}
INPUT_ERRORS = (ParseError, CurveError, ModelError, ShapeError, ExactError, ValueError)


def load_settings(flags: dict, environ=os.environ) -> dict:
    settings = dict(DEFAULTS)
    path = environ.get(ENV_VAR)
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - set(DEFAULTS)
        if unknown:
            raise ValueError(f"unknown keys in {path}: {sorted(unknown)}")
        settings.update(data)
    settings.update({k: v for k, v in flags.items() if k in DEFAULTS and v is not None})
    if settings["format"] not in ("json", "text"):
        raise ValueError("format must be json or text")
    return settings


def oracle_config(s: dict) -> OracleConfig:
    return OracleConfig(precision=int(s["precision"]), tolerance=float(s["tolerance"]),
                        snap_denominator=int(s["snap_denominator"]),
                        max_retries=int(s["max_retries"]))


def _curve(text: str):
    return parse_curve(text).curve()


# ---------------------------------------------------------------------------
# commands; each returns (results, warnings, exit_code)


def cmd_invariants(args, cfg):
    c = _curve(args.curve)
    v = j_invariants(curve_to_form(c))
    res = {"J": v}
    if v.J2:
        res["absolute"] = absolute_invariants(v)
    else:
        res["absolute"] = None
        res["projective"] = [v.J2, v.J3, v.J4, v.J5, v.J6, v.J7]
    return res, [], 0


def cmd_dihedral(args, cfg):
    c = _curve(args.curve)
    cs = even_coefficients(c.rhs)
    if cs is None:
        return ({"even_form": False},
                ["not an even octavic with nonzero constant term; see the tuples command"], 0)
    t = tuple_from_even(*cs)
    res = {"even_form": True, "tuple": t, "flagged": t.flagged}
    if t.shape != "W":
        r = branch_relations(t)
        res["M"] = t.M
        res["relations"] = {"d4_member": r.d4_member, "plus_branch": r.plus_branch,
                            "minus_branch": r.minus_branch}
    c4, c3, c2, c1, c0 = cs
    if c4 == 1 and c0 == 1:
        e, g = subcover_equations(NormalForm3(c1, c2, c3))
        res["subcovers"] = {"C1": f"y^2 = {e}", "C2": f"y^2 = {g}"}
    warn = ["U tuple from a1^2 + a3^2 = 0 and a2 = 0; confirm with the oracle"] if t.flagged else []
    return res, warn, 0


def cmd_tuples(args, cfg):
    c = _curve(args.curve)
    ts = tuple_set(curve_to_form(c), config=cfg)
    recs = sorted(ts.records, key=lambda r: tuple_sort_key(r.tuple))
    res = {"tuples": [{"tuple": r.tuple, "exact": r.exact, "flagged": r.tuple.flagged} for r in recs],
           "irrational": list(ts.irrational), "precision": ts.precision}
    warn = [] if recs or ts.irrational else ["no extra involution; the curve is not in the dihedral locus"]
    return res, warn, 0


def cmd_classify(args, cfg):
    r = classify(_curve(args.curve), cfg)
    warn = []
    if r.disputed:
        warn.append(f"disputed: oracle says {r.group_identity}, loci say "
                    f"{r.evidence['locus_identity']}")
    return r.as_dict(), warn, 2 if r.disputed else 0


def _parse_group(text: str) -> tuple[int, int]:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 2:
        raise ValueError("group must be given as ORDER,INDEX")
    return int(parts[0]), int(parts[1])


def cmd_model(args, cfg):
    if args.tuple:
        t = parse_tuple(args.tuple)
        if args.group:
            ident = _parse_group(args.group)
        else:
            ident, _ = locus_verdict([t])
        m = emit_model(t, ident, cfg)
        res = {"group_identity": list(ident), **m.as_dict()}
        warn = []
        if m.verification.verdict != "exact-match":
            warn.append(f"printed model verdict: {m.verification.verdict}")
        return res, warn, 0
    if args.curve:
        return field_of_moduli_report(_curve(args.curve), cfg), [], 0
    raise ValueError("model needs --tuple or a curve")


def cmd_isomorphic(args, cfg):
    a, b = _curve(args.curve1), _curve(args.curve2)
    return {"isomorphic": isomorphic(a, b, cfg)}, [], 0


def _num(z, digits=25) -> str:
    return mpmath.nstr(z, digits)


def cmd_oracle(args, cfg):
    c = _curve(args.curve)
    g = full_group(curve_to_form(c), cfg)
    lifts = {id(e): cert for e, cert in zip(g.reduced.involutions(), g.lifts)}
    elements = []
    for e in g.reduced.elements:
        item = {"order": e.order, "permutation": list(e.perm), "certified": e.certified}
        if e.exact is not None:
            item["matrix"] = [str(v) for v in e.exact.matrix]
        elif e.quadratic is not None:
            item["matrix"] = [str(v) for v in e.quadratic]
        else:
            item["matrix_numeric"] = [_num(v) for v in e.matrix]
        if id(e) in lifts:
            item["lift_order"] = lifts[id(e)].lift_order
        elements.append(item)
    res = {"order": g.order, "reduced_order": g.reduced.order, "structure": g.reduced.structure,
           "census": {str(k): v for k, v in sorted(g.reduced.census().items())},
           "all_certified": g.reduced.all_certified, "precision": g.reduced.precision,
           "elements": elements}
    return res, [], 0


def cmd_loci_report(args, cfg):
    from .reconcile import reconciliation_report
    loci = {}
    for ident in LOCUS_IDS:
        L = derive_locus(ident)
        if L.rigid:
            loci[f"{ident[0]},{ident[1]}"] = {"points": [str(p) for p in L.special_points]}
        else:
            loci[f"{ident[0]},{ident[1]}"] = {
                "branches": [{"label": b.label, "shape": b.shape, "sound": b.sound,
                              "parametrization": b.parametrization.format(),
                              "relations": b.formatted()} for b in L.branches],
                "excluded": [str(p) for p in L.excluded]}
    rep = reconciliation_report(seed=args.seed if args.seed is not None else 0)
    return {"loci": loci, "reconciliation": rep}, [], 0


def cmd_genus2(args, cfg):
    u = parse_polynomial(args.u)
    v = parse_polynomial(args.v)
    if not (u.is_constant() and v.is_constant()):
        raise ValueError("u and v must be constants")
    label = classify_genus2(Genus2DihedralPair(u.constant_value(), v.constant_value()))
    return {"group": label}, [], 0


def cmd_batch(args, cfg):
    with open(args.file, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    rows, code = [], 0
    for n, text in enumerate(lines, start=1):
        if not text or text.startswith("#"):
            continue
        try:
            r = classify(_curve(text), cfg)
            rows.append({"line": n, "curve": text, "group_identity": list(r.group_identity),
                         "group_name": r.group_name, "confidence": r.confidence,
                         "disputed": r.disputed})
            if r.disputed:
                code = max(code, 2)
        except INPUT_ERRORS as e:
            rows.append({"line": n, "curve": text, "error": str(e)})
            code = 1 if code == 0 else code
    return {"results": rows}, [], code


COMMANDS = {
    "invariants": cmd_invariants, "dihedral": cmd_dihedral, "tuples": cmd_tuples,
    "classify": cmd_classify, "model": cmd_model, "isomorphic": cmd_isomorphic,
    "oracle": cmd_oracle, "loci-report": cmd_loci_report, "genus2": cmd_genus2,
    "batch": cmd_batch,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    common.add_argument("--precision", type=int, default=S, help="working precision in bits")
    common.add_argument("--tolerance", type=float, default=S, help="oracle tolerance")
    common.add_argument("--snap-denominator", dest="snap_denominator", type=int, default=S)
    common.add_argument("--format", choices=("json", "text"), default=S)
    common.add_argument("--seed", type=int, default=S)
    common.add_argument("--timing", action="store_true", default=S)

    p = argparse.ArgumentParser(prog="octavic", parents=[common],
                                description="Genus-3 hyperelliptic curves: invariants, "
                                            "automorphism groups, rational models.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("invariants", "dihedral", "tuples", "classify", "oracle"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("curve", help="right-hand side f(x) of y^2 = f(x)")
    sp = sub.add_parser("model", parents=[common])
    sp.add_argument("curve", nargs="?")
    sp.add_argument("--tuple", help="dihedral tuple, e.g. U(2,5,2)")
    sp.add_argument("--group", help="group identity ORDER,INDEX (inferred if omitted)")
    sp = sub.add_parser("isomorphic", parents=[common])
    sp.add_argument("curve1")
    sp.add_argument("curve2")
    sub.add_parser("loci-report", parents=[common])
    sp = sub.add_parser("genus2", parents=[common])
    sp.add_argument("u")
    sp.add_argument("v")
    sp = sub.add_parser("batch", parents=[common])
    sp.add_argument("file", help="one curve expression per line")
    return p


def run(argv=None, environ=os.environ) -> tuple[Report, str]:
    args = build_parser().parse_args(argv)
    flags = vars(args)
    inputs = {k: v for k, v in flags.items()
              if k not in DEFAULTS and k != "command" and v is not None}
    settings = {}
    try:
        settings = load_settings(flags, environ)
        args.seed = settings["seed"]
        cfg = oracle_config(settings)
        t0 = time.perf_counter()
        results, warnings, code = COMMANDS[args.command](args, cfg)
        elapsed = time.perf_counter() - t0
    except INPUT_ERRORS + (OSError,) as e:
        rep = Report(args.command, inputs, _public(settings), {"error": str(e)}, [], None, 1)
        return rep, settings.get("format", "text")
    except OracleError as e:
        rep = Report(args.command, inputs, _public(settings), {"error": f"oracle: {e}"}, [], None, 1)
        return rep, settings["format"]
    timing = {"total": elapsed} if settings["timing"] else None
    rep = Report(args.command, inputs, _public(settings), results, warnings, timing, code)
    return rep, settings["format"]


def _public(settings: dict) -> dict:
    return {k: settings[k] for k in ("precision", "tolerance", "snap_denominator", "seed")
            if k in settings}


def main(argv=None) -> int:
    rep, fmt = run(argv)
    out = rep.to_json() if fmt == "json" else rep.to_text()
    stream = sys.stdout if rep.exit_code != 1 else sys.stderr
    print(out, file=stream)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
