"""Command-line front end: expand twists, run verification suites, check
the combinatorial identities.  Also owns the JSON wire format for elements.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import identities, twists
from .borel import TensorElement
from .exactalg import DPoly, UPoly

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _frac_str(c):
    return "%d/%d" % (c.numerator, c.denominator)


def element_to_dict(e):
    terms = []
    for key in sorted(e.terms):
        d = e.terms[key]
        dpoly = []
        for exps in sorted(d.terms):
            coef = d.terms[exps]
            upoly = [[deg, _frac_str(coef.coeffs[deg])]
                     for deg in sorted(coef.coeffs)]
            dpoly.append({"exps": list(exps), "upoly": upoly})
        terms.append({
            "kappa_power": sum(p for p, _ in key),
            "legs": [{"p": p, "q": q} for p, q in key],
            "dpoly": dpoly,
        })
    terms.sort(key=lambda t: (t["kappa_power"],
                              [(leg["p"], leg["q"]) for leg in t["legs"]]))
    return {
        "schema": SCHEMA_VERSION,
        "legs": e.legs,
        "truncation": e.truncation,
        "terms": terms,
    }


def element_from_dict(data):
    if data.get("schema") != SCHEMA_VERSION:
        raise ValueError("unsupported schema version %r" % data.get("schema"))
    legs = data["legs"]
    terms = {}
    for t in data["terms"]:
        key = tuple((leg["p"], leg["q"]) for leg in t["legs"])
        dterms = {}
        for mono in t["dpoly"]:
            coeffs = {deg: Fraction(c) for deg, c in mono["upoly"]}
            dterms[tuple(mono["exps"])] = UPoly(coeffs)
        terms[key] = DPoly(legs, dterms)
    return TensorElement(legs, data["truncation"], terms)


_SYMBOLS = {"kappa": "κ", "otimes": "⊗", "dot": " · "}
_ASCII = {"kappa": "kappa", "otimes": "(x)", "dot": " * "}


def _coef_str(coef):
    s = str(coef)
    if len(coef.coeffs) > 1 or (coef.coeffs and 0 not in coef.coeffs
                                and set(coef.coeffs.values()) != {Fraction(1)}):
        return "(%s)" % s
    if s.startswith("-") and len(s) > 2:
        return "(%s)" % s
    return s


def _leg_str(p, q, e):
    parts = []
    for sym, deg in (("P", p), ("Q", q), ("D", e)):
        if deg == 1:
            parts.append(sym)
        elif deg > 1:
            parts.append("%s^%d" % (sym, deg))
    return "·".join(parts) if parts else "1"


def element_to_text(e, ascii_only=False):
    sym = _ASCII if ascii_only else _SYMBOLS
    lines = []
    entries = []
    for key in sorted(e.terms):
        d = e.terms[key]
        grade = sum(p for p, _ in key)
        for exps in sorted(d.terms):
            entries.append((grade, key, exps, d.terms[exps]))
    entries.sort(key=lambda t: (t[0], t[1], t[2]))
    for grade, key, exps, coef in entries:
        legs = sym["otimes"].join(
            _leg_str(p, q, exps[i]) for i, (p, q) in enumerate(key))
        if ascii_only:
            legs = legs.replace("·", "*")
        cs = _coef_str(coef)
        if grade == 0:
            kap = ""
        elif grade == 1:
            kap = "/%s" % sym["kappa"]
        else:
            kap = "/%s^%d" % (sym["kappa"], grade)
        lines.append("%s%s%s%s" % (cs, kap, sym["dot"], legs))
    if not lines:
        lines.append("0")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

def _parse_u(text):
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError("bad rational %r: %s" % (text, exc))


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="jortwist",
        description="Exact verification of interpolating Jordanian twists.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common_output(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--ascii", action="store_true",
                       help="ASCII-only text output")

    p = sub.add_parser("expand", help="expand a twist to a given order")
    p.add_argument("--family", required=True, choices=twists.FAMILIES)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--form", default="auto",
                   choices=("auto",) + twists.FORMS)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--u", type=_parse_u, default=None,
                   help="'symbolic' (default) or a rational like 1/2")
    common_output(p)

    p = sub.add_parser("verify", help="run twist verification checks")
    p.add_argument("--all", action="store_true", dest="run_all")
    p.add_argument("--check", action="append", dest="checks",
                   choices=("normalization", "cocycle", "inverse",
                            "endpoints", "forms", "hopf", "lr", "vfamily"))
    p.add_argument("--family", choices=("L", "R"))
    p.add_argument("--order", type=int)
    p.add_argument("--u", type=_parse_u, default=None)
    common_output(p)

    p = sub.add_parser("identities", help="verify the binomial identities")
    p.add_argument("--bigident", action="store_true")
    p.add_argument("--chain", choices=("L", "R"))
    p.add_argument("--det", type=int, metavar="N",
                   help="print the independence determinant for order N")
    p.add_argument("--bound", type=int)
    common_output(p)
    return parser


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _report_lines(reports):
    lines = []
    for rep in reports:
        params = " ".join("%s=%s" % (k, v)
                          for k, v in sorted(rep.params.items()))
        status = "pass" if rep.passed else "FAIL"
        line = "%-14s %-4s %s" % (rep.check, status, params)
        if rep.failure:
            line += "  first failure: %s" % (rep.failure,)
        for note in rep.notes:
            line += "\n    note: %s" % note
        lines.append(line)
    return lines


def _emit_reports(reports, args):
    if args.format == "json":
        payload = {"schema": SCHEMA_VERSION,
                   "reports": [r.to_dict() for r in reports]}
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.out)
    else:
        _emit("\n".join(_report_lines(reports)), args.out)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_expand(args, parser):
    form = args.form
    direction = "inverse" if args.inverse else "twist"
    if form == "auto":
        element = twists.twist(args.family, direction, args.order, args.u)
    else:
        spec = twists.TwistSpec(args.family, direction, form,
                                args.order, args.u)
        try:
            element = twists.build_twist(spec)
        except ValueError as exc:
            parser.error(str(exc))
    if args.format == "json":
        _emit(json.dumps(element_to_dict(element), indent=2), args.out)
    else:
        _emit(element_to_text(element, ascii_only=args.ascii), args.out)
    return 0


def _cmd_verify(args, parser):
    if not args.run_all and not args.checks:
        parser.error("give --all or at least one --check")
    reports = twists.run_suite(checks=None if args.run_all else args.checks,
                               order=args.order, family=args.family, u=args.u)
    return _emit_reports(reports, args)


def _cmd_identities(args, parser):
    if args.det is not None:
        if args.det < 0:
            parser.error("--det needs a nonnegative order")
        det = identities.independence_det(args.det)
        _emit(str(det), args.out)
        return 0
    reports = []
    if args.bigident:
        reports.append(identities.run_bigident_suite(
            args.bound if args.bound is not None
            else identities.DEFAULT_BOUND_BIG))
    if args.chain:
        reports.append(identities.verify_identity_chain(args.chain, args.bound))
    if not reports:
        parser.error("give --bigident, --chain or --det")
    return _emit_reports(reports, args)


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "expand":
        return _cmd_expand(args, parser)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    return _cmd_identities(args, parser)


if __name__ == "__main__":
    sys.exit(main())
