"""Command-line interface.

Vectors are written as a role prefix and comma-separated entries, e.g.
``h:1,4,5,7,3,2,0``.  Complexes travel as JSON documents with fields
``dim`` and ``facets`` and, when produced by ``construct``, a
``certificate`` section holding the shelling order and restriction faces.

Exit codes: 0 success/constructible, 1 input error, 2 proven impossible,
3 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import (
    CountVector,
    NotAShellingError,
    SimplicialComplex,
    convert,
    f_vector,
    glue,
    h_from_certificate,
    verify_shelling,
)
from .construction import construct_verified, construction_conditions
from .homology import classify
from .obstruction import (
    FamilyParams,
    betti_split_verdict,
    conjecture61_predicate,
    enumerate_splits,
    family_certificate,
    family_hvector,
    peeva_bounds,
    skeleton_search,
    verdict,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_IMPOSSIBLE = 2
EXIT_UNKNOWN = 3

_VERDICT_EXITS = {
    "constructible": EXIT_OK,
    "bl_conditions_fail": EXIT_IMPOSSIBLE,
    "impossible_betti_split": EXIT_IMPOSSIBLE,
    "impossible_skeleton": EXIT_IMPOSSIBLE,
    "impossible_family_certificate": EXIT_IMPOSSIBLE,
    "unknown": EXIT_UNKNOWN,
}


class CliError(Exception):
    pass


def parse_vector(text):
    head, sep, body = text.partition(":")
    if not sep or head not in ("f", "h"):
        raise CliError("vector must look like h:1,2,0 or f:1,3,3,1")
    try:
        entries = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise CliError("non-integer entry in %r" % text)
    try:
        return CountVector(head, len(entries) - 1, entries)
    except ValueError as exc:
        raise CliError(str(exc))


def _as_h(v):
    return convert(v, "h")


def complex_to_document(c, cert=None):
    doc = {"dim": c.dim, "facets": [list(f) for f in sorted(c.facets)]}
    if cert is not None:
        doc["certificate"] = {
            "ordered_facets": [list(f) for f in cert.ordered_facets],
            "restrictions": [list(r) for r in cert.restrictions],
        }
    return doc


def complex_from_document(doc):
    try:
        facets = frozenset(tuple(f) for f in doc["facets"])
        c = SimplicialComplex(facets)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError("bad complex document: %s" % exc)
    if c.dim != doc.get("dim", c.dim):
        raise CliError("declared dim %r does not match facets" % doc["dim"])
    return c


def _emit(lines, out_path=None):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(payload):
    return json.dumps(payload, sort_keys=True, default=str)


def cmd_convert(args):
    v = parse_vector(args.vector)
    target = "h" if v.role == "f" else "f"
    w = convert(v, target)
    _emit(["%s:%s" % (w.role, ",".join(map(str, w.entries)))], args.output)
    return EXIT_OK


def cmd_check(args):
    h = _as_h(parse_vector(args.vector))
    report = verdict(h, cap_absent_edges=args.cap_absent_edges,
                     recursive_splits=args.recursive_splits)
    lines = ["h: %s" % ",".join(map(str, h.entries)),
             "verdict: %s" % report.verdict,
             "evidence: %s" % _dump(report.payload)]
    if h.d == 6:
        found, m = conjecture61_predicate(h, allow_zero=not args.m_positive)
        lines.append("vertex_addition_witness: %s"
                     % (m if found else "none"))
    _emit(lines, args.output)
    return _VERDICT_EXITS[report.verdict]


def cmd_construct(args):
    h = _as_h(parse_vector(args.vector))
    ok, reasons = construction_conditions(h)
    if not ok:
        _emit(["verdict: conditions_fail", "reasons: %s" % _dump(reasons)],
              args.output)
        return EXIT_UNKNOWN
    c, cert, topo = construct_verified(h)
    doc = complex_to_document(c, cert)
    doc["h"] = list(h.entries)
    doc["classification"] = topo.tag
    _emit([json.dumps(doc, sort_keys=True)], args.output)
    return EXIT_OK


def cmd_verify(args):
    with open(args.path) as fh:
        doc = json.load(fh)
    c = complex_from_document(doc)
    lines = []
    f = f_vector(c)
    h = convert(f, "h")
    lines.append("f: %s" % ",".join(map(str, f.entries)))
    lines.append("h: %s" % ",".join(map(str, h.entries)))
    code = EXIT_OK
    if "certificate" in doc:
        ordered = [tuple(x) for x in doc["certificate"]["ordered_facets"]]
        try:
            cert = verify_shelling(ordered)
        except (NotAShellingError, ValueError) as exc:
            lines.append("shelling: INVALID (%s)" % exc)
            _emit(lines, args.output)
            return EXIT_INPUT
        claimed = [tuple(x) for x in doc["certificate"]["restrictions"]]
        if list(cert.restrictions) != claimed:
            lines.append("shelling: restriction faces disagree")
            code = EXIT_INPUT
        elif frozenset(ordered) != c.facets:
            lines.append("shelling: certificate covers a different complex")
            code = EXIT_INPUT
        else:
            lines.append("shelling: valid")
            if h_from_certificate(cert).entries != h.entries:
                lines.append("shelling: h mismatch")
                code = EXIT_INPUT
    topo = classify(c)
    lines.append("classification: %s" % topo.tag)
    _emit(lines, args.output)
    return code


def cmd_family(args):
    try:
        p = FamilyParams(args.x, args.y, args.dim)
    except ValueError as exc:
        raise CliError(str(exc))
    h = family_hvector(p)
    report = family_certificate(p)
    _emit(["h: %s" % ",".join(map(str, h.entries)),
           "verdict: %s" % report.verdict,
           "evidence: %s" % _dump(report.payload)], args.output)
    return _VERDICT_EXITS[report.verdict]


def cmd_betti(args):
    h = _as_h(parse_vector(args.vector))
    lower, upper = peeva_bounds(h)
    report = betti_split_verdict(h, recursive=args.recursive_splits)
    _emit(["peeva_bounds: %d %d" % (lower, upper),
           "verdict: %s" % report.verdict,
           "evidence: %s" % _dump(report.payload)], args.output)
    return _VERDICT_EXITS[report.verdict]


def cmd_splits(args):
    h = _as_h(parse_vector(args.vector))
    splits = enumerate_splits(h, recursive=args.recursive_splits)
    lines = ["count: %d" % len(splits)]
    for s in splits:
        lines.append("%s | %s" % (",".join(map(str, s.first.entries)),
                                  ",".join(map(str, s.second.entries))))
    _emit(lines, args.output)
    return EXIT_OK


def cmd_skeleton(args):
    h = _as_h(parse_vector(args.vector))
    report = skeleton_search(h, cap_absent_edges=args.cap_absent_edges)
    payload = {k: v for k, v in report.payload.items() if k != "survivors"}
    _emit(["verdict: %s" % report.verdict,
           "evidence: %s" % _dump(payload)], args.output)
    return _VERDICT_EXITS[report.verdict]


def _parse_pair(text):
    left, sep, right = text.partition("=")
    if not sep:
        raise CliError("pair must look like 1,2,3=4,5,6")
    try:
        fa = tuple(int(x) for x in left.split(","))
        fb = tuple(int(x) for x in right.split(","))
    except ValueError:
        raise CliError("non-integer vertex in pair %r" % text)
    if len(fa) != len(fb):
        raise CliError("pair faces differ in size: %r" % text)
    return fa, fb, dict(zip(fa, fb))


def cmd_glue(args):
    with open(args.first) as fh:
        a = complex_from_document(json.load(fh))
    if args.second == args.first:
        b = a
    else:
        with open(args.second) as fh:
            b = complex_from_document(json.load(fh))
    pairs = [_parse_pair(p) for p in args.pair]
    try:
        c = glue(a, b, pairs)
    except ValueError as exc:
        raise CliError(str(exc))
    doc = complex_to_document(c)
    doc["h"] = list(convert(f_vector(c), "h").entries)
    _emit([json.dumps(doc, sort_keys=True)], args.output)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(message)


def build_parser():
    parser = _Parser(prog="ballcomb",
                     description="f/h-vector calculus for triangulated balls")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, fn, **extras):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        p.add_argument("-o", "--output", default=None)
        return p

    p = add("convert", cmd_convert)
    p.add_argument("vector")

    p = add("check", cmd_check)
    p.add_argument("vector")
    p.add_argument("--cap-absent-edges", type=int, default=7)
    p.add_argument("--recursive-splits", action="store_true")
    p.add_argument("--m-positive", dest="m_positive", action="store_true",
                   help="require a strictly positive vertex-addition count")
    p.add_argument("--m-nonneg", dest="m_positive", action="store_false")

    p = add("construct", cmd_construct)
    p.add_argument("vector")

    p = add("verify", cmd_verify)
    p.add_argument("path")

    p = add("family", cmd_family)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)

    p = add("betti", cmd_betti)
    p.add_argument("vector")
    p.add_argument("--recursive-splits", action="store_true")

    p = add("splits", cmd_splits)
    p.add_argument("vector")
    p.add_argument("--recursive-splits", action="store_true")

    p = add("skeleton", cmd_skeleton)
    p.add_argument("vector")
    p.add_argument("--cap-absent-edges", type=int, default=7)

    p = add("glue", cmd_glue)
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--pair", action="append", required=True,
                   help="face identification like 1,2,3=4,5,6 (positional)")

    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
