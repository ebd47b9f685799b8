"""``sl2auto`` command line.

Exit status: 0 on success, 1 when the query is outside a domain (message on
stderr), 2 for unparseable arguments, field specs or matrix literals.
"""

import argparse
import json
import re
import sys

from .classify import (
    UnboundedResult,
    conjugating_matrix,
    count_classes,
    eigenpairs_up_to_sign,
    is_isomorphic,
    realizable_classes,
)
from .exactfield import (
    AlgClosedSymbolic,
    DomainError,
    FiniteField,
    Rationals,
    RealsSymbolic,
    real_cyclotomic_minpoly,
)
from .oracle import verify_report
from .sl2core import inner_order, parse_matrix


class UsageError(Exception):
    pass


_FQ = re.compile(r"^Fq:(\d+)(?:\^(\d+))?$")


def field_spec_parse(s):
    """``Qbar``, ``R``, ``Q``, ``Fq:<p>`` or ``Fq:<p>^<r>`` to a field descriptor."""
    fixed = {"Qbar": AlgClosedSymbolic(), "R": RealsSymbolic(), "Q": Rationals()}
    if s in fixed:
        return fixed[s]
    m = _FQ.match(s)
    if not m:
        raise UsageError(f"unknown field spec {s!r} (expected Qbar, R, Q, Fq:<p> or Fq:<p>^<r>)")
    p, r = int(m.group(1)), int(m.group(2) or 1)
    try:
        return FiniteField(p, r)
    except DomainError as e:
        raise UsageError(f"bad field spec {s!r}: {e}") from None


def _matrix(text, field, sqrt):
    try:
        return parse_matrix(text, field, sqrt)
    except DomainError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


def _table(rows):
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _field_arg(args):
    return field_spec_parse(args.field)


# ---------------------------------------------------------------- commands


def cmd_eigenpairs(args, out):
    if args.m < 2:
        raise DomainError(f"m must be at least 2, got {args.m}")
    orbits = eigenpairs_up_to_sign(args.m)
    pairs = [e for o in orbits for e in o]
    if args.json:
        out(_dump([{"l": e.l, "r": e.r} for e in pairs]))
    else:
        for e in pairs:
            out(str(e))


def cmd_count(args, out):
    field = _field_arg(args)
    c = count_classes(args.m, field)
    if args.json:
        data = c.to_json()
        if c.note:
            data["note"] = c.note
        out(_dump(data))
    else:
        line = f"C({args.m}, {field}) = {c}"
        out(line + (f"  ({c.note})" if c.note else ""))


def _classes(args, field):
    squares = None
    if args.sqrt is not None:
        squares = [args.sqrt] if isinstance(args.sqrt, int) else args.sqrt
    try:
        return realizable_classes(args.m, field, squares)
    except UnboundedResult as e:
        raise DomainError(f"{e}; select classes with --sqrt") from None


def cmd_classes(args, out):
    field = _field_arg(args)
    classes = _classes(args, field)
    if args.json:
        out(_dump([c.to_json() for c in classes]))
        return
    if not classes:
        out(f"no order-{args.m} classes over {field}")
        return
    finite = isinstance(field, FiniteField)
    head = ["#", "eigenpair", "entry_class", "trace", "representative"] + (["closed_form"] if finite else [])
    rows = [head]
    for i, c in enumerate(classes):
        rep = "-" if c.representative is None else str(c.representative)
        row = [str(i), str(c.eigenpair), str(c.entry_class), str(c.trace), rep]
        if finite:
            row.append("predicted" if c.predicted else "not predicted")
        rows.append(row)
    out(_table(rows))


def cmd_rep(args, out):
    field = _field_arg(args)
    classes = _classes(args, field)
    if not 0 <= args.klass < len(classes):
        raise DomainError(f"class index {args.klass} out of range: {len(classes)} order-{args.m} classes over {field}")
    c = classes[args.klass]
    if c.representative is None:
        raise DomainError(f"{field} has no element arithmetic; classes there carry no matrix")
    if args.json:
        out(_dump(c.representative.to_json()))
    else:
        out(str(c.representative))
        out(str(inner_order(c.representative)))


def cmd_order(args, out):
    field = _field_arg(args)
    a = _matrix(args.matrix[0], field, args.sqrt)
    o = inner_order(a)
    if args.json:
        out(_dump({"order": o.m, "sign": o.sign} if o.finite else {"order": None}))
    else:
        out(str(o))


def cmd_iso(args, out):
    field = _field_arg(args)
    if len(args.matrix) != 2:
        raise UsageError("iso needs exactly two --matrix arguments")
    a, b = (_matrix(t, field, args.sqrt) for t in args.matrix)
    iso = is_isomorphic(a, b)
    q = conjugating_matrix(a, b) if iso else None
    if args.json:
        out(_dump({"isomorphic": iso, "conjugator": None if q is None else str(q)}))
    else:
        out("isomorphic" if iso else "not isomorphic")
        if q is not None:
            out(f"conjugator {q}")


def cmd_verify(args, out):
    if args.p > 13:
        raise DomainError("verify enumerates SL(2, F_p) and is limited to p <= 13")
    report = verify_report(args.p, args.max_m)
    text = _dump(report.to_json()) if args.json else report.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        out(text)
    if args.strict and not report.all_agree:
        bad = ", ".join(str(r.m) for r in report.results if not r.agree)
        args.err(f"closed-form count differs from the oracle at m = {bad}")
        return 1
    return 0


def cmd_minpoly(args, out):
    psi = real_cyclotomic_minpoly(args.l)
    if args.json:
        out(_dump({"l": args.l, "degree": psi.degree, "coeffs": psi.to_json()}))
    else:
        out(str(psi))


# ---------------------------------------------------------------- parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = _Parser(prog="sl2auto", description="Finite-order inner automorphisms of SL(2,k).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help, m=False, field=False, field_default="Q"):
        sp = sub.add_parser(name, help=help)
        if m:
            sp.add_argument("m", type=int)
        if field:
            sp.add_argument("--field", default=field_default, help="Qbar, R, Q, Fq:<p> or Fq:<p>^<r>")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(fn=fn)
        return sp

    add("eigenpairs", cmd_eigenpairs, "m-valid eigenpairs, grouped by sign orbit", m=True)
    add("count", cmd_count, "class count C(m, k)", m=True, field=True)
    sp = add("classes", cmd_classes, "realizable classes with representatives", m=True, field=True)
    sp.add_argument("--sqrt", type=int, action="append", help="square class to list (m = 2 over Q); repeatable")
    sp = add("rep", cmd_rep, "representative matrix of one class", m=True, field=True)
    sp.add_argument("--class", dest="klass", type=int, default=0, help="index into the classes listing")
    sp.add_argument("--sqrt", type=int, action="append", help="restrict to this square class")
    for name, fn, help in (("order", cmd_order, "inner automorphism order of a matrix"),
                           ("iso", cmd_iso, "isomorphy test with a conjugating matrix")):
        sp = add(name, fn, help, field=True)
        sp.add_argument("--matrix", action="append", required=True, help='literal "a,b;c,d"')
        sp.add_argument("--sqrt", type=int, help="radicand applied to every entry")
    sp = add("verify", cmd_verify, "brute-force oracle against the closed-form counts")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-m", dest="max_m", type=int, default=12)
    sp.add_argument("--strict", action="store_true", help="exit 1 on any divergence")
    sp.add_argument("--out", help="write the report to this file")
    sp = add("minpoly", cmd_minpoly, "minimal polynomial of 2cos(2*pi/l)")
    sp.add_argument("l", type=int)
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()

    def out(line):
        print(line, file=stdout)

    try:
        args = parser.parse_args(argv)
        args.err = lambda line: print(line, file=stderr)
        if args.command == "order" and len(args.matrix) != 1:
            raise UsageError("order takes exactly one --matrix")
        return args.fn(args, out) or 0
    except UsageError as e:
        print(parser.format_usage().rstrip(), file=stderr)
        print(f"sl2auto: error: {e}", file=stderr)
        return 2
    except DomainError as e:
        print(f"sl2auto: {e}", file=stderr)
        return 1


def main():
    sys.exit(run())
