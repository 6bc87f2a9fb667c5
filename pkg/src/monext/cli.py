"""Command-line front end.

Exit status: 0 when a verification passes or a construction succeeds, 1 when
a verification fails (the violations are serialized), 2 for input or format
errors.  Errors are always reported as JSON on stderr.

Inputs are file paths or names: registry names for monoids (``M``, ``G``,
``Z3``, ``Z4``, ``T``, ``K4``), ``census:N`` for the N-th two-element census
system (1-based) or its realization, and ``idempotent:NAME`` for the tuple
(A, A, A, 1, 1, 1, 1) over a named monoid.
"""

import argparse
import json
import os
import sys

from . import formats
from .action import (check_roundtrip, functor_P, functor_Q, verify_action_system,
                     roundtrip_witness)
from .enumeration import (GAMMA, PHI, RHO, census_2x2, classification_agreement,
                          describe, enumerate_action_systems, make_entry,
                          realization_census)
from .errors import (AlgebraError, IndexOutOfRange, NotAssociative, NotIdentity,
                     ParseError)
from .monoid import enumerate_monoids
from .registry import Registry
from .semibiproduct import (CompositionObstruction, check_exactness,
                            compose_semibiproducts, idempotent_tuple,
                            pullback_semibiproduct, verify_semibiproduct)

VERBS = ("monoid-check", "monoid-enum", "sbp-verify", "sbp-pullback", "sbp-compose",
         "sbp-exactness", "act-verify", "act-realize", "act-derive", "act-enumerate",
         "act-classify", "roundtrip", "census")


class Failed(Exception):
    """A verification failed; carries the document to serialize."""

    def __init__(self, doc, text=None):
        super().__init__("verification failed")
        self.doc = doc
        self.text = text


# -- input resolution ----------------------------------------------------------------

def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", path=path) from None


def _load(ref):
    return formats.loads(_read(ref), source=ref)


def _census_index(ref):
    try:
        i = int(ref.split(":", 1)[1])
    except ValueError:
        raise ParseError(f"bad census reference {ref!r}", input=ref) from None
    if not 1 <= i <= 14:
        raise ParseError("census references run from census:1 to census:14", input=ref)
    return i


def load_monoid(ref, reg):
    if ref in reg:
        return reg.get(ref)
    if os.path.exists(ref):
        return formats.monoid_from_doc(_load(ref), reg, where=ref)
    if ref.endswith(".json"):
        _read(ref)
    return reg.get(ref)


def load_action(ref, reg):
    if ref.startswith("census:"):
        return census_2x2()[_census_index(ref) - 1].system
    return formats.act_from_doc(_load(ref), reg, where=ref)


def load_sbp(ref, reg):
    if ref.startswith("census:"):
        return functor_Q(load_action(ref, reg)).semibiproduct
    if ref.startswith("idempotent:"):
        return idempotent_tuple(reg.get(ref.split(":", 1)[1]))
    return formats.sbp_from_doc(_load(ref), reg, where=ref)


def load_hom(ref, reg):
    return formats.map_from_doc(_load(ref), reg, where=ref, homomorphism=True)


def load_actions_jsonl(ref, reg):
    out = []
    for n, line in enumerate(_read(ref).splitlines(), 1):
        if line.strip():
            doc = formats.loads(line, source=f"{ref}:{n}")
            out.append(formats.act_from_doc(doc, reg, where=f"{ref}:{n}"))
    return out


# -- table rendering -------------------------------------------------------------------

def _grid(m):
    return "\n".join(" ".join(str(v) for v in row) for row in m)


def _monoid_text(M):
    head = "    " + " ".join(M.label(j) for j in M.elements)
    rows = [f"{M.label(i):>3} " + " ".join(M.label(v) for v in row)
            for i, row in enumerate(M.table)]
    return "\n".join([head] + rows)


def _report_text(report):
    if report["passed"]:
        return "PASS"
    lines = ["FAIL"]
    for v in report["violations"]:
        w = " ".join(f"{k}={val}" for k, val in sorted(v["witness"].items()))
        lines.append(f"  {v['law']}: {w}")
    return "\n".join(lines)


def _one_based(m):
    """Render an index matrix with the multiplicative labels 1, 2, ..."""
    return " / ".join(" ".join(str(v + 1) for v in row) for row in m)


def _census_text(entries):
    lines = ["components (labels 1/2, rows separated by /):"]
    for sym, table in (("ρ", RHO), ("φ", PHI), ("γ", GAMMA)):
        lines.append("  " + "   ".join(f"{sym}{i} = ({_one_based(table[i])})" for i in (0, 1)))
    lines.append("")
    lines.append(" #  system           |R|  tags")
    for i, e in enumerate(entries, 1):
        lines.append(f"{i:>2}. {e.label:<16} {e.realization_size:>3}  "
                     + " ".join(sorted(e.tags)))
    return "\n".join(lines)


# -- verbs ---------------------------------------------------------------------------

def _require(report_doc, text=None):
    if not report_doc["passed"]:
        raise Failed(report_doc, text)


def cmd_monoid_check(args, reg):
    try:
        M = load_monoid(args.input, reg)
    except (NotAssociative, NotIdentity, IndexOutOfRange) as exc:
        doc = {"passed": False, "violations": [exc.to_dict()]}
        raise Failed(doc, f"FAIL\n  {exc.code}: {exc.message}") from None
    doc = {"passed": True, "size": M.size, "idempotent": M.is_idempotent(),
           "commutative": M.is_commutative(), "group": M.is_group(),
           "monoid": formats.monoid_to_doc(M, reg)}
    return doc, _monoid_text(M) + "\nPASS"


def cmd_monoid_enum(args, reg):
    mons = enumerate_monoids(args.n)
    docs = [formats.monoid_to_doc(m, reg) for m in mons]
    text = "\n\n".join(f"#{i}\n{_grid(m.table)}" for i, m in enumerate(mons))
    return docs, text


def cmd_sbp_verify(args, reg):
    S = load_sbp(args.input, reg)
    doc = verify_semibiproduct(S, pointed=not args.skip_pointed).to_dict()
    _require(doc, _report_text(doc))
    return doc, _report_text(doc)


def cmd_sbp_exactness(args, reg):
    S = load_sbp(args.input, reg)
    pre = verify_semibiproduct(S).to_dict()
    _require(pre, _report_text(pre))
    doc = check_exactness(S).to_dict()
    _require(doc, _report_text(doc))
    return doc, _report_text(doc)


def cmd_sbp_pullback(args, reg):
    S = load_sbp(args.input, reg)
    h = load_hom(args.hom, reg)
    T = pullback_semibiproduct(S, h)
    report = verify_semibiproduct(T).to_dict()
    doc = {"semibiproduct": formats.sbp_to_doc(T, reg), "verification": report}
    text = _monoid_text(T.A) + "\n" + _report_text(report)
    _require(report, text)
    return doc, text


def cmd_sbp_compose(args, reg):
    S = load_sbp(args.first, reg)
    T = load_sbp(args.second, reg)
    out = compose_semibiproducts(S, T)
    if isinstance(out, CompositionObstruction):
        doc = out.to_dict()
        raise Failed(doc, f"not composable: s({out.b}) = {out.s_value} "
                          f"but sk'q'+ss'p' gives {out.rebuilt_value}")
    report = verify_semibiproduct(out).to_dict()
    doc = {"composable": True, "semibiproduct": formats.sbp_to_doc(out, reg),
           "verification": report}
    text = _monoid_text(out.X) + "\n" + _report_text(report)
    _require(report, text)
    return doc, text


def cmd_act_verify(args, reg):
    T = load_action(args.input, reg)
    doc = verify_action_system(T).to_dict()
    _require(doc, _report_text(doc))
    return doc, _report_text(doc)


def cmd_act_realize(args, reg):
    T = load_action(args.input, reg)
    report = verify_action_system(T).to_dict()
    _require(report, _report_text(report))
    real = functor_Q(T)
    pairs = " ".join(f"({x},{b})" for x, b in real.carrier)
    return formats.realization_to_doc(real, reg), f"R = {{{pairs}}}\n{_monoid_text(real.monoid)}"


def cmd_act_derive(args, reg):
    S = load_sbp(args.input, reg)
    report = verify_semibiproduct(S).to_dict()
    _require(report, _report_text(report))
    T = functor_P(S)
    text = "\n".join([describe(T), "rho:", _grid(T.rho), "phi:", _grid(T.phi),
                      "gamma:", _grid(T.gamma)])
    return formats.act_to_doc(T, reg), text


def cmd_act_enumerate(args, reg):
    X, B = load_monoid(args.X, reg), load_monoid(args.B, reg)
    systems = enumerate_action_systems(X, B)
    docs = [formats.act_to_doc(T, reg) for T in systems]
    return _Lines(docs), "\n".join(describe(T) for T in systems)


def cmd_act_classify(args, reg):
    if args.input:
        entries = [make_entry(T) for T in load_actions_jsonl(args.input, reg)]
    else:
        entries = census_2x2()
    act, psb, agree = classification_agreement(entries)
    index = {id(e): i for i, e in enumerate(entries, 1)}
    classes = [[index[id(m)] for m in c.members] for c in act]
    doc = {"classes": classes, "class_count": len(act),
           "psb_class_count": len(psb), "relations_agree": agree}
    text = "\n".join(f"class {n}: " + " ".join(str(i) for i in c)
                     for n, c in enumerate(classes, 1))
    return doc, text + f"\n{len(act)} classes (psb: {len(psb)}, agree: {agree})"


def cmd_roundtrip(args, reg):
    S = load_sbp(args.input, reg)
    pre = verify_semibiproduct(S).to_dict()
    _require(pre, _report_text(pre))
    W = roundtrip_witness(S)
    report = check_roundtrip(W).to_dict()
    doc = {"alpha": list(W.alpha.values), "beta": list(W.beta.values),
           "carrier": [list(p) for p in W.realization.carrier], "verification": report}
    text = (f"alpha = {list(W.alpha.values)}\nbeta  = {list(W.beta.values)}\n"
            + _report_text(report))
    _require(report, text)
    return doc, text


class _Lines(list):
    """Marker: serialize as JSON lines rather than a single document."""


def cmd_census(args, reg):
    entries = census_2x2()
    docs = [formats.census_entry_to_doc(i, e, reg) for i, e in enumerate(entries, 1)]
    if args.realizations:
        for d, row in zip(docs, realization_census(entries)):
            d["realization_iso"] = row.iso_name
    return _Lines(docs), _census_text(entries)


# -- parser and driver -----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message, usage=self.format_usage().strip())


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--seed-registry", metavar="PATH",
                        help="JSON object mapping extra names to monoid documents")
    parser = _Parser(prog="monext", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    verb("monoid-check", cmd_monoid_check, "validate a Cayley table").add_argument("input")
    verb("monoid-enum", cmd_monoid_enum, "monoids of order n up to isomorphism"
         ).add_argument("n", type=int)
    p = verb("sbp-verify", cmd_sbp_verify, "check the semibiproduct laws")
    p.add_argument("input")
    p.add_argument("--skip-pointed", action="store_true",
                   help="check only ps=1, qk=1 and kq+sp=1")
    verb("sbp-exactness", cmd_sbp_exactness, "check the underlying exact sequence"
         ).add_argument("input")
    p = verb("sbp-pullback", cmd_sbp_pullback, "pull back along a homomorphism C -> B")
    p.add_argument("input")
    p.add_argument("hom")
    p = verb("sbp-compose", cmd_sbp_compose, "compose (X,A,B) with (C,B,D)")
    p.add_argument("first")
    p.add_argument("second")
    verb("act-verify", cmd_act_verify, "check the action-system axioms").add_argument("input")
    verb("act-realize", cmd_act_realize, "synthetic realization of a system"
         ).add_argument("input")
    verb("act-derive", cmd_act_derive, "action system of a semibiproduct").add_argument("input")
    p = verb("act-enumerate", cmd_act_enumerate, "all action systems over (X, B)")
    p.add_argument("X")
    p.add_argument("B")
    verb("act-classify", cmd_act_classify, "isomorphism classes of systems (JSON lines)"
         ).add_argument("input", nargs="?")
    verb("roundtrip", cmd_roundtrip, "alpha/beta witnesses for a semibiproduct"
         ).add_argument("input")
    verb("census", cmd_census, "the fourteen two-element systems").add_argument(
        "--realizations", action="store_true", help="identify each realization")
    return parser


def _render(doc, fmt, text):
    if fmt == "table" and text is not None:
        return text + "\n"
    if isinstance(doc, _Lines):
        return "".join(formats.dumps(d) + "\n" for d in doc)
    return formats.dumps(doc) + "\n"


def _registry(path):
    if not path:
        return Registry()
    raw = formats.loads(_read(path), source=path)
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: expected an object of named monoids", path=path)
    extra = {}
    for name, doc in raw.items():
        if isinstance(doc, str):
            raise ParseError(f"{path}: {name} must be an inline monoid", field=name)
        extra[name] = formats.monoid_from_doc(doc, where=f"{path}:{name}")
    return Registry(extra)


def run(argv):
    """Execute one command; returns (exit status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ParseError as exc:
        return 2, "", formats.dumps(exc.to_dict()) + "\n"
    try:
        reg = _registry(args.seed_registry)
        doc, text = args.fn(args, reg)
        code, out, err = 0, _render(doc, args.format, text), ""
    except Failed as exc:
        body = formats.dumps(exc.doc) + "\n"
        if args.format == "table":
            code, out, err = 1, (exc.text or "FAIL") + "\n", body
        else:
            code, out, err = 1, body, ""
    except AlgebraError as exc:
        code, out, err = 2, "", formats.dumps(exc.to_dict()) + "\n"
    except (ValueError, json.JSONDecodeError) as exc:
        code, out, err = 2, "", formats.dumps({"error": "ParseError", "message": str(exc),
                                               "details": {}}) + "\n"
    if args.out and out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
        out = ""
    return code, out, err


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
