"""Command-line front end.

Every subcommand reads one JSON document, runs a pipeline and prints a
report, either as plain text or as JSON.  Exit codes: 0 on success
(including an enumeration that hit its limit), 2 for unreadable input, 3 for
input that fails validation, 4 when a completion budget runs out (the
partial system is still printed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import automata as au
from . import idrel as ir
from . import kan
from . import machines as mc
from . import ncpoly as nc
from . import presentations as pr
from .errors import BudgetExhausted, KanrwError, ParseError, ValidationError

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3, 4
DEFAULT_LIMIT = 1000


class Report:
    """Text lines and a JSON payload built side by side."""

    def __init__(self):
        self.lines: list[str] = []
        self.data: dict = {}
        self.status = EXIT_OK

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True, ensure_ascii=False)
        return "\n".join(self.lines)


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def _budget(args) -> pr.CompletionBudget:
    return pr.CompletionBudget(args.max_rules, args.max_passes)


def _limit(args) -> int:
    if args.limit is not None:
        value = args.limit
    else:
        env = os.environ.get("KANRW_LIMIT")
        try:
            value = int(env) if env else DEFAULT_LIMIT
        except ValueError:
            raise ValidationError(f"KANRW_LIMIT must be an integer, got {env!r}") from None
    if value <= 0:
        raise ValidationError("the enumeration limit must be positive")
    return value


# ---------------------------------------------------------------------------
# Kan pipelines
# ---------------------------------------------------------------------------


def _kan_presentation(doc: dict) -> kan.KanPresentation:
    """A raw Kan document, or ``{"kind": ..., ...}`` for a special case."""
    if "kind" in doc:
        data = dict(doc)
        kind = data.pop("kind")
        if kind == "category-normal-forms":
            data["presentation"] = pr.presentation_from_json(data["presentation"])
        try:
            return kan.build_special_case(kind, data)
        except KeyError as exc:
            raise ParseError(f"special case {kind!r} is missing field {exc.args[0]!r}") from None
    return kan.kan_from_json(doc)


def _completed(doc: dict, args, rep: Report) -> kan.MixedRewriteSystem:
    pres = _kan_presentation(doc)
    R = kan.complete_kan(kan.initial_rules(pres), _budget(args))
    _rules_section(R, rep)
    if not R.complete:
        rep.line("completion budget exhausted; the rules above are partial")
        rep.status = EXIT_BUDGET
    return R


def _rules_section(R: kan.MixedRewriteSystem, rep: Report) -> None:
    pairs = R.pairs()
    rep.line(f"{len(pairs)} rules ({'complete' if R.complete else 'incomplete'})")
    for lhs, rhs in pairs:
        rep.line(f"  {lhs} -> {rhs}")
    rep.data["rules"] = [list(p) for p in pairs]
    rep.data["complete"] = R.complete


def _census_section(result: kan.KanResult, limit: int, rep: Report) -> None:
    if result.overflow:
        rep.line(f"enumeration limit exceeded: more than {limit} elements")
        rep.data["overflow"] = True
        rep.data["limit"] = limit
        return
    rep.data["overflow"] = False
    rep.line(f"{result.count} elements")
    census = {}
    for b, terms in result.census.items():
        names = [str(t) for t in terms]
        census[b] = names
        rep.line(f"  {b}: {', '.join(names) if names else '(empty)'}")
    rep.data["census"] = census
    rep.data["action"] = [[str(t), a, str(u)] for (t, a), u in result.action.items()]


def cmd_kan(args, rep: Report) -> None:
    doc = _load(args.file)
    if args.action == "complete":
        _completed(doc, args, rep)
    elif args.action == "enumerate":
        R = _completed(doc, args, rep)
        if R.complete:
            limit = _limit(args)
            _census_section(kan.enumerate_kan(R, limit), limit, rep)
    elif args.action == "regex":
        if not args.object:
            raise ValidationError("kan regex needs --object")
        R = _completed(doc, args, rep)
        if R.complete:
            dfa = au.kan_acceptor(R)
            text = au.format_regex(au.regex_for_object(dfa, R.pres, args.object))
            rep.line(f"regex over {args.object}: {text}")
            rep.data["object"] = args.object
            rep.data["regex"] = text
            rep.data["dfa_states"] = dfa.size


def _special(kind: str) -> Callable:
    def run(args, rep: Report) -> None:
        doc = dict(_load(args.file))
        doc["kind"] = kind
        R = _completed(doc, args, rep)
        if R.complete:
            limit = _limit(args)
            _census_section(kan.enumerate_kan(R, limit), limit, rep)
    return run


def cmd_moore(args, rep: Report) -> None:
    R = _completed(_load(args.file), args, rep)
    if not R.complete:
        return
    m = mc.build_moore(R, _limit(args))
    if args.dot:
        # Graphviz output must stand alone, so the rule listing is dropped
        rep.lines = [mc.moore_to_dot(m)]
        rep.data["dot"] = rep.lines[0]
        return
    rep.line(f"{len(m.states)} states")
    for s in m.states:
        out = m.output[s]
        rep.line(f"  {s} / {0 if out == 0 else out}")
    rep.line("transitions:")
    for s, a, t in m.nontrivial():
        rep.line(f"  {s} --{a}--> {t}")
    rep.data["machine"] = m.to_json()
    for word in args.terms or ():
        letters = tuple(x for x in word.replace("|", "*").split("*") if x and x != "id")
        out = mc.run_moore(m, letters)
        rep.line(f"run {word}: {out}")
        rep.data.setdefault("runs", {})[word] = 0 if out == 0 else str(out)


# ---------------------------------------------------------------------------
# Plain presentations and groups
# ---------------------------------------------------------------------------


def _category_presentation(doc: dict) -> pr.CategoryPresentation:
    """Either an object/arrow document or ``generators`` plus ``relations``."""
    if "objects" in doc:
        return pr.presentation_from_json(doc)
    if "relators" in doc:
        return _group(doc)
    try:
        gens = doc["generators"]
        rels = [(pr.parse_word(l), pr.parse_word(r)) for l, r in doc.get("relations", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed monoid document: {exc!r}") from None
    return pr.monoid_presentation(gens, rels)


def _group(doc: dict) -> pr.CategoryPresentation:
    try:
        gens = doc["generators"]
        rels = doc["relators"]
        words = [pr.parse_fg_word(w) for w in (rels.values() if isinstance(rels, dict) else rels)]
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed group document: {exc!r}") from None
    return pr.group_presentation(gens, words, doc.get("orders"))


def cmd_kb(args, rep: Report) -> None:
    pres = _category_presentation(_load(args.file))
    done = pr.complete_presentation(pres, _budget(args))
    rep.line(f"{len(done.rules)} rules ({'complete' if done.complete else 'incomplete'})")
    pairs = [(pr.format_word(r.lhs.arrows), pr.format_word(r.rhs.arrows)) for r in done.rules]
    for lhs, rhs in pairs:
        rep.line(f"  {lhs} -> {rhs}")
    rep.data["rules"] = [list(p) for p in pairs]
    rep.data["complete"] = done.complete
    if not done.complete:
        rep.line("completion budget exhausted; the rules above are partial")
        rep.status = EXIT_BUDGET


def cmd_cayley(args, rep: Report) -> None:
    doc = _load(args.file)
    g = mc.build_cayley(_category_presentation(doc), limit=_limit(args))
    if args.dot:
        rep.line(mc.cayley_to_dot(g))
        rep.data["dot"] = mc.cayley_to_dot(g)
        return
    rep.line(f"{len(g.vertices)} elements: {', '.join(g.labels)}")
    rep.line("tree edges:")
    payload = g.to_json()
    for v, x in payload["tree"]:
        rep.line(f"  [{v}, {x}]")
    rep.data["cayley"] = payload
    for word in list(doc.get("words", [])) + list(args.word or ()):
        nf = pr.format_word(mc.cayley_normal_form(g, pr.parse_fg_word(word)))
        rep.line(f"N({word}) = {nf}")
        rep.data.setdefault("normal_forms", {})[word] = nf


def cmd_idrel(args, rep: Report) -> None:
    doc = _load(args.file)
    try:
        pres = ir.group_ir(doc["generators"], doc["relators"], doc.get("inverses", "auto"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed idrel document: {exc!r}") from None
    try:
        result = ir.idrel(pres, _budget(args))
    except BudgetExhausted as exc:
        rep.line(str(exc))
        for rule in exc.partial or ():
            rep.line(f"  {rule}")
        rep.status = EXIT_BUDGET
        return
    data = result.to_json()
    rep.data.update(data)
    rep.line(f"{len(result.data.eirs)} EIRS rules")
    for rule in result.data.eirs:
        rep.line(f"  {rule}")
    rep.line(f"{len(result.data.elements)} elements: {', '.join(data['elF'])}")
    rep.line(f"{len(result.identities)} identities")
    for rec in result.identities:
        rep.line(f"  [{pr.format_fg_word(rec.element)}, {rec.rel}] "
                 f"{ir.format_ysequence(rec.sequence)}")
    rep.line(f"isIdsRecord: {str(result.is_ids_record).lower()}")


# ---------------------------------------------------------------------------
# Noncommutative polynomials
# ---------------------------------------------------------------------------


def _polys(doc: dict) -> tuple[list[str], list[nc.NcPolynomial]]:
    try:
        gens = list(doc["generators"])
        polys = [nc.parse_poly(p, gens) for p in doc.get("polynomials", [])]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed polynomial document: {exc!r}") from None
    return gens, polys


def cmd_ncgb(args, rep: Report) -> None:
    gens, polys = _polys(_load(args.file))
    gb = nc.buchberger(polys, _budget(args))
    rep.line(f"{len(gb)} polynomials ({'complete' if gb.complete else 'incomplete'})")
    for f in gb:
        rep.line(f"  {nc.format_poly(f)}")
    rep.data["basis"] = [nc.format_poly(f) for f in gb]
    rep.data["complete"] = gb.complete
    if not gb.complete:
        rep.status = EXIT_BUDGET
        return
    dim = nc.algebra_dimension(gb, gens)
    regex = au.format_regex(dim.regex)
    if dim.finite:
        mons = [pr.format_word(m) for m in dim.monomials]
        rep.line(f"dimension {dim.dimension}: {', '.join(mons)}")
        rep.data["monomials"] = mons
    else:
        rep.line("dimension infinite")
    rep.line(f"irreducible monomials: {regex}")
    rep.data["dimension"] = dim.dimension if dim.finite else "infinite"
    rep.data["regex"] = regex


def cmd_ncreduce(args, rep: Report) -> None:
    doc = _load(args.file)
    gens, polys = _polys(doc)
    # --poly replaces the document's list rather than extending it
    targets = list(args.poly) if args.poly else list(doc.get("reduce", []))
    if not targets:
        raise ValidationError("nothing to reduce: give --poly or a 'reduce' list")
    rep.data["reductions"] = {}
    for text in targets:
        p = nc.parse_poly(text, gens)
        r, steps = nc.reduce_poly(p, polys, trace=True)
        out = nc.format_poly(r)
        rep.line(f"{text} -> {out}")
        entry: dict = {"result": out}
        if args.trace:
            for st in steps:
                rep.line(f"  - {st.coeff} {pr.format_word(st.left, '')}"
                         f"[{st.index}]{pr.format_word(st.right, '')}")
            entry["trace"] = [[str(st.coeff), list(st.left), st.index, list(st.right)]
                              for st in steps]
        rep.data["reductions"][text] = entry


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="report format (default: text)")
    common.add_argument("--limit", type=int, default=None,
                        help=f"enumeration limit (default: $KANRW_LIMIT or {DEFAULT_LIMIT})")
    common.add_argument("--max-rules", type=int, default=10000,
                        help="completion budget: largest system size (default: 10000)")
    common.add_argument("--max-passes", type=int, default=100,
                        help="completion budget: number of passes (default: 100)")

    p = argparse.ArgumentParser(prog="kanrw",
                                description="Rewriting for Kan extensions, groups and algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kan", parents=[common], help="Kan extension presentations")
    k.add_argument("action", choices=("complete", "enumerate", "regex"))
    k.add_argument("file")
    k.add_argument("--object", help="object of Delta for 'kan regex'")
    k.set_defaults(run=cmd_kan)

    kb = sub.add_parser("kb", parents=[common], help="complete a monoid, group or category")
    kb.add_argument("action", choices=("complete",))
    kb.add_argument("file")
    kb.set_defaults(run=cmd_kb)

    for name in ("coset", "orbit", "conjugacy", "colimit", "equivalence", "induced-action"):
        s = sub.add_parser(name, parents=[common], help=f"{name} problem as a Kan extension")
        s.add_argument("file")
        s.set_defaults(run=_special(name))

    m = sub.add_parser("moore", parents=[common], help="Moore machine of a finite extension")
    m.add_argument("file")
    m.add_argument("--dot", action="store_true", help="emit Graphviz instead of a table")
    m.add_argument("--run", action="append", metavar="TERM", dest="terms",
                   help="feed a term such as x1|b1*b4 (repeatable)")
    m.set_defaults(run=cmd_moore)

    c = sub.add_parser("cayley", parents=[common], help="Cayley graph of a finite group")
    c.add_argument("file")
    c.add_argument("--dot", action="store_true", help="emit Graphviz instead of a table")
    c.add_argument("--word", action="append", help="word to normalise (repeatable)")
    c.set_defaults(run=cmd_cayley)

    g = sub.add_parser("ncgb", parents=[common], help="noncommutative Groebner basis")
    g.add_argument("file")
    g.set_defaults(run=cmd_ncgb)

    r = sub.add_parser("ncreduce", parents=[common], help="reduce polynomials modulo a list")
    r.add_argument("file")
    r.add_argument("--poly", action="append", help="polynomial to reduce (repeatable; replaces the file's list)")
    r.add_argument("--trace", action="store_true", help="list the reduction steps")
    r.set_defaults(run=cmd_ncreduce)

    i = sub.add_parser("idrel", parents=[common], help="identities among relations")
    i.add_argument("file")
    i.set_defaults(run=cmd_idrel)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report()
    try:
        if args.max_rules <= 0 or args.max_passes <= 0:
            raise ValidationError("budget values must be positive")
        args.run(args, rep)
    except ParseError as exc:
        print(f"kanrw: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExhausted as exc:
        print(f"kanrw: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValidationError, KanrwError) as exc:
        print(f"kanrw: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(rep.render(args.format))
    return rep.status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
