"""Acceptance checks, one test per criterion.

Each test records a PASS or FAIL line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

from __future__ import annotations

import random
import re
import sys

import pytest

from kanrw import automata as au
from kanrw import idrel as ir
from kanrw import kan
from kanrw import machines as mc
from kanrw import ncpoly as nc
from kanrw import presentations as pr
from kanrw.errors import ValidationError

try:
    from conftest import coset_system, kan_pairs, load, random_kan, random_term
except ImportError:  # run as a script from the repository root
    sys.path.insert(0, "tests")
    from conftest import coset_system, kan_pairs, load, random_kan, random_term

_RESULTS: dict[int, str] = {}


def _record(n: int, ok: bool, detail: str) -> None:
    _RESULTS[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(_RESULTS[n])


def summary_lines() -> list[str]:
    return [_RESULTS[k] for k in sorted(_RESULTS)]


def _check(n: int, detail: str, conditions: dict[str, bool]) -> None:
    bad = [k for k, v in conditions.items() if not v]
    _record(n, not bad, detail if not bad else f"{detail}; failed: {', '.join(bad)}")
    assert not bad, bad


# Frozen reference listings, as printed by GAP.

KAN_EXAMPLE_GAP = {
    ("x1*b1", "y1"), ("x1*b4", "x1"), ("x2*b1", "y2"), ("x2*b4", "x2"), ("x3*b1", "y1"),
    ("x3*b4", "x1"), ("b1*b2*b3", "b4"), ("y1*b2*b3", "x1"), ("y2*b2*b3", "x2"),
}

GROUP_RULES = {
    ("a^2*b", "b*a"), ("a^2*c", "c*a"), ("a*b^2", "b^2"), ("a*b*c", "c*b"), ("a*c*b", "c*b"),
    ("b*a^2", "b*a"), ("b*a*b", "b^2"), ("b*a*c", "c*b"), ("b^2*a", "b^2"), ("b*c*a", "c*b"),
    ("b*c*b", "b^2*c"), ("c*a*b", "c*b"), ("c*b*a", "c*b"), ("c*b^2", "b^2*c"),
    ("c*b*c", "b^2"), ("c^2*b", "b^2"), ("b^4", "b^2"), ("b^3*c", "c*b"), ("b^2*c^2", "b^3"),
    ("b*c^2*a", "b^2"), ("c*a*c*a", "b"), ("c^2*a^2", "b*a"), ("c^3*a", "c*b"),
    ("c*a*c^2*a", "c*b"),
}

COSET_C2_GAP = GROUP_RULES | {
    ("H*a*b", "H*a"), ("H*a*c*a", "H*a*c"), ("H*a*c^2", "H*a"), ("H*a^2", "H*a"),
    ("H*b", "H*a"), ("H*c*a", "H*a*c"), ("H*c*b", "H*a*c"), ("H*c^2", "H"),
}

COSET_B_GAP = GROUP_RULES | {
    ("H*a", "H"), ("H*b", "H"), ("H*c*a", "H*c"), ("H*c*b", "H*c"), ("H*c^2", "H"),
}

GROUPOID_GAP = {
    ("b1*b3", "id"), ("b2*b5", "id"), ("b3*b1", "id"), ("b4*b6", "id"), ("b5*b2", "id"),
    ("b6*b4", "id"), ("a1*a2*a4", "id"), ("a1*a2*b4", "b1*a3"), ("a1*b2*a5", "b1"),
    ("a2*a4*a1", "id"), ("a2*a4*b1", "b2*a5"), ("a2*b4*a6", "b2"), ("a3*a6*a5", "id"),
    ("a3*a6*b5", "b3*a1"), ("a3*b6*a4", "b3"), ("a4*a1*a2", "id"), ("a4*a1*b2", "b4*a6"),
    ("a4*b1*a3", "b4"), ("a5*a3*a6", "id"), ("a5*a3*b6", "b5*a2"), ("a5*b3*a1", "b5"),
    ("a6*a5*a3", "id"), ("a6*a5*b3", "b6*a4"), ("a6*b5*a2", "b6"), ("b1*a3*a6", "a1*b2"),
    ("b1*a3*b6", "a1*a2"), ("b2*a5*a3", "a2*b4"), ("b2*a5*b3", "a2*a4"),
    ("b3*a1*a2", "a3*b6"), ("b3*a1*b2", "a3*a6"), ("b4*a6*a5", "a4*b1"),
    ("b4*a6*b5", "a4*a1"), ("b5*a2*a4", "a5*b3"), ("b5*a2*b4", "a5*a3"),
    ("b6*a4*a1", "a6*b5"), ("b6*a4*b1", "a6*a5"),
}

KB_REGEXES = {
    # two displayed forms of each language; both are checked
    "B1": ["(x1+x2+x3)(b5(b3b4*b5)*b3b4*+id)", "(x1+x2+x3)(b5b3(b4+b5b3)*+id)"],
    "B2": ["(x1+x2+x3)b5(b3b4*b5)*b3b4*b1+(y1+y2)",
           "(x1+x2+x3)b5b3(b4+b5b3)*b1+(y1+y2)"],
    "B3": ["(x1+x2+x3)b5(b3b4*b5)*(b3b4*b1b2+id)+(y1+y2)b2",
           "(x1+x2+x3)(b5b3(b4+b5b3)*(b1b2+b5)+b5)+(y1+y2)b2"],
}

MOORE_FORMS = {
    "x1|id", "x2|id", "x3|id", "y1|id", "y2|id", "x1|b1", "x2|b1", "x3|b1", "x1|b1*b2",
    "x2|b1*b2", "x3|b1*b2", "x1|b1*b2*b5", "x2|b1*b2*b5", "x3|b1*b2*b5",
}


def _example() -> kan.MixedRewriteSystem:
    return kan.complete_kan(kan.initial_rules(kan.kan_from_json(load("kan_example.json"))))


def test_criterion_01_kan_example():
    pres = kan.kan_from_json(load("kan_example.json"))
    init = kan.initial_rules(pres)
    R = kan.complete_kan(init)
    added = kan_pairs(R) - kan_pairs(init)
    _check(1, "5 epsilon-rules + 1 K-rule; 9 completed rules equal the GAP listing", {
        "5 epsilon-rules": len(init.t_rules) == 5,
        "1 K-rule": len(init.p_rules) == 1,
        "complete": R.complete,
        "9 rules": len(R) == 9,
        "rule set": kan_pairs(R) == KAN_EXAMPLE_GAP,
        "three b4 rules added": added == {("x1*b4", "x1"), ("x2*b4", "x2"), ("x3*b4", "x1")},
    })


def test_criterion_02_coset_example():
    c2 = coset_system("c^2")
    b = coset_system("b")
    reps = [str(t) for t in kan.enumerate_kan(b).elements()]
    _check(2, "32 rules for <c^2>, 29 rules and cosets {H, Hc} for <b>", {
        "32 rules": len(c2) == 32,
        "<c^2> rule set": kan_pairs(c2) == COSET_C2_GAP,
        "29 rules": len(b) == 29,
        "<b> rule set": kan_pairs(b) == COSET_B_GAP,
        "2 representatives": reps == ["H|id", "H|c"],
    })


def test_criterion_03_covering_groupoid():
    group = pr.group_presentation(["x", "y"], [pr.parse_fg_word(w) for w in ("x^3", "y^2", "x*y*x*y")])
    cayley = mc.build_cayley(group)
    cover = mc.covering_groupoid(cayley, [("x",) * 3, ("y",) * 2, ("x", "y", "x", "y")],
                                 {"x": "a", "y": "b"})
    done = pr.complete_presentation(cover)
    rules = {(pr.format_word(r.lhs.arrows), pr.format_word(r.rhs.arrows)) for r in done.rules}
    census = pr.enumerate_elements(done.rules, cover.graph)
    ids = sum(1 for w in census.all() if not w.arrows)
    _check(3, "36 rules equal to the GAP listing; 6 identities + 30 arrows", {
        "18 relators": len(cover.relations) == 18,
        "36 rules": len(done.rules) == 36,
        "rule set": rules == GROUPOID_GAP,
        "6 identities": ids == 6,
        "30 arrows": census.count - ids == 30,
        "finite": not census.overflow,
    })


def test_criterion_04_orbits_and_conjugacy():
    orb = kan.complete_kan(kan.initial_rules(kan.build_special_case("orbit", load("orbit_s3.json"))))
    q8 = kan.build_special_case("conjugacy", load("conjugacy_q8.json"))
    init = kan.initial_rules(q8)
    conj = kan.complete_kan(init)
    _check(4, "S3 orbits {v, y}; Q8 conjugacy rules and 5 classes", {
        "orbit rules": kan_pairs(orb) == {("w", "v"), ("x", "v"), ("z", "y")},
        "orbit reps": [str(t) for t in kan.enumerate_kan(orb).elements()] == ["v|id", "y|id"],
        "16 epsilon-rules": len(init) == 16,
        "conjugacy rules": kan_pairs(conj) == {("a^3", "a"), ("a^2*b", "b"), ("b*a", "a*b")},
        "5 classes": [t.tag for t in kan.enumerate_kan(conj).elements()]
        == ["id", "a", "b", "a^2", "a*b"],
    })


def test_criterion_05_coequaliser():
    R = kan.complete_kan(kan.initial_rules(kan.build_special_case("colimit", load("coequaliser.json"))))
    _check(5, "4 rules; K = {x1, x3, y4}", {
        "4 rules": len(R) == 4,
        "rules": kan_pairs(R) == {("y1", "x1"), ("y2", "x1"), ("y3", "x3"), ("x2", "x1")},
        "set": [str(t) for t in kan.enumerate_kan(R).elements()] == ["x1|id", "x3|id", "y4|id"],
    })


def _kb_regex_agreement() -> dict[str, bool]:
    R = _example()
    dfa = au.kan_acceptor(R)
    alphabet = R.pres.tags + R.pres.graphB.labels
    out = {}
    for b, texts in KB_REGEXES.items():
        got = au.regex_for_object(dfa, R.pres, b)
        for k, text in enumerate(texts):
            out[f"KB {b} form {k + 1}"] = au.languages_agree(
                got, au.parse_regex(text, alphabet), alphabet, 8) is None
    return out


def _coset_regex_agreement() -> tuple[bool, str]:
    R = coset_system("c^2")
    dfa = au.kan_acceptor(R)
    alphabet = R.pres.tags + R.pres.graphB.labels
    got = au.regex_for_object(dfa, R.pres, "B")
    claimed = au.parse_regex("H(a*+c+ac)", alphabet)
    witness = au.languages_agree(got, claimed, alphabet, 8)
    return witness is None, au.format_regex(got)


def test_criterion_06_regular_expressions():
    kb = _kb_regex_agreement()
    coset_ok, coset_regex = _coset_regex_agreement()
    conditions = dict(kb)
    conditions["coset a*+c+ac"] = coset_ok
    bad = [k for k, v in conditions.items() if not v]
    detail = ("KB1, KB2, KB3 agree up to length 8; coset regex computed as "
              f"{coset_regex}, which is the finite set {{id, a, c, ac}} forced by the rule "
              "H*a^2 -> H*a of the 32-rule listing (see notes/decisions.md)")
    _record(6, not bad, detail if not bad else f"{detail}; failed: {', '.join(bad)}")
    # The KB parts must hold.  The coset part is known to be unattainable.
    assert all(kb.values())
    if not coset_ok:
        pytest.xfail("coset regex a*+c+ac contradicts the 32-rule system it is derived from")


def test_criterion_07_moore_machine():
    pres = kan.kan_from_json(load("moore_example.json"))
    R = kan.complete_kan(kan.initial_rules(pres))
    m = mc.build_moore(R)
    forms = {str(o) for o in m.output.values() if o != 0}
    zeros = {s for s, o in m.output.items() if o == 0}
    rng = random.Random(7)
    agree = 0
    for _ in range(500):
        t = random_term(rng, pres)
        agree += mc.run_moore(m, t) == kan.reduce_term(t, R)
    _check(7, f"16 states, 14 normal forms, run_moore = reduce_term on {agree}/500 terms", {
        "initial system complete": len(kan.initial_rules(pres)) == len(R) == 8,
        "16 states": len(m.states) == 16,
        "outputs": forms == MOORE_FORMS,
        "0 at s0 and d": zeros == {"s0", "d"},
        "agreement": agree == 500,
    })


def test_criterion_08_cayley_d8():
    group = pr.group_presentation(["a", "b"], [pr.parse_fg_word(w) for w in ("a^4", "b^2", "a*b*a*b")])
    g = mc.build_cayley(group)
    nf = mc.cayley_normal_form(g, pr.parse_fg_word("a*b*a^3*b"))
    _check(8, "D8 labels and N(aba^3b) = a^2", {
        "labels": g.labels == ["id", "a", "b", "a^2", "a*b", "b*a", "a^3", "a^2*b"],
        "normal form": nf == ("a", "a"),
    })


def test_criterion_09_hecke_algebra():
    from fractions import Fraction as Q
    gens = ["e1", "e2"]
    P = [nc.parse_poly(s, gens) for s in load("hecke.json")["polynomials"]]
    red = nc.reduce_poly(nc.parse_poly("e1*e2*e1*e2*e1", gens), P)
    expected = nc.NcPolynomial.of([(Q(7, 9), ("e1", "e2", "e1")), (Q(2, 9), ("e1",))], gens)
    gb = nc.buchberger(P)
    dim = nc.algebra_dimension(gb)
    _check(9, "7/9 e1e2e1 + 2/9 e1; dimension 6; P is already a Groebner basis", {
        "reduction": red == expected,
        "exact rationals": all(isinstance(c, Q) for c, _ in red.terms),
        "dimension 6": dim.dimension == 6,
        "monomials": [pr.format_word(m) for m in dim.monomials]
        == ["id", "e1", "e2", "e1*e2", "e2*e1", "e1*e2*e1"],
        "buchberger(P) = P": gb.complete and set(gb.polys) == set(nc.interreduce_polys(P)),
    })


def test_criterion_10_infinite_algebra_acceptor():
    lead = [("a", "a", "a"), ("b", "a", "a", "b")]
    dfa, regex = au.build_monomial_acceptor(lead, ["a", "b"])
    displayed = au.parse_regex("(a^2b+ab+b)(ab+b)*(a^2+a+id)+(a^2+a)", "ab")
    with_id = au.alt(displayed, au.EPS)

    def no_factor(w):
        s = "".join(w)
        return "aaa" not in s and "baab" not in s

    gaps = [w for w in (au.languages_agree(regex, displayed, "ab", 8),) if w is not None]
    _check(10, "acceptance <=> no factor a^3 or ba^2b up to length 8; the displayed "
               "expression differs only by omitting the empty monomial (see notes/decisions.md)", {
        "factor oracle (regex)": au.languages_agree(regex, no_factor, "ab", 8) is None,
        "factor oracle (dfa)": au.languages_agree(dfa, no_factor, "ab", 8) is None,
        "displayed expression + id": au.languages_agree(regex, with_id, "ab", 8) is None,
        "only difference is id": gaps == [()],
    })


def test_criterion_11_eirs_q8():
    q8 = ir.group_ir(["a", "b"], load("q8_group.json")["relators"])
    init = ir.initial_eirs(q8)
    rules, ok = ir.kb2(init, q8)
    pairs = {r.pair() for r in rules}
    word = pr.parse_fg_word("a^5*b*a^3")
    c, z = ir.reduce_word2(word, rules, q8)
    _check(11, "six (lhs, rhs) pairs; witnesses hold; a^5ba^3 -> a^2b", {
        "4 initial triples": len(init) == 4,
        "complete": ok,
        "pairs": pairs == {("b^2", "a^2"), ("a*b*a", "b"), ("b*a^2", "a^2*b"),
                           ("b*a*b", "a"), ("a^4", "id"), ("a^3*b", "b*a")},
        "witnesses": all(ir.witness_holds(r, q8) for r in rules),
        "z = a^2b": z == (("a", 1), ("a", 1), ("b", 1)),
        "witness of a^5ba^3": pr.free_reduce(ir.boundary(c, q8) + z) == word,
    })


def test_criterion_12_eirs_s3():
    s3 = ir.group_ir(["x", "y"], load("s3_group.json")["relators"])
    rules, ok = ir.kb2(ir.initial_eirs(s3), s3)
    _check(12, "six (lhs, rhs) pairs; all witness equations hold", {
        "complete": ok,
        "pairs": {r.pair() for r in rules} == {("y^2", "id"), ("x^3", "id"), ("x^2*y", "y*x"),
                                                ("x*y*x", "y"), ("y*x^2", "x*y"), ("y*x*y", "x^2")},
        "witnesses": all(ir.witness_holds(r, s3) for r in rules),
    })


def test_criterion_13_identities():
    s3 = ir.idrel(ir.group_ir(["x", "y"], load("s3_group.json")["relators"]))
    q8 = ir.idrel(ir.group_ir(["a", "b"], load("q8_group.json")["relators"]))
    _check(13, "S3: 18 records, Q8: 32 records, every boundary trivial", {
        "S3 count": len(s3.identities) == 18,
        "S3 boundaries": all(not ir.boundary(r.sequence, s3.data.pres) for r in s3.identities),
        "S3 isIdsRecord": s3.to_json()["isIdsRecord"] is True,
        "Q8 count": len(q8.identities) == 32,
        "Q8 boundaries": all(not ir.boundary(r.sequence, q8.data.pres) for r in q8.identities),
    })


def _confluence_and_strategy() -> dict[str, bool]:
    systems = {"kan example": _example(), "coset <c^2>": coset_system("c^2"),
               "coset <b>": coset_system("b")}
    out = {}
    rng = random.Random(14)
    for name, R in systems.items():
        out[f"(a) {name}"] = not pr.unresolved_pairs(R.encoded())
        same = all(kan.reduce_term(t, R) == kan.reduce_term(t, R, rightmost=True)
                   for t in (random_term(rng, R.pres, 12) for _ in range(1000)))
        out[f"(b) {name}"] = same
    for name, rels in (("S3", ["x^3", "y^2", "x*y*x*y"]), ("D8", ["a^4", "b^2", "a*b*a*b"])):
        gens = sorted({x for w in rels for x, _ in pr.parse_fg_word(w)})
        done = pr.complete_presentation(pr.group_presentation(gens, [pr.parse_fg_word(w) for w in rels]))
        alpha = done.graph.alphabet()
        enc = pr._encode_rules(done.rules, alpha)
        out[f"(a) {name}"] = not pr.unresolved_pairs(enc)
        words = ["".join(rng.choice(alpha.encode(gens)) for _ in range(rng.randint(0, 15)))
                 for _ in range(1000)]
        out[f"(b) {name}"] = all(pr.rewrite(w, enc) == pr.rewrite(w, enc, rightmost=True)
                                 for w in words)
    return out


def _regex_irreducibility(count: int = 5) -> dict[str, bool]:
    rng = random.Random(2024)
    out = {}
    found = 0
    while found < count:
        pres = random_kan(rng)
        R = kan.complete_kan(kan.initial_rules(pres), pr.CompletionBudget(60, 10))
        if not R.complete:
            continue
        found += 1
        dfa = au.kan_acceptor(R)
        alphabet = pres.tags + pres.graphB.labels
        rules = R.encoded()
        for b in pres.obB:
            def oracle(w, b=b):
                if not w or not pres.is_tag(w[0]) or any(pres.is_tag(x) for x in w[1:]):
                    return False
                try:
                    if pres.graphB.path_target(pres.tag_start(w[0]), w[1:]) != b:
                        return False
                except ValidationError:
                    return False
                return not pr.is_reducible(pres.alphabet.encode(w), rules)
            regex = au.regex_for_object(dfa, pres, b)
            out[f"(c) random {found} {b}"] = au.languages_agree(regex, oracle, alphabet, 6) is None
    return out


def _groebner_closure() -> dict[str, bool]:
    out = {}
    cases = {
        "hecke": (["e1", "e2"], load("hecke.json")["polynomials"]),
        "a^3, ba^2b": (["a", "b"], load("infinite_algebra.json")["polynomials"]),
        "a-b, b-c": (["c", "b", "a"], ["a - b", "b - c"]),
    }
    for name, (gens, texts) in cases.items():
        gb = nc.buchberger([nc.parse_poly(t, gens) for t in texts])
        polys = list(gb)
        out[f"(d) {name}"] = gb.complete and all(
            nc.reduce_poly(s, polys).is_zero()
            for f in polys for g in polys for s in nc.s_polynomials(f, g))
    return out


def _census_sizes(result: kan.KanResult) -> dict[str, int]:
    return {b: len(ts) for b, ts in result.census.items()}


def iterated_cases():
    """(first presentation, Lambda, RelC, G on objects, G on arrows)."""
    one = pr.GraphSpec(("C",), ())
    orbit = kan.build_special_case("orbit", load("orbit_s3.json"))
    yield "orbits then trivial", orbit, one, (), {"B": "C"}, {}

    # C2 acting on {p, q}, induced up to S3, then collapsed to the trivial group
    s3 = pr.GraphSpec(("B",), (pr.Arrow("s", "B", "B"), pr.Arrow("t", "B", "B")))
    rel = tuple(pr.PathRule(pr.PathWord("B", l), pr.PathWord("B", r)) for l, r in
                [(("s", "s"), ()), (("t", "t"), ()), (("s", "t") * 3, ())])
    induced = kan.KanPresentation(("A",), (("A", "A"),), s3, rel, ("B",), (("s",),),
                                  (("p", "q"),), (("q", "p"),))
    yield "induced then trivial", induced, one, (), {"B": "C"}, {"s": (), "t": ()}

    # normal forms of a two-object category, pushed onto the monoid {1, k}
    two = pr.GraphSpec(("B1", "B2"), (pr.Arrow("b", "B1", "B2"), pr.Arrow("c", "B2", "B2")))
    rel2 = (pr.PathRule(pr.PathWord("B2", ("c", "c")), pr.PathWord("B2", ())),)
    first = kan.KanPresentation(("A",), (), two, rel2, ("B1",), (), (("x",),), ())
    lam = pr.GraphSpec(("C",), (pr.Arrow("k", "C", "C"),))
    relC = (pr.PathRule(pr.PathWord("C", ("k", "k", "k")), pr.PathWord("C", ("k",))),)
    yield "category then monoid", first, lam, relC, {"B1": "C", "B2": "C"}, {"b": ("k",), "c": ("k",)}


def _iterated() -> dict[str, bool]:
    out = {}
    for name, pres, lam, relC, gob, garr in iterated_cases():
        first = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(pres)))
        two_stage = kan.compose_kan(first, lam, relC, gob, garr)
        one_stage = kan.compose_functor(pres, lam, relC, gob, garr)
        r2 = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(two_stage)))
        r1 = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(one_stage)))
        out[f"(e) {name}"] = (not first.overflow and not r1.overflow and not r2.overflow
                              and _census_sizes(r1) == _census_sizes(r2))
    return out


def _alpha_primary(total: int = 200) -> dict[str, bool]:
    rng = random.Random(99)
    data = ir.idrel(ir.group_ir(["x", "y"], load("s3_group.json")["relators"]))
    seps = [r.sequence for r in data.identities if r.sequence]
    agree = 0
    for k in range(total):
        if k % 2 == 0:
            a = ir.random_trivial_sequence(data.data, rng)
        else:
            a = ()
            for _ in range(rng.randint(1, 2)):
                s = rng.choice(seps)
                if rng.random() < 0.5:
                    s = ir.ys_invert(s)
                a = a + s
            for _ in range(3):
                if len(a) > 1:
                    a = ir.peiffer_exchange(a, rng.randrange(len(a) - 1), data.data.pres)
        agree += ir.primary_identity_check(a, data.data) == (not ir.alpha_map(a, data.data))
    return {"(f) alpha vs primary identity": agree == total}


def test_criterion_14_property_suites():
    conditions = {}
    conditions.update(_confluence_and_strategy())
    conditions.update(_regex_irreducibility())
    conditions.update(_groebner_closure())
    conditions.update(_iterated())
    conditions.update(_alpha_primary())
    _check(14, f"{len(conditions)} property checks over (a)-(f)", conditions)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            t()
        except BaseException:  # noqa: BLE001 - each criterion already printed its line
            pass
