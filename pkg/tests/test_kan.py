from __future__ import annotations

import random

import pytest

from kanrw import kan
from kanrw import presentations as pr
from kanrw.errors import ParseError, ValidationError

from conftest import coset_system, kan_pairs, load, random_kan, random_term


@pytest.fixture
def example():
    return kan.kan_from_json(load("kan_example.json"))


def test_presentation_properties(example):
    assert example.tags == ("x1", "x2", "x3", "y1", "y2")
    assert example.obB == ("B1", "B2", "B3")
    assert example.tag_start("y2") == "B2"
    assert example.is_tag("x1") and not example.is_tag("b1")
    assert example.alphabet.letters == example.tags + ("b1", "b2", "b3", "b4", "b5")


def test_json_round_trip(example):
    assert kan.kan_from_json(kan.kan_to_json(example)) == example


@pytest.mark.parametrize("field,value,fragment", [
    ("F_arrows", [["b2"], ["b2", "b3"]], "F"),
    ("X_arrows", [["y1", "y9", "y1"], ["x1", "x2"]], "y9"),
    ("X_arrows", [["y1", "y2"], ["x1", "x2"]], "entries"),
    ("F_objects", ["B1", "B9"], "B9"),
])
def test_validation_errors_name_the_problem(field, value, fragment):
    doc = load("kan_example.json")
    doc[field] = value
    with pytest.raises(ValidationError) as err:
        kan.kan_from_json(doc)
    assert fragment in str(err.value)


def test_malformed_document_is_a_parse_error():
    with pytest.raises(ParseError):
        kan.kan_from_json({"objects_A": []})


def test_tagged_term_helpers(example):
    t = kan.TaggedTerm("x1", ("b5", "b3"))
    assert str(t) == "x1|b5*b3"
    assert str(kan.TaggedTerm("y1")) == "y1|id"
    assert t.letters() == ("x1", "b5", "b3")
    assert t.tau(example) == "B1"


def test_reduce_term_example(example):
    R = kan.complete_kan(kan.initial_rules(example))
    t = kan.TaggedTerm("x3", ("b1", "b2", "b3", "b4"))
    # x3|b1b2b3b4 -> x3|b4b4 -> x1|b4 -> x1
    assert kan.reduce_term(t, R) == kan.TaggedTerm("x1")
    with pytest.raises(ValidationError):
        kan.reduce_term(kan.TaggedTerm("x1", ("b2",)), R)


def test_overlap_types_in_example(example):
    init = kan.initial_rules(example)
    pairs = kan.find_overlaps(kan.MixedRewriteSystem(example, init.t_rules, init.p_rules))
    assert pairs and {p.kind for p in pairs} <= {"i", "ii", "iii", "iv", "v"}


def test_overlap_kinds_cover_all_five():
    # Gamma one object, Delta one object with loops p, q; rules chosen so every type occurs
    graph = pr.GraphSpec(("B",), (pr.Arrow("p", "B", "B"), pr.Arrow("q", "B", "B")))
    rels = tuple(pr.PathRule(pr.PathWord("B", l), pr.PathWord("B", r)) for l, r in [
        (("p", "p", "q"), ("q",)), (("p", "q"), ("q", "p")), (("q", "p", "p"), ("q",))])
    pres = kan.KanPresentation(("A",), (("A", "A"), ("A", "A")), graph, rels, ("B",),
                               (("p",), ("p", "q", "p")), (("s", "t"),), (("t", "s"), ("s", "t")))
    kinds = {p.kind for p in kan.find_overlaps(kan.initial_rules(pres))}
    assert {"i", "ii", "iii", "iv", "v"} <= kinds
    two_t = kan.KanPresentation(("A",), (("A", "A"), ("A", "A")), graph, (), ("B",),
                                (("p",), ("p",)), (("s", "t"),), (("t", "s"), ("s", "s")))
    assert "i" in {p.kind for p in kan.find_overlaps(kan.initial_rules(two_t))}


def test_completion_resolves_every_critical_pair(example):
    R = kan.complete_kan(kan.initial_rules(example))
    assert R.complete
    for p in kan.find_overlaps(R):
        assert kan.reduce_term(p.left, R) == kan.reduce_term(p.right, R)


def test_enumeration_overflow_keeps_partial_census(example):
    R = kan.complete_kan(kan.initial_rules(example))
    res = kan.enumerate_kan(R, limit=50)
    assert res.overflow and res.count == 50
    assert res.action == {} and res.epsilon == {}


def test_coset_systems_and_cosets():
    c2 = coset_system("c^2")
    res = kan.enumerate_kan(c2)
    assert [str(t) for t in res.elements()] == ["H|id", "H|a", "H|c", "H|a*c"]
    # right action on cosets: Hc . c = H, Ha . a = Ha
    assert res.action[(kan.TaggedTerm("H", ("c",)), "c")] == kan.TaggedTerm("H")
    assert res.action[(kan.TaggedTerm("H", ("a",)), "a")] == kan.TaggedTerm("H", ("a",))


def test_printed_coset_relation_is_pinned():
    c2 = coset_system("c^2", relation="c^3*b")
    b = coset_system("b", relation="c^3*b")
    assert (len(c2), len(b)) == (31, 28)
    assert len(kan.enumerate_kan(c2).elements()) == 4
    assert [str(t) for t in kan.enumerate_kan(b).elements()] == ["H|id", "H|c"]


def test_special_cases():
    mono = kan.build_special_case("monoid-normal-forms", {
        "generators": ["a"], "relations": [["a^3", "a"]]})
    res = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(mono)))
    assert [str(t) for t in res.elements()] == ["e|id", "e|a", "e|a^2"]

    induced = kan.build_special_case("induced-action", {
        "generators_A": ["g"], "set": ["p", "q"], "action": {"g": ["q", "p"]},
        "generators_B": ["s"], "relations_B": [["s^4", "id"]], "F": {"g": "s^2"}})
    res = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(induced)))
    assert res.count == 4  # index 2 subgroup, free orbit of size 2

    eq = kan.build_special_case("equivalence", {
        "set": ["u", "v", "w"], "pairs": [["u", "w"]]})
    res = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(eq)))
    assert [str(t) for t in res.elements()] == ["u|id", "v|id"]

    cat = kan.build_special_case("category-normal-forms", {
        "presentation": pr.presentation_from_json({
            "objects": ["P"], "arrows": [{"label": "f", "src": "P", "tgt": "P"}],
            "relations": [[["f", "f"], []]]})})
    res = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(cat)))
    assert [str(t) for t in res.elements()] == ["e_P|id", "e_P|f"]

    with pytest.raises(ValidationError):
        kan.build_special_case("nonsense", {})


def test_conjugacy_action_is_conjugation():
    pres = kan.build_special_case("conjugacy", load("conjugacy_q8.json"))
    assert pres.xObA[0] == ("id", "a", "b", "a^2", "a*b", "b*a", "a^3", "a^2*b")
    # b^-1 a b = a^3 in Q8
    k = pres.xObA[0].index("a")
    assert pres.xArrA[1][k] == "a^3"


def test_leftmost_and_rightmost_agree_on_random_systems():
    rng = random.Random(11)
    done = 0
    while done < 5:
        pres = random_kan(rng)
        R = kan.complete_kan(kan.initial_rules(pres), pr.CompletionBudget(60, 10))
        if not R.complete:
            continue
        done += 1
        for _ in range(200):
            t = random_term(rng, pres, 10)
            assert kan.reduce_term(t, R) == kan.reduce_term(t, R, rightmost=True)


def test_compose_rejects_overflowing_first_stage(example):
    R = kan.complete_kan(kan.initial_rules(example))
    res = kan.enumerate_kan(R, limit=10)
    with pytest.raises(ValidationError):
        kan.compose_kan(res, pr.GraphSpec(("C",), ()), (), {b: "C" for b in example.obB},
                        {a: () for a in example.graphB.labels})


def test_compose_functor_maps_paths(example):
    lam = pr.GraphSpec(("C",), (pr.Arrow("k", "C", "C"),))
    g = {"b1": ("k",), "b2": (), "b3": ("k", "k"), "b4": (), "b5": ()}
    one = kan.compose_functor(example, lam, (), {b: "C" for b in example.obB}, g)
    assert one.fArrA == (("k",), ("k", "k"))
    assert one.xArrA == example.xArrA


def test_initial_rules_count_matches_sizes(example):
    R = kan.initial_rules(example)
    assert len(R.t_rules) == sum(len(example.xObA[example.obA.index(s)]) for s, _ in example.arrA)
    assert kan_pairs(R) >= {("x1*b1", "y1"), ("y2*b2*b3", "x2"), ("b1*b2*b3", "b4")}
