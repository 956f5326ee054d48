from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from kanrw import kan
from kanrw import presentations as pr

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name: str) -> dict:
    with open(DATA / name, encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture
def data_dir() -> Path:
    return DATA


def kan_pairs(R: kan.MixedRewriteSystem) -> set[tuple[str, str]]:
    """Rules written the way GAP prints them: x1*b1, id for an empty side."""
    out = set()
    for r in R.t_rules:
        out.add((_gap_term(r.lhs), _gap_term(r.rhs)))
    for r in R.p_rules:
        out.add((pr.format_word(r.lhs), pr.format_word(r.rhs)))
    return out


def _gap_term(t: kan.TaggedTerm) -> str:
    return pr.format_word((t.tag,) + t.path)


def coset_system(subgroup: str, relation: str = "b^3*c") -> kan.MixedRewriteSystem:
    doc = load("coset_c2.json")
    doc["subgroup"] = [subgroup]
    doc["relations"] = [[relation, "a*b*c"] if l == "b^3*c" else [l, r]
                        for l, r in doc["relations"]]
    pres = kan.build_special_case("coset", doc)
    return kan.complete_kan(kan.initial_rules(pres))


def random_path(rng: random.Random, graph: pr.GraphSpec, start: str, length: int):
    path, obj = [], start
    for _ in range(length):
        out = [a for a in graph.arrows if a.src == obj]
        if not out:
            break
        a = rng.choice(out)
        path.append(a.label)
        obj = a.tgt
    return tuple(path)


def random_term(rng: random.Random, pres: kan.KanPresentation, max_len: int = 8):
    tag = rng.choice(pres.tags)
    return kan.TaggedTerm(tag, random_path(rng, pres.graphB, pres.tag_start(tag),
                                           rng.randint(0, max_len)))


def _paths_upto(graph: pr.GraphSpec, n: int):
    out = [(o, (), o) for o in graph.objects]
    frontier = list(out)
    for _ in range(n):
        nxt = []
        for s, p, t in frontier:
            for a in graph.arrows:
                if a.src == t:
                    nxt.append((s, p + (a.label,), a.tgt))
        out += nxt
        frontier = nxt
    return out


def random_kan(rng: random.Random) -> kan.KanPresentation:
    """A small random Kan presentation; may or may not complete."""
    obB = ("B1", "B2")
    arrows = []
    for k in range(rng.randint(2, 3)):
        arrows.append(pr.Arrow(f"b{k + 1}", rng.choice(obB), rng.choice(obB)))
    graph = pr.GraphSpec(obB, tuple(arrows))
    paths = [p for p in _paths_upto(graph, 3) if p[1]]
    rels = []
    for _ in range(rng.randint(0, 2)):
        s, p, t = rng.choice(paths)
        same = [q for q in _paths_upto(graph, 2) if q[0] == s and q[2] == t and q[1] != p]
        if same:
            q = rng.choice(same)[1]
            rels.append(pr.PathRule(pr.PathWord(s, p), pr.PathWord(s, q)))
    obA = ("A1", "A2")[: rng.randint(1, 2)]
    fOb = tuple(rng.choice(obB) for _ in obA)
    xOb = tuple(tuple(f"{o.lower()}{i}" for i in range(1, rng.randint(1, 2) + 1)) for o in ("x", "y")[: len(obA)])
    arrA, fArr, xArr = [], [], []
    for _ in range(rng.randint(1, 2)):
        i, j = rng.randrange(len(obA)), rng.randrange(len(obA))
        cands = [p for s, p, t in _paths_upto(graph, 2) if s == fOb[i] and t == fOb[j]]
        if not cands:
            continue
        arrA.append((obA[i], obA[j]))
        fArr.append(rng.choice(cands))
        xArr.append(tuple(rng.choice(xOb[j]) for _ in xOb[i]))
    return kan.KanPresentation(obA, tuple(arrA), graph, tuple(rels), fOb, tuple(fArr), xOb,
                               tuple(xArr))


def pytest_terminal_summary(terminalreporter):
    import sys

    acc = sys.modules.get("test_acceptance")
    lines = acc.summary_lines() if acc is not None else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
