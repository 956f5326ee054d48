"""Reduction machines: Moore machines for finite Kan extensions, Cayley graphs for groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import presentations as pr
from .errors import ValidationError
from .kan import KanResult, MixedRewriteSystem, TaggedTerm, enumerate_kan, reduce_term
from .presentations import (Arrow, CategoryPresentation, FGWord, GraphSpec, PathRule,
                            PathWord, format_word)

__all__ = [
    "MooreMachine",
    "build_moore",
    "run_moore",
    "CayleyGraph",
    "build_cayley",
    "cayley_normal_form",
    "covering_groupoid",
    "moore_to_dot",
    "cayley_to_dot",
]

START = "s0"
DUMP = "d"


@dataclass(frozen=True)
class MooreMachine:
    """Moore machine whose output at a class is its normal form.

    ``states`` lists s0, the census normal forms and d; the transition table
    is total.  Output 0 marks s0 and d.
    """

    states: tuple
    alphabet: tuple
    transitions: dict  # (state, letter) -> state
    output: dict  # state -> TaggedTerm | 0

    def nontrivial(self) -> list[tuple]:
        """Transitions that do not end in the dump state."""
        return [(s, a, self.transitions[(s, a)]) for s in self.states for a in self.alphabet
                if self.transitions[(s, a)] != DUMP]

    def to_json(self) -> dict:
        name = _state_name
        return {
            "states": [name(s) for s in self.states],
            "alphabet": list(self.alphabet),
            "transitions": [[name(s), a, name(t)] for s, a, t in self.nontrivial()],
            "output": {name(s): (0 if o == 0 else str(o)) for s, o in self.output.items()},
        }


def _state_name(s) -> str:
    return s if isinstance(s, str) else str(s)


def build_moore(R: MixedRewriteSystem, limit: int = 1000) -> MooreMachine:
    """Machine with one state per normal form, plus s0 and the dump d."""
    result: KanResult = enumerate_kan(R, limit)
    if result.overflow:
        raise ValidationError("the Kan extension is not finite within the enumeration limit")
    pres = R.pres
    forms = result.elements()
    states = (START,) + tuple(forms) + (DUMP,)
    alphabet = pres.tags + pres.graphB.labels
    trans = {}
    for s in states:
        for x in pres.tags:
            trans[(s, x)] = result.epsilon[x] if s == START else DUMP
        for a in pres.arrB:
            if isinstance(s, TaggedTerm) and s.tau(pres) == a.src:
                trans[(s, a.label)] = result.action[(s, a.label)]
            else:
                trans[(s, a.label)] = DUMP
    output = {s: (s if isinstance(s, TaggedTerm) else 0) for s in states}
    return MooreMachine(states, alphabet, trans, output)


def run_moore(m: MooreMachine, word) -> TaggedTerm | int:
    """Feed a term (or its letter sequence) and return the output of the last state."""
    letters = word.letters() if isinstance(word, TaggedTerm) else tuple(word)
    s = START
    for a in letters:
        try:
            s = m.transitions[(s, a)]
        except KeyError:
            return 0
    return m.output[s]


def moore_to_dot(m: MooreMachine) -> str:
    ids = {s: f"q{i}" for i, s in enumerate(m.states)}
    lines = ["digraph moore {", "  rankdir=LR;"]
    for s in m.states:
        out = m.output[s]
        lines.append(f'  {ids[s]} [label="{_state_name(s)} / {0 if out == 0 else out}"];')
    for s, a, t in m.nontrivial():
        lines.append(f'  {ids[s]} -> {ids[t]} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Cayley graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CayleyGraph:
    """Cayley graph of a finite group with a lenlex spanning tree.

    Vertices are normal forms (tuples of generators) in lenlex order;
    ``edges[(g, x)]`` is the vertex g.x and ``tree`` holds the edges of the
    spanning tree, each as ``(g, x)``.
    """

    generators: tuple[str, ...]
    vertices: tuple[tuple[str, ...], ...]
    edges: dict
    tree: frozenset

    @property
    def labels(self) -> list[str]:
        return [format_word(v) for v in self.vertices]

    def in_edge(self, v, x):
        """The unique g with g.x = v."""
        return self._inverse[(v, x)]

    def __post_init__(self):
        inv = {}
        for (g, x), h in self.edges.items():
            inv[(h, x)] = g
        object.__setattr__(self, "_inverse", inv)

    def order(self, x: str) -> int:
        v, n = self.edges[((), x)], 1
        while v != ():
            v, n = self.edges[(v, x)], n + 1
        return n

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "vertices": self.labels,
            "edges": [[format_word(g), x, format_word(h)] for (g, x), h in self.edges.items()],
            "tree": [[format_word(g), x] for g, x in sorted(self.tree, key=lambda e: (
                pr.lenlex_key("".join(chr(0x4E00 + self.generators.index(c)) for c in e[0])),
                self.generators.index(e[1])))],
        }


def build_cayley(group: CategoryPresentation, rules: Sequence[PathRule] | None = None,
                 limit: int = 1000) -> CayleyGraph:
    """Cayley graph of a one-object presentation of a finite group.

    ``rules`` is a complete system for ``group``; it is computed when
    omitted.  The tree is grown breadth first: vertices in lenlex order,
    generators in declaration order, keeping an edge only if it reaches a
    vertex not yet in the tree.
    """
    graph = group.graph
    if len(graph.objects) != 1:
        raise ValidationError("a Cayley graph needs a one-object presentation")
    if rules is None:
        done = pr.complete_presentation(group)
        if not done.complete:
            raise ValidationError("group presentation did not complete")
        rules = done.rules
    census = pr.enumerate_elements(rules, graph, limit)
    if census.overflow:
        raise ValidationError("the group is not finite within the enumeration limit")
    alpha = graph.alphabet()
    enc = pr._encode_rules(rules, alpha)
    gens = graph.labels
    vertices = tuple(w.arrows for w in census.all())
    edges = {}
    for g in vertices:
        for x in gens:
            edges[(g, x)] = alpha.decode(pr.rewrite(alpha.encode(g + (x,)), enc))
    reached = {()}
    tree = set()
    queue = deque([()])
    while queue:
        g = queue.popleft()
        for x in gens:
            h = edges[(g, x)]
            if h not in reached:
                reached.add(h)
                tree.add((g, x))
                queue.append(h)
    if len(reached) != len(vertices):
        raise ValidationError("generators do not reach every element")
    return CayleyGraph(tuple(gens), vertices, edges, frozenset(tree))


def cayley_normal_form(g: CayleyGraph, word: FGWord, positive_powers: bool = False
                       ) -> tuple[str, ...]:
    """Follow ``word`` from id; inverse letters walk edges backwards.

    With ``positive_powers`` each x^-1 is read as x^(order(x)-1) instead.
    """
    v: tuple = ()
    for x, e in word:
        if x not in g.generators:
            raise ValidationError(f"unknown generator {x!r}")
        if e > 0:
            v = g.edges[(v, x)]
        elif positive_powers:
            for _ in range(g.order(x) - 1):
                v = g.edges[(v, x)]
        else:
            v = g.in_edge(v, x)
    return v


def cayley_to_dot(g: CayleyGraph) -> str:
    ids = {v: f"v{i}" for i, v in enumerate(g.vertices)}
    lines = ["digraph cayley {"]
    for v in g.vertices:
        lines.append(f'  {ids[v]} [label="{format_word(v)}"];')
    for (v, x), h in g.edges.items():
        style = ' style=bold' if (v, x) in g.tree else ""
        lines.append(f'  {ids[v]} -> {ids[h]} [label="{x}"{style}];')
    lines.append("}")
    return "\n".join(lines)


def covering_groupoid(g: CayleyGraph, relators: Sequence[Sequence[str]],
                      names: dict[str, str] | None = None) -> CategoryPresentation:
    """Category presentation of the universal covering groupoid.

    Objects are the group elements; arrow ``[v, x]`` is named
    ``names[x] + str(i)`` with i the 1-based position of v.  Each positive
    relator read from each vertex gives a rule ``cycle = id``.  Arrows are
    ordered generator by generator, so lenlex compares generator first.
    """
    names = names or {x: x for x in g.generators}
    obj = {v: format_word(v) for v in g.vertices}
    label = {}
    arrows = []
    for x in g.generators:
        for i, v in enumerate(g.vertices, 1):
            label[(v, x)] = f"{names[x]}{i}"
            arrows.append(Arrow(label[(v, x)], obj[v], obj[g.edges[(v, x)]]))
    graph = GraphSpec(tuple(obj[v] for v in g.vertices), tuple(arrows))
    rels = []
    for rel in relators:
        for v in g.vertices:
            cur, path = v, []
            for x in rel:
                path.append(label[(cur, x)])
                cur = g.edges[(cur, x)]
            if cur != v:
                raise ValidationError(f"{format_word(rel)} is not a relator")
            rels.append(PathRule(PathWord(obj[v], tuple(path)), PathWord(obj[v])))
    return CategoryPresentation(graph, tuple(rels))
