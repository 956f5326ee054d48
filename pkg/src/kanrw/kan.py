"""Kan extensions of category actions by completion on tagged terms.

A presentation kan<Gamma|Delta|RelB|X|F> gives an action X of the category
generated by Gamma and a graph morphism F into the category presented by
(Delta, RelB).  Elements of the extension are represented by tagged terms
``x|p``: an element x of some X(A) followed by a path p of Delta starting at
F(A).  Two kinds of rule act on them: T-rules rewrite the tag together with a
prefix of the path, P-rules rewrite any factor of the path.

Internally a term is the word ``[x, b1, ..., bn]`` over the alphabet of tags
followed by the arrows of Delta.  Tags can only sit in first position, so a
T-rule lhs can only match at the front and the plain string engine handles
both kinds at once.  Length-lex on that alphabet is the term order: length
first, then the tag by declaration order, then the arrows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import presentations as pr
from .errors import ValidationError, ParseError
from .presentations import (Alphabet, Arrow, CompletionBudget, GraphSpec, PathRule,
                            PathWord, format_word)

__all__ = [
    "KanPresentation",
    "TaggedTerm",
    "TRule",
    "PRule",
    "MixedRewriteSystem",
    "CriticalPair",
    "KanResult",
    "validate_presentation",
    "initial_rules",
    "reduce_term",
    "find_overlaps",
    "complete_kan",
    "enumerate_kan",
    "build_special_case",
    "compose_kan",
    "compose_functor",
    "kan_from_json",
    "kan_to_json",
    "format_term",
]


@dataclass(frozen=True)
class KanPresentation:
    """The nine input lists of a Kan extension presentation.

    ``arrA`` holds (src, tgt) pairs of Gamma; ``fObA`` and ``fArrA`` are
    aligned with ``obA`` and ``arrA``; ``xObA[i]`` lists the elements of
    X(obA[i]) and ``xArrA[k][j]`` is the image of ``xObA[src][j]`` under
    arrow k.
    """

    obA: tuple[str, ...]
    arrA: tuple[tuple[str, str], ...]
    graphB: GraphSpec
    relB: tuple[PathRule, ...]
    fObA: tuple[str, ...]
    fArrA: tuple[tuple[str, ...], ...]
    xObA: tuple[tuple[str, ...], ...]
    xArrA: tuple[tuple[str, ...], ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "obA", tuple(self.obA))
        object.__setattr__(self, "arrA", tuple(tuple(a) for a in self.arrA))
        object.__setattr__(self, "relB", tuple(self.relB))
        object.__setattr__(self, "fObA", tuple(self.fObA))
        object.__setattr__(self, "fArrA", tuple(tuple(p) for p in self.fArrA))
        object.__setattr__(self, "xObA", tuple(tuple(x) for x in self.xObA))
        object.__setattr__(self, "xArrA", tuple(tuple(x) for x in self.xArrA))
        validate_presentation(self)
        tag_obj = {}
        for i, xs in enumerate(self.xObA):
            for x in xs:
                tag_obj[x] = i
        object.__setattr__(self, "_index", {
            "tag_obj": tag_obj,
            "alphabet": Alphabet(self.tags + self.graphB.labels),
        })

    @property
    def obB(self) -> tuple[str, ...]:
        return self.graphB.objects

    @property
    def arrB(self) -> tuple[Arrow, ...]:
        return self.graphB.arrows

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(x for xs in self.xObA for x in xs)

    @property
    def alphabet(self) -> Alphabet:
        return self._index["alphabet"]

    def tag_start(self, tag: str) -> str:
        """F(A) for the object A with tag in X(A)."""
        try:
            return self.fObA[self._index["tag_obj"][tag]]
        except KeyError:
            raise ValidationError(f"unknown element {tag!r}") from None

    def is_tag(self, letter: str) -> bool:
        return letter in self._index["tag_obj"]


def validate_presentation(p: KanPresentation) -> KanPresentation:
    """Check every structural invariant, naming the offending list index."""
    gB = p.graphB
    if len(p.fObA) != len(p.obA):
        raise ValidationError("F_objects must have one entry per object of Gamma")
    if len(p.xObA) != len(p.obA):
        raise ValidationError("X_objects must have one entry per object of Gamma")
    if len(p.fArrA) != len(p.arrA):
        raise ValidationError("F_arrows must have one entry per arrow of Gamma")
    if len(p.xArrA) != len(p.arrA):
        raise ValidationError("X_arrows must have one entry per arrow of Gamma")
    if len(set(p.obA)) != len(p.obA):
        raise ValidationError("duplicate objects in Gamma")
    for i, b in enumerate(p.fObA):
        if b not in gB.objects:
            raise ValidationError(f"F_objects[{i}]: {b!r} is not an object of Delta")
    seen: set[str] = set()
    for i, xs in enumerate(p.xObA):
        for x in xs:
            if x in seen:
                raise ValidationError(f"X_objects[{i}]: duplicate element {x!r}")
            if x in gB.labels:
                raise ValidationError(f"X_objects[{i}]: element {x!r} clashes with an arrow label")
            seen.add(x)
    ob_index = {a: i for i, a in enumerate(p.obA)}
    for k, (s, t) in enumerate(p.arrA):
        if s not in ob_index or t not in ob_index:
            raise ValidationError(f"arrows_A[{k}]: unknown object")
        fs, ft = p.fObA[ob_index[s]], p.fObA[ob_index[t]]
        try:
            end = gB.path_target(fs, p.fArrA[k])
        except ValidationError as exc:
            raise ValidationError(f"F_arrows[{k}]: {exc}") from None
        if end != ft:
            raise ValidationError(f"F_arrows[{k}]: path ends at {end!r}, expected {ft!r}")
        row, src_set, tgt_set = p.xArrA[k], p.xObA[ob_index[s]], set(p.xObA[ob_index[t]])
        if len(row) != len(src_set):
            raise ValidationError(
                f"X_arrows[{k}]: {len(row)} entries for {len(src_set)} elements")
        for j, y in enumerate(row):
            if y not in tgt_set:
                raise ValidationError(f"X_arrows[{k}][{j}]: {y!r} is not in X({t})")
    for k, rule in enumerate(p.relB):
        pr._check_rule(rule, gB, f"relations_B[{k}]")
    return p


@dataclass(frozen=True)
class TaggedTerm:
    tag: str
    path: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "path", tuple(self.path))

    def __str__(self) -> str:
        return format_term(self)

    def letters(self) -> tuple[str, ...]:
        return (self.tag,) + self.path

    def tau(self, pres: KanPresentation) -> str:
        return pres.graphB.path_target(pres.tag_start(self.tag), self.path)


def format_term(t: TaggedTerm) -> str:
    return f"{t.tag}|{format_word(t.path)}"


@dataclass(frozen=True)
class TRule:
    lhs: TaggedTerm
    rhs: TaggedTerm

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


@dataclass(frozen=True)
class PRule:
    lhs: tuple[str, ...]
    rhs: tuple[str, ...]

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {format_word(self.rhs)}"


@dataclass(frozen=True)
class MixedRewriteSystem:
    pres: KanPresentation
    t_rules: tuple[TRule, ...]
    p_rules: tuple[PRule, ...]
    complete: bool = False
    passes: int = 0

    def __len__(self) -> int:
        return len(self.t_rules) + len(self.p_rules)

    def encoded(self) -> list[pr.Rule]:
        """Oriented encoded rules with reflexive ones dropped."""
        alpha = self.pres.alphabet
        out = []
        for r in self.t_rules:
            a, b = alpha.encode(r.lhs.letters()), alpha.encode(r.rhs.letters())
            if a != b:
                out.append(pr.orient(a, b))
        for r in self.p_rules:
            a, b = alpha.encode(r.lhs), alpha.encode(r.rhs)
            if a != b:
                out.append(pr.orient(a, b))
        return out

    def pairs(self) -> list[tuple[str, str]]:
        """Printable (lhs, rhs) pairs, T-rules first."""
        return ([(str(r.lhs), str(r.rhs)) for r in self.t_rules]
                + [(format_word(r.lhs), format_word(r.rhs)) for r in self.p_rules])


def _from_encoded(pres: KanPresentation, rules: Iterable[pr.Rule], complete: bool,
                  passes: int = 0) -> MixedRewriteSystem:
    alpha = pres.alphabet
    t_rules, p_rules = [], []
    for lhs, rhs in rules:
        lw, rw = alpha.decode(lhs), alpha.decode(rhs)
        if lw and pres.is_tag(lw[0]):
            t_rules.append(TRule(TaggedTerm(lw[0], lw[1:]), TaggedTerm(rw[0], rw[1:])))
        else:
            p_rules.append(PRule(lw, rw))
    return MixedRewriteSystem(pres, tuple(t_rules), tuple(p_rules), complete, passes)


def initial_rules(pres: KanPresentation) -> MixedRewriteSystem:
    """One rule x|Fa -> x.a|id per arrow a and element x of X(src a), plus RelB.

    Rules are kept exactly as generated (not oriented, trivial ones kept) so
    the count is the sum of |X(src a)| plus |RelB|.
    """
    ob_index = {a: i for i, a in enumerate(pres.obA)}
    t_rules = []
    for k, (s, _) in enumerate(pres.arrA):
        for x, y in zip(pres.xObA[ob_index[s]], pres.xArrA[k]):
            t_rules.append(TRule(TaggedTerm(x, pres.fArrA[k]), TaggedTerm(y, ())))
    p_rules = [PRule(r.lhs.arrows, r.rhs.arrows) for r in pres.relB]
    return MixedRewriteSystem(pres, tuple(t_rules), tuple(p_rules), False)


def _check_term(t: TaggedTerm, pres: KanPresentation) -> None:
    t.tau(pres)


def reduce_term(t: TaggedTerm, R: MixedRewriteSystem, rightmost: bool = False) -> TaggedTerm:
    _check_term(t, R.pres)
    alpha = R.pres.alphabet
    w = alpha.decode(pr.rewrite(alpha.encode(t.letters()), R.encoded(), rightmost))
    return TaggedTerm(w[0], w[1:])


@dataclass(frozen=True)
class CriticalPair:
    """Two single-step reducts of one critical term; ``kind`` is i..v."""

    term: object
    left: object
    right: object
    kind: str


def _kind(is_t1: bool, is_t2: bool, how: str) -> str:
    if is_t1 and is_t2:
        return "i"
    if not is_t1 and not is_t2:
        return "ii" if how == "contain" else "iii"
    return "v" if how == "contain" else "iv"


def _decode_side(pres: KanPresentation, s: str):
    w = pres.alphabet.decode(s)
    if w and pres.is_tag(w[0]):
        return TaggedTerm(w[0], w[1:])
    return w


def find_overlaps(R: MixedRewriteSystem) -> list[CriticalPair]:
    """Every critical pair of the system, classified by overlap type.

    (i) T-T where one lhs extends the other, (ii) P-P containment,
    (iii) P-P boundary, (iv) T-P boundary, (v) T-P containment.
    """
    rules = R.encoded()
    pres = R.pres
    out = []
    for ov in pr.overlaps(rules):
        t1 = pres.is_tag(pres.alphabet.letter_of(rules[ov.i][0][0]))
        t2 = pres.is_tag(pres.alphabet.letter_of(rules[ov.j][0][0]))
        out.append(CriticalPair(_decode_side(pres, ov.term), _decode_side(pres, ov.left),
                                _decode_side(pres, ov.right), _kind(t1, t2, ov.kind)))
    return out


def complete_kan(R: MixedRewriteSystem, budget: CompletionBudget | None = None
                 ) -> MixedRewriteSystem:
    """Knuth-Bendix completion of the mixed system; check ``.complete``."""
    rules, ok, passes = pr.knuth_bendix(R.encoded(), budget)
    return _from_encoded(R.pres, rules, ok, passes)


@dataclass
class KanResult:
    """Census of normal forms grouped by object of Delta, with the action."""

    system: MixedRewriteSystem
    census: dict[str, list[TaggedTerm]]
    action: dict[tuple[TaggedTerm, str], TaggedTerm]
    epsilon: dict[str, TaggedTerm]
    overflow: bool
    count: int

    def elements(self) -> list[TaggedTerm]:
        return [t for ts in self.census.values() for t in ts]


def enumerate_kan(R: MixedRewriteSystem, limit: int = 1000) -> KanResult:
    """Length-stratified census of irreducible terms.

    On overflow the partial census is returned with ``overflow`` set and the
    action and epsilon tables left empty.
    """
    pres = R.pres
    alpha = pres.alphabet
    rules = R.encoded()
    census: dict[str, list[TaggedTerm]] = {b: [] for b in pres.obB}
    count = 0
    block = []
    overflow = False
    for x in pres.tags:
        s = alpha.encode((x,))
        if pr.is_reducible(s, rules):
            continue
        if count >= limit:
            overflow = True
            break
        b = pres.tag_start(x)
        census[b].append(TaggedTerm(x))
        count += 1
        block.append((s, b))
    while block and not overflow:
        nxt = []
        for s, b in block:
            for a in pres.arrB:
                if a.src != b:
                    continue
                t = s + alpha.encode((a.label,))
                if any(t.endswith(lhs) for lhs, _ in rules):
                    continue
                if count >= limit:
                    overflow = True
                    break
                w = alpha.decode(t)
                census[a.tgt].append(TaggedTerm(w[0], w[1:]))
                count += 1
                nxt.append((t, a.tgt))
            if overflow:
                break
        block = nxt
    action: dict = {}
    epsilon: dict = {}
    if not overflow:
        for x in pres.tags:
            epsilon[x] = reduce_term(TaggedTerm(x), R)
        for ts in census.values():
            for t in ts:
                b = t.tau(pres)
                for a in pres.arrB:
                    if a.src == b:
                        action[(t, a.label)] = reduce_term(TaggedTerm(t.tag, t.path + (a.label,)), R)
    return KanResult(R, census, action, epsilon, overflow, count)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def kan_from_json(doc: dict) -> KanPresentation:
    try:
        graphB = GraphSpec(tuple(doc["objects_B"]),
                           tuple(Arrow(a["label"], a["src"], a["tgt"]) if isinstance(a, dict)
                                 else Arrow(*a) for a in doc["arrows_B"]))
        rels = tuple(pr._relation_from_json(item, graphB, k)
                     for k, item in enumerate(doc.get("relations_B", [])))
        return KanPresentation(
            obA=tuple(doc["objects_A"]),
            arrA=tuple(tuple(a) for a in doc["arrows_A"]),
            graphB=graphB,
            relB=rels,
            fObA=tuple(doc["F_objects"]),
            fArrA=tuple(tuple(p) for p in doc["F_arrows"]),
            xObA=tuple(tuple(x) for x in doc["X_objects"]),
            xArrA=tuple(tuple(x) for x in doc["X_arrows"]),
        )
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed Kan presentation document: {exc!r}") from None


def kan_to_json(p: KanPresentation) -> dict:
    return {
        "objects_A": list(p.obA),
        "arrows_A": [list(a) for a in p.arrA],
        "objects_B": list(p.obB),
        "arrows_B": [{"label": a.label, "src": a.src, "tgt": a.tgt} for a in p.arrB],
        "relations_B": [{"lhs": list(r.lhs.arrows), "rhs": list(r.rhs.arrows), "at": r.lhs.source}
                        for r in p.relB],
        "F_objects": list(p.fObA),
        "F_arrows": [list(x) for x in p.fArrA],
        "X_objects": [list(x) for x in p.xObA],
        "X_arrows": [list(x) for x in p.xArrA],
    }


# ---------------------------------------------------------------------------
# Special cases
# ---------------------------------------------------------------------------


def _words(items) -> list[tuple[str, ...]]:
    out = []
    for w in items:
        out.append(pr.parse_word(w) if isinstance(w, str) else tuple(w))
    return out


def _one_object_graph(gens: Sequence[str], obj: str = "B") -> GraphSpec:
    return GraphSpec((obj,), tuple(Arrow(g, obj, obj) for g in gens))


def _relations(items, obj: str = "B") -> tuple[PathRule, ...]:
    out = []
    for lhs, rhs in items:
        l, r = _words([lhs, rhs])
        out.append(PathRule(PathWord(obj, l), PathWord(obj, r)))
    return tuple(out)


def _finite_elements(gens, rels, limit=10000):
    """Normal forms and a multiplication helper for a finite monoid."""
    pres = pr.monoid_presentation(gens, [tuple(_words(r)) for r in rels])
    done = pr.complete_presentation(pres)
    if not done.complete:
        raise ValidationError("group presentation did not complete")
    census = pr.enumerate_elements(done.rules, pres.graph, limit)
    if census.overflow:
        raise ValidationError("group is not finite within the enumeration limit")
    elems = [w.arrows for w in census.all()]
    alpha = pres.graph.alphabet()
    enc = pr._encode_rules(done.rules, alpha)

    def nf(word):
        return alpha.decode(pr.rewrite(alpha.encode(word), enc))

    return elems, nf


def build_special_case(kind: str, data: dict) -> KanPresentation:
    """Build the Kan presentation that solves a classical problem.

    Kinds: coset, congruence, orbit, conjugacy, equivalence, colimit,
    induced-action, monoid-normal-forms, category-normal-forms.  See the
    README for the shape of ``data`` in each case.
    """
    kind = kind.replace("_", "-")
    if kind in ("coset", "congruence"):
        gens = list(data["generators"])
        sub = _words(data["subgroup"])
        tag = data.get("tag", "H")
        return KanPresentation(
            obA=("A",), arrA=tuple(("A", "A") for _ in sub),
            graphB=_one_object_graph(gens), relB=_relations(data.get("relations", [])),
            fObA=("B",), fArrA=tuple(sub), xObA=((tag,),), xArrA=tuple((tag,) for _ in sub))
    if kind == "monoid-normal-forms":
        tag = data.get("tag", "e")
        return KanPresentation(
            obA=("A",), arrA=(), graphB=_one_object_graph(data["generators"]),
            relB=_relations(data.get("relations", [])), fObA=("B",), fArrA=(),
            xObA=((tag,),), xArrA=())
    if kind == "category-normal-forms":
        cat: pr.CategoryPresentation = data["presentation"]
        objs = cat.graph.objects
        tags = data.get("tags") or [f"e_{o}" for o in objs]
        return KanPresentation(
            obA=tuple(objs), arrA=(), graphB=cat.graph, relB=cat.relations,
            fObA=tuple(objs), fArrA=(), xObA=tuple((t,) for t in tags), xArrA=())
    if kind in ("orbit", "conjugacy"):
        if kind == "conjugacy":
            gens = list(data["generators"])
            elems, nf = _finite_elements(gens, data["relations"])
            names = [data.get("names", {}).get(e, format_word(e)) for e in elems]
            index = {e: i for i, e in enumerate(elems)}
            action = {}
            for g in gens:
                ginv = next(h for h in elems if nf((g,) + h) == ())
                action[g] = [names[index[nf(ginv + e + (g,))]] for e in elems]
            omega = names
        else:
            gens = list(data["generators"])
            omega = list(data["set"])
            action = {g: list(data["action"][g]) for g in gens}
        return KanPresentation(
            obA=("A",), arrA=tuple(("A", "A") for _ in gens),
            graphB=GraphSpec(("B",), ()), relB=(), fObA=("B",),
            fArrA=tuple(() for _ in gens), xObA=(tuple(omega),),
            xArrA=tuple(tuple(action[g]) for g in gens))
    if kind == "equivalence":
        omega = list(data["set"])
        pairs = [tuple(p) for p in data.get("pairs", [])]
        gens = list(data.get("generators", []))
        arrA, fArrA, xArrA = [], [], []
        for p, q in pairs:
            arrA.append((p, q))
            fArrA.append(())
            xArrA.append((q,))
        for g in gens:
            for p, q in zip(omega, data["action"][g]):
                arrA.append((p, q))
                fArrA.append((g,))
                xArrA.append((q,))
        return KanPresentation(
            obA=tuple(omega), arrA=tuple(arrA), graphB=_one_object_graph(gens),
            relB=_relations(data.get("relations", [])), fObA=tuple("B" for _ in omega),
            fArrA=tuple(fArrA), xObA=tuple((x,) for x in omega), xArrA=tuple(xArrA))
    if kind == "colimit":
        objs = list(data["objects"])
        arrs = [tuple(a) for a in data["arrows"]]
        return KanPresentation(
            obA=tuple(objs), arrA=tuple(arrs), graphB=GraphSpec(("B",), ()), relB=(),
            fObA=tuple("B" for _ in objs), fArrA=tuple(() for _ in arrs),
            xObA=tuple(tuple(s) for s in data["sets"]),
            xArrA=tuple(tuple(m) for m in data["maps"]))
    if kind == "induced-action":
        gens_a = list(data["generators_A"])
        omega = list(data["set"])
        fmap = {g: _words([w])[0] for g, w in data["F"].items()}
        return KanPresentation(
            obA=("A",), arrA=tuple(("A", "A") for _ in gens_a),
            graphB=_one_object_graph(data["generators_B"]),
            relB=_relations(data.get("relations_B", [])), fObA=("B",),
            fArrA=tuple(fmap[g] for g in gens_a), xObA=(tuple(omega),),
            xArrA=tuple(tuple(data["action"][g]) for g in gens_a))
    raise ValidationError(f"unknown special case {kind!r}")


# ---------------------------------------------------------------------------
# Iterated extensions
# ---------------------------------------------------------------------------


def _apply_g(path: Sequence[str], g_arrows: dict[str, Sequence[str]]) -> tuple[str, ...]:
    out: list[str] = []
    for a in path:
        out.extend(g_arrows[a])
    return tuple(out)


def compose_kan(first: KanResult, lam: GraphSpec, relC: Sequence[PathRule],
                g_objects: dict[str, str], g_arrows: dict[str, Sequence[str]]
                ) -> KanPresentation:
    """kan<Delta|Lambda|RelC|K|G> from a finite first-stage result K."""
    if first.overflow:
        raise ValidationError("composition needs a finite first-stage census")
    pres = first.system.pres
    gB = pres.graphB
    names = {t: str(t) for t in first.elements()}
    xObA = tuple(tuple(names[t] for t in first.census[b]) for b in gB.objects)
    xArrA = tuple(tuple(names[first.action[(t, a.label)]] for t in first.census[a.src])
                  for a in gB.arrows)
    return KanPresentation(
        obA=gB.objects, arrA=tuple((a.src, a.tgt) for a in gB.arrows), graphB=lam,
        relB=tuple(relC), fObA=tuple(g_objects[b] for b in gB.objects),
        fArrA=tuple(tuple(g_arrows[a.label]) for a in gB.arrows), xObA=xObA, xArrA=xArrA)


def compose_functor(pres: KanPresentation, lam: GraphSpec, relC: Sequence[PathRule],
                    g_objects: dict[str, str], g_arrows: dict[str, Sequence[str]]
                    ) -> KanPresentation:
    """kan<Gamma|Lambda|RelC|X|F.G>: the one-stage presentation."""
    return KanPresentation(
        obA=pres.obA, arrA=pres.arrA, graphB=lam, relB=tuple(relC),
        fObA=tuple(g_objects[b] for b in pres.fObA),
        fArrA=tuple(_apply_g(p, g_arrows) for p in pres.fArrA),
        xObA=pres.xObA, xArrA=pres.xArrA)
