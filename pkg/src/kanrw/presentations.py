"""Graphs, typed paths, length-lex order and two-sided rewriting.

Everything that rewrites strings in this package goes through the small
engine at the top of this module.  Words over an arbitrary ordered alphabet
are encoded as Python strings with one character per letter, assigned in
alphabet order, so that ``(len(s), s)`` is exactly the length-lex key and
factor search is ``str.find``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .errors import BudgetExhausted, ParseError, ValidationError

__all__ = [
    "Alphabet",
    "Arrow",
    "GraphSpec",
    "PathWord",
    "PathRule",
    "CategoryPresentation",
    "CompletionBudget",
    "CompletedSystem",
    "Census",
    "lenlex_compare",
    "reduce_path",
    "complete_presentation",
    "normalize_system",
    "enumerate_elements",
    "path_critical_pairs",
    "monoid_presentation",
    "group_presentation",
    "free_reduce",
    "fg_inverse",
    "fg_mul",
    "parse_word",
    "parse_fg_word",
    "format_word",
    "format_fg_word",
    "presentation_from_json",
    "presentation_to_json",
]

_CODE_BASE = 0x4E00  # plenty of contiguous, non-surrogate code points


class Alphabet:
    """An ordered alphabet with a one-character-per-letter string encoding."""

    def __init__(self, letters: Iterable[Hashable]):
        self.letters = tuple(letters)
        if len(set(self.letters)) != len(self.letters):
            raise ValidationError(f"duplicate letters in alphabet {self.letters!r}")
        self._code = {x: chr(_CODE_BASE + i) for i, x in enumerate(self.letters)}
        self._rank = {x: i for i, x in enumerate(self.letters)}

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, letter) -> bool:
        return letter in self._code

    def rank(self, letter) -> int:
        return self._rank[letter]

    def encode(self, word: Iterable[Hashable]) -> str:
        try:
            return "".join(self._code[x] for x in word)
        except KeyError as exc:
            raise ValidationError(f"unknown letter {exc.args[0]!r}") from None

    def decode(self, s: str) -> tuple:
        return tuple(self.letters[ord(ch) - _CODE_BASE] for ch in s)

    def letter_of(self, ch: str):
        return self.letters[ord(ch) - _CODE_BASE]


def lenlex_key(s: str) -> tuple[int, str]:
    return (len(s), s)


# ---------------------------------------------------------------------------
# String rewriting engine on encoded words
# ---------------------------------------------------------------------------

Rule = tuple[str, str]


def orient(a: str, b: str) -> Rule:
    """Return the pair as a rule with the larger side on the left."""
    return (a, b) if lenlex_key(a) > lenlex_key(b) else (b, a)


def find_redex(s: str, rules: Sequence[Rule], rightmost: bool = False):
    """Locate one redex: ``(position, rule index)`` or ``None``.

    Leftmost picks the smallest start position, rightmost the largest; ties
    go to the earlier rule.
    """
    best = None
    for k, (lhs, _) in enumerate(rules):
        pos = s.rfind(lhs) if rightmost else s.find(lhs)
        if pos < 0:
            continue
        if best is None or (pos > best[0] if rightmost else pos < best[0]):
            best = (pos, k)
    return best


def rewrite(s: str, rules: Sequence[Rule], rightmost: bool = False) -> str:
    while True:
        hit = find_redex(s, rules, rightmost)
        if hit is None:
            return s
        pos, k = hit
        lhs, rhs = rules[k]
        s = s[:pos] + rhs + s[pos + len(lhs):]


def is_reducible(s: str, rules: Sequence[Rule]) -> bool:
    return any(lhs in s for lhs, _ in rules)


@dataclass(frozen=True)
class Overlap:
    """A critical term together with its two single-step reducts.

    ``kind`` is ``"contain"`` when the lhs of rule ``j`` is a factor of the
    lhs of rule ``i`` and ``"boundary"`` when a proper suffix of lhs ``i`` is
    a proper prefix of lhs ``j``.
    """

    i: int
    j: int
    kind: str
    offset: int
    term: str
    left: str
    right: str


def overlaps(rules: Sequence[Rule]) -> Iterator[Overlap]:
    """All overlaps between rule left-hand sides, in a fixed order."""
    n = len(rules)
    for i in range(n):
        l1, r1 = rules[i]
        for j in range(n):
            l2, r2 = rules[j]
            # containment: l2 is a factor of l1
            start = l1.find(l2)
            while start >= 0:
                if not (i == j and start == 0):
                    right = l1[:start] + r2 + l1[start + len(l2):]
                    yield Overlap(i, j, "contain", start, l1, r1, right)
                start = l1.find(l2, start + 1)
            # boundary: suffix of l1 equals prefix of l2, both proper
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    term = l1 + l2[k:]
                    yield Overlap(i, j, "boundary", len(l1) - k, term,
                                  r1 + l2[k:], l1[:-k] + r2)


def interreduce(rules: Iterable[Rule]) -> list[Rule]:
    """Remove rules implied by the others and reduce every right-hand side."""
    work: list[Rule] = []
    for a, b in rules:
        if a != b:
            r = orient(a, b)
            if r not in work:
                work.append(r)
    changed = True
    while changed:
        changed = False
        for idx, (lhs, rhs) in enumerate(work):
            others = work[:idx] + work[idx + 1:]
            if is_reducible(lhs, others):
                del work[idx]
                a, b = rewrite(lhs, others), rewrite(rhs, others)
                if a != b:
                    r = orient(a, b)
                    if r not in work:
                        work.append(r)
                changed = True
                break
            new_rhs = rewrite(rhs, work)
            if new_rhs != rhs:
                work[idx] = (lhs, new_rhs)
                changed = True
                break
    work.sort(key=lambda r: (lenlex_key(r[0]), lenlex_key(r[1])))
    return work


@dataclass(frozen=True)
class CompletionBudget:
    """Upper bounds for completion; both must be positive."""

    max_rules: int = 10000
    max_passes: int = 100

    def __post_init__(self):
        if self.max_rules <= 0 or self.max_passes <= 0:
            raise ValidationError("completion budget values must be positive")


def knuth_bendix(rules: Iterable[Rule], budget: CompletionBudget | None = None,
                 ) -> tuple[list[Rule], bool, int]:
    """Complete an encoded system under length-lex.

    Returns ``(rules, complete, passes)``.  Each pass resolves every critical
    pair of the current system, then the enlarged system is interreduced.
    """
    budget = budget or CompletionBudget()
    current = interreduce(rules)
    for passno in range(1, budget.max_passes + 1):
        added: list[Rule] = []
        for ov in overlaps(current):
            pool = current + added
            a, b = rewrite(ov.left, pool), rewrite(ov.right, pool)
            if a != b:
                added.append(orient(a, b))
                if len(current) + len(added) > budget.max_rules:
                    return interreduce(current + added), False, passno
        if not added:
            return current, True, passno
        current = interreduce(current + added)
    return current, False, budget.max_passes


def unresolved_pairs(rules: Sequence[Rule]) -> list[Overlap]:
    """Critical pairs whose reducts do not meet; empty iff locally confluent."""
    return [ov for ov in overlaps(rules)
            if rewrite(ov.left, rules) != rewrite(ov.right, rules)]


# ---------------------------------------------------------------------------
# Free group words (R0 relations x x^-1 = id = x^-1 x)
# ---------------------------------------------------------------------------

FGLetter = tuple[str, int]
FGWord = tuple[FGLetter, ...]


def free_reduce(w: Iterable[FGLetter]) -> FGWord:
    out: list[FGLetter] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def fg_inverse(w: Sequence[FGLetter]) -> FGWord:
    return tuple((g, -e) for g, e in reversed(w))


def fg_mul(*words: Sequence[FGLetter]) -> FGWord:
    acc: list[FGLetter] = []
    for w in words:
        acc.extend(w)
    return free_reduce(acc)


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)(?:\s*\^\s*(-?\d+))?\s*")


def parse_fg_word(text: str) -> FGWord:
    """Parse ``a*b^-1*c^3`` style words; ``id``, ``IdWord`` and ``""`` are empty."""
    text = text.strip()
    if text in ("", "id", "IdWord", "1"):
        return ()
    out: list[FGLetter] = []
    for part in text.split("*"):
        m = _TOKEN.fullmatch(part)
        if not m:
            raise ParseError(f"cannot parse word factor {part!r} in {text!r}")
        name, power = m.group(1), int(m.group(2) or 1)
        if power == 0:
            continue
        out.extend([(name, 1 if power > 0 else -1)] * abs(power))
    return tuple(out)


def parse_word(text: str) -> tuple[str, ...]:
    """Parse a positive word such as ``a^2*b``."""
    w = parse_fg_word(text)
    if any(e < 0 for _, e in w):
        raise ParseError(f"negative exponent in positive word {text!r}")
    return tuple(g for g, _ in w)


def _runs(letters: Sequence) -> list[tuple]:
    runs: list[list] = []
    for x in letters:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    return [tuple(r) for r in runs]


def format_word(word: Sequence[str], empty: str = "id") -> str:
    if not word:
        return empty
    return "*".join(g if n == 1 else f"{g}^{n}" for g, n in _runs(word))


def format_fg_word(word: Sequence[FGLetter], empty: str = "id") -> str:
    if not word:
        return empty
    parts = []
    for (g, e), n in _runs(word):
        p = n * e
        parts.append(g if p == 1 else f"{g}^{p}")
    return "*".join(parts)


# ---------------------------------------------------------------------------
# Graphs and typed paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arrow:
    label: str
    src: str
    tgt: str


@dataclass(frozen=True)
class GraphSpec:
    """Objects and labelled arrows; arrow order is the generator order."""

    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _by_label: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "arrows", tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows))
        if len(set(self.objects)) != len(self.objects):
            raise ValidationError("duplicate object identifiers")
        table = {}
        for k, a in enumerate(self.arrows):
            if a.label in table:
                raise ValidationError(f"duplicate arrow label {a.label!r} at index {k}")
            for end in (a.src, a.tgt):
                if end not in self.objects:
                    raise ValidationError(f"arrow {a.label!r} uses undeclared object {end!r}")
            table[a.label] = a
        object.__setattr__(self, "_by_label", table)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a.label for a in self.arrows)

    def arrow(self, label: str) -> Arrow:
        try:
            return self._by_label[label]
        except KeyError:
            raise ValidationError(f"unknown arrow label {label!r}") from None

    def path_target(self, source: str, arrows: Sequence[str]) -> str:
        """Target of a path, raising ``ValidationError`` if not composable."""
        if source not in self.objects:
            raise ValidationError(f"unknown object {source!r}")
        cur = source
        for lab in arrows:
            a = self.arrow(lab)
            if a.src != cur:
                raise ValidationError(
                    f"arrow {lab!r} starts at {a.src!r}, path is at {cur!r}")
            cur = a.tgt
        return cur

    def is_composable(self, source: str, arrows: Sequence[str]) -> bool:
        try:
            self.path_target(source, arrows)
        except ValidationError:
            return False
        return True

    def alphabet(self) -> Alphabet:
        return Alphabet(self.labels)


@dataclass(frozen=True)
class PathWord:
    """A path in the free category; the empty path is the identity at ``source``."""

    source: str
    arrows: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))

    def __len__(self) -> int:
        return len(self.arrows)

    def target(self, graph: GraphSpec) -> str:
        return graph.path_target(self.source, self.arrows)

    def __str__(self) -> str:
        return format_word(self.arrows, empty=f"id_{self.source}")


@dataclass(frozen=True)
class PathRule:
    lhs: PathWord
    rhs: PathWord

    def __str__(self) -> str:
        return f"{self.lhs} -> {self.rhs}"


def _check_rule(rule: PathRule, graph: GraphSpec, where: str) -> None:
    if rule.lhs.source != rule.rhs.source:
        raise ValidationError(f"{where}: sides start at different objects")
    if rule.lhs.target(graph) != rule.rhs.target(graph):
        raise ValidationError(f"{where}: sides end at different objects")


@dataclass(frozen=True)
class CategoryPresentation:
    graph: GraphSpec
    relations: tuple[PathRule, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for k, rule in enumerate(self.relations):
            _check_rule(rule, self.graph, f"relation {k}")


@dataclass(frozen=True)
class CompletedSystem:
    """Result of completing a category presentation."""

    graph: GraphSpec
    rules: tuple[PathRule, ...]
    complete: bool
    passes: int = 0


def _as_labels(p) -> tuple[str, ...]:
    return tuple(p.arrows) if isinstance(p, PathWord) else tuple(p)


def lenlex_compare(p, q, graph: GraphSpec) -> int:
    """-1, 0 or 1 as ``p`` is less than, equal to or greater than ``q``."""
    alpha = graph.alphabet()
    a, b = lenlex_key(alpha.encode(_as_labels(p))), lenlex_key(alpha.encode(_as_labels(q)))
    return (a > b) - (a < b)


def _source_of(word: Sequence[str], graph: GraphSpec, default: str) -> str:
    return graph.arrow(word[0]).src if word else default


def _encode_rules(rules: Iterable[PathRule], alpha: Alphabet) -> list[Rule]:
    return [(alpha.encode(r.lhs.arrows), alpha.encode(r.rhs.arrows)) for r in rules]


def _decode_rules(rules: Iterable[Rule], alpha: Alphabet, graph: GraphSpec | None,
                  sources: dict | None = None) -> tuple[PathRule, ...]:
    out = []
    for lhs, rhs in rules:
        lw, rw = alpha.decode(lhs), alpha.decode(rhs)
        if graph is not None:
            src = graph.arrow(lw[0]).src
        else:
            src = (sources or {}).get(lhs, "*")
        out.append(PathRule(PathWord(src, lw), PathWord(src, rw)))
    return tuple(out)


def _rule_alphabet(rules: Sequence[PathRule], extra: Sequence[str] = ()) -> Alphabet:
    seen: dict[str, None] = {}
    for r in rules:
        for x in r.lhs.arrows + r.rhs.arrows:
            seen.setdefault(x)
    for x in extra:
        seen.setdefault(x)
    return Alphabet(seen)


def reduce_path(p: PathWord, rules: Sequence[PathRule], graph: GraphSpec | None = None,
                rightmost: bool = False) -> PathWord:
    """Rewrite ``p`` until no rule lhs is a factor (leftmost redex first by default)."""
    if graph is not None:
        p.target(graph)
        alpha = graph.alphabet()
    else:
        alpha = _rule_alphabet(rules, p.arrows)
    out = rewrite(alpha.encode(p.arrows), _encode_rules(rules, alpha), rightmost)
    return PathWord(p.source, alpha.decode(out))


def normalize_system(rules: Sequence[PathRule], graph: GraphSpec) -> tuple[PathRule, ...]:
    """Orient, drop duplicates and interreduce."""
    alpha = graph.alphabet()
    return _decode_rules(interreduce(_encode_rules(rules, alpha)), alpha, graph)


def complete_presentation(pres: CategoryPresentation,
                          budget: CompletionBudget | None = None) -> CompletedSystem:
    alpha = pres.graph.alphabet()
    rules, ok, passes = knuth_bendix(_encode_rules(pres.relations, alpha), budget)
    return CompletedSystem(pres.graph, _decode_rules(rules, alpha, pres.graph), ok, passes)


def path_critical_pairs(rules: Sequence[PathRule], graph: GraphSpec):
    """Every critical pair as ``(term, left, right)`` PathWords."""
    alpha = graph.alphabet()
    enc = _encode_rules(rules, alpha)
    out = []
    for ov in overlaps(enc):
        term = alpha.decode(ov.term)
        src = graph.arrow(term[0]).src
        out.append((PathWord(src, term), PathWord(src, alpha.decode(ov.left)),
                    PathWord(src, alpha.decode(ov.right))))
    return out


@dataclass
class Census:
    """Normal forms grouped by ``(source, target)``."""

    elements: dict[tuple[str, str], list[PathWord]]
    overflow: bool
    count: int

    def all(self) -> list[PathWord]:
        return [w for ws in self.elements.values() for w in ws]


def enumerate_elements(rules: Sequence[PathRule], graph: GraphSpec,
                       limit: int = 1000) -> Census:
    """Length-stratified census of irreducible paths.

    Stops when a whole new block is reducible, or reports overflow once more
    than ``limit`` elements would be needed.
    """
    alpha = graph.alphabet()
    enc = _encode_rules(rules, alpha)
    elements: dict[tuple[str, str], list[PathWord]] = {}
    count = 0

    def add(w: PathWord, tgt: str) -> bool:
        nonlocal count
        if count >= limit:
            return False
        elements.setdefault((w.source, tgt), []).append(w)
        count += 1
        return True

    block: list[tuple[str, str, str]] = []  # (source, target, encoded)
    for obj in graph.objects:
        if not add(PathWord(obj), obj):
            return Census(elements, True, count)
        block.append((obj, obj, ""))
    while block:
        nxt = []
        for src, tgt, s in block:
            for a in graph.arrows:
                if a.src != tgt:
                    continue
                t = s + alpha.encode((a.label,))
                # only suffixes can be new redexes
                if any(t.endswith(lhs) for lhs, _ in enc):
                    continue
                if not add(PathWord(src, alpha.decode(t)), a.tgt):
                    return Census(elements, True, count)
                nxt.append((src, a.tgt, t))
        block = nxt
    return Census(elements, False, count)


# ---------------------------------------------------------------------------
# Builders and JSON
# ---------------------------------------------------------------------------


def monoid_presentation(generators: Sequence[str],
                        relations: Sequence[tuple[Sequence[str], Sequence[str]]],
                        obj: str = "*") -> CategoryPresentation:
    graph = GraphSpec((obj,), tuple(Arrow(g, obj, obj) for g in generators))
    rels = tuple(PathRule(PathWord(obj, tuple(l)), PathWord(obj, tuple(r)))
                 for l, r in relations)
    return CategoryPresentation(graph, rels)


def inverse_label(g: str) -> str:
    return f"{g}^-1"


def group_presentation(generators: Sequence[str], relators: Sequence[Sequence[FGLetter]],
                       orders: dict[str, int] | None = None,
                       obj: str = "*") -> CategoryPresentation:
    """Monoid presentation of a group given by free-group relators.

    With ``orders`` (a positive order for every generator that occurs
    inverted) each ``x^-1`` is replaced by ``x^(order-1)``.  Without it,
    formal inverse generators ``x^-1`` are declared after each generator
    together with the rules ``x x^-1 = id`` and ``x^-1 x = id``.
    """
    rels: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    needs_inverse = any(e < 0 for w in relators for _, e in w)
    if orders is not None or not needs_inverse:
        letters = list(generators)
        for w in relators:
            word: list[str] = []
            for g, e in w:
                if e > 0:
                    word.append(g)
                else:
                    if not orders or g not in orders:
                        raise ValidationError(f"no order given for generator {g!r}")
                    word.extend([g] * (orders[g] - 1))
            rels.append((tuple(word), ()))
    else:
        letters = []
        for g in generators:
            letters += [g, inverse_label(g)]
            rels.append(((g, inverse_label(g)), ()))
            rels.append(((inverse_label(g), g), ()))
        for w in relators:
            rels.append((tuple(g if e > 0 else inverse_label(g) for g, e in w), ()))
    return monoid_presentation(letters, rels, obj)


def _relation_from_json(item, graph: GraphSpec, k: int) -> PathRule:
    at = None
    if isinstance(item, dict):
        lhs, rhs, at = item.get("lhs"), item.get("rhs"), item.get("at")
    elif isinstance(item, (list, tuple)) and len(item) in (2, 3):
        lhs, rhs = item[0], item[1]
        at = item[2] if len(item) == 3 else None
    else:
        raise ParseError(f"relation {k} must be a pair of label arrays")
    if not isinstance(lhs, list) or not isinstance(rhs, list):
        raise ParseError(f"relation {k} sides must be arrays of labels")
    src = None
    for side in (lhs, rhs):
        if side:
            src = graph.arrow(side[0]).src
            break
    if src is None:
        if at is None:
            raise ValidationError(f"relation {k}: identity paths need an 'at' object")
        src = at
    if at is not None and at != src:
        raise ValidationError(f"relation {k}: 'at' is {at!r} but the path starts at {src!r}")
    return PathRule(PathWord(src, tuple(lhs)), PathWord(src, tuple(rhs)))


def presentation_from_json(doc: dict) -> CategoryPresentation:
    try:
        objects = doc["objects"]
        arrows = [Arrow(a["label"], a["src"], a["tgt"]) for a in doc["arrows"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed presentation document: {exc}") from None
    graph = GraphSpec(tuple(objects), tuple(arrows))
    rels = tuple(_relation_from_json(item, graph, k)
                 for k, item in enumerate(doc.get("relations", [])))
    return CategoryPresentation(graph, rels)


def presentation_to_json(pres: CategoryPresentation) -> dict:
    return {
        "objects": list(pres.graph.objects),
        "arrows": [{"label": a.label, "src": a.src, "tgt": a.tgt} for a in pres.graph.arrows],
        "relations": [{"lhs": list(r.lhs.arrows), "rhs": list(r.rhs.arrows), "at": r.lhs.source}
                      for r in pres.relations],
    }
