"""Identities among relations by rewriting with extra information.

A Y-sequence is a list of terms ``(rho, eps, u)`` standing for the
conjugated relator ``u^-1 w(rho)^eps u`` in the free crossed module.  An
extra-information rule ``(l, c, r)`` carries a Y-sequence ``c`` with
``l = delta(c) r`` in the free group, so every reduction records why the two
words are equal.  Running the reductions around every cycle of the Cayley
graph yields a generating set for the module of identities.

Words handed to the rewriting side are "monoid words": tuples of free-group
letters ``(x, 1)`` and, when formal inverses are in use, ``(x, -1)``.  The
same tuple read as a free-group word is its image in F(X).
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from . import presentations as pr
from .errors import ValidationError
from .presentations import (Alphabet, CompletionBudget, FGWord, fg_inverse, fg_mul,
                            format_fg_word, free_reduce, parse_fg_word)

__all__ = [
    "YTerm",
    "GroupPresentationIR",
    "EirsRule",
    "IdentityRecord",
    "IdRelResult",
    "group_ir",
    "ys_concat",
    "ys_invert",
    "ys_act",
    "ys_cancel",
    "boundary",
    "initial_eirs",
    "reduce_word2",
    "kb2",
    "witness_holds",
    "GroupData",
    "group_data",
    "compute_h0",
    "compute_h1",
    "separation",
    "generate_identities",
    "idrel",
    "alpha_map",
    "format_group_ring",
    "primary_identity_check",
    "peiffer_exchange",
    "format_ysequence",
    "random_trivial_sequence",
]


class YTerm(NamedTuple):
    rel: str
    sign: int
    conj: FGWord

    def __str__(self) -> str:
        r = self.rel if self.sign > 0 else f"{self.rel}^-1"
        return f"({r}, {format_fg_word(self.conj)})"


YSeq = tuple  # tuple[YTerm, ...]


def format_ysequence(a: YSeq) -> str:
    return "".join(str(t) for t in a) if a else "1"


def ys_concat(*parts: YSeq) -> YSeq:
    return ys_cancel(tuple(t for p in parts for t in p))


def ys_invert(a: YSeq) -> YSeq:
    return tuple(YTerm(t.rel, -t.sign, t.conj) for t in reversed(a))


def ys_act(a: YSeq, u: FGWord) -> YSeq:
    """Right action: every conjugator u_i becomes u_i u."""
    u = tuple(u)
    return tuple(YTerm(t.rel, t.sign, free_reduce(t.conj + u)) for t in a)


def ys_cancel(a: Iterable[YTerm]) -> YSeq:
    """Delete adjacent pairs (rho, e, u)(rho, -e, u)."""
    out: list[YTerm] = []
    for t in a:
        if out and out[-1].rel == t.rel and out[-1].conj == t.conj and out[-1].sign == -t.sign:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupPresentationIR:
    """grp<X | R> with labelled relators given as free-group words.

    ``inverses`` is ``"auto"`` (use positive words when every relator has a
    rotation of the form l r^-1 with l, r positive, else formal inverses),
    ``"positive"`` or ``"formal"``.
    """

    generators: tuple[str, ...]
    relators: tuple[tuple[str, FGWord], ...]
    inverses: str = "auto"

    def __post_init__(self):
        if self.inverses not in ("auto", "positive", "formal"):
            raise ValidationError(f"unknown inverse mode {self.inverses!r}")
        labels = [r for r, _ in self.relators]
        if len(set(labels)) != len(labels):
            raise ValidationError("relator labels must be distinct")
        for r, w in self.relators:
            if not free_reduce(w):
                raise ValidationError(f"relator {r!r} is trivial")
            for x, e in w:
                if x not in self.generators or e not in (1, -1):
                    raise ValidationError(f"relator {r!r} uses unknown letter {x!r}")

    def word(self, label: str) -> FGWord:
        for r, w in self.relators:
            if r == label:
                return w
        raise ValidationError(f"unknown relator {label!r}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r for r, _ in self.relators)

    def mode(self) -> str:
        if self.inverses != "auto":
            return self.inverses
        ok = all(_split_rotation(w) is not None for _, w in self.relators)
        return "positive" if ok else "formal"

    def monoid_letters(self) -> tuple:
        if self.mode() == "positive":
            return tuple((x, 1) for x in self.generators)
        return tuple(l for x in self.generators for l in ((x, 1), (x, -1)))


def group_ir(generators: Sequence[str], relators: dict[str, str] | Sequence[tuple[str, str]],
             inverses: str = "auto") -> GroupPresentationIR:
    items = relators.items() if isinstance(relators, dict) else relators
    return GroupPresentationIR(tuple(generators),
                               tuple((r, parse_fg_word(w) if isinstance(w, str) else tuple(w))
                                     for r, w in items), inverses)


def boundary(a: YSeq, pres: GroupPresentationIR) -> FGWord:
    """delta(a): the freely reduced product of u^-1 w(rho)^eps u."""
    out: list = []
    for t in a:
        w = pres.word(t.rel)
        if t.sign < 0:
            w = fg_inverse(w)
        out.extend(fg_inverse(t.conj) + tuple(w) + tuple(t.conj))
    return free_reduce(out)


def _split_rotation(w: FGWord):
    """(p, l, r) with p^-1 w p = l r^-1, l and r positive; None if impossible."""
    w = tuple(w)
    n = len(w)
    for k in range(n):
        rot = w[k:] + w[:k]
        cut = 0
        while cut < n and rot[cut][1] > 0:
            cut += 1
        if all(e < 0 for _, e in rot[cut:]):
            # rot = w[k:] w[:k] = p^-1 w p with p = w[:k]
            return w[:k], rot[:cut], fg_inverse(rot[cut:])
    return None


# ---------------------------------------------------------------------------
# Extra-information rewriting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EirsRule:
    lhs: tuple
    witness: YSeq
    rhs: tuple

    def __str__(self) -> str:
        return (f"({format_fg_word(self.lhs)}, {format_ysequence(self.witness)}, "
                f"{format_fg_word(self.rhs)})")

    def pair(self) -> tuple[str, str]:
        return format_fg_word(self.lhs), format_fg_word(self.rhs)


def witness_holds(rule: EirsRule, pres: GroupPresentationIR) -> bool:
    """free_reduce(delta(c) r) == free_reduce(l)."""
    return free_reduce(boundary(rule.witness, pres) + tuple(rule.rhs)) == free_reduce(rule.lhs)


def _key(word: tuple, alpha: Alphabet):
    return pr.lenlex_key(alpha.encode(word))


def initial_eirs(pres: GroupPresentationIR) -> tuple[EirsRule, ...]:
    """One rule per relator, plus x x^-1 -> id and x^-1 x -> id for formal inverses."""
    mode = pres.mode()
    alpha = Alphabet(pres.monoid_letters())
    rules = []
    if mode == "formal":
        for x in pres.generators:
            rules.append(EirsRule(((x, 1), (x, -1)), (), ()))
            rules.append(EirsRule(((x, -1), (x, 1)), (), ()))
        for label, w in pres.relators:
            rules.append(EirsRule(tuple(w), (YTerm(label, 1, ()),), ()))
        return tuple(rules)
    for label, w in pres.relators:
        split = _split_rotation(w)
        if split is None:
            raise ValidationError(f"relator {label!r} has no positive rotation")
        p, l, r = split
        if _key(r, alpha) > _key(l, alpha):
            rules.append(EirsRule(r, (YTerm(label, -1, free_reduce(p)),), l))
        else:
            rules.append(EirsRule(l, (YTerm(label, 1, free_reduce(p)),), r))
    return tuple(rules)


class _Engine:
    """Encoded view of an EIRS for fast reduction."""

    def __init__(self, rules: Sequence[EirsRule], alpha: Alphabet):
        self.alpha = alpha
        self.enc = [(alpha.encode(r.lhs), alpha.encode(r.rhs)) for r in rules]
        self.wit = [r.witness for r in rules]

    def reduce(self, s: str, exclude: int | None = None) -> tuple[YSeq, str]:
        enc = self.enc if exclude is None else [
            r if k != exclude else ("\0", "") for k, r in enumerate(self.enc)]
        acc: YSeq = ()
        while True:
            hit = pr.find_redex(s, enc)
            if hit is None:
                return acc, s
            pos, k = hit
            u = self.alpha.decode(s[:pos])
            acc = ys_concat(acc, ys_act(self.wit[k], fg_inverse(u)))
            lhs, rhs = enc[k]
            s = s[:pos] + rhs + s[pos + len(lhs):]


def reduce_word2(word, eirs: Sequence[EirsRule], pres: GroupPresentationIR) -> tuple[YSeq, tuple]:
    """Reduce a monoid word, returning ``(c, z)`` with word = delta(c) z.

    A rule applied with left context u contributes its witness acted on by
    u^-1.
    """
    if isinstance(word, str):
        word = parse_fg_word(word)
    alpha = Alphabet(pres.monoid_letters())
    for l in word:
        if l not in alpha:
            raise ValidationError(f"{format_fg_word((l,))} is not a monoid letter here")
    c, z = _Engine(eirs, alpha).reduce(alpha.encode(word))
    return c, alpha.decode(z)


def _orient(z1: tuple, z2: tuple, c: YSeq, alpha: Alphabet) -> EirsRule:
    """Rule from z1 = delta(c) z2 with the larger side on the left."""
    if _key(z1, alpha) > _key(z2, alpha):
        return EirsRule(z1, c, z2)
    return EirsRule(z2, ys_invert(c), z1)


def _interreduce2(rules: Sequence[EirsRule], alpha: Alphabet) -> list[EirsRule]:
    work: list[EirsRule] = []
    for r in rules:
        if r.lhs == r.rhs:
            continue
        if _key(r.rhs, alpha) > _key(r.lhs, alpha):
            r = EirsRule(r.rhs, ys_invert(r.witness), r.lhs)
        if all((w.lhs, w.rhs) != (r.lhs, r.rhs) for w in work):
            work.append(r)
    changed = True
    while changed:
        changed = False
        eng = _Engine(work, alpha)
        for idx, rule in enumerate(work):
            l, r = alpha.encode(rule.lhs), alpha.encode(rule.rhs)
            if pr.is_reducible(l, [e for k, e in enumerate(eng.enc) if k != idx]):
                # l = delta(d1) z1 and r = delta(d2) z2, so z1 = delta(d1^-1 c d2) z2
                d1, z1 = eng.reduce(l, exclude=idx)
                d2, z2 = eng.reduce(r, exclude=idx)
                del work[idx]
                if z1 != z2:
                    new = _orient(alpha.decode(z1), alpha.decode(z2),
                                  ys_concat(ys_invert(d1), rule.witness, d2), alpha)
                    if all((w.lhs, w.rhs) != (new.lhs, new.rhs) for w in work):
                        work.append(new)
                changed = True
                break
            d, z = eng.reduce(r)
            if z != r:
                work[idx] = EirsRule(rule.lhs, ys_concat(rule.witness, d), alpha.decode(z))
                changed = True
                break
    work.sort(key=lambda w: (_key(w.lhs, alpha), _key(w.rhs, alpha)))
    return work


def kb2(eirs: Sequence[EirsRule], pres: GroupPresentationIR,
        budget: CompletionBudget | None = None) -> tuple[tuple[EirsRule, ...], bool]:
    """Knuth-Bendix completion that keeps a witness on every rule.

    For a critical term t = delta(e1) s1 = delta(e2) s2 with s_i reducing to
    delta(d_i) z_i, the new rule is z1 = delta(d1^-1 e1^-1 e2 d2) z2.
    Returns ``(rules, complete)``.
    """
    budget = budget or CompletionBudget()
    alpha = Alphabet(pres.monoid_letters())
    current = _interreduce2(eirs, alpha)
    for _ in range(budget.max_passes):
        added: list[EirsRule] = []
        enc = [(alpha.encode(r.lhs), alpha.encode(r.rhs)) for r in current]
        for ov in pr.overlaps(enc):
            eng = _Engine(current + added, alpha)
            term = ov.term
            # rule i sits at 0, rule j at ov.offset
            e1 = current[ov.i].witness
            e2 = ys_act(current[ov.j].witness, fg_inverse(alpha.decode(term[:ov.offset])))
            d1, z1 = eng.reduce(ov.left)
            d2, z2 = eng.reduce(ov.right)
            if z1 != z2:
                c = ys_concat(ys_invert(d1), ys_invert(e1), e2, d2)
                added.append(_orient(alpha.decode(z1), alpha.decode(z2), c, alpha))
                if len(current) + len(added) > budget.max_rules:
                    return tuple(_interreduce2(current + added, alpha)), False
        if not added:
            return tuple(current), True
        current = _interreduce2(current + added, alpha)
    return tuple(current), False


# ---------------------------------------------------------------------------
# Cayley data, h0 and h1
# ---------------------------------------------------------------------------


@dataclass
class GroupData:
    """Completed EIRS, normal forms and the Cayley graph of a finite group."""

    pres: GroupPresentationIR
    eirs: tuple
    alpha: Alphabet
    elements: list  # normal forms (monoid words), lenlex order
    index: dict
    edges: dict  # (g, x) -> g.x for group generators x
    back: dict  # (h, x) -> g with g.x = h
    h1_table: dict = field(default_factory=dict)

    def normal_form(self, word) -> tuple:
        """theta followed by N, for any free-group word."""
        v: tuple = ()
        for x, e in word:
            v = self.edges[(v, x)] if e > 0 else self.back[(v, x)]
        return v

    def is_tree_edge(self, g: tuple, x: str) -> bool:
        h = self.edges[(g, x)]
        return h == g + ((x, 1),) or g == h + ((x, -1),)


def group_data(pres: GroupPresentationIR, budget: CompletionBudget | None = None,
               limit: int = 10000) -> GroupData:
    eirs, ok = kb2(initial_eirs(pres), pres, budget)
    if not ok:
        from .errors import BudgetExhausted
        raise BudgetExhausted("KB2 did not complete within the budget", eirs)
    alpha = Alphabet(pres.monoid_letters())
    enc = [(alpha.encode(r.lhs), alpha.encode(r.rhs)) for r in eirs]
    letters = [alpha.encode((l,)) for l in pres.monoid_letters()]
    elements = [""]
    seen = {""}
    block = [""]
    while block:
        nxt = []
        for s in block:
            for a in letters:
                t = s + a
                if any(t.endswith(l) for l, _ in enc) or t in seen:
                    continue
                if len(elements) >= limit:
                    raise ValidationError("the group is not finite within the enumeration limit")
                seen.add(t)
                elements.append(t)
                nxt.append(t)
        block = nxt
    words = [alpha.decode(s) for s in elements]
    index = {w: i for i, w in enumerate(words)}
    edges, back = {}, {}
    for g in words:
        for x in pres.generators:
            h = alpha.decode(pr.rewrite(alpha.encode(g + ((x, 1),)), enc))
            edges[(g, x)] = h
            back[(h, x)] = g
    return GroupData(pres, eirs, alpha, words, index, edges, back)


def compute_h0(g: tuple) -> FGWord:
    """h0(g) = N(g)^-1."""
    return fg_inverse(g)


def _positive_witness(word: FGWord, data: GroupData) -> YSeq:
    """c with delta(c) = word, for a free word trivial in the group."""
    eng = _Engine(data.eirs, data.alpha)
    pres = data.pres
    w = list(word)
    acc: YSeq = ()
    if pres.mode() == "positive":
        while True:
            neg = next((k for k, (_, e) in enumerate(w) if e < 0), None)
            if neg is None:
                break
            y = w[neg][0]
            m_y = data.back[((), y)]  # N(theta(y)^-1), a positive word
            c_y, z = eng.reduce(data.alpha.encode(((y, 1),) + m_y))
            if z:
                raise ValidationError("inverse elimination failed")
            # w1 y^-1 w2 = delta((c_y^-1)^((w1 m_y)^-1)) w1 m_y w2
            w1 = tuple(w[:neg])
            acc = ys_concat(acc, ys_act(ys_invert(c_y), fg_inverse(w1 + m_y)))
            w = list(w1 + m_y) + w[neg + 1:]
    c, z = eng.reduce(data.alpha.encode(tuple(w)))
    if z:
        raise ValidationError("word is not trivial in the group")
    return ys_concat(acc, c)


def compute_h1(g: tuple, x: str, data: GroupData) -> YSeq:
    """h1[g, x]: a Y-sequence with boundary N(g) x N(g.x)^-1."""
    key = (g, x)
    if key not in data.h1_table:
        h = data.edges[key]
        w = free_reduce(tuple(g) + ((x, 1),) + fg_inverse(h))
        data.h1_table[key] = () if not w else _positive_witness(w, data)
    return data.h1_table[key]


@dataclass(frozen=True)
class IdentityRecord:
    element: tuple
    rel: str
    sequence: YSeq

    def to_json(self) -> list:
        return [[t.rel if t.sign > 0 else f"{t.rel}^-1", format_fg_word(t.conj)]
                for t in self.sequence]


def separation(g: tuple, rel: str, data: GroupData) -> YSeq:
    """sep(g, r): undo h1 around the relator cycle at g, then append (r, N(g)^-1)."""
    cur = g
    walk: YSeq = ()
    for y, e in data.pres.word(rel):
        if e > 0:
            if not data.is_tree_edge(cur, y):
                walk = ys_concat(walk, compute_h1(cur, y, data))
            cur = data.edges[(cur, y)]
        else:
            prev = data.back[(cur, y)]
            if not data.is_tree_edge(prev, y):
                walk = ys_concat(walk, ys_invert(compute_h1(prev, y, data)))
            cur = prev
    if cur != g:
        raise ValidationError(f"{rel!r} does not close up at {format_fg_word(g)}")
    return ys_concat(ys_invert(walk), (YTerm(rel, 1, fg_inverse(g)),))


def generate_identities(data: GroupData) -> list[IdentityRecord]:
    return [IdentityRecord(g, r, separation(g, r, data))
            for g in data.elements for r in data.pres.labels]


@dataclass
class IdRelResult:
    data: GroupData
    identities: list

    @property
    def is_ids_record(self) -> bool:
        return all(not boundary(r.sequence, self.data.pres) for r in self.identities)

    def to_json(self) -> dict:
        pres = self.data.pres
        return {
            "free": list(pres.generators),
            "rels": [[r, format_fg_word(w)] for r, w in pres.relators],
            "elF": [format_fg_word(g) for g in self.data.elements],
            "K": [[format_fg_word(r.lhs), format_fg_word(r.rhs)] for r in self.data.eirs],
            "eirs": [[format_fg_word(r.lhs), [[t.rel if t.sign > 0 else f"{t.rel}^-1",
                                              format_fg_word(t.conj)] for t in r.witness],
                      format_fg_word(r.rhs)] for r in self.data.eirs],
            "idents": [r.to_json() for r in self.identities],
            "isIdsRecord": self.is_ids_record,
        }


def idrel(pres: GroupPresentationIR, budget: CompletionBudget | None = None) -> IdRelResult:
    data = group_data(pres, budget)
    return IdRelResult(data, generate_identities(data))


# ---------------------------------------------------------------------------
# Group ring images and the primary identity property
# ---------------------------------------------------------------------------


def alpha_map(a: YSeq, data: GroupData) -> dict[str, dict[tuple, int]]:
    """alpha((r, u)^e) = r . (e theta(u)), summed; zero coefficients dropped."""
    out: dict[str, dict[tuple, int]] = {}
    for t in a:
        g = data.normal_form(t.conj)
        row = out.setdefault(t.rel, {})
        row[g] = row.get(g, 0) + t.sign
    return {r: {g: c for g, c in row.items() if c}
            for r, row in out.items() if any(row.values())}


def format_group_ring(v: dict[str, dict[tuple, int]], data: GroupData) -> str:
    if not v:
        return "0"
    parts = []
    for r in data.pres.labels:
        if r not in v:
            continue
        terms = sorted(v[r].items(), key=lambda kv: data.index[kv[0]])
        inner = " + ".join(_ring_term(c, format_fg_word(g)) for g, c in terms)
        inner = inner.replace("+ -", "- ")
        parts.append(f"{r}*({inner})")
    return " + ".join(parts)


def _ring_term(c: int, g: str) -> str:
    return g if c == 1 else f"-{g}" if c == -1 else f"{c}*{g}"


def primary_identity_check(a: YSeq, data: GroupData) -> bool:
    """True iff the terms pair off: same relator, same theta(conjugator), opposite signs.

    Matching is done greedily on a worklist, independently of ``alpha_map``.
    """
    if boundary(a, data.pres):
        raise ValidationError("not an identity: boundary is nontrivial")
    pending: list[tuple[str, int, tuple]] = []
    for t in a:
        g = data.normal_form(t.conj)
        for k, (r, s, h) in enumerate(pending):
            if r == t.rel and h == g and s == -t.sign:
                del pending[k]
                break
        else:
            pending.append((t.rel, t.sign, g))
    return not pending


def peiffer_exchange(a: YSeq, i: int, pres: GroupPresentationIR) -> YSeq:
    """Replace terms i, i+1 (c1 c2) by c2 c1^(delta c2)."""
    if not 0 <= i < len(a) - 1:
        raise ValidationError("exchange position out of range")
    c1, c2 = a[i], a[i + 1]
    moved = ys_act((c1,), boundary((c2,), pres))
    return tuple(a[:i]) + (c2,) + moved + tuple(a[i + 2:])


def random_trivial_sequence(data: GroupData, rng: _random.Random, pairs: int = 3,
                            exchanges: int = 6) -> YSeq:
    """Cancelling pairs t t^-1 scrambled by Peiffer exchanges.

    Every exchange keeps the boundary and the group ring image, so the result
    is an identity that has the primary identity property.
    """
    gens = data.pres.generators
    seq: YSeq = ()
    for _ in range(pairs):
        u = free_reduce(tuple((rng.choice(gens), rng.choice((1, -1)))
                              for _ in range(rng.randint(0, 3))))
        t = YTerm(rng.choice(data.pres.labels), rng.choice((1, -1)), u)
        seq = seq + (t, YTerm(t.rel, -t.sign, u))
    for _ in range(exchanges):
        seq = peiffer_exchange(seq, rng.randrange(len(seq) - 1), data.pres)
    return seq
