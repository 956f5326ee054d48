"""Acceptors for irreducible terms, subset construction and Arden elimination.

The reducibility automaton tracks, for a word read so far, the current
object of Delta together with every proper prefix of a rule lhs that ends at
the current position.  It accepts ill-typed words and words containing a
redex; its complement accepts exactly the normal forms.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .errors import ParseError, ValidationError

__all__ = [
    "Nfa",
    "Dfa",
    "Regex",
    "Empty",
    "Eps",
    "Sym",
    "Cat",
    "Alt",
    "Star",
    "EMPTY",
    "EPS",
    "cat",
    "alt",
    "star",
    "parse_regex",
    "format_regex",
    "build_reducibility_nfa",
    "determinize",
    "complete_dfa",
    "complement_dfa",
    "glue_states",
    "solve_right_linear",
    "dfa_to_regex",
    "regex_for_object",
    "kan_acceptor",
    "regex_membership",
    "regex_nfa",
    "build_monomial_acceptor",
    "languages_agree",
    "state_tau",
    "format_state",
]

State = Hashable


# ---------------------------------------------------------------------------
# Automata
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Nfa:
    states: tuple
    alphabet: tuple
    initial: frozenset
    transitions: dict  # (state, letter) -> frozenset
    terminal: frozenset

    def __post_init__(self):
        known = set(self.states)
        for (s, a), ts in self.transitions.items():
            if s not in known or not set(ts) <= known:
                raise ValidationError(f"transition from {s!r} on {a!r} leaves the state set")

    def step(self, current: Iterable[State], letter) -> frozenset:
        out: set = set()
        for s in current:
            out |= self.transitions.get((s, letter), frozenset())
        return frozenset(out)

    def accepts(self, word: Sequence) -> bool:
        cur = self.initial
        for a in word:
            cur = self.step(cur, a)
        return bool(cur & self.terminal)

    def to_json(self, fmt: Callable = repr) -> dict:
        return {
            "states": [fmt(s) for s in self.states],
            "alphabet": list(self.alphabet),
            "initial": [fmt(s) for s in self.states if s in self.initial],
            "transitions": {fmt(s): {a: sorted(fmt(t) for t in self.transitions[(s, a)])
                                     for a in self.alphabet if (s, a) in self.transitions}
                            for s in self.states},
            "terminal": [fmt(s) for s in self.states if s in self.terminal],
        }


@dataclass(frozen=True)
class Dfa:
    """States are 0..n-1; ``labels[i]`` records where state i came from."""

    labels: tuple
    alphabet: tuple
    initial: int
    transitions: dict  # (int, letter) -> int
    terminal: frozenset

    @property
    def size(self) -> int:
        return len(self.labels)

    def is_complete(self) -> bool:
        return all((i, a) in self.transitions for i in range(self.size) for a in self.alphabet)

    def run(self, word: Sequence):
        s = self.initial
        for a in word:
            s = self.transitions.get((s, a))
            if s is None:
                return None
        return s

    def accepts(self, word: Sequence) -> bool:
        s = self.run(word)
        return s is not None and s in self.terminal

    def live_states(self) -> frozenset:
        """States from which some terminal state can be reached."""
        back: dict[int, set[int]] = {}
        for (s, _), t in self.transitions.items():
            back.setdefault(t, set()).add(s)
        live = set(self.terminal)
        todo = list(live)
        while todo:
            t = todo.pop()
            for s in back.get(t, ()):
                if s not in live:
                    live.add(s)
                    todo.append(s)
        return frozenset(live)

    def to_json(self, fmt: Callable = repr) -> dict:
        return {
            "states": [fmt(l) for l in self.labels],
            "alphabet": list(self.alphabet),
            "initial": self.initial,
            "transitions": [[s, a, self.transitions[(s, a)]] for s in range(self.size)
                            for a in self.alphabet if (s, a) in self.transitions],
            "terminal": sorted(self.terminal),
        }


def determinize(nfa: Nfa) -> Dfa:
    """Subset construction by a transition tree grown breadth first.

    Branches follow the alphabet order and a label is expanded only the
    first time it appears; the empty set is never created as a state.
    """
    start = frozenset(nfa.initial)
    index = {start: 0}
    labels = [start]
    trans = {}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for a in nfa.alphabet:
            nxt = nfa.step(cur, a)
            if not nxt:
                continue
            if nxt not in index:
                index[nxt] = len(labels)
                labels.append(nxt)
                queue.append(nxt)
            trans[(index[cur], a)] = index[nxt]
    terminal = frozenset(i for i, l in enumerate(labels) if l & nfa.terminal)
    return Dfa(tuple(labels), tuple(nfa.alphabet), 0, trans, terminal)


def complete_dfa(dfa: Dfa) -> Dfa:
    """Add a non-terminal dump state when some transition is missing."""
    if dfa.is_complete():
        return dfa
    dump = dfa.size
    trans = dict(dfa.transitions)
    for i in range(dump + 1):
        for a in dfa.alphabet:
            trans.setdefault((i, a), dump)
    return Dfa(dfa.labels + (frozenset(),), dfa.alphabet, dfa.initial, trans, dfa.terminal)


def complement_dfa(dfa: Dfa) -> Dfa:
    if not dfa.is_complete():
        raise ValidationError("complement needs a complete automaton")
    terminal = frozenset(range(dfa.size)) - dfa.terminal
    return Dfa(dfa.labels, dfa.alphabet, dfa.initial, dict(dfa.transitions), terminal)


def glue_states(dfa: Dfa, key: Callable[[int], Hashable] | None = None) -> Dfa:
    """Merge states with the same terminality, key and successors.

    Plain partition refinement; ``key`` may split the initial partition
    further (for example by target object).  Class order follows the first
    member, so the result stays deterministic.
    """
    key = key or (lambda i: None)

    def renumber(sig):
        ids: dict = {}
        return {i: ids.setdefault(sig[i], len(ids)) for i in range(dfa.size)}

    block = renumber({i: (i in dfa.terminal, key(i)) for i in range(dfa.size)})
    while True:
        sig = {i: (block[i],) + tuple(block.get(dfa.transitions.get((i, a))) for a in dfa.alphabet)
               for i in range(dfa.size)}
        nxt = renumber(sig)
        if len(set(nxt.values())) == len(set(block.values())):
            break
        block = nxt
    order: dict = {}
    for i in range(dfa.size):
        order.setdefault(block[i], len(order))
    members: dict[int, list] = {}
    for i in range(dfa.size):
        members.setdefault(order[block[i]], []).append(dfa.labels[i])
    labels = tuple(tuple(members[k]) for k in range(len(order)))
    trans = {(order[block[i]], a): order[block[t]] for (i, a), t in dfa.transitions.items()}
    terminal = frozenset(order[block[i]] for i in dfa.terminal)
    return Dfa(labels, dfa.alphabet, order[block[dfa.initial]], trans, terminal)


# ---------------------------------------------------------------------------
# Regular expressions
# ---------------------------------------------------------------------------


class Regex:
    __slots__ = ()

    def __str__(self) -> str:
        return format_regex(self)


@dataclass(frozen=True, eq=True)
class Empty(Regex):
    pass


@dataclass(frozen=True, eq=True)
class Eps(Regex):
    pass


@dataclass(frozen=True, eq=True)
class Sym(Regex):
    letter: Hashable


@dataclass(frozen=True, eq=True)
class Cat(Regex):
    parts: tuple


@dataclass(frozen=True, eq=True)
class Alt(Regex):
    parts: tuple


@dataclass(frozen=True, eq=True)
class Star(Regex):
    inner: Regex


EMPTY = Empty()
EPS = Eps()


def cat(*parts: Regex) -> Regex:
    flat = []
    for p in parts:
        if isinstance(p, Empty):
            return EMPTY
        if isinstance(p, Eps):
            continue
        flat.extend(p.parts if isinstance(p, Cat) else (p,))
    if not flat:
        return EPS
    return flat[0] if len(flat) == 1 else Cat(tuple(flat))


def alt(*parts: Regex) -> Regex:
    flat: list = []
    for p in parts:
        for q in (p.parts if isinstance(p, Alt) else (p,)):
            if not isinstance(q, Empty) and q not in flat:
                flat.append(q)
    # id is absorbed by any starred alternative
    if EPS in flat and any(isinstance(q, Star) for q in flat):
        flat.remove(EPS)
    if not flat:
        return EMPTY
    return flat[0] if len(flat) == 1 else Alt(tuple(flat))


def star(r: Regex) -> Regex:
    if isinstance(r, (Empty, Eps)):
        return EPS
    if isinstance(r, Star):
        return r
    if isinstance(r, Alt) and EPS in r.parts:
        r = alt(*(q for q in r.parts if q != EPS))
    return Star(r)


def format_regex(r: Regex, letter: Callable = str) -> str:
    def go(r, prec):
        # prec: 0 union context, 1 concatenation, 2 star operand
        if isinstance(r, Empty):
            return "∅"
        if isinstance(r, Eps):
            return "id"
        if isinstance(r, Sym):
            return letter(r.letter)
        if isinstance(r, Star):
            return go(r.inner, 2) + "*"
        if isinstance(r, Cat):
            s = "".join(go(p, 1) for p in r.parts)
            return f"({s})" if prec >= 2 else s
        s = "+".join(go(p, 0) for p in r.parts)
        return f"({s})" if prec >= 1 else s
    return go(r, 0)


def parse_regex(text: str, alphabet: Sequence[str]) -> Regex:
    """Read ``+`` (union), juxtaposition, ``*``, ``^n``, ``id``/``1`` and ``∅``.

    Letter names are matched greedily against ``alphabet``; ``|`` and
    whitespace are separators with no meaning.
    """
    names = sorted(alphabet, key=len, reverse=True)
    toks: list = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace() or ch == "|":
            i += 1
            continue
        if ch in "+*()":
            toks.append(ch)
            i += 1
            continue
        if ch == "^":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"exponent expected at {i}")
            toks.append(("pow", int(text[i + 1:j])))
            i = j
            continue
        if ch == "∅":
            toks.append(EMPTY)
            i += 1
            continue
        for nm in names:
            if text.startswith(nm, i):
                toks.append(Sym(nm))
                i += len(nm)
                break
        else:
            if text.startswith("id", i):
                toks.append(EPS)
                i += 2
            elif ch == "1":
                toks.append(EPS)
                i += 1
            else:
                raise ParseError(f"unexpected {text[i:i + 8]!r} at {i}")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def union():
        nonlocal pos
        parts = [concat()]
        while peek() == "+":
            pos += 1
            parts.append(concat())
        return alt(*parts)

    def concat():
        parts = []
        while peek() is not None and peek() not in ("+", ")"):
            parts.append(postfix())
        if not parts:
            raise ParseError("empty operand")
        return cat(*parts)

    def postfix():
        nonlocal pos
        r = atom()
        while True:
            t = peek()
            if t == "*":
                pos += 1
                r = star(r)
            elif isinstance(t, tuple):
                pos += 1
                r = cat(*([r] * t[1]))
            else:
                return r

    def atom():
        nonlocal pos
        t = peek()
        if t == "(":
            pos += 1
            r = union()
            if peek() != ")":
                raise ParseError("unbalanced parenthesis")
            pos += 1
            return r
        if isinstance(t, Regex):
            pos += 1
            return t
        raise ParseError(f"unexpected token {t!r}")

    r = union()
    if pos != len(toks):
        raise ParseError("trailing input")
    return r


def regex_nfa(r: Regex):
    """Thompson construction: (start, accept, edges) with ``None`` for id moves."""
    edges: dict[int, list] = {}
    counter = [0]

    def new():
        counter[0] += 1
        edges[counter[0]] = []
        return counter[0]

    def build(r):
        s, t = new(), new()
        if isinstance(r, Eps):
            edges[s].append((None, t))
        elif isinstance(r, Sym):
            edges[s].append((r.letter, t))
        elif isinstance(r, Cat):
            cur = s
            for p in r.parts:
                a, b = build(p)
                edges[cur].append((None, a))
                cur = b
            edges[cur].append((None, t))
        elif isinstance(r, Alt):
            for p in r.parts:
                a, b = build(p)
                edges[s].append((None, a))
                edges[b].append((None, t))
        elif isinstance(r, Star):
            a, b = build(r.inner)
            edges[s] += [(None, a), (None, t)]
            edges[b] += [(None, a), (None, t)]
        return s, t

    start, accept = build(r)
    return start, accept, edges


class _ThompsonRunner:
    def __init__(self, r: Regex):
        self.start_state, self.accept, self.edges = regex_nfa(r)
        back: dict[int, set] = {}
        for s, es in self.edges.items():
            for _, t in es:
                back.setdefault(t, set()).add(s)
        live = {self.accept}
        todo = [self.accept]
        while todo:
            t = todo.pop()
            for s in back.get(t, ()):
                if s not in live:
                    live.add(s)
                    todo.append(s)
        self.live = live

    def closure(self, states):
        seen = set(states)
        todo = list(states)
        while todo:
            s = todo.pop()
            for a, t in self.edges[s]:
                if a is None and t not in seen:
                    seen.add(t)
                    todo.append(t)
        return frozenset(seen)

    def start(self):
        return self.closure([self.start_state])

    def step(self, cur, letter):
        return self.closure([t for s in cur for a, t in self.edges[s] if a == letter])

    def accepting(self, cur) -> bool:
        return self.accept in cur

    def dead(self, cur) -> bool:
        return not (cur & self.live)


def regex_membership(r: Regex, word: Sequence) -> bool:
    run = _ThompsonRunner(r)
    cur = run.start()
    for a in word:
        cur = run.step(cur, a)
        if not cur:
            return False
    return run.accepting(cur)


class _DfaRunner:
    def __init__(self, dfa: Dfa):
        self.dfa = dfa
        self.live = dfa.live_states()

    def start(self):
        return self.dfa.initial

    def step(self, s, letter):
        return None if s is None else self.dfa.transitions.get((s, letter))

    def accepting(self, s) -> bool:
        return s is not None and s in self.dfa.terminal

    def dead(self, s) -> bool:
        return s is None or s not in self.live


class _PredicateRunner:
    def __init__(self, pred: Callable[[tuple], bool]):
        self.pred = pred

    def start(self):
        return ()

    def step(self, w, letter):
        return w + (letter,)

    def accepting(self, w) -> bool:
        return self.pred(w)

    def dead(self, w) -> bool:
        return False


def _runner(x):
    if isinstance(x, Regex):
        return _ThompsonRunner(x)
    if isinstance(x, Dfa):
        return _DfaRunner(x)
    if callable(x):
        return _PredicateRunner(x)
    raise TypeError(f"cannot run {type(x).__name__}")


def languages_agree(first, second, alphabet: Sequence, max_len: int):
    """Compare two languages on every word of length at most ``max_len``.

    Each side may be a Regex, a Dfa or a predicate on letter tuples.  The
    search skips a subtree only when neither automaton side can still accept,
    so the comparison is exhaustive.  Returns None on agreement, otherwise
    the first disagreeing word.
    """
    r1, r2 = _runner(first), _runner(second)
    stack = [((), r1.start(), r2.start())]
    while stack:
        w, s1, s2 = stack.pop()
        if r1.accepting(s1) != r2.accepting(s2):
            return w
        if len(w) == max_len or (r1.dead(s1) and r2.dead(s2)):
            continue
        for a in reversed(alphabet):
            stack.append((w + (a,), r1.step(s1, a), r2.step(s2, a)))
    return None


# ---------------------------------------------------------------------------
# Arden elimination
# ---------------------------------------------------------------------------


def solve_right_linear(coeffs: list[dict[int, Regex]], consts: list[Regex]) -> Regex:
    """Solve X_i = sum_j A_ij X_j + E_i for X_0, eliminating from the last index.

    Each step applies Arden's rule X = A X + E  =>  X = A* E; the
    coefficients must not contain id.
    """
    A = [dict(row) for row in coeffs]
    E = list(consts)
    for k in range(len(E) - 1, -1, -1):
        loop = A[k].pop(k, EMPTY)
        if not isinstance(loop, Empty):
            if regex_membership(loop, ()):
                raise ValidationError("Arden's rule needs coefficients without id")
            s = star(loop)
            A[k] = {j: cat(s, a) for j, a in A[k].items()}
            E[k] = cat(s, E[k])
        if k == 0:
            break
        for i in range(k):
            aik = A[i].pop(k, None)
            if aik is None:
                continue
            for j, a in A[k].items():
                A[i][j] = alt(A[i].get(j, EMPTY), cat(aik, a))
            E[i] = alt(E[i], cat(aik, E[k]))
    return E[0]


def dfa_to_regex(dfa: Dfa, terminal: Iterable[int] | None = None) -> Regex:
    """Regular expression for the language of ``dfa`` (optionally re-targeted).

    States are renumbered in breadth-first order from the initial state and
    states that cannot reach a terminal are dropped before elimination.
    """
    term = frozenset(dfa.terminal if terminal is None else terminal)
    view = Dfa(dfa.labels, dfa.alphabet, dfa.initial, dfa.transitions, term)
    live = view.live_states()
    if dfa.initial not in live:
        return EMPTY
    order = [dfa.initial]
    seen = {dfa.initial}
    q = deque(order)
    while q:
        s = q.popleft()
        for a in dfa.alphabet:
            t = dfa.transitions.get((s, a))
            if t is not None and t in live and t not in seen:
                seen.add(t)
                order.append(t)
                q.append(t)
    idx = {s: i for i, s in enumerate(order)}
    coeffs: list[dict[int, Regex]] = [dict() for _ in order]
    consts = [EPS if s in term else EMPTY for s in order]
    for s in order:
        for a in dfa.alphabet:
            t = dfa.transitions.get((s, a))
            if t in idx:
                row = coeffs[idx[s]]
                row[idx[t]] = alt(row.get(idx[t], EMPTY), Sym(a))
    return solve_right_linear(coeffs, consts)


# ---------------------------------------------------------------------------
# Kan acceptors
# ---------------------------------------------------------------------------

# NFA state labels: ("s0",), ("D",), ("obj", B), ("tag", x), ("tpre", x, path),
# ("ppre", path)

S0 = ("s0",)
DUMP = ("D",)


def format_state(label) -> str:
    kind = label[0]
    if kind in ("s0", "D"):
        return kind
    if kind in ("obj", "tag"):
        return label[1]
    if kind == "tpre":
        return f"{label[1]}|{''.join(label[2])}"
    if kind == "ppre":
        return "".join(label[1])
    return repr(label)


def _prefix_sets(words: Iterable[tuple], shortest: int = 1) -> tuple[set, set]:
    lhs = set(words)
    ppl = {w[:k] for w in lhs for k in range(shortest, len(w))}
    return lhs, ppl


def build_reducibility_nfa(R) -> Nfa:
    """NFA accepting ill-typed words and words with a redex.

    ``R`` is a MixedRewriteSystem.  Tag states follow their own T-prefixes
    and also behave like the object state F(A), so P-rule redexes that start
    straight after the tag are caught.  Once D is reached the run is
    accepted, so any subset containing D is replaced by {D}.
    """
    pres = R.pres
    graph = pres.graphB
    t_lhs, t_ppl = _prefix_sets([(r.lhs.tag,) + r.lhs.path for r in R.t_rules
                                 if r.lhs != r.rhs], shortest=2)
    p_lhs, p_ppl = _prefix_sets(tuple(r.lhs) for r in R.p_rules if r.lhs != r.rhs)
    tags = pres.tags
    arrows = graph.arrows
    alphabet = tuple(tags) + tuple(a.label for a in arrows)

    def order(w):
        return (len(w), [alphabet.index(c) for c in w])

    states = [S0]
    states += [("tag", x) for x in tags]
    states += [("tpre", w[0], w[1:]) for w in sorted(t_ppl, key=order)]
    states += [("obj", b) for b in graph.objects]
    states += [("ppre", w) for w in sorted(p_ppl, key=order)]
    states.append(DUMP)

    def tau(label):
        return state_tau(label, pres)

    def object_step(obj, a):
        if a.src != obj:
            return {DUMP}
        w = (a.label,)
        if w in p_lhs:
            return {DUMP}
        if w in p_ppl:
            return {("ppre", w), ("obj", a.tgt)}
        return {("obj", a.tgt)}

    def tag_like_step(key, obj, a):
        if a.src != obj:
            return {DUMP}
        w = key + (a.label,)
        if w in t_lhs:
            return {DUMP}
        if w in t_ppl:
            return {("tpre", w[0], w[1:]), ("obj", a.tgt)}
        return {("obj", a.tgt)}

    trans = {}
    for s in states:
        for x in tags:
            if s == S0:
                trans[(s, x)] = {DUMP} if (x,) in t_lhs else {("tag", x)}
            else:
                trans[(s, x)] = {DUMP}
        for a in arrows:
            kind = s[0]
            if kind in ("s0", "D"):
                out = {DUMP}
            elif kind == "obj":
                out = object_step(s[1], a)
            elif kind == "tag":
                out = tag_like_step((s[1],), tau(s), a) | object_step(tau(s), a)
            elif kind == "tpre":
                out = tag_like_step((s[1],) + s[2], tau(s), a)
            else:
                w = s[1] + (a.label,)
                if a.src != tau(s) or w in p_lhs:
                    out = {DUMP}
                elif w in p_ppl:
                    out = {("ppre", w), ("obj", a.tgt)}
                else:
                    out = {("obj", a.tgt)}
            trans[(s, a.label)] = out
    for key, out in trans.items():
        trans[key] = frozenset({DUMP}) if DUMP in out else frozenset(out)
    return Nfa(tuple(states), alphabet, frozenset({S0}), trans, frozenset({S0, DUMP}))


def state_tau(label, pres):
    """Object of Delta reached by an NFA state (None for s0 and D)."""
    kind = label[0]
    if kind == "obj":
        return label[1]
    if kind == "tag":
        return pres.tag_start(label[1])
    if kind == "tpre":
        return pres.graphB.path_target(pres.tag_start(label[1]), label[2])
    if kind == "ppre":
        return pres.graphB.arrow(label[1][-1]).tgt
    return None


def _subset_tau(subset, pres):
    taus = {state_tau(l, pres) for l in subset}
    if None in taus or len(taus) != 1:
        return None
    return taus.pop()


def kan_acceptor(R) -> Dfa:
    """Complete DFA accepting exactly the encodings of irreducible terms."""
    return complement_dfa(complete_dfa(determinize(build_reducibility_nfa(R))))


def regex_for_object(dfa: Dfa, pres, b: str) -> Regex:
    """Regex for the normal forms with target ``b``.

    ``dfa`` is the irreducibles acceptor; its terminal set is narrowed to the
    states whose NFA labels all sit over ``b``.
    """
    if b not in pres.graphB.objects:
        raise ValidationError(f"{b!r} is not an object of Delta")
    term = frozenset(i for i in dfa.terminal if _subset_tau(dfa.labels[i], pres) == b)
    view = Dfa(dfa.labels, dfa.alphabet, dfa.initial, dfa.transitions, term)
    return dfa_to_regex(glue_states(view))


# ---------------------------------------------------------------------------
# Monomial acceptors
# ---------------------------------------------------------------------------


def build_monomial_acceptor(leading: Iterable[Sequence[str]], alphabet: Sequence[str]):
    """DFA and regex for the words avoiding every leading monomial as a factor."""
    lhs, ppl = _prefix_sets(tuple(m) for m in leading)
    if () in lhs:
        # the identity is a leading monomial: nothing survives
        dfa = Dfa((frozenset(),), tuple(alphabet), 0, {(0, a): 0 for a in alphabet}, frozenset())
        return dfa, EMPTY
    home = ("obj", "*")
    states = [home] + [("ppre", w) for w in sorted(ppl, key=lambda w: (len(w), w))] + [DUMP]
    trans = {}
    for s in states:
        for a in alphabet:
            if s == DUMP:
                out = {DUMP}
            else:
                w = (s[1] if s[0] == "ppre" else ()) + (a,)
                if w in lhs:
                    out = {DUMP}
                elif w in ppl:
                    out = {("ppre", w), home}
                else:
                    out = {home}
            trans[(s, a)] = frozenset({DUMP}) if DUMP in out else frozenset(out)
    # the home state fans out to fresh prefixes, prefix states only extend
    nfa = Nfa(tuple(states), tuple(alphabet), frozenset({home}), trans, frozenset({DUMP}))
    dfa = complement_dfa(complete_dfa(determinize(nfa)))
    return dfa, dfa_to_regex(glue_states(dfa))
