"""Noncommutative polynomials over Q, reduction and Buchberger completion.

Monomials are tuples of generator names; the empty tuple is the unit.
Terms are kept sorted by length-lex over the declared generator order with
the leading term first.
"""

from __future__ import annotations

import random as _random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError, ValidationError
from .presentations import CompletionBudget, format_word

__all__ = [
    "NcPolynomial",
    "GrobnerBasis",
    "ReductionStep",
    "Dimension",
    "neaten",
    "parse_poly",
    "format_poly",
    "reduce_poly",
    "replay_trace",
    "s_polynomials",
    "interreduce_polys",
    "buchberger",
    "algebra_dimension",
    "machine_graph",
    "run_grobner_machine",
]

Monomial = tuple


def _key(m: Monomial, rank: dict) -> tuple:
    return (len(m), tuple(rank[x] for x in m))


@dataclass(frozen=True)
class NcPolynomial:
    """A formal sum of rational multiples of monomials.

    Construct through :func:`neaten` (or :meth:`of`) to get the canonical
    form; arithmetic always returns neat polynomials.
    """

    terms: tuple  # ((Fraction, Monomial), ...)
    gens: tuple
    _rank: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_rank", {x: i for i, x in enumerate(self.gens)})
        for _, m in self.terms:
            for x in m:
                if x not in self._rank:
                    raise ValidationError(f"undeclared generator {x!r}")

    @classmethod
    def of(cls, terms: Iterable[tuple], gens: Sequence[str]) -> "NcPolynomial":
        return neaten(cls(tuple((Fraction(c), tuple(m)) for c, m in terms), tuple(gens)))

    @classmethod
    def monomial(cls, m: Sequence[str], gens: Sequence[str], coeff=1) -> "NcPolynomial":
        return cls.of([(coeff, m)], gens)

    def key(self, m: Monomial) -> tuple:
        return _key(m, self._rank)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lead_term(self):
        return self.terms[0]

    @property
    def lead_coeff(self) -> Fraction:
        return self.terms[0][0]

    @property
    def lead_monom(self) -> Monomial:
        return self.terms[0][1]

    def monic(self) -> "NcPolynomial":
        if self.is_zero():
            return self
        c = self.lead_coeff
        return NcPolynomial(tuple((k / c, m) for k, m in self.terms), self.gens)

    def _same(self, other: "NcPolynomial") -> None:
        if self.gens != other.gens:
            raise ValidationError("polynomials over different generator lists")

    def __add__(self, other: "NcPolynomial") -> "NcPolynomial":
        self._same(other)
        return neaten(NcPolynomial(self.terms + other.terms, self.gens))

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial(tuple((-c, m) for c, m in self.terms), self.gens)

    def __sub__(self, other: "NcPolynomial") -> "NcPolynomial":
        return self + (-other)

    def scale(self, c) -> "NcPolynomial":
        return neaten(NcPolynomial(tuple((Fraction(c) * k, m) for k, m in self.terms), self.gens))

    def mul_term(self, coeff=1, left: Sequence[str] = (), right: Sequence[str] = ()
                 ) -> "NcPolynomial":
        """coeff * left * self * right."""
        left, right = tuple(left), tuple(right)
        c = Fraction(coeff)
        if c == 0:
            return NcPolynomial((), self.gens)
        # left/right multiplication preserves the order, so no resort is needed
        return NcPolynomial(tuple((c * k, left + m + right) for k, m in self.terms), self.gens)

    def __mul__(self, other: "NcPolynomial") -> "NcPolynomial":
        self._same(other)
        return neaten(NcPolynomial(tuple((a * b, m + n) for a, m in self.terms
                                         for b, n in other.terms), self.gens))

    def monomials(self) -> list[Monomial]:
        return [m for _, m in self.terms]

    def __str__(self) -> str:
        return format_poly(self)


def neaten(p: NcPolynomial) -> NcPolynomial:
    """Add like terms, drop zeros, sort descending by length-lex."""
    acc: dict = {}
    for c, m in p.terms:
        acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
    terms = sorted(((c, m) for m, c in acc.items() if c != 0), key=lambda t: p.key(t[1]),
                   reverse=True)
    return NcPolynomial(tuple(terms), p.gens)


def _fmt_monomial(m: Monomial) -> str:
    return format_word(m, empty="1")


def format_poly(p: NcPolynomial) -> str:
    if p.is_zero():
        return "0"
    out = []
    for i, (c, m) in enumerate(p.terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if m and a == 1:
            body = _fmt_monomial(m)
        elif m:
            body = f"{a} {_fmt_monomial(m)}"
        else:
            body = str(a)
        out.append((("-" if sign == "-" else "") if i == 0 else f" {sign} ") + body)
    return "".join(out)


_NUM = re.compile(r"\d+(?:/\d+)?")


def parse_poly(text: str, gens: Sequence[str]) -> NcPolynomial:
    """Read terms ``k m`` joined by + and -.

    ``k`` is an integer or ``p/q`` and may be omitted; ``m`` is generator
    names, optionally separated by ``*`` and with ``^n`` powers; a bare
    number is a multiple of the unit.
    """
    names = sorted(gens, key=len, reverse=True)
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    terms = []
    i = 0
    while i < len(s):
        sign = 1
        while i < len(s) and s[i] in "+-":
            sign = -sign if s[i] == "-" else sign
            i += 1
        coeff = Fraction(1)
        mt = _NUM.match(s, i)
        have_num = False
        if mt and not any(s.startswith(nm, i) for nm in names):
            coeff = Fraction(mt.group())
            i = mt.end()
            have_num = True
        mono: list[str] = []
        while i < len(s) and s[i] not in "+-":
            if s[i] == "*":
                i += 1
                continue
            if s[i] == "^":
                mp = re.match(r"\^(\d+)", s[i:])
                if not mp or not mono:
                    raise ParseError(f"bad exponent at {i}")
                mono.extend([mono[-1]] * (int(mp.group(1)) - 1))
                i += mp.end()
                continue
            for nm in names:
                if s.startswith(nm, i):
                    mono.append(nm)
                    i += len(nm)
                    break
            else:
                if s[i] == "1" and not mono:
                    i += 1
                    continue
                raise ParseError(f"unexpected {s[i:i + 6]!r} in polynomial")
        if not mono and not have_num and (i == 0 or s[i - 1] in "+-"):
            raise ParseError("empty term")
        terms.append((sign * coeff, tuple(mono)))
    return NcPolynomial.of(terms, gens)


# ---------------------------------------------------------------------------
# Reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    """One step: subtract ``coeff * left * basis[index] * right``."""

    coeff: Fraction
    left: Monomial
    index: int
    right: Monomial


def _find(m: Monomial, lm: Monomial):
    n, k = len(m), len(lm)
    return [s for s in range(n - k + 1) if m[s:s + k] == lm]


def _check_basis(basis: Sequence[NcPolynomial]) -> None:
    for f in basis:
        if f.is_zero() or f.lead_coeff != 1:
            raise ValidationError("basis polynomials must be nonzero and monic")


def reduce_poly(p: NcPolynomial, basis: Sequence[NcPolynomial], trace: bool = False,
                rng: _random.Random | None = None):
    """Subtract multiples of basis elements until no monomial is reducible.

    By default the largest reducible monomial is treated first, using the
    first basis element and the leftmost match.  With ``rng`` the monomial,
    element and position are chosen at random.  With ``trace`` a list of
    :class:`ReductionStep` is returned as well.
    """
    _check_basis(basis)
    steps: list[ReductionStep] = []
    cur = p
    while True:
        options = []
        for c, m in cur.terms:
            for idx, f in enumerate(basis):
                for s in _find(m, f.lead_monom):
                    options.append((c, m, idx, s))
                    if rng is None:
                        break
                if options and rng is None:
                    break
            if options and rng is None:
                break
        if not options:
            break
        c, m, idx, s = options[0] if rng is None else rng.choice(options)
        lm = basis[idx].lead_monom
        left, right = m[:s], m[s + len(lm):]
        steps.append(ReductionStep(c, left, idx, right))
        cur = cur - basis[idx].mul_term(c, left, right)
    return (cur, steps) if trace else cur


def replay_trace(p: NcPolynomial, basis: Sequence[NcPolynomial], steps: Sequence[ReductionStep]
                 ) -> NcPolynomial:
    """p minus the ideal element recorded by ``steps``."""
    out = p
    for st in steps:
        out = out - basis[st.index].mul_term(st.coeff, st.left, st.right)
    return out


def s_polynomials(p: NcPolynomial, q: NcPolynomial) -> list[NcPolynomial]:
    """S-polynomials from every overlap of the two leading monomials.

    Containments in either direction and proper boundary overlaps with p on
    the left or on the right.  For ``p is q`` (or equal) the trivial
    containment is skipped and each self-overlap is produced once.
    """
    out = []
    same = p == q
    l1, l2 = p.lead_monom, q.lead_monom
    pairs = [(p, q, l1, l2)] if same else [(p, q, l1, l2), (q, p, l2, l1)]
    for n, (f, g, a, b) in enumerate(pairs):
        # b inside a; equal leading monomials give one S-polynomial, none for p with itself
        if not same and not (n == 1 and a == b):
            for s in _find(a, b):
                out.append(f - g.mul_term(1, a[:s], a[s + len(b):]))
        # suffix of a equals prefix of b
        for k in range(1, min(len(a), len(b))):
            if a[-k:] == b[:k]:
                out.append(f.mul_term(1, (), b[k:]) - g.mul_term(1, a[:-k], ()))
    return out


def interreduce_polys(polys: Iterable[NcPolynomial]) -> list[NcPolynomial]:
    """Monic, nonzero, each reduced by the others; sorted by leading monomial."""
    work = [f.monic() for f in polys if not f.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            others = [g for j, g in enumerate(work) if j != i]
            r = reduce_poly(work[i], others) if others else work[i]
            if r != work[i]:
                changed = True
                work = others[:i] + ([r.monic()] if not r.is_zero() else []) + others[i:]
                break
    uniq: list[NcPolynomial] = []
    for f in work:
        if f not in uniq:
            uniq.append(f)
    return sorted(uniq, key=lambda f: f.key(f.lead_monom))


@dataclass(frozen=True)
class GrobnerBasis:
    polys: tuple
    complete: bool
    passes: int = 0

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [f.lead_monom for f in self.polys]


def buchberger(polys: Iterable[NcPolynomial], budget: CompletionBudget | None = None
               ) -> GrobnerBasis:
    """Add reduced S-polynomials until all reduce to zero.

    The basis is interreduced once per pass.  If the budget runs out the
    partial basis is returned with ``complete`` False.
    """
    budget = budget or CompletionBudget()
    basis = interreduce_polys(polys)
    passes = 0
    while True:
        if passes >= budget.max_passes:
            return GrobnerBasis(tuple(basis), False, passes)
        passes += 1
        new = []
        current = list(basis)
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                for s in s_polynomials(basis[i], basis[j]):
                    r = reduce_poly(s, current)
                    if not r.is_zero():
                        r = r.monic()
                        new.append(r)
                        current.append(r)
                        if len(current) > budget.max_rules:
                            return GrobnerBasis(tuple(interreduce_polys(current)), False, passes)
        if not new:
            return GrobnerBasis(tuple(basis), True, passes)
        basis = interreduce_polys(current)


# ---------------------------------------------------------------------------
# Irreducible monomials and the reduction machine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Dimension:
    """Either a finite count with its monomials, or an infinite language."""

    finite: bool
    dimension: int | None
    monomials: tuple
    regex: object


def algebra_dimension(basis, gens: Sequence[str] | None = None) -> Dimension:
    from . import automata as au

    polys = list(basis)
    if gens is None:
        if not polys:
            raise ValidationError("generators are needed for an empty basis")
        gens = polys[0].gens
    dfa, regex = au.build_monomial_acceptor([f.lead_monom for f in polys], list(gens))
    live = dfa.live_states()
    # a cycle through live states means infinitely many monomials
    colour: dict[int, int] = {}

    def cyclic(s) -> bool:
        colour[s] = 1
        for a in dfa.alphabet:
            t = dfa.transitions.get((s, a))
            if t is None or t not in live:
                continue
            if colour.get(t) == 1 or (t not in colour and cyclic(t)):
                return True
        colour[s] = 2
        return False

    if dfa.initial in live and cyclic(dfa.initial):
        return Dimension(False, None, (), regex)
    words: list[Monomial] = []
    stack = [((), dfa.initial)]
    while stack:
        w, s = stack.pop()
        if s in dfa.terminal:
            words.append(w)
        for a in dfa.alphabet:
            t = dfa.transitions.get((s, a))
            if t is not None and t in live:
                stack.append((w + (a,), t))
    rank = {x: i for i, x in enumerate(gens)}
    words.sort(key=lambda m: _key(m, rank))
    return Dimension(True, len(words), tuple(words), regex)


def machine_graph(basis: GrobnerBasis | Sequence[NcPolynomial], gens: Sequence[str] | None = None):
    """Vertices are the irreducible monomials; edges carry (letter, coeff, target).

    Reading letter x at vertex m moves the token to every monomial of
    NF(m.x), scaled by its coefficient.  Only defined for finite algebras.
    """
    polys = list(basis)
    dim = algebra_dimension(polys, gens)
    if not dim.finite:
        raise ValidationError("the machine graph is only built for finite dimension")
    gens = tuple(gens or polys[0].gens)
    edges = {}
    for m in dim.monomials:
        for x in gens:
            nf = reduce_poly(NcPolynomial.monomial(m + (x,), gens), polys)
            edges[(m, x)] = [(c, t) for c, t in nf.terms]
    return dim.monomials, edges


def run_grobner_machine(p: NcPolynomial, basis: Sequence[NcPolynomial],
                        rng: _random.Random | None = None) -> NcPolynomial:
    """Fire tokens one at a time, in random order, until none can move.

    A token ``k`` sitting at vertex m with input x.v still to read is
    replaced by the tokens ``c_i * k`` at the monomials m_i of NF(m.x), each
    with input v.  The final marking, read as a polynomial, is returned.
    """
    rng = rng or _random.Random(0)
    polys = list(basis)
    gens = p.gens
    cache: dict = {}
    tokens: dict[tuple, Fraction] = {}
    for c, m in p.terms:
        tokens[((), m)] = tokens.get(((), m), Fraction(0)) + c
    final: list = []
    while tokens:
        keys = [k for k, c in tokens.items()]
        key = rng.choice(keys)
        k = tokens.pop(key)
        if k == 0:
            continue
        vertex, rest = key
        if not rest:
            final.append((k, vertex))
            continue
        x, v = rest[0], rest[1:]
        if (vertex, x) not in cache:
            cache[(vertex, x)] = reduce_poly(NcPolynomial.monomial(vertex + (x,), gens), polys).terms
        for c, m in cache[(vertex, x)]:
            nk = (m, v)
            tokens[nk] = tokens.get(nk, Fraction(0)) + c * k
    return NcPolynomial.of(final, gens)
