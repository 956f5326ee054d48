"""Walk through a small Kan extension: rules, completion, census and regexes.

Run from the repository root:  python3 demos/kan_example.py
"""

from __future__ import annotations

import json
from pathlib import Path

from kanrw import automata as au
from kanrw import kan

DATA = Path(__file__).resolve().parent.parent / "data"

# %% Load the presentation and build the initial rewriting system
with open(DATA / "kan_example.json", encoding="utf-8") as fh:
    pres = kan.kan_from_json(json.load(fh))

init = kan.initial_rules(pres)
print(f"initial system: {len(init.t_rules)} T-rules, {len(init.p_rules)} P-rules")
for lhs, rhs in init.pairs():
    print(f"  {lhs} -> {rhs}")

# %% Critical pairs of the initial system
for cp in kan.find_overlaps(init):
    print(f"  type {cp.kind:>3}: {cp.term} splits into {cp.left} / {cp.right}")

# %% Complete
R = kan.complete_kan(init)
print(f"\ncompleted: {len(R)} rules")
for lhs, rhs in R.pairs():
    print(f"  {lhs} -> {rhs}")

# %% The extension is infinite, so enumeration stops at a limit
res = kan.enumerate_kan(R, limit=200)
print(f"\noverflow at 200 elements: {res.overflow}")

# A single term still reduces fine
t = kan.TaggedTerm("x3", ("b1", "b2", "b3", "b4"))
print(f"{t} reduces to {kan.reduce_term(t, R)}")

# %% Regular expressions for the normal forms over each object
dfa = au.kan_acceptor(R)
print(f"\nacceptor: {dfa.size} states, {au.glue_states(dfa).size} after gluing")
for b in pres.obB:
    print(f"  {b}: {au.format_regex(au.regex_for_object(dfa, pres, b))}")
