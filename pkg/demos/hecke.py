"""Noncommutative Groebner bases: a finite Hecke-type algebra and an infinite example.

Run from the repository root:  python3 demos/hecke.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from kanrw import automata as au
from kanrw import ncpoly as nc

DATA = Path(__file__).resolve().parent.parent / "data"

with open(DATA / "hecke.json", encoding="utf-8") as fh:
    doc = json.load(fh)
gens = doc["generators"]
P = [nc.parse_poly(s, gens) for s in doc["polynomials"]]

# %% Reduction with a trace
p = nc.parse_poly("e1*e2*e1*e2*e1", gens)
r, steps = nc.reduce_poly(p, P, trace=True)
print(f"{p}  ->  {r}")
for st in steps:
    print(f"  subtract {st.coeff} * {st.left} * P[{st.index}] * {st.right}")
assert nc.replay_trace(p, P, steps) == r

# %% Buchberger adds nothing here, and the quotient has dimension 6
gb = nc.buchberger(P)
dim = nc.algebra_dimension(gb)
print(f"\nbasis size {len(gb)}, dimension {dim.dimension}: {[''.join(m) or 'id' for m in dim.monomials]}")

# %% The reduction machine gives the same answer whatever order tokens move in
for seed in range(3):
    print("machine:", nc.run_grobner_machine(p, P, random.Random(seed)))

# %% Leading monomials a^3 and ba^2b alone leave infinitely many monomials
lead = [("a", "a", "a"), ("b", "a", "a", "b")]
_, regex = au.build_monomial_acceptor(lead, ["a", "b"])
print("\nirreducible monomials:", au.format_regex(regex))

# completing the actual polynomials collapses this to a finite algebra
with open(DATA / "infinite_algebra.json", encoding="utf-8") as fh:
    doc = json.load(fh)
gb = nc.buchberger(nc.parse_poly(s, doc["generators"]) for s in doc["polynomials"])
print("after completion:")
for f in gb:
    print("  ", f)
print("dimension", nc.algebra_dimension(gb).dimension)
