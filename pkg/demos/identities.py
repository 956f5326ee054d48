"""Identities among relations for S3 and Q8.

Run from the repository root:  python3 demos/identities.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from kanrw import idrel as ir
from kanrw.presentations import format_fg_word

DATA = Path(__file__).resolve().parent.parent / "data"


def load(name):
    with open(DATA / name, encoding="utf-8") as fh:
        return json.load(fh)


s3 = ir.group_ir(["x", "y"], load("s3_group.json")["relators"])

# %% Rewriting with extra information: each rule carries a witness
rules, ok = ir.kb2(ir.initial_eirs(s3), s3)
print("complete:", ok)
for rule in rules:
    print(" ", rule, "holds" if ir.witness_holds(rule, s3) else "FAILS")

c, z = ir.reduce_word2("x^5*y*x", rules, s3)
print(f"\nx^5*y*x reduces to {z} with witness {ir.format_ysequence(c)}")

# %% One identity per (element, relator)
res = ir.idrel(s3)
data = res.data
print(f"\n{len(res.identities)} identities, all with trivial boundary: {res.is_ids_record}")
for rec in res.identities[:6]:
    image = ir.format_group_ring(ir.alpha_map(rec.sequence, data), data)
    print(f"  {rec.rel} at {format_fg_word(rec.element)}: {ir.format_ysequence(rec.sequence)}  ~>  {image}")

# %% Peiffer exchanges scramble a cancelling sequence without changing its image
seq = ir.random_trivial_sequence(data, random.Random(3))
print("\nscrambled:", ir.format_ysequence(seq))
print("image:", ir.format_group_ring(ir.alpha_map(seq, data), data),
      "primary:", ir.primary_identity_check(seq, data))

# %% Q8 for comparison
q8 = ir.idrel(ir.group_ir(["a", "b"], load("q8_group.json")["relators"]))
print(f"\nQ8: {len(q8.data.elements)} elements, {len(q8.identities)} identities")
