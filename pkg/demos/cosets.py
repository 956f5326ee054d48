"""Right cosets of two subgroups, computed as Kan extensions.

Run from the repository root:  python3 demos/cosets.py
"""

from __future__ import annotations

import json
from pathlib import Path

from kanrw import kan

DATA = Path(__file__).resolve().parent.parent / "data"

for name in ("coset_c2.json", "coset_b.json"):
    with open(DATA / name, encoding="utf-8") as fh:
        doc = json.load(fh)
    pres = kan.build_special_case("coset", doc)
    R = kan.complete_kan(kan.initial_rules(pres))
    res = kan.enumerate_kan(R)
    cosets = res.elements()
    print(f"subgroup <{', '.join(doc['subgroup'])}>: {len(R)} rules, {len(cosets)} cosets")
    print("  representatives:", ", ".join(str(t) for t in cosets))
    # how each generator permutes the cosets
    for g in doc["generators"]:
        perm = [str(res.action[(t, g)]) for t in cosets]
        print(f"  .{g}: {perm}")
    print()

# %% Orbits and conjugacy classes use the same machinery
for kind, name in (("orbit", "orbit_s3.json"), ("conjugacy", "conjugacy_q8.json")):
    with open(DATA / name, encoding="utf-8") as fh:
        pres = kan.build_special_case(kind, json.load(fh))
    res = kan.enumerate_kan(kan.complete_kan(kan.initial_rules(pres)))
    print(f"{kind}: {[t.tag for t in res.elements()]}")
