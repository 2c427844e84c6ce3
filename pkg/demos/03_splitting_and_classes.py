"""Splitting a matroid by a set of elements, elementary lifts, and the classes C_k.

Run: python3 demos/03_splitting_and_classes.py
"""

from __future__ import annotations

from matlift import class_Ck, is_graphic, is_minimal_excluded, named, split
from matlift.construct import lift_coextension
from matlift.matroid import contract, delete

M = named("M*(K33)")
S = ["e1", "e2"]
M_S = split(M, S)
print(f"splitting {M.name} by {S}: rank {M.rank} -> {M_S.rank}, graphic={bool(is_graphic(M_S))}")

# The splitting is the deletion of a coextension that contracts back to M.
Q, z = lift_coextension(M, S)
assert contract(Q, [z]) == M and delete(Q, [z]) == M_S

for k in (1, 2, 3):
    witness = class_Ck(M, k)
    verdict = "member" if witness is None else f"outside, witness S={sorted(witness.S)} ({witness.excluded})"
    print(f"{M.name} in C{k}: {verdict}")

for name in ("M(G1)", "M(G2)"):
    print(f"{name} minimal outside C2: {is_minimal_excluded(named(name), 2)}")
for name in ("M(F1)", "M(F2)"):
    w = class_Ck(named(name), 3)
    print(f"{name} outside C3 via S={sorted(w.S)}, minimal={is_minimal_excluded(named(name), 3)}")
