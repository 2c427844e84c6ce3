"""Graphic and cographic recognition by excluded minors, with witnesses.

Run: python3 demos/02_recognition.py
"""

from __future__ import annotations

from matlift import has_minor, is_cographic, is_graphic, is_isomorphic, named, split

for name in ("F7", "F7*", "M(K5)", "M*(K5)", "M(K33)", "M*(K33)"):
    M = named(name)
    g, c = is_graphic(M), is_cographic(M)
    print(f"{name:8s} graphic={bool(g)!s:5s} cographic={bool(c)!s:5s}", end="")
    if not g:
        w = g.witness
        print(f"  [{g.excluded} after deleting {sorted(w.deleted)} and contracting {sorted(w.contracted)}]", end="")
    print()

# A splitting of M*(K3,3) that is not graphic, and where the obstruction sits.
verdict = is_graphic(split(named("M*(K33)"), ["e1", "e5"]))
w = verdict.witness
print(f"M*(K33) split by e1,e5 has an {verdict.excluded} minor: delete {sorted(w.deleted)}, contract {sorted(w.contracted)}")

# A witness is just a delete/contract pair; replaying it needs no search.
w = has_minor(named("M*(K5)"), named("M(Q1)"))
print("M(Q1) is a minor of M*(K5): contract", sorted(w.contracted), "delete", sorted(w.deleted))
print("bijection:", is_isomorphic(w.apply(named("M*(K5)")), named("M(Q1)")))

# The graph drawn as Q2 is not reachable from M*(K3,3).
print("M(Q2) in M*(K33):", has_minor(named("M*(K33)"), named("M(Q2)")))
