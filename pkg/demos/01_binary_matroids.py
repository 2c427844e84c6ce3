"""Binary matroids as GF(2) matrices: rank, minors, duality, circuits.

Run: python3 demos/01_binary_matroids.py
"""

from __future__ import annotations

from matlift import named
from matlift.gf2 import Gf2Matrix
from matlift.matroid import (
    circuits,
    cocircuits,
    contract,
    delete,
    dual,
    dumps_matroid,
    from_matrix,
    is_eulerian,
    odd_cocircuits,
    subset_rank,
)

# The Fano plane: seven nonzero vectors of GF(2)^3.
F7 = from_matrix("abcdefg", Gf2Matrix.from_strings(["1001101", "0101011", "0010111"]), "F7")
print(dumps_matroid(F7))
print("rank of {a, b, d}:", subset_rank(F7, "abd"))
print("lines of the plane:", sorted("".join(sorted(c)) for c in circuits(F7) if len(c) == 3))

# Deleting a point leaves M(K4); contracting one gives three parallel pairs.
print("F7 \\ g:", delete(F7, "g").rank, "rank on", delete(F7, "g").size, "elements")
print("F7 / g circuits:", sorted("".join(sorted(c)) for c in circuits(contract(F7, "g"))))

# Duality swaps deletion and contraction.
assert dual(delete(F7, "a")) == contract(dual(F7), "a")
print("F7* has rank", dual(F7).rank, "and", len(cocircuits(dual(F7))), "cocircuits")

# Parity of cocircuits decides whether the ground set splits into circuits.
for name in ("M(K5)", "M(K33)"):
    M = named(name)
    print(f"{name}: Eulerian={is_eulerian(M)}, odd cocircuits={len(odd_cocircuits(M))}")
