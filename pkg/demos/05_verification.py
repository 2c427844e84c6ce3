"""Machine-checked statements over a bounded corpus of bond matroids.

Run: python3 demos/05_verification.py   (about a minute)
"""

from __future__ import annotations

from matlift import verify
from matlift.corpus import bond_corpus

corpus = bond_corpus(6)
print(f"{len(corpus)} bond matroids of connected multigraphs with at most 6 edges")

reports = [
    verify.verify_recognition_table(),
    verify.verify_eulerian_facts(),
    verify.verify_theorem_C2(max_edges=6),
    verify.verify_theorem_C3(max_edges=6),
]
for report in reports:
    print(report.text())
    print("    certificates that fail replay:", verify.replay_report(report))

print()
print("\n".join(r.machine_line() for r in reports))
