"""Elementary quotients of the excluded minors for graphicness.

Run: python3 demos/04_quotients.py
"""

from __future__ import annotations

from matlift import elementary_quotients, named
from matlift.catalog import identify
from matlift.verify import Q_GRAPHS, nongraphic_free_quotient_classes

for source in ("F7*", "F7", "M*(K33)", "M*(K5)"):
    records = elementary_quotients(named(source), dedupe_isomorphic=True, match_catalog=False)
    graphic = sorted(identify(r.quotient, Q_GRAPHS) or "?" for r in records if r.is_graphic)
    print(f"{source:8s} graphic quotient classes: {graphic}")

# Non-graphic quotients with no F7 or F7* minor.
for source in ("F7", "F7*", "M*(K33)", "M*(K5)"):
    classes = nongraphic_free_quotient_classes(source)
    print(f"{source:8s} non-graphic F7/F7*-free classes: {len(classes)}",
          [f"rank {Q.rank}" for _, Q in classes])
