"""Recover a category from its classification diagram.

The nerve of I(1) is Segal but not complete. Its classifying diagram is
complete, and the homotopy category of either one is I(1) again.
"""
from sscat.fincat import are_isomorphic, iso_category
from sscat.simpset import nerve
from sscat.sspace import classifying_diagram, completeness_check, embed_vertical, homotopy_category

c = iso_category(1)
for name, t in (("nerve", embed_vertical(nerve(c, 3), 1)), ("classifying", classifying_diagram(c, 3, 2))):
    r = completeness_check(t)
    print(f"{name}: regime={r.strategy} complete={r.ok} level0={r.counts[0]}")
    print("  homotopy category is I(1):", are_isomorphic(homotopy_category(t), c))
