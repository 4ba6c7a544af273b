"""The spine space G(2) is levelwise a simplicial set, but it is not Segal.

Run with ``python3 demos/segal_failure.py``.
"""
from sscat.sspace import delta_space, segal_space_check, spine_space

for name, t in (("F(2)", delta_space(2, 3, 1)), ("G(2)", spine_space(2, 3, 1))):
    r = segal_space_check(t)
    print(f"{name}: segal={r.ok}")
    for (n, l), (have, want) in sorted(r.counts.items()):
        if l == 0:
            # have = n-simplices, want = composable strings of n edges
            print(f"  level {n}: {have} simplices, {want} spine fillers")
