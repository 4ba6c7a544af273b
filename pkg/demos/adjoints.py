"""Right adjoints of monotone maps, found through comma categories.

The collage of a functor is a coCartesian fibration over [1]; it is also
Cartesian exactly when the functor has a right adjoint. Both routes are run.
"""
from sscat.colim_adj import adjunction_consistency, left_adjoint_via_comma
from sscat.fixtures import constant_monotone_map, galois_connection

for name, F in (("galois", galois_connection()), ("constant", constant_monotone_map())):
    res = left_adjoint_via_comma(F)
    cons = adjunction_consistency(F)
    print(f"{name}: has right adjoint={res.ok} collage cartesian={cons.cartesian}")
    if res.ok:
        print("  G on objects:", res.adjoint.ob_map)
        print("  counit:", res.certificate.counit)
    else:
        print("  no terminal object in the comma category over", res.failing)
