"""Initial objects, cocones, colimits and adjunctions in finite categories.

Adjunctions are decided twice: through the collage of a functor (a category
over [1] that is always coCartesian and is Cartesian exactly when the functor
has a right adjoint) and through final objects of comma categories.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._util import Budget, SSCatError, search, sort_key
from .fincat import (
    FinCategory,
    Functor,
    functor_category,
    opposite,
    poset_category,
    validate_functor,
)
from .fibrations import is_cartesian_fibration, is_cocartesian_fibration, opposite_functor


def initial_objects(c):
    """Objects with exactly one morphism to every object. Members are checked
    to be pairwise uniquely isomorphic."""
    found = [i for i in c.objects if all(len(c.hom(i, y)) == 1 for y in c.objects)]
    for i in found:
        for j in found:
            (f,) = c.hom(i, j)
            (g,) = c.hom(j, i)
            if c.comp[(g, f)] != c.ident[i]:
                raise SSCatError(f"initial objects {i!r}, {j!r} are not uniquely isomorphic")
    return found


def final_objects(c):
    return initial_objects(opposite(c))


# ---------------------------------------------------------------------------
# cocones and colimits


@dataclass(eq=False)
class Cocone:
    diagram: Functor
    vertex: object
    legs: dict

    def key(self):
        return (self.vertex, tuple(self.legs[i] for i in self.diagram.domain.objects))


def is_cocone(cone):
    F = cone.diagram
    I, C = F.domain, F.codomain
    for i in I.objects:
        leg = cone.legs.get(i)
        if leg not in C.src or C.src[leg] != F.ob_map[i] or C.tgt[leg] != cone.vertex:
            return False
    return all(C.comp[(cone.legs[I.tgt[u]], F.mor_map[u])] == cone.legs[I.src[u]] for u in I.morphisms)


def cocones_at(F, v, budget=None):
    """Leg tuples (in diagram-object order) making a cocone with vertex v."""
    I, C = F.domain, F.codomain
    objs = list(I.objects)
    pos = {i: k for k, i in enumerate(objs)}
    checks = {i: [] for i in objs}
    for u in I.morphisms:
        checks[max(I.src[u], I.tgt[u], key=pos.__getitem__)].append(u)

    def consistent(i, leg, a):
        a[i] = leg
        try:
            return all(C.comp[(a[I.tgt[u]], F.mor_map[u])] == a[I.src[u]] for u in checks[i])
        finally:
            del a[i]

    for a in search(objs, lambda i, _: C.hom(F.ob_map[i], v), consistent, budget):
        yield tuple(a[i] for i in objs)


def all_cocones(F, budget=None):
    budget = budget or Budget(what="cocone enumeration")
    out = []
    for v in F.codomain.objects:
        for legs in cocones_at(F, v, budget):
            out.append(Cocone(F, v, dict(zip(F.domain.objects, legs))))
    return out


def cocone_category(F, budget=None):
    """Objects are (vertex, legs); a morphism (cocone, h) is a vertex map
    commuting with every leg."""
    C = F.codomain
    budget = budget or Budget(what="cocone category")
    cones = [cc.key() for cc in all_cocones(F, budget)]
    morphisms, src, tgt = [], {}, {}
    for k in cones:
        v, legs = k
        for h in C.out_of(v):
            budget.tick()
            image = (C.tgt[h], tuple(C.comp[(h, leg)] for leg in legs))
            m = (k, h)
            morphisms.append(m)
            src[m], tgt[m] = k, image
    ident = {k: (k, C.ident[k[0]]) for k in cones}
    comp = {}
    out_of = {}
    for m in morphisms:
        out_of.setdefault(src[m], []).append(m)
    for f in morphisms:
        for g in out_of.get(tgt[f], ()):
            comp[(g, f)] = (f[0], C.comp[(g[1], f[1])])
    return FinCategory(cones, morphisms, src, tgt, ident, comp)


def colimit(F, budget=None):
    """The least initial cocone, or None."""
    cat = cocone_category(F, budget)
    found = initial_objects(cat)
    if not found:
        return None
    v, legs = min(found, key=sort_key)
    return Cocone(F, v, dict(zip(F.domain.objects, legs)))


def colimit_oracle(F, cand, budget=None):
    """For every y, h |-> (h after leg_i)_i is a bijection from Hom(vertex, y)
    onto the leg-compatible families with vertex y."""
    if not is_cocone(cand):
        return False
    C = F.codomain
    legs = [cand.legs[i] for i in F.domain.objects]
    for y in C.objects:
        families = set(cocones_at(F, y, budget))
        image = [tuple(C.comp[(h, leg)] for leg in legs) for h in C.hom(cand.vertex, y)]
        if len(set(image)) != len(image) or set(image) != families:
            return False
    return True


def opposite_diagram(F):
    return opposite_functor(F)


def limit(F, budget=None):
    """The greatest final cone, computed as a colimit in the opposite category."""
    return colimit(opposite_diagram(F), budget)


# ---------------------------------------------------------------------------
# collage and comma categories


def collage(F):
    """Objects (0, c) and (1, d); cross morphisms (2, c, g) for g: F(c) -> d.
    Returns the category and its projection to [1]."""
    C, D = F.domain, F.codomain
    objects = [(0, c) for c in C.objects] + [(1, d) for d in D.objects]
    morphisms, src, tgt = [], {}, {}
    for f in C.morphisms:
        m = (0, f)
        morphisms.append(m)
        src[m], tgt[m] = (0, C.src[f]), (0, C.tgt[f])
    for g in D.morphisms:
        m = (1, g)
        morphisms.append(m)
        src[m], tgt[m] = (1, D.src[g]), (1, D.tgt[g])
    for c in C.objects:
        for g in D.out_of(F.ob_map[c]):
            m = (2, c, g)
            morphisms.append(m)
            src[m], tgt[m] = (0, c), (1, D.tgt[g])
    ident = {(0, c): (0, C.ident[c]) for c in C.objects}
    ident.update({(1, d): (1, D.ident[d]) for d in D.objects})
    comp = {}
    for f1 in C.morphisms:
        for f2 in C.out_of(C.tgt[f1]):
            comp[((0, f2), (0, f1))] = (0, C.comp[(f2, f1)])
        for g in D.out_of(F.ob_map[C.tgt[f1]]):
            comp[((2, C.tgt[f1], g), (0, f1))] = (2, C.src[f1], D.comp[(g, F.mor_map[f1])])
    for g1 in D.morphisms:
        for g2 in D.out_of(D.tgt[g1]):
            comp[((1, g2), (1, g1))] = (1, D.comp[(g2, g1)])
    for c in C.objects:
        for g in D.out_of(F.ob_map[c]):
            for k in D.out_of(D.tgt[g]):
                comp[((1, k), (2, c, g))] = (2, c, D.comp[(k, g)])
    total = FinCategory(objects, morphisms, src, tgt, ident, comp)
    base = poset_category(1)
    proj = Functor(
        total, base,
        {o: o[0] for o in objects},
        {m: (0, 0) if m[0] == 0 else (1, 1) if m[0] == 1 else (0, 1) for m in morphisms},
    )
    if not is_cocartesian_fibration(proj):
        raise SSCatError("collage projection is not coCartesian")
    return total, proj


def comma_category(F, d):
    """(F | d): objects (c, u) with u: F(c) -> d; morphisms (h, source, target)
    with u' after F(h) = u."""
    C, D = F.domain, F.codomain
    objects = [(c, u) for c in C.objects for u in D.hom(F.ob_map[c], d)]
    by_c = {}
    for o in objects:
        by_c.setdefault(o[0], []).append(o)
    morphisms, src, tgt = [], {}, {}
    for o in objects:
        c, u = o
        for h in C.out_of(c):
            for o2 in by_c.get(C.tgt[h], ()):
                if D.comp[(o2[1], F.mor_map[h])] == u:
                    m = (h, o, o2)
                    morphisms.append(m)
                    src[m], tgt[m] = o, o2
    ident = {o: (C.ident[o[0]], o, o) for o in objects}
    comp = {}
    out_of = {}
    for m in morphisms:
        out_of.setdefault(m[1], []).append(m)
    for f in morphisms:
        for g in out_of.get(f[2], ()):
            comp[(g, f)] = (C.comp[(g[0], f[0])], f[1], g[2])
    return FinCategory(objects, morphisms, src, tgt, ident, comp)


@dataclass
class AdjunctionCertificate:
    left: Functor
    right: Functor
    counit: dict
    hom_bijections: dict
    natural_in_source: bool
    natural_in_target: bool

    @property
    def ok(self):
        return self.natural_in_source and self.natural_in_target


@dataclass
class AdjointResult:
    ok: bool
    adjoint: Functor = None
    certificate: AdjunctionCertificate = None
    failing: object = None


def _least(objs):
    return min(objs, key=sort_key)


def left_adjoint_via_comma(F, tie_break=_least):
    """Decide whether F is a left adjoint. For each d the comma category (F | d)
    must have a final object (G d, counit_d); G on morphisms follows from
    universality and the hom bijection is checked exhaustively."""
    C, D = F.domain, F.codomain
    G_ob, counit = {}, {}
    for d in D.objects:
        finals = final_objects(comma_category(F, d))
        if not finals:
            return AdjointResult(False, failing=d)
        G_ob[d], counit[d] = tie_break(finals)

    def factor(d, c, u):
        """The h: c -> G d with counit_d after F(h) = u (exactly one, else None)."""
        hs = [h for h in C.hom(c, G_ob[d]) if D.comp[(counit[d], F.mor_map[h])] == u]
        return hs[0] if len(hs) == 1 else None

    G_mor = {}
    for k in D.morphisms:
        d, d2 = D.src[k], D.tgt[k]
        h = factor(d2, G_ob[d], D.comp[(k, counit[d])])
        if h is None:
            raise SSCatError(f"universality fails while transporting {k!r}")
        G_mor[k] = h
    G = Functor(D, C, G_ob, G_mor)
    if validate_functor(G):
        raise SSCatError("comma construction did not produce a functor")

    phi = {}
    for c in C.objects:
        for d in D.objects:
            table = {}
            for u in D.hom(F.ob_map[c], d):
                h = factor(d, c, u)
                if h is None:
                    return AdjointResult(False, failing=d)
                table[u] = h
            if len(set(table.values())) != len(table) or len(table) != len(C.hom(c, G_ob[d])):
                return AdjointResult(False, failing=d)
            phi[(c, d)] = table
    nat_src = all(
        phi[(C.src[a], d)][D.comp[(u, F.mor_map[a])]] == C.comp[(phi[(C.tgt[a], d)][u], a)]
        for a in C.morphisms for d in D.objects for u in D.hom(F.ob_map[C.tgt[a]], d)
    )
    nat_tgt = all(
        phi[(c, D.tgt[k])][D.comp[(k, u)]] == C.comp[(G_mor[k], phi[(c, D.src[k])][u])]
        for k in D.morphisms for c in C.objects for u in D.hom(F.ob_map[c], D.src[k])
    )
    cert = AdjunctionCertificate(F, G, counit, phi, nat_src, nat_tgt)
    return AdjointResult(cert.ok, G, cert)


def right_adjoint_via_comma(G, tie_break=_least):
    """Decide whether G is a right adjoint by running the comma route on G^op."""
    res = left_adjoint_via_comma(opposite_functor(G), tie_break)
    if not res.ok:
        return res
    L = Functor(G.codomain, G.domain, res.adjoint.ob_map, res.adjoint.mor_map)
    return AdjointResult(True, L, res.certificate)


def certificates_isomorphic(c1, c2):
    """Two right adjoints of the same functor agree up to a natural isomorphism
    theta with phi2 = theta after phi1."""
    F = c1.left
    C, D = F.domain, F.codomain
    theta = {}
    for d in D.objects:
        t = c2.hom_bijections[(c1.right.ob_map[d], d)][c1.counit[d]]
        if not C.is_iso(t):
            return False
        theta[d] = t
    for (c, d), table in c1.hom_bijections.items():
        for u, h in table.items():
            if c2.hom_bijections[(c, d)][u] != C.comp[(theta[d], h)]:
                return False
    return all(
        C.comp[(c2.right.mor_map[k], theta[D.src[k]])] == C.comp[(theta[D.tgt[k]], c1.right.mor_map[k])]
        for k in D.morphisms
    )


@dataclass
class ConsistencyReport:
    cartesian: bool
    comma: bool
    certificate_natural: object = None

    @property
    def agree(self):
        return self.cartesian == self.comma


def adjunction_consistency(F):
    """The collage route and the comma route must give the same verdict."""
    _, proj = collage(F)
    cart = is_cartesian_fibration(proj).ok
    res = left_adjoint_via_comma(F)
    return ConsistencyReport(cart, res.ok, res.certificate.ok if res.certificate else None)


# ---------------------------------------------------------------------------
# the diagonal functor


def diagonal_functor(w, i, budget=None):
    """W -> Fun(I, W), sending an object to the constant diagram."""
    fun = functor_category(i, w, budget=budget)

    def const_key(x):
        return (tuple(x for _ in i.objects), tuple(w.ident[x] for _ in i.morphisms))

    ob = {x: const_key(x) for x in w.objects}
    mor = {m: (ob[w.src[m]], ob[w.tgt[m]], tuple(m for _ in i.objects)) for m in w.morphisms}
    return Functor(w, fun, ob, mor)


@dataclass
class DeltaAdjointReport:
    colimits_by_adjoint: bool
    colimits_by_enumeration: bool
    limits_by_adjoint: bool
    limits_by_enumeration: bool
    missing_colimit: object = None
    missing_limit: object = None

    @property
    def agree(self):
        return (
            self.colimits_by_adjoint == self.colimits_by_enumeration
            and self.limits_by_adjoint == self.limits_by_enumeration
        )


def delta_adjoint_check(w, i, budget=None):
    """Does the diagonal W -> Fun(I, W) have a left adjoint (all I-colimits) or a
    right adjoint (all I-limits)? Each verdict is cross-checked against colimit
    and limit existence for every diagram."""
    budget = budget or Budget(what="diagonal adjoint check")
    diag = diagonal_functor(w, i, budget)
    fun = diag.codomain
    left = right_adjoint_via_comma(diag)
    right = left_adjoint_via_comma(diag)
    missing_col = missing_lim = None
    for key in fun.objects:
        F = fun.functors[key]
        if missing_col is None and colimit(F, budget) is None:
            missing_col = key
        if missing_lim is None and limit(F, budget) is None:
            missing_lim = key
    return DeltaAdjointReport(
        left.ok, missing_col is None, right.ok, missing_lim is None, missing_col, missing_lim,
    )
