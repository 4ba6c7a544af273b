"""Functors as fibrations: cofibered-in-sets functors, the Grothendieck
construction, left fibrations of simplicial sets, under-objects and
(co)Cartesian morphisms.

Everything here lives in the discrete regime, where the homotopy pullbacks in
the definitions are ordinary pullbacks of finite sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._util import Budget, SSCatError, UndecidableError, sort_key
from .fincat import (
    FinCategory,
    Functor,
    check_bijection,
    enumerate_functors,
    opposite,
    poset_category,
)
from .simpset import (
    delta,
    product,
    simplicial_maps,
)
from .sspace import TruncBiSimpSet, vertical_regime


@dataclass
class FiberedReport:
    verdict: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.verdict


def lifts_of(p, f, x):
    """Morphisms of the total category starting at x and lying over f."""
    return [m for m in p.domain.out_of(x) if p.mor_map[m] == f]


def fiber_objects(p, c):
    return [x for x in p.domain.objects if p.ob_map[x] == c]


def is_cofibered_in_sets(p):
    """Every base morphism has exactly one lift from each object over its source."""
    failures = []
    E, B = p.domain, p.codomain
    over = {}
    for x in E.objects:
        over.setdefault(p.ob_map[x], []).append(x)
    for f in B.morphisms:
        for x in over.get(B.src[f], ()):
            n = len(lifts_of(p, f, x))
            if n != 1:
                failures.append((f, x, n))
    return FiberedReport(not failures, failures)


def grothendieck(F):
    """Objects (c, a) with a in F(c); morphisms (f, a): (c, a) -> (d, F(f)(a))."""
    C = F.domain
    objects = [(c, a) for c in C.objects for a in F.ob_assign[c]]
    morphisms, src, tgt = [], {}, {}
    for f in C.morphisms:
        for a in F.ob_assign[C.src[f]]:
            m = (f, a)
            morphisms.append(m)
            src[m] = (C.src[f], a)
            tgt[m] = (C.tgt[f], F.mor_assign[f][a])
    ident = {(c, a): (C.ident[c], a) for c, a in objects}
    comp = {}
    for f, a in morphisms:
        b = F.mor_assign[f][a]
        for g in C.out_of(C.tgt[f]):
            comp[((g, b), (f, a))] = (C.comp[(g, f)], a)
    total = FinCategory(objects, morphisms, src, tgt, ident, comp)
    proj = Functor(total, C, {o: o[0] for o in objects}, {m: m[0] for m in morphisms})
    return total, proj


def under_category(c, x):
    """Objects are morphisms u out of x; a morphism (h, u) goes from u to h after u."""
    if x not in c.ident:
        raise SSCatError(f"unknown object {x!r}")
    objects = list(c.out_of(x))
    morphisms, src, tgt = [], {}, {}
    for u in objects:
        for h in c.out_of(c.tgt[u]):
            m = (h, u)
            morphisms.append(m)
            src[m], tgt[m] = u, c.comp[(h, u)]
    ident = {u: (c.ident[c.tgt[u]], u) for u in objects}
    comp = {}
    for h, u in morphisms:
        hu = c.comp[(h, u)]
        for k in c.out_of(c.tgt[h]):
            comp[((k, hu), (h, u))] = (c.comp[(k, h)], u)
    total = FinCategory(objects, morphisms, src, tgt, ident, comp)
    proj = Functor(total, c, {u: c.tgt[u] for u in objects}, {m: m[0] for m in morphisms})
    return total, proj


def over_category(c, x):
    """Dual of :func:`under_category`: morphisms into x."""
    total, proj = under_category(opposite(c), x)
    total = opposite(total)
    return total, Functor(total, c, proj.ob_map, proj.mor_map)


def functors_over(G, p, budget=None):
    """Functors H with p after H equal to G."""
    return enumerate_functors(
        G.domain, p.domain,
        ob_candidates=lambda a: fiber_objects(p, G.ob_map[a]),
        mor_candidates=lambda m: [e for e in p.domain.morphisms if p.mor_map[e] == G.mor_map[m]],
        budget=budget,
    )


def cofibered_yoneda_check(p, c, budget=None):
    """Functors over the base from the under-category at c into the total
    category correspond to objects over c, by evaluation at the identity."""
    if not is_cofibered_in_sets(p):
        raise SSCatError("functor is not cofibered in sets")
    B = p.codomain
    under, proj = under_category(B, c)
    idc = B.ident[c]
    forward = {H.key(): H.ob_map[idc] for H in functors_over(proj, p, budget)}
    return check_bijection(forward, fiber_objects(p, c))


# ---------------------------------------------------------------------------
# left fibrations of simplicial sets


@dataclass
class LeftFibrationReport:
    ok: bool
    counts: dict = field(default_factory=dict)
    witness: tuple = None


def _leg_report(p, vertex_of):
    L, W = p.domain, p.codomain
    report = LeftFibrationReport(True)
    for n in range(1, L.truncation + 1):
        by_vertex = {}
        for w in W.levels[n]:
            by_vertex.setdefault(vertex_of(W, n, w), []).append(w)
        fiber = {(a, w) for a in L.levels[0] for w in by_vertex.get(p.level_maps[0][a], ())}
        image = {}
        for e in L.levels[n]:
            image.setdefault((vertex_of(L, n, e), p.level_maps[n][e]), []).append(e)
        report.counts[n] = (len(L.levels[n]), len(fiber))
        if report.ok:
            for pair in sorted(fiber, key=sort_key):
                if len(image.get(pair, ())) != 1:
                    report.ok = False
                    report.witness = (n, pair, len(image.get(pair, ())))
                    break
    return report


def left_fibration_report(p):
    """Compare L_n with L_0 x_{W_0} W_n along the initial vertex, for every n >= 1."""
    return _leg_report(p, lambda X, n, a: X.vertex(n, a, 0))


def is_left_fibration(p):
    return left_fibration_report(p).ok


def right_fibration_report(p):
    """Dual comparison along the final vertex."""
    return _leg_report(p, lambda X, n, a: X.vertex(n, a, n))


def is_right_fibration(p):
    return right_fibration_report(p).ok


@dataclass
class FiberDecomposition:
    base_vertices: tuple
    base_edge: object
    fiber_source: tuple
    fiber_edge: tuple
    fiber_target: tuple
    to_source: dict
    to_target: dict
    transport: dict


def fiber_decomposition_over_F1(p):
    """Split a left fibration over the nerve of [1] into its two vertex fibers,
    the edge fiber between them, and the induced transport map."""
    W = p.codomain
    if len(W.levels[0]) != 2 or W.truncation < 1 or len(W.nondegenerate(1)) != 1:
        raise SSCatError("base is not the nerve of [1]")
    (e,) = W.nondegenerate(1)
    a, b = W.faces[(1, 1)][e], W.faces[(1, 0)][e]
    if a == b or len(W.levels[1]) != 3:
        raise SSCatError("base is not the nerve of [1]")
    if not is_left_fibration(p):
        raise SSCatError("map is not a left fibration")
    L = p.domain
    over_a = tuple(v for v in L.levels[0] if p.level_maps[0][v] == a)
    over_b = tuple(v for v in L.levels[0] if p.level_maps[0][v] == b)
    over_e = tuple(x for x in L.levels[1] if p.level_maps[1][x] == e)
    s = {x: L.faces[(1, 1)][x] for x in over_e}
    t = {x: L.faces[(1, 0)][x] for x in over_e}
    inverse = check_bijection(s, over_a).inverse
    transport = {v: t[inverse[v]] for v in over_a}
    return FiberDecomposition((a, b), e, over_a, over_e, over_b, s, t, transport)


def under_css(w, x, budget=None):
    """The under-object of x in a vertically discrete bisimplicial set.

    Level n consists of maps Delta[n] x Delta[1] -> W_{.,0} that are constant
    at x on Delta[n] x {0}; each is named by its values on top simplices.
    The result has horizontal truncation one less than w.
    """
    if vertical_regime(w) != "discrete":
        raise UndecidableError("under_css is only decided for vertically discrete input")
    if x not in w.objects():
        raise SSCatError(f"unknown object {x!r}")
    if w.htrunc < 1:
        raise SSCatError("needs horizontal truncation >= 1")
    budget = budget or Budget(what="under_css")
    S = w.column(0)
    N = w.htrunc - 1
    const = [x]
    for k in range(S.truncation):
        const.append(S.degens[(k, 0)][const[-1]])
    levels, maps = [], []
    for n in range(N + 1):
        top = n + 1
        # maps are enumerated up to the full truncation so degeneracies can be reindexed
        box = product(delta(n, S.truncation), delta(1, S.truncation))
        target = S
        fixed = {}
        for k in range(S.truncation + 1):
            for a, bit in box.levels[k]:
                if all(v == 0 for v in bit):
                    fixed[(k, (a, bit))] = const[k]
        table = {}
        for phi in simplicial_maps(box, target, fixed=fixed, budget=budget):
            key = tuple(phi.level_maps[top][s] for s in box.levels[top])
            table[key] = phi
        levels.append(list(table))
        maps.append((box, table))

    def reindex(n, m, theta, key):
        box_n, table_n = maps[n]
        box_m, _ = maps[m]
        phi = table_n[key]
        return tuple(phi.level_maps[m + 1][(tuple(theta[i] for i in a), bit)] for a, bit in box_m.levels[m + 1])

    hfaces, hdegens = {}, {}
    for n in range(N + 1):
        for i in range(n + 1):
            if n >= 1:
                coface = tuple(k if k < i else k + 1 for k in range(n))
                hfaces[(n, i)] = {key: reindex(n, n - 1, coface, key) for key in levels[n]}
            if n < N:
                codeg = tuple(k if k <= i else k - 1 for k in range(n + 2))
                hdegens[(n, i)] = {key: reindex(n, n + 1, codeg, key) for key in levels[n]}
    L = w.vtrunc
    all_levels = {(n, l): levels[n] for n in range(N + 1) for l in range(L + 1)}
    ident = {n: {a: a for a in levels[n]} for n in range(N + 1)}
    return TruncBiSimpSet(
        N, L, all_levels,
        {(n, l, i): t for (n, i), t in hfaces.items() for l in range(L + 1)},
        {(n, l, i): t for (n, i), t in hdegens.items() for l in range(L + 1)},
        {(n, l, j): ident[n] for n in range(N + 1) for l in range(1, L + 1) for j in range(l + 1)},
        {(n, l, j): ident[n] for n in range(N + 1) for l in range(L) for j in range(l + 1)},
    )


# ---------------------------------------------------------------------------
# (co)Cartesian morphisms


def cocartesian_failure(p, f):
    """None if f is p-coCartesian, else (z, detail) for the first failing object."""
    E, B = p.domain, p.codomain
    x, y = E.src[f], E.tgt[f]
    pf = p.mor_map[f]
    for z in E.objects:
        image = {}
        for h in E.hom(y, z):
            image.setdefault((E.comp[(h, f)], p.mor_map[h]), []).append(h)
        for g in E.hom(x, z):
            for hb in B.hom(p.ob_map[y], p.ob_map[z]):
                if B.comp[(hb, pf)] != p.mor_map[g]:
                    continue
                n = len(image.get((g, hb), ()))
                if n != 1:
                    return (z, {"g": g, "base": hb, "factorizations": n})
    return None


def is_cocartesian_morphism(p, f):
    """For every z, h |-> (h after f, p(h)) is a bijection onto the pullback."""
    return cocartesian_failure(p, f) is None


def opposite_functor(p):
    return Functor(opposite(p.domain), opposite(p.codomain), p.ob_map, p.mor_map)


def is_cartesian_morphism(p, f):
    return is_cocartesian_morphism(opposite_functor(p), f)


@dataclass
class CoCartStructure:
    ok: bool
    lifts: dict = field(default_factory=dict)
    failure: tuple = None

    def __bool__(self):
        return self.ok


def _unique_iso_over(p, l1, l2):
    """The morphism phi: tgt l1 -> tgt l2 over an identity with phi after l1 = l2."""
    E, B = p.domain, p.codomain
    y1, y2 = E.tgt[l1], E.tgt[l2]
    cands = [
        phi for phi in E.hom(y1, y2)
        if E.comp[(phi, l1)] == l2 and B.is_identity(p.mor_map[phi])
    ]
    if len(cands) != 1 or not E.is_iso(cands[0]):
        return None
    return cands[0]


def is_cocartesian_fibration(p):
    """Every (base morphism, object over its source) has a coCartesian lift.
    All lifts are recorded; distinct lifts must be related by a unique
    isomorphism over the identity."""
    E, B = p.domain, p.codomain
    cocart = {m: is_cocartesian_morphism(p, m) for m in E.morphisms}
    result = CoCartStructure(True)
    for f in B.morphisms:
        for x in fiber_objects(p, B.src[f]):
            good = tuple(m for m in lifts_of(p, f, x) if cocart[m])
            result.lifts[(f, x)] = good
            if not good and result.ok:
                result.ok = False
                result.failure = (f, x)
            for l1 in good:
                for l2 in good:
                    if _unique_iso_over(p, l1, l2) is None:
                        raise SSCatError(f"coCartesian lifts {l1!r}, {l2!r} are not uniquely isomorphic")
    return result


def is_cartesian_fibration(p):
    return is_cocartesian_fibration(opposite_functor(p))


def fibers_discrete(p):
    """Every fiber category has only identity morphisms."""
    B = p.codomain
    return all(
        not (B.is_identity(p.mor_map[m]) and not p.domain.is_identity(m))
        for m in p.domain.morphisms
    )


def arrow_category_target_projection(n=1):
    """Target projection from the arrow category of [n]; a standard non-opfibration."""
    base = poset_category(n)
    arrows = list(base.morphisms)
    squares = []
    for a in arrows:
        for b in arrows:
            if a[0] <= b[0] and a[1] <= b[1]:
                squares.append((a, b))
    src = {m: m[0] for m in squares}
    tgt = {m: m[1] for m in squares}
    ident = {a: (a, a) for a in arrows}
    comp = {}
    for f in squares:
        for g in squares:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1])
    arr = FinCategory(arrows, squares, src, tgt, ident, comp)
    proj = Functor(
        arr, base,
        {a: a[1] for a in arrows},
        {m: (m[0][1], m[1][1]) for m in squares},
    )
    return arr, proj

