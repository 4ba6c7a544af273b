"""Truncated bisimplicial sets (simplicial spaces) and the Segal-space toolkit.

``X[(n, l)]`` has horizontal (categorical) index n and vertical (homotopical)
index l. Row n is the vertical simplicial set ``X_{n, .}``; column l is the
horizontal simplicial set ``X_{., l}``.

Homotopy questions are decided in two regimes only: vertically discrete
objects, where equivalences are bijections, and objects whose rows are nerves
of groupoids, where equivalences are equivalences of groupoids. Anything else
raises :class:`UndecidableError` rather than guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._util import Budget, SSCatError, UndecidableError, sort_key, sorted_ids
from .fincat import (
    FinCategory,
    iso_category,
    minimal_relative,
    poset_category,
    validate_category,
    we_functor_category,
)
from .simpset import (
    SimpMap,
    TruncSimpSet,
    _canonical_level,
    delta,
    nerve,
    pi0,
    pullback,
    simplicial_spine,
    spine_fiber_product,
    spine_tuple,
    sub_simpset,
    validate_simplicial,
)


class TruncBiSimpSet:
    def __init__(self, htrunc, vtrunc, levels, hfaces, hdegens, vfaces, vdegens, name=None):
        self.htrunc = htrunc
        self.vtrunc = vtrunc
        self.levels = {k: _canonical_level(v) for k, v in levels.items()}
        self.hfaces = {k: dict(v) for k, v in hfaces.items()}
        self.hdegens = {k: dict(v) for k, v in hdegens.items()}
        self.vfaces = {k: dict(v) for k, v in vfaces.items()}
        self.vdegens = {k: dict(v) for k, v in vdegens.items()}
        self.name = name
        self._rows = {}
        self._columns = {}
        self._memo = {}

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<TruncBiSimpSet{label} N={self.htrunc} L={self.vtrunc}>"

    def __eq__(self, other):
        if not isinstance(other, TruncBiSimpSet):
            return NotImplemented
        return all(
            getattr(self, a) == getattr(other, a)
            for a in ("htrunc", "vtrunc", "levels", "hfaces", "hdegens", "vfaces", "vdegens")
        )

    __hash__ = None

    def counts(self):
        return {(n, l): len(self.levels[(n, l)]) for n in range(self.htrunc + 1) for l in range(self.vtrunc + 1)}

    def objects(self):
        return self.levels[(0, 0)]

    def row(self, n):
        """The vertical simplicial set X_{n, .}."""
        if n in self._rows:
            return self._rows[n]
        L = self.vtrunc
        self._rows[n] = TruncSimpSet(
            L, [self.levels[(n, l)] for l in range(L + 1)],
            {(l, i): self.vfaces[(n, l, i)] for l in range(1, L + 1) for i in range(l + 1)},
            {(l, i): self.vdegens[(n, l, i)] for l in range(L) for i in range(l + 1)},
        )
        return self._rows[n]

    def column(self, l):
        """The horizontal simplicial set X_{., l}."""
        if l in self._columns:
            return self._columns[l]
        N = self.htrunc
        self._columns[l] = TruncSimpSet(
            N, [self.levels[(n, l)] for n in range(N + 1)],
            {(n, i): self.hfaces[(n, l, i)] for n in range(1, N + 1) for i in range(n + 1)},
            {(n, i): self.hdegens[(n, l, i)] for n in range(N) for i in range(n + 1)},
        )
        return self._columns[l]

    def constant(self, n, x, l):
        """Push x in X_{n,0} up to X_{n,l} by vertical degeneracies."""
        for k in range(l):
            x = self.vdegens[(n, k, 0)][x]
        return x

    def vertical_vertices(self, n, l, a):
        return self.row(n).vertices(l, a) if l else (a,)


def validate_bisimplicial(t):
    bad = []
    for n in range(t.htrunc + 1):
        for kind, w in validate_simplicial(t.row(n)):
            bad.append(("row_" + kind, (n,) + tuple(w)))
    for l in range(t.vtrunc + 1):
        for kind, w in validate_simplicial(t.column(l)):
            bad.append(("column_" + kind, (l,) + tuple(w)))
    if bad:
        return bad
    N, L = t.htrunc, t.vtrunc
    hops, vops = [], []
    for n in range(N + 1):
        for l in range(L + 1):
            for i in range(n + 1):
                if n >= 1:
                    hops.append(((n, l, i), t.hfaces, -1))
                if n < N:
                    hops.append(((n, l, i), t.hdegens, +1))
            for j in range(l + 1):
                if l >= 1:
                    vops.append(((n, l, j), t.vfaces, -1))
                if l < L:
                    vops.append(((n, l, j), t.vdegens, +1))
    vops_at = {}
    for (n, l, j), table, dl in vops:
        vops_at.setdefault((n, l), []).append((j, table, dl))
    for (n, l, i), htable, dn in hops:
        for j, vtable, dl in vops_at[(n, l)]:
            if (n + dn, l, j) not in vtable or (n, l + dl, i) not in htable:
                continue
            h_then_v = vtable[(n + dn, l, j)]
            v_then_h = htable[(n, l + dl, i)]
            for a in t.levels[(n, l)]:
                if h_then_v[htable[(n, l, i)][a]] != v_then_h[vtable[(n, l, j)][a]]:
                    bad.append(("commute", (n, l, i, j, a)))
                    break
    return bad


@dataclass(eq=False)
class BiSimpMap:
    domain: TruncBiSimpSet
    codomain: TruncBiSimpSet
    level_maps: dict


# ---------------------------------------------------------------------------
# constructors


def embed_vertical(s, L):
    """Constant in the vertical direction: X_{k,l} = S_k."""
    N = s.truncation
    levels = {(n, l): s.levels[n] for n in range(N + 1) for l in range(L + 1)}
    hfaces = {(n, l, i): s.faces[(n, i)] for (n, i) in s.faces for l in range(L + 1)}
    hdegens = {(n, l, i): s.degens[(n, i)] for (n, i) in s.degens for l in range(L + 1)}
    ident = {n: {a: a for a in s.levels[n]} for n in range(N + 1)}
    vfaces = {(n, l, j): ident[n] for n in range(N + 1) for l in range(1, L + 1) for j in range(l + 1)}
    vdegens = {(n, l, j): ident[n] for n in range(N + 1) for l in range(L) for j in range(l + 1)}
    return TruncBiSimpSet(N, L, levels, hfaces, hdegens, vfaces, vdegens, name=s.name)


def embed_horizontal(s, N):
    """Constant in the horizontal direction: X_{k,l} = S_l."""
    L = s.truncation
    levels = {(n, l): s.levels[l] for n in range(N + 1) for l in range(L + 1)}
    ident = {l: {a: a for a in s.levels[l]} for l in range(L + 1)}
    hfaces = {(n, l, i): ident[l] for n in range(1, N + 1) for l in range(L + 1) for i in range(n + 1)}
    hdegens = {(n, l, i): ident[l] for n in range(N) for l in range(L + 1) for i in range(n + 1)}
    vfaces = {(n, l, j): s.faces[(l, j)] for (l, j) in s.faces for n in range(N + 1)}
    vdegens = {(n, l, j): s.degens[(l, j)] for (l, j) in s.degens for n in range(N + 1)}
    return TruncBiSimpSet(N, L, levels, hfaces, hdegens, vfaces, vdegens, name=s.name)


def delta_space(n, N, L=1):
    """F(n): the vertical embedding of Delta[n]."""
    out = embed_vertical(delta(n, N), L)
    out.name = f"F({n})"
    return out


def spine_space(n, N, L=1):
    """G(n): the vertical embedding of the spine of Delta[n]."""
    out = embed_vertical(simplicial_spine(n, N), L)
    out.name = f"G({n})"
    return out


def spine(n, N=None, L=1):
    """The inclusion G(n) -> F(n)."""
    if n < 1:
        raise ValueError("spine needs n >= 1")
    N = max(n, 2) if N is None else N
    g, f = spine_space(n, N, L), delta_space(n, N, L)
    return BiSimpMap(g, f, {k: {a: a for a in v} for k, v in g.levels.items()})


def iso_arrow_space(N, L=1):
    """E(1): the vertical embedding of the nerve of I(1)."""
    out = embed_vertical(nerve(iso_category(1), N), L)
    out.name = "E(1)"
    return out


_REINDEX = {}


def _reindex_plan(n, theta):
    """Positions of the morphisms of [m] inside the morphism list of [n]."""
    key = (n, theta)
    if key not in _REINDEX:
        pos = {mor: k for k, mor in enumerate(_poset_morphisms(n))}
        m = len(theta) - 1
        _REINDEX[key] = tuple(pos[(theta[a], theta[b])] for a, b in _poset_morphisms(m))
    return _REINDEX[key]


def _reindex_functor(key, n, theta):
    """Precompose a functor [n] -> C (as a key) with theta: [m] -> [n]."""
    obs, mors = key
    return (tuple(obs[k] for k in theta), tuple(mors[k] for k in _reindex_plan(n, theta)))


_POSET_MORS = {}


def _poset_morphisms(n):
    if n not in _POSET_MORS:
        _POSET_MORS[n] = poset_category(n).morphisms
    return _POSET_MORS[n]


def _reindex_simplex(l, a, n, theta, cache):
    """Vertical simplices are functors (l = 0) or chains of natural transformations."""
    if l == 0:
        if a not in cache:
            cache[a] = _reindex_functor(a, n, theta)
        return cache[a]
    out = []
    for edge in a:
        if edge not in cache:
            s, t, comps = edge
            cache[edge] = (_reindex_functor(s, n, theta), _reindex_functor(t, n, theta), tuple(comps[k] for k in theta))
        out.append(cache[edge])
    return tuple(out)


def classification_diagram(rc, N=3, L=2, budget=None):
    """Level (n, l) is the l-th nerve level of we(C^[n]); horizontal operators
    precompose with cofaces and codegeneracies of the ordinals."""
    budget = budget or Budget(what="classification diagram")
    rows = []
    for n in range(N + 1):
        cat = we_functor_category(rc, poset_category(n), budget=budget)
        rows.append(nerve(cat, L))
        budget.tick(sum(rows[-1].counts()))
    levels = {(n, l): rows[n].levels[l] for n in range(N + 1) for l in range(L + 1)}
    vfaces = {(n, l, j): rows[n].faces[(l, j)] for n in range(N + 1) for (l, j) in rows[n].faces}
    vdegens = {(n, l, j): rows[n].degens[(l, j)] for n in range(N + 1) for (l, j) in rows[n].degens}
    hfaces, hdegens, caches = {}, {}, {}
    for n in range(N + 1):
        for l in range(L + 1):
            for i in range(n + 1):
                if n >= 1:
                    coface = tuple(k if k < i else k + 1 for k in range(n))
                    cache = caches.setdefault((n, coface), {})
                    hfaces[(n, l, i)] = {a: _reindex_simplex(l, a, n, coface, cache) for a in levels[(n, l)]}
                if n < N:
                    codeg = tuple(k if k <= i else k - 1 for k in range(n + 2))
                    cache = caches.setdefault((n, codeg), {})
                    hdegens[(n, l, i)] = {a: _reindex_simplex(l, a, n, codeg, cache) for a in levels[(n, l)]}
    return TruncBiSimpSet(N, L, levels, hfaces, hdegens, vfaces, vdegens)


def classifying_diagram(c, N=3, L=2, budget=None):
    """The classification diagram of (C, isomorphisms of C)."""
    out = classification_diagram(minimal_relative(c), N, L, budget=budget)
    out.name = f"classifying({c.name})" if c.name else None
    return out


# ---------------------------------------------------------------------------
# vertical regimes


def _is_bijection(table, domain, codomain):
    return len(set(table.values())) == len(domain) == len(codomain) and set(table) == set(domain)


def row_is_discrete(s):
    """Every level of a vertical simplicial set is identified with level 0 by the degeneracies."""
    for l in range(s.truncation):
        if not _is_bijection(s.degens[(l, 0)], s.levels[l], s.levels[l + 1]):
            return False
    return True


def category_of_row(s):
    """The category whose nerve is ``s``, or None if s is not a nerve (levels <= 2 plus Segal above)."""
    if s.truncation < 2:
        return None
    for n in range(2, s.truncation + 1):
        fiber = spine_fiber_product(s, n)
        images = {spine_tuple(s, n, a) for a in s.levels[n]}
        if len(images) != len(s.levels[n]) or len(images) != len(fiber):
            return None
    comp = {}
    for sigma in s.levels[2]:
        comp[(s.faces[(2, 0)][sigma], s.faces[(2, 2)][sigma])] = s.faces[(2, 1)][sigma]
    c = FinCategory(s.levels[0], s.levels[1], s.faces[(1, 1)], s.faces[(1, 0)], s.degens[(0, 0)], comp)
    if not validate_category(c).ok:
        return None
    return c


def row_groupoid(s):
    c = category_of_row(s)
    if c is None or not all(c.is_iso(m) for m in c.morphisms):
        return None
    return c


def vertical_regime(t):
    """"discrete", "groupoid" or "undecidable"."""
    if "regime" not in t._memo:
        t._memo["regime"] = _vertical_regime(t)
    return t._memo["regime"]


def _vertical_regime(t):
    rows = [t.row(n) for n in range(t.htrunc + 1)]
    if all(row_is_discrete(r) for r in rows):
        return "discrete"
    if t.vtrunc >= 2 and all(row_groupoid(r) is not None for r in rows):
        return "groupoid"
    return "undecidable"


@dataclass
class EquivalenceReport:
    ok: bool
    pi0_sizes: tuple
    failure: str = None


def groupoid_equivalence(f):
    """Decide whether a map between nerves of groupoids is an equivalence:
    bijective on components and on every automorphism group."""
    src, tgt = row_groupoid(f.domain), row_groupoid(f.codomain)
    if src is None or tgt is None:
        raise UndecidableError("map is not between nerves of groupoids")
    on_obj, on_mor = f.level_maps[0], f.level_maps[1]
    comps_src, comps_tgt = pi0(f.domain), pi0(f.codomain)
    rep_tgt = {x: cls[0] for cls in comps_tgt for x in cls}
    images = [rep_tgt[on_obj[cls[0]]] for cls in comps_src]
    sizes = (len(comps_src), len(comps_tgt))
    if len(set(images)) != len(images) or len(images) != len(comps_tgt):
        return EquivalenceReport(False, sizes, "components")
    for cls in comps_src:
        x = cls[0]
        aut = src.hom(x, x)
        image = {on_mor[m] for m in aut}
        if len(image) != len(aut) or len(aut) != len(tgt.hom(on_obj[x], on_obj[x])):
            return EquivalenceReport(False, sizes, f"automorphisms at {x!r}")
    return EquivalenceReport(True, sizes)


def _bijective_map(f):
    return all(
        _is_bijection(f.level_maps[l], f.domain.levels[l], f.codomain.levels[l])
        for l in range(f.domain.truncation + 1)
    )


def _equivalence(f, regime):
    if regime == "discrete":
        return EquivalenceReport(_bijective_map(f), (len(f.domain.levels[0]), len(f.codomain.levels[0])))
    if regime == "groupoid":
        return groupoid_equivalence(f)
    raise UndecidableError("verticals are neither discrete nor nerves of groupoids")


def _row_map(t, n, m, table_of):
    """SimpMap row n -> row m built from per-level horizontal tables."""
    return SimpMap(t.row(n), t.row(m), [table_of(l) for l in range(t.vtrunc + 1)])


# ---------------------------------------------------------------------------
# Segal spaces


@dataclass
class SegalVerdict:
    regime: str
    counts: dict = field(default_factory=dict)
    bijective: dict = field(default_factory=dict)
    equivalence: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.equivalence.values())

    @property
    def strict(self):
        return all(self.bijective.values())


def _segal_row_map(t, n):
    """Row n -> the iterated fiber product of row 1 over row 0.

    Elements of the product are nested pairs ((e_1, e_2), e_3) and so on.
    """
    d0 = _row_map(t, 1, 0, lambda l: t.hfaces[(1, l, 0)])
    d1 = _row_map(t, 1, 0, lambda l: t.hfaces[(1, l, 1)])
    prod, _, _ = pullback(d0, d1)
    for _ in range(n - 2):
        tail = SimpMap(prod, t.row(0), [
            {p: t.hfaces[(1, l, 0)][p[1]] for p in prod.levels[l]} for l in range(t.vtrunc + 1)
        ])
        prod, _, _ = pullback(tail, d1)
    maps = []
    for l in range(t.vtrunc + 1):
        col = t.column(l)
        table = {}
        for a in col.levels[n]:
            edges = spine_tuple(col, n, a)
            nested = edges[0]
            for e in edges[1:]:
                nested = (nested, e)
            table[a] = nested
        maps.append(table)
    return SimpMap(t.row(n), prod, maps)


def segal_space_check(t):
    """Per (n, l): |X_{n,l}| against the spine fiber product of column l."""
    if "segal" not in t._memo:
        t._memo["segal"] = _segal_space_check(t)
    return t._memo["segal"]


def _segal_space_check(t):
    if t.htrunc < 2:
        raise SSCatError("Segal check needs horizontal truncation >= 2")
    regime = vertical_regime(t)
    verdict = SegalVerdict(regime)
    for l in range(t.vtrunc + 1):
        col = t.column(l)
        for n in range(2, t.htrunc + 1):
            fiber = spine_fiber_product(col, n)
            images = {spine_tuple(col, n, a) for a in col.levels[n]}
            verdict.counts[(n, l)] = (len(col.levels[n]), len(fiber))
            verdict.bijective[(n, l)] = len(images) == len(col.levels[n]) == len(fiber)
    for n in range(2, t.htrunc + 1):
        if all(verdict.bijective[(n, l)] for l in range(t.vtrunc + 1)):
            verdict.equivalence[n] = True
        elif regime == "groupoid":
            f = _segal_row_map(t, n)
            try:
                verdict.equivalence[n] = groupoid_equivalence(f).ok
            except UndecidableError:
                verdict.equivalence[n] = False
        else:
            verdict.equivalence[n] = False
    return verdict


def _require_segal(t):
    v = segal_space_check(t)
    if not v.ok:
        raise SSCatError("input is not a Segal space")
    return v


def source(t, f, l=0):
    return t.hfaces[(1, l, 1)][f]


def target(t, f, l=0):
    return t.hfaces[(1, l, 0)][f]


def identity_edge(t, x, l=0):
    return t.hdegens[(0, l, 0)][x]


def mapping_space(t, x, y):
    """The vertical simplicial set of 1-simplices from x to y."""
    objs = set(t.objects())
    if x not in objs or y not in objs:
        raise SSCatError(f"unknown object {x if x not in objs else y!r}")
    cx = [t.constant(0, x, l) for l in range(t.vtrunc + 1)]
    cy = [t.constant(0, y, l) for l in range(t.vtrunc + 1)]
    sub, _ = sub_simpset(t.row(1), lambda l, e: source(t, e, l) == cx[l] and target(t, e, l) == cy[l])
    return sub


class _Components:
    """Cached pi0 of mapping spaces."""

    def __init__(self, t):
        self.t = t
        self.cache = {}

    def classes(self, x, y):
        if (x, y) not in self.cache:
            parts = pi0(mapping_space(self.t, x, y))
            self.cache[(x, y)] = {e: cls for cls in parts for e in cls}
        return self.cache[(x, y)]

    def same(self, x, y, a, b):
        c = self.classes(x, y)
        return c[a] == c[b]


@dataclass
class CompositionResult:
    witnesses: list
    composites: dict
    chosen: object
    composite: object


def composition_witnesses(t, f, g, _components=None):
    """All sigma in X_{2,0} with d_2 sigma = f and d_0 sigma = g."""
    if target(t, f) != source(t, g):
        raise SSCatError("morphisms are not composable")
    wits = [s for s in t.levels[(2, 0)] if t.hfaces[(2, 0, 2)][s] == f and t.hfaces[(2, 0, 0)][s] == g]
    if not wits:
        raise SSCatError(f"no composition witness for ({f!r}, {g!r}); Segal condition fails")
    composites = {s: t.hfaces[(2, 0, 1)][s] for s in wits}
    comps = _components or _Components(t)
    x, z = source(t, f), target(t, g)
    first = composites[wits[0]]
    for s in wits[1:]:
        if not comps.same(x, z, first, composites[s]):
            raise SSCatError(f"composites of ({f!r}, {g!r}) lie in different components")
    chosen = min(wits, key=sort_key)
    return CompositionResult(wits, composites, chosen, composites[chosen])


def _compose(t, f, g, comps):
    return composition_witnesses(t, f, g, comps).composite


@dataclass
class HoEquivResult:
    by_inverses: bool
    by_tetra_lift: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def agree(self):
        return self.by_tetra_lift is None or self.by_inverses == self.by_tetra_lift


def _edges_of_tetra(t, H):
    d = t.hfaces
    face012 = d[(3, 0, 3)][H]
    face123 = d[(3, 0, 0)][H]
    return (d[(2, 0, 1)][face012], d[(2, 0, 0)][face012], d[(2, 0, 1)][face123])


def is_hoequiv(t, f, _components=None):
    """Two independent decisions: two-sided inverses up to components, and a
    3-simplex whose edges 02 and 13 are identities around f as edge 12."""
    comps = _components or _Components(t)
    x, y = source(t, f), target(t, f)
    back = t.levels[(1, 0)]
    back = [g for g in back if source(t, g) == y and target(t, g) == x]
    idx, idy = identity_edge(t, x), identity_edge(t, y)
    left = [g for g in back if comps.same(x, x, _compose(t, f, g, comps), idx)]
    right = [h for h in back if comps.same(y, y, _compose(t, h, f, comps), idy)]
    result = HoEquivResult(bool(left and right), None)
    if left and right:
        result.witnesses["inverses"] = (min(left, key=sort_key), min(right, key=sort_key))
    if t.htrunc >= 3:
        want = (idy, f, idx)
        lifts = [H for H in t.levels[(3, 0)] if _edges_of_tetra(t, H) == want]
        result.by_tetra_lift = bool(lifts)
        if lifts:
            result.witnesses["tetra"] = min(lifts, key=sort_key)
    return result


@dataclass
class HoEquivData:
    space: TruncSimpSet
    equivalences: tuple
    per_pair: dict


def hoequiv_space(t):
    """The vertical sub-object of X_{1,.} on simplices all of whose vertical
    vertices are homotopy equivalences."""
    comps = _Components(t)
    good = {f for f in t.levels[(1, 0)] if is_hoequiv(t, f, comps).by_inverses}
    row = t.row(1)

    def keep(l, a):
        return all(v in good for v in row.vertices(l, a))

    space, _ = sub_simpset(row, keep)
    per_pair = {}
    for x in t.objects():
        for y in t.objects():
            m = mapping_space(t, x, y)
            per_pair[(x, y)] = sub_simpset(m, keep)[0]
    return HoEquivData(space, tuple(sorted_ids(good)), per_pair)


def _tetra_edges_at(t, l, H):
    d = t.hfaces
    face012 = d[(3, l, 3)][H]
    face123 = d[(3, l, 0)][H]
    return d[(2, l, 1)][face012], d[(2, l, 0)][face012], d[(2, l, 1)][face123]


def hoeqchoice_space(t):
    """3-simplices whose edges 02 and 13 are horizontal identities."""
    if t.htrunc < 3:
        raise SSCatError("needs horizontal truncation >= 3")
    ids = [set(t.hdegens[(0, l, 0)].values()) for l in range(t.vtrunc + 1)]

    def keep(l, H):
        e02, _, e13 = _tetra_edges_at(t, l, H)
        return e02 in ids[l] and e13 in ids[l]

    return sub_simpset(t.row(3), keep)[0]


@dataclass
class HoEqChoiceReport:
    choice_counts: list
    hoequiv_counts: list
    image_in_hoequiv: bool
    surjective_on_pi0: bool


def hoeqchoice_check(t):
    """The forgetful map H -> edge 12 lands in hoequiv and hits every component."""
    choice = hoeqchoice_space(t)
    heq = hoequiv_space(t).space
    forget = [{H: _tetra_edges_at(t, l, H)[1] for H in choice.levels[l]} for l in range(t.vtrunc + 1)]
    inside = all(set(m.values()) <= set(heq.levels[l]) for l, m in enumerate(forget))
    hit = set(forget[0].values())
    surj = all(any(e in hit for e in cls) for cls in pi0(heq))
    return HoEqChoiceReport(choice.counts(), heq.counts(), inside, surj)


@dataclass
class CompletenessReport:
    strategy: str
    ok: object
    counts: dict = field(default_factory=dict)
    detail: str = None


def completeness_check(w):
    """Is s_0: W_{0,.} -> hoequiv an equivalence? ``ok`` is None when undecidable."""
    _require_segal(w)
    regime = vertical_regime(w)
    data = hoequiv_space(w)
    report = CompletenessReport(regime, None)
    for l in range(w.vtrunc + 1):
        report.counts[l] = (len(w.levels[(0, l)]), len(data.space.levels[l]))
    if regime == "undecidable":
        report.detail = "verticals are neither discrete nor nerves of groupoids"
        return report
    s0 = SimpMap(w.row(0), data.space, [w.hdegens[(0, l, 0)] for l in range(w.vtrunc + 1)])
    eq = _equivalence(s0, regime)
    report.ok = eq.ok
    report.detail = eq.failure
    return report


def is_complete_segal_space(w):
    return completeness_check(w).ok


def homotopy_category(t):
    """Objects X_{0,0}; morphisms are components of mapping spaces, each named by
    its least element; composition through witnesses, checked independent of choices."""
    _require_segal(t)
    comps = _Components(t)
    objs = t.objects()
    morphisms, src, tgt = [], {}, {}
    cls_of = {}
    for x in objs:
        for y in objs:
            for e, cls in comps.classes(x, y).items():
                cls_of[e] = cls[0]
            for cls in set(comps.classes(x, y).values()):
                rep = cls[0]
                morphisms.append(rep)
                src[rep], tgt[rep] = x, y
    ident = {x: cls_of[identity_edge(t, x)] for x in objs}
    members = {}
    for e, rep in cls_of.items():
        members.setdefault(rep, []).append(e)
    comp = {}
    for f in morphisms:
        for g in morphisms:
            if tgt[f] != src[g]:
                continue
            results = {cls_of[_compose(t, f2, g2, comps)] for f2 in members[f] for g2 in members[g]}
            if len(results) != 1:
                raise SSCatError(f"composite of classes ({f!r}, {g!r}) depends on representatives")
            comp[(g, f)] = results.pop()
    c = FinCategory(objs, morphisms, src, tgt, ident, comp)
    report = validate_category(c)
    if not report.ok:
        raise SSCatError(f"homotopy category fails the axioms: {report.kinds()[:3]}")
    return c


def is_segal_groupoid(t):
    _require_segal(t)
    comps = _Components(t)
    return all(is_hoequiv(t, f, comps).by_inverses for f in t.levels[(1, 0)])


def homotopically_constant(t):
    """Every map X_0 -> X_n built from horizontal degeneracies is an equivalence."""
    regime = vertical_regime(t)
    if regime == "undecidable":
        raise UndecidableError("verticals are neither discrete nor nerves of groupoids")
    for n in range(1, t.htrunc + 1):
        tables = []
        for l in range(t.vtrunc + 1):
            table = {}
            for x in t.levels[(0, l)]:
                a = x
                for k in range(n):
                    a = t.hdegens[(k, l, 0)][a]
                table[x] = a
            tables.append(table)
        if not _equivalence(SimpMap(t.row(0), t.row(n), tables), regime).ok:
            return False
    return True
