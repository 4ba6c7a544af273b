"""Finite categories given by explicit tables.

A category is stored as its objects, its morphisms, and the four structure
tables: source, target, identity and composition. ``comp[(g, f)]`` is
"g after f" and is defined exactly when ``tgt[f] == src[g]``.

Identifiers may be any hashable value built from ints, strings and tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from itertools import product

from ._util import Budget, SSCatError, search, sort_key, sorted_ids


class FinCategory:
    def __init__(self, objects, morphisms, src, tgt, ident, comp, name=None):
        self.objects = tuple(sorted_ids(set(objects)))
        self.morphisms = tuple(sorted_ids(set(morphisms)))
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        self.comp = dict(comp)
        self.name = name
        self._homs = None
        self._out = self._into = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FinCategory{label}: {len(self.objects)} objects, {len(self.morphisms)} morphisms>"

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.src == other.src
            and self.tgt == other.tgt
            and self.ident == other.ident
            and self.comp == other.comp
        )

    __hash__ = None

    def _hom_index(self):
        if self._homs is None:
            homs = {}
            for m in self.morphisms:
                homs.setdefault((self.src.get(m), self.tgt.get(m)), []).append(m)
            self._homs = {k: tuple(v) for k, v in homs.items()}
        return self._homs

    def hom(self, x, y):
        return self._hom_index().get((x, y), ())

    def compose(self, *fs):
        """``compose(h, g, f)`` is h after g after f."""
        result = fs[-1]
        for g in reversed(fs[:-1]):
            result = self.comp[(g, result)]
        return result

    def is_identity(self, m):
        return self.ident.get(self.src.get(m)) == m

    def inverse(self, f):
        for g in self.hom(self.tgt[f], self.src[f]):
            if self.comp[(g, f)] == self.ident[self.src[f]] and self.comp[(f, g)] == self.ident[self.tgt[f]]:
                return g
        return None

    def is_iso(self, f):
        return self.inverse(f) is not None

    def _adjacency(self):
        if self._out is None:
            out, into = {}, {}
            for m in self.morphisms:
                out.setdefault(self.src.get(m), []).append(m)
                into.setdefault(self.tgt.get(m), []).append(m)
            self._out = {k: tuple(v) for k, v in out.items()}
            self._into = {k: tuple(v) for k, v in into.items()}

    def out_of(self, x):
        self._adjacency()
        return self._out.get(x, ())

    def into(self, y):
        self._adjacency()
        return self._into.get(y, ())

    def nonidentity(self):
        return tuple(m for m in self.morphisms if not self.is_identity(m))


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    """Structural errors come first; axiom violations carry a witness tuple."""

    structural: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.structural and not self.violations

    def __bool__(self):
        return self.ok

    def kinds(self):
        return [k for k, _ in self.structural + self.violations]


def validate_category(c):
    report = ValidationReport()
    obs = set(c.objects)
    mors = set(c.morphisms)
    for m in c.morphisms:
        for table, label in ((c.src, "src"), (c.tgt, "tgt")):
            if m not in table:
                report.structural.append((f"missing_{label}", (m,)))
            elif table[m] not in obs:
                report.structural.append((f"dangling_{label}", (m, table[m])))
    for x in c.objects:
        if x not in c.ident:
            report.structural.append(("missing_identity", (x,)))
        elif c.ident[x] not in mors:
            report.structural.append(("dangling_identity", (x, c.ident[x])))
    for key in set(c.src) - mors:
        report.structural.append(("unknown_morphism", (key,)))
    for (g, f), h in c.comp.items():
        if g not in mors or f not in mors or h not in mors:
            report.structural.append(("dangling_comp", (g, f, h)))
        elif c.tgt.get(f) != c.src.get(g):
            report.structural.append(("comp_on_noncomposable", (g, f)))
    if report.structural:
        return report
    for f in c.morphisms:
        for g in c.out_of(c.tgt[f]):
            if (g, f) not in c.comp:
                report.structural.append(("comp_undefined", (g, f)))
    if report.structural:
        return report

    for x in c.objects:
        i = c.ident[x]
        if c.src[i] != x or c.tgt[i] != x:
            report.violations.append(("identity_src_tgt", (x, i)))
    for (g, f), h in c.comp.items():
        if c.src[h] != c.src[f] or c.tgt[h] != c.tgt[g]:
            report.violations.append(("comp_src_tgt", (g, f)))
    for f in c.morphisms:
        left = c.comp.get((c.ident.get(c.tgt[f]), f))
        right = c.comp.get((f, c.ident.get(c.src[f])))
        if left is not None and left != f:
            report.violations.append(("left_unit", (f,)))
        if right is not None and right != f:
            report.violations.append(("right_unit", (f,)))
    # (h g) f = h (g f) for all h  <=>  precomposing with g then f agrees with
    # precomposing with gf. Compare whole tables on integer ids (identifiers may
    # be deep tuples that are slow to hash), then locate the witnesses.
    comp, tgt = c.comp, c.tgt
    mors = list(c.morphisms)
    mid = {m: k for k, m in enumerate(mors)}
    out = {x: [mid[h] for h in c.out_of(x)] for x in c.objects}
    tgt_i = [tgt[m] for m in mors]
    pre = []
    for f in mors:
        pre.append({mid[h]: mid.get(comp.get((h, f))) for h in c.out_of(tgt[f])})
    for fi, row in enumerate(pre):
        for gi, gfi in row.items():
            if gfi is None:
                continue
            hs = out[tgt_i[gi]]
            lhs = list(map(row.get, map(pre[gi].__getitem__, hs)))
            if tgt_i[gfi] == tgt_i[gi] and lhs == list(map(pre[gfi].__getitem__, hs)):
                continue
            g, f, gf = mors[gi], mors[fi], mors[gfi]
            for h in c.out_of(tgt[g]):
                hg = comp.get((h, g))
                left = comp.get((h, gf))
                right = comp.get((hg, f)) if hg is not None else None
                # a composite with a broken src/tgt is reported once above
                if left is not None and right is not None and left != right:
                    report.violations.append(("associativity", (h, g, f)))
    report.violations.sort(key=lambda kw: (kw[0], sort_key(kw[1])))
    return report


# ---------------------------------------------------------------------------
# constructors


def poset_category(n):
    """The ordinal [n]: objects 0..n, one morphism (i, j) whenever i <= j."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return preorder_category(range(n + 1), lambda i, j: i <= j, name=f"[{n}]")


def preorder_category(elements, leq, name=None):
    elements = sorted_ids(elements)
    morphisms = [(a, b) for a in elements for b in elements if leq(a, b)]
    src = {m: m[0] for m in morphisms}
    tgt = {m: m[1] for m in morphisms}
    ident = {a: (a, a) for a in elements}
    comp = {}
    for f in morphisms:
        for g in morphisms:
            if f[1] == g[0]:
                comp[(g, f)] = (f[0], g[1])
    return FinCategory(elements, morphisms, src, tgt, ident, comp, name=name)


def poset_from_relation(elements, pairs, name=None):
    """Preorder generated by ``pairs`` under reflexive-transitive closure."""
    elements = sorted_ids(elements)
    reach = {a: {a} for a in elements}
    for a, b in pairs:
        reach[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in elements:
            new = set().union(*(reach[b] for b in reach[a]))
            if not new <= reach[a]:
                reach[a] |= new
                changed = True
    return preorder_category(elements, lambda a, b: b in reach[a], name=name)


def iso_category(n):
    """I(n): n+1 objects with exactly one (invertible) morphism between any two."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return preorder_category(range(n + 1), lambda i, j: True, name=f"I({n})")


def discrete_category(objects, name=None):
    objects = sorted_ids(objects)
    return preorder_category(objects, lambda a, b: a == b, name=name)


def terminal_category():
    return poset_category(0)


def empty_category():
    return FinCategory((), (), {}, {}, {}, {}, name="empty")


def cyclic_group(n):
    """Z/n as a one-object category on the object ``"*"``."""
    morphisms = list(range(n))
    comp = {(a, b): (a + b) % n for a in morphisms for b in morphisms}
    return FinCategory(
        ["*"], morphisms, {m: "*" for m in morphisms}, {m: "*" for m in morphisms},
        {"*": 0}, comp, name=f"Z/{n}",
    )


def free_category(objects, arrows, name=None):
    """Free category on a finite acyclic quiver.

    ``arrows`` maps arrow names to (source, target). Nonidentity morphisms are
    tuples of arrow names (paths, first arrow first); identities are ``("id", x)``.
    """
    objects = sorted_ids(objects)
    out = {x: [] for x in objects}
    for a, (s, t) in sorted(arrows.items(), key=lambda kv: sort_key(kv[0])):
        out[s].append((a, t))
    preds = {}
    for s, t in arrows.values():
        preds.setdefault(t, set()).add(s)
    try:
        TopologicalSorter(preds).prepare()
    except CycleError:
        raise SSCatError("quiver has a cycle; free category is infinite") from None
    paths = []
    frontier = [((a,), s, t) for a, (s, t) in arrows.items()]
    while frontier:
        paths.extend(frontier)
        frontier = [(p + (a,), s, t2) for p, s, t in frontier for a, t2 in out[t]]
    src = {p: s for p, s, _ in paths}
    tgt = {p: t for p, _, t in paths}
    ident = {x: ("id", x) for x in objects}
    for x in objects:
        src[("id", x)] = tgt[("id", x)] = x
    morphisms = list(src)
    comp = {}
    for f in morphisms:
        for g in morphisms:
            if tgt[f] != src[g]:
                continue
            if f[0] == "id":
                comp[(g, f)] = g
            elif g[0] == "id":
                comp[(g, f)] = f
            else:
                comp[(g, f)] = f + g
    return FinCategory(objects, morphisms, src, tgt, ident, comp, name=name)


def product_category(c, d):
    objects = [(x, y) for x in c.objects for y in d.objects]
    morphisms = [(f, g) for f in c.morphisms for g in d.morphisms]
    src = {(f, g): (c.src[f], d.src[g]) for f, g in morphisms}
    tgt = {(f, g): (c.tgt[f], d.tgt[g]) for f, g in morphisms}
    ident = {(x, y): (c.ident[x], d.ident[y]) for x, y in objects}
    comp = {}
    for (g1, g2), (f1, f2) in product(morphisms, morphisms):
        if (g1, f1) in c.comp and (g2, f2) in d.comp:
            comp[((g1, g2), (f1, f2))] = (c.comp[(g1, f1)], d.comp[(g2, f2)])
    return FinCategory(objects, morphisms, src, tgt, ident, comp)


def opposite(c):
    comp = {(f, g): h for (g, f), h in c.comp.items()}
    name = f"{c.name}^op" if c.name else None
    return FinCategory(c.objects, c.morphisms, c.tgt, c.src, c.ident, comp, name=name)


def full_subcategory(c, objects):
    keep = set(objects)
    mors = [m for m in c.morphisms if c.src[m] in keep and c.tgt[m] in keep]
    return subcategory(c, keep, mors)


def subcategory(c, objects, morphisms):
    keep = set(morphisms)
    comp = {k: v for k, v in c.comp.items() if k[0] in keep and k[1] in keep}
    return FinCategory(
        objects, keep,
        {m: c.src[m] for m in keep}, {m: c.tgt[m] for m in keep},
        {x: c.ident[x] for x in objects}, comp,
    )


def core(c):
    """Maximal subgroupoid: same objects, only the invertible morphisms."""
    isos = [m for m in c.morphisms if c.is_iso(m)]
    name = f"{c.name}^core" if c.name else None
    out = subcategory(c, c.objects, isos)
    out.name = name
    return out


# ---------------------------------------------------------------------------
# functors and natural transformations


@dataclass(eq=False)
class Functor:
    domain: FinCategory
    codomain: FinCategory
    ob_map: dict
    mor_map: dict

    def ob(self, x):
        return self.ob_map[x]

    def mor(self, f):
        return self.mor_map[f]

    def key(self):
        """Hashable identity of the functor relative to its domain's ordering."""
        return (
            tuple(self.ob_map[x] for x in self.domain.objects),
            tuple(self.mor_map[m] for m in self.domain.morphisms),
        )

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.ob_map == other.ob_map
            and self.mor_map == other.mor_map
        )

    __hash__ = None

    def __repr__(self):
        return f"Functor({self.domain!r} -> {self.codomain!r}, ob={self.ob_map})"


def validate_functor(F):
    """List of (kind, witness) violations; empty when F is a functor."""
    C, D = F.domain, F.codomain
    bad = []
    for x in C.objects:
        if F.ob_map.get(x) not in D.ident:
            bad.append(("object_image", (x,)))
    for m in C.morphisms:
        if F.mor_map.get(m) not in D.src:
            bad.append(("morphism_image", (m,)))
    if bad:
        return bad
    for x in C.objects:
        if F.mor_map[C.ident[x]] != D.ident[F.ob_map[x]]:
            bad.append(("identity", (x,)))
    for m in C.morphisms:
        fm = F.mor_map[m]
        if D.src[fm] != F.ob_map[C.src[m]] or D.tgt[fm] != F.ob_map[C.tgt[m]]:
            bad.append(("source_target", (m,)))
    for (g, f), h in C.comp.items():
        if D.comp.get((F.mor_map[g], F.mor_map[f])) != F.mor_map[h]:
            bad.append(("composition", (g, f)))
    return bad


def identity_functor(c):
    return Functor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms})


def compose_functors(G, F):
    """G after F."""
    return Functor(
        F.domain, G.codomain,
        {x: G.ob_map[F.ob_map[x]] for x in F.domain.objects},
        {m: G.mor_map[F.mor_map[m]] for m in F.domain.morphisms},
    )


def constant_functor(c, d, y):
    return Functor(c, d, {x: y for x in c.objects}, {m: d.ident[y] for m in c.morphisms})


def enumerate_functors(C, D, ob_candidates=None, mor_candidates=None, injective=False, budget=None):
    """Yield every functor C -> D, optionally restricted per object / morphism.

    ``ob_candidates(x)`` and ``mor_candidates(m)`` return allowed images (or
    None for no restriction). Raises EnumerationLimitError past the bound.
    """
    budget = budget or Budget(what="functor enumeration")
    objs = list(C.objects)
    nonid = [m for m in C.morphisms if not C.is_identity(m)]
    variables = [("o", x) for x in objs] + [("m", m) for m in nonid]
    index = {v: i for i, v in enumerate(variables)}

    def var_of(m):
        if C.is_identity(m):
            return ("o", C.src[m])
        return ("m", m)

    checks = {v: [] for v in variables}
    for (g, f), h in C.comp.items():
        trio = (g, f, h)
        last = max((var_of(m) for m in trio), key=index.__getitem__)
        checks[last].append(trio)

    ob_allowed = {}
    for x in objs:
        allowed = ob_candidates(x) if ob_candidates else None
        ob_allowed[x] = list(D.objects) if allowed is None else [y for y in D.objects if y in set(allowed)]

    def image(m, a):
        if C.is_identity(m):
            return D.ident[a[("o", C.src[m])]]
        return a[("m", m)]

    def candidates(var, a):
        kind, z = var
        if kind == "o":
            return ob_allowed[z]
        hom = D.hom(a[("o", C.src[z])], a[("o", C.tgt[z])])
        if mor_candidates is not None:
            allowed = mor_candidates(z)
            if allowed is not None:
                allowed = set(allowed)
                hom = [g for g in hom if g in allowed]
        return hom

    def consistent(var, value, a):
        if injective:
            kind = var[0]
            for other, v in a.items():
                if other[0] == kind and v == value:
                    return False
            if kind == "m" and value in {D.ident[a[("o", x)]] for x in objs if ("o", x) in a}:
                return False
        if not checks[var]:
            return True
        a[var] = value
        try:
            for g, f, h in checks[var]:
                if D.comp.get((image(g, a), image(f, a))) != image(h, a):
                    return False
            return True
        finally:
            del a[var]

    for a in search(variables, candidates, consistent, budget):
        ob_map = {x: a[("o", x)] for x in objs}
        mor_map = {m: image(m, a) for m in C.morphisms}
        yield Functor(C, D, ob_map, mor_map)


def count_functors(C, D, budget=None):
    return sum(1 for _ in enumerate_functors(C, D, budget=budget))


def _hom_signature(c):
    return sorted(len(c.hom(x, y)) for x in c.objects for y in c.objects)


def find_isomorphism(C, D, budget=None):
    """An isomorphism of categories C -> D, or None."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    if _hom_signature(C) != _hom_signature(D):
        return None
    for F in enumerate_functors(C, D, injective=True, budget=budget):
        return F
    return None


def are_isomorphic(C, D, budget=None):
    return find_isomorphism(C, D, budget=budget) is not None


@dataclass(eq=False)
class NatTrans:
    source: Functor
    target: Functor
    components: dict

    def key(self):
        dom = self.source.domain
        return (self.source.key(), self.target.key(), tuple(self.components[x] for x in dom.objects))


def validate_nattrans(alpha):
    F, G = alpha.source, alpha.target
    C, D = F.domain, F.codomain
    bad = []
    for x in C.objects:
        a = alpha.components.get(x)
        if a not in D.src or D.src[a] != F.ob_map[x] or D.tgt[a] != G.ob_map[x]:
            bad.append(("component", (x,)))
    if bad:
        return bad
    for f in C.morphisms:
        x, y = C.src[f], C.tgt[f]
        if D.comp[(G.mor_map[f], alpha.components[x])] != D.comp[(alpha.components[y], F.mor_map[f])]:
            bad.append(("naturality", (f,)))
    return bad


def enumerate_nattrans(F, G, component_filter=None, budget=None):
    """Yield every natural transformation F => G (components as a tuple in object order)."""
    C, D = F.domain, F.codomain
    budget = budget or Budget(what="natural transformation enumeration")
    objs = list(C.objects)
    pos = {x: i for i, x in enumerate(objs)}
    checks = {x: [] for x in objs}
    for f in C.morphisms:
        last = max(C.src[f], C.tgt[f], key=pos.__getitem__)
        checks[last].append(f)

    def candidates(x, a):
        hom = D.hom(F.ob_map[x], G.ob_map[x])
        if component_filter is not None:
            hom = [m for m in hom if component_filter(m)]
        return hom

    def consistent(x, value, a):
        a[x] = value
        try:
            for f in checks[x]:
                s, t = C.src[f], C.tgt[f]
                if D.comp[(G.mor_map[f], a[s])] != D.comp[(a[t], F.mor_map[f])]:
                    return False
            return True
        finally:
            del a[x]

    for a in search(objs, candidates, consistent, budget):
        yield tuple(a[x] for x in objs)


def functor_category(C, D, component_filter=None, budget=None):
    """Fun(C, D). Objects are ``Functor.key()`` tuples; morphisms are
    ``(source key, target key, components)`` triples."""
    budget = budget or Budget(what="functor category")
    budget.guard(len(D.objects) ** len(C.objects))
    functors = {F.key(): F for F in enumerate_functors(C, D, budget=budget)}
    keys = sorted_ids(functors)
    morphisms = []
    src, tgt = {}, {}
    by_pair = {}
    for k1 in keys:
        for k2 in keys:
            for comps in enumerate_nattrans(functors[k1], functors[k2], component_filter, budget):
                m = (k1, k2, comps)
                morphisms.append(m)
                src[m], tgt[m] = k1, k2
                by_pair.setdefault(k1, []).append(m)
    ident = {k: (k, k, tuple(D.ident[F.ob_map[x]] for x in C.objects)) for k, F in functors.items()}
    comp = {}
    for f in morphisms:
        for g in by_pair.get(f[1], ()):
            budget.tick()
            comps = tuple(D.comp[(b, a)] for b, a in zip(g[2], f[2]))
            comp[(g, f)] = (f[0], g[1], comps)
    out = FinCategory(keys, morphisms, src, tgt, ident, comp)
    out.functors = functors
    return out


def functor_from_key(key, C, D):
    ob, mor = key
    return Functor(C, D, dict(zip(C.objects, ob)), dict(zip(C.morphisms, mor)))


def nattrans_from_key(key, C, D):
    s, t, comps = key
    return NatTrans(functor_from_key(s, C, D), functor_from_key(t, C, D), dict(zip(C.objects, comps)))


# ---------------------------------------------------------------------------
# relative categories


@dataclass(eq=False)
class RelativeCategory:
    cat: FinCategory
    weak: frozenset

    def __post_init__(self):
        self.weak = frozenset(self.weak)


def validate_relative(rc):
    c = rc.cat
    bad = []
    for m in rc.weak:
        if m not in c.src:
            bad.append(("unknown_morphism", (m,)))
    for x in c.objects:
        if c.ident[x] not in rc.weak:
            bad.append(("identity_not_weak", (x,)))
    for m in c.morphisms:
        if c.is_iso(m) and m not in rc.weak:
            bad.append(("iso_not_weak", (m,)))
    for (g, f), h in c.comp.items():
        if g in rc.weak and f in rc.weak and h not in rc.weak:
            bad.append(("not_closed", (g, f)))
    return bad


def minimal_relative(c):
    """(C, C^core): the weak equivalences are exactly the isomorphisms."""
    return RelativeCategory(c, frozenset(m for m in c.morphisms if c.is_iso(m)))


def maximal_relative(c):
    return RelativeCategory(c, frozenset(c.morphisms))


def we_functor_category(rc, d, budget=None):
    """we(C^D): all functors D -> C, only componentwise-weak transformations."""
    return functor_category(d, rc.cat, component_filter=lambda m: m in rc.weak, budget=budget)


# ---------------------------------------------------------------------------
# set-valued functors


@dataclass(eq=False)
class SetFunctor:
    domain: FinCategory
    ob_assign: dict
    mor_assign: dict

    def __post_init__(self):
        self.ob_assign = {x: tuple(v) for x, v in self.ob_assign.items()}
        self.mor_assign = {m: dict(v) for m, v in self.mor_assign.items()}

    def apply(self, m, a):
        return self.mor_assign[m][a]


def validate_set_functor(F):
    C = F.domain
    bad = []
    for x in C.objects:
        if x not in F.ob_assign:
            bad.append(("missing_set", (x,)))
    if bad:
        return bad
    for m in C.morphisms:
        fn = F.mor_assign.get(m)
        s, t = F.ob_assign[C.src[m]], set(F.ob_assign[C.tgt[m]])
        if fn is None or set(fn) != set(s) or not set(fn.values()) <= t:
            bad.append(("function", (m,)))
    if bad:
        return bad
    for x in C.objects:
        if any(F.mor_assign[C.ident[x]][a] != a for a in F.ob_assign[x]):
            bad.append(("identity", (x,)))
    for (g, f), h in C.comp.items():
        for a in F.ob_assign[C.src[f]]:
            if F.mor_assign[h][a] != F.mor_assign[g][F.mor_assign[f][a]]:
                bad.append(("composition", (g, f)))
                break
    return bad


def representable(C, x):
    """The covariant hom functor Y_x = Hom(x, -)."""
    ob = {d: C.hom(x, d) for d in C.objects}
    mor = {}
    for f in C.morphisms:
        mor[f] = {u: C.comp[(f, u)] for u in ob[C.src[f]]}
    return SetFunctor(C, ob, mor)


def constant_set_functor(C, elements):
    elements = tuple(elements)
    return SetFunctor(C, {x: elements for x in C.objects}, {m: {a: a for a in elements} for m in C.morphisms})


@dataclass
class BijectionWitness:
    """An explicit bijection with its inverse, checked by enumeration."""

    forward: dict
    inverse: dict

    @property
    def size(self):
        return len(self.forward)


def check_bijection(forward, codomain):
    """Build the inverse of ``forward`` onto ``codomain``; raise if not bijective."""
    inverse = {}
    for a, b in forward.items():
        if b in inverse:
            raise SSCatError(f"not injective: {inverse[b]!r} and {a!r} both map to {b!r}")
        inverse[b] = a
    missing = set(codomain) - set(inverse)
    if missing or set(inverse) - set(codomain):
        raise SSCatError(f"not surjective onto codomain; missing {sorted_ids(missing)[:3]!r}")
    return BijectionWitness(dict(forward), inverse)


def enumerate_set_nattrans(F, G, budget=None):
    """Natural transformations between set-valued functors, as dicts (x, a) -> b."""
    C = F.domain
    budget = budget or Budget(what="set natural transformations")
    variables = [(x, a) for x in C.objects for a in F.ob_assign[x]]
    pos = {v: i for i, v in enumerate(variables)}
    checks = {v: [] for v in variables}
    for f in C.morphisms:
        x, y = C.src[f], C.tgt[f]
        for a in F.ob_assign[x]:
            u, w = (x, a), (y, F.mor_assign[f][a])
            checks[max(u, w, key=pos.__getitem__)].append((f, u, w))

    def consistent(var, value, asg):
        asg[var] = value
        try:
            for f, u, w in checks[var]:
                if G.mor_assign[f][asg[u]] != asg[w]:
                    return False
            return True
        finally:
            del asg[var]

    for asg in search(variables, lambda v, _: G.ob_assign[v[0]], consistent, budget):
        yield asg


def yoneda_check(c, x, F, budget=None):
    """Nat(Y_x, F) -> F(x), alpha |-> alpha_x(id_x), with its inverse.

    The inverse sends a in F(x) to the transformation u |-> F(u)(a); both
    directions are enumerated and composed.
    """
    Y = representable(c, x)
    nats = []
    for asg in enumerate_set_nattrans(Y, F, budget):
        nats.append(tuple(sorted(asg.items(), key=lambda kv: sort_key(kv[0]))))
    forward = {alpha: dict(alpha)[(x, c.ident[x])] for alpha in nats}
    witness = check_bijection(forward, F.ob_assign[x])
    for a in F.ob_assign[x]:
        built = {(d, u): F.mor_assign[u][a] for d in c.objects for u in c.hom(x, d)}
        if dict(witness.inverse[a]) != built:
            raise SSCatError("Yoneda inverse disagrees with u |-> F(u)(a)")
    return witness
