"""Truncated finite simplicial sets.

Faces use the operator convention: ``d_i`` deletes vertex ``i``, so on an edge
``d_0`` is the target and ``d_1`` the source. Every simplex, degenerate or not,
is stored explicitly, which keeps validation and map enumeration uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from ._util import Budget, DisjointSet, SSCatError, is_sorted_ids, name_of, search, sorted_ids
from .fincat import FinCategory, validate_category


def _canonical_level(level):
    if isinstance(level, tuple) and is_sorted_ids(level):
        return level
    return tuple(sorted_ids(set(level)))


class TruncSimpSet:
    """Levels ``X_0 .. X_N`` with face and degeneracy tables.

    ``faces[(n, i)]`` is the dict for ``d_i: X_n -> X_{n-1}`` and
    ``degens[(n, i)]`` the dict for ``s_i: X_n -> X_{n+1}``.
    """

    def __init__(self, truncation, levels, faces, degens, name=None):
        self.truncation = truncation
        self.levels = [_canonical_level(level) for level in levels]
        self.faces = {k: dict(v) for k, v in faces.items()}
        self.degens = {k: dict(v) for k, v in degens.items()}
        self.name = name
        if len(self.levels) != truncation + 1:
            raise SSCatError(f"expected {truncation + 1} levels, got {len(self.levels)}")
        self._sections = None

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        sizes = ",".join(str(len(level)) for level in self.levels)
        return f"<TruncSimpSet{label} N={self.truncation} sizes=[{sizes}]>"

    def __eq__(self, other):
        if not isinstance(other, TruncSimpSet):
            return NotImplemented
        return (
            self.truncation == other.truncation
            and self.levels == other.levels
            and self.faces == other.faces
            and self.degens == other.degens
        )

    __hash__ = None

    def level(self, n):
        return self.levels[n]

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degen(self, n, i, x):
        return self.degens[(n, i)][x]

    def counts(self):
        return [len(level) for level in self.levels]

    def degeneracy_preimages(self, n):
        """For each x in X_n, the list of (j, y) with s_j y = x."""
        if self._sections is None:
            self._sections = {}
        if n not in self._sections:
            pre = {x: [] for x in self.levels[n]}
            if n > 0:
                for j in range(n):
                    for y, x in self.degens[(n - 1, j)].items():
                        pre[x].append((j, y))
            self._sections[n] = pre
        return self._sections[n]

    def is_degenerate(self, n, x):
        return bool(self.degeneracy_preimages(n)[x])

    def nondegenerate(self, n):
        return tuple(x for x in self.levels[n] if not self.is_degenerate(n, x))

    def face_tuple(self, n, x):
        if n == 0:
            return ()
        return tuple(self.faces[(n, i)][x] for i in range(n + 1))

    def vertex(self, n, x, k):
        """The k-th vertex of an n-simplex."""
        for j in range(n, k, -1):
            x = self.faces[(j, j)][x]
        for j in range(k, 0, -1):
            x = self.faces[(j, 0)][x]
        return x

    def vertices(self, n, x):
        return tuple(self.vertex(n, x, k) for k in range(n + 1))

    def edge(self, n, x, k):
        """The edge from vertex k to vertex k+1, deleting the others from the top down."""
        for j in range(n, -1, -1):
            if j in (k, k + 1):
                continue
            # deleting top down, the simplex still has vertices 0..j plus the kept ones above j
            dim = j + sum(1 for v in (k, k + 1) if v > j)
            x = self.faces[(dim, j)][x]
        return x


def validate_simplicial(x):
    """List of (kind, witness) problems; empty when x is a truncated simplicial set."""
    N = x.truncation
    bad = []
    for n in range(1, N + 1):
        for i in range(n + 1):
            table = x.faces.get((n, i))
            if table is None or set(table) != set(x.levels[n]):
                bad.append(("face_not_total", (n, i)))
            elif not set(table.values()) <= set(x.levels[n - 1]):
                bad.append(("face_dangling", (n, i)))
    for n in range(N):
        for i in range(n + 1):
            table = x.degens.get((n, i))
            if table is None or set(table) != set(x.levels[n]):
                bad.append(("degen_not_total", (n, i)))
            elif not set(table.values()) <= set(x.levels[n + 1]):
                bad.append(("degen_dangling", (n, i)))
    if bad:
        return bad
    d, s = x.faces, x.degens
    for n in range(2, N + 1):
        for a in x.levels[n]:
            for j in range(n + 1):
                for i in range(j):
                    if d[(n - 1, i)][d[(n, j)][a]] != d[(n - 1, j - 1)][d[(n, i)][a]]:
                        bad.append(("dd", (n, i, j, a)))
    for n in range(N):
        for a in x.levels[n]:
            for j in range(n + 1):
                b = s[(n, j)][a]
                for i in range(n + 2):
                    lhs = d[(n + 1, i)][b]
                    if i < j:
                        rhs = s[(n - 1, j - 1)][d[(n, i)][a]]
                    elif i in (j, j + 1):
                        rhs = a
                    else:
                        rhs = s[(n - 1, j)][d[(n, i - 1)][a]]
                    if lhs != rhs:
                        bad.append(("ds", (n, i, j, a)))
    for n in range(N - 1):
        for a in x.levels[n]:
            for j in range(n + 1):
                for i in range(j + 1):
                    if s[(n + 1, i)][s[(n, j)][a]] != s[(n + 1, j + 1)][s[(n, i)][a]]:
                        bad.append(("ss", (n, i, j, a)))
    return bad


def canonical_names(x):
    """Operator-string names: generators keep their own name, degenerate
    simplices are written ``s{j}(...)`` using the largest available index."""
    names = []
    for n in range(x.truncation + 1):
        level = {}
        pre = x.degeneracy_preimages(n)
        for a in x.levels[n]:
            if pre[a]:
                j, b = max(pre[a], key=lambda p: p[0])
                level[a] = f"s{j}({names[n - 1][b]})"
            else:
                level[a] = name_of(a)
        names.append(level)
    return names


# ---------------------------------------------------------------------------
# maps


@dataclass(eq=False)
class SimpMap:
    domain: TruncSimpSet
    codomain: TruncSimpSet
    level_maps: list

    def __call__(self, n, a):
        return self.level_maps[n][a]

    def __eq__(self, other):
        if not isinstance(other, SimpMap):
            return NotImplemented
        return self.domain == other.domain and self.codomain == other.codomain and self.level_maps == other.level_maps

    __hash__ = None

    def key(self):
        return tuple(tuple(self.level_maps[n][a] for a in self.domain.levels[n]) for n in range(len(self.level_maps)))


def validate_simpmap(f):
    X, Y = f.domain, f.codomain
    bad = []
    if X.truncation != Y.truncation:
        return [("truncation_mismatch", (X.truncation, Y.truncation))]
    for n in range(X.truncation + 1):
        m = f.level_maps[n]
        if set(m) != set(X.levels[n]) or not set(m.values()) <= set(Y.levels[n]):
            bad.append(("level_map", (n,)))
    if bad:
        return bad
    for (n, i), table in X.faces.items():
        for a, b in table.items():
            if Y.faces[(n, i)][f.level_maps[n][a]] != f.level_maps[n - 1][b]:
                bad.append(("face", (n, i, a)))
    for (n, i), table in X.degens.items():
        for a, b in table.items():
            if Y.degens[(n, i)][f.level_maps[n][a]] != f.level_maps[n + 1][b]:
                bad.append(("degen", (n, i, a)))
    return bad


def identity_map(x):
    return SimpMap(x, x, [{a: a for a in level} for level in x.levels])


def compose_maps(g, f):
    """g after f."""
    return SimpMap(f.domain, g.codomain, [{a: g.level_maps[n][b] for a, b in m.items()} for n, m in enumerate(f.level_maps)])


def vertex_map(x, y, g):
    """The map of vertex-tuple simplicial sets induced by a vertex function g."""
    maps = []
    for n, level in enumerate(x.levels):
        maps.append({a: tuple(g(v) for v in a) for a in level})
    f = SimpMap(x, y, maps)
    bad = validate_simpmap(f)
    if bad:
        raise SSCatError(f"vertex function does not induce a simplicial map: {bad[0]}")
    return f


def to_point(x):
    pt = delta(0, x.truncation)
    return SimpMap(x, pt, [{a: (0,) * (n + 1) for a in level} for n, level in enumerate(x.levels)])


# ---------------------------------------------------------------------------
# constructors


def _vertex_tuple_simpset(truncation, levels, name=None):
    """Simplicial set whose m-simplices are vertex tuples closed under deletion
    and duplication of entries."""
    faces, degens = {}, {}
    for n in range(1, truncation + 1):
        for i in range(n + 1):
            faces[(n, i)] = {a: a[:i] + a[i + 1:] for a in levels[n]}
    for n in range(truncation):
        for i in range(n + 1):
            degens[(n, i)] = {a: a[:i + 1] + a[i:] for a in levels[n]}
    return TruncSimpSet(truncation, levels, faces, degens, name=name)


def delta(n, N):
    """Delta[n] up to level N: m-simplices are monotone maps [m] -> [n] as tuples."""
    if n < 0 or N < 0:
        raise ValueError("n and N must be >= 0")
    levels = [list(combinations_with_replacement(range(n + 1), m + 1)) for m in range(N + 1)]
    return _vertex_tuple_simpset(N, levels, name=f"Delta[{n}]")


def sub_simpset(x, keep, name=None):
    """Sub-object on the simplices satisfying ``keep(n, a)``, with its inclusion."""
    levels = [[a for a in level if keep(n, a)] for n, level in enumerate(x.levels)]
    sets = [set(level) for level in levels]
    faces = {(n, i): {a: t[a] for a in levels[n]} for (n, i), t in x.faces.items()}
    degens = {(n, i): {a: t[a] for a in levels[n]} for (n, i), t in x.degens.items()}
    for (n, i), t in faces.items():
        if not set(t.values()) <= sets[n - 1]:
            raise SSCatError(f"not closed under d_{i} at level {n}")
    for (n, i), t in degens.items():
        if not set(t.values()) <= sets[n + 1]:
            raise SSCatError(f"not closed under s_{i} at level {n}")
    sub = TruncSimpSet(x.truncation, levels, faces, degens, name=name)
    inc = SimpMap(sub, x, [{a: a for a in level} for level in sub.levels])
    return sub, inc


def boundary_inclusion(n, N):
    full = delta(n, N)
    return sub_simpset(full, lambda m, a: len(set(a)) < n + 1, name=f"boundary[{n}]")[1]


def boundary(n, N):
    """The sub-object of Delta[n] on non-surjective maps."""
    return boundary_inclusion(n, N).domain


def _in_horn(n, i, a):
    missing = set(range(n + 1)) - set(a)
    return bool(missing) and missing != {i}


def horn_inclusion(n, i, N):
    if not 0 <= i <= n:
        raise ValueError(f"horn index {i} out of range for n={n}")
    full = delta(n, N)
    return sub_simpset(full, lambda m, a: _in_horn(n, i, a), name=f"horn[{n},{i}]")[1]


def horn(n, i, N):
    """Lambda[n]_i: non-surjective maps missing some vertex other than i."""
    return horn_inclusion(n, i, N).domain


def spine_inclusion(n, N):
    full = delta(n, N)
    return sub_simpset(full, lambda m, a: a[-1] - a[0] <= 1, name=f"spine[{n}]")[1]


def simplicial_spine(n, N):
    """The union of the consecutive edges {k, k+1} of Delta[n]."""
    return spine_inclusion(n, N).domain


def discrete_simpset(points, N):
    pts = sorted_ids(points)
    levels = [pts] * (N + 1)
    faces = {(n, i): {p: p for p in pts} for n in range(1, N + 1) for i in range(n + 1)}
    degens = {(n, i): {p: p for p in pts} for n in range(N) for i in range(n + 1)}
    return TruncSimpSet(N, levels, faces, degens)


def nerve(c, N):
    """Composable chains (f_1, ..., f_n), f_1 first; level 0 is the objects."""
    levels = [list(c.objects)]
    if N >= 1:
        levels.append([(f,) for f in c.morphisms])
    for n in range(2, N + 1):
        levels.append([ch + (g,) for ch in levels[-1] for g in c.out_of(c.tgt[ch[-1]])])

    def vert(ch, k):
        return c.src[ch[0]] if k == 0 else c.tgt[ch[k - 1]]

    faces, degens = {}, {}
    if N >= 1:
        faces[(1, 0)] = {(f,): c.tgt[f] for f in c.morphisms}
        faces[(1, 1)] = {(f,): c.src[f] for f in c.morphisms}
        degens[(0, 0)] = {x: (c.ident[x],) for x in c.objects}
    for n in range(2, N + 1):
        for i in range(n + 1):
            table = {}
            for ch in levels[n]:
                if i == 0:
                    table[ch] = ch[1:]
                elif i == n:
                    table[ch] = ch[:-1]
                else:
                    table[ch] = ch[:i - 1] + (c.comp[(ch[i], ch[i - 1])],) + ch[i + 1:]
            faces[(n, i)] = table
    for n in range(1, N):
        for i in range(n + 1):
            degens[(n, i)] = {ch: ch[:i] + (c.ident[vert(ch, i)],) + ch[i:] for ch in levels[n]}
    name = f"N({c.name})" if c.name else None
    return TruncSimpSet(N, levels, faces, degens, name=name)


def product(x, y):
    if x.truncation != y.truncation:
        raise SSCatError("truncations differ")
    levels = [[(a, b) for a in la for b in lb] for la, lb in zip(x.levels, y.levels)]
    faces = {k: {(a, b): (t[a], y.faces[k][b]) for a, b in levels[k[0]]} for k, t in x.faces.items()}
    degens = {k: {(a, b): (t[a], y.degens[k][b]) for a, b in levels[k[0]]} for k, t in x.degens.items()}
    return TruncSimpSet(x.truncation, levels, faces, degens)


def pullback(f, g):
    """Fiber product of X -f-> Z <-g- Y, with its two projections."""
    x, y = f.domain, g.domain
    if f.codomain is not g.codomain and f.codomain != g.codomain:
        raise SSCatError("maps do not share a codomain")
    levels = []
    for n in range(x.truncation + 1):
        by_image = {}
        for b in y.levels[n]:
            by_image.setdefault(g.level_maps[n][b], []).append(b)
        levels.append([(a, b) for a in x.levels[n] for b in by_image.get(f.level_maps[n][a], ())])
    faces = {k: {(a, b): (t[a], y.faces[k][b]) for a, b in levels[k[0]]} for k, t in x.faces.items()}
    degens = {k: {(a, b): (t[a], y.degens[k][b]) for a, b in levels[k[0]]} for k, t in x.degens.items()}
    p = TruncSimpSet(x.truncation, levels, faces, degens)
    first = SimpMap(p, x, [{ab: ab[0] for ab in level} for level in p.levels])
    second = SimpMap(p, y, [{ab: ab[1] for ab in level} for level in p.levels])
    return p, first, second


# ---------------------------------------------------------------------------
# Segal condition and categories


def spine_tuple(x, n, a):
    return tuple(x.edge(n, a, k) for k in range(n))


def spine_fiber_product(x, n):
    """Tuples (e_0, .., e_{n-1}) of edges with target(e_k) = source(e_{k+1})."""
    d0, d1 = x.faces[(1, 0)], x.faces[(1, 1)]
    by_source = {}
    for e in x.levels[1]:
        by_source.setdefault(d1[e], []).append(e)
    chains = [(e,) for e in x.levels[1]]
    for _ in range(n - 1):
        chains = [ch + (e,) for ch in chains for e in by_source.get(d0[ch[-1]], ())]
    return chains


@dataclass
class SegalReport:
    levels: dict = field(default_factory=dict)
    bijective: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.bijective.values())

    def failures(self):
        return [n for n, b in sorted(self.bijective.items()) if not b]


def segal_check(x):
    if x.truncation < 2:
        raise SSCatError("Segal check needs truncation >= 2")
    report = SegalReport()
    for n in range(2, x.truncation + 1):
        fiber = spine_fiber_product(x, n)
        images = [spine_tuple(x, n, a) for a in x.levels[n]]
        report.levels[n] = (len(x.levels[n]), len(fiber))
        report.bijective[n] = len(set(images)) == len(images) == len(fiber)
    return report


def category_from_segal(x):
    """Recover a category from a Segal simplicial set of truncation >= 3."""
    if x.truncation < 3:
        raise SSCatError("truncation >= 3 is needed to force associativity")
    report = segal_check(x)
    if not report.ok:
        raise SSCatError(f"Segal condition fails at levels {report.failures()}")
    d0, d1, d2 = (x.faces[(2, i)] for i in range(3))
    comp = {}
    for sigma in x.levels[2]:
        comp[(d0[sigma], d2[sigma])] = d1[sigma]
    c = FinCategory(
        x.levels[0], x.levels[1],
        x.faces[(1, 1)], x.faces[(1, 0)], x.degens[(0, 0)], comp,
    )
    bad = validate_category(c)
    if not bad.ok:
        raise SSCatError(f"recovered tables fail the category axioms: {bad.kinds()[:3]}")
    return c


# ---------------------------------------------------------------------------
# enumeration of maps and lifting


def simplicial_maps(x, y, fixed=None, allowed=None, budget=None):
    """Yield every simplicial map x -> y.

    ``fixed`` maps (n, a) to a prescribed image; ``allowed(n, a, b)`` filters
    candidate images. Degenerate simplices are forced by lower levels, the
    others range over simplices of y with matching faces.
    """
    if x.truncation != y.truncation:
        raise SSCatError("truncations differ")
    budget = budget or Budget(what="simplicial map enumeration")
    fixed = fixed or {}
    N = x.truncation
    index = []
    for n in range(N + 1):
        idx = {}
        for b in y.levels[n]:
            idx.setdefault(y.face_tuple(n, b), []).append(b)
        index.append(idx)
    variables = [(n, a) for n in range(N + 1) for a in x.levels[n]]

    def candidates(var, asg):
        n, a = var
        pre = x.degeneracy_preimages(n)[a]
        if pre:
            forced = {y.degens[(n - 1, j)][asg[(n - 1, b)]] for j, b in pre}
            if len(forced) != 1:
                return ()
            cands = tuple(forced)
            faces = tuple(asg[(n - 1, x.faces[(n, i)][a])] for i in range(n + 1))
            if y.face_tuple(n, cands[0]) != faces:
                return ()
        else:
            faces = tuple(asg[(n - 1, x.faces[(n, i)][a])] for i in range(n + 1)) if n else ()
            cands = index[n].get(faces, ())
        if var in fixed:
            cands = tuple(b for b in cands if b == fixed[var])
        if allowed is not None:
            cands = tuple(b for b in cands if allowed(n, a, b))
        return cands

    for asg in search(variables, candidates, None, budget):
        maps = [{} for _ in range(N + 1)]
        for (n, a), b in asg.items():
            maps[n][a] = b
        yield SimpMap(x, y, maps)


def count_simplicial_maps(x, y, budget=None):
    return sum(1 for _ in simplicial_maps(x, y, budget=budget))


@dataclass(eq=False)
class LiftProblem:
    """The square  A --top--> Y ;  B --bottom--> X ;  i: A -> B ;  p: Y -> X."""

    i: SimpMap
    p: SimpMap
    top: SimpMap
    bottom: SimpMap


def validate_lift_problem(lp):
    bad = []
    if lp.top.domain is not lp.i.domain and lp.top.domain != lp.i.domain:
        bad.append(("top_domain", ()))
    if lp.bottom.domain is not lp.i.codomain and lp.bottom.domain != lp.i.codomain:
        bad.append(("bottom_domain", ()))
    if bad:
        return bad
    for n, level in enumerate(lp.i.domain.levels):
        for a in level:
            if lp.p.level_maps[n][lp.top.level_maps[n][a]] != lp.bottom.level_maps[n][lp.i.level_maps[n][a]]:
                bad.append(("not_commutative", (n, a)))
    return bad


def solve_lift(lp, budget=None):
    """All diagonal maps B -> Y with lift . i = top and p . lift = bottom."""
    bad = validate_lift_problem(lp)
    if bad:
        raise SSCatError(f"lifting square does not commute: {bad[0]}")
    fixed = {}
    for n, level in enumerate(lp.i.domain.levels):
        for a in level:
            key = (n, lp.i.level_maps[n][a])
            value = lp.top.level_maps[n][a]
            if fixed.setdefault(key, value) != value:
                return []
    p, bottom = lp.p.level_maps, lp.bottom.level_maps
    lifts = simplicial_maps(
        lp.i.codomain, lp.top.codomain, fixed=fixed,
        allowed=lambda n, a, b: p[n][b] == bottom[n][a], budget=budget,
    )
    return list(lifts)


@dataclass
class FibrationReport:
    up_to: int
    kan_fibration: bool
    trivial_fibration: bool
    kan_witness: dict = None
    trivial_witness: dict = None


def _first_unliftable(inclusion, p, budget):
    B = inclusion.codomain
    for top in simplicial_maps(inclusion.domain, p.domain, budget=budget):
        fixed = {}
        for n, level in enumerate(inclusion.domain.levels):
            for a in level:
                fixed[(n, inclusion.level_maps[n][a])] = p.level_maps[n][top.level_maps[n][a]]
        for bottom in simplicial_maps(B, p.codomain, fixed=fixed, budget=budget):
            lp = LiftProblem(inclusion, p, top, bottom)
            if not solve_lift(lp, budget=budget):
                return lp
    return None


def _square_json(lp, shape):
    A = lp.i.domain
    return {
        "shape": shape,
        "top": {name_of(a): name_of(lp.top.level_maps[0][a]) for a in A.levels[0]},
        "bottom_vertices": [name_of(lp.bottom.level_maps[0][v]) for v in lp.i.codomain.levels[0]],
        "top_map": lp.top,
        "bottom_map": lp.bottom,
        "problem": lp,
    }


def classify_fibration(p, up_to, budget=None):
    """Right lifting against horn inclusions (Kan) and boundary inclusions
    (trivial) for dimensions up to ``up_to``; verdicts hold up to truncation."""
    N = p.domain.truncation
    if up_to > N:
        raise SSCatError(f"up_to={up_to} exceeds truncation {N}")
    budget = budget or Budget(what="fibration classification")
    report = FibrationReport(up_to, True, True)
    for n in range(1, up_to + 1):
        for i in range(n + 1):
            lp = _first_unliftable(horn_inclusion(n, i, N), p, budget)
            if lp is not None:
                report.kan_fibration = False
                report.kan_witness = _square_json(lp, ("horn", n, i))
                break
        if not report.kan_fibration:
            break
    for n in range(0, up_to + 1):
        lp = _first_unliftable(boundary_inclusion(n, N), p, budget)
        if lp is not None:
            report.trivial_fibration = False
            report.trivial_witness = _square_json(lp, ("boundary", n))
            break
    return report


def is_kan_complex(x, up_to=None, budget=None):
    up_to = x.truncation if up_to is None else up_to
    return classify_fibration(to_point(x), up_to, budget).kan_fibration


def pi0(x):
    """Path components of X_0 as a sorted list of sorted tuples."""
    ds = DisjointSet(x.levels[0])
    if x.truncation >= 1:
        for e in x.levels[1]:
            ds.union(x.faces[(1, 1)][e], x.faces[(1, 0)][e])
    return ds.classes()


def truncate(x, M):
    if M > x.truncation:
        raise SSCatError("cannot raise truncation")
    return TruncSimpSet(
        M, x.levels[:M + 1],
        {k: v for k, v in x.faces.items() if k[0] <= M},
        {k: v for k, v in x.degens.items() if k[0] < M},
        name=x.name,
    )


def nerve_map(F, N):
    """The simplicial map N(F): N(C) -> N(D) of a functor."""
    x, y = nerve(F.domain, N), nerve(F.codomain, N)
    maps = [{a: F.ob_map[a] for a in x.levels[0]}]
    for n in range(1, N + 1):
        maps.append({ch: tuple(F.mor_map[f] for f in ch) for ch in x.levels[n]})
    return SimpMap(x, y, maps)
