"""Seeded random instances for property tests and demos."""

from __future__ import annotations

import random

from ._util import Budget, search
from .fincat import (
    FinCategory,
    SetFunctor,
    cyclic_group,
    enumerate_functors,
    free_category,
    poset_from_relation,
    preorder_category,
)
from .fibrations import grothendieck


def random_poset(rng, max_elements=4):
    n = rng.randint(1, max_elements)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return poset_from_relation(range(n), pairs)


def random_preorder(rng, max_elements=4):
    n = rng.randint(1, max_elements)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < 0.3]
    return poset_from_relation(range(n), pairs)


def random_free_category(rng, max_objects=4, max_morphisms=12):
    """Free category on a random acyclic quiver, rejected if too large."""
    while True:
        n = rng.randint(1, max_objects)
        arrows = {}
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(rng.choice([0, 0, 1, 1, 2])):
                    arrows[f"a{i}{j}{k}"] = (i, j)
        c = free_category(range(n), arrows)
        if len(c.morphisms) <= max_morphisms:
            return c


def random_concrete_category(rng, max_objects=3, max_morphisms=12, tries=50):
    """Objects are small finite sets; morphisms are the closure under composition
    of a few random functions plus identities."""
    for _ in range(tries):
        n = rng.randint(1, max_objects)
        size = {x: rng.randint(1, 2) for x in range(n)}
        mors = {(x, x, tuple(range(size[x]))) for x in range(n)}
        for _ in range(rng.randint(1, 4)):
            x, y = rng.randrange(n), rng.randrange(n)
            mors.add((x, y, tuple(rng.randrange(size[y]) for _ in range(size[x]))))
        grown = True
        while grown and len(mors) <= max_morphisms:
            grown = False
            for f in list(mors):
                for g in list(mors):
                    if f[1] == g[0]:
                        h = (f[0], g[1], tuple(g[2][v] for v in f[2]))
                        if h not in mors:
                            mors.add(h)
                            grown = True
        if len(mors) > max_morphisms:
            continue
        comp = {}
        for f in mors:
            for g in mors:
                if f[1] == g[0]:
                    comp[(g, f)] = (f[0], g[1], tuple(g[2][v] for v in f[2]))
        return FinCategory(
            range(n), mors,
            {m: m[0] for m in mors}, {m: m[1] for m in mors},
            {x: (x, x, tuple(range(size[x]))) for x in range(n)}, comp,
        )
    return preorder_category([0], lambda a, b: True)


def random_group(rng):
    return cyclic_group(rng.randint(1, 4))


def random_category(rng, max_objects=4, max_morphisms=12):
    """One of several families, redrawn until it fits the size limits."""
    while True:
        kind = rng.choice(["preorder", "poset", "free", "concrete", "group"])
        if kind == "preorder":
            c = random_preorder(rng, max_objects)
        elif kind == "poset":
            c = random_poset(rng, max_objects)
        elif kind == "free":
            c = random_free_category(rng, max_objects, max_morphisms)
        elif kind == "group":
            c = random_group(rng)
        else:
            c = random_concrete_category(rng, min(max_objects, 3), max_morphisms)
        if len(c.morphisms) <= max_morphisms and len(c.objects) <= max_objects:
            return c


def random_functor(rng, C, D, limit=5000):
    """A uniformly chosen functor among the first ``limit`` enumerated."""
    found = []
    for F in enumerate_functors(C, D, budget=Budget(10**6)):
        found.append(F)
        if len(found) >= limit:
            break
    return rng.choice(found) if found else None


def random_monotone_map(rng, max_elements=5):
    while True:
        P, Q = random_poset(rng, max_elements), random_poset(rng, max_elements)
        F = random_functor(rng, P, Q)
        if F is not None:
            return F


def random_set_functor(rng, C, max_size=3, tries=20):
    """Random sets per object, then a randomized search for functorial maps."""
    nonid = [m for m in C.morphisms if not C.is_identity(m)]
    for attempt in range(tries):
        sizes = {x: rng.randint(1, max_size) if attempt < tries - 1 else 1 for x in C.objects}
        sets = {x: tuple(f"{x}.{k}" if not isinstance(x, str) else f"{x}{k}" for k in range(sizes[x])) for x in C.objects}
        variables = [(m, a) for m in nonid for a in sets[C.src[m]]]

        def image(m, a, asg):
            if C.is_identity(m):
                return a
            return asg.get((m, a))

        def candidates(var, asg):
            vals = list(sets[C.tgt[var[0]]])
            rng.shuffle(vals)
            return vals

        def consistent(var, value, asg):
            asg[var] = value
            try:
                for (g, f), h in C.comp.items():
                    for a in sets[C.src[f]]:
                        b = image(f, a, asg)
                        if b is None:
                            continue
                        c = image(g, b, asg)
                        d = image(h, a, asg)
                        if c is not None and d is not None and c != d:
                            return False
                return True
            finally:
                del asg[var]

        for asg in search(variables, candidates, consistent, Budget(10**5)):
            mor = {m: {a: image(m, a, asg) for a in sets[C.src[m]]} for m in C.morphisms}
            return SetFunctor(C, sets, mor)
    raise RuntimeError("no set functor found")


def random_projection(rng):
    """A functor that is sometimes cofibered in sets: either a Grothendieck
    projection or a random functor between random categories."""
    if rng.random() < 0.5:
        C = random_category(rng, 3, 8)
        return grothendieck(random_set_functor(rng, C, 2))[1]
    while True:
        C, D = random_category(rng, 3, 8), random_category(rng, 3, 8)
        F = random_functor(rng, C, D)
        if F is not None:
            return F


def rng_for(seed):
    return random.Random(seed)

