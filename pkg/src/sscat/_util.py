"""Shared plumbing: enumeration budget, deterministic ordering, naming, union-find."""

from __future__ import annotations

import os
from contextlib import contextmanager
from functools import lru_cache

DEFAULT_MAX_ENUM = 10**6

_max_enum = int(os.environ.get("SSCAT_MAX_ENUM", DEFAULT_MAX_ENUM))


class SSCatError(Exception):
    """Base class for errors raised by this package."""


class EnumerationLimitError(SSCatError):
    """An exhaustive search needed more candidates than the configured bound.

    This is never a negative verdict: the question was simply not decided.
    """

    def __init__(self, bound, what="search"):
        super().__init__(f"{what} exceeded max_enumeration={bound}")
        self.bound = bound
        self.what = what


class UndecidableError(SSCatError):
    """The input falls outside the regimes this package can decide."""


def get_max_enumeration():
    return _max_enum


def set_max_enumeration(bound):
    global _max_enum
    if bound < 1:
        raise ValueError("max_enumeration must be positive")
    _max_enum = int(bound)


@contextmanager
def max_enumeration(bound):
    """Temporarily override the enumeration bound."""
    old = _max_enum
    set_max_enumeration(bound)
    try:
        yield
    finally:
        set_max_enumeration(old)


class Budget:
    """Counts candidate tuples tried by a search and raises past the bound."""

    __slots__ = ("bound", "used", "what")

    def __init__(self, bound=None, what="search"):
        self.bound = get_max_enumeration() if bound is None else bound
        self.used = 0
        self.what = what

    def tick(self, n=1):
        self.used += n
        if self.used > self.bound:
            raise EnumerationLimitError(self.bound, self.what)

    def guard(self, size):
        """Refuse up front when a product space is already too large."""
        if size > self.bound:
            raise EnumerationLimitError(self.bound, self.what)


@lru_cache(maxsize=1 << 20)
def sort_key(x):
    """Total order on the identifiers used throughout (ints, strings, nested tuples)."""
    if x is None:
        return (0,)
    if isinstance(x, bool):
        return (1, int(x))
    if isinstance(x, int):
        return (1, x)
    if isinstance(x, str):
        return (2, x)
    if isinstance(x, tuple):
        return (3, len(x), tuple(sort_key(y) for y in x))
    if isinstance(x, frozenset):
        return (4, tuple(sorted(sort_key(y) for y in x)))
    return (5, repr(x))


def sorted_ids(xs):
    return sorted(xs, key=sort_key)


def is_sorted_ids(xs):
    keys = [sort_key(x) for x in xs]
    return all(a < b for a, b in zip(keys, keys[1:]))


def name_of(x):
    """Render an identifier as a compact, deterministic string."""
    if isinstance(x, str):
        return x
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, tuple):
        return "(" + ",".join(name_of(y) for y in x) + ")"
    if isinstance(x, frozenset):
        return "{" + ",".join(name_of(y) for y in sorted_ids(x)) + "}"
    return repr(x)


class DisjointSet:
    """Union-find over arbitrary hashable elements."""

    def __init__(self, elements=()):
        self.parent = {}
        self.rank = {}
        for e in elements:
            self.add(e)

    def add(self, e):
        if e not in self.parent:
            self.parent[e] = e
            self.rank[e] = 0

    def find(self, e):
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True

    def classes(self):
        """Partition as a sorted list of sorted tuples."""
        groups = {}
        for e in self.parent:
            groups.setdefault(self.find(e), []).append(e)
        parts = [tuple(sorted_ids(g)) for g in groups.values()]
        return sorted(parts, key=lambda p: sort_key(p[0]))


def search(variables, candidates, consistent=None, budget=None):
    """Depth-first enumeration of assignments, without recursion.

    ``candidates(var, assignment)`` yields the values to try for ``var`` given
    the assignments made so far; ``consistent(var, value, assignment)`` rejects
    a value (the assignment does not yet contain ``var``). Every value tried
    costs one budget tick. Yields a fresh dict per complete assignment.
    """
    budget = budget or Budget()
    variables = list(variables)
    n = len(variables)
    if n == 0:
        yield {}
        return
    assignment = {}
    stack = [iter(candidates(variables[0], assignment))]
    while stack:
        depth = len(stack) - 1
        var = variables[depth]
        advanced = False
        for value in stack[-1]:
            budget.tick()
            if consistent is not None and not consistent(var, value, assignment):
                continue
            assignment[var] = value
            if depth + 1 == n:
                yield dict(assignment)
                del assignment[var]
                continue
            stack.append(iter(candidates(variables[depth + 1], assignment)))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if stack:
                del assignment[variables[len(stack) - 1]]
