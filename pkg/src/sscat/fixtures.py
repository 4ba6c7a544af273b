"""Named example objects, constructible from the command line.

Run ``python -m sscat.fixtures`` to regenerate the golden hash file after an
intentional change to a constructor.
"""

from __future__ import annotations

import hashlib
import json
import re
from importlib import resources

from ._util import SSCatError
from .fincat import (
    FinCategory,
    Functor,
    cyclic_group,
    discrete_category,
    free_category,
    iso_category,
    minimal_relative,
    poset_category,
    poset_from_relation,
    representable,
)
from .fibrations import arrow_category_target_projection
from .serialize import canonical_json, to_json
from .simpset import boundary, delta, horn, nerve, simplicial_spine
from .sspace import classifying_diagram, delta_space, iso_arrow_space, spine_space


def boolean_lattice():
    """Subsets of {a, b} ordered by inclusion."""
    return poset_from_relation(
        ["0", "a", "b", "ab"],
        [("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab")],
        name="B2",
    )


def span_category():
    return poset_from_relation(["l", "m", "r"], [("m", "l"), ("m", "r")], name="span")


def parallel_arrows():
    return free_category(["a", "b"], {"f": ("a", "b"), "g": ("a", "b")}, name="parallel")


def idempotent_category():
    """One object with a single nonidentity idempotent e."""
    comp = {("id", "id"): "id", ("e", "id"): "e", ("id", "e"): "e", ("e", "e"): "e"}
    return FinCategory(["*"], ["id", "e"], {"id": "*", "e": "*"}, {"id": "*", "e": "*"}, {"*": "id"}, comp, name="idem")


def galois_connection():
    """[2] -> [1] collapsing 1 and 2; its right adjoint sends 0 to 0 and 1 to 2."""
    src, tgt = poset_category(2), poset_category(1)
    squash = {0: 0, 1: 1, 2: 1}
    return Functor(src, tgt, squash, {(i, j): (squash[i], squash[j]) for i, j in src.morphisms})


def constant_monotone_map():
    """[1] -> [2] constant at 1; it has no right adjoint."""
    src, tgt = poset_category(1), poset_category(2)
    return Functor(src, tgt, {0: 1, 1: 1}, {m: (1, 1) for m in src.morphisms})


def pushout_diagram():
    """The span a <- 0 -> b inside the subsets of {a, b}; its colimit is ab."""
    J, B = span_category(), boolean_lattice()
    ob = {"m": "0", "l": "a", "r": "b"}
    return Functor(J, B, ob, {(x, y): (ob[x], ob[y]) for x, y in J.morphisms})


def wrong_target_category():
    """A table where one composite has the wrong target."""
    c = poset_category(1)
    comp = dict(c.comp)
    comp[((0, 1), (0, 0))] = (0, 0)
    return FinCategory(c.objects, c.morphisms, c.src, c.tgt, c.ident, comp, name="broken")


CATEGORIES = {
    "B2": boolean_lattice,
    "span": span_category,
    "parallel": parallel_arrows,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "idem": idempotent_category,
    "discrete2": lambda: discrete_category([0, 1], name="discrete2"),
}

FUNCTORS = {
    "galois": galois_connection,
    "pushout": pushout_diagram,
    "constant_map": constant_monotone_map,
    "target_projection": lambda: arrow_category_target_projection()[1],
}


def fixture_categories():
    """The categories used as the standard fixture set in checks and tests."""
    out = {f"poset{n}": poset_category(n) for n in range(3)}
    out.update({f"I{n}": iso_category(n) for n in range(1, 3)})
    out.update({name: make() for name, make in CATEGORIES.items()})
    return out


def _category(name):
    m = re.fullmatch(r"poset(\d+)", name)
    if m:
        return poset_category(int(m.group(1)))
    m = re.fullmatch(r"I(\d+)", name)
    if m:
        return iso_category(int(m.group(1)))
    if name in CATEGORIES:
        return CATEGORIES[name]()
    return None


def build_fixture(name, trunc=None, vtrunc=None):
    """Resolve a fixture name to an object; ``trunc``/``vtrunc`` override defaults."""
    c = _category(name)
    if c is not None:
        return c
    if name in FUNCTORS:
        return FUNCTORS[name]()
    if name == "Y0_poset2":
        return representable(poset_category(2), 0)
    N = 3 if trunc is None else trunc
    L = 1 if vtrunc is None else vtrunc
    patterns = [
        (r"delta(\d+)", lambda n: delta(n, N)),
        (r"boundary(\d+)", lambda n: boundary(n, N)),
        (r"horn(\d+)_(\d+)", lambda n, i: horn(n, i, N)),
        (r"spine(\d+)", lambda n: simplicial_spine(n, N)),
        (r"F(\d+)", lambda n: delta_space(n, N, L)),
        (r"G(\d+)", lambda n: spine_space(n, N, L)),
    ]
    for pattern, make in patterns:
        m = re.fullmatch(pattern, name)
        if m:
            return make(*(int(g) for g in m.groups()))
    if name == "E1":
        return iso_arrow_space(N, L)
    m = re.fullmatch(r"nerve_(\w+)", name)
    if m and _category(m.group(1)) is not None:
        return nerve(_category(m.group(1)), N)
    m = re.fullmatch(r"classifying_(\w+)", name)
    if m and _category(m.group(1)) is not None:
        return classifying_diagram(_category(m.group(1)), N, 2 if vtrunc is None else vtrunc)
    m = re.fullmatch(r"relative_(\w+)", name)
    if m and _category(m.group(1)) is not None:
        return minimal_relative(_category(m.group(1)))
    raise SSCatError(f"unknown fixture {name!r}")


GOLDEN_NAMES = [
    "poset2", "I1", "I2", "B2", "span", "parallel", "Z2", "Z3", "idem",
    "delta2", "boundary2", "horn2_0", "horn2_1", "spine2", "spine3",
    "F2", "G2", "E1", "nerve_B2", "classifying_poset1", "classifying_Z2",
    "galois", "pushout", "target_projection", "Y0_poset2",
]


def fixture_hash(name):
    doc = to_json(build_fixture(name))
    return hashlib.sha256(canonical_json(doc).encode("utf-8")).hexdigest()


def compute_golden_hashes():
    return {name: fixture_hash(name) for name in GOLDEN_NAMES}


def stored_golden_hashes():
    text = resources.files("sscat").joinpath("data/golden_hashes.json").read_text(encoding="utf-8")
    return json.loads(text)


def _write_golden():
    path = resources.files("sscat").joinpath("data/golden_hashes.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(compute_golden_hashes(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    _write_golden()
