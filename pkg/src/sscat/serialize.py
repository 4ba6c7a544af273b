"""JSON and DOT documents.

Identifiers are written with :func:`name_of`, so loading a document yields
string identifiers. Exporting a loaded document reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os

from ._util import SSCatError, name_of, sorted_ids
from .fincat import FinCategory, Functor, RelativeCategory, SetFunctor
from .simpset import SimpMap, TruncSimpSet
from .sspace import TruncBiSimpSet

SCHEMA_VERSION = 1


class DocumentError(SSCatError):
    """A document could not be parsed or does not describe a known object."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


def canonical_json(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def pretty_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _names(xs, what):
    out = {}
    for x in xs:
        n = name_of(x)
        if n in out and out[n] != x:
            raise SSCatError(f"{what} identifiers {out[n]!r} and {x!r} print the same")
        out[n] = x
    return {x: n for n, x in out.items()}


# ---------------------------------------------------------------------------
# writers


def category_to_json(c):
    ob = _names(c.objects, "object")
    mo = _names(c.morphisms, "morphism")
    comp = sorted([mo[g], mo[f], mo[h]] for (g, f), h in c.comp.items())
    return {
        "kind": "category",
        "objects": sorted(ob.values()),
        "morphisms": sorted(
            ({"id": mo[m], "src": ob[c.src[m]], "tgt": ob[c.tgt[m]]} for m in c.morphisms),
            key=lambda d: d["id"],
        ),
        "identities": {ob[x]: mo[c.ident[x]] for x in c.objects},
        "comp": comp,
    }


def simpset_to_json(x):
    names = [_names(level, f"level-{n} simplex") for n, level in enumerate(x.levels)]
    return {
        "kind": "simpset",
        "truncation": x.truncation,
        "levels": [sorted(names[n].values()) for n in range(x.truncation + 1)],
        "faces": {
            f"{n},{i}": {names[n][a]: names[n - 1][b] for a, b in t.items()}
            for (n, i), t in x.faces.items()
        },
        "degens": {
            f"{n},{i}": {names[n][a]: names[n + 1][b] for a, b in t.items()}
            for (n, i), t in x.degens.items()
        },
    }


def bisimpset_to_json(t):
    names = {k: _names(v, f"level-{k} simplex") for k, v in t.levels.items()}

    def table(ops, dn, dl):
        return {
            f"{n},{l},{i}": {names[(n, l)][a]: names[(n + dn, l + dl)][b] for a, b in tab.items()}
            for (n, l, i), tab in ops.items()
        }

    return {
        "kind": "bisimpset",
        "htrunc": t.htrunc,
        "vtrunc": t.vtrunc,
        "levels": {f"{n},{l}": sorted(v.values()) for (n, l), v in names.items()},
        "hfaces": table(t.hfaces, -1, 0),
        "hdegens": table(t.hdegens, 1, 0),
        "vfaces": table(t.vfaces, 0, -1),
        "vdegens": table(t.vdegens, 0, 1),
    }


def functor_to_json(F):
    return {
        "kind": "functor",
        "domain": category_to_json(F.domain),
        "codomain": category_to_json(F.codomain),
        "obMap": {name_of(x): name_of(y) for x, y in F.ob_map.items()},
        "morMap": {name_of(m): name_of(g) for m, g in F.mor_map.items()},
    }


def setfunctor_to_json(F):
    return {
        "kind": "setfunctor",
        "domain": category_to_json(F.domain),
        "obAssign": {name_of(x): sorted(name_of(a) for a in v) for x, v in F.ob_assign.items()},
        "morAssign": {
            name_of(m): {name_of(a): name_of(b) for a, b in fn.items()} for m, fn in F.mor_assign.items()
        },
    }


def simpmap_to_json(f):
    return {
        "kind": "simpmap",
        "domain": simpset_to_json(f.domain),
        "codomain": simpset_to_json(f.codomain),
        "levelMaps": [{name_of(a): name_of(b) for a, b in m.items()} for m in f.level_maps],
    }


def relative_to_json(rc):
    return {
        "kind": "relative",
        "category": category_to_json(rc.cat),
        "weak": sorted(name_of(m) for m in rc.weak),
    }


def to_json(obj):
    for cls, writer in _WRITERS:
        if isinstance(obj, cls):
            return writer(obj)
    raise SSCatError(f"cannot serialize {type(obj).__name__}")


_WRITERS = [
    (FinCategory, category_to_json),
    (TruncSimpSet, simpset_to_json),
    (TruncBiSimpSet, bisimpset_to_json),
    (Functor, functor_to_json),
    (SetFunctor, setfunctor_to_json),
    (SimpMap, simpmap_to_json),
    (RelativeCategory, relative_to_json),
]


# ---------------------------------------------------------------------------
# readers


def _need(doc, key, kind):
    if key not in doc:
        raise DocumentError(f"{kind} document is missing {key!r}")
    return doc[key]


def _pair(key, size):
    try:
        parts = tuple(int(p) for p in key.split(","))
    except ValueError:
        raise DocumentError(f"bad operator key {key!r}") from None
    if len(parts) != size:
        raise DocumentError(f"bad operator key {key!r}")
    return parts


def category_from_json(doc, base=None):
    objects = list(_need(doc, "objects", "category"))
    mors = _need(doc, "morphisms", "category")
    try:
        src = {m["id"]: m["src"] for m in mors}
        tgt = {m["id"]: m["tgt"] for m in mors}
    except (KeyError, TypeError):
        raise DocumentError("morphisms must be objects with id, src and tgt") from None
    ident = dict(_need(doc, "identities", "category"))
    comp = {}
    for row in _need(doc, "comp", "category"):
        if len(row) != 3:
            raise DocumentError(f"comp entries are [g, f, gf], got {row!r}")
        comp[(row[0], row[1])] = row[2]
    return FinCategory(objects, list(src), src, tgt, ident, comp)


def simpset_from_json(doc, base=None):
    N = _need(doc, "truncation", "simpset")
    levels = _need(doc, "levels", "simpset")
    faces = {_pair(k, 2): v for k, v in _need(doc, "faces", "simpset").items()}
    degens = {_pair(k, 2): v for k, v in _need(doc, "degens", "simpset").items()}
    return TruncSimpSet(N, levels, faces, degens)


def bisimpset_from_json(doc, base=None):
    levels = {_pair(k, 2): v for k, v in _need(doc, "levels", "bisimpset").items()}
    ops = {}
    for key in ("hfaces", "hdegens", "vfaces", "vdegens"):
        ops[key] = {_pair(k, 3): v for k, v in _need(doc, key, "bisimpset").items()}
    return TruncBiSimpSet(
        _need(doc, "htrunc", "bisimpset"), _need(doc, "vtrunc", "bisimpset"), levels,
        ops["hfaces"], ops["hdegens"], ops["vfaces"], ops["vdegens"],
    )


def _sub(doc, key, reader, base):
    value = _need(doc, key, doc.get("kind", "document"))
    if isinstance(value, str):
        path = value if base is None else os.path.join(base, value)
        value = read_json_file(path)
    return reader(value, base)


def functor_from_json(doc, base=None):
    C = _sub(doc, "domain", category_from_json, base)
    D = _sub(doc, "codomain", category_from_json, base)
    return Functor(C, D, dict(_need(doc, "obMap", "functor")), dict(_need(doc, "morMap", "functor")))


def setfunctor_from_json(doc, base=None):
    C = _sub(doc, "domain", category_from_json, base)
    return SetFunctor(C, _need(doc, "obAssign", "setfunctor"), _need(doc, "morAssign", "setfunctor"))


def simpmap_from_json(doc, base=None):
    X = _sub(doc, "domain", simpset_from_json, base)
    Y = _sub(doc, "codomain", simpset_from_json, base)
    return SimpMap(X, Y, [dict(m) for m in _need(doc, "levelMaps", "simpmap")])


def relative_from_json(doc, base=None):
    c = _sub(doc, "category", category_from_json, base)
    return RelativeCategory(c, frozenset(_need(doc, "weak", "relative")))


READERS = {
    "category": category_from_json,
    "simpset": simpset_from_json,
    "bisimpset": bisimpset_from_json,
    "functor": functor_from_json,
    "setfunctor": setfunctor_from_json,
    "simpmap": simpmap_from_json,
    "relative": relative_from_json,
}


def guess_kind(doc):
    if not isinstance(doc, dict):
        raise DocumentError("top-level JSON value must be an object")
    if "kind" in doc:
        return doc["kind"]
    for kind, keys in (
        ("bisimpset", {"htrunc", "vtrunc"}),
        ("simpset", {"truncation", "faces"}),
        ("category", {"objects", "morphisms"}),
        ("setfunctor", {"obAssign"}),
        ("functor", {"obMap"}),
        ("simpmap", {"levelMaps"}),
        ("relative", {"weak"}),
    ):
        if keys <= set(doc):
            return kind
    raise DocumentError("cannot tell what kind of object this document describes")


def from_json(doc, base=None):
    kind = guess_kind(doc)
    if kind not in READERS:
        raise DocumentError(f"unknown kind {kind!r}")
    try:
        return READERS[kind](doc, base)
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise DocumentError(f"malformed {kind} document: {exc}") from None


def parse_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None


def read_json_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_json(fh.read())


def loads(text, base=None):
    return from_json(parse_json(text), base)


def load(path):
    return from_json(read_json_file(path), os.path.dirname(os.path.abspath(path)))


def dumps(obj):
    return canonical_json(to_json(obj))


# ---------------------------------------------------------------------------
# DOT


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(c, name="C"):
    """Objects as nodes and nonidentity morphisms as labelled edges."""
    lines = [f"digraph {_quote(name)} {{"]
    for x in c.objects:
        lines.append(f"  {_quote(name_of(x))};")
    for m in sorted_ids(c.morphisms):
        if c.is_identity(m):
            continue
        lines.append(
            f"  {_quote(name_of(c.src[m]))} -> {_quote(name_of(c.tgt[m]))} [label={_quote(name_of(m))}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
