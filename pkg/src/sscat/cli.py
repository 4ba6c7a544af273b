"""Command-line front end.

Exit codes: 0 positive verdict, 1 negative verdict, 2 unreadable input or bad
usage, 3 enumeration bound exceeded, 4 outside the decidable regimes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import colim_adj, fibrations, fincat, simpset, sspace
from ._util import EnumerationLimitError, SSCatError, UndecidableError, max_enumeration, name_of
from .fixtures import build_fixture
from .serialize import (
    SCHEMA_VERSION,
    DocumentError,
    from_json,
    parse_json,
    pretty_json,
    to_dot,
    to_json,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BOUND, EXIT_UNDECIDABLE = 0, 1, 2, 3, 4


class Workspace:
    """Named objects with where they came from. Every object is validated when stored."""

    def __init__(self, trunc=None, vtrunc=None, stdin=None):
        self.trunc = trunc
        self.vtrunc = vtrunc
        self.stdin = stdin if stdin is not None else sys.stdin
        self.objects = {}
        self.provenance = {}

    def resolve(self, target):
        if target in self.objects:
            return self.objects[target]
        if target == "-":
            obj = from_json(parse_json(self.stdin.read()))
            source = "stdin"
        elif os.path.exists(target):
            with open(target, encoding="utf-8") as fh:
                obj = from_json(parse_json(fh.read()), os.path.dirname(os.path.abspath(target)))
            source = f"file {target}"
        else:
            try:
                obj = build_fixture(target, self.trunc, self.vtrunc)
            except (EnumerationLimitError, UndecidableError):
                raise
            except SSCatError as exc:
                raise DocumentError(f"{target!r} is neither a file nor a known fixture") from exc
            source = f"fixture {target}"
        self.store(target, obj, source)
        return obj

    def store(self, name, obj, source):
        problems = validate_object(obj)
        if problems:
            raise DocumentError(f"{name} failed validation: {problems[:3]}")
        self.objects[name] = obj
        self.provenance[name] = source


def validate_object(obj):
    """Problems as a list of (kind, witness); empty when valid."""
    if isinstance(obj, fincat.FinCategory):
        r = fincat.validate_category(obj)
        return r.structural + r.violations
    if isinstance(obj, fincat.Functor):
        return validate_object(obj.domain) + validate_object(obj.codomain) + fincat.validate_functor(obj)
    if isinstance(obj, fincat.SetFunctor):
        return validate_object(obj.domain) + fincat.validate_set_functor(obj)
    if isinstance(obj, fincat.RelativeCategory):
        return validate_object(obj.cat) + fincat.validate_relative(obj)
    if isinstance(obj, simpset.TruncSimpSet):
        return simpset.validate_simplicial(obj)
    if isinstance(obj, simpset.SimpMap):
        return simpset.validate_simplicial(obj.domain) + simpset.validate_simplicial(obj.codomain) + simpset.validate_simpmap(obj)
    if isinstance(obj, sspace.TruncBiSimpSet):
        return sspace.validate_bisimplicial(obj)
    return [("unknown_object", (type(obj).__name__,))]


def _jsonable(x):
    # tuples are identifiers; lists are report structure
    if isinstance(x, list):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {name_of(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted(name_of(y) for y in x)
    if x is None or isinstance(x, (bool, int, float)):
        return x
    return name_of(x)


def report(kind, verdict, **fields):
    doc = {"schema_version": SCHEMA_VERSION, "kind": kind, "verdict": verdict}
    doc.update({k: _jsonable(v) for k, v in fields.items()})
    return doc


def _expect(obj, *types):
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise DocumentError(f"expected {names}, got {type(obj).__name__}")
    return obj


# ---------------------------------------------------------------------------
# checks


def check_category(obj, args):
    r = fincat.validate_category(_expect(obj, fincat.FinCategory))
    return report(
        "category", r.ok,
        structural=[[k, list(w)] for k, w in r.structural],
        violations=[[k, list(w)] for k, w in r.violations],
    )


def check_segal(obj, args):
    if isinstance(obj, fincat.FinCategory):
        obj = simpset.nerve(obj, args.trunc or 3)
    if isinstance(obj, sspace.TruncBiSimpSet):
        v = sspace.segal_space_check(obj)
        return report(
            "segal", v.ok, regime=v.regime,
            counts={f"{n},{l}": list(c) for (n, l), c in sorted(v.counts.items())},
            row0={f"level{n}": list(c) for (n, l), c in sorted(v.counts.items()) if l == 0},
            bijective={f"{n},{l}": b for (n, l), b in sorted(v.bijective.items())},
        )
    r = simpset.segal_check(_expect(obj, simpset.TruncSimpSet))
    return report(
        "segal", r.ok,
        counts={f"level{n}": list(c) for n, c in sorted(r.levels.items())},
        failing_levels=r.failures(),
    )


def _witness(w):
    if w is None:
        return None
    lp = w["problem"]
    A, B = lp.i.domain, lp.i.codomain
    return {
        "shape": list(w["shape"]),
        "top_vertices": {name_of(a): name_of(lp.top.level_maps[0][a]) for a in A.levels[0]},
        "top_edges": {name_of(a): name_of(lp.top.level_maps[1][a]) for a in A.nondegenerate(1)} if A.truncation else {},
        "bottom_vertices": {name_of(b): name_of(lp.bottom.level_maps[0][b]) for b in B.levels[0]},
    }


def check_kan(obj, args):
    if isinstance(obj, simpset.TruncSimpSet):
        obj = simpset.to_point(obj)
    p = _expect(obj, simpset.SimpMap)
    up_to = p.domain.truncation if args.upto is None else args.upto
    r = simpset.classify_fibration(p, up_to)
    return report(
        "kan", r.kan_fibration, up_to=up_to,
        kan_fibration=r.kan_fibration, trivial_fibration=r.trivial_fibration,
        kan_witness=_witness(r.kan_witness), trivial_witness=_witness(r.trivial_witness),
    )


def check_complete(obj, args):
    r = sspace.completeness_check(_expect(obj, sspace.TruncBiSimpSet))
    return report(
        "complete", r.ok, strategy=r.strategy,
        counts={f"level{l}": list(c) for l, c in sorted(r.counts.items())},
        detail=r.detail,
    )


def check_leftfib(obj, args):
    if isinstance(obj, fincat.Functor):
        obj = simpset.nerve_map(obj, args.trunc or 2)
    r = fibrations.left_fibration_report(_expect(obj, simpset.SimpMap))
    return report(
        "leftfib", r.ok,
        counts={f"level{n}": list(c) for n, c in sorted(r.counts.items())},
        witness=r.witness,
    )


def check_cocart(obj, args):
    p = _expect(obj, fincat.Functor)
    co = fibrations.is_cocartesian_fibration(p)
    cart = fibrations.is_cartesian_fibration(p)
    return report(
        "cocart", co.ok, cartesian=cart.ok,
        failure=list(co.failure) if co.failure else None,
        lifts=[[name_of(f), name_of(x), [name_of(m) for m in ls]] for (f, x), ls in sorted(co.lifts.items(), key=lambda kv: (name_of(kv[0][0]), name_of(kv[0][1])))],
    )


def check_cofibered(obj, args):
    r = fibrations.is_cofibered_in_sets(_expect(obj, fincat.Functor))
    return report("cofibered", r.verdict, failures=[list(f) for f in r.failures])


CHECKS = {
    "category": check_category,
    "segal": check_segal,
    "kan": check_kan,
    "complete": check_complete,
    "leftfib": check_leftfib,
    "cocart": check_cocart,
    "cofibered": check_cofibered,
}


# ---------------------------------------------------------------------------
# computations: each returns (document, verdict)


def compute_nerve(obj, args):
    return to_json(simpset.nerve(_expect(obj, fincat.FinCategory), args.trunc or 3)), True


def compute_classify(obj, args):
    if isinstance(obj, fincat.FinCategory):
        obj = fincat.minimal_relative(obj)
    rc = _expect(obj, fincat.RelativeCategory)
    N = 3 if args.trunc is None else args.trunc
    L = 2 if args.vtrunc is None else args.vtrunc
    return to_json(sspace.classification_diagram(rc, N, L)), True


def compute_ho(obj, args):
    if isinstance(obj, simpset.TruncSimpSet):
        obj = sspace.embed_vertical(obj, 1)
    return to_json(sspace.homotopy_category(_expect(obj, sspace.TruncBiSimpSet))), True


def compute_grothendieck(obj, args):
    total, proj = fibrations.grothendieck(_expect(obj, fincat.SetFunctor))
    return to_json(proj), True


def compute_colimit(obj, args):
    F = _expect(obj, fincat.Functor)
    c = colim_adj.colimit(F)
    if c is None:
        return report("colimit", False, vertex=None), False
    return report(
        "colimit", colim_adj.colimit_oracle(F, c), vertex=c.vertex,
        legs={name_of(i): name_of(leg) for i, leg in c.legs.items()},
    ), True


def compute_adjoint(obj, args):
    F = _expect(obj, fincat.Functor)
    res = colim_adj.left_adjoint_via_comma(F)
    cons = colim_adj.adjunction_consistency(F)
    if not res.ok:
        return report("adjoint", False, failing=res.failing, collage_cartesian=cons.cartesian), False
    cert = res.certificate
    return report(
        "adjoint", True,
        right_adjoint={"obMap": res.adjoint.ob_map, "morMap": res.adjoint.mor_map},
        counit=cert.counit,
        hom_bijections=[
            {"c": c, "d": d, "table": table} for (c, d), table in sorted(cert.hom_bijections.items(), key=lambda kv: (name_of(kv[0][0]), name_of(kv[0][1])))
        ],
        natural_in_source=cert.natural_in_source,
        natural_in_target=cert.natural_in_target,
        collage_cartesian=cons.cartesian,
    ), True


COMPUTES = {
    "nerve": compute_nerve,
    "classify": compute_classify,
    "ho": compute_ho,
    "grothendieck": compute_grothendieck,
    "colimit": compute_colimit,
    "adjoint": compute_adjoint,
}


# ---------------------------------------------------------------------------
# build


def _int(args, k):
    try:
        return int(args[k])
    except (IndexError, ValueError):
        raise DocumentError(f"expected an integer argument at position {k + 1}") from None


def build_object(ws, constructor, cargs, trunc, vtrunc):
    N = 3 if trunc is None else trunc
    L = 1 if vtrunc is None else vtrunc
    if constructor == "delta":
        return simpset.delta(_int(cargs, 0), N)
    if constructor == "boundary":
        return simpset.boundary(_int(cargs, 0), N)
    if constructor == "horn":
        return simpset.horn(_int(cargs, 0), _int(cargs, 1), N)
    if constructor == "spine":
        return simpset.simplicial_spine(_int(cargs, 0), N)
    if constructor == "poset":
        return fincat.poset_category(_int(cargs, 0))
    if constructor == "iso":
        return fincat.iso_category(_int(cargs, 0))
    if constructor == "F":
        return sspace.delta_space(_int(cargs, 0), N, L)
    if constructor == "G":
        return sspace.spine_space(_int(cargs, 0), N, L)
    if constructor == "E1":
        return sspace.iso_arrow_space(N, L)
    if not cargs:
        raise DocumentError(f"{constructor} needs a target argument")
    target = ws.resolve(cargs[0])
    if constructor == "nerve":
        return simpset.nerve(_expect(target, fincat.FinCategory), N)
    if constructor == "core":
        return fincat.core(_expect(target, fincat.FinCategory))
    if constructor == "opposite":
        return fincat.opposite(_expect(target, fincat.FinCategory))
    if constructor == "classifying":
        return sspace.classifying_diagram(_expect(target, fincat.FinCategory), N, 2 if vtrunc is None else vtrunc)
    if constructor == "embed":
        return sspace.embed_vertical(_expect(target, simpset.TruncSimpSet), L)
    if constructor == "funcat":
        other = ws.resolve(cargs[1]) if len(cargs) > 1 else None
        return fincat.functor_category(_expect(target, fincat.FinCategory), _expect(other, fincat.FinCategory))
    if constructor == "under":
        if len(cargs) < 2:
            raise DocumentError("under needs a category and an object")
        c = _expect(target, fincat.FinCategory)
        x = next((o for o in c.objects if name_of(o) == cargs[1]), None)
        if x is None:
            raise DocumentError(f"unknown object {cargs[1]!r}")
        return fibrations.under_category(c, x)[1]
    raise DocumentError(f"unknown constructor {constructor!r}")


BUILDERS = [
    "delta", "boundary", "horn", "spine", "poset", "iso", "F", "G", "E1",
    "nerve", "core", "opposite", "classifying", "embed", "funcat", "under",
]


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _common(p):
    p.add_argument("--trunc", type=int, default=None, help="horizontal / simplicial truncation")
    p.add_argument("--vtrunc", type=int, default=None, help="vertical truncation")
    p.add_argument("--upto", type=int, default=None, help="largest dimension for lifting checks")
    p.add_argument("--max-enum", type=int, default=None, help="enumeration bound (default 10^6 or $SSCAT_MAX_ENUM)")
    p.add_argument("--out", default=None, help="write the output here instead of stdout")


def make_parser():
    parser = argparse.ArgumentParser(prog="sscat", description="Finite categories, simplicial sets and Segal spaces.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="load a document and run its validator")
    p.add_argument("target")
    _common(p)

    p = sub.add_parser("build", help="construct an object and print it as JSON")
    p.add_argument("constructor", choices=BUILDERS)
    p.add_argument("args", nargs="*")
    _common(p)

    p = sub.add_parser("check", help="run a decision procedure")
    p.add_argument("kind", choices=sorted(CHECKS))
    p.add_argument("target", nargs="?", default="-")
    _common(p)

    p = sub.add_parser("compute", help="run a construction")
    p.add_argument("kind", choices=sorted(COMPUTES))
    p.add_argument("target", nargs="?", default="-")
    _common(p)

    p = sub.add_parser("export", help="print an object as canonical JSON or DOT")
    p.add_argument("format", choices=["json", "dot"])
    p.add_argument("target", nargs="?", default="-")
    _common(p)

    p = sub.add_parser("initial", help="initial and final objects of a category")
    p.add_argument("target", nargs="?", default="-")
    _common(p)

    for alias, kind in (("cofibered-check", "cofibered"), ("leftfib-check", "leftfib"), ("cocart-check", "cocart")):
        p = sub.add_parser(alias, help=f"same as: check {kind}")
        p.add_argument("target", nargs="?", default="-")
        p.set_defaults(alias_kind=kind)
        _common(p)
    for alias in ("grothendieck", "colimit", "adjoint"):
        p = sub.add_parser(alias, help=f"same as: compute {alias}")
        p.add_argument("target", nargs="?", default="-")
        p.set_defaults(alias_compute=alias)
        _common(p)
    return parser


def _emit(text, args, stdout):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def run(args, stdin=None, stdout=None):
    stdout = stdout or sys.stdout
    ws = Workspace(args.trunc, args.vtrunc, stdin)
    verb = args.verb
    if getattr(args, "alias_kind", None):
        verb, args.kind = "check", args.alias_kind
    if getattr(args, "alias_compute", None):
        verb, args.kind = "compute", args.alias_compute

    if verb == "validate":
        try:
            obj = ws.resolve(args.target)
        except DocumentError as exc:
            if "failed validation" not in str(exc):
                raise
            _emit(pretty_json(report("validate", False, problems=str(exc))), args, stdout)
            return EXIT_NEGATIVE
        doc = report("validate", True, object=type(obj).__name__, source=ws.provenance[args.target])
        _emit(pretty_json(doc), args, stdout)
        return EXIT_OK
    if verb == "build":
        obj = build_object(ws, args.constructor, args.args, args.trunc, args.vtrunc)
        _emit(pretty_json(to_json(obj)), args, stdout)
        return EXIT_OK
    if verb == "check":
        doc = CHECKS[args.kind](ws.resolve(args.target), args)
        doc["target"] = args.target if args.target != "-" else "stdin"
        _emit(pretty_json(doc), args, stdout)
        return EXIT_OK if doc["verdict"] else EXIT_NEGATIVE
    if verb == "compute":
        doc, verdict = COMPUTES[args.kind](ws.resolve(args.target), args)
        _emit(pretty_json(doc), args, stdout)
        return EXIT_OK if verdict else EXIT_NEGATIVE
    if verb == "export":
        obj = ws.resolve(args.target)
        if args.format == "dot":
            _emit(to_dot(_expect(obj, fincat.FinCategory)), args, stdout)
        else:
            _emit(json.dumps(to_json(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False), args, stdout)
        return EXIT_OK
    if verb == "initial":
        c = _expect(ws.resolve(args.target), fincat.FinCategory)
        ini, fin = colim_adj.initial_objects(c), colim_adj.final_objects(c)
        _emit(pretty_json(report("initial", bool(ini), initial=ini, final=fin)), args, stdout)
        return EXIT_OK if ini else EXIT_NEGATIVE
    raise DocumentError(f"unknown verb {verb!r}")


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        if args.max_enum is not None:
            with max_enumeration(args.max_enum):
                return run(args, stdin, stdout)
        return run(args, stdin, stdout)
    except EnumerationLimitError as exc:
        stderr.write(f"sscat: {exc}\n")
        return EXIT_BOUND
    except UndecidableError as exc:
        stderr.write(f"sscat: undecidable: {exc}\n")
        return EXIT_UNDECIDABLE
    except (DocumentError, OSError) as exc:
        stderr.write(f"sscat: {exc}\n")
        return EXIT_INPUT
    except SSCatError as exc:
        stderr.write(f"sscat: {exc}\n")
        return EXIT_NEGATIVE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
