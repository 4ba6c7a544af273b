import json

import pytest
from hypothesis import given, settings, strategies as st

from sscat.fincat import are_isomorphic, validate_category
from sscat.fixtures import GOLDEN_NAMES, build_fixture, compute_golden_hashes, stored_golden_hashes
from sscat.generators import random_category, random_set_functor, rng_for
from sscat.serialize import DocumentError, dumps, load, loads, to_dot
from sscat.simpset import nerve


@pytest.mark.parametrize("name", GOLDEN_NAMES)
def test_fixture_round_trip(name):
    text = dumps(build_fixture(name))
    assert dumps(loads(text)) == text


def test_golden_hashes_are_stable():
    assert compute_golden_hashes() == stored_golden_hashes()


def test_loaded_category_is_isomorphic():
    c = build_fixture("B2")
    d = loads(dumps(c))
    assert validate_category(d).ok and are_isomorphic(c, d)


def test_error_position_is_reported():
    with pytest.raises(DocumentError) as info:
        loads('{\n  "objects": [1, 2,,]\n}')
    assert (info.value.line, info.value.column) == (2, 20)


@pytest.mark.parametrize(
    "text,message",
    [
        ("[1, 2]", "top-level"),
        ('{"foo": 1}', "cannot tell"),
        ('{"kind": "widget"}', "unknown kind"),
        ('{"kind": "category", "objects": []}', "missing"),
        ('{"objects": [0], "morphisms": [{"id": 0}], "identities": {}, "comp": []}', "id, src and tgt"),
        ('{"truncation": 0, "levels": [[0]], "faces": {"x": {}}, "degens": {}}', "operator key"),
    ],
)
def test_malformed_documents(text, message):
    with pytest.raises(DocumentError, match=message):
        loads(text)


def test_sub_documents_by_path(tmp_path):
    F = build_fixture("galois")
    doc = json.loads(dumps(F))
    (tmp_path / "dom.json").write_text(json.dumps(doc["domain"]))
    (tmp_path / "cod.json").write_text(json.dumps(doc["codomain"]))
    doc["domain"], doc["codomain"] = "dom.json", "cod.json"
    (tmp_path / "f.json").write_text(json.dumps(doc))
    assert dumps(load(tmp_path / "f.json")) == dumps(F)


def test_dot_lists_non_identity_arrows():
    dot = to_dot(build_fixture("span"))
    assert dot.count("->") == 2


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_random_round_trips(seed):
    rng = rng_for(seed)
    c = random_category(rng, 4, 10)
    for obj in (c, nerve(c, 2), random_set_functor(rng, c, 2)):
        if obj is None:
            continue
        text = dumps(obj)
        assert dumps(loads(text)) == text
