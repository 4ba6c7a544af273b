import pytest
from hypothesis import given, settings, strategies as st

from sscat import EnumerationLimitError, SSCatError, max_enumeration
from sscat.fincat import (
    FinCategory,
    Functor,
    are_isomorphic,
    compose_functors,
    constant_set_functor,
    core,
    count_functors,
    cyclic_group,
    discrete_category,
    empty_category,
    enumerate_nattrans,
    find_isomorphism,
    free_category,
    full_subcategory,
    functor_category,
    identity_functor,
    iso_category,
    maximal_relative,
    minimal_relative,
    opposite,
    poset_category,
    poset_from_relation,
    product_category,
    representable,
    validate_category,
    validate_functor,
    validate_relative,
    validate_set_functor,
    yoneda_check,
)
from sscat.fixtures import (
    boolean_lattice,
    idempotent_category,
    parallel_arrows,
    span_category,
    wrong_target_category,
)
from sscat.generators import random_category, random_functor, random_set_functor, rng_for

from oracles import functors_brute

FUNCTOR_COUNTS = [
    (lambda: poset_category(1), lambda: poset_category(2), 6),
    (lambda: cyclic_group(2), lambda: cyclic_group(2), 2),
    (lambda: cyclic_group(2), lambda: cyclic_group(3), 1),
    (lambda: cyclic_group(3), lambda: cyclic_group(3), 3),
    (parallel_arrows, boolean_lattice, 9),
    (span_category, lambda: poset_category(1), 5),
    (idempotent_category, idempotent_category, 2),
    (lambda: iso_category(1), lambda: poset_category(1), 2),
    (lambda: poset_category(1), lambda: iso_category(1), 4),
    (boolean_lattice, lambda: poset_category(2), 20),
]


@pytest.mark.parametrize("make_c,make_d,expected", FUNCTOR_COUNTS)
def test_functor_counts_frozen(make_c, make_d, expected):
    C, D = make_c(), make_d()
    assert count_functors(C, D) == expected
    assert functors_brute(C, D) == expected


def test_fixtures_validate(fixtures):
    for name, c in fixtures.items():
        assert validate_category(c).ok, name


def test_wrong_target_reported_once():
    r = validate_category(wrong_target_category())
    assert not r.ok
    assert r.kinds().count("comp_src_tgt") == 1
    assert r.violations[0] == ("comp_src_tgt", ((0, 1), (0, 0)))


def test_structural_errors():
    c = poset_category(1)
    missing = dict(c.comp)
    del missing[((1, 1), (0, 1))]
    r = validate_category(FinCategory(c.objects, c.morphisms, c.src, c.tgt, c.ident, missing))
    assert ("comp_undefined", ((1, 1), (0, 1))) in r.structural

    r = validate_category(FinCategory(c.objects, c.morphisms, c.src, c.tgt, {0: (0, 0)}, c.comp))
    assert ("missing_identity", (1,)) in r.structural


def test_associativity_violation_detected():
    # a monoid table {1, a, b} with ab = a, ba = b, aa = b is not associative
    m = ["1", "a", "b"]
    table = {"1": {"1": "1", "a": "a", "b": "b"}, "a": {"1": "a", "a": "b", "b": "a"}, "b": {"1": "b", "a": "b", "b": "b"}}
    comp = {(g, f): table[g][f] for g in m for f in m}
    c = FinCategory(["*"], m, {x: "*" for x in m}, {x: "*" for x in m}, {"*": "1"}, comp)
    r = validate_category(c)
    assert "associativity" in r.kinds()
    for kind, (h, g, f) in r.violations:
        if kind == "associativity":
            assert comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]


def test_constructor_sizes():
    assert len(poset_category(3).morphisms) == 10
    assert len(iso_category(2).morphisms) == 9
    assert len(free_category([0, 1, 2], {"a": (0, 1), "b": (1, 2), "c": (0, 2)}).morphisms) == 7
    assert len(core(boolean_lattice()).morphisms) == 4
    assert len(product_category(poset_category(1), cyclic_group(2)).morphisms) == 6
    assert len(full_subcategory(boolean_lattice(), ["a", "ab"]).morphisms) == 3
    assert validate_category(empty_category()).ok


def test_cyclic_free_quiver_rejected():
    with pytest.raises(SSCatError):
        free_category([0], {"loop": (0, 0)})


def test_functor_category_sizes():
    fc = functor_category(poset_category(1), poset_category(1))
    assert (len(fc.objects), len(fc.morphisms)) == (3, 6)
    assert validate_category(fc).ok
    fc = functor_category(cyclic_group(2), cyclic_group(3))
    assert (len(fc.objects), len(fc.morphisms)) == (1, 3)


def test_functor_category_respects_bound():
    with max_enumeration(10):
        with pytest.raises(EnumerationLimitError):
            functor_category(poset_category(3), poset_category(3))


def test_nattrans_between_constant_functors():
    C, D = poset_category(1), poset_category(2)
    consts = {}
    for F in functor_category(C, D).functors.values():
        if len(set(F.ob_map.values())) == 1:
            consts[next(iter(F.ob_map.values()))] = F
    assert len(list(enumerate_nattrans(consts[0], consts[2]))) == 1
    assert len(list(enumerate_nattrans(consts[2], consts[0]))) == 0


def test_relative_categories(fixtures):
    for name, c in fixtures.items():
        assert validate_relative(minimal_relative(c)) == [], name
        assert validate_relative(maximal_relative(c)) == [], name
    assert len(minimal_relative(boolean_lattice()).weak) == 4


def test_isomorphism_search():
    assert are_isomorphic(opposite(poset_category(2)), poset_category(2))
    assert not are_isomorphic(span_category(), opposite(span_category()))
    assert find_isomorphism(cyclic_group(2), iso_category(1)) is None


def test_yoneda_on_fixtures(fixtures):
    rng = rng_for(7)
    for name, c in fixtures.items():
        if not c.objects:
            continue
        F = random_set_functor(rng, c, 2)
        for x in c.objects:
            w = yoneda_check(c, x, F)
            assert w.size == len(F.ob_assign[x])


def test_representable_and_constant_are_functors():
    c = boolean_lattice()
    assert validate_set_functor(representable(c, "a")) == []
    assert validate_set_functor(constant_set_functor(c, ["p", "q"])) == []
    assert sorted(representable(c, "a").ob_assign["ab"]) == [("a", "ab")]


def test_poset_from_relation_closes_transitively():
    c = poset_from_relation([0, 1, 2], [(0, 1), (1, 2)])
    assert c.hom(0, 2)
    assert not c.hom(2, 0)


# ---------------------------------------------------------------------------
# properties


categories = st.integers(0, 10**6).map(lambda s: random_category(rng_for(s), 4, 12))


@settings(max_examples=40, deadline=None)
@given(categories)
def test_random_categories_validate(c):
    assert validate_category(c).ok
    assert validate_category(opposite(c)).ok
    assert validate_category(core(c)).ok


@settings(max_examples=40, deadline=None)
@given(categories)
def test_opposite_is_an_involution(c):
    assert opposite(opposite(c)) == c


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_functors_compose_and_count(seed):
    rng = rng_for(seed)
    C, D, E = (random_category(rng, 3, 6) for _ in range(3))
    F, G = random_functor(rng, C, D), random_functor(rng, D, E)
    if F is None or G is None:
        return
    assert validate_functor(compose_functors(G, F)) == []
    assert compose_functors(identity_functor(D), F) == F
    assert count_functors(C, D) == functors_brute(C, D)


@settings(max_examples=30, deadline=None)
@given(categories)
def test_identity_functor_is_isomorphism(c):
    assert are_isomorphic(c, c)
    F = identity_functor(c)
    assert isinstance(F, Functor) and validate_functor(F) == []


def test_discrete_has_only_identities():
    c = discrete_category(["x", "y", "z"])
    assert all(c.is_identity(m) for m in c.morphisms)
