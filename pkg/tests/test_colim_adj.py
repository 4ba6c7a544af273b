import pytest
from hypothesis import given, settings, strategies as st

from sscat.colim_adj import (
    Cocone,
    adjunction_consistency,
    all_cocones,
    certificates_isomorphic,
    cocone_category,
    colimit,
    colimit_oracle,
    collage,
    comma_category,
    delta_adjoint_check,
    final_objects,
    initial_objects,
    left_adjoint_via_comma,
    limit,
    right_adjoint_via_comma,
)
from sscat.fincat import (
    cyclic_group,
    discrete_category,
    empty_category,
    identity_functor,
    iso_category,
    opposite,
    poset_category,
    validate_category,
)
from sscat.fixtures import (
    boolean_lattice,
    constant_monotone_map,
    galois_connection,
    parallel_arrows,
    pushout_diagram,
    span_category,
)
from sscat.generators import random_category, random_monotone_map, rng_for

from oracles import all_cocones_brute, poset_has_right_adjoint


def test_initial_and_final_objects():
    assert initial_objects(boolean_lattice()) == ["0"]
    assert final_objects(boolean_lattice()) == ["ab"]
    assert initial_objects(parallel_arrows()) == []
    assert final_objects(span_category()) == []
    assert initial_objects(cyclic_group(2)) == []
    # every object of I(2) is initial, all uniquely isomorphic
    assert initial_objects(iso_category(2)) == [0, 1, 2]


def test_pushout_and_its_cocones():
    F = pushout_diagram()
    c = colimit(F)
    assert c.vertex == "ab"
    assert c.legs == {"l": ("a", "ab"), "m": ("0", "ab"), "r": ("b", "ab")}
    assert len(all_cocones(F)) == len(all_cocones_brute(F)) == 1
    assert colimit_oracle(F, c)
    assert validate_category(cocone_category(F)).ok
    assert limit(F).vertex == "0"


def test_non_colimit_rejected_by_oracle():
    F = pushout_diagram()
    bogus = Cocone(F, "ab", {"l": ("a", "ab"), "m": ("0", "ab"), "r": ("a", "ab")})
    assert not colimit_oracle(F, bogus)


def test_galois_connection_certificate():
    F = galois_connection()
    res = left_adjoint_via_comma(F)
    assert res.ok
    assert res.adjoint.ob_map == {0: 0, 1: 2}
    cert = res.certificate
    assert cert.ok
    assert cert.counit == {0: (0, 0), 1: (1, 1)}
    for (c, d), table in cert.hom_bijections.items():
        assert len(table) == len(F.codomain.hom(F.ob_map[c], d))
    assert right_adjoint_via_comma(F).ok


def test_constant_map_has_no_right_adjoint():
    F = constant_monotone_map()
    res = left_adjoint_via_comma(F)
    assert not res.ok and res.failing == 0
    r = adjunction_consistency(F)
    assert r.cartesian is False and r.comma is False and r.agree


def test_collage_shape():
    total, proj = collage(galois_connection())
    assert (len(total.objects), len(total.morphisms)) == (5, 13)
    assert validate_category(total).ok


def test_comma_category_final_object():
    F = galois_connection()
    cc = comma_category(F, 1)
    assert validate_category(cc).ok
    assert len(final_objects(cc)) == 1


def test_tie_break_gives_isomorphic_certificates():
    G = identity_functor(iso_category(1))
    a = left_adjoint_via_comma(G)
    b = left_adjoint_via_comma(G, tie_break=lambda objs: max(objs, key=repr))
    assert a.ok and b.ok
    assert certificates_isomorphic(a.certificate, b.certificate)


@pytest.mark.parametrize(
    "w,i,colim,lim",
    [
        (boolean_lattice, span_category, True, True),
        (span_category, lambda: discrete_category([0, 1]), False, True),
        (span_category, empty_category, True, False),
        (parallel_arrows, parallel_arrows, False, False),
        (lambda: cyclic_group(2), span_category, True, True),
        (lambda: cyclic_group(2), parallel_arrows, False, False),
    ],
)
def test_diagonal_adjoints_match_enumeration(w, i, colim, lim):
    r = delta_adjoint_check(w(), i())
    assert r.agree
    assert r.colimits_by_adjoint == r.colimits_by_enumeration == colim
    assert r.limits_by_adjoint == r.limits_by_enumeration == lim


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_comma_and_collage_and_poset_oracle_agree(seed):
    F = random_monotone_map(rng_for(seed), 5)
    res = left_adjoint_via_comma(F)
    assert res.ok == poset_has_right_adjoint(F)
    r = adjunction_consistency(F)
    assert r.agree


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_initial_objects_are_uniquely_isomorphic(seed):
    c = random_category(rng_for(seed), 4, 12)
    ini = initial_objects(c)
    for x in ini:
        for y in c.objects:
            assert len(c.hom(x, y)) == 1
    assert final_objects(c) == initial_objects(opposite(c))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_delta_adjoint_check_on_random_targets(seed):
    rng = rng_for(seed)
    w = random_category(rng, 3, 6)
    i = rng.choice([empty_category(), discrete_category([0, 1]), span_category(), poset_category(1)])
    assert delta_adjoint_check(w, i).agree
