import pytest
from hypothesis import given, settings, strategies as st

from sscat import SSCatError, UndecidableError
from sscat.fibrations import (
    arrow_category_target_projection,
    cofibered_yoneda_check,
    fiber_decomposition_over_F1,
    fibers_discrete,
    grothendieck,
    is_cartesian_fibration,
    is_cocartesian_fibration,
    is_cocartesian_morphism,
    is_cofibered_in_sets,
    is_left_fibration,
    is_right_fibration,
    left_fibration_report,
    over_category,
    under_category,
    under_css,
)
from sscat.fincat import (
    Functor,
    SetFunctor,
    are_isomorphic,
    iso_category,
    opposite,
    poset_category,
    representable,
    validate_category,
    validate_functor,
)
from sscat.colim_adj import collage
from sscat.fixtures import boolean_lattice, constant_monotone_map
from sscat.generators import random_category, random_projection, random_set_functor, rng_for
from sscat.simpset import nerve, nerve_map
from sscat.sspace import embed_vertical

from conftest import classifying


def two_to_one():
    """Two elements over 0 both sent to the single element over 1."""
    return SetFunctor(
        poset_category(1), {0: ["a", "b"], 1: ["c"]},
        {(0, 0): {"a": "a", "b": "b"}, (1, 1): {"c": "c"}, (0, 1): {"a": "c", "b": "c"}},
    )


def test_arrow_target_projection_verdicts():
    arr, p = arrow_category_target_projection()
    assert (len(arr.objects), len(arr.morphisms)) == (3, 6)
    assert not is_cofibered_in_sets(p).verdict
    assert not is_left_fibration(nerve_map(p, 2))
    assert not is_right_fibration(nerve_map(p, 2))
    assert is_cocartesian_fibration(p).ok
    assert not fibers_discrete(p)


def test_cofibered_failures_are_witnessed():
    _, p = arrow_category_target_projection()
    r = is_cofibered_in_sets(p)
    for f, x, n in r.failures:
        assert n != 1
        assert p.ob_map[x] == p.codomain.src[f]


def test_grothendieck_sizes():
    total, proj = grothendieck(representable(boolean_lattice(), "0"))
    assert (len(total.objects), len(total.morphisms)) == (4, 9)
    assert validate_category(total).ok and validate_functor(proj) == []
    total, proj = grothendieck(two_to_one())
    assert (len(total.objects), len(total.morphisms)) == (3, 5)


def test_under_and_over_categories():
    u, _ = under_category(boolean_lattice(), "a")
    o, _ = over_category(boolean_lattice(), "a")
    assert (len(u.objects), len(u.morphisms)) == (2, 3)
    assert (len(o.objects), len(o.morphisms)) == (2, 3)
    assert are_isomorphic(o, opposite(under_category(opposite(boolean_lattice()), "a")[0]))
    with pytest.raises(SSCatError):
        under_category(boolean_lattice(), "zzz")


def test_cofibered_yoneda():
    _, q = grothendieck(representable(boolean_lattice(), "0"))
    for x in ("0", "a", "b", "ab"):
        assert cofibered_yoneda_check(q, x).size == 1
    _, q = grothendieck(two_to_one())
    assert cofibered_yoneda_check(q, 0).size == 2


def test_fiber_decomposition_transport():
    _, q = grothendieck(two_to_one())
    d = fiber_decomposition_over_F1(nerve_map(q, 2))
    assert d.transport == {(0, "a"): (1, "c"), (0, "b"): (1, "c")}
    with pytest.raises(SSCatError):
        fiber_decomposition_over_F1(nerve_map(grothendieck(representable(boolean_lattice(), "0"))[1], 2))


def test_left_fibration_report_counts():
    _, q = grothendieck(two_to_one())
    r = left_fibration_report(nerve_map(q, 2))
    assert r.ok
    assert r.counts[1] == (5, 5)


def test_under_css_counts():
    w = embed_vertical(nerve(poset_category(2), 3), 1)
    u = under_css(w, 0)
    assert [u.counts()[(n, 0)] for n in range(3)] == [3, 6, 10]
    w = embed_vertical(nerve(iso_category(1), 3), 1)
    assert [under_css(w, 0).counts()[(n, 0)] for n in range(3)] == [2, 4, 8]


def test_under_css_refuses_groupoid_regime():
    with pytest.raises(UndecidableError):
        under_css(classifying("Z2"), classifying("Z2").objects()[0])


def test_cocartesian_morphisms_of_grothendieck():
    total, proj = grothendieck(two_to_one())
    for m in total.morphisms:
        assert is_cocartesian_morphism(proj, m)


def test_cartesian_verdicts_on_collapse_and_collage():
    # [2] -> [1] collapsing 1 and 2 is both; 0 -> 2 is Cartesian since 1 -> 2 lies over an identity
    base, total = poset_category(1), poset_category(2)
    p = Functor(total, base, {0: 0, 1: 1, 2: 1}, {(i, j): (min(i, 1), min(j, 1)) for i, j in total.morphisms})
    assert is_cocartesian_fibration(p).ok
    assert is_cartesian_fibration(p).ok
    # the collage of a functor without a right adjoint is not Cartesian
    _, q = collage(constant_monotone_map())
    assert is_cocartesian_fibration(q).ok
    assert not is_cartesian_fibration(q).ok


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_grothendieck_projection_is_left_fibration(seed):
    rng = rng_for(seed)
    C = random_category(rng, 3, 8)
    F = random_set_functor(rng, C, 2)
    total, proj = grothendieck(F)
    assert is_cofibered_in_sets(proj).verdict
    assert is_left_fibration(nerve_map(proj, 3))
    assert fibers_discrete(proj)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_under_category_is_grothendieck_of_representable(seed):
    c = random_category(rng_for(seed), 3, 8)
    for x in c.objects:
        ut, up = under_category(c, x)
        gt, gp = grothendieck(representable(c, x))
        assert is_cofibered_in_sets(up).verdict
        assert are_isomorphic(ut, gt)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_right_fibration_is_left_fibration_of_opposite(seed):
    p = random_projection(rng_for(seed))
    q = Functor(opposite(p.domain), opposite(p.codomain), p.ob_map, p.mor_map)
    assert is_right_fibration(nerve_map(p, 2)) == is_left_fibration(nerve_map(q, 2))
    assert is_right_fibration(nerve_map(q, 2)) == is_cofibered_in_sets(p).verdict
