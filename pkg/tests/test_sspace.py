import pytest
from hypothesis import given, settings, strategies as st

from sscat import SSCatError
from sscat.fincat import (
    are_isomorphic,
    cyclic_group,
    iso_category,
    maximal_relative,
    minimal_relative,
    poset_category,
    validate_category,
)
from sscat.generators import random_poset, rng_for
from sscat.simpset import nerve
from sscat.sspace import (
    classification_diagram,
    classifying_diagram,
    completeness_check,
    composition_witnesses,
    delta_space,
    embed_horizontal,
    embed_vertical,
    homotopy_category,
    hoeqchoice_check,
    hoequiv_space,
    is_complete_segal_space,
    is_hoequiv,
    iso_arrow_space,
    mapping_space,
    segal_space_check,
    spine,
    spine_space,
    validate_bisimplicial,
    vertical_regime,
)

from conftest import classifying


def _row_counts(t, l=0):
    return [t.counts()[(n, l)] for n in range(t.htrunc + 1)]


FROZEN = {
    "F1": (lambda: delta_space(1, 3, 1), [2, 3, 4, 5], "discrete", True),
    "F2": (lambda: delta_space(2, 3, 1), [3, 6, 10, 15], "discrete", True),
    "G2": (lambda: spine_space(2, 3, 1), [3, 5, 7, 9], "discrete", False),
    "E1": (lambda: iso_arrow_space(3, 1), [2, 4, 8, 16], "discrete", True),
    "cl_poset1": (lambda: classifying("poset1"), [2, 3, 4, 5], "discrete", True),
    "cl_Z2": (lambda: classifying("Z2"), [1, 2, 4, 8], "groupoid", True),
    "cl_I1": (lambda: classifying("I1"), [2, 4, 8, 16], "groupoid", True),
}


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_bisimplicial(name):
    make, row0, regime, segal = FROZEN[name]
    t = make()
    assert validate_bisimplicial(t) == []
    assert _row_counts(t) == row0
    assert vertical_regime(t) == regime
    assert segal_space_check(t).ok == segal


def test_classifying_vertical_counts():
    t = classifying("Z2")
    assert [t.counts()[(1, l)] for l in range(3)] == [2, 8, 32]
    t = classifying("I1")
    assert [t.counts()[(3, l)] for l in range(3)] == [16, 256, 4096]


def test_spine_map_is_inclusion():
    f = spine(2, 3, 1)
    assert f.domain.counts()[(2, 0)] == 7 and f.codomain.counts()[(2, 0)] == 10


def test_iso_arrow_equivalences():
    e = iso_arrow_space(3, 1)
    assert all(is_hoequiv(e, f).by_inverses for f in e.levels[(1, 0)])
    d = hoequiv_space(e)
    assert len(d.equivalences) == 4
    r = completeness_check(e)
    assert r.ok is False and r.counts[0] == (2, 4)


def test_delta_space_only_degenerate_equivalences():
    f = delta_space(1, 3, 1)
    verdicts = {x: is_hoequiv(f, x).by_inverses for x in f.levels[(1, 0)]}
    assert verdicts == {(0, 0): True, (0, 1): False, (1, 1): True}
    assert is_complete_segal_space(f)


def test_hoeqchoice_report():
    r = hoeqchoice_check(iso_arrow_space(3, 1))
    assert r.choice_counts == [4, 4] and r.image_in_hoequiv and r.surjective_on_pi0


def test_composition_orientation():
    t = delta_space(2, 3, 1)
    r = composition_witnesses(t, (0, 1), (1, 2))
    assert r.composite == (0, 2)
    assert r.witnesses == [(0, 1, 2)]
    with pytest.raises(SSCatError):
        composition_witnesses(t, (1, 2), (0, 1))


def test_undecidable_regime():
    t = embed_horizontal(nerve(poset_category(1), 2), 3)
    assert vertical_regime(t) == "undecidable"
    r = completeness_check(t)
    assert r.ok is None and r.strategy == "undecidable"


def test_groupoid_completeness_is_equivalence_not_bijection():
    r = completeness_check(classifying("Z2"))
    assert r.strategy == "groupoid" and r.ok is True
    assert r.counts[0] == (1, 2)


def test_homotopy_category_requires_segal():
    with pytest.raises(SSCatError):
        homotopy_category(spine_space(2, 3, 1))


@pytest.mark.parametrize("name", ["poset0", "poset1", "poset2", "I1", "B2", "span", "parallel", "Z2", "idem", "discrete2"])
def test_homotopy_category_recovers_category(name, fixtures):
    ho = homotopy_category(classifying(name))
    assert validate_category(ho).ok
    assert are_isomorphic(ho, fixtures[name])


def test_homotopy_category_of_nerve(fixtures):
    for name in ("B2", "span", "idem"):
        ho = homotopy_category(embed_vertical(nerve(fixtures[name], 3), 1))
        assert are_isomorphic(ho, fixtures[name])


def test_vertical_regime_depends_on_weak_equivalences():
    # with every morphism weak the vertical rows are nerves of non-groupoid posets
    t = classification_diagram(maximal_relative(poset_category(1)), 3, 2)
    assert vertical_regime(t) == "undecidable"
    t = classification_diagram(minimal_relative(poset_category(1)), 3, 2)
    assert vertical_regime(t) == "discrete"


def test_mapping_space_sizes():
    t = classifying("I1")
    ms = mapping_space(t, t.objects()[0], t.objects()[1])
    assert ms.counts()[0] == 1


def test_segal_check_needs_two_levels():
    with pytest.raises(SSCatError):
        segal_space_check(delta_space(1, 1, 1))


def test_equivalences_computed_even_when_regime_undecidable():
    # the combinatorial data exists; only the completeness verdict is withheld
    t = embed_horizontal(nerve(poset_category(1), 2), 3)
    assert len(hoequiv_space(t).equivalences) == len(t.objects())
    assert completeness_check(t).ok is None


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_classifying_diagrams_of_posets_are_complete(seed):
    c = random_poset(rng_for(seed), 3)
    w = classifying_diagram(c)
    assert validate_bisimplicial(w) == []
    assert vertical_regime(w) == "discrete"
    assert is_complete_segal_space(w)
    assert are_isomorphic(homotopy_category(w), c)


@settings(max_examples=5, deadline=None)
@given(st.integers(1, 2))
def test_cyclic_groups_give_groupoid_regime(n):
    w = classifying_diagram(cyclic_group(n))
    assert vertical_regime(w) in ("discrete", "groupoid")
    assert completeness_check(w).ok is True


def test_iso_category_nerve_not_complete_but_classifying_is():
    e = embed_vertical(nerve(iso_category(1), 3), 1)
    assert completeness_check(e).ok is False
    assert completeness_check(classifying("I1")).ok is True
