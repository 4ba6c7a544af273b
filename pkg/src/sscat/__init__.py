"""Finite categories, truncated simplicial sets and bisimplicial sets, with
decision procedures for the Segal, Kan, completeness, fibration, colimit and
adjunction conditions."""

from ._util import (
    EnumerationLimitError,
    SSCatError,
    UndecidableError,
    get_max_enumeration,
    max_enumeration,
    set_max_enumeration,
)
from .fincat import (
    FinCategory,
    Functor,
    NatTrans,
    RelativeCategory,
    SetFunctor,
    are_isomorphic,
    count_functors,
    cyclic_group,
    discrete_category,
    enumerate_functors,
    find_isomorphism,
    free_category,
    functor_category,
    iso_category,
    minimal_relative,
    maximal_relative,
    opposite,
    poset_category,
    poset_from_relation,
    representable,
    validate_category,
    validate_functor,
    yoneda_check,
)
from .simpset import (
    LiftProblem,
    SimpMap,
    TruncSimpSet,
    boundary,
    category_from_segal,
    classify_fibration,
    count_simplicial_maps,
    delta,
    horn,
    is_kan_complex,
    nerve,
    nerve_map,
    pullback,
    segal_check,
    simplicial_maps,
    simplicial_spine,
    solve_lift,
    spine_inclusion,
    validate_simplicial,
)
from .sspace import (
    TruncBiSimpSet,
    classification_diagram,
    classifying_diagram,
    completeness_check,
    composition_witnesses,
    delta_space,
    homotopy_category,
    is_complete_segal_space,
    is_hoequiv,
    iso_arrow_space,
    mapping_space,
    segal_space_check,
    spine,
    spine_space,
)
from .fibrations import (
    grothendieck,
    is_cartesian_fibration,
    is_cocartesian_fibration,
    is_cofibered_in_sets,
    is_left_fibration,
    is_right_fibration,
    under_category,
    under_css,
)
from .colim_adj import (
    adjunction_consistency,
    all_cocones,
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
from .serialize import dumps, from_json, load, loads, to_dot, to_json

__version__ = "0.1.0"
