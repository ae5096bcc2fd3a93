"""Cyclic combinatorial configurations on Z_v: enumeration, counting,
canonical forms and isomorphism testing, with brute-force oracles for
every closed formula."""

from .baseline import (
    affine_image,
    affine_map_between,
    canonical_form,
    contains_coset,
    difference_set,
    enumerate_base_lines,
    is_base_line,
    is_connected,
    orbit_size,
    zero_slice_orbit,
)
from .circulant import (
    CirculantMatrix,
    Weight4Witness,
    characteristic_polynomial,
    exceptional_weight4_witness,
    gram_matrix,
    gram_profile,
    gram_similar,
    incidence_text,
    paq_equivalent,
)
from .configuration import (
    CyclicConfiguration,
    LeviGraph,
    decompose,
    incidence_matrix,
    levi_graph,
    levi_text,
    parse_levi_text,
    validate,
)
from .counting import (
    CountBreakdown,
    FormulaCase,
    contributor_counts,
    count_breakdown,
    count_closed_formula,
    count_fixed_bruteforce,
    count_fixed_closed,
    count_fixed_identity,
    count_orbit_scan,
    count_unit_sum,
    formula_case,
    order2_contributors_closed,
)
from .iso import (
    IsoWitness,
    automorphisms,
    completeness_report,
    exact_isomorphic,
    isomorphic,
    multiplier_equivalent,
    witness_valid,
)
from .residue_ring import (
    CapExceeded,
    big_phi,
    factorization,
    inverse,
    is_ci_order,
    is_unit,
    mult_order,
    multiplier_orbits,
    phi,
    subgroup_cosets,
    unit_group_generators,
    units,
)
from .solving_sets import (
    SolvingSetParams,
    SolvingSetUnavailable,
    class_multiplier,
    class_shift,
    layered_multiplier,
    multiplier_perm,
    solve_iso_pq,
    solving_set,
    solving_set_params,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CirculantMatrix",
    "CountBreakdown",
    "CyclicConfiguration",
    "FormulaCase",
    "IsoWitness",
    "LeviGraph",
    "SolvingSetParams",
    "SolvingSetUnavailable",
    "Weight4Witness",
    "affine_image",
    "affine_map_between",
    "automorphisms",
    "big_phi",
    "canonical_form",
    "characteristic_polynomial",
    "class_multiplier",
    "class_shift",
    "completeness_report",
    "contains_coset",
    "contributor_counts",
    "count_breakdown",
    "count_closed_formula",
    "count_fixed_bruteforce",
    "count_fixed_closed",
    "count_fixed_identity",
    "count_orbit_scan",
    "count_unit_sum",
    "decompose",
    "difference_set",
    "enumerate_base_lines",
    "exact_isomorphic",
    "exceptional_weight4_witness",
    "factorization",
    "formula_case",
    "gram_matrix",
    "gram_profile",
    "gram_similar",
    "incidence_matrix",
    "incidence_text",
    "inverse",
    "is_base_line",
    "is_ci_order",
    "is_connected",
    "is_unit",
    "isomorphic",
    "layered_multiplier",
    "levi_graph",
    "levi_text",
    "mult_order",
    "multiplier_equivalent",
    "multiplier_orbits",
    "multiplier_perm",
    "orbit_size",
    "paq_equivalent",
    "parse_levi_text",
    "phi",
    "solve_iso_pq",
    "solving_set",
    "solving_set_params",
    "subgroup_cosets",
    "unit_group_generators",
    "units",
    "validate",
    "witness_valid",
    "zero_slice_orbit",
]
