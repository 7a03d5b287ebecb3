"""Exact-rational toolkit for minimal fillings in finite normed chain
complexes: certified l1/linf linear programs, optimal filling constants,
nerves of covers with a marked subspace, and glueing constructions."""

from .errors import (
    InputError,
    InternalInvariantError,
    NonComplexError,
    NotACycleError,
)
from .exactlp import (
    FillResult,
    RegressionResult,
    SparseMat,
    SparseVec,
    operator_norm,
    rat,
    rational_from_str,
    rational_to_str,
    solve_l1_regression,
    solve_linf_regression,
    solve_min_l1,
    solve_min_linf,
)
from .normcx import (
    CochainMap,
    ConstantEstimate,
    NormedComplex,
    betti,
    bounded_product,
    cylinder_inclusion,
    dual_complex,
    fill_norm,
    homology_seminorm,
    inherited_ubc_constant,
    prism,
    simplicial_chain_complex,
    ubc_constant,
    uubc_constant,
    validate_cochain_map,
    validate_complex,
)
from .groupcx import (
    ExperimentConfig,
    ExperimentRecord,
    FiniteGroupData,
    GroupAction,
    InvariantCochains,
    ShapiroMaps,
    alternating_projection,
    ball,
    bar_basis,
    bar_complex,
    cyclic_group,
    f2_experiment,
    finite_group_bounded_cochains,
    invariant_cochain_complex,
    left_translation_action,
    shapiro_maps,
    subgroup_data,
    symmetric_group,
    trivial_group,
)
from .nervekit import (
    CoverData,
    CoverReport,
    NervePair,
    SimplicialComplex,
    check_relative_cover,
    collar_multiplicity_bound,
    components,
    cover_data,
    is_connected,
    nerve_pair,
)
from .gluecalc import (
    GlueingInstance,
    GluePiece,
    GlueReport,
    glue_cycle,
    glue_piece,
    glue_upper_bound,
    glueing_instance,
    interior_bound,
)
from . import formats

__version__ = "0.1.0"

__all__ = [
    "CochainMap", "ConstantEstimate", "CoverData", "CoverReport",
    "ExperimentConfig", "ExperimentRecord", "FillResult", "FiniteGroupData",
    "GlueReport", "GlueingInstance", "GluePiece", "GroupAction",
    "InputError", "InternalInvariantError", "InvariantCochains",
    "NervePair", "NonComplexError", "NormedComplex", "NotACycleError",
    "RegressionResult", "ShapiroMaps", "SimplicialComplex", "SparseMat",
    "SparseVec", "alternating_projection", "ball", "bar_basis",
    "bar_complex", "betti", "bounded_product", "check_relative_cover",
    "collar_multiplicity_bound", "components", "cover_data",
    "cyclic_group", "cylinder_inclusion", "dual_complex", "f2_experiment",
    "fill_norm", "finite_group_bounded_cochains", "formats", "glue_cycle",
    "glue_piece", "glue_upper_bound", "glueing_instance",
    "homology_seminorm", "inherited_ubc_constant", "interior_bound",
    "invariant_cochain_complex", "is_connected", "left_translation_action",
    "nerve_pair", "operator_norm", "prism", "rat", "rational_from_str",
    "rational_to_str", "shapiro_maps", "simplicial_chain_complex",
    "solve_l1_regression", "solve_linf_regression", "solve_min_l1",
    "solve_min_linf", "subgroup_data", "symmetric_group", "trivial_group",
    "ubc_constant", "uubc_constant", "validate_cochain_map",
    "validate_complex",
]
