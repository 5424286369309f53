"""Exact workbench for finite-dimensional algebras given by rational
structure constants: multiplication tables, scaling limits, multilinear
identities, conservative second multiplications and one-dimensional
central extensions, all over exact arithmetic."""

from .linalg import (
    Matrix,
    RankSink,
    RowEchelonBasis,
    format_rational,
    nullspace,
    parse_rational,
    rref,
    solve_particular,
)
from .fastrank import certified_nullspace, certified_rank, certified_rowspace
from .algebras import (
    Algebra,
    BilinearMap,
    Subspace,
    bracket,
    change_of_basis,
    derivation_algebra,
    is_derivation,
    is_ideal,
    is_subalgebra,
    left_mul_operator,
    multiply,
    restrict,
)
from .catalog import (
    UnknownAlgebraError,
    catalog,
    catalog_names,
    catalog_summary,
    sab_adapted,
    sab_bar,
    sab_sub,
)
from .contraction import (
    ContractionCheck,
    ScaledBasis,
    compare_tables,
    contraction_chain_check,
    iw_contract,
    laurent_constants,
)
from .monomials import (
    MAX_DEGREE,
    BracketShape,
    IdentityCombination,
    MultilinearMonomial,
    enumerate_monomials,
    left_comb,
    monomial_count,
    monomial_index,
    right_comb,
    shapes,
    st_identity,
    tail_fixed_alternating,
)
from .identities import (
    combination_in_span,
    evaluate_monomial,
    first_violation,
    identity_space,
    satisfies_identity,
    shape_identity_space,
    spaces_equal,
)
from .conservative import (
    ConservativeWitness,
    commutator_expansion,
    conservative_solve,
    first_terminal_violation,
    is_conservative,
    is_terminal,
    terminal_identity,
    terminal_witness,
    verify_witness,
    witness_defect,
)
from .cohomology import (
    CohomologyReport,
    coborder_space,
    cocycle_space,
    cohomology,
    extension_algebra,
    terminal_cocycle_space,
    terminal_cohomology,
)
from .formats import (
    FormatError,
    algebra_from_dict,
    algebra_to_dict,
    identity_from_dict,
    identity_to_dict,
    load_algebra,
    load_identity,
    product_rows,
    save_algebra,
    save_identity,
)
from .claims import (
    ClaimResult,
    UnknownIdentityError,
    claim_scopes,
    identity_names,
    load_claims,
    named_identity,
    resolve_identity,
    run_claim,
    run_claims,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "BilinearMap",
    "BracketShape",
    "ClaimResult",
    "CohomologyReport",
    "ConservativeWitness",
    "ContractionCheck",
    "FormatError",
    "IdentityCombination",
    "MAX_DEGREE",
    "Matrix",
    "MultilinearMonomial",
    "RankSink",
    "RowEchelonBasis",
    "ScaledBasis",
    "Subspace",
    "UnknownAlgebraError",
    "UnknownIdentityError",
    "algebra_from_dict",
    "algebra_to_dict",
    "bracket",
    "catalog",
    "catalog_names",
    "catalog_summary",
    "certified_nullspace",
    "certified_rank",
    "certified_rowspace",
    "change_of_basis",
    "claim_scopes",
    "coborder_space",
    "cocycle_space",
    "cohomology",
    "combination_in_span",
    "commutator_expansion",
    "compare_tables",
    "conservative_solve",
    "contraction_chain_check",
    "derivation_algebra",
    "enumerate_monomials",
    "evaluate_monomial",
    "extension_algebra",
    "first_terminal_violation",
    "first_violation",
    "format_rational",
    "identity_from_dict",
    "identity_names",
    "identity_space",
    "identity_to_dict",
    "is_conservative",
    "is_derivation",
    "is_ideal",
    "is_subalgebra",
    "is_terminal",
    "iw_contract",
    "laurent_constants",
    "left_comb",
    "left_mul_operator",
    "load_algebra",
    "load_claims",
    "load_identity",
    "monomial_count",
    "monomial_index",
    "multiply",
    "named_identity",
    "nullspace",
    "parse_rational",
    "product_rows",
    "resolve_identity",
    "restrict",
    "rref",
    "right_comb",
    "run_claim",
    "run_claims",
    "sab_adapted",
    "sab_bar",
    "sab_sub",
    "satisfies_identity",
    "save_algebra",
    "save_identity",
    "shape_identity_space",
    "shapes",
    "solve_particular",
    "spaces_equal",
    "st_identity",
    "tail_fixed_alternating",
    "terminal_cocycle_space",
    "terminal_cohomology",
    "terminal_identity",
    "terminal_witness",
    "verify_witness",
    "witness_defect",
]
