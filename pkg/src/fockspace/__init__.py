"""Exact combinatorics of the level-1 Fock space on partitions."""

from .partitions import (
    Box,
    Partition,
    addable_boxes,
    add_box,
    canonical_residue,
    check_modulus,
    content,
    m_count,
    n_value,
    p_core,
    p_core_beta,
    p_weight,
    partitions_of,
    partitions_up_to,
    removable_boxes,
    removable_rim_hooks,
    remove_box,
    residue,
    residue_window,
)
from .fock import (
    FockVector,
    SparseMatrix,
    Weight,
    apply_e,
    apply_f,
    apply_h,
    cartan_entry,
    op_matrix,
    weight,
)
from .casimir import casimir_scalar, x_eigenvalue, y_eigenvalue
from .crystal import (
    CrystalGraph,
    Signature,
    cogood_box,
    crystal_graph,
    e_tilde,
    epsilon,
    f_tilde,
    good_box,
    phi,
    reduced_signature,
    signature,
)
from .blocks import Block, blocks, derived_equivalence_classes, same_block
from .characters import (
    SymPolynomial,
    branch_r1,
    complete_homogeneous,
    pieri_mult,
    restrict_last_var,
    schur,
    schur_expand,
    schur_jacobi_trudi,
)
from .hecke import (
    HeckeElement,
    all_reduced_words,
    from_generator,
    multiply,
    parse_expression,
    reduced_word,
    verify_relations,
)
from .verify import DEFAULT_SEED, SuiteResult, VerifyReport, run_verify

__all__ = [
    "Block",
    "Box",
    "CrystalGraph",
    "DEFAULT_SEED",
    "FockVector",
    "HeckeElement",
    "Partition",
    "Signature",
    "SparseMatrix",
    "SuiteResult",
    "SymPolynomial",
    "VerifyReport",
    "Weight",
    "addable_boxes",
    "add_box",
    "all_reduced_words",
    "apply_e",
    "apply_f",
    "apply_h",
    "blocks",
    "branch_r1",
    "canonical_residue",
    "cartan_entry",
    "casimir_scalar",
    "check_modulus",
    "cogood_box",
    "complete_homogeneous",
    "content",
    "crystal_graph",
    "derived_equivalence_classes",
    "e_tilde",
    "epsilon",
    "f_tilde",
    "from_generator",
    "good_box",
    "m_count",
    "multiply",
    "n_value",
    "op_matrix",
    "p_core",
    "p_core_beta",
    "p_weight",
    "parse_expression",
    "partitions_of",
    "partitions_up_to",
    "phi",
    "pieri_mult",
    "reduced_signature",
    "reduced_word",
    "removable_boxes",
    "removable_rim_hooks",
    "remove_box",
    "residue",
    "residue_window",
    "restrict_last_var",
    "run_verify",
    "same_block",
    "schur",
    "schur_expand",
    "schur_jacobi_trudi",
    "signature",
    "verify_relations",
    "weight",
    "x_eigenvalue",
    "y_eigenvalue",
]
