"""Queen labelings of digraphs, the h-product, and n-queens constructions."""

from .constructions import (
    ConstructionError,
    ThetaPartition,
    doubling_structure,
    final_lemma_structure,
    is_prime,
    is_primitive_root,
    jacobsthal_digraph,
    jacobsthal_number,
    multiplicative_order,
    park_criterion,
    polya_composite,
    polya_doubling,
    strong_cycle,
    theta_partition,
    three_cycles_placement,
)
from .digraph import (
    CycleType,
    DigraphError,
    LabeledDigraph,
    cycle_type,
    disjoint_union,
    from_arcs,
    from_permutation,
    is_one_regular,
    reverse,
    rotate_quarter,
)
from .enumeration import (
    BoundReport,
    achievable_cycle_types,
    count_modular,
    count_standard,
    enumerate_modular,
    enumerate_standard,
    modular_bound_check,
    shared_set_family,
)
from .labeling import (
    Failure,
    Placement,
    VerificationReport,
    attacking_pairs,
    diff_multiset,
    from_placement,
    is_solution,
    sigma_identity_check,
    sum_multiset,
    to_placement,
    verify_modular_queen,
    verify_placement,
    verify_queen,
)
from .product import (
    FamilyAssignment,
    ProductError,
    check_corollary_sets,
    check_diff_condition,
    check_modular_family_sets,
    check_sum_condition,
    direct_product,
    oh_product,
    product_preserves_modular,
    product_preserves_queen,
)

__version__ = "0.1.0"
