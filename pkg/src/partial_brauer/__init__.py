"""Partial Brauer monoids PB_n, their variants PB_n^alpha, and brute-force oracles."""

from .pb_core import (
    DimensionError,
    Partition,
    PartitionError,
    PartitionStats,
    format_partition,
    from_blocks,
    from_permutation,
    identity,
    leq_L_natural,
    leq_R_natural,
    parse_partition,
    product,
    reflect,
    stats,
    to_blocks,
)
from .pb_pairs import (
    JoinResult,
    PBPair,
    UndefinedPairError,
    domain_paths,
    epsilon_pair,
    halves,
    join,
    join_rank,
    parse_pb_pair,
    partition_from_halves,
    pb_pair,
)
from .enumeration import (
    BoundError,
    EnumerationBounds,
    all_partitions,
    all_pb_pairs,
    elements,
    index_of,
    partitions_filtered,
)
from .mu_numbers import (
    MuTable,
    PreconditionError,
    a_seq,
    check_mu_inequality,
    closed_form,
    mu,
    mu_bruteforce,
    pb_count,
)
from .variant import (
    PSets,
    RegularDChain,
    Variant,
    class_counts,
    leq_variant_L,
    leq_variant_R,
    p_sets,
    regular_d_chain,
    sandwich_product,
    variant_green_class,
    variant_green_partition,
)
from .semigroup_analysis import (
    FiniteSemigroup,
    GreenStructure,
    build_table,
    find_isomorphism,
    green_structure,
    is_homomorphism,
    p_sets_from_table,
    preimage_multiset,
    verify_inflation,
)
from .classify import (
    InvariantTuple,
    NoConjugatorError,
    Verdict,
    construct_conjugators,
    conjugation_map,
    decide_isomorphism,
    invariants,
    rank_zero_report,
)

__version__ = "0.1.0"
