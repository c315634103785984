"""Local unitary invariants of multipartite quantum states.

Exact dimension counts and Hilbert series for the graded algebra of
LU-invariant polynomials, brute-force orbit and subgroup-census oracles,
and numerical evaluation of the explicit degree-4 and higher invariants
on pure and mixed states.
"""

from .combinatorics import (
    CycleType,
    Partition,
    centralizer_order,
    cycle_type_to_partition,
    cycle_types_of,
    partition_to_cycle_type,
    partitions_of,
)
from .characters import (
    ClassFunction,
    conjugation_character,
    inner_product,
    irreducible_character,
    kronecker_multiplicity,
    pointwise_power,
    pointwise_product,
    pointwise_sum,
    sign_character,
    trivial_character,
)
from .dimensions import (
    DimensionQuery,
    mixed_dimension,
    restricted_dimension,
    stable_dimension,
    stable_dimension_via_characters,
)
from .errors import ConsistencyError, EnumerationBoundError, IntegralityError
from .free_group_census import (
    PermTuple,
    conjugation_orbit_count,
    count_subgroup_classes,
    is_transitive,
)
from .invariants import (
    InvariantVector,
    basis_vector_m2,
    eta,
    higher_basis_vector,
    higher_invariant,
    i_from_j,
    invariant_I,
    invariant_I_vector,
    invariant_J,
    invariant_J_vector,
    j_from_i,
    meyer_wallach,
)
from .series import (
    GeneratorCounts,
    PowerSeries,
    euler_exponents,
    expand_euler_product,
    free_generator_count,
    hilbert_series,
)
from .states import (
    DensityMatrix,
    PureState,
    apply_local_unitaries,
    bell_state,
    ghz_state,
    invariant_space_rank,
    partial_trace,
    permutation_contraction,
    product_state,
    projector,
    purify,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    read_state_file,
    write_state_file,
)
from .subsets import SubsetMask, all_subsets

__version__ = "0.1.0"
