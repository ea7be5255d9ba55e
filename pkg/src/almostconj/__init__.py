"""Deciding when almost conjugate subgroups are honestly conjugate.

The library builds finite permutation groups at desk scale, tests Gassmann
equivalence of subgroup pairs through conjugacy-class intersection profiles,
applies cycle-type criteria that force such pairs to be conjugate, and walks
the same structures on the number-field side: decomposition types of primes
read off from polynomial factorization over prime fields.
"""

__version__ = "0.1.0"

from .perms import (
    CycleNotationError,
    Permutation,
    compose,
    conjugate,
    format_cycles,
    parse_cycles,
)
from .groups import (
    CapExceededError,
    ConjugacyClass,
    EnumerationLimits,
    GSet,
    PermGroup,
    Subgroup,
    are_conjugate_subgroups,
    conjugacy_classes,
    coset_action,
    generate_elements,
    natural_gset,
    normal_closure,
    stabilizer_of_point,
    subgroup_classes_of_order,
    subgroup_from_generators,
    subgroups_of_order,
    trivial_subgroup,
    whole_subgroup,
)
from .arith import is_prime, is_prime_power, primes_below
from .catalog import (
    UnknownGroupError,
    builtin_group,
    catalog_names,
    format_group_file,
    load_group,
    parse_group_file,
)
from .structure import (
    BlockSystem,
    ClosureReport,
    block_proof_group,
    block_stabilizer_membership,
    common_fixed_positions,
    ell_cycle_closure_report,
    fixed_point_detector,
    induced_image,
    is_affine_type,
    is_primitive,
    is_transitive,
    is_two_transitive,
    min_fixed_points,
    minimal_block_system,
    orbits,
    restricted_block_character,
    rudio_fixing_set,
)
from .gassmann import (
    CriterionWitness,
    ExcludedPrimeResult,
    GassmannReport,
    PermCharacter,
    class_intersection_profile,
    corresponding_stabilizers_agree,
    enumerate_gassmann_triples,
    equivariant_bijection_via_involutions,
    excluded_prime,
    is_gassmann_equivalent,
    is_gassmann_triple,
    is_solitary_bruteforce,
    perm_character,
    theorem1_criterion,
)
from .numberfields import (
    DEGREE7_PAIR,
    DEGREE11_PAIR,
    ChebotarevReport,
    DecompositionComparison,
    DecompositionType,
    IntPolynomial,
    Signature,
    TypeFrequency,
    chebotarev_consistency,
    compare_decompositions,
    decomposition_type,
    format_polynomial,
    inert_density,
    parse_polynomial,
    ramified_primes,
    sturm_signature,
)
