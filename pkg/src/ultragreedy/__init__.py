"""Exact-arithmetic greedy orderings and maximum-perimeter greedoids on
ultrametric-style spaces, with a p-adic instantiation.

The public API re-exports the main operations; see the module docstrings for
the underlying definitions.  Everything computes over exact rationals.
"""

from .errors import (
    InputError,
    MathIntegrityError,
    NotMaximalError,
    SizeCapError,
    UltrametricError,
)
from .functionals import (
    DistFunctional,
    ReconstructedFamily,
    check_S1,
    check_S2,
    family_functional,
    nearest_point_functional,
    reconstruct_f,
    removed_distance_functional,
    verify_reconstruction,
)
from .greedoid import (
    AxiomFailure,
    AxiomReport,
    MaxPerFamily,
    check_greedoid_axioms,
    check_prefix_theorem,
    max_perimeter_sets,
)
from .greedy import (
    GreedyTrace,
    all_greedy_orders,
    all_proj_seqs,
    exchange_element,
    greedy_order,
    increment_signature,
    proj_point,
    proj_seq,
)
from .oracle import (
    OracleResult,
    brute_all_permutation_perimeters,
    brute_dist_r,
    brute_max_perimeter,
    brute_max_perimeter_sweep,
)
from .padic import (
    PadicSpec,
    is_prime,
    legendre_nu_factorial,
    nu_p,
    padic_triple,
    realize_profile,
    witness_point,
)
from .perimeter import (
    MonotoneFamily,
    dist_f,
    dist_r,
    per_f_ordered,
    per_r_ordered,
    per_r_set,
    profile,
)
from .rational import Rat, format_rational, parse_rational
from .specfile import load_family, load_triple, parse_family_obj, parse_triple_obj
from .triple import (
    PointId,
    UltraTriple,
    Violation,
    build_triple,
    check_ultrametric,
    transform_distance,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomFailure",
    "AxiomReport",
    "DistFunctional",
    "GreedyTrace",
    "InputError",
    "MathIntegrityError",
    "MaxPerFamily",
    "MonotoneFamily",
    "NotMaximalError",
    "OracleResult",
    "PadicSpec",
    "PointId",
    "Rat",
    "ReconstructedFamily",
    "SizeCapError",
    "UltraTriple",
    "UltrametricError",
    "Violation",
    "all_greedy_orders",
    "all_proj_seqs",
    "brute_all_permutation_perimeters",
    "brute_dist_r",
    "brute_max_perimeter",
    "brute_max_perimeter_sweep",
    "build_triple",
    "check_S1",
    "check_S2",
    "check_greedoid_axioms",
    "check_prefix_theorem",
    "check_ultrametric",
    "dist_f",
    "dist_r",
    "exchange_element",
    "family_functional",
    "format_rational",
    "greedy_order",
    "increment_signature",
    "is_prime",
    "legendre_nu_factorial",
    "load_family",
    "load_triple",
    "max_perimeter_sets",
    "nearest_point_functional",
    "nu_p",
    "padic_triple",
    "parse_family_obj",
    "parse_rational",
    "parse_triple_obj",
    "per_f_ordered",
    "per_r_ordered",
    "per_r_set",
    "profile",
    "proj_point",
    "proj_seq",
    "realize_profile",
    "reconstruct_f",
    "removed_distance_functional",
    "transform_distance",
    "verify_reconstruction",
    "witness_point",
]
