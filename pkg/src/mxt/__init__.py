"""mxt: exact matroid analysis.

Locked-subset enumeration, the minimal facet description of the bases
polytope, a separation oracle, construction and minor machinery, and
maximum-weight basis solving with independent cross-checks.  All arithmetic
is exact (integers and fractions); enumerative routines are capped rather
than approximate.
"""

from .connectivity import Separation, components, find_separation, is_2connected, is_2connected_subset
from .constructions import (
    IsoWitness,
    are_isomorphic,
    catalog,
    circuit_hyperplanes,
    direct_sum,
    has_minor,
    parallel_extension,
    relax_circuit_hyperplane,
    series_extension,
    two_sum,
)
from .core import (
    BasisMatroid,
    BinaryMatroid,
    CircuitsMatroid,
    DirectSumMatroid,
    DualMatroid,
    GraphicMatroid,
    Matroid,
    MinorMatroid,
    UniformMatroid,
    elements_of,
    full_mask,
    mask_of,
)
from .locked import (
    LockedCertificate,
    LockedReport,
    count_locked,
    enumerate_locked,
    is_locked,
    is_uniform,
    k_locked_oracle,
    uniformity_report,
)
from .maxweight import (
    SolveResult,
    brute_force_best,
    certify_optimal,
    greedy_basis,
    lp_vertex_best,
    parse_weights,
)
from .polytope import (
    ConstraintSystem,
    LinearConstraint,
    brute_force_facets,
    coparallel_closures,
    enumerate_vertices,
    facet_system,
    full_rank_system,
    independence_facet_system,
    is_facet,
    minimize_system,
    parallel_closures,
    separate,
    systems_equal,
)

__version__ = "0.1.0"
