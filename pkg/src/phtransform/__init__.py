"""Exact combinatorial persistent homology transform of geometric simplicial complexes."""

from .arrangement import (
    Cell,
    Cellulation,
    PairSet,
    augment,
    cell_of,
    enumerate_cells,
    essential_defect,
    normals,
    realizable,
    sign_vector,
)
from .complex import (
    GeometricComplex,
    SimplicialComplex,
    affine_dim,
    build_complex,
    embed,
    height,
    specialization_leq,
)
from .errors import InputError, IntegrityError, NonEssentialError
from .filtration import (
    BoundedMonotoneMap,
    Chain,
    Filtration,
    cell_filtration,
    cell_poset,
    compose_maps,
    face_map,
    is_filtration_preserving,
)
from .pipeline import (
    FieldConfig,
    IntegralFunction,
    IntervalPoset,
    MonotoneIntegralFunction,
    birth_death,
    cycle_space_dim,
    induced_interval_map,
    interval_poset,
    is_charge_preserving,
    is_monotone_preserving,
    mobius_invert,
    persistent_homology,
    push_charges,
    total_charge,
)
from .transform import Transform, compute_transform, oracle_sample_check, verify_transform, vineyard

__version__ = "0.1.0"
