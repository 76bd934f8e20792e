"""Exact certification of Zariski pairs/triplets of sextic curves:
integer-lattice invariants (discriminant groups of overlattices of
Z*lam (+) L(G)) plus exact plane-curve geometry."""

from .exact import QuadExtElem, Rational, hnf, invariant_factors, invert_symmetric, snf
from .lattices import (
    DiscriminantForm,
    Lattice,
    Overlattice,
    ambient,
    component_generator,
    discriminant_form,
    forms_isomorphic,
    groups_isomorphic,
    milgram_signature,
    overlattice,
    parse_config,
    projection_reachable,
    root_lattice,
)
from .k3 import (
    CheckReport,
    class_check,
    embedding_exists,
    enumerate_coset_norm,
    enumerate_norm,
    urabe_condition_i,
    urabe_condition_ii,
)
from .curves import (
    INFINITE,
    CurveWithFactors,
    ProjPoint,
    SingularityRecord,
    TernaryForm,
    classify_ade,
    classify_family,
    family_member,
    family_node_points,
    intersection_at,
    local_intersection,
    milnor,
    singular_at,
    special_curve_check,
    verify_configuration,
)
from .catalog import (
    CatalogError,
    certify,
    decode_glue,
    encode_glue,
    four_pairs_check,
    load_catalog,
    reproduce,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
