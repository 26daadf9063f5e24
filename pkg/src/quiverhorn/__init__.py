"""Exact combinatorics of quiver Schubert intersection.

Decide whether a family of Schubert positions admits a subrepresentation of
every quiver representation, enumerate all such positions and the generic
subdimension vectors, cross-validate with randomized and exhaustive algebraic
oracles, and compute the exact polyhedral cone of highest weights on the
representation space.
"""

__version__ = "0.1.0"

from .augment import AugmentedQuiver, augment, cross_check, lift_family, satisfies_jump_condition
from .brute import (
    CountReport,
    SmallFieldSubspace,
    count_stable_points,
    enumerate_subspaces,
    estimate_p_membership,
    schubert_contains,
)
from .catalog import hexagon_quiver, kronecker_quiver, single_arrow_quiver, square_quiver, star_quiver
from .cone import (
    ConeDescription,
    Facet,
    extreme_rays,
    facet_data,
    generate_system,
    irredundant_facets,
    orbit_reduce,
    sigma_restriction,
    with_rays,
)
from .core import (
    Automorphism,
    Quiver,
    align_profiles,
    dim_filtered_hom,
    edim,
    euler_form,
    extend_profile,
    filtered_euler,
    full_profile,
    quiver_automorphisms,
    quotient_profile,
    schubert_dim,
    sub_profile,
)
from .errors import (
    CapacityError,
    ContainmentError,
    DomainError,
    ParseError,
    ProfileError,
    QueryError,
    QuiverHornError,
)
from .ext_oracle import (
    DEFAULT_PRIME,
    PrimeFieldMatrix,
    RepresentationSample,
    build_delta,
    draw_sample,
    generic_ext,
    generic_hom,
    oracle_is_intersecting,
)
from .horn import (
    CanonicalKey,
    HornQuery,
    belkale_member,
    canonicalize,
    enumerate_intersecting,
    enumerate_schofield,
    find_witness,
    horn_member,
    schofield_member,
)
