"""topolab: finite-topology computation and exhaustive desk-scale verification.

Everything is exact and combinatorial: subsets are int bitmasks, topologies
are canonical sorted families of masks, filters are kernels, and the
verification suites sweep complete corpora of labeled topologies on up to
four points.
"""

from .bitsets import canon_family, complement, mask_of, points_of
from .choice import (
    PropertyAClassification,
    PropertyAReport,
    check_filterwise_refinement,
    check_locally_compact_bound,
    check_lower_convergence_lemma,
    classify_property_A,
    enumerate_choice_functions,
    filterwise_limit_set,
    has_property_A,
    limit_set_P,
)
from .errors import (
    EmptyIntersection,
    ImageNotInFamily,
    NotATopology,
    NotOpen,
    SizeLimitExceeded,
    TopolabError,
)
from .filters import (
    Carrier,
    FilterOnCarrier,
    contains,
    converges,
    enumerate_filters,
    enumerate_ultrafilters,
    filter_from_sets,
    filter_image,
    function_filter_apply,
    functions_carrier,
    is_countably_complete,
    is_ultrafilter,
    is_ultrafilter_by_kernel,
    neighborhood_filter,
    points_carrier,
    singleton_filter,
    subsets_carrier,
    ultrafilters_over,
)
from .finality import (
    FinalitySetup,
    check_finality_discrete_square,
    check_vietoris_contained,
    final_over_projections,
    stone_cech_finite_discrete,
)
from .funcspaces import (
    FunctionSpace,
    MuEmbeddingReport,
    compact_open,
    continuous_maps,
    is_continuous,
    mu,
    mu_embedding_report,
    projection_compose,
    set_open_topology,
)
from .hyperspaces import (
    HyperSpace,
    closeds,
    compacts,
    hit,
    lower_limits,
    lower_vietoris,
    miss,
    upper_vietoris,
    vietoris,
    vietoris_basic,
)
from .maps import FiniteMap, all_maps, compose, constant_map, identity_map
from .spaces import (
    FiniteSpace,
    SpaceReport,
    closure,
    discrete_space,
    enumerate_topologies,
    final_topology,
    generate_from_subbase,
    indiscrete_space,
    interior,
    is_compact_subset,
    is_locally_compact,
    is_nested_neighbourhood,
    is_t1,
    is_t2,
    is_t3,
    make_space,
    minimal_open_nbhd,
    product_space,
    shrink_between,
    sierpinski_space,
    space_report,
)

__version__ = "0.1.0"
