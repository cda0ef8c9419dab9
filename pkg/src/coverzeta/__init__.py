"""Galois covers of finite graphs with deck group the units mod p:
voltage constructions, Picard groups with their deck action, equivariant
Ihara zeta special values over the group ring, and the character-by-character
comparison of eigenspace sizes with p-adic absolute values of L-values.
"""

from .arith import is_odd_prime, p_part, smallest_primitive_root
from .characters import Character, character_value, fp_characters, zp_characters
from .groupring import (
    CyclicGroup,
    GroupRingElement,
    GroupRingMatrix,
    augmentation,
    eval_character,
    gr_det,
    gr_mul,
    idempotent_mod,
    involution,
)
from .herbrand import (
    TheoremReport,
    Verdict,
    build_report,
    default_precision,
    verify_fitting_identity,
    verify_main11,
    verify_main22,
)
from .padic import PAdicInt, PrecisionExhausted, abs_p_inverse, teichmuller, valuation
from .picard import (
    ElementaryQuotient,
    PicardModule,
    SylowPModule,
    eigenspace_dim_C,
    eigenspace_order_A,
    elementary_quotient,
    picard_factors,
    picard_module,
    spanning_tree_count,
    sylow_p_module,
    trivial_character_check,
)
from .serre import (
    DirectedEdge,
    SerreGraph,
    adjacency_count,
    bouquet,
    cycle_graph,
    euler_characteristic,
    is_connected,
    laplacian_matrix,
    path_graph,
    valence,
)
from .snf import (
    CokernelDescription,
    SmithDecomposition,
    cokernel,
    image_membership,
    integer_determinant,
    smith_normal_form,
)
from .specfile import bundled_spec, load_spec, spec_from_dict, spec_to_dict
from .voltage import (
    DerivedCover,
    DisconnectedCover,
    VoltageSpec,
    base_transversal,
    connected_by_voltage_criterion,
    cycle_voltage_subgroup,
    deck_act,
    derive,
    require_connected_cover,
)
from .zeta import (
    EtaPolynomial,
    LValue,
    closed_path_counts,
    duality_check,
    equivariant_adjacency,
    equivariant_laplacian,
    eta_at_one,
    eta_polynomial,
    ihara_zeta_inverse_base,
    l_value,
    log_zeta_path_counts,
)

__version__ = "0.1.0"
