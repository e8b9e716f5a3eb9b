"""Bridges to hypergraphs, power graphs and reflexive power graphs."""

from .fgraphs import (
    FMorphism,
    Hypergraph,
    PowerGraph,
    ReflexiveFGraph,
    compose_fmorphisms,
    fgraph_homs,
    flavor_of,
    identity_fmorphism,
    is_k_uniform,
    make_fmorphism,
    multiset_map,
    multiset_power,
    rf_coequalizer,
    rf_coproduct,
    uniformity_profile,
)
from .nerve import (
    FLAVORS,
    AdjunctionUnits,
    MAQuotient,
    Nerve,
    Realization,
    adjunction_units,
    counit,
    hyper_nerve,
    hyper_realize,
    interpretation,
    m_a_quotient,
    nerve,
    nerve_morphism,
    power_nerve,
    power_realize,
    realize,
    rpower_nerve,
    rpower_realize,
    transpose_from_nerve,
    transpose_to_nerve,
    unit,
)
from .obstruction import CASES, ObstructionCertificate, obstruction_certificate, verify_certificate
