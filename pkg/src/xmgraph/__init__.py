"""Finite (reflexive) (X,M)-graphs: limits, exponentials, and nerve bridges."""

from .algebra import (
    FiniteMonoid,
    MonoidKind,
    RightMSet,
    build_standard_monoid,
    fix_set,
    invertibles,
)
from .errors import CapacityError, ParseError, ValidationError, XMGraphError
from .expo import Exponential, ExponentialArc, curry, eval_morphism, exponential, uncurry
from .graph import (
    GraphMorphism,
    XMGraph,
    classify_arcs,
    compose_morphisms,
    enumerate_homs,
    identity_morphism,
    make_graph,
    make_morphism,
    representable,
    summarize,
)
from .limits import coequalizer, coproduct, equalizer, initial, product, terminal
from .theory import A, V, Theory, check_axioms, make_theory, standard_theory
from .bridge import (
    FMorphism,
    Hypergraph,
    PowerGraph,
    ReflexiveFGraph,
    adjunction_units,
    nerve,
    obstruction_certificate,
    realize,
)
from .bundle import Bundle, load_bundle, save_bundle
from .dot import export_dot, to_dot

__version__ = "0.1.0"
