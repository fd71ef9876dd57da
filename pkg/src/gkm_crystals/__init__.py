"""Highest weight crystals for quantum generalized Kac-Moody algebras.

``B(lambda)`` is computed as the component of ``ground ⊗ t_lambda ⊗ c`` in
``B(infinity) ⊗ T_lambda ⊗ C``; ``quiver_geom`` checks the matching
quiver-variety conditions in exact rational arithmetic.
"""
from .cartan import (
    Arrow,
    BorcherdsCartanDatum,
    QuiverPresentation,
    Weight,
    cartan_from_quiver,
    dominant_weight,
    pair,
    validate_datum,
)
from .crystal import (
    AxiomReport,
    Crystal,
    CrystalGraph,
    MorphismReport,
    check_axioms,
    check_strict_morphism,
    generate_component,
    weight_multiplicities,
)
from .errors import (
    CartanError,
    GKMError,
    InternalInvariantError,
    InvalidQuiver,
    IrrationalSpectrum,
    NonDominantWeight,
    NotSymmetric,
    OddOrPositiveDiagonal,
    PositiveOffDiagonal,
    ShapeMismatch,
    UnknownFormat,
    UnknownIndex,
)
from .export import export_graph, graph_from_json
from .extint import NEG_INF, ExtendedInt
from .highest_weight import (
    GROUND,
    BInfCrystal,
    BInfElement,
    HighestWeightCrystal,
    generate_highest_weight,
    graphs_isomorphic,
    hw_crystal,
    make_iota,
    multiplicities,
)
from .models import CCrystal, ElementaryCrystal, TCrystal, c_crystal, elementary, t_lambda
from .quiver_geom import (
    RepPoint,
    check_eps_condition,
    check_flag_condition,
    check_membership_N,
    check_regular_semisimple,
    check_stability,
    eps_omega,
    gl_action,
    moment_map,
    symplectic_form,
)
from .tensor import TensorCrystal, TensorElement, tensor_product
from .verify import verify_graph

__all__ = [name for name in dir() if not name.startswith("_")]
