"""Split-extension groups, canonical words, and the word-support graph.

Builds finite groups as explicit multiplication tables, realizes
split-extension descriptions from a small presentation DSL, names every
element by a canonical word, constructs the word-support graph under an
explicit interpretation policy, and audits whether the construction
respects group isomorphism.  It does not: the two built-in descriptions
of the order-8 dihedral group receive different degree sequences, and
no policy in the enumerated space repairs that.
"""

from .groups import (
    Automorphism,
    GenerationError,
    GroupTable,
    InvalidActionError,
    Isomorphism,
    NotAHomomorphismError,
    NotBijectiveError,
    all_automorphisms,
    all_homomorphisms,
    are_isomorphic,
    automorphism_from_generator_images,
    automorphism_table,
    check_group_axioms,
    complement_embedding,
    compose_automorphisms,
    direct_product,
    element_order,
    exponent,
    generating_set,
    identity_automorphism,
    involution_count,
    is_abelian,
    kernel_embedding,
    make_cyclic,
    semidirect_product,
)
from .presentation import (
    EMPTY_WORD,
    GeneratorConditionReport,
    ParseError,
    Presentation,
    Realization,
    SplitDescription,
    UnknownGeneratorError,
    UnsupportedPresentationError,
    Word,
    canonical_words,
    check_generator_condition,
    evaluate_word,
    generator_condition,
    parse_presentation,
    parse_split_description,
    presentation_to_text,
    realize,
)
from .gamma import (
    DEFAULT_POLICY,
    EdgeTrace,
    GammaGraph,
    InterpretationPolicy,
    LengthGate,
    Rule,
    SameGeneratorEdges,
    SupportComparison,
    build_gamma,
    edge_decision,
    support,
)
from .invariants import (
    DisconnectedGraphError,
    degree_sequence,
    diameter,
    edge_count,
    export_dot,
    export_report,
    graph_report,
    is_connected,
)
from .audit import (
    AuditReport,
    ClassificationReport,
    DIHEDRAL_SPLIT_TEXT,
    ExponentTwoReport,
    KLEIN_SWAP_SPLIT_TEXT,
    SweepReport,
    Verdict,
    audit_pair,
    canonical_order8_tables,
    classify_order8,
    dihedral_description,
    dihedral_table,
    exponent2_abelian_check,
    klein_swap_description,
    policy_sweep,
    quaternion_table,
    reproduce_counterexample,
)

__version__ = "0.1.0"
