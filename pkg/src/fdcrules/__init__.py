"""Decision rules and attribute reduction for formal decision contexts.

The premises of the rules are object-oriented concepts of the conditional
context; conclusions are formal concepts (I-rules) or property-oriented
concepts (II-rules) of the decision context.
"""
from .context import (
    CanonicityReport,
    ContextError,
    FormalContext,
    FormalDecisionContext,
    ParseError,
    check_canonical,
    complement_decision,
    parse_context,
    parse_decision_context,
    random_fdc,
    restrict_conditional,
    to_csv,
    to_cxt,
)
from .lattice import Concept, ConceptKind, ConceptLattice, build_lattice, concept_of_extent
from .reduction import (
    DiscernibilityMatrix,
    ReductionResult,
    discernibility_function,
    discernibility_matrix,
    i_reductions,
    ii_reductions,
    is_I_consistent,
    is_II_consistent,
    minimal_dnf,
    premise_extent_family,
)
from .rules import (
    DecisionRule,
    RuleSetOptions,
    RuleType,
    all_I_rules,
    all_II_rules,
    necessary_I_rules_alg1,
    necessary_I_rules_alg2,
    necessary_II_rules_s1,
    necessary_II_rules_s2,
    necessary_II_rules_via_complement,
    necessary_rules,
    necessary_rules_bruteforce,
    partition_extents,
    rule_implies,
)

__version__ = "0.1.0"
