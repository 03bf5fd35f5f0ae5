"""Attribute reduction that preserves I- or II-decision rules.

An attribute subset E of M is I-consistent when the rules of the subcontext
(U, E, I_E, N, J) imply every rule of the full context.  Three equivalent
tests are provided:

* :func:`is_consistent_by_rules` checks rule implication literally,
* :func:`is_consistent_by_extents` checks that every rule premise
  ``O ⊆ Y`` can be widened to an object-oriented extent of the subcontext
  that still fits inside ``Y``,
* :func:`is_I_consistent` checks ``Y□◇`` over M against ``Y□◇`` over E
  for every decision extent ``Y``.

Reductions come from the discernibility matrix: for each object-oriented
concept whose extent is some ``Y□◇`` and each of its lower covers, the
symmetric difference of intents must be hit by E.  All reductions are the
minimal hitting sets of those clauses.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import NamedTuple

from . import bitset
from .context import ContextError, FormalDecisionContext, complement_decision, restrict_conditional
from .lattice import ConceptKind, ConceptLattice, build_lattice
from .operators import box_obj, diamond_attr
from .rules import RuleSetOptions, RuleType, all_rules, rule_implies

log = logging.getLogger(__name__)

# Berge expansion is exponential in the number of distinct clause variables.
MAX_DNF_VARIABLES = 24


class UnsatisfiableError(ValueError):
    """A clause family containing the empty clause has no hitting set."""


class ReductionTooLarge(ValueError):
    pass


class CoverPair(NamedTuple):
    upper: int
    lower: int


@dataclass(frozen=True)
class DiscernibilityMatrix:
    """Non-empty entries keyed by (upper, lower) indices into ``lattice``.

    ``upper`` has its extent in the premise family and covers ``lower``;
    each unordered pair appears once.
    """

    lattice: ConceptLattice
    premise_extents: frozenset[int]
    entries: dict[CoverPair, int] = field(default_factory=dict)

    def entry(self, i: int, j: int) -> int:
        """Symmetric lookup; 0 when the pair is not discerned."""
        return self.entries.get(CoverPair(i, j)) or self.entries.get(CoverPair(j, i)) or 0


@dataclass(frozen=True)
class ReductionResult:
    reductions: tuple[int, ...]
    core: int
    clauses: tuple[int, ...]

    @property
    def unconstrained(self) -> bool:
        """No clause at all: the empty set is the only minimal hitting set."""
        return self.reductions == (0,)


def premise_extent_family(fdc: FormalDecisionContext) -> frozenset[int]:
    """``{Y□◇ | Y ∈ ExtL(decision)}``: premise extents of necessary I-rules."""
    cond = fdc.conditional
    decision_lattice = build_lattice(fdc.decision, ConceptKind.FORMAL)
    return frozenset(diamond_attr(cond, box_obj(cond, y)) for y in decision_lattice.extents)


def _require_subset(fdc: FormalDecisionContext, attrs: int) -> None:
    if not attrs:
        raise ContextError("consistency is undefined for the empty attribute set")
    if attrs & ~fdc.conditional.all_attributes:
        raise ContextError("attribute set is not a subset of the conditional attributes")


def is_I_consistent(fdc: FormalDecisionContext, attrs: int) -> bool:
    """``Y□◇`` is unchanged for every decision extent when M shrinks to E."""
    _require_subset(fdc, attrs)
    cond = fdc.conditional
    for y in build_lattice(fdc.decision, ConceptKind.FORMAL).extents:
        box = box_obj(cond, y)
        # □ over E is □ over M intersected with E; ◇ over E agrees with ◇ over M
        if diamond_attr(cond, box & attrs) != diamond_attr(cond, box):
            return False
    return True


def is_II_consistent(fdc: FormalDecisionContext, attrs: int) -> bool:
    return is_I_consistent(complement_decision(fdc), attrs)


def is_consistent_by_extents(fdc: FormalDecisionContext, attrs: int,
                             rule_type: RuleType | str = RuleType.I) -> bool:
    """Every rule premise O ⊆ Y admits an E-extent O' with O ⊆ O' ⊆ Y."""
    _require_subset(fdc, attrs)
    rule_type = RuleType.parse(rule_type)
    premises = build_lattice(fdc.conditional, ConceptKind.OBJECT).extents
    sub = build_lattice(restrict_conditional(fdc, attrs).conditional, ConceptKind.OBJECT).extents
    for y in build_lattice(fdc.decision, rule_type.conclusion_kind).extents:
        inside = [e for e in sub if e & ~y == 0]
        for o in premises:
            if o & ~y == 0 and not any(o & ~e == 0 for e in inside):
                return False
    return True


def is_consistent_by_rules(fdc: FormalDecisionContext, attrs: int,
                           rule_type: RuleType | str = RuleType.I,
                           opts: RuleSetOptions = RuleSetOptions(include_trivial=True)) -> bool:
    """Every rule of the full context is implied by some rule of the subcontext.

    Slow; meant as an oracle for small contexts.  Rules are compared by
    extents, so the subcontext's premises (whose intents live in E) may imply
    rules of the full context.
    """
    _require_subset(fdc, attrs)
    full = all_rules(fdc, rule_type, opts)
    sub = all_rules(restrict_conditional(fdc, attrs), rule_type, opts)
    return all(any(rule_implies(s, r) for s in sub) for r in full)


def discernibility_matrix(fdc: FormalDecisionContext) -> DiscernibilityMatrix:
    lattice = build_lattice(fdc.conditional, ConceptKind.OBJECT)
    family = premise_extent_family(fdc)
    entries: dict[CoverPair, int] = {}
    for lower, upper in lattice.covers:
        if lattice[upper].extent in family:
            diff = lattice[upper].intent ^ lattice[lower].intent
            if diff:
                entries[CoverPair(upper, lower)] = diff
    return DiscernibilityMatrix(lattice, family, entries)


def absorb(clauses: list[int] | tuple[int, ...]) -> list[int]:
    """Deduplicate and drop every clause that contains another clause."""
    unique = sorted(set(clauses), key=bitset.sort_key)
    kept: list[int] = []
    for c in unique:
        if not any(k & ~c == 0 for k in kept):
            kept.append(c)
    return kept


def discernibility_function(matrix: DiscernibilityMatrix) -> list[int]:
    """CNF clauses (each an attribute bitset, read as a disjunction), absorbed."""
    return absorb([v for v in matrix.entries.values() if v])


def minimal_dnf(clauses: list[int] | tuple[int, ...]) -> list[int]:
    """All minimal hitting sets of ``clauses`` (Berge's incremental transversal).

    An empty clause family yields ``[0]``: the empty set hits every clause.
    """
    if any(c == 0 for c in clauses):
        raise UnsatisfiableError("unsatisfiable: the clause family contains an empty clause")
    clauses = absorb(clauses)
    variables = bitset.popcount(_union(clauses))
    if variables > MAX_DNF_VARIABLES:
        raise ReductionTooLarge(
            f"{variables} attributes occur in the discernibility function; limit is {MAX_DNF_VARIABLES}"
        )
    transversals = [0]
    for clause in clauses:
        hit = [t for t in transversals if t & clause]
        missing = [t for t in transversals if not t & clause]
        extended = set(hit)
        for t in missing:
            for v in bitset.indices(clause):
                extended.add(t | 1 << v)
        transversals = _minimal(extended)
    return sorted(transversals, key=bitset.sort_key)


def _union(values: list[int]) -> int:
    out = 0
    for v in values:
        out |= v
    return out


def _minimal(sets: set[int]) -> list[int]:
    ordered = sorted(sets, key=bitset.popcount)
    kept: list[int] = []
    for s in ordered:
        if not any(k & ~s == 0 for k in kept):
            kept.append(s)
    return kept


def i_reductions(fdc: FormalDecisionContext) -> ReductionResult:
    clauses = discernibility_function(discernibility_matrix(fdc))
    reductions = minimal_dnf(clauses)
    core = fdc.conditional.all_attributes
    for r in reductions:
        core &= r
    if reductions == [0]:
        log.warning("no conditional attribute is needed to preserve the rules")
    return ReductionResult(tuple(reductions), core, tuple(clauses))


def ii_reductions(fdc: FormalDecisionContext) -> ReductionResult:
    return i_reductions(complement_decision(fdc))


def reductions(fdc: FormalDecisionContext, rule_type: RuleType | str) -> ReductionResult:
    if RuleType.parse(rule_type) is RuleType.I:
        return i_reductions(fdc)
    return ii_reductions(fdc)


def is_consistent(fdc: FormalDecisionContext, attrs: int, rule_type: RuleType | str) -> bool:
    if RuleType.parse(rule_type) is RuleType.I:
        return is_I_consistent(fdc, attrs)
    return is_II_consistent(fdc, attrs)

