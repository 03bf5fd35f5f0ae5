"""I- and II-decision rules of a formal decision context.

A rule ``(O, C) -> (Y, D)`` pairs an object-oriented concept of the
conditional context with a concept of the decision context such that
``O ⊆ Y``.  For type I the conclusion is a formal concept, for type II a
property-oriented one.  Rule ``r1`` implies ``r2`` when
``O2 ⊆ O1 ⊆ Y1 ⊆ Y2``; the necessary rules are the minimal elements of
that order.

Necessary rules are acquired along five routes that must agree:

========== =============================== ======================================
route      classifies                      by
========== =============================== ======================================
alg1       extents of L_O(conditional)     equal ``O↑`` in the decision context
alg2       extents of L(decision)          equal ``Y□`` in the conditional context
s1         extents of L_O(conditional)     equal ``O◇`` in the decision context
s2         extents of L_P(decision)        equal ``Y□`` in the conditional context
complement I-rules of the complement Fdc   intent complemented back to N
========== =============================== ======================================

plus :func:`necessary_rules_bruteforce`, which filters the full rule set.
"""
from __future__ import annotations

import enum
from collections.abc import Callable, Iterable, MutableMapping
from dataclasses import dataclass
from typing import NamedTuple

from . import bitset
from .context import FormalDecisionContext, complement_decision
from .lattice import Concept, ConceptKind, build_lattice
from .operators import box_attr, box_obj, diamond_attr, diamond_obj, down, up


class RuleType(enum.Enum):
    I = "I"  # noqa: E741
    II = "II"

    @classmethod
    def parse(cls, value: str | RuleType) -> RuleType:
        if isinstance(value, RuleType):
            return value
        try:
            return cls(value.upper())
        except ValueError:
            raise ValueError(f"unknown rule type {value!r}; expected I or II") from None

    @property
    def conclusion_kind(self) -> ConceptKind:
        return ConceptKind.FORMAL if self is RuleType.I else ConceptKind.PROPERTY


class DecisionRule(NamedTuple):
    premise: Concept
    conclusion: Concept
    rule_type: RuleType


@dataclass(frozen=True)
class RuleSetOptions:
    include_trivial: bool = False


DEFAULT_OPTIONS = RuleSetOptions()


class EquivalenceClass(NamedTuple):
    image: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class ExtentPartition:
    relation: str
    classes: tuple[EquivalenceClass, ...]

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c.members) for c in self.classes}


Stats = MutableMapping[str, int]


def _record(stats: Stats | None, key: str, value: int) -> None:
    if stats is not None:
        stats[key] = stats.get(key, 0) + value


def rule_sort_key(rule: DecisionRule) -> tuple:
    return bitset.sort_key(rule.premise.extent), bitset.sort_key(rule.conclusion.extent)


def _finish(rules: Iterable[DecisionRule], fdc: FormalDecisionContext,
            opts: RuleSetOptions) -> list[DecisionRule]:
    everything = fdc.conditional.all_objects
    unique = set()
    for rule in rules:
        if not opts.include_trivial and (
            rule.premise.extent == 0 or rule.conclusion.extent == everything
        ):
            continue
        unique.add(rule)
    return sorted(unique, key=rule_sort_key)


def _classify(extents: Iterable[int], image: Callable[[int], int]) -> list[EquivalenceClass]:
    groups: dict[int, list[int]] = {}
    for ext in extents:
        groups.setdefault(image(ext), []).append(ext)
    classes = [
        EquivalenceClass(img, tuple(sorted(members, key=bitset.sort_key)))
        for img, members in groups.items()
    ]
    classes.sort(key=lambda c: bitset.sort_key(c.members[0]))
    return classes


def _union(members: Iterable[int]) -> int:
    out = 0
    for m in members:
        out |= m
    return out


def _intersection(members: Iterable[int], everything: int) -> int:
    out = everything
    for m in members:
        out &= m
    return out


def partition_extents(fdc: FormalDecisionContext, relation: str,
                      stats: Stats | None = None) -> ExtentPartition:
    """Classify extents by the relation ``R1``, ``R2``, ``S1`` or ``S2``."""
    cond, dec = fdc.conditional, fdc.decision
    tag = relation.upper()
    if tag in ("R1", "S1"):
        lat = build_lattice(cond, ConceptKind.OBJECT)
        _record(stats, "n_Lo", len(lat))
        if tag == "R1":
            classes = _classify(lat.extents, lambda o: up(dec, o))
        else:
            classes = _classify(lat.extents, lambda o: diamond_obj(dec, o))
    elif tag in ("R2", "S2"):
        kind = ConceptKind.FORMAL if tag == "R2" else ConceptKind.PROPERTY
        lat = build_lattice(dec, kind)
        _record(stats, "n_Ln", len(lat))
        classes = _classify(lat.extents, lambda y: box_obj(cond, y))
    else:
        raise ValueError(f"unknown relation {relation!r}; expected R1, R2, S1 or S2")
    return ExtentPartition(tag, tuple(classes))


def all_rules(fdc: FormalDecisionContext, rule_type: RuleType | str,
              opts: RuleSetOptions = DEFAULT_OPTIONS,
              stats: Stats | None = None) -> list[DecisionRule]:
    rule_type = RuleType.parse(rule_type)
    premises = build_lattice(fdc.conditional, ConceptKind.OBJECT)
    conclusions = build_lattice(fdc.decision, rule_type.conclusion_kind)
    _record(stats, "n_Lo", len(premises))
    _record(stats, "n_Ln", len(conclusions))
    found = (
        DecisionRule(p, c, rule_type)
        for p in premises
        for c in conclusions
        if p.extent & ~c.extent == 0
    )
    return _finish(found, fdc, opts)


def all_I_rules(fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS) -> list[DecisionRule]:
    return all_rules(fdc, RuleType.I, opts)


def all_II_rules(fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS) -> list[DecisionRule]:
    return all_rules(fdc, RuleType.II, opts)


def necessary_I_rules_alg1(fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS,
                           stats: Stats | None = None) -> list[DecisionRule]:
    """Largest premise per R1 class: ``(∪[O], (∪[O])□) -> (O↑↓, O↑)``."""
    cond, dec = fdc.conditional, fdc.decision
    rules = []
    for cls in partition_extents(fdc, "R1", stats).classes:
        top = _union(cls.members)
        premise = Concept(top, box_obj(cond, top), ConceptKind.OBJECT)
        conclusion = Concept(down(dec, cls.image), cls.image, ConceptKind.FORMAL)
        rules.append(DecisionRule(premise, conclusion, RuleType.I))
    return _finish(rules, fdc, opts)


def necessary_I_rules_alg2(fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS,
                           stats: Stats | None = None) -> list[DecisionRule]:
    """Smallest conclusion per R2 class: ``(Y□◇, Y□) -> (∩[Y], (∩[Y])↑)``.

    Never enumerates the object-oriented lattice of the conditional context.
    """
    cond, dec = fdc.conditional, fdc.decision
    everything = cond.all_objects
    rules = []
    for cls in partition_extents(fdc, "R2", stats).classes:
        bottom = _intersection(cls.members, everything)
        premise = Concept(diamond_attr(cond, cls.image), cls.image, ConceptKind.OBJECT)
        conclusion = Concept(bottom, up(dec, bottom), ConceptKind.FORMAL)
        rules.append(DecisionRule(premise, conclusion, RuleType.I))
    return _finish(rules, fdc, opts)


def necessary_II_rules_s1(fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS,
                          stats: Stats | None = None) -> list[DecisionRule]:
    """Largest premise per S1 class: ``(∪[O], (∪[O])□) -> (O◇□, O◇)``."""
    cond, dec = fdc.conditional, fdc.decision
    rules = []
    for cls in partition_extents(fdc, "S1", stats).classes:
        top = _union(cls.members)
        premise = Concept(top, box_obj(cond, top), ConceptKind.OBJECT)
        conclusion = Concept(box_attr(dec, cls.image), cls.image, ConceptKind.PROPERTY)
        rules.append(DecisionRule(premise, conclusion, RuleType.II))
    return _finish(rules, fdc, opts)


def necessary_II_rules_s2(fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS,
                          stats: Stats | None = None) -> list[DecisionRule]:
    """Smallest conclusion per S2 class: ``(Y□◇, Y□) -> (∩[Y], (∩[Y])◇)``."""
    cond, dec = fdc.conditional, fdc.decision
    everything = cond.all_objects
    rules = []
    for cls in partition_extents(fdc, "S2", stats).classes:
        bottom = _intersection(cls.members, everything)
        premise = Concept(diamond_attr(cond, cls.image), cls.image, ConceptKind.OBJECT)
        conclusion = Concept(bottom, diamond_obj(dec, bottom), ConceptKind.PROPERTY)
        rules.append(DecisionRule(premise, conclusion, RuleType.II))
    return _finish(rules, fdc, opts)


def to_type_II(rule: DecisionRule, n_decision: int) -> DecisionRule:
    """Map an I-rule of the complement Fdc to the II-rule it stands for: (Y, D) -> (Y, N−D)."""
    concl = rule.conclusion
    mapped = Concept(concl.extent, bitset.complement(concl.intent, n_decision), ConceptKind.PROPERTY)
    return DecisionRule(rule.premise, mapped, RuleType.II)


def necessary_II_rules_via_complement(
    fdc: FormalDecisionContext, opts: RuleSetOptions = DEFAULT_OPTIONS,
    stats: Stats | None = None, algorithm: str = "alg2",
) -> list[DecisionRule]:
    comp = complement_decision(fdc)
    acquire = necessary_I_rules_alg1 if algorithm == "alg1" else necessary_I_rules_alg2
    n = fdc.decision.n_attributes
    return _finish((to_type_II(r, n) for r in acquire(comp, opts, stats)), fdc, opts)


def rule_implies(r1: DecisionRule, r2: DecisionRule) -> bool:
    """True iff ``O2 ⊆ O1 ⊆ Y1 ⊆ Y2``."""
    if r1.rule_type is not r2.rule_type:
        raise ValueError("cannot compare rules of different types")
    o1, y1 = r1.premise.extent, r1.conclusion.extent
    o2, y2 = r2.premise.extent, r2.conclusion.extent
    return o2 & ~o1 == 0 and o1 & ~y1 == 0 and y1 & ~y2 == 0


def minimal_rules(rules: list[DecisionRule]) -> list[DecisionRule]:
    """Rules not implied by any other rule of the list."""
    return [r for r in rules if not any(s != r and rule_implies(s, r) for s in rules)]


def necessary_rules_bruteforce(fdc: FormalDecisionContext, rule_type: RuleType | str,
                               opts: RuleSetOptions = DEFAULT_OPTIONS,
                               stats: Stats | None = None) -> list[DecisionRule]:
    return minimal_rules(all_rules(fdc, rule_type, opts, stats))


ALGORITHMS: dict[str, tuple[RuleType, Callable[..., list[DecisionRule]]]] = {
    "alg1": (RuleType.I, necessary_I_rules_alg1),
    "alg2": (RuleType.I, necessary_I_rules_alg2),
    "s1": (RuleType.II, necessary_II_rules_s1),
    "s2": (RuleType.II, necessary_II_rules_s2),
    "complement": (RuleType.II, necessary_II_rules_via_complement),
}


def choose_algorithm(fdc: FormalDecisionContext, rule_type: RuleType) -> str:
    """Default route: for I-rules, classify the decision side when N is no larger than M."""
    if rule_type is RuleType.II:
        return "s1"
    return "alg2" if fdc.decision.n_attributes <= fdc.conditional.n_attributes else "alg1"


def necessary_rules(fdc: FormalDecisionContext, rule_type: RuleType | str,
                    opts: RuleSetOptions = DEFAULT_OPTIONS, algorithm: str = "auto",
                    stats: Stats | None = None) -> list[DecisionRule]:
    rule_type = RuleType.parse(rule_type)
    if algorithm == "auto":
        algorithm = choose_algorithm(fdc, rule_type)
    if algorithm == "bruteforce":
        return necessary_rules_bruteforce(fdc, rule_type, opts, stats)
    try:
        expected_type, acquire = ALGORITHMS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}") from None
    if expected_type is not rule_type:
        raise ValueError(f"algorithm {algorithm} yields type {expected_type.value} rules, not {rule_type.value}")
    return acquire(fdc, opts, stats)
