"""Text, JSON and DOT renderings of lattices, rules and reductions.

Text output uses separator-free set notation: ``(35,ce)->(235,d1d2)``,
with ``∅`` for the empty set.
"""
from __future__ import annotations

import json
from collections.abc import Sequence
from typing import Any

from . import bitset
from .context import FormalContext, FormalDecisionContext
from .lattice import Concept, ConceptKind, ConceptLattice
from .reduction import DiscernibilityMatrix, ReductionResult
from .rules import DecisionRule, RuleType

EMPTY = "∅"

RULE_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["type", "premise", "conclusion", "necessary"],
        "additionalProperties": False,
        "properties": {
            "type": {"enum": ["I", "II"]},
            "premise": {"$ref": "#/$defs/concept"},
            "conclusion": {"$ref": "#/$defs/concept"},
            "necessary": {"type": "boolean"},
        },
    },
    "$defs": {
        "concept": {
            "type": "object",
            "required": ["extent", "intent"],
            "additionalProperties": False,
            "properties": {
                "extent": {"type": "array", "items": {"type": "string"}},
                "intent": {"type": "array", "items": {"type": "string"}},
            },
        }
    },
}


def set_text(value: int, labels: Sequence[str]) -> str:
    return "".join(bitset.to_labels(value, labels)) or EMPTY


def concept_text(concept: Concept, ctx: FormalContext) -> str:
    return f"({set_text(concept.extent, ctx.objects)},{set_text(concept.intent, ctx.attributes)})"


def rule_text(rule: DecisionRule, fdc: FormalDecisionContext) -> str:
    return f"{concept_text(rule.premise, fdc.conditional)}->{concept_text(rule.conclusion, fdc.decision)}"


def concept_dict(concept: Concept, ctx: FormalContext) -> dict[str, list[str]]:
    return {
        "extent": bitset.to_labels(concept.extent, ctx.objects),
        "intent": bitset.to_labels(concept.intent, ctx.attributes),
    }


def rule_dict(rule: DecisionRule, fdc: FormalDecisionContext, necessary: bool) -> dict[str, Any]:
    return {
        "type": rule.rule_type.value,
        "premise": concept_dict(rule.premise, fdc.conditional),
        "conclusion": concept_dict(rule.conclusion, fdc.decision),
        "necessary": necessary,
    }


def rule_from_dict(data: dict[str, Any], fdc: FormalDecisionContext) -> DecisionRule:
    rule_type = RuleType.parse(data["type"])
    cond, dec = fdc.conditional, fdc.decision
    premise = Concept(
        cond.object_set(data["premise"]["extent"]),
        cond.attribute_set(data["premise"]["intent"]),
        ConceptKind.OBJECT,
    )
    conclusion = Concept(
        dec.object_set(data["conclusion"]["extent"]),
        dec.attribute_set(data["conclusion"]["intent"]),
        rule_type.conclusion_kind,
    )
    return DecisionRule(premise, conclusion, rule_type)


def rules_json(rules: Sequence[DecisionRule], fdc: FormalDecisionContext, necessary: bool) -> str:
    return json.dumps([rule_dict(r, fdc, necessary) for r in rules], ensure_ascii=False, indent=2)


def lattice_dict(lattice: ConceptLattice) -> dict[str, Any]:
    ctx = lattice.context
    return {
        "kind": lattice.kind.value,
        "concepts": [concept_dict(c, ctx) for c in lattice],
        "covers": [list(pair) for pair in lattice.covers],
    }


def lattice_text(lattice: ConceptLattice) -> str:
    return "\n".join(concept_text(c, lattice.context) for c in lattice) + "\n"


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_dot(lattice: ConceptLattice) -> str:
    """Hasse diagram: one node per concept labelled ``extent|intent``, edges child -> parent."""
    ctx = lattice.context
    lines = [f"digraph {_dot_quote(lattice.kind.value)} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(lattice):
        label = f"{set_text(c.extent, ctx.objects)}|{set_text(c.intent, ctx.attributes)}"
        lines.append(f"  c{i} [label={_dot_quote(label)}];")
    for child, parent in lattice.covers:
        lines.append(f"  c{child} -> c{parent};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def reduction_dict(result: ReductionResult, attributes: Sequence[str]) -> dict[str, Any]:
    return {
        "reductions": [bitset.to_labels(r, attributes) for r in result.reductions],
        "core": bitset.to_labels(result.core, attributes),
        "clauses": [bitset.to_labels(c, attributes) for c in result.clauses],
    }


def cnf_text(clauses: Sequence[int], attributes: Sequence[str]) -> str:
    if not clauses:
        return "⊤"
    parts = []
    for clause in clauses:
        names = bitset.to_labels(clause, attributes)
        parts.append(names[0] if len(names) == 1 else "(" + "∨".join(names) + ")")
    return "∧".join(parts)


def matrix_rows(matrix: DiscernibilityMatrix) -> tuple[list[int], list[int]]:
    """Row indices (premise-family concepts) and column indices (all concepts)."""
    lattice = matrix.lattice
    rows = [i for i, c in enumerate(lattice) if c.extent in matrix.premise_extents]
    return rows, list(range(len(lattice)))


def matrix_text(matrix: DiscernibilityMatrix) -> str:
    """Rows are concepts whose extent is in the premise family; columns are all concepts.

    Only columns of covered concepts holding at least one entry are printed.
    """
    lattice = matrix.lattice
    ctx = lattice.context
    rows, cols = matrix_rows(matrix)
    lower = {pair.lower for pair in matrix.entries}
    cols = [j for j in cols if j in lower]
    header = [""] + [concept_text(lattice[j], ctx) for j in cols]
    table = [header]
    for i in rows:
        line = [concept_text(lattice[i], ctx)]
        for j in cols:
            value = matrix.entries.get((i, j), 0)
            line.append(set_text(value, ctx.attributes) if value else "")
        table.append(line)
    widths = [max(len(r[k]) for r in table) for k in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table
    ) + "\n"
