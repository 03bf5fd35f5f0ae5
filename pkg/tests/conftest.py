import re
from pathlib import Path

import pytest

from fdcrules import bitset
from fdcrules.context import FormalContext, FormalDecisionContext, parse_decision_context
from fdcrules.lattice import Concept, ConceptKind

DATA = Path(__file__).resolve().parent.parent / "data"
TABLE1 = DATA / "table1.csv"

_TOKEN = re.compile(r"d\d|[a-zA-Z0-9]")


def labels(text: str) -> list[str]:
    """Split separator-free set notation: '235' -> 2,3,5; 'd1d2' -> d1,d2."""
    if text in ("", "∅"):
        return []
    return _TOKEN.findall(text)


def objs(ctx: FormalContext, text: str) -> int:
    if text == "U":
        return ctx.all_objects
    return ctx.object_set(labels(text))


def attrs(ctx: FormalContext, text: str) -> int:
    if text in ("M", "N"):
        return ctx.all_attributes
    return ctx.attribute_set(labels(text))


def concept(ctx: FormalContext, extent: str, intent: str, kind: ConceptKind) -> Concept:
    return Concept(objs(ctx, extent), attrs(ctx, intent), kind)


def fmt(value: int, universe) -> str:
    return "".join(bitset.to_labels(value, universe)) or "∅"


@pytest.fixture(scope="session")
def table1_text() -> str:
    return TABLE1.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def t1(table1_text) -> FormalDecisionContext:
    return parse_decision_context(table1_text, ["d1", "d2", "d3"])
