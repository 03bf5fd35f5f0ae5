"""Formal, object-oriented and property-oriented concept lattices.

Concepts are enumerated with Close-by-One over a closure operator on one
side of the context:

* formal concepts:            extents closed under ``O ↦ O↑↓`` (or intents under ``C ↦ C↓↑``)
* property-oriented concepts: extents closed under ``O ↦ O◇□``
* object-oriented concepts:   intents closed under ``C ↦ C◇□``

A second construction goes through the negated context ``(U, M, ¬I)``, whose
formal concepts correspond one-to-one with both modal lattices of ``(U, M, I)``:
``(Y, A) ∈ L(¬I)`` gives ``(U−Y, A) ∈ L_O(I)`` and ``(Y, M−A) ∈ L_P(I)``.
The two routes are kept independent so they can check each other.
"""
from __future__ import annotations

import enum
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal, NamedTuple

from . import bitset
from .context import FormalContext
from .operators import box_attr, box_obj, diamond_attr, diamond_obj, down, up


class ConceptKind(enum.Enum):
    FORMAL = "formal"
    OBJECT = "object-oriented"
    PROPERTY = "property-oriented"

    @classmethod
    def parse(cls, name: str | ConceptKind) -> ConceptKind:
        if isinstance(name, ConceptKind):
            return name
        aliases = {"formal": cls.FORMAL, "object": cls.OBJECT, "property": cls.PROPERTY}
        try:
            return aliases.get(name) or cls(name)
        except ValueError:
            raise ValueError(f"unknown concept kind {name!r}") from None


class Concept(NamedTuple):
    extent: int
    intent: int
    kind: ConceptKind


Method = Literal["direct", "complement"]


def concept_of_extent(ctx: FormalContext, kind: ConceptKind, objs: int) -> Concept:
    """The concept of ``kind`` generated by an arbitrary object set."""
    if kind is ConceptKind.FORMAL:
        intent = up(ctx, objs)
        return Concept(down(ctx, intent), intent, kind)
    if kind is ConceptKind.OBJECT:
        intent = box_obj(ctx, objs)
        return Concept(diamond_attr(ctx, intent), intent, kind)
    intent = diamond_obj(ctx, objs)
    return Concept(box_attr(ctx, intent), intent, kind)


def concept_of_intent(ctx: FormalContext, kind: ConceptKind, attrs: int) -> Concept:
    if kind is ConceptKind.FORMAL:
        extent = down(ctx, attrs)
        return Concept(extent, up(ctx, extent), kind)
    if kind is ConceptKind.OBJECT:
        extent = diamond_attr(ctx, attrs)
        return Concept(extent, box_obj(ctx, extent), kind)
    extent = box_attr(ctx, attrs)
    return Concept(extent, diamond_obj(ctx, extent), kind)


def is_concept(ctx: FormalContext, concept: Concept) -> bool:
    return concept_of_extent(ctx, concept.kind, concept.extent) == concept


def close_by_one(size: int, closure: Callable[[int], int]) -> Iterator[int]:
    """Yield every closed subset of ``range(size)`` exactly once.

    ``closure`` must be extensive, monotone and idempotent.  The canonicity
    test rejects a closure ``B`` of ``A ∪ {j}`` when it adds an element
    below ``j`` that ``A`` lacks.
    """
    start = closure(0)
    stack = [(start, 0)]
    while stack:
        closed, first = stack.pop()
        yield closed
        children = []
        for j in range(first, size):
            bit = 1 << j
            if closed & bit:
                continue
            candidate = closure(closed | bit)
            below = bit - 1
            if candidate & below == closed & below:
                children.append((candidate, j + 1))
        stack.extend(reversed(children))


def _direct(ctx: FormalContext, kind: ConceptKind) -> Iterator[Concept]:
    if kind is ConceptKind.FORMAL:
        if ctx.n_objects <= ctx.n_attributes:
            for extent in close_by_one(ctx.n_objects, lambda o: down(ctx, up(ctx, o))):
                yield Concept(extent, up(ctx, extent), kind)
        else:
            for intent in close_by_one(ctx.n_attributes, lambda c: up(ctx, down(ctx, c))):
                yield Concept(down(ctx, intent), intent, kind)
    elif kind is ConceptKind.OBJECT:
        for intent in close_by_one(ctx.n_attributes, lambda c: box_obj(ctx, diamond_attr(ctx, c))):
            yield Concept(diamond_attr(ctx, intent), intent, kind)
    else:
        for extent in close_by_one(ctx.n_objects, lambda o: box_attr(ctx, diamond_obj(ctx, o))):
            yield Concept(extent, diamond_obj(ctx, extent), kind)


def _via_complement(ctx: FormalContext, kind: ConceptKind) -> Iterator[Concept]:
    neg = ctx.negated()
    all_objs, all_attrs = ctx.all_objects, ctx.all_attributes
    if kind is ConceptKind.FORMAL:
        # (X, A) ∈ L_O(¬I)  <=>  (U−X, A) ∈ L(I)
        for c in _direct(neg, ConceptKind.OBJECT):
            yield Concept(all_objs & ~c.extent, c.intent, kind)
    elif kind is ConceptKind.OBJECT:
        for c in _direct(neg, ConceptKind.FORMAL):
            yield Concept(all_objs & ~c.extent, c.intent, kind)
    else:
        for c in _direct(neg, ConceptKind.FORMAL):
            yield Concept(c.extent, all_attrs & ~c.intent, kind)


def _upper_neighbours(ctx: FormalContext, concept: Concept) -> list[int]:
    """Extents of the upper covers of ``concept`` (Lindig-style neighbour search)."""
    kind = concept.kind
    if kind is ConceptKind.OBJECT:
        # lattice order agrees with intent inclusion; intents are ◇□-closed
        base, size = concept.intent, ctx.n_attributes

        def close(c: int) -> int:
            return box_obj(ctx, diamond_attr(ctx, c))

    else:
        base, size = concept.extent, ctx.n_objects
        if kind is ConceptKind.FORMAL:

            def close(o: int) -> int:
                return down(ctx, up(ctx, o))

        else:

            def close(o: int) -> int:
                return box_attr(ctx, diamond_obj(ctx, o))

    candidates = set()
    for j in range(size):
        bit = 1 << j
        if not base & bit:
            candidates.add(close(base | bit))
    minimal = [c for c in candidates if not any(d != c and d & ~c == 0 for d in candidates)]
    if kind is ConceptKind.OBJECT:
        return [diamond_attr(ctx, c) for c in minimal]
    return minimal


@dataclass(frozen=True)
class ConceptLattice:
    """All concepts of one kind, sorted by extent (cardinality, then member indices)."""

    context: FormalContext
    kind: ConceptKind
    concepts: tuple[Concept, ...]
    _index: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {c.extent: i for i, c in enumerate(self.concepts)})

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[Concept]:
        return iter(self.concepts)

    def __getitem__(self, i: int) -> Concept:
        return self.concepts[i]

    def index_of(self, extent: int) -> int:
        return self._index[extent]

    def get(self, extent: int) -> Concept | None:
        i = self._index.get(extent)
        return None if i is None else self.concepts[i]

    def __contains__(self, item: object) -> bool:
        if isinstance(item, Concept):
            i = self._index.get(item.extent)
            return i is not None and self.concepts[i] == item
        return False

    @property
    def extents(self) -> list[int]:
        return [c.extent for c in self.concepts]

    @property
    def bottom(self) -> Concept:
        return self.concepts[0]

    @property
    def top(self) -> Concept:
        return self.concepts[-1]

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """(child, parent) index pairs of the cover relation, sorted."""
        pairs = []
        for i, c in enumerate(self.concepts):
            for ext in _upper_neighbours(self.context, c):
                pairs.append((i, self._index[ext]))
        return tuple(sorted(pairs))

    @cached_property
    def lower_covers(self) -> dict[int, tuple[int, ...]]:
        children: dict[int, list[int]] = {i: [] for i in range(len(self.concepts))}
        for child, parent in self.covers:
            children[parent].append(child)
        return {k: tuple(v) for k, v in children.items()}


def build_lattice(
    ctx: FormalContext, kind: ConceptKind | str, method: Method = "direct"
) -> ConceptLattice:
    kind = ConceptKind.parse(kind)
    if method == "direct":
        found = _direct(ctx, kind)
    elif method == "complement":
        found = _via_complement(ctx, kind)
    else:
        raise ValueError(f"unknown construction method {method!r}")
    concepts = sorted(found, key=lambda c: bitset.sort_key(c.extent))
    return ConceptLattice(ctx, kind, tuple(concepts))


def cover_relation(lattice: ConceptLattice) -> list[tuple[int, int]]:
    return list(lattice.covers)


def extents(lattice: ConceptLattice) -> list[int]:
    return lattice.extents


def meet(ctx: FormalContext, a: Concept, b: Concept) -> Concept:
    kind = a.kind
    if kind is ConceptKind.FORMAL:
        return Concept(a.extent & b.extent, up(ctx, down(ctx, a.intent | b.intent)), kind)
    if kind is ConceptKind.PROPERTY:
        return Concept(a.extent & b.extent, diamond_obj(ctx, box_attr(ctx, a.intent & b.intent)), kind)
    return Concept(diamond_attr(ctx, box_obj(ctx, a.extent & b.extent)), a.intent & b.intent, kind)


def join(ctx: FormalContext, a: Concept, b: Concept) -> Concept:
    kind = a.kind
    if kind is ConceptKind.FORMAL:
        return Concept(down(ctx, up(ctx, a.extent | b.extent)), a.intent & b.intent, kind)
    if kind is ConceptKind.PROPERTY:
        return Concept(box_attr(ctx, diamond_obj(ctx, a.extent | b.extent)), a.intent | b.intent, kind)
    return Concept(a.extent | b.extent, box_obj(ctx, diamond_attr(ctx, a.intent | b.intent)), kind)
