"""Integer bitsets over a fixed, ordered universe.

Object and attribute sets are plain ``int`` values: bit ``i`` set means the
``i``-th label of the owning context is a member.  Every operator in the
package works on these ints, so intersection, union and inclusion are single
machine-level operations.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence


def from_indices(indices: Iterable[int]) -> int:
    value = 0
    for idx in indices:
        value |= 1 << idx
    return value


def indices(value: int) -> Iterator[int]:
    """Yield member indices in ascending order."""
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def full(size: int) -> int:
    return (1 << size) - 1


def complement(value: int, size: int) -> int:
    return full(size) & ~value


def popcount(value: int) -> int:
    return value.bit_count()


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def sort_key(value: int) -> tuple[int, tuple[int, ...]]:
    """Canonical order: cardinality first, then member indices lexicographically."""
    members = tuple(indices(value))
    return len(members), members


def from_labels(labels: Iterable[str], universe: Sequence[str]) -> int:
    position = {label: i for i, label in enumerate(universe)}
    value = 0
    for label in labels:
        try:
            value |= 1 << position[label]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None
    return value


def to_labels(value: int, universe: Sequence[str]) -> list[str]:
    return [universe[i] for i in indices(value)]


def subsets(value: int) -> Iterator[int]:
    """All subsets of ``value``, the empty set first."""
    sub = 0
    while True:
        yield sub
        if sub == value:
            return
        sub = (sub - value) & value
