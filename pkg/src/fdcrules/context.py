"""Formal contexts, formal decision contexts, and their file formats."""
from __future__ import annotations

import csv
import io
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Literal

from . import bitset

TRUE_TOKENS = frozenset({"1", "x", "X", "×"})
FALSE_TOKENS = frozenset({"0", ""})

Format = Literal["csv", "cxt"]


class ContextError(ValueError):
    """Invalid context data or an invalid transformation request."""


class ParseError(ContextError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.line = line
        self.column = column


def _check_labels(labels: Sequence[str], what: str) -> None:
    if not labels:
        raise ContextError(f"context needs at least one {what}")
    seen = set()
    for label in labels:
        if label in seen:
            raise ContextError(f"duplicate {what} label {label!r}")
        seen.add(label)


@dataclass(frozen=True)
class FormalContext:
    """Objects, attributes and a binary incidence relation.

    ``rows[i]`` is the attribute bitset of object ``i`` (its ``x↑``);
    ``columns[j]`` is the object bitset of attribute ``j`` (its ``a↓``).
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    rows: tuple[int, ...]
    columns: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        object.__setattr__(self, "rows", tuple(self.rows))
        _check_labels(self.objects, "object")
        _check_labels(self.attributes, "attribute")
        if len(self.rows) != len(self.objects):
            raise ContextError(
                f"{len(self.rows)} incidence rows for {len(self.objects)} objects"
            )
        limit = bitset.full(len(self.attributes))
        for label, row in zip(self.objects, self.rows):
            if row & ~limit:
                raise ContextError(f"row of {label!r} references attributes beyond the header")
        columns = []
        for j in range(len(self.attributes)):
            bit = 1 << j
            columns.append(bitset.from_indices(i for i, row in enumerate(self.rows) if row & bit))
        object.__setattr__(self, "columns", tuple(columns))

    @classmethod
    def from_matrix(
        cls,
        objects: Sequence[str],
        attributes: Sequence[str],
        incidence: Sequence[Sequence[bool]],
    ) -> FormalContext:
        if len(incidence) != len(objects):
            raise ContextError("incidence row count does not match objects")
        rows = []
        for label, row in zip(objects, incidence):
            if len(row) != len(attributes):
                raise ContextError(f"incidence row of {label!r} has wrong length")
            rows.append(bitset.from_indices(j for j, cell in enumerate(row) if cell))
        return cls(tuple(objects), tuple(attributes), tuple(rows))

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    @property
    def all_objects(self) -> int:
        return bitset.full(len(self.objects))

    @property
    def all_attributes(self) -> int:
        return bitset.full(len(self.attributes))

    @property
    def incidence(self) -> tuple[tuple[bool, ...], ...]:
        n = len(self.attributes)
        return tuple(tuple(bool(row >> j & 1) for j in range(n)) for row in self.rows)

    def negated(self) -> FormalContext:
        """The same context with every incidence cell flipped."""
        limit = self.all_attributes
        return FormalContext(self.objects, self.attributes, tuple(limit & ~r for r in self.rows))

    def restricted(self, attrs: int) -> FormalContext:
        """Keep only the attributes in ``attrs``, preserving their order."""
        keep = list(bitset.indices(attrs))
        rows = tuple(
            bitset.from_indices(k for k, j in enumerate(keep) if row >> j & 1) for row in self.rows
        )
        return FormalContext(self.objects, tuple(self.attributes[j] for j in keep), rows)

    def object_set(self, labels: Iterable[str]) -> int:
        return bitset.from_labels(labels, self.objects)

    def attribute_set(self, labels: Iterable[str]) -> int:
        return bitset.from_labels(labels, self.attributes)


@dataclass(frozen=True)
class FormalDecisionContext:
    """Conditional context (U, M, I) and decision context (U, N, J) over shared objects."""

    conditional: FormalContext
    decision: FormalContext

    def __post_init__(self) -> None:
        if self.conditional.objects != self.decision.objects:
            raise ContextError("conditional and decision contexts must share the object list")
        overlap = set(self.conditional.attributes) & set(self.decision.attributes)
        if overlap:
            raise ContextError(
                f"conditional and decision attributes overlap: {sorted(overlap)}"
            )

    @property
    def universe(self) -> tuple[str, ...]:
        return self.conditional.objects


@dataclass(frozen=True)
class CanonicityReport:
    violations: tuple[tuple[str, str], ...] = ()

    @property
    def canonical(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# Parsing and serialization


def _cell(token: str, line: int, column: int) -> bool:
    token = token.strip()
    if token in TRUE_TOKENS:
        return True
    if token in FALSE_TOKENS:
        return False
    raise ParseError(f"unknown cell token {token!r}", line, column)


def _parse_csv(text: str) -> FormalContext:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input")
    header_line = lines[0]
    delimiter = ";" if header_line.count(";") >= header_line.count(",") else ","
    reader = csv.reader(io.StringIO("\n".join(lines)), delimiter=delimiter)
    records = list(reader)
    header = [h.strip() for h in records[0]]
    attributes = header[1:]
    if not attributes:
        raise ParseError("header row has no attribute labels", 1)
    for col, label in enumerate(attributes, start=2):
        if not label:
            raise ParseError("empty attribute label", 1, col)
        if label in attributes[: col - 2]:
            raise ParseError(f"duplicate attribute label {label!r}", 1, col)
    objects: list[str] = []
    matrix: list[list[bool]] = []
    for lineno, record in enumerate(records[1:], start=2):
        if not any(cell.strip() for cell in record):
            continue
        if len(record) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, found {len(record)}", lineno
            )
        label = record[0].strip()
        if not label:
            raise ParseError("empty object label", lineno, 1)
        if label in objects:
            raise ParseError(f"duplicate object label {label!r}", lineno, 1)
        objects.append(label)
        matrix.append([_cell(tok, lineno, col) for col, tok in enumerate(record[1:], start=2)])
    if not objects:
        raise ParseError("no object rows")
    return FormalContext.from_matrix(objects, attributes, matrix)


def _parse_cxt(text: str) -> FormalContext:
    lines = [ln.rstrip("\r") for ln in text.splitlines()]
    pos = 0

    def next_nonblank() -> tuple[int, str]:
        nonlocal pos
        while pos < len(lines) and not lines[pos].strip():
            pos += 1
        if pos >= len(lines):
            raise ParseError("unexpected end of input", pos)
        pos += 1
        return pos, lines[pos - 1].strip()

    lineno, magic = next_nonblank()
    if magic != "B":
        raise ParseError("missing 'B' magic line", lineno)
    lineno, token = next_nonblank()
    if not token.isdigit():
        # optional context name
        lineno, token = next_nonblank()
    try:
        n_obj = int(token)
        lineno, token = next_nonblank()
        n_att = int(token)
    except ValueError:
        raise ParseError(f"expected a count, found {token!r}", lineno) from None
    labels = []
    for _ in range(n_obj + n_att):
        _, label = next_nonblank()
        labels.append(label)
    objects, attributes = labels[:n_obj], labels[n_obj:]
    matrix = []
    for _ in range(n_obj):
        lineno, row = next_nonblank()
        if len(row) != n_att:
            raise ParseError(f"expected {n_att} cells, found {len(row)}", lineno)
        cells = []
        for col, ch in enumerate(row, start=1):
            if ch in "Xx":
                cells.append(True)
            elif ch == ".":
                cells.append(False)
            else:
                raise ParseError(f"unknown cell token {ch!r}", lineno, col)
        matrix.append(cells)
    try:
        return FormalContext.from_matrix(objects, attributes, matrix)
    except ContextError as exc:
        raise ParseError(str(exc)) from None


def parse_context(text: str, format: Format = "csv") -> FormalContext:
    if format == "csv":
        ctx = _parse_csv(text)
    elif format == "cxt":
        ctx = _parse_cxt(text)
    else:
        raise ValueError(f"unknown context format {format!r}")
    return ctx


def parse_decision_context(
    text: str, decision_attrs: Iterable[str], format: Format = "csv"
) -> FormalDecisionContext:
    """Split one table into conditional and decision parts by attribute label."""
    whole = parse_context(text, format)
    return split_decision(whole, decision_attrs)


def split_decision(whole: FormalContext, decision_attrs: Iterable[str]) -> FormalDecisionContext:
    wanted = list(decision_attrs)
    if not wanted:
        raise ContextError("no decision attributes given")
    unknown = [a for a in wanted if a not in whole.attributes]
    if unknown:
        raise ContextError(f"unknown decision attributes: {', '.join(unknown)}")
    dec = whole.attribute_set(wanted)
    cond = whole.all_attributes & ~dec
    if not cond:
        raise ContextError("decision attributes cover the whole header; no conditional attributes left")
    return FormalDecisionContext(whole.restricted(cond), whole.restricted(dec))


def merged(fdc: FormalDecisionContext) -> FormalContext:
    """Conditional columns followed by decision columns, as one table."""
    shift = fdc.conditional.n_attributes
    rows = tuple(c | d << shift for c, d in zip(fdc.conditional.rows, fdc.decision.rows))
    return FormalContext(
        fdc.universe, fdc.conditional.attributes + fdc.decision.attributes, rows
    )


def to_csv(ctx: FormalContext | FormalDecisionContext, delimiter: str = ";") -> str:
    if isinstance(ctx, FormalDecisionContext):
        ctx = merged(ctx)
    out = io.StringIO()
    writer = csv.writer(out, delimiter=delimiter, lineterminator="\n")
    writer.writerow(["", *ctx.attributes])
    for label, row in zip(ctx.objects, ctx.incidence):
        writer.writerow([label, *("1" if cell else "0" for cell in row)])
    return out.getvalue()


def to_cxt(ctx: FormalContext | FormalDecisionContext) -> str:
    if isinstance(ctx, FormalDecisionContext):
        ctx = merged(ctx)
    lines = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    lines += ctx.objects
    lines += ctx.attributes
    lines += ["".join("X" if cell else "." for cell in row) for row in ctx.incidence]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Transformations


def complement_decision(fdc: FormalDecisionContext) -> FormalDecisionContext:
    """(U, M, I, N, J) -> (U, M, I, N, ¬J)."""
    return FormalDecisionContext(fdc.conditional, fdc.decision.negated())


def restrict_conditional(fdc: FormalDecisionContext, attrs: int) -> FormalDecisionContext:
    """The subcontext (U, E, I_E, N, J) for an attribute bitset ``E`` over M."""
    if attrs & ~fdc.conditional.all_attributes:
        raise ContextError("attribute set is not a subset of the conditional attributes")
    if not attrs:
        raise ContextError("cannot restrict to an empty attribute set")
    if attrs == fdc.conditional.all_attributes:
        return fdc
    return FormalDecisionContext(fdc.conditional.restricted(attrs), fdc.decision)


def check_canonical(ctx: FormalContext) -> CanonicityReport:
    violations = []
    all_attrs, all_objs = ctx.all_attributes, ctx.all_objects
    for label, row in zip(ctx.objects, ctx.rows):
        if row == 0:
            violations.append(("empty-row", label))
        elif row == all_attrs:
            violations.append(("full-row", label))
    for label, col in zip(ctx.attributes, ctx.columns):
        if col == 0:
            violations.append(("empty-column", label))
        elif col == all_objs:
            violations.append(("full-column", label))
    return CanonicityReport(tuple(violations))


def random_context(
    n_objects: int, n_attributes: int, density: float, rng: random.Random, attr_prefix: str = "m"
) -> FormalContext:
    objects = [str(i + 1) for i in range(n_objects)]
    attributes = [f"{attr_prefix}{j + 1}" for j in range(n_attributes)]
    matrix = [[rng.random() < density for _ in range(n_attributes)] for _ in range(n_objects)]
    return FormalContext.from_matrix(objects, attributes, matrix)


def random_fdc(
    n_objects: int, n_cond: int, n_dec: int, density: float, seed: int
) -> FormalDecisionContext:
    """Random decision context; cells are i.i.d. Bernoulli(density).

    The stream is ``random.Random(seed)`` (Mersenne Twister), whose ``random()``
    output is reproducible across platforms.  Conditional cells are drawn
    row-major first, then decision cells.
    """
    if min(n_objects, n_cond, n_dec) < 1:
        raise ContextError("context sizes must be at least 1")
    if not 0.0 < density < 1.0:
        raise ContextError("density must lie strictly between 0 and 1")
    rng = random.Random(seed)
    cond = random_context(n_objects, n_cond, density, rng, "m")
    dec = random_context(n_objects, n_dec, density, rng, "d")
    return FormalDecisionContext(cond, dec)
