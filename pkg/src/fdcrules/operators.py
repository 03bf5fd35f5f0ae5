"""Derivation operators of a formal context.

Object-side operators take an object bitset and return an attribute bitset;
attribute-side operators go the other way.  Subscripted variants (over M, N or
a restricted E) are obtained by passing the corresponding context.

    up(O)            O↑  = {a | every x in O has a}
    down(C)          C↓  = {x | x has every a in C}
    diamond_obj(O)   O◇  = {a | a↓ ∩ O ≠ ∅}
    box_obj(O)       O□  = {a | a↓ ⊆ O}
    diamond_attr(C)  C◇  = {x | x↑ ∩ C ≠ ∅}
    box_attr(C)      C□  = {x | x↑ ⊆ C}
"""
from __future__ import annotations

from .context import FormalContext


def up(ctx: FormalContext, objs: int) -> int:
    result = ctx.all_attributes
    rows = ctx.rows
    while objs and result:
        low = objs & -objs
        result &= rows[low.bit_length() - 1]
        objs ^= low
    return result


def down(ctx: FormalContext, attrs: int) -> int:
    result = ctx.all_objects
    cols = ctx.columns
    while attrs and result:
        low = attrs & -attrs
        result &= cols[low.bit_length() - 1]
        attrs ^= low
    return result


def diamond_obj(ctx: FormalContext, objs: int) -> int:
    result = 0
    rows = ctx.rows
    while objs:
        low = objs & -objs
        result |= rows[low.bit_length() - 1]
        objs ^= low
    return result


def diamond_attr(ctx: FormalContext, attrs: int) -> int:
    result = 0
    cols = ctx.columns
    while attrs:
        low = attrs & -attrs
        result |= cols[low.bit_length() - 1]
        attrs ^= low
    return result


def box_obj(ctx: FormalContext, objs: int) -> int:
    result = 0
    outside = ~objs
    for j, col in enumerate(ctx.columns):
        if not col & outside:
            result |= 1 << j
    return result


def box_attr(ctx: FormalContext, attrs: int) -> int:
    result = 0
    outside = ~attrs
    for i, row in enumerate(ctx.rows):
        if not row & outside:
            result |= 1 << i
    return result
