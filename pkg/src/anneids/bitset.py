"""Subsets of small index spaces as plain int bitmasks."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bit(i: int) -> int:
    return 1 << i

def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m

def members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def member_list(mask: int) -> list[int]:
    return list(members(mask))

def contains(mask: int, i: int) -> bool:
    return bool(mask >> i & 1)

def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0

def full_mask(n: int) -> int:
    return (1 << n) - 1

def popcount(mask: int) -> int:
    return mask.bit_count()
