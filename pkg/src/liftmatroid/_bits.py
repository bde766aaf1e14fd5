"""Integer-backed bitset helpers shared by the graph and matroid code."""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def sort_key(mask: int) -> tuple[int, ...]:
    # lexicographic order on the sorted element tuple
    return tuple(bits(mask))


def minimal_sets(sets: Iterable[int]) -> list[int]:
    """Inclusion-minimal nonzero members of ``sets`` (duplicates dropped)."""
    out: list[int] = []
    for s in sorted({s for s in sets if s}, key=popcount):
        if not any(t & s == t for t in out):
            out.append(s)
    return out
