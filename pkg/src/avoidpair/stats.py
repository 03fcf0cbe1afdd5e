"""The eight permutation statistics.

All statistics are total on every permutation, including the empty one
(where each is 0).  Non-overlapping counts (`mna`, `mnd`) mean the maximum
number of pairwise index-disjoint adjacent pairs; an ascent at (i, i+1) and
one at (i+1, i+2) overlap.  The left-to-right greedy scan attains that
maximum, this being the unit-interval special case of interval scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .perms import Perm


def asc(perm: Perm) -> int:
    """Number of positions i with perm[i] < perm[i+1].

    >>> asc((3, 4, 1, 5, 2))
    2
    """
    return sum(a < b for a, b in zip(perm, perm[1:]))


def des(perm: Perm) -> int:
    """Number of positions i with perm[i] > perm[i+1].

    >>> des((3, 2, 1, 5, 4))
    3
    """
    return sum(a > b for a, b in zip(perm, perm[1:]))


def lrmax(perm: Perm) -> int:
    """Elements greater than everything to their left."""
    count, best = 0, 0
    for v in perm:
        if v > best:
            count, best = count + 1, v
    return count


def lrmin(perm: Perm) -> int:
    """Elements smaller than everything to their left."""
    count, best = 0, len(perm) + 1
    for v in perm:
        if v < best:
            count, best = count + 1, v
    return count


def rlmax(perm: Perm) -> int:
    """Elements greater than everything to their right."""
    return lrmax(perm[::-1])


def rlmin(perm: Perm) -> int:
    """Elements smaller than everything to their right."""
    return lrmin(perm[::-1])


def mna(perm: Perm) -> int:
    """Maximum number of pairwise index-disjoint ascents (greedy scan).

    >>> mna((3, 4, 1, 5, 2))
    2
    """
    count, i = 0, 0
    while i < len(perm) - 1:
        if perm[i] < perm[i + 1]:
            count += 1
            i += 2
        else:
            i += 1
    return count


def mnd(perm: Perm) -> int:
    """Maximum number of pairwise index-disjoint descents (greedy scan).

    >>> mnd((3, 2, 1, 5, 4))
    2
    """
    count, i = 0, 0
    while i < len(perm) - 1:
        if perm[i] > perm[i + 1]:
            count += 1
            i += 2
        else:
            i += 1
    return count


@dataclass(frozen=True)
class StatVector:
    """All eight statistics of one permutation."""

    asc: int
    des: int
    lrmax: int
    lrmin: int
    rlmax: int
    rlmin: int
    mna: int
    mnd: int

    def to_json_obj(self) -> dict[str, int]:
        return asdict(self)


def stat_vector(perm: Perm) -> StatVector:
    """Bundle the eight statistics.

    >>> stat_vector((3, 4, 1, 5, 2))
    StatVector(asc=2, des=2, lrmax=3, lrmin=2, rlmax=2, rlmin=2, mna=2, mnd=2)
    """
    return StatVector(
        asc=asc(perm),
        des=des(perm),
        lrmax=lrmax(perm),
        lrmin=lrmin(perm),
        rlmax=rlmax(perm),
        rlmin=rlmin(perm),
        mna=mna(perm),
        mnd=mnd(perm),
    )
