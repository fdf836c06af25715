"""Gap vectors and exhaustive enumeration of the sets ``Z(B; pi; g)``.

``Z(B; pi; g)`` holds the B-avoiders of length ``k + |g|`` whose ``k`` smallest
values sit in the slots fixed by the gap vector ``g`` and form the pattern
``pi``; ``g[j]`` counts the larger, untracked entries placed in gap ``j``.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError
from .perm import Basis, Perm, avoids_all, contains_ending_at_last, normalize_basis

GapVector = tuple

__all__ = [
    "GapVector", "gap_delete", "gap_split", "gap_text", "zset_members", "zset_count",
    "zset_nonempty", "vectors_up_to", "clear_cache", "cache_size", "as_basis",
]

_COUNTS: dict[tuple, int] = {}


def as_basis(b: Iterable[Sequence[int]]) -> Basis:
    return b if isinstance(b, Basis) else normalize_basis(b)


def gap_text(g: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in g) + ")"


def gap_delete(g: Sequence[int], r: int) -> GapVector:
    """Merge components ``r`` and ``r+1`` (1-based) by addition."""
    if not 1 <= r <= len(g) - 1:
        raise InvalidInputError(f"cannot merge gaps {r},{r + 1} of a length-{len(g)} vector")
    g = tuple(g)
    return g[:r - 1] + (g[r - 1] + g[r],) + g[r + 1:]


def gap_split(g: Sequence[int], j: int, i: int) -> GapVector:
    """Spend one untracked entry of gap ``j``: it becomes the gaps ``(i, g_j - 1 - i)``."""
    if not 1 <= j <= len(g):
        raise InvalidInputError(f"gap index {j} out of range for length {len(g)}")
    gj = g[j - 1]
    if gj == 0:
        raise InvalidInputError(f"gap {j} of {gap_text(g)} is empty")
    if not 0 <= i <= gj - 1:
        raise InvalidInputError(f"split point {i} out of range 0..{gj - 1}")
    g = tuple(g)
    return g[:j - 1] + (i, gj - 1 - i) + g[j:]


def vectors_up_to(dim: int, max_norm: int) -> Iterator[GapVector]:
    """All vectors of ``dim`` naturals with norm at most ``max_norm``, graded then lex."""
    for norm in range(max_norm + 1):
        yield from _compositions(dim, norm)


def _compositions(dim: int, total: int) -> Iterator[GapVector]:
    if dim == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(dim - 1, total - first):
            yield (first,) + rest


def _check(pi: Sequence[int], g: Sequence[int]) -> None:
    if len(g) != len(pi) + 1:
        raise InvalidInputError(
            f"gap vector {gap_text(g)} has length {len(g)}, expected {len(pi) + 1}")
    if any(x < 0 for x in g):
        raise InvalidInputError(f"negative gap in {gap_text(g)}")


def _layout(pi: Sequence[int], g: Sequence[int]) -> list:
    # None marks a cell that receives one of the untracked values k+1..n
    cells: list = []
    for j, gj in enumerate(g):
        cells.extend([None] * gj)
        if j < len(pi):
            cells.append(pi[j])
    return cells


def _search(basis: Basis, pi: Sequence[int], g: Sequence[int], collect: list | None) -> int:
    cells = _layout(pi, g)
    k = len(pi)
    n = len(cells)
    patterns = tuple(tuple(b) for b in basis)
    used = [False] * (n + 1)
    prefix: list[int] = []

    def blocked() -> bool:
        for b in patterns:
            if contains_ending_at_last(prefix, b):
                return True
        return False

    def rec(pos: int) -> int:
        if pos == n:
            if collect is not None:
                collect.append(Perm._trusted(tuple(prefix)))
            return 1
        cell = cells[pos]
        total = 0
        if cell is not None:
            prefix.append(cell)
            if not blocked():
                total = rec(pos + 1)
            prefix.pop()
            return total
        for v in range(k + 1, n + 1):
            if used[v]:
                continue
            used[v] = True
            prefix.append(v)
            if not blocked():
                total += rec(pos + 1)
            prefix.pop()
            used[v] = False
        return total

    return rec(0)


def zset_members(b: Iterable[Sequence[int]], pi: Sequence[int], g: Sequence[int]) -> list[Perm]:
    """The members of ``Z(b; pi; g)`` in lexicographic order."""
    _check(pi, g)
    basis = as_basis(b)
    if not avoids_all(pi, basis):
        return []
    found: list[Perm] = []
    _search(basis, tuple(pi), tuple(g), found)
    return found


def zset_count(b: Iterable[Sequence[int]], pi: Sequence[int], g: Sequence[int]) -> int:
    """``|Z(b; pi; g)|``, memoized on ``(basis, pi, g)``."""
    _check(pi, g)
    basis = as_basis(b)
    key = (basis, tuple(pi), tuple(g))
    hit = _COUNTS.get(key)
    if hit is not None:
        return hit
    if not avoids_all(pi, basis):
        count = 0
    else:
        count = _search(basis, key[1], key[2], None)
    _COUNTS[key] = count
    return count


def zset_nonempty(b: Iterable[Sequence[int]], pi: Sequence[int], g: Sequence[int]) -> bool:
    return zset_count(b, pi, g) > 0


def clear_cache() -> None:
    _COUNTS.clear()


def cache_size() -> int:
    return len(_COUNTS)
