"""Brute-force ground truth: avoider counts by walking the pattern-avoidance tree.

Nothing here touches Z-sets or schemes, so it can be used to check both.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import ResourceError
from .perm import Basis, children, contains, normalize_basis

__all__ = [
    "DEFAULT_CAP", "avoider_levels", "avoiders", "brute_avoiders", "brute_sequence", "filter_count",
    "naive_contains", "Comparison", "compare",
]

DEFAULT_CAP = 10


def _guard(n: int, cap: int | None) -> None:
    if cap is not None and n > cap:
        raise ResourceError(f"n={n} exceeds the brute-force cap {cap}; pass cap=None to override")


def avoider_levels(b: Iterable[Sequence[int]], n_max: int,
                   cap: int | None = DEFAULT_CAP) -> Iterator[list[tuple]]:
    """Yield the avoiders of length 0, 1, ..., ``n_max`` in turn.

    Deleting the maximum of an avoider leaves an avoider, so every avoider of
    length ``n`` is a child of one of length ``n - 1``.
    """
    _guard(n_max, cap)
    basis = b if isinstance(b, Basis) else normalize_basis(b)
    level = [()]
    yield level
    for _ in range(n_max):
        level = [tuple(c) for p in level for c in children(p)
                 if not any(contains(c, beta) for beta in basis)]
        yield level


def avoiders(b: Iterable[Sequence[int]], n: int, cap: int | None = DEFAULT_CAP) -> list[tuple]:
    """All length-``n`` avoiders, in avoidance-tree order."""
    for level in avoider_levels(b, n, cap):
        pass
    return level


def brute_sequence(b: Iterable[Sequence[int]], n_max: int, cap: int | None = DEFAULT_CAP) -> list[int]:
    """``[s_0, ..., s_{n_max}]`` from a single walk of the tree."""
    return [len(level) for level in avoider_levels(b, n_max, cap)]


def brute_avoiders(b: Iterable[Sequence[int]], n: int, cap: int | None = DEFAULT_CAP) -> int:
    return len(avoiders(b, n, cap))


def naive_contains(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """Containment by trying every subsequence; slow, for cross-checks only."""
    k = len(pattern)
    ranks = sorted(range(k), key=lambda i: pattern[i])
    for idx in combinations(range(len(p)), k):
        sub = [p[i] for i in idx]
        if sorted(range(k), key=lambda i: sub[i]) == ranks:
            return True
    return False


def filter_count(b: Iterable[Sequence[int]], n: int) -> int:
    """Avoider count by filtering all of ``S_n`` with :func:`naive_contains`."""
    basis = list(b)
    return sum(1 for p in permutations(range(1, n + 1))
               if not any(naive_contains(p, beta) for beta in basis))


@dataclass
class Comparison:
    basis: Basis
    rows: list[tuple[int, int, int]] = field(default_factory=list)  # (n, brute, scheme)

    @property
    def passed(self) -> bool:
        return all(brute == got for _, brute, got in self.rows)

    def lines(self) -> list[str]:
        return [f"{n}: {brute} {got} {'ok' if brute == got else 'MISMATCH'}"
                for n, brute, got in self.rows]


def compare(b: Iterable[Sequence[int]], n_max: int, s, cap: int | None = DEFAULT_CAP) -> Comparison:
    """Tabulate brute-force against scheme counts for ``n = 0..n_max``."""
    from .scheme import eval_sequence

    basis = b if isinstance(b, Basis) else normalize_basis(b)
    brute = brute_sequence(basis, n_max, cap)
    got = eval_sequence(s, n_max)
    return Comparison(basis, [(n, brute[n], got[n]) for n in range(n_max + 1)])
