"""Permutations, pattern containment and the handful of constructions built on them.

Permutations are one-line tuples of the values ``1..k``; positions are 1-based in
every public function (``delete_at(p, 1)`` removes the first entry).  The
:class:`Perm` and :class:`Basis` wrappers are plain tuples underneath, so they
hash and compare like tuples and can be used directly as cache keys.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidInputError

__all__ = [
    "Perm", "Basis", "EMPTY",
    "standardize", "contains", "contains_ending_at_last", "avoids_all",
    "delete_at", "children", "symmetry", "direct_sum", "skew_sum", "perm_sum",
    "is_simple", "normalize_basis", "parse_perm", "parse_basis", "perm_text",
]


class Perm(tuple):
    """A permutation of ``1..k`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "Perm":
        if isinstance(values, str):
            return parse_perm(values)
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInputError(f"not a permutation of 1..{len(values)}: {values}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: tuple) -> "Perm":
        return super().__new__(cls, values)

    def __str__(self) -> str:
        return perm_text(self)

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"


EMPTY = Perm(())


class Basis(tuple):
    """A finite antichain of non-empty patterns, sorted by (length, values)."""

    __slots__ = ()

    def __new__(cls, patterns: Iterable[Sequence[int]] | str = ()) -> "Basis":
        if isinstance(patterns, str):
            return parse_basis(patterns)
        return normalize_basis(patterns)

    @property
    def max_length(self) -> int:
        """Length of the longest pattern (0 for the empty basis)."""
        return max((len(b) for b in self), default=0)

    def __str__(self) -> str:
        return ",".join(perm_text(b) for b in self) if self else "∅"

    def __repr__(self) -> str:
        return f"Basis({str(self)!r})"


def perm_text(p: Sequence[int]) -> str:
    if not p:
        return "∅"
    if max(p) <= 9:
        return "".join(str(v) for v in p)
    return " ".join(str(v) for v in p)


def parse_perm(text: str) -> Perm:
    """Parse ``"51342"`` or ``"4 6 7 1 8 2 3 5"``; ``"∅"`` or ``""`` is the empty permutation."""
    text = text.strip()
    if text in ("", "∅", "()", "e"):
        return EMPTY
    if any(ch.isspace() for ch in text):
        tokens = text.split()
    else:
        tokens = list(text)
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise InvalidInputError(f"unparseable permutation: {text!r}") from None
    return Perm(values)


def parse_basis(text: str) -> Basis:
    """Parse a comma separated list of permutations, e.g. ``"1342,1432"``."""
    text = text.strip()
    if text in ("", "∅", "{}"):
        return normalize_basis(())
    return normalize_basis(parse_perm(part) for part in text.split(","))


def standardize(word: Sequence[int]) -> Perm:
    """Return the permutation order isomorphic to ``word``.

    >>> standardize((9, 1, 6, 7, 2))
    Perm('51342')
    """
    if len(set(word)) != len(word):
        raise InvalidInputError(f"entries must be distinct: {tuple(word)}")
    return Perm._trusted(_st(word))


def _st(word: Sequence[int]) -> tuple:
    rank = {v: i for i, v in enumerate(sorted(word), 1)}
    return tuple(rank[v] for v in word)


@lru_cache(maxsize=None)
def _plan(pattern: tuple) -> tuple:
    # Indices are matched right to left; for index t the plan stores the
    # already-matched indices holding the closest smaller / larger values.
    plan = []
    for t in range(len(pattern)):
        lo = hi = -1
        for u in range(t + 1, len(pattern)):
            if pattern[u] < pattern[t] and (lo < 0 or pattern[u] > pattern[lo]):
                lo = u
            if pattern[u] > pattern[t] and (hi < 0 or pattern[u] < pattern[hi]):
                hi = u
        plan.append((lo, hi))
    return tuple(plan)


def _embed(host, plan, t, limit, chosen) -> bool:
    lo, hi = plan[t]
    for q in range(limit - 1, t - 1, -1):
        v = host[q]
        if lo >= 0 and v < chosen[lo]:
            continue
        if hi >= 0 and v > chosen[hi]:
            continue
        if t == 0:
            return True
        chosen[t] = v
        if _embed(host, plan, t - 1, q, chosen):
            return True
    return False


def contains(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``p`` is order isomorphic to ``pattern``."""
    size = len(pattern)
    if size == 0:
        return True
    if size > len(p):
        return False
    pattern = tuple(pattern)
    return _embed(p, _plan(pattern), size - 1, len(p), [0] * size)


def contains_ending_at_last(host: Sequence[int], pattern: tuple) -> bool:
    """True iff ``host`` has an occurrence of ``pattern`` that uses its last entry.

    ``host`` may be any sequence of distinct numbers; only relative order matters.
    """
    size = len(pattern)
    if size == 0 or size > len(host):
        return size == 0
    if size == 1:
        return True
    chosen = [0] * size
    chosen[size - 1] = host[-1]
    return _embed(host, _plan(pattern), size - 2, len(host) - 1, chosen)


def avoids_all(p: Sequence[int], basis: Iterable[Sequence[int]]) -> bool:
    return not any(contains(p, b) for b in basis)


def delete_at(p: Sequence[int], r: int) -> Perm:
    """Remove the entry at (1-based) position ``r`` and standardize."""
    if not 1 <= r <= len(p):
        raise InvalidInputError(f"position {r} out of range for length {len(p)}")
    removed = p[r - 1]
    return Perm._trusted(tuple(v - 1 if v > removed else v for i, v in enumerate(p) if i != r - 1))


def children(p: Sequence[int]) -> list[Perm]:
    """All ``len(p)+1`` insertions of a new maximum, ordered by insertion position."""
    p = tuple(p)
    top = (len(p) + 1,)
    return [Perm._trusted(p[:j] + top + p[j:]) for j in range(len(p) + 1)]


def symmetry(p: Sequence[int], op: str) -> Perm:
    """Apply ``"reverse"``, ``"complement"`` or ``"inverse"``."""
    k = len(p)
    if op == "reverse":
        return Perm._trusted(tuple(reversed(p)))
    if op == "complement":
        return Perm._trusted(tuple(k + 1 - v for v in p))
    if op == "inverse":
        inv = [0] * k
        for i, v in enumerate(p, 1):
            inv[v - 1] = i
        return Perm._trusted(tuple(inv))
    raise InvalidInputError(f"unknown symmetry {op!r}")


def direct_sum(p: Sequence[int], q: Sequence[int]) -> Perm:
    m = len(p)
    return Perm._trusted(tuple(p) + tuple(v + m for v in q))


def skew_sum(p: Sequence[int], q: Sequence[int]) -> Perm:
    n = len(q)
    return Perm._trusted(tuple(v + n for v in p) + tuple(q))


def perm_sum(p: Sequence[int], q: Sequence[int], mode: str = "direct") -> Perm:
    if mode == "direct":
        return direct_sum(p, q)
    if mode == "skew":
        return skew_sum(p, q)
    raise InvalidInputError(f"unknown sum mode {mode!r}")


def is_simple(p: Sequence[int]) -> bool:
    """True iff ``p`` has no interval of length strictly between 1 and ``len(p)``."""
    k = len(p)
    if k == 0:
        raise InvalidInputError("simplicity is defined for non-empty permutations")
    for a in range(k):
        lo = hi = p[a]
        for b in range(a + 1, k):
            lo = min(lo, p[b])
            hi = max(hi, p[b])
            if hi - lo == b - a and not (a == 0 and b == k - 1):
                return False
    return True


def normalize_basis(patterns: Iterable[Sequence[int]]) -> Basis:
    """Drop every pattern containing another one; the result is a sorted antichain."""
    pats = {tuple(Perm(b)) for b in patterns}
    if () in pats:
        raise InvalidInputError("the empty permutation cannot be a basis element")
    ordered = sorted(pats, key=lambda b: (len(b), b))
    kept: list[Perm] = []
    for b in ordered:
        if not any(contains(b, c) for c in kept):
            kept.append(Perm._trusted(b))
    return tuple.__new__(Basis, kept)
