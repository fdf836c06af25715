"""Gap ideals and the bounded reducibility tests.

An entry ``pi(r)`` is reducible when deleting it maps ``Z(B; pi; g)`` bijectively
onto ``Z(B; d_r(pi); d_r(g))`` for every relevant ``g``.  Both tests below only
need to look at vectors of norm at most ``|B|_inf - 1``; beyond that the counts
are forced to agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContractError, InvalidInputError
from .perm import avoids_all, delete_at
from .zset import GapVector, as_basis, gap_delete, gap_text, vectors_up_to, zset_count

__all__ = [
    "GapIdeal", "ideal_member", "minimal_elements", "dominates", "compute_J", "j_ideal",
    "es_reducible", "es_plus_reducible", "reducibility_witness", "reduction_gap_basis",
]


def dominates(big: Sequence[int], small: Sequence[int]) -> bool:
    """Componentwise ``small <= big``."""
    return all(s <= b for s, b in zip(small, big))


def minimal_elements(vs: Iterable[Sequence[int]]) -> tuple[GapVector, ...]:
    """The componentwise-minimal vectors of ``vs``, sorted."""
    vs = sorted({tuple(v) for v in vs}, key=lambda v: (sum(v), v))
    if len({len(v) for v in vs}) > 1:
        raise InvalidInputError("vectors of different lengths")
    keep: list[GapVector] = []
    for v in vs:
        # graded order: anything dominated by v comes earlier
        if not any(dominates(v, w) for w in keep):
            keep.append(v)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class GapIdeal:
    """A downward-closed set of gap vectors, stored as its minimal excluded vectors."""

    dimension: int
    excluded: tuple[GapVector, ...] = ()

    def __post_init__(self):
        excluded = tuple(tuple(v) for v in self.excluded)
        for v in excluded:
            if len(v) != self.dimension:
                raise InvalidInputError(
                    f"basis vector {gap_text(v)} does not have dimension {self.dimension}")
        object.__setattr__(self, "excluded", minimal_elements(excluded) if excluded else ())

    def __contains__(self, g: Sequence[int]) -> bool:
        return ideal_member(g, self)

    def __str__(self) -> str:
        return "Av(" + ",".join(gap_text(v) for v in self.excluded) + ")"


def ideal_member(g: Sequence[int], ideal: GapIdeal) -> bool:
    if len(g) != ideal.dimension:
        raise InvalidInputError(
            f"vector {gap_text(g)} has length {len(g)}, ideal has dimension {ideal.dimension}")
    return not any(dominates(g, v) for v in ideal.excluded)


def _prepare(b, pi, r=None):
    basis = as_basis(b)
    pi = tuple(pi)
    if not avoids_all(pi, basis):
        raise InvalidInputError(f"{pi} contains a basis element")
    if r is not None and not 1 <= r <= len(pi):
        raise InvalidInputError(f"position {r} out of range for length {len(pi)}")
    return basis, pi


def compute_J(b, pi: Sequence[int]) -> frozenset[int]:
    """Gap slots (1-based) that are empty in every member of every Z-set over ``pi``.

    One untracked entry in slot ``j`` settles it: if ``Z(b; pi; e_j)`` is empty,
    then so is every Z-set with ``g_j > 0``.
    """
    basis, pi = _prepare(b, pi)
    dim = len(pi) + 1
    out = set()
    for j in range(1, dim + 1):
        unit = tuple(1 if i == j else 0 for i in range(1, dim + 1))
        if zset_count(basis, pi, unit) == 0:
            out.add(j)
    return frozenset(out)


def j_ideal(b, pi: Sequence[int]) -> GapIdeal:
    """The ideal of vectors obeying ``J(pi)``."""
    dim = len(pi) + 1
    units = [tuple(1 if i == j else 0 for i in range(1, dim + 1)) for j in compute_J(b, pi)]
    return GapIdeal(dim, tuple(units))


def reducibility_witness(b, pi: Sequence[int], r: int, classic: bool = False) -> GapVector | None:
    """First vector (graded lex order) on which deleting ``pi(r)`` changes the count.

    ``classic=False`` scans vectors with a nonempty Z-set; ``classic=True`` scans
    vectors obeying ``J(pi)``.  ``None`` means the entry is reducible.
    """
    basis, pi = _prepare(b, pi, r)
    smaller = delete_at(pi, r)
    forbidden = compute_J(basis, pi) if classic else frozenset()
    for g in vectors_up_to(len(pi) + 1, basis.max_length - 1):
        if forbidden and any(g[j - 1] for j in forbidden):
            continue
        here = zset_count(basis, pi, g)
        if not classic and here == 0:
            continue
        if here != zset_count(basis, smaller, gap_delete(g, r)):
            return g
    return None


def es_reducible(b, pi: Sequence[int], r: int) -> bool:
    return reducibility_witness(b, pi, r, classic=True) is None


def es_plus_reducible(b, pi: Sequence[int], r: int) -> bool:
    return reducibility_witness(b, pi, r, classic=False) is None


def reduction_gap_basis(b, pi: Sequence[int], r: int) -> GapIdeal:
    """The ideal ``G_r(pi)`` of vectors on which the reduction rule may recurse.

    Its excluded vectors are the minimal ``h`` with ``Z(b; pi; h)`` empty while
    ``Z(b; d_r(pi); d_r(h))`` is not.  For an ES+-reducible entry all of them have
    norm below ``|b|_inf``, so a bounded scan is complete; the entry is re-tested
    first and a :class:`ContractError` is raised if it is not reducible.
    """
    basis, pi = _prepare(b, pi, r)
    if not es_plus_reducible(basis, pi, r):
        raise ContractError(f"entry {r} of {pi} is not ES+-reducible for {basis}")
    smaller = delete_at(pi, r)
    found: list[GapVector] = []
    for h in vectors_up_to(len(pi) + 1, basis.max_length - 1):
        if any(dominates(h, v) for v in found):
            continue
        if zset_count(basis, pi, h) == 0 and zset_count(basis, smaller, gap_delete(h, r)) > 0:
            found.append(h)
    return GapIdeal(len(pi) + 1, tuple(found))
