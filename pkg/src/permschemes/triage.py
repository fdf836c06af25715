"""Which of the rival systematic methods apply to a finitely based class.

* finitely labeled generating trees: the class must omit a child of an
  increasing permutation and a child of a decreasing one;
* regular insertion encoding: the class must lie inside some slot-bounded
  class ``SB(k)`` (only searched up to ``k_max``);
* finitely many simple permutations: a semi-decision, since two consecutive
  lengths without simples rule out every longer simple.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidInputError, ResourceError
from .oracle import avoider_levels
from .perm import Basis, Perm, children, contains, contains_ending_at_last, is_simple, perm_text
from .zset import as_basis

__all__ = [
    "DEFAULT_SB_MAX", "DEFAULT_SIMPLE_CAP", "FinLabel", "Regular", "NotWithin",
    "FinitelyMany", "Inconclusive", "TriageVerdict", "finlabel_applicable", "sb_basis",
    "sb_avoider", "insertion_regular", "enumerate_simple", "simple_finiteness", "triage",
]

DEFAULT_SB_MAX = 6
DEFAULT_SIMPLE_CAP = 9


class FinLabel(NamedTuple):
    omits_increasing_child: bool
    omits_decreasing_child: bool

    @property
    def applicable(self) -> bool:
        return self.omits_increasing_child and self.omits_decreasing_child


@dataclass(frozen=True)
class Regular:
    k: int


@dataclass(frozen=True)
class NotWithin:
    """No ``k <= k_max`` works.  Not a proof that the encoding is irregular."""
    k_max: int


@dataclass(frozen=True)
class FinitelyMany:
    max_length: int
    simples: tuple[Perm, ...]


@dataclass(frozen=True)
class Inconclusive:
    cap: int
    found: tuple[Perm, ...]


def finlabel_applicable(b: Iterable[Sequence[int]]) -> FinLabel:
    """Does the class omit a child of an increasing / of a decreasing permutation?

    If some child of ``12...k`` contains a basis element, restricting to that
    occurrence plus the new maximum gives a containing child of an increasing
    permutation of length at most ``|B|_inf``, so hosts up to that length suffice.
    """
    basis = as_basis(b)
    m = basis.max_length

    def omits(base) -> bool:
        return any(contains(c, beta)
                   for k in range(m + 1) for c in children(base(k)) for beta in basis)

    return FinLabel(omits(lambda k: tuple(range(1, k + 1))),
                    omits(lambda k: tuple(range(k, 0, -1))))


def sb_basis(k: int) -> list[Perm]:
    """Basis of ``SB(k)``: length ``2k+1``, large values ``k+1..2k+1`` in the odd slots."""
    if k < 1:
        raise InvalidInputError("SB(k) needs k >= 1")
    out = []
    for big in permutations(range(k + 1, 2 * k + 2)):
        for small in permutations(range(1, k + 1)):
            word = [0] * (2 * k + 1)
            word[0::2] = big
            word[1::2] = small
            out.append(Perm._trusted(tuple(word)))
    out.sort()
    return out


def sb_avoider(b: Iterable[Sequence[int]], k: int) -> Perm | None:
    """Some element of ``sb_basis(k)`` avoiding ``b``, or ``None`` if there is none.

    Equivalent to scanning :func:`sb_basis`, but prunes on the filled prefix.
    """
    if k < 1:
        raise InvalidInputError("SB(k) needs k >= 1")
    patterns = [tuple(beta) for beta in as_basis(b)]
    length = 2 * k + 1
    used = [False] * (length + 1)
    word: list[int] = []

    def rec() -> bool:
        pos = len(word)
        if pos == length:
            return True
        pool = range(k + 1, length + 1) if pos % 2 == 0 else range(1, k + 1)
        for v in pool:
            if used[v]:
                continue
            word.append(v)
            if not any(contains_ending_at_last(word, beta) for beta in patterns):
                used[v] = True
                if rec():
                    return True
                used[v] = False
            word.pop()
        return False

    return Perm._trusted(tuple(word)) if rec() else None


def insertion_regular(b: Iterable[Sequence[int]], k_max: int = DEFAULT_SB_MAX) -> Regular | NotWithin:
    """Least ``k <= k_max`` with ``Av(b)`` inside ``SB(k)``.

    ``Av(b) <= SB(k)`` iff every basis element of ``SB(k)`` contains an element of ``b``.
    """
    for k in range(1, k_max + 1):
        if sb_avoider(b, k) is None:
            return Regular(k)
    return NotWithin(k_max)


def _simples_by_length(basis: Basis, cap: int):
    for m, level in enumerate(avoider_levels(basis, cap, cap=None)):
        if m == 0:
            continue
        yield m, sorted(Perm._trusted(p) for p in level if is_simple(p))


def enumerate_simple(b: Iterable[Sequence[int]], m: int, cap: int = DEFAULT_SIMPLE_CAP) -> list[Perm]:
    """Simple avoiders of length ``m``, sorted."""
    if m > cap:
        raise ResourceError(f"length {m} exceeds the simple-permutation cap {cap}")
    if m == 0:
        return []
    for length, found in _simples_by_length(as_basis(b), m):
        if length == m:
            return found
    return []


def simple_finiteness(b: Iterable[Sequence[int]], cap: int = DEFAULT_SIMPLE_CAP) -> FinitelyMany | Inconclusive:
    """Look for two consecutive lengths ``m, m+1 >= 4`` without simple avoiders.

    A simple permutation of length ``n > 2`` contains one of length ``n-1`` or
    ``n-2``, so such a gap bounds every simple in the class.
    """
    if cap < 5:
        raise InvalidInputError("simple_finiteness needs cap >= 5")
    basis = as_basis(b)
    found: list[Perm] = []
    empty_prev = False
    for m, simples in _simples_by_length(basis, cap):
        found.extend(simples)
        if m >= 4:
            if not simples and empty_prev:
                return FinitelyMany(max((len(p) for p in found), default=0), tuple(found))
            empty_prev = not simples
    return Inconclusive(cap, tuple(found))


@dataclass(frozen=True)
class TriageVerdict:
    basis: Basis
    finlabel: FinLabel
    insertion: Regular | NotWithin
    simples: FinitelyMany | Inconclusive
    simple_cap: int

    def to_json(self) -> dict:
        ins = ({"regular": self.insertion.k} if isinstance(self.insertion, Regular)
               else {"not_within": self.insertion.k_max})
        listed = (self.simples.simples if isinstance(self.simples, FinitelyMany)
                  else self.simples.found)
        return {
            "finlabel": self.finlabel.applicable,
            "insertion": ins,
            "simples": {
                "finite": isinstance(self.simples, FinitelyMany),
                "list": [list(p) for p in listed],
                "cap": self.simple_cap,
            },
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def table(self) -> str:
        fl = self.finlabel
        if isinstance(self.insertion, Regular):
            ins = f"regular, inside SB({self.insertion.k})"
        else:
            ins = f"not inside SB(k) for any k <= {self.insertion.k_max}"
        if isinstance(self.simples, FinitelyMany):
            listed = self.simples.simples
            sim = f"finitely many (longest {self.simples.max_length})"
        else:
            listed = self.simples.found
            sim = f"inconclusive up to length {self.simples.cap}"
        rows = [
            ("class", f"Av({self.basis})"),
            ("finitely labeled generating tree",
             f"{'yes' if fl.applicable else 'no'} (omits increasing child: {fl.omits_increasing_child}, "
             f"omits decreasing child: {fl.omits_decreasing_child})"),
            ("insertion encoding", ins),
            ("simple permutations", sim),
            ("simples found", " ".join(perm_text(p) for p in listed) or "-"),
        ]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name:<{width}}  {value}" for name, value in rows)


def triage(b: Iterable[Sequence[int]], k_max: int = DEFAULT_SB_MAX,
           simple_cap: int = DEFAULT_SIMPLE_CAP) -> TriageVerdict:
    basis = as_basis(b)
    return TriageVerdict(basis, finlabel_applicable(basis), insertion_regular(basis, k_max),
                         simple_finiteness(basis, simple_cap), simple_cap)
