"""Discovery, evaluation, checking and serialization of enumeration schemes.

A scheme maps permutations to nodes.  An *expand* node counts its Z-sets by
summing over where the next-largest entry goes (one term per B-avoiding child).
A *reduce* node answers 0 outside its gap ideal and otherwise hands the query
to ``d_r(pi)`` with the merged gap vector.  Starting from the empty permutation
with gap vector ``(n,)`` this is a polynomial-time recurrence for ``s_n(B)``.
"""
from __future__ import annotations

import json
import logging
import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContractError, InvalidInputError
from .perm import EMPTY, Basis, Perm, avoids_all, children, delete_at, perm_text
from .reducibility import (
    GapIdeal, dominates, es_plus_reducible, es_reducible, j_ideal, reduction_gap_basis,
)
from .zset import as_basis, gap_delete, gap_text

log = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_MAX_DEPTH", "SchemeNode", "Scheme", "Frontier", "SchemeReport",
    "build_scheme", "eval_count", "eval_sequence", "scheme_depth", "verify_scheme",
    "export", "import_scheme", "node_order",
]

DEFAULT_MAX_DEPTH = 6
EXPAND = "expand"
REDUCE = "reduce"


def node_order(p: Sequence[int]) -> tuple:
    return (len(p), tuple(p))


@dataclass(frozen=True)
class SchemeNode:
    perm: Perm
    kind: str
    # expand: (insertion position, child) for the B-avoiding children only
    children: tuple[tuple[int, Perm], ...] = ()
    # reduce
    r: int | None = None
    gaps: GapIdeal | None = None

    @property
    def target(self) -> Perm:
        return delete_at(self.perm, self.r)


@dataclass
class Scheme:
    basis: Basis
    nodes: dict[Perm, SchemeNode]
    classic: bool = False

    def __post_init__(self):
        self.nodes = {p: self.nodes[p] for p in sorted(self.nodes, key=node_order)}

    def __contains__(self, p) -> bool:
        return tuple(p) in self.nodes

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scheme):
            return NotImplemented
        return (self.basis == other.basis and self.classic == other.classic
                and list(self.nodes.items()) == list(other.nodes.items()))


@dataclass(frozen=True)
class Frontier:
    """Outcome of a search that hit ``max_depth`` with irreducible permutations left.

    This says no scheme was found under the first-reducible-entry policy at this
    depth, not that none exists.
    """

    basis: Basis
    max_depth: int
    perms: tuple[Perm, ...]

    def __str__(self) -> str:
        listed = " ".join(perm_text(p) for p in self.perms)
        return f"no scheme for Av({self.basis}) at depth {self.max_depth}; irreducible: {listed}"


@dataclass
class SchemeReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _avoiding_children(basis: Basis, p: Sequence[int]) -> tuple[tuple[int, Perm], ...]:
    return tuple((j, c) for j, c in enumerate(children(p), 1) if avoids_all(c, basis))


def _try_reduce(basis: Basis, p: Perm, classic: bool) -> SchemeNode | None:
    for r in range(1, len(p) + 1):
        if classic:
            if es_reducible(basis, p, r):
                return SchemeNode(p, REDUCE, r=r, gaps=j_ideal(basis, p))
        elif es_plus_reducible(basis, p, r):
            return SchemeNode(p, REDUCE, r=r, gaps=reduction_gap_basis(basis, p, r))
    return None


def build_scheme(b: Iterable[Sequence[int]], max_depth: int = DEFAULT_MAX_DEPTH,
                 classic: bool = False) -> Scheme | Frontier:
    """Breadth-first scheme search from the empty permutation.

    Each permutation reached is reduced at its first reducible entry (ES+ test,
    or the J-based test when ``classic``); otherwise it is expanded, provided it
    is shorter than ``max_depth``.  Irreducible permutations of length
    ``max_depth`` are collected and returned as a :class:`Frontier`.
    """
    if max_depth < 1:
        raise InvalidInputError("max_depth must be at least 1")
    basis = as_basis(b)
    nodes: dict[Perm, SchemeNode] = {}
    frontier: list[Perm] = []
    queue = deque([EMPTY])
    seen = {EMPTY}

    def push(p: Perm) -> None:
        if p not in seen:
            seen.add(p)
            queue.append(p)

    while queue:
        p = queue.popleft()
        node = _try_reduce(basis, p, classic) if p else None
        if node is not None:
            log.debug("%s: reduce d_%d, %s", perm_text(p), node.r, node.gaps)
            push(node.target)
        elif len(p) < max_depth:
            node = SchemeNode(p, EXPAND, children=_avoiding_children(basis, p))
            log.debug("%s: expand", perm_text(p))
            for _, c in node.children:
                push(c)
        else:
            frontier.append(p)
            continue
        nodes[p] = node

    if frontier:
        return Frontier(basis, max_depth, tuple(sorted(frontier, key=node_order)))
    return Scheme(basis, nodes, classic)


def eval_count(s: Scheme, pi: Sequence[int], g: Sequence[int], cache: dict | None = None) -> int:
    """``|Z(B; pi; g)|`` computed through the scheme's recurrence.

    ``cache`` maps ``(perm, gap vector)`` to counts and may be shared across calls
    on the same scheme.
    """
    pi, g = tuple(pi), tuple(g)
    if pi not in s.nodes:
        raise ContractError(f"{perm_text(pi)} is not a node of the scheme")
    if len(g) != len(pi) + 1 or any(x < 0 for x in g):
        raise InvalidInputError(f"bad gap vector {gap_text(g)} for {perm_text(pi)}")
    if cache is None:
        cache = {}
    nodes = s.nodes
    targets = {p: node.target for p, node in nodes.items() if node.kind == REDUCE}

    def ev(p: tuple, v: tuple) -> int:
        key = (p, v)
        hit = cache.get(key)
        if hit is not None:
            return hit
        node = nodes.get(p)
        if node is None:
            raise ContractError(f"scheme is not closed: {perm_text(p)} is missing")
        if node.kind == REDUCE:
            if any(dominates(v, x) for x in node.gaps.excluded):
                total = 0
            else:
                total = ev(targets[p], gap_delete(v, node.r))
        elif not any(v):
            total = 1
        else:
            total = 0
            for j, child in node.children:
                gj = v[j - 1]
                head, tail = v[:j - 1], v[j:]
                for i in range(gj):
                    total += ev(child, head + (i, gj - 1 - i) + tail)
        cache[key] = total
        return total

    # each expand step lowers the norm, each reduce step the length
    needed = 50 + (sum(g) + 1) * (scheme_depth(s) + 2) * 3
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    return ev(pi, g)


def eval_sequence(s: Scheme, n_max: int) -> list[int]:
    """``[s_0(B), ..., s_{n_max}(B)]``; entry ``n`` is ``eval_count(s, (), (n,))``."""
    cache: dict = {}
    return [eval_count(s, EMPTY, (n,), cache) for n in range(n_max + 1)]


def scheme_depth(s: Scheme) -> int:
    """One more than the length of the longest expanded permutation."""
    return 1 + max(len(p) for p, node in s.nodes.items() if node.kind == EXPAND)


def verify_scheme(s: Scheme) -> SchemeReport:
    """Re-derive every node of ``s`` from scratch and report each disagreement."""
    report = SchemeReport()
    bad = report.violations.append
    basis = s.basis
    if EMPTY not in s.nodes:
        bad("closure: root ∅ is missing")
    elif s.nodes[EMPTY].kind != EXPAND:
        bad("root ∅ must be an expand node")
    for p, node in s.nodes.items():
        name = perm_text(p)
        if not avoids_all(p, basis):
            bad(f"{name}: contains a basis element")
            continue
        if node.kind == EXPAND:
            expected = _avoiding_children(basis, p)
            if tuple(node.children) != expected:
                bad(f"{name}: children {[perm_text(c) for _, c in node.children]} "
                    f"should be {[perm_text(c) for _, c in expected]}")
            for _, c in node.children:
                if c not in s.nodes:
                    bad(f"closure: child {perm_text(c)} of {name} is missing")
        elif node.kind == REDUCE:
            if node.r is None or not 1 <= node.r <= len(p):
                bad(f"{name}: reduction position {node.r} out of range")
                continue
            if node.gaps is None or node.gaps.dimension != len(p) + 1:
                bad(f"{name}: gap ideal must have dimension {len(p) + 1}")
                continue
            target = node.target
            if target not in s.nodes:
                bad(f"closure: d_{node.r}({name}) = {perm_text(target)} is missing")
            if s.classic:
                if not es_reducible(basis, p, node.r):
                    bad(f"{name}: entry {node.r} is not ES-reducible")
                    continue
                expected_gaps = j_ideal(basis, p)
            else:
                if not es_plus_reducible(basis, p, node.r):
                    bad(f"{name}: entry {node.r} is not ES+-reducible")
                    continue
                expected_gaps = reduction_gap_basis(basis, p, node.r)
            if node.gaps != expected_gaps:
                bad(f"{name}: gap ideal {node.gaps} should be {expected_gaps}")
        else:
            bad(f"{name}: unknown node kind {node.kind!r}")
    return report


def _node_json(node: SchemeNode) -> dict:
    out: dict = {"perm": list(node.perm), "kind": node.kind}
    if node.kind == EXPAND:
        out["children"] = [list(c) for _, c in node.children]
    else:
        out["r"] = node.r
        out["gap_basis"] = [list(v) for v in node.gaps.excluded]
    return out


def _dot_id(p: Sequence[int]) -> str:
    return '"' + perm_text(p) + '"'


def export(s: Scheme, fmt: str = "json") -> bytes:
    """Serialize ``s`` as ``"json"`` (one node per line) or Graphviz ``"dot"``."""
    if fmt == "json":
        head = '{"basis": ' + json.dumps([list(b) for b in s.basis])
        if s.classic:
            head += ', "mode": "classic"'
        lines = [json.dumps(_node_json(node)) for node in s.nodes.values()]
        body = ",\n  ".join(lines)
        return (head + ',\n "nodes": [\n  ' + body + "\n ]}\n").encode()
    if fmt == "dot":
        out = ["digraph scheme {", "  node [shape=plaintext];"]
        for p, node in s.nodes.items():
            label = perm_text(p)
            if node.kind == REDUCE:
                label += "".join("\\n" + gap_text(v) for v in node.gaps.excluded)
            out.append(f'  {_dot_id(p)} [label="{label}"];')
        for p, node in s.nodes.items():
            if node.kind == EXPAND:
                for _, c in node.children:
                    out.append(f"  {_dot_id(p)} -> {_dot_id(c)} [style=solid];")
            else:
                out.append(f'  {_dot_id(p)} -> {_dot_id(node.target)} '
                           f'[style=dashed, label="d_{node.r}"];')
        out.append("}")
        return ("\n".join(out) + "\n").encode()
    raise InvalidInputError(f"unknown export format {fmt!r}")


def import_scheme(data: bytes | str) -> Scheme:
    """Inverse of ``export(s, "json")``.  Structure is checked, reducibility is not."""
    try:
        raw = json.loads(data)
        basis = Basis(raw["basis"])
        nodes: dict[Perm, SchemeNode] = {}
        for item in raw["nodes"]:
            p = Perm(item["perm"])
            if item["kind"] == EXPAND:
                kids = []
                for c in item["children"]:
                    c = Perm(c)
                    if len(c) != len(p) + 1 or delete_at(c, c.index(len(c)) + 1) != p:
                        raise InvalidInputError(f"{perm_text(c)} is not a child of {perm_text(p)}")
                    kids.append((c.index(len(c)) + 1, c))
                node = SchemeNode(p, EXPAND, children=tuple(kids))
            elif item["kind"] == REDUCE:
                gaps = GapIdeal(len(p) + 1, tuple(tuple(v) for v in item["gap_basis"]))
                node = SchemeNode(p, REDUCE, r=int(item["r"]), gaps=gaps)
            else:
                raise InvalidInputError(f"unknown node kind {item['kind']!r}")
            if p in nodes:
                raise InvalidInputError(f"duplicate node {perm_text(p)}")
            nodes[p] = node
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InvalidInputError(f"malformed scheme JSON: {exc}") from exc
    return Scheme(basis, nodes, classic=raw.get("mode") == "classic")
