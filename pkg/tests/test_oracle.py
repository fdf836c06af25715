from math import comb

import pytest
from conftest import scheme_for

from _oracles import large_schroeder
from permschemes.errors import ResourceError
from permschemes.oracle import (
    avoiders, brute_avoiders, brute_sequence, compare, filter_count, naive_contains,
)
from permschemes.perm import Basis, Perm, avoids_all, symmetry
from permschemes.reducibility import GapIdeal
from permschemes.scheme import Scheme, SchemeNode


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_examples():
    assert brute_sequence(Basis("132"), 8) == [catalan(n) for n in range(9)]
    assert brute_sequence(Basis(""), 6) == [1, 1, 2, 6, 24, 120, 720]
    assert brute_sequence(Basis("1342,1432"), 8) == [1] + large_schroeder(8)
    assert brute_sequence(Basis("1234"), 9) == [1, 1, 2, 6, 23, 103, 513, 2761, 15767, 94359]
    assert brute_avoiders(Basis("1342,1432"), 4) == 22
    assert brute_sequence(Basis("1"), 3) == [1, 0, 0, 0]


def test_avoiders_are_avoiders():
    b = Basis("2413,3142")
    found = avoiders(b, 6)
    assert len(found) == len(set(found)) == 394
    assert all(avoids_all(p, b) for p in found)


def test_naive_contains():
    assert naive_contains((3, 9, 1, 8, 6, 7, 4, 5, 2), (5, 1, 3, 4, 2))
    assert not naive_contains((1, 2, 3), (2, 1))
    assert naive_contains((1, 2), ())


@pytest.mark.parametrize("basis", ["132", "123", "1342,1432", "2413,3142", "1234,4231", "321,2341"])
def test_tree_walk_matches_filter(basis):
    b = Basis(basis)
    seq = brute_sequence(b, 6)
    assert seq == [filter_count(b, n) for n in range(7)]


def test_refining_the_basis_shrinks_counts():
    chain = ["1234", "1234,4321", "1234,4321,2143", "123,4321,2143"]
    seqs = [brute_sequence(Basis(b), 7) for b in chain]
    for bigger, smaller in zip(seqs, seqs[1:]):
        assert all(s <= t for s, t in zip(smaller, bigger))


@pytest.mark.parametrize("basis", ["132", "1342,1432", "2143,4123", "3241,4231"])
@pytest.mark.parametrize("op", ["reverse", "complement", "inverse"])
def test_symmetry_invariance(basis, op):
    b = Basis(basis)
    image = Basis([symmetry(beta, op) for beta in b])
    assert brute_sequence(b, 7) == brute_sequence(image, 7)


def test_cap():
    with pytest.raises(ResourceError):
        brute_sequence(Basis("132"), 11)
    with pytest.raises(ResourceError):
        brute_avoiders(Basis("132"), 5, cap=4)
    assert brute_sequence(Basis("123,321"), 11, cap=None)[-1] == 0


def test_compare_report():
    rep = compare(Basis("1342,1432"), 7, scheme_for("1342,1432"))
    assert rep.passed
    assert rep.lines()[4] == "4: 22 22 ok"
    assert [r[1] for r in rep.rows] == [1] + large_schroeder(7)


def test_compare_flags_mismatch():
    # the Av(132) scheme scored against the wrong class
    rep = compare(Basis("123"), 5, scheme_for("132"))
    assert rep.passed  # Wilf-equivalent, so no mismatch
    rep = compare(Basis("1234"), 5, scheme_for("132"))
    assert not rep.passed
    assert rep.lines()[4] == "4: 23 14 MISMATCH"


def test_compare_with_hand_built_scheme():
    # Av(12): only decreasing permutations
    nodes = {
        Perm(""): SchemeNode(Perm(""), "expand", children=((1, Perm("1")),)),
    }
    nodes[Perm("1")] = SchemeNode(Perm("1"), "reduce", r=1, gaps=GapIdeal(2, ((0, 1),)))
    s = Scheme(Basis("12"), nodes)
    assert compare(Basis("12"), 6, s).passed
