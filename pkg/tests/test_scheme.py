import json
from dataclasses import replace

import pytest
from conftest import scheme_for

from permschemes.errors import ContractError, InvalidInputError
from permschemes.oracle import brute_sequence
from permschemes.perm import EMPTY, Basis, Perm, avoids_all, delete_at
from permschemes.reducibility import GapIdeal
from permschemes.scheme import (
    Frontier, Scheme, SchemeNode, build_scheme, eval_count, eval_sequence, export,
    import_scheme, scheme_depth, verify_scheme,
)
from permschemes.zset import vectors_up_to, zset_count

SCHROEDER_SCHEME = """
{"basis": [[1, 3, 4, 2], [1, 4, 3, 2]],
 "nodes": [
  {"perm": [], "kind": "expand", "children": [[1]]},
  {"perm": [1], "kind": "expand", "children": [[2, 1], [1, 2]]},
  {"perm": [1, 2], "kind": "reduce", "r": 2, "gap_basis": [[0, 2, 0]]},
  {"perm": [2, 1], "kind": "reduce", "r": 2, "gap_basis": []}
 ]}
"""


def test_schroeder_scheme_shape():
    s = scheme_for("1342,1432")
    kinds = {str(p): node.kind for p, node in s.nodes.items()}
    assert kinds == {"∅": "expand", "1": "expand", "12": "reduce", "21": "reduce"}
    assert scheme_depth(s) == 2
    assert s.nodes[Perm("12")].gaps == GapIdeal(3, ((0, 2, 0),))


def test_all_permutations_scheme():
    s = scheme_for("")
    assert list(s.nodes) == [EMPTY, Perm("1")]
    assert s.nodes[Perm("1")].r == 1 and s.nodes[Perm("1")].target == EMPTY
    assert scheme_depth(s) == 1
    assert eval_sequence(s, 5) == [1, 1, 2, 6, 24, 120]
    raw = json.loads(export(s))
    assert raw["nodes"][0]["perm"] == [] and len(raw["nodes"]) == 2


def test_degenerate_basis():
    s = build_scheme(Basis("1"))
    assert list(s.nodes) == [EMPTY] and s.nodes[EMPTY].children == ()
    assert eval_sequence(s, 4) == [1, 0, 0, 0, 0]


def test_separable_frontier_is_all_of_av_213_312():
    result = build_scheme(Basis("2413,3142"), 5)
    assert isinstance(result, Frontier)
    expected = [p for p in brute_perms(5) if avoids_all(p, Basis("213,312"))]
    assert set(expected) <= set(result.perms)
    assert len(expected) == 16


def brute_perms(n):
    from itertools import permutations
    return [Perm(p) for p in permutations(range(1, n + 1))]


def test_max_depth_must_be_positive():
    with pytest.raises(InvalidInputError):
        build_scheme(Basis("132"), 0)


def test_eval_examples():
    assert eval_count(scheme_for("1342,1432"), EMPTY, (0,)) == 1
    assert eval_count(scheme_for("1342,1432"), EMPTY, (4,)) == 22
    assert eval_sequence(scheme_for("132"), 6) == [1, 1, 2, 5, 14, 42, 132]
    assert eval_sequence(scheme_for("1234,2143"), 4)[4] == 22


def test_eval_rejects_foreign_nodes():
    s = scheme_for("132")
    with pytest.raises(ContractError):
        eval_count(s, Perm("123"), (0, 0, 0, 0))
    with pytest.raises(InvalidInputError):
        eval_count(s, Perm("1"), (1,))


def test_132_displayed_identity():
    s = scheme_for("132")
    for g1 in range(6):
        for g2 in range(1, 6):
            rhs = sum(eval_count(s, Perm("1"), (i, g1 + g2 - i - 1)) for i in range(g1 + 1))
            assert eval_count(s, Perm("1"), (g1, g2)) == rhs


def test_eval_agrees_with_zset(fixture_basis):
    s = scheme_for(fixture_basis)
    bound = s.basis.max_length + 2
    cache = {}
    for p in s.nodes:
        for g in vectors_up_to(len(p) + 1, bound):
            assert eval_count(s, p, g, cache) == zset_count(s.basis, p, g), (p, g)


def test_cache_is_transparent():
    s = scheme_for("2143,3412")
    shared = {}
    for n in range(9):
        assert eval_count(s, EMPTY, (n,), shared) == eval_count(s, EMPTY, (n,))
    assert shared


def test_sequence_matches_brute_force(fixture_basis):
    s = scheme_for(fixture_basis)
    assert eval_sequence(s, 9) == brute_sequence(s.basis, 9)


def test_built_schemes_verify(fixture_basis):
    report = verify_scheme(scheme_for(fixture_basis))
    assert report.ok, report.violations


def test_built_gap_ideals_are_antichains(fixture_basis):
    for node in scheme_for(fixture_basis).nodes.values():
        if node.kind != "reduce":
            continue
        ex = node.gaps.excluded
        assert list(ex) == sorted(set(ex))
        for v in ex:
            assert v not in node.gaps
            for w in ex:
                assert v == w or not all(a <= b for a, b in zip(w, v))


def test_transcribed_scheme_verifies():
    s = import_scheme(SCHROEDER_SCHEME)
    assert verify_scheme(s).ok
    assert s == scheme_for("1342,1432")


def test_corrupted_gap_basis_is_reported():
    s = import_scheme(SCHROEDER_SCHEME)
    twelve = Perm("12")
    s.nodes[twelve] = replace(s.nodes[twelve], gaps=GapIdeal(3, ((0, 1, 0),)))
    report = verify_scheme(s)
    assert not report.ok
    assert any(v.startswith("12:") for v in report.violations)


def test_missing_node_is_reported():
    s = import_scheme(SCHROEDER_SCHEME)
    del s.nodes[Perm("21")]
    report = verify_scheme(s)
    assert any("closure" in v and "21" in v for v in report.violations)


def test_wrong_reduction_entry_is_reported():
    s = import_scheme(SCHROEDER_SCHEME)
    s.nodes[Perm("12")] = SchemeNode(Perm("12"), "reduce", r=1, gaps=GapIdeal(3, ((0, 2, 0),)))
    assert any("not ES+-reducible" in v for v in verify_scheme(s).violations)


def test_json_round_trip(fixture_basis):
    s = scheme_for(fixture_basis)
    data = export(s, "json")
    back = import_scheme(data)
    assert back == s
    assert export(back, "json") == data


def test_json_layout():
    data = export(scheme_for("1342,1432"), "json")
    assert data.decode() == SCHROEDER_SCHEME.lstrip()


def test_import_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        import_scheme("{not json")
    bad_child = SCHROEDER_SCHEME.replace("[[2, 1], [1, 2]]", "[[2, 1], [3, 1, 2]]")
    with pytest.raises(InvalidInputError):
        import_scheme(bad_child)
    with pytest.raises(InvalidInputError):
        import_scheme(SCHROEDER_SCHEME.replace('"expand"', '"split"', 1))


def test_dot_rendering():
    dot = export(scheme_for("1342,1432"), "dot").decode()
    assert dot.startswith("digraph scheme {")
    assert '"12" -> "1" [style=dashed, label="d_2"];' in dot
    assert '"1" -> "12" [style=solid];' in dot
    assert "(0,2,0)" in dot
    with pytest.raises(InvalidInputError):
        export(scheme_for("132"), "svg")


def test_classic_mode():
    s = build_scheme(Basis("132"), classic=True)
    assert isinstance(s, Scheme) and s.classic
    assert verify_scheme(s).ok
    assert eval_sequence(s, 8) == eval_sequence(scheme_for("132"), 8)
    assert import_scheme(export(s)) == s
    assert b'"mode": "classic"' in export(s)
    stuck = build_scheme(Basis("1342,1432"), classic=True)
    assert isinstance(stuck, Frontier)


def test_search_is_deterministic():
    a = export(build_scheme(Basis("2143,3412")), "json")
    b = export(build_scheme(Basis("3412,2143")), "json")
    assert a == b


def test_reduce_targets_are_nodes(fixture_basis):
    s = scheme_for(fixture_basis)
    for p, node in s.nodes.items():
        if node.kind == "reduce":
            assert delete_at(p, node.r) in s.nodes
