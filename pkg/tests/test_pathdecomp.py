import pytest
from hypothesis import given, settings

from graphs import dipath, rooted_digraphs, star
from kleaf import (Digraph, OutTree, PathDecomposition, build_path_decomposition, check_width_bound,
                   find_heavy_pair, height, one_optimal_out_branching, plant, remove_useless_arcs, validate)
from kleaf.graph import InputError, spanning_roots
from kleaf.pathdecomp import parse_path_decomposition


def test_height():
    T = OutTree(0, {1: 0, 2: 1, 3: 2, 4: 0})
    assert [height(T, v) for v in range(5)] == [0, 1, 2, 3, 1]


def test_dipath_bags():
    D = dipath(4)
    T = OutTree(0, {1: 0, 2: 1, 3: 2})
    pd = build_path_decomposition(D, T)
    assert pd.bags == ((0, 1, 3), (1, 2, 3), (3,))
    assert validate(pd, 4, D.underlying_edges()) == (True, "ok")
    assert pd.width == 2


def test_star_single_bag():
    D = star(5)
    pd = build_path_decomposition(D, OutTree(0, {i: 0 for i in range(1, 5)}))
    assert pd.bags == ((0, 1, 2, 3, 4),)


def test_single_vertex():
    pd = build_path_decomposition(Digraph(1), OutTree.trivial(0))
    assert pd.bags == ((0,),)


@pytest.mark.parametrize("bags,edges,axiom", [
    (((0,), (1,)), [(0, 1)], "axiom 2"),
    (((0,), (), (0,)), [], "axiom 3"),
    (((0,),), [], "axiom 1"),
])
def test_validate_rejects(bags, edges, axiom):
    ok, msg = validate(PathDecomposition(bags), 2 if axiom != "axiom 3" else 1, edges)
    assert not ok and msg.startswith(axiom)


def test_width_bound_k2():
    assert check_width_bound(PathDecomposition((tuple(range(49)),)), 2)
    assert not check_width_bound(PathDecomposition((tuple(range(50)),)), 2)


def test_dipath_width_always_small():
    for n in range(2, 12):
        D = dipath(n)
        pd = build_path_decomposition(D, one_optimal_out_branching(D, 0))
        assert pd.width <= 2
        assert all(check_width_bound(pd, k) for k in (1, 2, 3))


def test_text_format_round_trip():
    pd = PathDecomposition(((0, 1, 3), (1, 2, 3), (3,)))
    text = pd.dumps()
    assert text == "pd 3 2\n0 1 3\n1 2 3\n3\n"
    assert parse_path_decomposition(text) == pd
    with pytest.raises(InputError):
        parse_path_decomposition("pd 2 2\n0 1 3\n")


@settings(max_examples=150)
@given(rooted_digraphs(max_n=12))
def test_build_is_valid_and_respects_start_heights(case):
    D, r = case
    D2 = remove_useless_arcs(D, r)
    T = one_optimal_out_branching(D2, r)
    pd = build_path_decomposition(D2, T)
    ok, msg = validate(pd, D2.n, D2.underlying_edges())
    assert ok, msg
    special = T.leaves() | T.br_succ()
    for v in D2.vertices():
        if v in special or v == r:
            continue
        first = min(i for i, bag in enumerate(pd.bags, 1) if v in bag)
        assert first == height(T, v)
    for k in (1, 2, 3):
        if len(T.leaves()) <= k - 1 and find_heavy_pair(D2, T, k) is None:
            assert check_width_bound(pd, k)


def test_bound_on_random_no_trigger_instances():
    from graphs import low_leaf_corpus
    checked = 0
    for D in low_leaf_corpus(150, seed=1):
        for r in spanning_roots(D)[:2]:
            D2 = remove_useless_arcs(D, r)
            T = one_optimal_out_branching(D2, r)
            pd = build_path_decomposition(D2, T)
            assert validate(pd, D2.n, D2.underlying_edges())[0]
            for k in (1, 2, 3):
                if len(T.leaves()) <= k - 1 and find_heavy_pair(D2, T, k) is None:
                    assert check_width_bound(pd, k)
                    checked += 1
    assert checked > 0


def test_trigger_instances_still_validate():
    for seed in range(4):
        D = plant(3, seed, trigger=True)
        r = spanning_roots(D)[0]
        D2 = remove_useless_arcs(D, r)
        pd = build_path_decomposition(D2, one_optimal_out_branching(D2, r))
        assert validate(pd, D2.n, D2.underlying_edges())[0]
