import itertools
import random

import pytest

from graphs import is_valid_branching, star
from kleaf import (Digraph, InputError, OutTree, annotate, construct_leafy_branching, find_heavy_pair,
                   plant, select_pivot, witness_path)
from kleaf.backward import report_for
from kleaf.graph import spanning_roots
from kleaf.leafy import annotate_arc, leafy_from_heavy, pick_arcs
from kleaf.solver import prepare_root


def brute_best_pivot(items, rank):
    """Best count of tuples strictly around any candidate pivot."""
    ws = {w for _, w in items}
    return max(sum(1 for (t, h), _ in items if rank(h) < rank(w) <= rank(t)) for w in ws)


def test_witness_path_from_star():
    assert witness_path(star(4), 0, (0, 2)) == [0, 2]


def test_witness_path_triangle():
    r, a, b = range(3)
    D = Digraph(3, [(r, a), (a, r), (r, b), (b, r), (a, b), (b, a)])
    assert witness_path(D, r, (b, a)) == [r, b, a]


def test_witness_path_useless_arc_is_internal_error():
    from kleaf import InvariantViolation
    D = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 1)])
    with pytest.raises(InvariantViolation):
        witness_path(D, 0, (3, 1))


def test_annotate_direct_entry():
    # spine 0->1->2->3->4, leaf 5 off the root, 5->4 enters the subtree, 4->2 goes back
    T = OutTree(0, {1: 0, 2: 1, 3: 2, 4: 3, 5: 0})
    D = Digraph(6, T.arcs() | {(5, 4), (4, 2)})
    wit = annotate_arc(D, T, (4, 2))
    assert wit.path == (0, 5, 4, 2)
    assert (wit.x, wit.y, wit.w) == (5, 4, 4)
    bx, by = annotate(D, T, [(4, 2)])
    assert [w.arc for w in bx] == [(4, 2)] and by == []


def test_annotate_reentry_gives_w_before_tail():
    # spine 0->1->...->6; leaf 7 off the root enters at 5; path 7->5->... reaches tail 6 via 5
    T = OutTree(0, {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 0})
    D = Digraph(8, T.arcs() | {(7, 5), (6, 2)})
    wit = annotate_arc(D, T, (6, 2))
    assert wit.path == (0, 7, 5, 6, 2)
    assert (wit.x, wit.y) == (7, 5)
    assert wit.w == 5 != 6
    assert T.lt(2, wit.y) and T.lt(2, wit.w) and T.leq(wit.w, 6)


def test_annotate_rejects_non_optimal_tree():
    from kleaf import InvariantViolation
    # 1 is internal and 3's parent has out-degree 1, so (1, 3) would be improving
    T = OutTree(0, {1: 0, 2: 1, 3: 2, 4: 3})
    D = Digraph(5, T.arcs() | {(1, 3), (4, 2)})
    # witness for (4, 2) is 0->1->3->4 then 2: x = 1, y = 3
    with pytest.raises(InvariantViolation):
        annotate(D, T, [(4, 2)])


def test_select_pivot_worked_example():
    a, b, c, d, e, f = "abcdef"
    rank = {ch: i for i, ch in enumerate("abcdef")}.__getitem__
    items = [((d, a), c), ((e, b), c), ((f, c), d)]
    assert brute_best_pivot(items, rank) == 3  # pivot d covers all three
    chosen, w, inside = select_pivot(items, 2, rank)
    assert chosen == 1 and w == c
    assert sorted(inside) == [0, 1]


def test_select_pivot_single_tuple():
    chosen, w, inside = select_pivot([((5, 1), 3)], 1, lambda v: v)
    assert (chosen, w, inside) == (0, 3, [0])


def test_select_pivot_shared_pivots():
    # three arcs straddle both candidate pivots
    items = [((6, 1), 3), ((7, 2), 4), ((8, 0), 4)]
    for w in (3, 4):
        assert sum(1 for (t, h), _ in items if h < w <= t) == 3
    _, w, inside = select_pivot(items, 2, lambda v: v)
    assert len(inside) == 3


def test_select_pivot_too_few():
    with pytest.raises(InputError):
        select_pivot([((5, 1), 3)], 2, lambda v: v)


def test_select_pivot_random_against_brute_force():
    rng = random.Random(2)
    for _ in range(500):
        k = rng.randint(1, 5)
        size = rng.randint(2 * k - 1, 4 * k)
        split = rng.randint(size, 3 * size)
        items = []
        for _ in range(size):
            h = rng.randrange(split)
            t = rng.randrange(split, 2 * split)
            items.append(((t, h), rng.randint(h + 1, t)))
        _, w, inside = select_pivot(items, k, lambda v: v)
        assert len(inside) >= k
        assert brute_best_pivot(items, lambda v: v) >= len(inside)


def trigger_case(k, seed):
    D = plant(k, seed, trigger=True)
    run = prepare_root(D, spanning_roots(D)[0])
    rep = find_heavy_pair(run.reduced, run.tree, k)
    return run, rep


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("seed", range(4))
def test_construct_on_trigger_instances(k, seed):
    run, rep = trigger_case(k, seed)
    assert rep is not None and len(rep.HB) >= 6 * k * k
    out = construct_leafy_branching(run.reduced, run.tree, rep, k)
    assert is_valid_branching(run.reduced, out, run.root)
    assert len(out.leaves()) >= k


@pytest.mark.parametrize("seed,case", [(0, "x"), (1, "y")])
def test_both_cases_are_exercised(seed, case):
    run, rep = trigger_case(3, seed)
    bx, by = annotate(run.reduced, run.tree, pick_arcs(run.reduced, run.tree, rep))
    assert (len(bx) > 0, len(by) > 0) == ((True, False) if case == "x" else (False, True))


@pytest.mark.parametrize("seed", range(6))
def test_k2_runs_full_construction(seed):
    # with k = 2 the 1-optimal tree already has 2 leaves, so drive the rewiring directly
    run, rep = trigger_case(2, seed)
    out = leafy_from_heavy(run.reduced, run.tree, rep, 2)
    assert is_valid_branching(run.reduced, out, run.root)
    assert len(out.leaves()) >= 2


def test_construct_preconditions():
    run, rep = trigger_case(3, 0)
    with pytest.raises(InputError):
        construct_leafy_branching(run.reduced, run.tree, rep, 1)
    small = report_for(run.reduced, run.tree, run.tree.root, rep.l)
    with pytest.raises(InputError):
        construct_leafy_branching(run.reduced, run.tree, small, 3)


def test_pick_arcs_one_per_head():
    run, rep = trigger_case(3, 2)
    arcs = pick_arcs(run.reduced, run.tree, rep)
    assert sorted(v for _, v in arcs) == sorted(rep.HB)
    for u, v in arcs:
        deepest = max((t for t, h in rep.B if h == v), key=run.tree.depth)
        assert u == deepest


def test_leafy_family_matches_exhaustive_max():
    from kleaf import brute_force_max_leaves
    for k, seed in itertools.product([2, 3, 4], range(6)):
        D = plant(k, seed)
        assert D.n <= 10
        assert brute_force_max_leaves(D)[0] >= k
