"""Exhaustive ground truth and instance generators."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional

from .graph import Digraph, OutTree, reachable_set, reaches_all


def enumerate_out_branchings(D: Digraph, r: int) -> Iterator[OutTree]:
    """Every out-branching of ``D`` rooted at ``r``, each exactly once.

    Non-root vertices pick a parent among their in-neighbours in index order;
    a choice closing a cycle through already-chosen parents is pruned.
    """
    D.check_vertex(r)
    if not reaches_all(D, r):
        return
    order = [v for v in D.vertices() if v != r]
    parent: dict[int, int] = {}

    def closes_cycle(v: int, p: int) -> bool:
        while p != r:
            if p == v:
                return True
            if p not in parent:
                return False
            p = parent[p]
        return False

    def rec(i: int) -> Iterator[OutTree]:
        if i == len(order):
            yield OutTree(r, parent, D.vertices())
            return
        v = order[i]
        for p in D.in_neighbors(v):
            if closes_cycle(v, p):
                continue
            parent[v] = p
            yield from rec(i + 1)
            del parent[v]

    yield from rec(0)


def enumerate_by_arc_subsets(D: Digraph, r: int) -> Iterator[OutTree]:
    """Second, independent enumerator: filter all ``(n-1)``-subsets of arcs."""
    D.check_vertex(r)
    n = D.n
    for subset in itertools.combinations(D.sorted_arcs(), n - 1):
        heads = [v for _, v in subset]
        if r in heads or len(set(heads)) != n - 1:
            continue
        sub = Digraph(n, subset)
        if len(reachable_set(sub, r)) == n:
            yield OutTree.from_arcs(r, subset, range(n))


def max_leaves_by_enumeration(D: Digraph, roots: Optional[list[int]] = None) -> tuple[int, Optional[OutTree]]:
    best, best_tree = 0, None
    for r in roots if roots is not None else D.vertices():
        for T in enumerate_out_branchings(D, r):
            c = len(T.leaves())
            if c > best:
                best, best_tree = c, T
    return best, best_tree


def _branching_with_internal(D: Digraph, r: int, internal: set[int]) -> Optional[OutTree]:
    """An r-rooted out-branching whose non-leaves all lie in ``internal``, if one exists."""
    parent: dict[int, int] = {}
    seen = {r}
    frontier = [r]
    while frontier:
        nxt = []
        for a in frontier:
            for b in D.out_neighbors(a):
                if b in internal and b not in seen:
                    seen.add(b)
                    parent[b] = a
                    nxt.append(b)
        frontier = nxt
    if seen != internal:
        return None
    for v in D.vertices():
        if v in internal:
            continue
        ps = [p for p in D.in_neighbors(v) if p in internal]
        if not ps:
            return None
        parent[v] = ps[0]
    return OutTree(r, parent, D.vertices())


def brute_force_max_leaves(D: Digraph, roots: Optional[list[int]] = None) -> tuple[int, Optional[OutTree]]:
    """Maximum leaf count over all roots and out-branchings, with a witness.

    Exhausts candidate sets of non-leaf vertices: a set ``S`` containing the
    root is the non-leaf set of some branching with at least ``n - |S|``
    leaves iff the root reaches all of ``S`` inside ``S`` and every other
    vertex has an in-neighbour in ``S``.  Smallest sets are tried first.
    """
    n = D.n
    candidates = [r for r in (roots if roots is not None else D.vertices()) if reaches_all(D, r)]
    if not candidates:
        return 0, None
    if n == 1:
        return 1, OutTree.trivial(0)
    best, best_tree = 0, None
    for size in range(1, n):
        for r in candidates:
            others = [v for v in D.vertices() if v != r]
            for rest in itertools.combinations(others, size - 1):
                T = _branching_with_internal(D, r, {r, *rest})
                if T is not None:
                    c = len(T.leaves())
                    if c > best:
                        best, best_tree = c, T
        if best_tree is not None:
            return best, best_tree
    return best, best_tree


def random_digraph(n: int, m: int, seed: int) -> Digraph:
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    m = min(m, len(pairs))
    return Digraph(n, rng.sample(pairs, m))


def plant(k: int, seed: int, trigger: bool = False) -> Digraph:
    """Generate an instance with a known out-branching of at least ``k`` leaves.

    The default family plants a random out-tree with ``k`` leaves and adds a
    few random arcs.

    With ``trigger=True`` the instance is built around a long spine from the
    root, with at least ``6k^2`` spine vertices receiving backward arcs from a
    tail region further down.  Even seeds enter the tails from extra leaves
    hanging off the root; odd seeds enter them from a side leaf ``y`` hung
    off a spine vertex below all heads (the root has an arc to ``y``, and the
    root gets the largest index so the greedy start tree keeps ``y`` below
    the spine).  In both cases the local-search branching is the planted one
    and the heavy-pair scan fires on it.
    """
    if k < 2:
        raise ValueError("plant needs k >= 2")
    rng = random.Random(seed)
    if not trigger:
        return _plant_leafy(k, rng)
    side_entry = seed % 2 == 1
    arms = max(0, k - 3) if side_entry else max(1, k - 2)
    heads = 6 * k * k + rng.randint(0, k)
    gap = rng.randint(1, 3)
    ntails = rng.randint(1, 3)
    after = rng.randint(0, 3)
    spine_len = 1 + heads + gap + ntails + after
    # symbolic labels: spine 1..spine_len, then arms, then y; root relabelled below
    spine = list(range(1, spine_len + 1))
    arm_ids = list(range(spine_len + 1, spine_len + 1 + arms))
    y = spine_len + 1 + arms
    n = y + 1 if side_entry else y
    head_ids = spine[1:1 + heads]
    gap_ids = spine[1 + heads:1 + heads + gap]
    tail_ids = spine[1 + heads + gap:1 + heads + gap + ntails]
    arcs = [(0, spine[0])] + list(zip(spine, spine[1:])) + [(0, a) for a in arm_ids]
    entries = list(arm_ids)
    if side_entry:
        arcs += [(rng.choice(gap_ids), y), (0, y)]
        entries = [y]
    for h in head_ids:
        arcs.append((rng.choice(tail_ids), h))
    for t in tail_ids:
        arcs.append((rng.choice(entries), t))
        if rng.random() < 0.5:
            arcs.append((rng.choice(entries), t))
    for _ in range(rng.randint(0, heads // 4)):
        a, b = sorted(rng.sample(spine[1:], 2))
        arcs.append((b, a))
    if side_entry:
        # root takes the largest label so the greedy start tree grows the spine first
        relabel = {v: (n - 1 if v == 0 else v - 1) for v in range(n)}
        arcs = [(relabel[a], relabel[b]) for a, b in arcs]
    return Digraph(n, arcs)


def _plant_leafy(k: int, rng: random.Random) -> Digraph:
    inner = 1 + rng.randint(0, k)
    n = inner + k
    label = list(range(n))
    rng.shuffle(label)
    arcs = set()
    for v in range(1, inner):
        arcs.add((label[rng.randrange(v)], label[v]))
    # the k vertices from index `inner` on are leaves of the planted tree
    for v in range(inner, n):
        arcs.add((label[rng.randrange(inner)], label[v]))
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(n), 2)
        arcs.add((u, v))
    return Digraph(n, arcs)
