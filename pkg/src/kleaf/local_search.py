"""1-changes and 1-optimal out-branchings."""

from __future__ import annotations

from typing import Sequence

from .graph import Arc, Digraph, InputError, OutTree, extend_to_out_branching, reaches_all


def _check_change(T: OutTree, arc: Arc) -> None:
    u, v = arc
    if v not in T.vertices or u not in T.vertices:
        raise InputError(f"arc ({u}, {v}) has an endpoint outside the tree")
    if v == T.root:
        raise InputError("root has no parent")
    if T.parent[v] == u:
        raise InputError(f"arc ({u}, {v}) is already a tree arc")
    if T.leq(v, u):
        raise InputError(f"1-change for ({u}, {v}) would create cycle")


def one_change(T: OutTree, arc: Arc) -> OutTree:
    """Make ``u`` the parent of ``v``, dropping ``v``'s old tree arc."""
    _check_change(T, arc)
    u, v = arc
    return T.with_parent(v, u)


def improves(T: OutTree, arc: Arc) -> bool:
    """Whether the 1-change for ``arc`` strictly increases the leaf count."""
    _check_change(T, arc)
    return _improving(T, arc)


def _improving(T: OutTree, arc: Arc) -> bool:
    u, v = arc
    return T.out_degree(u) > 0 and T.out_degree(T.parent[v]) < 2


def _allowed(T: OutTree, arc: Arc) -> bool:
    u, v = arc
    return v != T.root and T.parent[v] != u and not T.leq(v, u)


def improving_arcs(D: Digraph, T: OutTree) -> list[Arc]:
    """All non-tree arcs whose 1-change is allowed and adds a leaf."""
    return [a for a in D.sorted_arcs() if _allowed(T, a) and _improving(T, a)]


def initial_out_branching(D: Digraph, r: int) -> OutTree:
    return extend_to_out_branching(D, OutTree.trivial(r))


def one_optimal_out_branching(D: Digraph, r: int) -> OutTree:
    """Local search from the greedy branching until no 1-change adds a leaf.

    Arcs are scanned in lexicographic order; passes repeat until a full pass
    makes no change.  Each applied change adds a leaf, so at most ``n - 1``
    changes happen in total.
    """
    D.check_vertex(r)
    if not reaches_all(D, r):
        raise InputError("root does not reach all vertices")
    T = initial_out_branching(D, r)
    arcs = D.sorted_arcs()
    changed = True
    while changed:
        changed = False
        for a in arcs:
            if _allowed(T, a) and _improving(T, a):
                T = T.with_parent(a[1], a[0])
                changed = True
    return T


def _check_root_path(T: OutTree, path: Sequence[int]) -> None:
    if not path or path[0] != T.root:
        raise InputError("path must start at the root of the tree")
    if len(set(path)) != len(path):
        raise InputError("path is not simple")
    for v in path:
        if v not in T.vertices:
            raise InputError(f"path vertex {v} is not in the tree")


def apply_path_changes(T: OutTree, path: Sequence[int], D: Digraph | None = None) -> OutTree:
    """Make the 1-change for every arc of ``path`` missing from ``T``, in path order.

    The result contains every arc of the path.  If ``D`` is given, the path
    arcs are checked against it.
    """
    _check_root_path(T, path)
    for a, b in zip(path, path[1:]):
        if D is not None and not D.has_arc(a, b):
            raise InputError(f"({a}, {b}) is not an arc of the digraph")
        if T.parent.get(b) != a:
            T = one_change(T, (a, b))
    return T
