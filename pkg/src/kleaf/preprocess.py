"""Removal of arcs that lie in no out-branching with a given root."""

from __future__ import annotations

from .graph import Arc, Digraph, InputError, reachable_set, reaches_all


def _require_root(D: Digraph, r: int) -> None:
    D.check_vertex(r)
    if not reaches_all(D, r):
        raise InputError("root does not reach all vertices")


def _useless(D: Digraph, r: int, u: int, v: int) -> bool:
    if v == r:
        return True
    if u == r:
        return False
    # (u, v) ends some dipath from r iff r reaches u without passing v
    return u not in reachable_set(D, r, avoid=v)


def is_useless(D: Digraph, r: int, arc: Arc) -> bool:
    """True iff no out-branching of ``D`` rooted at ``r`` contains ``arc``."""
    _require_root(D, r)
    u, v = arc
    if not D.has_arc(u, v):
        raise InputError(f"({u}, {v}) is not an arc of the digraph")
    return _useless(D, r, u, v)


def remove_useless_arcs(D: Digraph, r: int) -> Digraph:
    """Return the subdigraph keeping only arcs usable by an ``r``-rooted out-branching."""
    _require_root(D, r)
    return D.with_arcs(a for a in D.sorted_arcs() if not _useless(D, r, *a))
