"""Building a leafy out-branching from a heavy backward-arc pair.

Given a 1-optimal out-branching ``T`` (rooted at ``r``) of a digraph without
useless arcs for ``r``, and a leaf ``l`` with a vertex ``z`` on its root path
such that many distinct non-BrSucc vertices are heads of backward arcs into
the interval ``[z, l]``, the construction below rewires ``T`` into an
out-branching with at least ``k`` leaves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence, TypeVar

from .backward import BackwardReport
from .graph import Arc, Digraph, InputError, InvariantViolation, OutTree, shortest_path
from .local_search import apply_path_changes, one_change

V = TypeVar("V", bound=Hashable)


@dataclass(frozen=True)
class ArcWitness:
    """Route from the root ending in ``arc`` plus the marked vertices on it.

    ``x`` is the last path vertex outside the subtree of the arc's head, ``y``
    its successor on the path, and ``w`` the first vertex after ``x`` lying
    on the tree path from the head to the tail.
    """

    arc: Arc
    path: tuple[int, ...]
    x: int
    y: int
    w: int

    def subpath(self, start: int, end: int) -> list[int]:
        i = self.path.index(start)
        j = self.path.index(end)
        if j < i:
            raise InvariantViolation(f"{end} precedes {start} on the witness path")
        return list(self.path[i:j + 1])


def witness_path(D: Digraph, r: int, arc: Arc) -> list[int]:
    """Shortest dipath from ``r`` to ``u`` avoiding ``v``, followed by ``(u, v)``."""
    u, v = arc
    if not D.has_arc(u, v):
        raise InputError(f"({u}, {v}) is not an arc of the digraph")
    prefix = shortest_path(D, r, u, avoid=v)
    if prefix is None:
        raise InvariantViolation(f"arc ({u}, {v}) is useless for root {r}")
    return prefix + [v]


def annotate_arc(D: Digraph, T: OutTree, arc: Arc) -> ArcWitness:
    u, v = arc
    if not T.lt(v, u):
        raise InputError(f"arc ({u}, {v}) does not point back along the tree")
    path = witness_path(D, T.root, arc)
    ix = max(i for i, q in enumerate(path) if not T.leq(v, q))
    x, y = path[ix], path[ix + 1]
    # vertices after x all lie below v, and u itself comes after x
    w = next(q for q in path[ix + 1:] if T.leq(v, q) and T.leq(q, u))
    return ArcWitness(arc, tuple(path), x, y, w)


def annotate(D: Digraph, T: OutTree, arcs: Sequence[Arc]) -> tuple[list[ArcWitness], list[ArcWitness]]:
    """Witnesses for ``arcs`` split into the x-leaf group and the y-BrSucc group.

    An arc qualifying for both groups goes to the first.
    """
    leaves = T.leaves()
    brs = T.br_succ()
    bx: list[ArcWitness] = []
    by: list[ArcWitness] = []
    for a in arcs:
        wit = annotate_arc(D, T, a)
        if wit.x in leaves:
            bx.append(wit)
        elif wit.y in brs:
            by.append(wit)
        else:
            raise InvariantViolation(f"arc ({wit.x}, {wit.y}) is an improving 1-change; T is not 1-optimal")
    return bx, by


def select_pivot(
    items: Sequence[tuple[tuple[V, V], V]],
    k: int,
    rank: Callable[[V], int],
) -> tuple[int, V, list[int]]:
    """Pick a pivot ``w`` lying strictly after at least ``k`` heads and at or before their tails.

    ``items`` holds ``((tail, head), w)`` with ``head < w <= tail`` under the
    linear order given by ``rank``; every head must precede every tail.
    Returns the index of the chosen item, its ``w``, and the indices of all
    items ``(x, y)`` with ``y < w <= x``.
    """
    if k < 1:
        raise InputError("k must be positive")
    if len(items) < 2 * k - 1:
        raise InputError(f"need at least {2 * k - 1} tuples, got {len(items)}")
    heads = sorted(rank(h) for (_, h), _ in items)
    tails = sorted(rank(t) for (t, _), _ in items)
    for (t, h), w in items:
        if not rank(h) < rank(w) <= rank(t):
            raise InputError("pivot witness not between head and tail")
    if heads[-1] >= tails[0]:
        raise InputError("heads must all precede tails")

    def left(h: V) -> int:
        return sum(1 for y in heads if y <= rank(h))

    def right(t: V) -> int:
        return sum(1 for x in tails if x >= rank(t))

    survivors = [i for i, ((t, h), _) in enumerate(items) if left(h) >= k and right(t) >= k]
    if not survivors:
        raise InvariantViolation("no tuple survives both pruning rounds")
    chosen = survivors[0]
    w = items[chosen][1]
    rw = rank(w)
    inside = [i for i, ((t, h), _) in enumerate(items) if rank(h) < rw <= rank(t)]
    if len(inside) < k:
        raise InvariantViolation(f"pivot covers {len(inside)} tuples, expected at least {k}")
    return chosen, w, inside


def pick_arcs(D: Digraph, T: OutTree, report: BackwardReport) -> list[Arc]:
    """One backward arc per head in ``report.HB``, using the deepest tail."""
    best: dict[int, Arc] = {}
    for u, v in sorted(report.B):
        if v not in report.HB:
            continue
        cur = best.get(v)
        if cur is None or T.depth(u) > T.depth(cur[0]):
            best[v] = (u, v)
    return [best[v] for v in sorted(best)]


def _group(witnesses: list[ArcWitness], key: Callable[[ArcWitness], int], need: int) -> list[ArcWitness] | None:
    if not witnesses:
        return None
    counts = Counter(key(w) for w in witnesses)
    top, cnt = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    if cnt < need:
        return None
    return [w for w in witnesses if key(w) == top]


def leafy_from_heavy(D: Digraph, T: OutTree, report: BackwardReport, k: int) -> OutTree:
    """Run the rewiring construction, without the leaf-count shortcut.

    Needs a group of at least ``2(k+1)`` witnesses sharing ``x`` (all with
    ``x`` a leaf) or sharing ``y`` (all with ``y`` in BrSucc).
    """
    if k < 2:
        raise InputError("construction needs k >= 2")
    arcs = pick_arcs(D, T, report)
    for u, v in arcs:
        if not (T.lt(v, report.z) and T.leq(report.z, u) and T.leq(u, report.l)):
            raise InvariantViolation(f"arc ({u}, {v}) is not backward for the reported pair")
    bx, by = annotate(D, T, arcs)
    need = 2 * (k + 1)
    group = _group(bx, lambda a: a.x, need) if len(bx) >= 2 * k * k else None
    case_x = group is not None
    if group is None:
        group = _group(by, lambda a: a.y, need)
    if group is None:
        group = _group(bx, lambda a: a.x, need)
        case_x = group is not None
    if group is None:
        raise InvariantViolation("no x or y vertex is shared by enough witnesses")

    depth = T.depth
    items = [(wit.arc, wit.w) for wit in group]
    chosen, w, inside = select_pivot(items, k + 1, depth)
    pivot = group[chosen]
    selected = [group[i] for i in inside]
    lowest = min(selected, key=lambda a: depth(a.arc[1]))

    if case_x:
        x = pivot.x
        route = T.path_from_root(x) + pivot.subpath(x, w)[1:]
    else:
        x = lowest.x
        route = T.path_from_root(x) + pivot.subpath(pivot.y, w)
        if not D.has_arc(x, pivot.y):
            raise InvariantViolation(f"({x}, {pivot.y}) is not an arc")
    if len(set(route)) != len(route):
        raise InvariantViolation("rerouting path is not simple")

    T2 = apply_path_changes(T, route, D)
    for wit in selected:
        if wit is lowest:
            continue
        u, v = wit.arc
        if T2.leq(v, u):
            raise InvariantViolation(f"head {v} precedes tail {u} after rerouting")
        T2 = one_change(T2, (u, v))
    if len(T2.leaves()) < k:
        raise InvariantViolation(f"construction produced {len(T2.leaves())} leaves, expected >= {k}")
    return T2


def construct_leafy_branching(D: Digraph, T: OutTree, report: BackwardReport, k: int) -> OutTree:
    """An out-branching of ``D`` with at least ``k`` leaves.

    ``T`` must be a 1-optimal out-branching of ``D`` with no useless arcs for
    its root, and ``report`` a pair with ``|HB| >= 6k^2``.  If ``T`` already
    has ``k`` leaves it is returned as is.
    """
    if k < 2:
        raise InputError("construction needs k >= 2")
    if len(report.HB) < 6 * k * k:
        raise InputError(f"|HB| = {len(report.HB)} is below {6 * k * k}")
    T.check_in(D)
    if len(T.leaves()) >= k:
        return T
    return leafy_from_heavy(D, T, report, k)
