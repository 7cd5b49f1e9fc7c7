"""Backward arcs relative to an out-branching and the heavy-pair scan."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Arc, Digraph, InputError, OutTree


@dataclass(frozen=True)
class BackwardReport:
    z: int
    l: int
    B: frozenset[Arc]
    HB: frozenset[int]


def _check_pair(T: OutTree, z: int, l: int) -> None:
    if l not in T.vertices or T.out_degree(l) != 0:
        raise InputError(f"{l!r} is not a leaf of the tree")
    if z not in T.vertices or not T.leq(z, l):
        raise InputError(f"{z!r} does not precede leaf {l}")


def backward_arcs(D: Digraph, T: OutTree, z: int, l: int) -> frozenset[Arc]:
    """Arcs ``(u, v)`` with ``v`` a proper ancestor of ``z`` and ``u`` on the tree path z..l."""
    _check_pair(T, z, l)
    path = T.path_from_root(l)
    j = path.index(z)
    before = set(path[:j])
    return frozenset((u, v) for u in path[j:] for v in D.out_neighbors(u) if v in before)


def hb_set(D: Digraph, T: OutTree, z: int, l: int) -> frozenset[int]:
    heads = {v for _, v in backward_arcs(D, T, z, l)}
    return frozenset(heads - T.br_succ())


def report_for(D: Digraph, T: OutTree, z: int, l: int) -> BackwardReport:
    B = backward_arcs(D, T, z, l)
    return BackwardReport(z, l, B, frozenset({v for _, v in B} - T.br_succ()))


def hb_profile(D: Digraph, T: OutTree, l: int) -> list[int]:
    """``|HB(z, l)|`` for every ``z`` on the root-to-``l`` path, in depth order.

    Head ``path[a]`` belongs to ``Head(B(path[j], l))`` exactly when
    ``a < j <= t`` for the deepest tail position ``t`` of an arc into it, so
    one difference array over the path gives every count.
    """
    _check_pair(T, l, l)
    path = T.path_from_root(l)
    pos = {v: i for i, v in enumerate(path)}
    brs = T.br_succ()
    deepest = [-1] * len(path)
    for t, u in enumerate(path):
        for v in D.out_neighbors(u):
            a = pos.get(v)
            if a is not None and a < t:
                deepest[a] = max(deepest[a], t)
    diff = [0] * (len(path) + 1)
    for a, t in enumerate(deepest):
        if t > a and path[a] not in brs:
            diff[a + 1] += 1
            diff[t + 1] -= 1
    counts = []
    running = 0
    for j in range(len(path)):
        running += diff[j]
        counts.append(running)
    return counts


def find_heavy_pair(D: Digraph, T: OutTree, k: int) -> Optional[BackwardReport]:
    """First ``(z, l)`` with ``|HB(z, l)| >= 6k^2``, scanning leaves by index and z by depth."""
    threshold = 6 * k * k
    for l in sorted(T.leaves()):
        counts = hb_profile(D, T, l)
        for j, c in enumerate(counts):
            if c >= threshold:
                z = T.path_from_root(l)[j]
                return report_for(D, T, z, l)
    return None
