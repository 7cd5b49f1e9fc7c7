"""Digraphs, out-trees and the tree order.

Vertices are dense integer indices ``0..n-1``.  All structures are treated as
immutable once built; operations that "modify" a tree return a new one.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Iterator, Optional

Arc = tuple[int, int]


class InputError(ValueError):
    """Raised when an operation is called with arguments violating its contract."""


class InvariantViolation(RuntimeError):
    """Raised when an internal consistency check fails (a bug, not bad input)."""


class Digraph:
    """A simple digraph on vertices ``0..n-1``.

    Self-loops and repeated arcs are dropped at construction.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        kept = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u != v:
                kept.add((u, v))
        self.n = n
        self.arcs: frozenset[Arc] = frozenset(kept)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(kept):
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(a) for a in out)
        self._in = tuple(tuple(a) for a in inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def with_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        return Digraph(self.n, arcs)

    def underlying_edges(self) -> set[Arc]:
        """Edges of the underlying undirected graph as ``(min, max)`` pairs."""
        return {(min(u, v), max(u, v)) for u, v in self.arcs}

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError(f"vertex {v!r} is not in 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


def reachable_set(D: Digraph, u: int, avoid: Optional[int] = None) -> set[int]:
    """Vertices reachable from ``u`` by a dipath (``u`` included).

    If ``avoid`` is given, the search runs in ``D - avoid``.
    """
    D.check_vertex(u)
    if u == avoid:
        return set()
    seen = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in D.out_neighbors(a):
            if b not in seen and b != avoid:
                seen.add(b)
                stack.append(b)
    return seen


def reaches_all(D: Digraph, r: int) -> bool:
    return len(reachable_set(D, r)) == D.n


def spanning_roots(D: Digraph) -> list[int]:
    """All vertices from which every vertex is reachable, ascending."""
    return [r for r in D.vertices() if reaches_all(D, r)]


def shortest_path(D: Digraph, s: int, t: int, avoid: Optional[int] = None) -> Optional[list[int]]:
    """BFS path from ``s`` to ``t`` (lowest-index neighbours first), or None."""
    if s == avoid or t == avoid:
        return None
    prev = {s: s}
    queue = deque([s])
    while queue:
        a = queue.popleft()
        if a == t:
            path = [t]
            while path[-1] != s:
                path.append(prev[path[-1]])
            return path[::-1]
        for b in D.out_neighbors(a):
            if b not in prev and b != avoid:
                prev[b] = a
                queue.append(b)
    return None


class OutTree:
    """A rooted out-tree given by its parent map.

    ``parent`` has an entry for every tree vertex except the root.  The
    constructor checks the structural invariants; use :meth:`check_in` to
    also check membership of the arcs in a host digraph.
    """

    def __init__(self, root: int, parent: dict[int, int], vertices: Optional[Iterable[int]] = None):
        self.root = root
        self.parent: dict[int, int] = dict(parent)
        if vertices is None:
            vset = {root, *self.parent, *self.parent.values()}
        else:
            vset = set(vertices)
        self.vertices: frozenset[int] = frozenset(vset)
        self._children: Optional[dict[int, list[int]]] = None
        self._tin: Optional[dict[int, int]] = None
        self._tout: Optional[dict[int, int]] = None
        self._depth: Optional[dict[int, int]] = None
        self._check_structure()

    # construction helpers

    @classmethod
    def from_arcs(cls, root: int, arcs: Iterable[Arc], vertices: Optional[Iterable[int]] = None) -> "OutTree":
        parent: dict[int, int] = {}
        for u, v in arcs:
            if v in parent:
                raise InputError(f"vertex {v} has two parents")
            parent[v] = u
        return cls(root, parent, vertices)

    @classmethod
    def trivial(cls, root: int) -> "OutTree":
        return cls(root, {}, [root])

    def _check_structure(self) -> None:
        if self.root not in self.vertices:
            raise InputError("root is not a tree vertex")
        if self.root in self.parent:
            raise InputError("root has a parent")
        for v, p in self.parent.items():
            if v not in self.vertices or p not in self.vertices:
                raise InputError(f"parent arc ({p}, {v}) leaves the vertex set")
        if len(self.parent) != len(self.vertices) - 1:
            raise InputError("every non-root tree vertex needs exactly one parent")
        # every vertex must climb to the root without revisiting
        status: dict[int, int] = {self.root: 2}
        for v in self.vertices:
            trail = []
            while status.get(v) is None:
                status[v] = 1
                trail.append(v)
                v = self.parent[v]
            if status[v] == 1:
                raise InputError("parent arcs contain a cycle")
            for t in trail:
                status[t] = 2

    # basic queries

    def arcs(self) -> set[Arc]:
        return {(p, v) for v, p in self.parent.items()}

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs(), key=lambda a: (a[1], a[0]))

    def is_spanning(self, n: int) -> bool:
        return len(self.vertices) == n and all(0 <= v < n for v in self.vertices)

    @property
    def children(self) -> dict[int, list[int]]:
        if self._children is None:
            ch: dict[int, list[int]] = {v: [] for v in self.vertices}
            for v in sorted(self.parent):
                ch[self.parent[v]].append(v)
            self._children = ch
        return self._children

    def out_degree(self, v: int) -> int:
        return len(self.children[v])

    def leaves(self) -> set[int]:
        return {v for v, ch in self.children.items() if not ch}

    def branch_vertices(self) -> set[int]:
        return {v for v, ch in self.children.items() if len(ch) >= 2}

    def br_succ(self) -> set[int]:
        """Vertices whose parent has out-degree at least two."""
        ch = self.children
        return {v for v, p in self.parent.items() if len(ch[p]) >= 2}

    def _index(self) -> None:
        tin: dict[int, int] = {}
        tout: dict[int, int] = {}
        depth = {self.root: 0}
        clock = 0
        stack: list[tuple[int, bool]] = [(self.root, False)]
        ch = self.children
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock
                continue
            tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in reversed(ch[v]):
                depth[c] = depth[v] + 1
                stack.append((c, False))
        self._tin, self._tout, self._depth = tin, tout, depth

    def depth(self, v: int) -> int:
        if self._depth is None:
            self._index()
        self._require(v)
        return self._depth[v]  # type: ignore[index]

    def leq(self, u: int, v: int) -> bool:
        """True iff ``v`` is ``u`` or a descendant of ``u``."""
        if self._tin is None:
            self._index()
        self._require(u)
        self._require(v)
        tin, tout = self._tin, self._tout
        return tin[u] <= tin[v] and tout[v] <= tout[u]  # type: ignore[index]

    def lt(self, u: int, v: int) -> bool:
        return u != v and self.leq(u, v)

    def path_from_root(self, v: int) -> list[int]:
        self._require(v)
        path = [v]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path[::-1]

    def descendants(self, v: int) -> set[int]:
        self._require(v)
        out = {v}
        stack = [v]
        while stack:
            for c in self.children[stack.pop()]:
                out.add(c)
                stack.append(c)
        return out

    def _require(self, v: int) -> None:
        if v not in self.vertices:
            raise InputError(f"vertex {v!r} is not in the tree")

    def with_parent(self, v: int, p: int) -> "OutTree":
        parent = dict(self.parent)
        parent[v] = p
        return OutTree(self.root, parent, self.vertices)

    def check_in(self, D: Digraph, spanning: bool = True) -> None:
        """Raise InputError unless this is an out-tree (out-branching) of ``D``."""
        for v, p in self.parent.items():
            if not D.has_arc(p, v):
                raise InputError(f"tree arc ({p}, {v}) is not an arc of the digraph")
        if not all(0 <= v < D.n for v in self.vertices):
            raise InputError("tree vertex outside the digraph")
        if spanning and len(self.vertices) != D.n:
            raise InputError("tree does not span the digraph")

    def is_out_branching_of(self, D: Digraph) -> bool:
        try:
            self.check_in(D)
        except InputError:
            return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OutTree):
            return NotImplemented
        return self.root == other.root and self.parent == other.parent and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.root, frozenset(self.parent.items())))

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.vertices))

    def __repr__(self) -> str:
        return f"OutTree(root={self.root}, arcs={self.sorted_arcs()})"


def tree_leq(T: OutTree, u: int, v: int) -> bool:
    return T.leq(u, v)


def leaves(T: OutTree) -> set[int]:
    return T.leaves()


def br_succ(T: OutTree) -> set[int]:
    return T.br_succ()


def extend_to_out_branching(D: Digraph, T: OutTree) -> OutTree:
    """Grow ``T`` into an out-branching of ``D`` by greedily adding arcs.

    At each step the lexicographically smallest arc ``(tail, head)`` with the
    tail inside the tree and the head outside it is added.
    """
    T.check_in(D, spanning=False)
    if not reaches_all(D, T.root):
        raise InputError("root does not reach all vertices")
    parent = dict(T.parent)
    inside = set(T.vertices)
    heap: list[Arc] = [(u, v) for u in inside for v in D.out_neighbors(u) if v not in inside]
    heapq.heapify(heap)
    while heap:
        u, v = heapq.heappop(heap)
        if v in inside:
            continue
        parent[v] = u
        inside.add(v)
        for w in D.out_neighbors(v):
            if w not in inside:
                heapq.heappush(heap, (v, w))
    if len(inside) != D.n:
        raise InvariantViolation("greedy extension did not span the digraph")
    return OutTree(T.root, parent, inside)
