"""Height-layered path decomposition of the underlying graph of a digraph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TextIO

from .graph import Arc, Digraph, InputError, OutTree


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self) -> int:
        return len(self.bags)

    def dumps(self) -> str:
        lines = [f"pd {len(self.bags)} {self.width}"]
        lines += [" ".join(map(str, b)) for b in self.bags]
        return "\n".join(lines) + "\n"

    def write(self, fh: TextIO) -> None:
        fh.write(self.dumps())


def height(T: OutTree, v: int) -> int:
    return T.depth(v)


def build_path_decomposition(D: Digraph, T: OutTree) -> PathDecomposition:
    """Bags indexed by tree height.

    Bag ``i`` (``1 <= i <= max height``) holds the vertices at height ``i``,
    every leaf and BrSucc vertex, and each vertex of smaller height with an
    underlying-graph neighbour ``u`` of height ``>= i`` that is neither a leaf
    nor in BrSucc.  The root is added to the first bag.
    """
    T.check_in(D)
    n = D.n
    h = [T.depth(v) for v in range(n)]
    top = max(h)
    if top == 0:
        return PathDecomposition(((T.root,),))
    leaves = T.leaves()
    brs = T.br_succ()
    everywhere = leaves | brs
    # last bag index each vertex must stay in because of a deeper regular neighbour
    reach = list(h)
    for a, b in D.underlying_edges():
        for v, u in ((a, b), (b, a)):
            if u not in everywhere and h[u] > reach[v]:
                reach[v] = h[u]
    bags = []
    for i in range(1, top + 1):
        bag = set(everywhere)
        bag.update(v for v in range(n) if h[v] <= i <= reach[v])
        if i == 1:
            bag.add(T.root)
        bags.append(tuple(sorted(bag)))
    return PathDecomposition(tuple(bags))


def validate(pd: PathDecomposition, n: int, edges: Iterable[Arc]) -> tuple[bool, str]:
    """Check the three path-decomposition axioms for a graph on ``0..n-1``.

    Returns ``(ok, message)``; the message names the violated axiom and a
    witness vertex or edge.
    """
    where: dict[int, list[int]] = {}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            if not 0 <= v < n:
                return False, f"bag {i} holds unknown vertex {v}"
            where.setdefault(v, []).append(i)
    for v in range(n):
        if v not in where:
            return False, f"axiom 1: vertex {v} is in no bag"
    for a, b in edges:
        if a == b:
            continue
        if not set(where[a]).intersection(where[b]):
            return False, f"axiom 2: edge {a}-{b} is in no bag"
    for v, idx in where.items():
        if idx[-1] - idx[0] + 1 != len(idx):
            return False, f"axiom 3: bags holding vertex {v} are not consecutive"
    return True, "ok"


def check_width_bound(pd: PathDecomposition, k: int) -> bool:
    return pd.width <= 6 * k ** 3


def parse_path_decomposition(text: str) -> PathDecomposition:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty path decomposition")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "pd":
        raise InputError("first line must be 'pd <bags> <width>'")
    count = int(head[1])
    bags = tuple(tuple(int(t) for t in ln.split()) for ln in lines[1:])
    if len(bags) != count:
        raise InputError(f"expected {count} bags, found {len(bags)}")
    pd = PathDecomposition(bags)
    if pd.width != int(head[2]):
        raise InputError("declared width does not match the bags")
    return pd
