"""Dynamic programming for leafy out-branchings over a path decomposition.

The decomposition is refined into a sequence of introduce / edge / forget
events.  A state records, for each active vertex, whether it already has its
parent (the root counts as parented), whether it has a child, and which
connected block of the partial branching it belongs to, plus the number of
forgotten leaves (saturated at ``k``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Arc, Digraph, InputError, OutTree
from .pathdecomp import PathDecomposition, validate

INTRODUCE = "introduce"
FORGET = "forget"
EDGE = "edge"

Event = tuple  # ("introduce", v) | ("forget", v) | ("edge", u, v)

PARENTED = 1
HAS_CHILD = 2


@dataclass(frozen=True)
class NicePathDecomposition:
    events: tuple[Event, ...]
    n: int

    def replay(self) -> list[tuple[int, ...]]:
        """Active vertex set after each event."""
        active: set[int] = set()
        out = []
        for ev in self.events:
            if ev[0] == INTRODUCE:
                active.add(ev[1])
            elif ev[0] == FORGET:
                active.discard(ev[1])
            out.append(tuple(sorted(active)))
        return out


@dataclass
class Decision:
    answer: bool
    witness: Optional[OutTree] = None
    root: Optional[int] = None
    route: str = ""
    details: dict = field(default_factory=dict)

    @property
    def leaf_count(self) -> int:
        return len(self.witness.leaves()) if self.witness is not None else 0


def to_nice(pd: PathDecomposition, n: int, edges: Iterable[Arc]) -> NicePathDecomposition:
    """Refine bags into events; each edge is emitted once, when its later endpoint is introduced.

    All vertices still active after the last bag are forgotten at the end.
    """
    edges = {(min(a, b), max(a, b)) for a, b in edges if a != b}
    ok, msg = validate(pd, n, edges)
    if not ok:
        raise InputError(f"invalid path decomposition: {msg}")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    events: list[Event] = []
    active: set[int] = set()
    done: set[tuple[int, int]] = set()
    for bag in pd.bags:
        bag_set = set(bag)
        for v in sorted(active - bag_set):
            events.append((FORGET, v))
            active.discard(v)
        for v in sorted(bag_set - active):
            events.append((INTRODUCE, v))
            active.add(v)
            for u in sorted(adj[v] & active):
                e = (min(u, v), max(u, v))
                if e not in done:
                    done.add(e)
                    events.append((EDGE, *e))
    for v in sorted(active):
        events.append((FORGET, v))
    if done != edges:
        raise InputError("some edges are never covered by a bag")
    return NicePathDecomposition(tuple(events), n)


def _canon(entries: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    relabel: dict[int, int] = {}
    out = []
    for flags, blk in entries:
        if blk not in relabel:
            relabel[blk] = len(relabel)
        out.append((flags, relabel[blk]))
    return tuple(out)


def count_leaf_branching(D: Digraph, npd: NicePathDecomposition, k: int, root: int) -> Decision:
    """Decide whether ``D`` has an out-branching rooted at ``root`` with at least ``k`` leaves.

    On YES the witness is rebuilt from back-pointers.
    """
    D.check_vertex(root)
    if npd.n != D.n:
        raise InputError("decomposition is for a different vertex count")
    k = max(k, 0)
    events = npd.events
    last = len(events) - 1
    future = [0] * (len(events) + 1)
    for i in range(len(events) - 1, -1, -1):
        future[i] = future[i + 1] + (events[i][0] == INTRODUCE)

    active: list[int] = []
    states: dict = {((), 0): None}
    history: list[dict] = []

    for i, ev in enumerate(events):
        nxt: dict = {}
        kind = ev[0]
        if kind == INTRODUCE:
            v = ev[1]
            pos = _insert_pos(active, v)
            active = active[:pos] + [v] + active[pos:]
            flags = PARENTED if v == root else 0
            for key in states:
                entries, lc = key
                fresh = max((b for _, b in entries), default=-1) + 1
                new = list(entries)
                new.insert(pos, (flags, fresh))
                nk = (_canon(new), lc)
                if nk not in nxt and _hopeful(nk, future[i + 1], k):
                    nxt[nk] = (key, None)
        elif kind == EDGE:
            a, b = ev[1], ev[2]
            ia, ib = active.index(a), active.index(b)
            for key in states:
                entries, lc = key
                if key not in nxt:
                    nxt[key] = (key, None)
                for (p, ip), (c, ic) in (((a, ia), (b, ib)), ((b, ib), (a, ia))):
                    if not D.has_arc(p, c):
                        continue
                    fp, bp = entries[ip]
                    fc, bc = entries[ic]
                    if fc & PARENTED or bp == bc:
                        continue
                    new = [(f, bp if bb == bc else bb) for f, bb in entries]
                    new[ip] = (fp | HAS_CHILD, bp)
                    new[ic] = (fc | PARENTED, bp)
                    nk = (_canon(new), lc)
                    if nk not in nxt and _hopeful(nk, future[i + 1], k):
                        nxt[nk] = (key, (p, c))
        elif kind == FORGET:
            v = ev[1]
            iv = active.index(v)
            active = active[:iv] + active[iv + 1:]
            for key in states:
                entries, lc = key
                fv, bv = entries[iv]
                if not fv & PARENTED:
                    continue
                rest = entries[:iv] + entries[iv + 1:]
                if i != last and all(b != bv for _, b in rest):
                    continue
                nlc = min(k, lc + (0 if fv & HAS_CHILD else 1))
                nk = (_canon(list(rest)), nlc)
                if nk not in nxt and _hopeful(nk, future[i + 1], k):
                    nxt[nk] = (key, None)
        else:
            raise InputError(f"unknown event {ev!r}")
        history.append(nxt)
        states = nxt
        if not states:
            break

    final = ((), k)
    if len(history) != len(events) or final not in states:
        return Decision(False, None, root, "dp")
    arcs: list[Arc] = []
    key = final
    for step in reversed(history):
        prev, arc = step[key]
        if arc is not None:
            arcs.append(arc)
        key = prev
    witness = OutTree.from_arcs(root, arcs, range(D.n))
    return Decision(True, witness, root, "dp")


def _hopeful(key, future_intros: int, k: int) -> bool:
    """Upper bound on reachable leaves: forgotten leaves, childless actives, unseen vertices."""
    entries, lc = key
    return lc + future_intros + sum(1 for f, _ in entries if not f & HAS_CHILD) >= k


def _insert_pos(active: list[int], v: int) -> int:
    pos = 0
    while pos < len(active) and active[pos] < v:
        pos += 1
    return pos
