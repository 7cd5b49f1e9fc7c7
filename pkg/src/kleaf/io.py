"""Text formats for digraphs and answers."""

from __future__ import annotations

import logging

from .dp import Decision
from .graph import Digraph, InputError

log = logging.getLogger(__name__)


class ParseError(InputError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _ints(lineno: int, line: str, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(lineno, f"expected {count} integers, got {len(parts)}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(lineno, f"not an integer in {line.strip()!r}") from None


def parse_digraph(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines and blanks are skipped.

    Duplicate arcs and self-loops are dropped with a warning.
    """
    rows = [(i, ln) for i, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise ParseError(1, "missing header 'n m'")
    lineno, header = rows[0]
    n, m = _ints(lineno, header, 2)
    if n < 1:
        raise ParseError(lineno, "vertex count must be at least 1")
    if m < 0:
        raise ParseError(lineno, "arc count must be non-negative")
    body = rows[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(where, f"header announces {m} arcs, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    for lineno, line in body:
        u, v = _ints(lineno, line, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex index out of range 0..{n - 1}")
        if u == v:
            log.warning("line %d: dropping self-loop at %d", lineno, u)
            continue
        if (u, v) in seen:
            log.warning("line %d: dropping duplicate arc %d %d", lineno, u, v)
            continue
        seen.add((u, v))
    return Digraph(n, seen)


def format_digraph(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"] + [f"{u} {v}" for u, v in D.sorted_arcs()]
    return "\n".join(lines) + "\n"


def format_decision(dec: Decision, witness: bool = False) -> str:
    if not dec.answer:
        return "NO\n"
    lines = [f"YES {dec.leaf_count}"]
    if witness and dec.witness is not None:
        lines += [f"{p} {v}" for p, v in dec.witness.sorted_arcs()]
        lines.append(f"root {dec.witness.root}")
    return "\n".join(lines) + "\n"
