"""Command-line entry point.

Exit codes: 0 for YES, 1 for NO, 2 for any error (including failed
``--validate`` checks).
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from .graph import Digraph, InputError, InvariantViolation, spanning_roots
from .io import format_decision, format_digraph, parse_digraph
from .oracle import plant, random_digraph
from .pathdecomp import build_path_decomposition
from .solver import MODES, prepare_root, solve

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _generate(gen: str) -> Digraph:
    kind, _, rest = gen.partition(":")
    try:
        args = [int(x) for x in rest.split(":")] if rest else []
    except ValueError:
        raise InputError(f"bad generator arguments in {gen!r}") from None
    if kind == "plant" and len(args) == 2:
        return plant(args[0], args[1], trigger=True)
    if kind == "random" and len(args) == 3:
        return random_digraph(*args)
    raise InputError(f"unknown generator {gen!r}; use plant:<k>:<seed> or random:<n>:<m>:<seed>")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kleaf", description="Decide whether a digraph has an out-branching with at least k leaves.")
    p.add_argument("input", nargs="?", help="digraph file ('-' or omitted for stdin)")
    p.add_argument("--k", type=int, help="required number of leaves")
    p.add_argument("--mode", choices=MODES, default="auto")
    p.add_argument("--root", type=int, help="only consider this root")
    p.add_argument("--witness", action="store_true", help="print the out-branching on YES")
    p.add_argument("--emit-pathdecomp", metavar="PATH", help="write the path decomposition used for the answering root")
    p.add_argument("--gen", metavar="GEN", help="plant:<k>:<seed> or random:<n>:<m>:<seed>; prints the graph unless --k is given")
    p.add_argument("--validate", action="store_true", help="re-check witness and intermediate structures")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _emit_pathdecomp(D: Digraph, path: str, dec, root: Optional[int]) -> None:
    pd = None
    for run in dec.details.get("runs", []):
        if run.pathdecomp is not None and (dec.root is None or run.root == dec.root):
            pd = run.pathdecomp
    if pd is None:
        roots = [dec.root] if dec.root is not None else [r for r in spanning_roots(D) if root is None or r == root]
        if not roots:
            raise InputError("no root reaches all vertices; no decomposition to emit")
        run = prepare_root(D, roots[0])
        pd = build_path_decomposition(run.reduced, run.tree)
    with open(path, "w") as fh:
        pd.write(fh)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        if args.gen:
            D = _generate(args.gen)
            if args.k is None:
                sys.stdout.write(format_digraph(D))
                return EXIT_YES
        else:
            if args.input in (None, "-"):
                text = sys.stdin.read()
            else:
                with open(args.input) as fh:
                    text = fh.read()
            D = parse_digraph(text)
        if args.k is None:
            raise InputError("--k is required")
        roots = [args.root] if args.root is not None else None
        dec = solve(D, args.k, mode=args.mode, roots=roots, check=args.validate)
        if args.emit_pathdecomp:
            _emit_pathdecomp(D, args.emit_pathdecomp, dec, args.root)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except InvariantViolation as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(format_decision(dec, witness=args.witness))
    return EXIT_YES if dec.answer else EXIT_NO


if __name__ == "__main__":
    sys.exit(main())
