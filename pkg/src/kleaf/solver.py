"""End-to-end decision procedure for Directed Spanning k-Leaf."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from .backward import find_heavy_pair
from .dp import Decision, count_leaf_branching, to_nice
from .graph import Digraph, InputError, InvariantViolation, OutTree, extend_to_out_branching, spanning_roots
from .leafy import construct_leafy_branching
from .local_search import improving_arcs, one_optimal_out_branching
from .oracle import brute_force_max_leaves
from .pathdecomp import PathDecomposition, build_path_decomposition, check_width_bound, validate
from .preprocess import remove_useless_arcs

log = logging.getLogger(__name__)

MODES = ("auto", "fpt", "bruteforce")
BRUTEFORCE_MAX_N = 8


@dataclass
class RootRun:
    """What happened for one candidate root."""

    root: int
    reduced: Digraph
    tree: OutTree
    pathdecomp: Optional[PathDecomposition] = None


def prepare_root(D: Digraph, r: int) -> RootRun:
    reduced = remove_useless_arcs(D, r)
    return RootRun(r, reduced, one_optimal_out_branching(reduced, r))


def _check_witness(D: Digraph, k: int, dec: Decision) -> None:
    if not dec.answer:
        return
    if dec.witness is None or not dec.witness.is_out_branching_of(D):
        raise InvariantViolation("witness is not an out-branching of the input")
    if dec.leaf_count < k:
        raise InvariantViolation(f"witness has {dec.leaf_count} leaves, needed {k}")


def _check_run(run: RootRun, k: int, heavy: bool) -> None:
    D, T = run.reduced, run.tree
    if not T.is_out_branching_of(D):
        raise InvariantViolation("local search produced an invalid branching")
    bad = improving_arcs(D, T)
    if bad:
        raise InvariantViolation(f"branching is not 1-optimal: {bad[0]} improves it")
    if run.pathdecomp is not None:
        ok, msg = validate(run.pathdecomp, D.n, D.underlying_edges())
        if not ok:
            raise InvariantViolation(f"path decomposition invalid: {msg}")
        if not heavy and len(T.leaves()) <= k - 1 and not check_width_bound(run.pathdecomp, k):
            raise InvariantViolation(f"width {run.pathdecomp.width} exceeds {6 * k ** 3}")


def solve_fpt(D: Digraph, k: int, roots: Optional[list[int]] = None, check: bool = False) -> Decision:
    if k < 0:
        raise InputError("k must be non-negative")
    eligible = [r for r in spanning_roots(D) if roots is None or r in roots]
    if k <= 1:
        if not eligible:
            return Decision(False, route="unreachable")
        r = eligible[0]
        return Decision(True, extend_to_out_branching(D, OutTree.trivial(r)), r, "reachability")
    runs: list[RootRun] = []
    for r in eligible:
        run = prepare_root(D, r)
        runs.append(run)
        T = run.tree
        if len(T.leaves()) >= k:
            dec = Decision(True, T, r, "local-search")
        else:
            report = find_heavy_pair(run.reduced, T, k)
            if report is not None:
                log.debug("root %d: heavy pair z=%d l=%d |HB|=%d", r, report.z, report.l, len(report.HB))
                dec = Decision(True, construct_leafy_branching(run.reduced, T, report, k), r, "backward-arcs")
            else:
                run.pathdecomp = build_path_decomposition(run.reduced, T)
                npd = to_nice(run.pathdecomp, D.n, run.reduced.underlying_edges())
                dec = count_leaf_branching(run.reduced, npd, k, r)
        if check:
            _check_run(run, k, dec.route == "backward-arcs")
        if dec.answer:
            dec.details["runs"] = runs
            return dec
    return Decision(False, route="exhausted", details={"runs": runs})


def solve_bruteforce(D: Digraph, k: int, roots: Optional[list[int]] = None) -> Decision:
    if k < 0:
        raise InputError("k must be non-negative")
    pool = sorted(roots) if roots is not None else None
    best, tree = brute_force_max_leaves(D, pool)
    if tree is None or best < k:
        return Decision(False, route="bruteforce")
    return Decision(True, tree, tree.root, "bruteforce")


def solve(
    D: Digraph,
    k: int,
    mode: str = "auto",
    roots: Optional[list[int]] = None,
    check: bool = False,
) -> Decision:
    """Decide whether ``D`` has an out-branching with at least ``k`` leaves.

    ``mode`` is ``fpt`` (the local-search / backward-arc / DP pipeline),
    ``bruteforce`` (exhaustive search), or ``auto`` (brute force for at most
    eight vertices).  With ``check`` every witness and intermediate structure
    is re-validated and :class:`InvariantViolation` is raised on failure.
    """
    if mode not in MODES:
        raise InputError(f"unknown mode {mode!r}")
    if roots is not None:
        for r in roots:
            D.check_vertex(r)
    if mode == "auto":
        mode = "bruteforce" if D.n <= BRUTEFORCE_MAX_N else "fpt"
    if mode == "bruteforce":
        dec = solve_bruteforce(D, k, roots)
        if check:
            other = solve_fpt(D, k, roots, check=True)
            if other.answer != dec.answer:
                raise InvariantViolation("brute force and FPT pipeline disagree")
    else:
        dec = solve_fpt(D, k, roots, check=check)
    if check:
        _check_witness(D, k, dec)
    return dec
