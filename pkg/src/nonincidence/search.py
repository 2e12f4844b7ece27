"""Search for the largest square nonincident point/block set in a design.

The key reduction: a design admits s points and s nonincident blocks iff
some point set Y of size s has at least s disjoint blocks, because the
disjoint blocks can then be picked freely.  So the search maximizes
min(|Y|, t(Y)) over point sets Y, where t(Y) counts blocks avoiding Y.
t is antitone under adding points, which drives the pruning.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import nonincidence_upper_bound
from .design import Design, NonincidenceCertificate

DEFAULT_NODE_BUDGET = 100_000_000
_REORDER_DEPTH = 4
BRUTE_FORCE_MAX_V = 15


@dataclass
class SearchReport:
    """Outcome of one search run over a single design."""

    best_s: int
    certificate: NonincidenceCertificate
    exact: bool
    nodes_visited: int
    elapsed: float
    bound_used: int
    method: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "best_s": self.best_s,
                "exact": self.exact,
                "nodes_visited": self.nodes_visited,
                "elapsed_seconds": self.elapsed,
                "bound_used": self.bound_used,
                "method": self.method,
                "certificate": json.loads(self.certificate.to_json()),
            },
            indent=2,
            sort_keys=True,
        )


def _first_bits(mask: int, count: int) -> list[int]:
    out = []
    while mask and len(out) < count:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _make_certificate(d: Design, Y, disjoint_mask: int, s: int, meta):
    pts = sorted(Y)[:s] if s else []
    blocks = _first_bits(disjoint_mask, s)
    if s == 0:
        # Degenerate: no nonincident square exists; record an empty claim.
        return NonincidenceCertificate.build(d, [], [], meta=meta)
    return NonincidenceCertificate.build(d, pts, blocks, meta=meta)


class _BranchAndBound:
    def __init__(self, d: Design, node_budget: int):
        self.d = d
        self.inc = d.point_incidence
        self.node_budget = node_budget
        self.nodes = 0
        self.truncated = False
        self.best = 0
        self.best_Y: tuple[int, ...] = ()
        self.best_mask = d.all_blocks_mask()

    def run(self, cands: list[int], Y: list[int], mask: int) -> None:
        self._rec(cands, Y, mask, bin(mask).count("1"), 0)

    def _rec(self, cands, Y, mask, t, depth):
        value = min(len(Y), t)
        if value > self.best:
            self.best = value
            self.best_Y = tuple(Y)
            self.best_mask = mask
        if depth <= _REORDER_DEPTH:
            # Cheap lookahead: try low-impact points first to tighten the
            # incumbent quickly; recomputed only at shallow depths.
            cands = sorted(
                cands, key=lambda p: (bin(self.inc[p] & mask).count("1"), p)
            )
        for i, p in enumerate(cands):
            if len(Y) + (len(cands) - i) <= self.best:
                break
            nm = mask & ~self.inc[p]
            nt = bin(nm).count("1")
            if nt <= self.best:
                continue
            self.nodes += 1
            if self.nodes > self.node_budget:
                self.truncated = True
                return
            Y.append(p)
            self._rec(cands[i + 1 :], Y, nm, nt, depth + 1)
            Y.pop()
            if self.truncated:
                return


def _search_branch(args):
    d, first, rest, node_budget = args
    bb = _BranchAndBound(d, node_budget)
    mask = d.all_blocks_mask() & ~d.point_incidence[first]
    bb.run(rest, [first], mask)
    return bb.best, bb.best_Y, bb.best_mask, bb.nodes, bb.truncated


def exact_max_nonincident(
    d: Design,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> SearchReport:
    """Branch-and-bound maximum over all point sets; exact when the budget holds.

    Single-worker runs are fully deterministic.  With workers > 1 the
    top-level branches are searched independently; best_s is identical
    regardless of worker count, though when several optima exist the
    certificate may name a different one.
    """
    start = time.perf_counter()
    bound = nonincidence_upper_bound(d.v)
    full = d.all_blocks_mask()
    points = list(range(d.v))
    if workers <= 1:
        bb = _BranchAndBound(d, node_budget)
        bb.run(points, [], full)
        best, best_Y, best_mask = bb.best, bb.best_Y, bb.best_mask
        nodes, truncated = bb.nodes, bb.truncated
    else:
        per_branch = max(node_budget // d.v, 1)
        tasks = [
            (d, p, points[i + 1 :], per_branch) for i, p in enumerate(points)
        ]
        best, best_Y, best_mask = 0, (), full
        nodes, truncated = 0, False
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for b, y, m, n, tr in pool.map(_search_branch, tasks):
                nodes += n
                truncated = truncated or tr
                if b > best:
                    best, best_Y, best_mask = b, y, m
    if best > bound:
        raise AssertionError(
            f"search found s={best} above the theoretical ceiling {bound}"
        )
    meta = {"method": "exact", "exact": not truncated}
    cert = _make_certificate(d, best_Y, best_mask, best, meta)
    return SearchReport(
        best_s=best,
        certificate=cert,
        exact=not truncated,
        nodes_visited=nodes,
        elapsed=time.perf_counter() - start,
        bound_used=bound,
        method="exact",
    )


def greedy_max_nonincident(
    d: Design, seed: int = 0, start=()
) -> SearchReport:
    """Heuristic lower bound: always add the point killing fewest live blocks.

    Ties break by point index, so the result is deterministic; the seed is
    recorded in the certificate for provenance.  An optional starting point
    set (e.g. a known subsystem complement) is consumed first.
    """
    t0 = time.perf_counter()
    bound = nonincidence_upper_bound(d.v)
    mask = d.all_blocks_mask()
    Y: list[int] = []
    best, best_Y, best_mask = 0, (), mask
    nodes = 0

    def consume(p):
        nonlocal mask, best, best_Y, best_mask, nodes
        Y.append(p)
        mask &= ~d.point_incidence[p]
        nodes += 1
        value = min(len(Y), bin(mask).count("1"))
        if value > best:
            best, best_Y, best_mask = value, tuple(Y), mask

    for p in start:
        consume(p)
    while len(Y) < d.v and mask:
        remaining = (p for p in range(d.v) if p not in set(Y))
        p = min(
            remaining, key=lambda q: (bin(d.point_incidence[q] & mask).count("1"), q)
        )
        consume(p)
    best = min(best, bound)
    meta = {"method": "greedy", "seed": seed, "exact": False}
    cert = _make_certificate(d, best_Y, best_mask, best, meta)
    return SearchReport(
        best_s=best,
        certificate=cert,
        exact=False,
        nodes_visited=nodes,
        elapsed=time.perf_counter() - t0,
        bound_used=bound,
        method="greedy",
    )


def brute_force_oracle(d: Design) -> int:
    """Max of min(|Y|, t(Y)) by enumerating every point subset.

    Independent of the branch-and-bound path; intended for tests only,
    hence the hard cap on v.
    """
    if d.v > BRUTE_FORCE_MAX_V:
        raise ValueError(f"brute force refuses v={d.v} > {BRUTE_FORCE_MAX_V}")
    b = d.b
    inc = d.point_incidence
    n = 1 << d.v
    covered = [0] * n
    best = 0
    for m in range(1, n):
        low = m & -m
        covered[m] = covered[m ^ low] | inc[low.bit_length() - 1]
        t = b - bin(covered[m]).count("1")
        val = min(bin(m).count("1"), t)
        if val > best:
            best = val
    return best
