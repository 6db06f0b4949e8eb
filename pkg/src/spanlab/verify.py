"""Independent oracle, small-graph enumeration, and theorem harness.

The oracle re-derives span values by brute-force reachability over joint
actor states (positions plus visited sets), sharing no code path with the
pair-graph engine; agreement between the two on every small graph is the
package's ground-truth check.  The harness sweeps corpora (exhaustive
labelled graphs, isomorphism classes, seeded random graphs) and records,
per graph, the three spans, the bounds, and any violated relation.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .engine import (
    compute_span,
    direct_to_lazy,
    extract_witness_tracks,
    lazy_to_direct,
    validate_tracks,
)
from .errors import OrderTooSmallError, TooLargeError
from .graph import Graph, bridges, eccentricity, split_at_bridge
from .io import emit_graph6, parse_graph6
from .product import MovementRule

ORACLE_MAX_N = 6
ENUMERATE_MAX_N = 7
DEDUP_MAX_N = 6


# -- joint-state oracle ---------------------------------------------------------


def oracle_span(g: Graph, rule: MovementRule) -> int:
    """Span by explicit search over joint actor states (n <= 6).

    A state is (Alice's position, Bob's position, Alice's visited set,
    Bob's visited set); transitions follow the movement rule and never let
    the positions come closer than the threshold.  The span is the largest
    threshold from which some doubly-complete state is reachable.
    """
    if g.n > ORACLE_MAX_N:
        raise TooLargeError(
            f"oracle state space is n^2 * 4^n; capped at n <= {ORACLE_MAX_N}, got {g.n}"
        )
    for r in range(g.radius, -1, -1):
        if _coverable(g, r, rule):
            return r
    raise AssertionError("threshold 0 is always coverable on a connected graph")


def _coverable(g: Graph, r: int, rule: MovementRule) -> bool:
    # Joint states are packed as (pair_index << 2n) | (seenA << n) | seenB
    # into a flat visited bytearray; each actor's position stays inside its
    # own seen set by construction.
    n = g.n
    dist = g.distances
    pairs = [
        (u, v) for u in range(n) for v in range(n) if dist[u, v] >= r
    ]
    index = {p: k for k, p in enumerate(pairs)}
    full = (1 << n) - 1
    shift = 2 * n

    def moves(w: int, may_stay: bool) -> tuple[int, ...]:
        nbrs = g.neighbors(w)
        return nbrs + (w,) if may_stay else nbrs

    successors: list[list[tuple[int, int, int]]] = []
    for u, v in pairs:
        out = []
        if rule is MovementRule.LAZY:
            options = [(u2, v) for u2 in g.neighbors(u)]
            options += [(u, v2) for v2 in g.neighbors(v)]
        else:
            may_stay = rule is MovementRule.TRADITIONAL
            options = [
                (u2, v2)
                for u2 in moves(u, may_stay)
                for v2 in moves(v, may_stay)
            ]
        for u2, v2 in options:
            k2 = index.get((u2, v2))
            if k2 is not None:
                out.append((k2 << shift, 1 << u2, 1 << v2))
        successors.append(out)

    if not pairs:
        return False
    visited = bytearray(len(pairs) << shift)
    queue: deque[tuple[int, int, int]] = deque()
    for k, (u, v) in enumerate(pairs):
        sa, sb = 1 << u, 1 << v
        if sa == full and sb == full:
            return True
        state = (k << shift) | (sa << n) | sb
        visited[state] = 1
        queue.append((k, sa, sb))
    while queue:
        k, sa, sb = queue.popleft()
        for k2s, bu, bv in successors[k]:
            sa2 = sa | bu
            sb2 = sb | bv
            state = k2s | (sa2 << n) | sb2
            if not visited[state]:
                if sa2 == full and sb2 == full:
                    return True
                visited[state] = 1
                queue.append((k2s >> shift, sa2, sb2))
    return False


# -- exhaustive enumeration -------------------------------------------------------


def _slots(n: int) -> list[tuple[int, int]]:
    """Edge slots in graph6 column order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(u, v) for v in range(1, n) for u in range(v)]


@lru_cache(maxsize=None)
def _perm_slot_maps(n: int) -> tuple[tuple[int, ...], ...]:
    slots = _slots(n)
    slot_index = {uv: i for i, uv in enumerate(slots)}
    maps = []
    for perm in permutations(range(n)):
        maps.append(
            tuple(
                slot_index[
                    (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                ]
                for u, v in slots
            )
        )
    return tuple(maps)


def _remap(mask: int, slot_map: tuple[int, ...]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << slot_map[low.bit_length() - 1]
        mask ^= low
    return out


def _connected_mask(n: int, nbr: Sequence[int]) -> bool:
    reached = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= nbr[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~reached
        reached |= frontier
    return reached == full


def canonical_edge_mask(g: Graph) -> int:
    """Smallest edge bitmask over all vertex relabelings (n <= 7)."""
    if g.n > ENUMERATE_MAX_N:
        raise TooLargeError(f"canonical form by permutations caps at n <= {ENUMERATE_MAX_N}")
    slots = _slots(g.n)
    mask = 0
    for i, (u, v) in enumerate(slots):
        if g.has_edge(u, v):
            mask |= 1 << i
    return min(_remap(mask, sm) for sm in _perm_slot_maps(g.n))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_edge_mask(a) == canonical_edge_mask(b)


def enumerate_connected(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All connected graphs on n labelled vertices, ascending by edge mask.

    With ``dedup`` only the lexicographically smallest labelled graph of
    each isomorphism class is yielded (permutation canonicalisation, so
    dedup is capped at n <= 6; plain enumeration at n <= 7).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > ENUMERATE_MAX_N:
        raise TooLargeError(f"enumeration caps at n <= {ENUMERATE_MAX_N}, got {n}")
    if dedup and n > DEDUP_MAX_N:
        raise TooLargeError(f"dedup enumeration caps at n <= {DEDUP_MAX_N}, got {n}")
    slots = _slots(n)
    perm_maps = _perm_slot_maps(n) if dedup else ()
    for mask in range(1 << len(slots)):
        nbr = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = slots[low.bit_length() - 1]
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
            m ^= low
        if not _connected_mask(n, nbr):
            continue
        if dedup and any(_remap(mask, sm) < mask for sm in perm_maps):
            continue
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        yield Graph(n, edges)


# -- random corpus -----------------------------------------------------------------


def random_graphs(
    count: int,
    n_range: tuple[int, int],
    edge_prob: float,
    seed: int,
) -> Iterator[Graph]:
    """Seeded Erdos-Renyi stream, each draw resampled until connected."""
    lo, hi = n_range
    if lo < 1 or hi < lo:
        raise ValueError(f"bad vertex range {n_range}")
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(lo, hi)
        while True:
            nbr = [0] * n
            edges = []
            for u in range(n):
                for v in range(u + 1, n):
                    if rng.random() < edge_prob:
                        edges.append((u, v))
                        nbr[u] |= 1 << v
                        nbr[v] |= 1 << u
            if _connected_mask(n, nbr):
                yield Graph(n, edges)
                break


# -- bounds ------------------------------------------------------------------------


def cut_edge_bound(g: Graph) -> int | None:
    """Best upper bound on the strong span obtainable from bridges.

    For a bridge xy the span cannot exceed the larger of the two endpoint
    eccentricities measured inside their own sides; the minimum over all
    bridges is returned, or None for a bridgeless graph.
    """
    if g.n < 3:
        raise OrderTooSmallError(f"cut-edge bound needs at least 3 vertices, got {g.n}")
    best: int | None = None
    for edge in bridges(g):
        split = split_at_bridge(g, edge)
        bound = max(
            eccentricity(split.side_x, split.x),
            eccentricity(split.side_y, split.y),
        )
        if best is None or bound < best:
            best = bound
    return best


# -- theorem harness ----------------------------------------------------------------

RULES = (MovementRule.TRADITIONAL, MovementRule.ACTIVE, MovementRule.LAZY)


@dataclass(frozen=True)
class GraphRecord:
    """Everything the harness measured on one graph."""

    graph6: str
    n: int
    radius: int
    strong: int
    direct: int
    cartesian: int
    cut_bound: int | None
    oracle_checked: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def cartesian_gt_direct(self) -> bool:
        return self.cartesian > self.direct

    def to_line(self) -> str:
        cut = "none" if self.cut_bound is None else str(self.cut_bound)
        oracle = "agree" if self.oracle_checked else "skipped"
        if self.oracle_checked and "oracle_agreement" in self.violations:
            oracle = "disagree"
        bad = ",".join(self.violations) if self.violations else "none"
        return (
            f"graph6={self.graph6} n={self.n} radius={self.radius}"
            f" strong={self.strong} direct={self.direct} cartesian={self.cartesian}"
            f" cut_bound={cut} oracle={oracle} ok={int(self.ok)} violations={bad}"
        )


@dataclass
class EnumerationReport:
    """Aggregate of a corpus sweep; counterexamples stay empty when the
    theorems hold."""

    n: int | None
    graphs_checked: int
    counterexamples: list[tuple[str, str]]
    records: list[GraphRecord]

    @property
    def cartesian_gt_direct(self) -> list[GraphRecord]:
        return [r for r in self.records if r.cartesian_gt_direct]

    def summary_lines(self) -> list[str]:
        lines = [
            f"graphs checked: {self.graphs_checked}",
            f"{len(self.counterexamples)} counterexamples;"
            f" {len(self.cartesian_gt_direct)} graphs with cartesian>direct",
        ]
        lines += [f"counterexample: {g6} violates {prop}" for g6, prop in self.counterexamples]
        lines += [f"cartesian>direct: {r.graph6}" for r in self.cartesian_gt_direct]
        return lines

    def record_lines(self) -> list[str]:
        return [r.to_line() for r in self.records]


def check_graph(
    g: Graph,
    check_witnesses: bool = False,
    oracle_max_n: int = 5,
) -> GraphRecord:
    """Measure one graph and flag every violated relation."""
    reports = {rule: compute_span(g, rule) for rule in RULES}
    strong = reports[MovementRule.TRADITIONAL].value
    direct = reports[MovementRule.ACTIVE].value
    cartesian = reports[MovementRule.LAZY].value

    violations: list[str] = []
    if strong < max(direct, cartesian):
        violations.append("strong_ge_max")
    if abs(direct - cartesian) > 1:
        violations.append("direct_cartesian_diff")
    if max(strong, direct, cartesian) > g.radius:
        violations.append("span_le_radius")

    oracle_checked = g.n <= oracle_max_n
    if oracle_checked:
        for rule, value in (
            (MovementRule.TRADITIONAL, strong),
            (MovementRule.ACTIVE, direct),
            (MovementRule.LAZY, cartesian),
        ):
            if oracle_span(g, rule) != value:
                violations.append("oracle_agreement")
                break

    cut = None
    if g.n >= 3:
        cut = cut_edge_bound(g)
        if cut is not None and strong > cut:
            violations.append("cut_edge_bound")

    if check_witnesses:
        for rule, report in reports.items():
            tracks = extract_witness_tracks(report)
            val = validate_tracks(g, tracks)
            if not (
                val.conforms
                and val.surjective_f
                and val.surjective_g
                and val.min_distance == report.value
            ):
                violations.append(f"witness_roundtrip_{rule.value}")
            if rule is MovementRule.ACTIVE:
                lazier = direct_to_lazy(g, tracks)
                lval = validate_tracks(g, lazier)
                if not (
                    lval.conforms
                    and lval.surjective_f
                    and lval.surjective_g
                    and lval.min_distance >= report.value - 1
                ):
                    violations.append("transform_direct_to_lazy")
            elif rule is MovementRule.LAZY:
                activer = lazy_to_direct(g, tracks)
                aval = validate_tracks(g, activer)
                if not (
                    aval.conforms
                    and aval.surjective_f
                    and aval.surjective_g
                    and aval.min_distance >= report.value - 1
                ):
                    violations.append("transform_lazy_to_direct")

    return GraphRecord(
        graph6=emit_graph6(g),
        n=g.n,
        radius=g.radius,
        strong=strong,
        direct=direct,
        cartesian=cartesian,
        cut_bound=cut,
        oracle_checked=oracle_checked,
        violations=tuple(violations),
    )


def _record_worker(args: tuple[str, bool, int]) -> GraphRecord:
    g6, check_witnesses, oracle_max_n = args
    return check_graph(parse_graph6(g6), check_witnesses, oracle_max_n)


def check_theorems(
    corpus: Iterable[Graph],
    jobs: int | None = None,
    check_witnesses: bool = False,
    oracle_max_n: int = 5,
    n: int | None = None,
) -> EnumerationReport:
    """Sweep a corpus; the merge is ordered, so output is independent of ``jobs``."""
    if jobs is None:
        import os

        jobs = os.cpu_count() or 1
    if jobs > 1:
        import multiprocessing as mp

        payload = [(emit_graph6(g), check_witnesses, oracle_max_n) for g in corpus]
        with mp.get_context("fork").Pool(jobs) as pool:
            records = list(pool.imap(_record_worker, payload, chunksize=64))
    else:
        records = [check_graph(g, check_witnesses, oracle_max_n) for g in corpus]

    counterexamples = [
        (r.graph6, prop) for r in records for prop in r.violations
    ]
    return EnumerationReport(
        n=n,
        graphs_checked=len(records),
        counterexamples=counterexamples,
        records=records,
    )
