"""Vertex spans, witness walks, and the track transformations.

The span of a connected graph under a movement rule is the largest ``r``
such that the pair graph at threshold ``r`` contains a connected component
whose two coordinate projections each cover the whole vertex set.  Walking
such a component visits every vertex with both actors while they never come
closer than ``r``; conversely any pair of covering walks traces such a
component, so the search over thresholds is exact.

Witnesses are extracted as the closed depth-first traversal of a spanning
tree of the winning component: not the shortest possible walk, but always a
rule-conformant one with the promised safety distance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    NotActiveConformantError,
    NotLazyConformantError,
    VertexOutOfRangeError,
)
from .graph import Graph
from .product import (
    MovementRule,
    Pair,
    build_pair_graph,
    components_with_double_surjectivity,
)


@dataclass(frozen=True)
class SpanReport:
    """Span value under one rule, with the pair component achieving it.

    ``epsilon`` is the smallest base-graph distance over the witness pairs;
    it always equals ``value`` (a larger minimum would have qualified at a
    higher threshold first).
    """

    graph: Graph
    rule: MovementRule
    value: int
    witness_component: tuple[Pair, ...]
    epsilon: int


@dataclass(frozen=True)
class TrackPair:
    """Two equal-length vertex walks (Alice's and Bob's) under one rule."""

    f: tuple[int, ...]
    g: tuple[int, ...]
    rule: MovementRule

    @property
    def length(self) -> int:
        return len(self.f)

    def positions(self) -> Iterator[Pair]:
        return zip(self.f, self.g)


@dataclass(frozen=True)
class TrackValidation:
    """Outcome of checking a TrackPair against a graph."""

    conforms: bool
    surjective_f: bool
    surjective_g: bool
    min_distance: int


@dataclass(frozen=True)
class MoveAttribution:
    """Who moved at each step of a lazy-rule track pair.

    ``x[i]`` is 1 when Alice (f) moved at step i and 2 when Bob (g) did;
    ``mixed_pairs`` counts the consecutive (x[2k], x[2k+1]) pairs with two
    different movers, which is exactly the index offset the lazy-to-active
    transformation accumulates.
    """

    x: tuple[int, ...]
    mixed_pairs: int


def compute_span(g: Graph, rule: MovementRule) -> SpanReport:
    """Span of ``g`` under ``rule``, searching thresholds downward.

    The radius bounds every span from above, and threshold 0 always admits
    a covering component, so the descent terminates with the witness at the
    maximal threshold.
    """
    for r in range(g.radius, -1, -1):
        pg = build_pair_graph(g, rule, r)
        qualifying = components_with_double_surjectivity(pg)
        if qualifying:
            component = qualifying[0]
            eps = min(g.distance(u, v) for u, v in component)
            return SpanReport(g, rule, r, component, eps)
    raise AssertionError("threshold 0 must always admit a covering component")


def extract_witness_tracks(report: SpanReport) -> TrackPair:
    """Concrete walks for both actors realising the reported span.

    Builds a spanning tree of the witness component rooted at its smallest
    pair and emits the closed depth-first traversal (every tree edge walked
    down and back up), giving walks of length ``2 * |component| - 1`` at
    most.  The traversal steps are pair-graph edges, so the result conforms
    to the report's rule, covers every vertex in both coordinates, and its
    minimum distance equals the span.
    """
    component = report.witness_component
    if not component:
        raise ValueError("witness component is empty")
    if len(component) == 1:
        u, v = component[0]
        return TrackPair((u,), (v,), report.rule)

    pg = build_pair_graph(report.graph, report.rule, report.value)
    members = set(component)
    root = component[0]

    # Breadth-first spanning tree with children kept in ascending pair order.
    children: dict[Pair, list[Pair]] = {p: [] for p in component}
    seen = {root}
    queue = [root]
    head = 0
    while head < len(queue):
        node = queue[head]
        head += 1
        for nb in pg.neighbors(*node):
            if nb in members and nb not in seen:
                seen.add(nb)
                children[node].append(nb)
                queue.append(nb)

    walk = [root]
    stack: list[tuple[Pair, Iterator[Pair]]] = [(root, iter(children[root]))]
    while stack:
        node, it = stack[-1]
        child = next(it, None)
        if child is None:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
        else:
            walk.append(child)
            stack.append((child, iter(children[child])))

    f = tuple(p[0] for p in walk)
    g = tuple(p[1] for p in walk)
    return TrackPair(f, g, report.rule)


def _moved(g: Graph, a: int, b: int) -> bool:
    return a != b and g.has_edge(a, b)


def validate_tracks(g: Graph, t: TrackPair) -> TrackValidation:
    """Check conformance, double surjectivity, and the minimum distance."""
    if len(t.f) != len(t.g):
        raise ValueError(
            f"track lengths differ: {len(t.f)} vs {len(t.g)}"
        )
    if not t.f:
        raise ValueError("tracks must be non-empty")
    for w in t.f + t.g:
        if not (0 <= w < g.n):
            raise VertexOutOfRangeError(f"vertex {w} outside 0..{g.n - 1}")

    conforms = True
    for i in range(len(t.f) - 1):
        fa, fb = t.f[i], t.f[i + 1]
        ga, gb = t.g[i], t.g[i + 1]
        f_moves = _moved(g, fa, fb)
        g_moves = _moved(g, ga, gb)
        if t.rule is MovementRule.TRADITIONAL:
            ok = (f_moves or fa == fb) and (g_moves or ga == gb)
        elif t.rule is MovementRule.ACTIVE:
            ok = f_moves and g_moves
        else:
            ok = (f_moves and ga == gb) != (g_moves and fa == fb)
        if not ok:
            conforms = False
            break

    full = set(range(g.n))
    return TrackValidation(
        conforms=conforms,
        surjective_f=set(t.f) == full,
        surjective_g=set(t.g) == full,
        min_distance=min(g.distance(u, v) for u, v in t.positions()),
    )


def move_attribution(g: Graph, t: TrackPair) -> MoveAttribution:
    """Per-step mover sequence of a lazy-conformant track pair."""
    if t.rule is not MovementRule.LAZY or not validate_tracks(g, t).conforms:
        raise NotLazyConformantError("tracks do not follow the lazy rule")
    x = tuple(1 if t.f[i] != t.f[i + 1] else 2 for i in range(t.length - 1))
    mixed = sum(
        1 for k in range((t.length - 1) // 2) if x[2 * k] != x[2 * k + 1]
    )
    return MoveAttribution(x=x, mixed_pairs=mixed)


def direct_to_lazy(g: Graph, t: TrackPair) -> TrackPair:
    """Interleave an active track pair into an opposite-lazy one.

    Each simultaneous step is split into Alice's half-step followed by
    Bob's, giving length ``2l - 1``.  On the inserted half-steps the two
    are one move apart from a checked position, so the minimum distance
    drops by at most 1.
    """
    if t.rule is not MovementRule.ACTIVE or not validate_tracks(g, t).conforms:
        raise NotActiveConformantError("tracks do not follow the active rule")
    f, b = t.f, t.g
    steps = 2 * t.length - 1
    f2 = tuple(f[(j + 1) // 2] for j in range(steps))
    g2 = tuple(b[j // 2] for j in range(steps))
    return TrackPair(f2, g2, MovementRule.LAZY)


def lazy_to_direct(g: Graph, t: TrackPair) -> TrackPair:
    """Merge an opposite-lazy track pair into an active one.

    Consecutive mover steps are paired up.  A mixed pair (the two actors
    alternate) collapses into one simultaneous step landing on original
    positions.  A same-mover pair keeps its two steps, with the stationary
    actor bouncing to a neighbour and back; an unpaired final step gets the
    same one-step bounce.  Bounce targets sit next to a position that was
    at distance >= r, so the minimum distance drops by at most 1.  The
    output length is ``l - a`` where ``a`` counts the mixed pairs.
    """
    attribution = move_attribution(g, t)  # raises if not lazy-conformant
    x = attribution.x
    f, b = t.f, t.g
    l = t.length

    fp = [f[0]]
    gp = [b[0]]
    time = 1  # 1-based position index in the lazy tracks emitted so far
    for k in range((l - 1) // 2):
        first, second = x[2 * k], x[2 * k + 1]
        time += 2
        if first != second:
            fp.append(f[time - 1])
            gp.append(b[time - 1])
        elif first == 1:
            stay = b[time - 1]
            fp.append(f[time - 2])
            gp.append(_bounce(g, stay, f[time - 2]))
            fp.append(f[time - 1])
            gp.append(stay)
        else:
            stay = f[time - 1]
            fp.append(_bounce(g, stay, b[time - 2]))
            gp.append(b[time - 2])
            fp.append(stay)
            gp.append(b[time - 1])
    if (l - 1) % 2 == 1:
        time += 1
        if x[l - 2] == 1:
            fp.append(f[time - 1])
            gp.append(_bounce(g, b[time - 1], f[time - 1]))
        else:
            fp.append(_bounce(g, f[time - 1], b[time - 1]))
            gp.append(b[time - 1])
    return TrackPair(tuple(fp), tuple(gp), MovementRule.ACTIVE)


def _bounce(g: Graph, stay: int, other: int) -> int:
    """Detour neighbour for an actor parked at ``stay``.

    Any neighbour keeps the distance bound; picking the one farthest from
    the other actor (smallest id on ties) keeps outputs deterministic and
    as safe as possible.
    """
    best = -1
    best_d = -1
    for w in g.neighbors(stay):
        dw = g.distance(w, other)
        if dw > best_d:
            best, best_d = w, dw
    return best
