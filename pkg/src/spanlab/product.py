"""Movement rules and the distance-thresholded pair graph.

A pair graph at threshold ``r`` has one vertex per ordered pair ``(u, v)``
of base-graph vertices with ``d(u, v) >= r`` and edges given by how the two
actors may move in one step:

* traditional -- each actor moves along an edge or stays, not both staying
  (the strong-product step);
* active      -- both actors move along edges (the direct-product step);
* lazy        -- exactly one actor moves along an edge (the Cartesian-product
  step).

Pair vertices are indexed ``u * n + v``; adjacency is held as bitmasks over
those indices, which keeps component sweeps cheap even for the 256-vertex
pair graphs of the 4-cube.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import ThresholdTooLargeError
from .graph import Graph, _bits

Pair = tuple[int, int]


class MovementRule(Enum):
    """The three simultaneous-movement disciplines for the two actors."""

    TRADITIONAL = "traditional"
    ACTIVE = "active"
    LAZY = "lazy"

    @property
    def span_name(self) -> str:
        """Name of the span this rule defines (strong/direct/cartesian)."""
        return _SPAN_NAMES[self]

    @classmethod
    def from_name(cls, name: str) -> "MovementRule":
        """Accepts both rule names and span names, case-insensitively."""
        key = name.strip().lower()
        for rule in cls:
            if key in (rule.value, rule.span_name):
                return rule
        raise ValueError(f"unknown movement rule {name!r}")


_SPAN_NAMES = {
    MovementRule.TRADITIONAL: "strong",
    MovementRule.ACTIVE: "direct",
    MovementRule.LAZY: "cartesian",
}


@dataclass(frozen=True)
class PairGraph:
    """Thresholded product of a graph with itself, per one movement rule."""

    base: Graph
    rule: MovementRule
    threshold: int
    _allowed: int = field(repr=False)
    _adj: dict[int, int] = field(repr=False)

    # -- pair indexing ----------------------------------------------------

    def index(self, u: int, v: int) -> int:
        return u * self.base.n + v

    def pair_of(self, idx: int) -> Pair:
        return divmod(idx, self.base.n)

    # -- vertex / edge accessors ------------------------------------------

    def pairs(self) -> list[Pair]:
        """All pair vertices, ascending by index (row-major in (u, v))."""
        return [self.pair_of(i) for i in _bits(self._allowed)]

    @property
    def vertex_count(self) -> int:
        return self._allowed.bit_count()

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj.values()) // 2

    def has_vertex(self, u: int, v: int) -> bool:
        return bool(self._allowed >> self.index(u, v) & 1)

    def has_edge(self, a: Pair, b: Pair) -> bool:
        ia, ib = self.index(*a), self.index(*b)
        return ia in self._adj and bool(self._adj[ia] >> ib & 1)

    def neighbors(self, u: int, v: int) -> list[Pair]:
        return [self.pair_of(i) for i in _bits(self._adj[self.index(u, v)])]

    # -- components --------------------------------------------------------

    def component_masks(self) -> list[int]:
        """Connected components as pair-index bitmasks, by smallest member."""
        adj = self._adj
        remaining = self._allowed
        comps = []
        while remaining:
            seed = remaining & -remaining
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for i in _bits(frontier):
                    nxt |= adj[i]
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            remaining &= ~comp
        return comps

    def components(self) -> list[tuple[Pair, ...]]:
        return [
            tuple(self.pair_of(i) for i in _bits(mask))
            for mask in self.component_masks()
        ]


def build_pair_graph(g: Graph, rule: MovementRule, r: int) -> PairGraph:
    """Pair graph of ``g`` on ordered pairs at distance >= ``r``.

    ``r`` must lie in ``0..radius(g)``; beyond the radius no pair survives
    (no vertex has everything at distance radius+1), which is rejected as a
    distinct error so span searches know to stop.
    """
    if r < 0:
        raise ValueError(f"threshold must be non-negative, got {r}")
    if r > g.radius:
        raise ThresholdTooLargeError(
            f"threshold {r} exceeds radius {g.radius}: empty pair graph"
        )
    n = g.n
    dist = g.distances
    allowed = 0
    for u in range(n):
        row = dist.row(u)
        base = u * n
        for v in range(n):
            if row[v] >= r:
                allowed |= 1 << (base + v)

    masks = g._masks
    adj: dict[int, int] = {}
    active = rule is MovementRule.ACTIVE
    lazy = rule is MovementRule.LAZY
    for i in _bits(allowed):
        u, v = divmod(i, n)
        row_v = masks[v]
        if active:
            m = 0
            for u2 in _bits(masks[u]):
                m |= row_v << (u2 * n)
        elif lazy:
            m = row_v << (u * n)
            for u2 in _bits(masks[u]):
                m |= 1 << (u2 * n + v)
        else:
            closed_v = row_v | (1 << v)
            m = closed_v << (u * n)
            for u2 in _bits(masks[u]):
                m |= closed_v << (u2 * n)
            m &= ~(1 << i)
        adj[i] = m & allowed
    return PairGraph(g, rule, r, allowed, adj)


def components_with_double_surjectivity(pg: PairGraph) -> list[tuple[Pair, ...]]:
    """Components whose two coordinate projections both cover every vertex.

    Ordered by the smallest pair index contained in each component.
    """
    n = pg.base.n
    full = (1 << n) - 1
    out = []
    for mask in pg.component_masks():
        p1 = 0
        p2 = 0
        for i in _bits(mask):
            u, v = divmod(i, n)
            p1 |= 1 << u
            p2 |= 1 << v
        if p1 == full and p2 == full:
            out.append(tuple(divmod(i, n) for i in _bits(mask)))
    return out
