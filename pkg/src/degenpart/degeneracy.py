"""Strict degeneracy testing with witnesses, and the coloring number.

A hypergraph is strictly h-degenerate when every non-empty subhypergraph
has a vertex of degree below h(v).  It suffices to check induced
subhypergraphs (dropping edges only lowers degrees), which greedy peeling
does: repeatedly delete any vertex whose current degree is below its
bound.  Peeling never discards a solution, and the stuck core is the same
whatever the peel order, so it serves as a canonical failure witness.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping

from .hypergraph import Hypergraph


@dataclass(frozen=True)
class DegeneracyWitness:
    """Either a removal order proving degeneracy, or the stuck core refuting it."""

    removal_order: tuple[str, ...] | None
    core: frozenset[str] | None

    @property
    def degenerate(self) -> bool:
        return self.removal_order is not None

    def __bool__(self) -> bool:
        return self.degenerate


def is_strictly_degenerate(H: Hypergraph, h: Mapping[str, int]) -> DegeneracyWitness:
    """Peel vertices with degree < h(v), smallest name first.

    Returns a removal order if H empties, else the maximal stuck core.
    """
    missing = H.vertices - h.keys()
    if missing:
        raise ValueError(f"bound function misses vertices {sorted(missing)}")
    alive = set(H.vertices)
    deg = {v: H.degree(v) for v in alive}
    live_edges = {e: set(m) for e, m in H.edges().items()}
    order: list[str] = []
    ready = [v for v in alive if deg[v] < h[v]]
    heapq.heapify(ready)
    queued = set(ready)
    while ready:
        v = heapq.heappop(ready)
        alive.discard(v)
        order.append(v)
        # deleting v kills every edge it touches (induced-subhypergraph semantics)
        for e in H.edges_at(v):
            m = live_edges.pop(e, None)
            if m is None:
                continue
            for u in m:
                if u not in alive:
                    continue
                deg[u] -= 1
                if deg[u] < h[u] and u not in queued:
                    queued.add(u)
                    heapq.heappush(ready, u)
    if alive:
        return DegeneracyWitness(None, frozenset(alive))
    return DegeneracyWitness(tuple(order), None)


def col(H: Hypergraph) -> int:
    """Coloring number: least k with H strictly k-degenerate (0 for empty H).

    Computed as 1 + the largest current minimum degree seen while
    repeatedly deleting a minimum-degree vertex.
    """
    if H.is_empty:
        return 0
    alive = set(H.vertices)
    deg = {v: H.degree(v) for v in alive}
    live_edges = {e: set(m) for e, m in H.edges().items()}
    worst = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        worst = max(worst, deg[v])
        alive.discard(v)
        for e in H.edges_at(v):
            m = live_edges.pop(e, None)
            if m is None:
                continue
            for u in m:
                if u in alive:
                    deg[u] -= 1
    return worst + 1
