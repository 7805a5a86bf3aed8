"""Connectivity, separating vertices, blocks and the block tree.

Blocks are computed on the skeleton graph (each incidence set replaced by a
clique): a clique is 2-connected, so every hyperedge lands in exactly one
biconnected component of the skeleton, and the block vertex sets of the
hypergraph coincide with the skeleton's.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph


def components(H: Hypergraph) -> list[frozenset[str]]:
    """Vertex sets of the connected components, sorted by smallest vertex."""
    seen: set[str] = set()
    out: list[frozenset[str]] = []
    for start in sorted(H.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for e in H.edges_at(v):
                for u in H.incidence(e):
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(H: Hypergraph) -> bool:
    return len(components(H)) == 1


def separating_vertices(H: Hypergraph) -> frozenset[str]:
    """Vertices v whose component C has H[C] / v non-empty and disconnected."""
    out = set()
    for comp in components(H):
        if len(comp) <= 2:
            continue
        Hc = H.induced(comp)
        for v in comp:
            Hv = Hc.shrink_away(v)
            if not Hv.is_empty and not is_connected(Hv):
                out.add(v)
    return frozenset(out)


@dataclass(frozen=True)
class BlockTree:
    """Blocks, separating vertices, and the bipartite block tree.

    blocks are vertex sets sorted by their smallest vertex; tree_edges pair
    block indices with the separating vertices they contain.
    """

    blocks: tuple[frozenset[str], ...]
    cut_vertices: frozenset[str]
    tree_edges: tuple[tuple[int, str], ...]

    def blocks_at(self, v: str) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def end_blocks(self) -> list[int]:
        """Leaf blocks of the tree: blocks containing at most one cut vertex."""
        return [i for i, b in enumerate(self.blocks) if len(b & self.cut_vertices) <= 1]


def _skeleton_adjacency(H: Hypergraph) -> dict[str, set[str]]:
    adj: dict[str, set[str]] = {v: set() for v in H.vertices}
    for m in H.edges().values():
        for u in m:
            adj[u] |= m - {u}
    return adj


def _biconnected_vertex_sets(adj: dict[str, set[str]], root: str) -> list[frozenset[str]]:
    """Vertex sets of biconnected components (iterative Hopcroft-Tarjan)."""
    disc: dict[str, int] = {}
    low: dict[str, int] = {}
    comps: list[frozenset[str]] = []
    edge_stack: list[tuple[str, str]] = []
    timer = 0
    # stack holds (vertex, parent, iterator over neighbors)
    stack = [(root, None, iter(sorted(adj[root])))]
    disc[root] = low[root] = timer
    timer += 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if u == parent:
                continue
            if u not in disc:
                edge_stack.append((v, u))
                disc[u] = low[u] = timer
                timer += 1
                stack.append((u, v, iter(sorted(adj[u]))))
                advanced = True
                break
            if disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                comp: set[str] = set()
                while edge_stack and edge_stack[-1] != (p, v):
                    a, b = edge_stack.pop()
                    comp |= {a, b}
                if edge_stack:
                    a, b = edge_stack.pop()
                    comp |= {a, b}
                comps.append(frozenset(comp))
    return comps


def blocks(H: Hypergraph) -> BlockTree:
    """Block decomposition of a connected non-empty hypergraph."""
    if H.is_empty:
        raise ValueError("blocks: empty hypergraph")
    if not is_connected(H):
        raise ValueError("blocks: disconnected hypergraph (iterate components)")
    if H.order == 1:
        (v,) = H.vertices
        return BlockTree((frozenset((v,)),), frozenset(), ())
    adj = _skeleton_adjacency(H)
    root = min(H.vertices)
    vsets = _biconnected_vertex_sets(adj, root)
    vsets.sort(key=lambda b: min(b))
    counts: dict[str, int] = {}
    for b in vsets:
        for v in b:
            counts[v] = counts.get(v, 0) + 1
    cut = frozenset(v for v, c in counts.items() if c >= 2)
    tree = tuple((i, v) for i, b in enumerate(vsets) for v in sorted(b & cut))
    return BlockTree(tuple(vsets), cut, tree)


def block_subhypergraph(H: Hypergraph, bt: BlockTree, i: int) -> Hypergraph:
    """The i-th block as an induced subhypergraph of H."""
    return H.induced(bt.blocks[i])
