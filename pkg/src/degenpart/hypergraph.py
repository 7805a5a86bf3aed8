"""Immutable multihypergraph values and the basic construction operators.

Vertices and edges are named by opaque strings.  Parallel edges are stored
as distinct edge records (shrinking can turn distinct hyperedges into
parallel ordinary edges, so multiplicity counters would not survive the
operators).  All operations return new values; a Hypergraph never mutates
after construction and is safe to share between threads.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Mapping


class Hypergraph:
    """A finite multihypergraph: vertex set plus a multiset of edges.

    Every edge is incident to at least two distinct vertices (no loops);
    parallel edges are allowed and kept as separate records.
    """

    __slots__ = ("_vertices", "_incidence", "_edge_order", "_at", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Mapping[str, Iterable[str]] = ()):
        vs = frozenset(vertices)
        incidence: dict[str, frozenset[str]] = {}
        for eid, members in dict(edges).items():
            members = tuple(members)
            mset = frozenset(members)
            if len(mset) != len(members):
                raise ValueError(f"edge {eid!r} repeats a vertex (loop)")
            if len(mset) < 2:
                raise ValueError(f"edge {eid!r} has arity {len(mset)} < 2")
            if not mset <= vs:
                raise ValueError(f"edge {eid!r} mentions unknown vertices {sorted(mset - vs)}")
            incidence[eid] = mset
        self._vertices = vs
        self._incidence = incidence
        self._edge_order = tuple(sorted(incidence))
        at: dict[str, list[str]] = {v: [] for v in vs}
        for eid in self._edge_order:
            for v in incidence[eid]:
                at[v].append(eid)
        self._at = {v: tuple(es) for v, es in at.items()}
        self._hash = hash((vs, tuple((e, incidence[e]) for e in self._edge_order)))

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> frozenset[str]:
        return self._vertices

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return self._edge_order

    def incidence(self, eid: str) -> frozenset[str]:
        return self._incidence[eid]

    def edges(self) -> dict[str, frozenset[str]]:
        """Edge id -> incidence set, as a fresh dict."""
        return dict(self._incidence)

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._incidence)

    @property
    def is_empty(self) -> bool:
        return not self._vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._vertices == other._vertices and self._incidence == other._incidence

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Hypergraph({len(self._vertices)} vertices, {len(self._incidence)} edges)"

    # -- degrees and multiplicities -------------------------------------

    def edges_at(self, v: str) -> tuple[str, ...]:
        if v not in self._vertices:
            raise ValueError(f"unknown vertex {v!r}")
        return self._at[v]

    def degree(self, v: str) -> int:
        """Number of edges incident to v, parallel edges counted separately."""
        return len(self.edges_at(v))

    def max_degree(self) -> int:
        return max((len(es) for es in self._at.values()), default=0)

    def min_degree(self) -> int:
        return min((len(es) for es in self._at.values()), default=0)

    def multiplicity(self, u: str, v: str) -> int:
        """Number of ordinary edges with incidence set exactly {u, v}."""
        if u == v:
            raise ValueError("multiplicity requires two distinct vertices")
        if u not in self._vertices or v not in self._vertices:
            raise ValueError("multiplicity arguments must be vertices of the hypergraph")
        pair = frozenset((u, v))
        return sum(1 for e in self._at[u] if self._incidence[e] == pair)

    def neighbors(self, v: str) -> frozenset[str]:
        out: set[str] = set()
        for e in self.edges_at(v):
            out |= self._incidence[e]
        out.discard(v)
        return frozenset(out)

    def edge_kind(self, eid: str) -> str:
        """'ordinary' for incidence size 2, 'hyperedge' for size >= 3."""
        return "ordinary" if len(self._incidence[eid]) == 2 else "hyperedge"

    # -- restriction operators ------------------------------------------

    def induced(self, X: Iterable[str]) -> "Hypergraph":
        """Subhypergraph on X keeping edges whose whole incidence set lies in X."""
        X = frozenset(X)
        if not X <= self._vertices:
            raise ValueError(f"induced: {sorted(X - self._vertices)} are not vertices")
        kept = {e: m for e, m in self._incidence.items() if m <= X}
        return Hypergraph(X, kept)

    def shrink(self, X: Iterable[str]) -> "Hypergraph":
        """Shrink to X: keep edges meeting X in >= 2 vertices, truncated to X."""
        X = frozenset(X)
        if not X <= self._vertices:
            raise ValueError(f"shrink: {sorted(X - self._vertices)} are not vertices")
        kept = {}
        for e, m in self._incidence.items():
            cut = m & X
            if len(cut) >= 2:
                kept[e] = cut
        return Hypergraph(X, kept)

    def delete(self, X: Iterable[str] | str) -> "Hypergraph":
        """H - X, i.e. the subhypergraph induced by the complement of X."""
        if isinstance(X, str):
            X = (X,)
        return self.induced(self._vertices - frozenset(X))

    def shrink_away(self, X: Iterable[str] | str) -> "Hypergraph":
        """H / X, i.e. the hypergraph shrunk to the complement of X."""
        if isinstance(X, str):
            X = (X,)
        return self.shrink(self._vertices - frozenset(X))

    def underlying_simple(self) -> "Hypergraph":
        """Keep one edge per distinct incidence set (smallest edge id wins)."""
        seen: dict[frozenset[str], str] = {}
        for e in self._edge_order:
            seen.setdefault(self._incidence[e], e)
        return Hypergraph(self._vertices, {e: m for m, e in seen.items()})


def merge(H1: Hypergraph, v1: str, H2: Hypergraph, v2: str, vstar: str) -> Hypergraph:
    """Glue two disjoint hypergraphs by identifying v1 and v2 as vstar."""
    if H1.vertices & H2.vertices:
        raise ValueError("merge operands share vertices")
    if set(H1.edge_ids) & set(H2.edge_ids):
        raise ValueError("merge operands share edge identifiers")
    if v1 not in H1.vertices or v2 not in H2.vertices:
        raise ValueError("merge points must belong to the respective operands")
    if vstar in (H1.vertices | H2.vertices) - {v1, v2}:
        raise ValueError(f"merged vertex name {vstar!r} collides with an existing vertex")
    vertices = (H1.vertices | H2.vertices | {vstar}) - {v1, v2}
    edges: dict[str, frozenset[str]] = {}
    for H, old in ((H1, v1), (H2, v2)):
        for e, m in H.edges().items():
            edges[e] = (m - {old}) | {vstar} if old in m else m
    return Hypergraph(vertices, edges)


# -- stock constructions ------------------------------------------------


def _vnames(n: int) -> list[str]:
    return [f"v{i}" for i in range(1, n + 1)]


def complete_uniform(n: int, q: int) -> Hypergraph:
    """The complete q-uniform hypergraph K_n^q (q = 2 gives K_n)."""
    if n < 2 or not 2 <= q <= n:
        raise ValueError(f"complete_uniform needs n >= 2 and 2 <= q <= n, got n={n}, q={q}")
    vs = _vnames(n)
    edges = {f"e{i}": members for i, members in enumerate(itertools.combinations(vs, q), start=1)}
    return Hypergraph(vs, edges)


def cycle(n: int) -> Hypergraph:
    """The ordinary cycle C_n."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    vs = _vnames(n)
    edges = {f"e{i}": (vs[i - 1], vs[i % n]) for i in range(1, n + 1)}
    return Hypergraph(vs, edges)


def path(n: int) -> Hypergraph:
    """The path on n vertices (edgeless single vertex for n = 1)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    vs = _vnames(n)
    edges = {f"e{i}": (vs[i - 1], vs[i]) for i in range(1, n)}
    return Hypergraph(vs, edges)


def t_fold(H: Hypergraph, t: int) -> Hypergraph:
    """Replace every edge by t parallel copies (tH)."""
    if t < 1:
        raise ValueError(f"t_fold needs t >= 1, got {t}")
    if t == 1:
        return H
    edges = {f"{e}.{k}": m for e, m in H.edges().items() for k in range(1, t + 1)}
    return Hypergraph(H.vertices, edges)


def random_hypergraph(
    n: int,
    m: int,
    max_arity: int = 3,
    max_mult: int = 2,
    seed: int = 0,
    connected: bool = False,
) -> Hypergraph:
    """Seeded random multihypergraph; deterministic for a fixed argument tuple.

    Ordinary-pair multiplicity stays <= max_mult.  With connected=True the
    components are joined by extra ordinary edges, so the edge count may
    exceed m by at most n - 1.
    """
    if n < 1 or m < 0 or max_arity < 2 or max_mult < 1:
        raise ValueError("random_hypergraph parameter out of range")
    rng = random.Random(seed)
    vs = _vnames(n)
    edges: dict[str, frozenset[str]] = {}
    mult: dict[frozenset[str], int] = {}
    eid = 0
    if n >= 2:
        for _ in range(4 * m):
            if len(edges) >= m:
                break
            q = rng.randint(2, min(max_arity, n))
            members = frozenset(rng.sample(vs, q))
            if q == 2 and mult.get(members, 0) >= max_mult:
                continue
            eid += 1
            edges[f"e{eid}"] = members
            if q == 2:
                mult[members] = mult.get(members, 0) + 1
    H = Hypergraph(vs, edges)
    if connected and n >= 2:
        from .structure import components

        comps = components(H)
        while len(comps) > 1:
            a = rng.choice(sorted(comps[0]))
            b = rng.choice(sorted(comps[1]))
            eid += 1
            edges[f"e{eid}"] = frozenset((a, b))
            H = Hypergraph(vs, edges)
            comps = components(H)
    return H


# -- shape detection ----------------------------------------------------


def is_graph(H: Hypergraph) -> bool:
    """True when every edge is ordinary (incidence size 2)."""
    return all(len(m) == 2 for m in H.edges().values())


def t_fold_complete_parameters(H: Hypergraph) -> tuple[int, int] | None:
    """(t, n) if H = tK_n for some t >= 1, n >= 1; None otherwise."""
    n = H.order
    if n == 0 or not is_graph(H):
        return None
    if n == 1:
        return (1, 1) if H.size == 0 else None
    mults = {H.multiplicity(u, v) for u, v in itertools.combinations(sorted(H.vertices), 2)}
    if len(mults) != 1:
        return None
    t = mults.pop()
    if t < 1 or H.size != t * n * (n - 1) // 2:
        return None
    return t, n


def t_fold_cycle_parameters(H: Hypergraph) -> tuple[int, int] | None:
    """(t, n) if H = tC_n for some t >= 1, n >= 3; None otherwise."""
    n = H.order
    if n < 3 or not is_graph(H):
        return None
    simple = H.underlying_simple()
    if simple.size != n or any(simple.degree(v) != 2 for v in simple.vertices):
        return None
    from .structure import is_connected

    # 2-regular + connected + n edges => a single cycle
    if not is_connected(simple):
        return None
    pair_mults = {H.multiplicity(*sorted(simple.incidence(se))) for se in simple.edge_ids}
    if len(pair_mults) != 1:
        return None
    t = pair_mults.pop()
    return (t, n) if H.size == t * n else None
