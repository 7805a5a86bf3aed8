"""Recognition, generation and verification of non-partitionable pairs.

A pair (H, f) with f a p-coordinate vector function admits no partition
into strictly f_i-degenerate classes exactly when it belongs to a
recursive family built from three kinds of base blocks -- monoblocks (all
of f on one coordinate, equal to the degree), uniformly multiplied
complete graphs, and odd uniformly multiplied cycles -- glued together at
single vertices with f adding up at the glue point.  Such pairs are
recognized here by stripping leaf blocks off the block tree: the value of
f on any vertex private to one block pins down that block's share of f,
and the shares must add up exactly at the shared vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .hypergraph import (
    Hypergraph,
    complete_uniform,
    cycle,
    merge,
    t_fold,
    t_fold_complete_parameters,
    t_fold_cycle_parameters,
)
from .structure import BlockTree, blocks, is_connected, separating_vertices


class VectorFunction:
    """Map from vertices to length-p tuples of non-negative integers."""

    __slots__ = ("p", "_values")

    def __init__(self, p: int, values: Mapping[str, Sequence[int]]):
        if p < 1:
            raise ValueError(f"vector function needs p >= 1, got {p}")
        store: dict[str, tuple[int, ...]] = {}
        for v, vec in dict(values).items():
            vec = tuple(vec)
            if len(vec) != p:
                raise ValueError(f"vector at {v!r} has length {len(vec)}, expected {p}")
            if any(x < 0 for x in vec):
                raise ValueError(f"vector at {v!r} has a negative entry")
            store[v] = vec
        self.p = p
        self._values = store

    @classmethod
    def constant(cls, vertices: Iterable[str], vec: Sequence[int]) -> "VectorFunction":
        vec = tuple(vec)
        return cls(len(vec), {v: vec for v in vertices})

    @classmethod
    def from_degrees(cls, H: Hypergraph, j: int, p: int) -> "VectorFunction":
        """f(v) = d_H(v) * e_j (1-based j)."""
        if not 1 <= j <= p:
            raise ValueError(f"coordinate {j} out of range 1..{p}")
        return cls(p, {v: tuple(H.degree(v) if i == j else 0 for i in range(1, p + 1)) for v in H.vertices})

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self._values)

    def __getitem__(self, v: str) -> tuple[int, ...]:
        return self._values[v]

    def __contains__(self, v: str) -> bool:
        return v in self._values

    def items(self):
        return self._values.items()

    def sum_at(self, v: str) -> int:
        return sum(self._values[v])

    def restrict(self, X: Iterable[str]) -> "VectorFunction":
        return VectorFunction(self.p, {v: self._values[v] for v in X})

    def with_value(self, v: str, vec: Sequence[int]) -> "VectorFunction":
        values = dict(self._values)
        values[v] = tuple(vec)
        return VectorFunction(self.p, values)

    def coordinate(self, j: int) -> dict[str, int]:
        """The scalar function f_j (1-based)."""
        return {v: vec[j - 1] for v, vec in self._values.items()}

    def key(self) -> tuple:
        return (self.p, tuple(sorted(self._values.items())))

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorFunction):
            return NotImplemented
        return self.p == other.p and self._values == other._values

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"VectorFunction(p={self.p}, {len(self._values)} vertices)"


# -- block type tags ----------------------------------------------------


@dataclass(frozen=True)
class MTag:
    """Monoblock: f concentrated on coordinate j and equal to the degree."""

    j: int


@dataclass(frozen=True)
class KTag:
    """t-fold complete block tK_n with constant f = t * counts, sum(counts) = n - 1."""

    t: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class CTag:
    """t-fold odd cycle tC_n (n >= 5) with constant f = t * (e_k + e_l)."""

    t: int
    k: int
    l: int


BlockTypeTag = MTag | KTag | CTag


@dataclass(frozen=True, eq=False)
class HardPairCertificate:
    """Per-block classification: vertex sets, type tags, and block functions.

    block_functions[i] maps each vertex of blocks[i] to its share of f;
    the shares sum to f at every vertex.
    """

    blocks: tuple[frozenset[str], ...]
    tags: tuple[BlockTypeTag, ...]
    block_functions: tuple[dict[str, tuple[int, ...]], ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HardPairCertificate):
            return NotImplemented
        return (
            self.blocks == other.blocks
            and self.tags == other.tags
            and self.block_functions == other.block_functions
        )


def _tag_matches(B: Hypergraph, fB: Mapping[str, tuple[int, ...]], p: int, tag: BlockTypeTag) -> bool:
    """Direct check of the defining equations of one block type."""
    if isinstance(tag, MTag):
        if not 1 <= tag.j <= p:
            return False
        for v in B.vertices:
            want = tuple(B.degree(v) if i == tag.j else 0 for i in range(1, p + 1))
            if fB[v] != want:
                return False
        return True
    if isinstance(tag, KTag):
        if len(tag.counts) != p or tag.t < 1:
            return False
        n = sum(tag.counts) + 1
        if n < 3 or sum(1 for c in tag.counts if c) < 2:
            return False
        if t_fold_complete_parameters(B) != (tag.t, n):
            return False
        want = tuple(tag.t * c for c in tag.counts)
        return all(fB[v] == want for v in B.vertices)
    if isinstance(tag, CTag):
        if tag.k == tag.l or not (1 <= tag.k <= p and 1 <= tag.l <= p) or tag.t < 1:
            return False
        n = B.order
        if n < 5 or n % 2 == 0:
            return False
        if t_fold_cycle_parameters(B) != (tag.t, n):
            return False
        want = tuple(tag.t if i in (tag.k, tag.l) else 0 for i in range(1, p + 1))
        return all(fB[v] == want for v in B.vertices)
    return False


def _classify(B: Hypergraph, fB: Mapping[str, tuple[int, ...]], p: int) -> BlockTypeTag | None:
    support = {j for vec in fB.values() for j, x in enumerate(vec, 1) if x}
    if len(support) <= 1:
        tag = MTag(min(support) if support else 1)
        return tag if _tag_matches(B, fB, p, tag) else None
    vals = {fB[v] for v in B.vertices}
    if len(vals) != 1:
        return None
    g = vals.pop()
    params = t_fold_complete_parameters(B)
    if params is not None and params[1] >= 3:
        t = params[0]
        if all(x % t == 0 for x in g):
            tag = KTag(t, tuple(x // t for x in g))
            if _tag_matches(B, fB, p, tag):
                return tag
    params = t_fold_cycle_parameters(B)
    if params is not None:
        t = params[0]
        nz = [j for j, x in enumerate(g, 1) if x]
        if len(nz) == 2 and all(g[j - 1] == t for j in nz):
            tag = CTag(t, nz[0], nz[1])
            if _tag_matches(B, fB, p, tag):
                return tag
    return None


def classify_block(B: Hypergraph, fB: VectorFunction) -> BlockTypeTag | None:
    """Match one block against the three base patterns; None if no match."""
    if not is_connected(B) or separating_vertices(B):
        raise ValueError("classify_block expects a connected block without separating vertices")
    if fB.vertices != B.vertices:
        raise ValueError("block function domain does not match the block")
    return _classify(B, {v: fB[v] for v in B.vertices}, fB.p)


def is_hard(H: Hypergraph, f: VectorFunction) -> HardPairCertificate | None:
    """Certificate of non-partitionability, or None.

    Strips leaf blocks off the block tree.  Vertices lying in a single
    remaining block pin the block's share of f; at the shared vertex the
    share is inferred from the only patterns that can extend (constant,
    or degree-proportional on one coordinate) and subtracted from the
    running residual, which must stay non-negative.
    """
    if H.is_empty or not is_connected(H):
        raise ValueError("is_hard expects a connected non-empty hypergraph")
    if f.vertices != H.vertices:
        raise ValueError("vector function domain does not match the hypergraph")
    p = f.p
    if any(f.sum_at(v) != H.degree(v) for v in H.vertices):
        return None
    bt = blocks(H)
    nb = len(bt.blocks)
    remaining = set(range(nb))
    in_blocks = {v: sum(1 for b in bt.blocks if v in b) for v in H.vertices}
    residual = {v: f[v] for v in H.vertices}
    tags: list[BlockTypeTag | None] = [None] * nb
    fns: list[dict[str, tuple[int, ...]] | None] = [None] * nb
    while remaining:
        leaf = min(
            i for i in remaining if sum(1 for v in bt.blocks[i] if in_blocks[v] >= 2) <= 1
        )
        bset = bt.blocks[leaf]
        B = H.induced(bset)
        shared = [v for v in bset if in_blocks[v] >= 2]
        pinned = {v: residual[v] for v in bset if in_blocks[v] == 1}
        candidates: list[dict[str, tuple[int, ...]]] = []
        if not shared:
            candidates.append(pinned)
        else:
            c = shared[0]
            vals = set(pinned.values())
            if len(vals) == 1:
                candidates.append({**pinned, c: vals.pop()})
            support = {j for vec in pinned.values() for j, x in enumerate(vec, 1) if x}
            if len(support) <= 1:
                j = min(support) if support else 1
                cand = {
                    **pinned,
                    c: tuple(B.degree(c) if i == j else 0 for i in range(1, p + 1)),
                }
                if cand not in candidates:
                    candidates.append(cand)
        tag = None
        fB = None
        for cand in candidates:
            tag = _classify(B, cand, p)
            if tag is not None:
                fB = cand
                break
        if tag is None or fB is None:
            return None
        tags[leaf] = tag
        fns[leaf] = fB
        if shared:
            c = shared[0]
            left = tuple(a - b for a, b in zip(residual[c], fB[c]))
            if any(x < 0 for x in left):
                return None
            residual[c] = left
        remaining.discard(leaf)
        for v in bset:
            in_blocks[v] -= 1
    return HardPairCertificate(bt.blocks, tuple(tags), tuple(fns))  # type: ignore[arg-type]


def verify_certificate(H: Hypergraph, f: VectorFunction, cert: HardPairCertificate) -> bool:
    """Re-check every certificate invariant from scratch; False on any violation."""
    try:
        bt = blocks(H)
    except ValueError:
        return False
    if cert.blocks != bt.blocks:
        return False
    if len(cert.tags) != len(cert.blocks) or len(cert.block_functions) != len(cert.blocks):
        return False
    if f.vertices != H.vertices:
        return False
    p = f.p
    for bset, tag, fB in zip(cert.blocks, cert.tags, cert.block_functions):
        if set(fB) != set(bset):
            return False
        if any(len(vec) != p or any(x < 0 for x in vec) for vec in fB.values()):
            return False
        if not _tag_matches(H.induced(bset), fB, p, tag):
            return False
    for v in H.vertices:
        total = tuple(
            sum(fB[v][i] for bset, fB in zip(cert.blocks, cert.block_functions) if v in bset)
            for i in range(p)
        )
        if total != f[v]:
            return False
        if v not in bt.cut_vertices:
            (i,) = bt.blocks_at(v)
            if cert.block_functions[i][v] != f[v]:
                return False
    return True


# -- construction of hard pairs -----------------------------------------

# A build plan is a nested tuple:
#   ("M", H, j)            arbitrary single-block hypergraph, f = d_H * e_j
#   ("K", t, counts)       tK_n with n = sum(counts) + 1, f constant t * counts
#   ("C", t, n, k, l)      tC_n, n >= 5 odd, f constant t * (e_k + e_l)
#   ("merge", left, right) glue two plans at a random vertex of each


def make_hard(plan, p: int, seed: int = 0) -> tuple[Hypergraph, VectorFunction]:
    """Build a non-partitionable pair from a plan; merge points come from seed."""
    rng = random.Random(seed)
    counter = [0]
    H, f = _build_plan(plan, p, rng, counter)
    return H, f


def _build_plan(plan, p: int, rng: random.Random, counter: list[int]) -> tuple[Hypergraph, VectorFunction]:
    kind = plan[0]
    if kind == "merge":
        _, left, right = plan
        H1, f1 = _build_plan(left, p, rng, counter)
        H2, f2 = _build_plan(right, p, rng, counter)
        v1 = rng.choice(sorted(H1.vertices))
        v2 = rng.choice(sorted(H2.vertices))
        counter[0] += 1
        vstar = f"m{counter[0]}"
        H = merge(H1, v1, H2, v2, vstar)
        glued = tuple(a + b for a, b in zip(f1[v1], f2[v2]))
        values = {v: f1[v] for v in H1.vertices if v != v1}
        values.update({v: f2[v] for v in H2.vertices if v != v2})
        values[vstar] = glued
        return H, VectorFunction(p, values)
    counter[0] += 1
    prefix = f"b{counter[0]}"
    if kind == "M":
        _, B, j = plan
        if not is_connected(B) or separating_vertices(B):
            raise ValueError("M plan block must be connected without separating vertices")
        H = _relabel(B, prefix)
        return H, VectorFunction.from_degrees(H, j, p)
    if kind == "K":
        _, t, counts = plan
        counts = tuple(counts)
        if len(counts) != p:
            raise ValueError(f"K plan counts must have length {p}")
        n = sum(counts) + 1
        if n < 3 or sum(1 for c in counts if c) < 2 or t < 1:
            raise ValueError("K plan needs t >= 1, sum(counts) >= 2 and two nonzero counts")
        H = _relabel(t_fold(complete_uniform(n, 2), t), prefix)
        return H, VectorFunction.constant(H.vertices, tuple(t * c for c in counts))
    if kind == "C":
        _, t, n, k, l = plan
        if n < 5 or n % 2 == 0 or t < 1 or k == l or not (1 <= k <= p and 1 <= l <= p):
            raise ValueError("C plan needs odd n >= 5, t >= 1 and distinct coordinates")
        H = _relabel(t_fold(cycle(n), t), prefix)
        vec = tuple(t if i in (k, l) else 0 for i in range(1, p + 1))
        return H, VectorFunction.constant(H.vertices, vec)
    raise ValueError(f"unknown plan kind {kind!r}")


def _relabel(H: Hypergraph, prefix: str) -> Hypergraph:
    vmap = {v: f"{prefix}.{v}" for v in H.vertices}
    edges = {f"{prefix}.{e}": frozenset(vmap[v] for v in m) for e, m in H.edges().items()}
    return Hypergraph(vmap.values(), edges)


def random_hard_plan(seed: int, max_blocks: int = 4, p: int = 2):
    """Seeded random build plan with 1..max_blocks base blocks."""
    rng = random.Random(seed)
    nblocks = rng.randint(1, max_blocks)
    plan = _random_base(rng, p)
    for _ in range(nblocks - 1):
        plan = ("merge", plan, _random_base(rng, p))
    return plan


def _random_base(rng: random.Random, p: int):
    kind = rng.choice(["M", "K", "C"] if p >= 2 else ["M"])
    if kind == "M":
        shape = rng.choice(["cycle", "complete", "hyperedge", "multiedge"])
        if shape == "cycle":
            B = cycle(rng.randint(3, 6))
        elif shape == "complete":
            B = complete_uniform(rng.randint(2, 4), 2)
        elif shape == "hyperedge":
            n = rng.randint(3, 4)
            B = complete_uniform(n, n)
        else:
            B = t_fold(complete_uniform(2, 2), rng.randint(2, 3))
        return ("M", B, rng.randint(1, p))
    if kind == "K":
        n = rng.randint(3, 5)
        counts = [0] * p
        slots = rng.sample(range(p), 2)
        for s in slots:
            counts[s] = 1
        for _ in range(n - 3):
            counts[rng.randrange(p)] += 1
        return ("K", rng.randint(1, 2), tuple(counts))
    n = rng.choice([5, 7])
    k, l = rng.sample(range(1, p + 1), 2)
    return ("C", rng.randint(1, 2), n, k, l)
