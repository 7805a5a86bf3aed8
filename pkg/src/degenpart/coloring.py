"""Coloring applications of the partition solver.

List coloring, degree-constrained partitions, point-partition numbers and
list colorings with degenerate classes all reduce to partitioning into
strictly f_i-degenerate parts for a suitable vector function: one
coordinate per color, with f_i(v) = s when color i is on v's list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping

from .degeneracy import col, is_strictly_degenerate
from .hardpair import HardPairCertificate, VectorFunction
from .hypergraph import (
    Hypergraph,
    is_graph,
    t_fold_complete_parameters,
    t_fold_cycle_parameters,
)
from .oracle import brute_partitionable
from .partition import enforce_degree_bounds, solve
from .structure import blocks, components

Color = str | int


@dataclass(frozen=True, eq=False)
class ColoringResult:
    """Either a proper coloring or certificates for the stuck components."""

    coloring: dict[str, Color] | None
    certificates: dict[frozenset[str], HardPairCertificate] | None

    @property
    def colorable(self) -> bool:
        return self.coloring is not None


def list_to_vector(
    H: Hypergraph, L: Mapping[str, set], s: int = 1
) -> tuple[VectorFunction, tuple[Color, ...]]:
    """Vector function with one coordinate per color: f_i(v) = s iff color i on L(v).

    Colors are numbered 1..p in sorted order; the order is returned so a
    partition can be translated back to colors.
    """
    if set(L) != set(H.vertices):
        raise ValueError("list assignment domain does not match the hypergraph")
    universe = sorted({c for lst in L.values() for c in lst}, key=lambda c: (str(type(c)), c))
    if not universe:
        raise ValueError("empty color universe")
    p = len(universe)
    values = {
        v: tuple(s if universe[i] in L[v] else 0 for i in range(p)) for v in H.vertices
    }
    return VectorFunction(p, values), tuple(universe)


def is_Lxs_choosable(H: Hypergraph, L: Mapping[str, set], s: int) -> ColoringResult:
    """Color from the lists with every color class strictly s-degenerate."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    for v in sorted(H.vertices):
        if s * len(L[v]) < H.degree(v):
            raise ValueError(
                f"list too small at {v!r}: s*|L| = {s * len(L[v])} < degree {H.degree(v)}"
            )
    f, universe = list_to_vector(H, L, s)
    res = solve(H, f)
    if res.partition is not None:
        return ColoringResult({v: universe[i - 1] for v, i in res.partition.items()}, None)
    return ColoringResult(None, res.certificates)


def list_color(H: Hypergraph, L: Mapping[str, set]) -> ColoringResult:
    """Proper coloring from the lists (independent color classes), or certificates."""
    return is_Lxs_choosable(H, L, 1)


def is_proper(H: Hypergraph, coloring: Mapping[str, Color]) -> bool:
    """No edge has all its vertices the same color."""
    return all(len({coloring[v] for v in m}) > 1 for m in H.edges().values())


def degree_constrained_partition(H: Hypergraph, ks: tuple[int, ...]) -> dict[str, int]:
    """Partition with col(H_i) <= k_i and max degree of H_i <= k_i.

    Requires a connected H that is neither a uniformly multiplied complete
    graph nor a uniformly multiplied odd cycle, and sum(ks) at least the
    maximum degree.
    """
    ks = tuple(ks)
    if H.is_empty or len(components(H)) != 1:
        raise ValueError("degree_constrained_partition expects a connected non-empty hypergraph")
    if len(ks) < 2 or any(k < 1 for k in ks):
        raise ValueError("need p >= 2 classes with all bounds >= 1")
    if sum(ks) < H.max_degree():
        raise ValueError(f"sum of bounds {sum(ks)} below maximum degree {H.max_degree()}")
    params = t_fold_complete_parameters(H)
    if params is not None:
        raise ValueError(f"excluded shape: {params[0]}-fold complete graph on {params[1]} vertices")
    params = t_fold_cycle_parameters(H)
    if params is not None and params[1] % 2 == 1:
        raise ValueError(f"excluded shape: {params[0]}-fold odd cycle of length {params[1]}")
    f = VectorFunction.constant(H.vertices, ks)
    res = solve(H, f)
    if res.partition is None:
        raise AssertionError("internal error: admissible instance classified non-partitionable")
    return enforce_degree_bounds(H, f, res.partition)


def point_partition_number(H: Hypergraph, s: int, strict: bool = True) -> int:
    """Fewest classes whose parts are all degenerate at level s.

    strict=True counts strictly s-degenerate classes; strict=False uses
    the convention where "s-degenerate" means strictly (s+1)-degenerate,
    so the two differ by a shift of the level.
    """
    if s < 1 or (not strict and s < 0):
        raise ValueError("degeneracy level out of range")
    level = s if strict else s + 1
    if H.is_empty:
        return 0
    dmax = H.max_degree()
    p = 1
    while True:
        f = VectorFunction.constant(H.vertices, (level,) * p)
        if p * level >= dmax:
            if solve(H, f).partitionable:
                return p
        else:
            if brute_partitionable(H, f).partitionable:
                return p
        p += 1


# -- choosability -------------------------------------------------------


def chromatic_number(H: Hypergraph) -> int:
    """Least number of colors with no edge monochromatic (0 for empty H)."""
    if H.is_empty:
        return 0
    S = H.underlying_simple()
    for k in itertools.count(1):
        if _colorable_with(S, {v: set(range(1, k + 1)) for v in S.vertices}):
            return k
    raise AssertionError("unreachable")


def _colorable_with(H: Hypergraph, L: Mapping[str, set]) -> bool:
    """Backtracking check for a proper coloring choosing from the lists."""
    vs = sorted(H.vertices, key=lambda v: len(L[v]))
    edges = list(H.underlying_simple().edges().values())
    coloring: dict[str, Color] = {}

    def ok(v: str, c: Color) -> bool:
        for m in edges:
            if v in m and all(u == v or coloring.get(u) == c for u in m):
                return False
        return True

    def go(i: int) -> bool:
        if i == len(vs):
            return True
        v = vs[i]
        for c in sorted(L[v], key=str):
            if ok(v, c):
                coloring[v] = c
                if go(i + 1):
                    return True
                del coloring[v]
        return False

    return go(0)


def chi_and_chi_list(H: Hypergraph, max_order: int = 10) -> tuple[int, int]:
    """Exact chromatic and list-chromatic numbers for desk-sized instances.

    The list-chromatic number is found by probing k-choosability upward
    from the chromatic number; the coloring number is an upper bound.
    """
    if H.order > max_order:
        raise ValueError(f"chi_and_chi_list guard: {H.order} > {max_order} vertices")
    if H.is_empty:
        return 0, 0
    chi = chromatic_number(H)
    for k in range(chi, col(H) + 1):
        if is_k_choosable(H, k):
            return chi, k
    raise AssertionError("unreachable: H is col(H)-choosable")


def _block_forces_bad_lists(B: Hypergraph) -> bool:
    """Blocks from which unbeatable degree-sized lists can be built:
    a simple complete graph, a simple odd cycle, or a single edge."""
    if B.size == 1:
        return True
    n = B.order
    if is_graph(B):
        if t_fold_complete_parameters(B) == (1, n):
            return True
        if n % 2 == 1 and t_fold_cycle_parameters(B) == (1, n):
            return True
    return False


def _degree_choosable(B: Hypergraph) -> bool:
    """Connected B with lists of size exactly d_B(v): colorable for every
    such list assignment iff some block breaks the bad-list construction."""
    bt = blocks(B)
    return not all(_block_forces_bad_lists(B.induced(bs)) for bs in bt.blocks)


def is_k_choosable(H: Hypergraph, k: int, adversary_budget: int = 200_000) -> bool:
    """Proper colorings exist for every list assignment with |L(v)| = k.

    Vertices of degree below k are peeled off (always colorable last).
    A k-regular stuck component is decided by its block shapes.  A stuck
    component with degrees above k needs an explicit search over list
    assignments, which is bounded by adversary_budget and raises once the
    instance is too large for an exact answer.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return H.is_empty
    wit = is_strictly_degenerate(H, {v: k for v in H.vertices})
    if wit:
        return True
    core = H.induced(wit.core)
    for comp in components(core):
        B = core.induced(comp)
        if all(B.degree(v) == k for v in comp):
            if not _degree_choosable(B):
                return False
        else:
            if _exists_bad_lists(B, k, adversary_budget):
                return False
    return True


def _exists_bad_lists(B: Hypergraph, k: int, budget: int) -> bool:
    """Search for a size-k list assignment admitting no proper coloring.

    Lists are enumerated up to renaming of colors: scanning vertices in
    order, every color beyond those already in play enters as the next
    unused integer.  Each complete assignment is tested by backtracking.
    """
    vs = sorted(B.vertices)
    spent = [0]

    def go(i: int, lists: dict[str, set], used: int) -> bool:
        if i == len(vs):
            spent[0] += 1
            if spent[0] > budget:
                raise ValueError(
                    f"choosability search exceeded budget on {B.order} vertices (k={k})"
                )
            return not _colorable_with(B, lists)
        v = vs[i]
        for r in range(k + 1):  # r fresh colors, k - r colors already in play
            for old in itertools.combinations(range(1, used + 1), k - r):
                lists[v] = set(old) | set(range(used + 1, used + r + 1))
                if go(i + 1, lists, used + r):
                    return True
        del lists[v]
        return False

    return go(0, {}, 0)
