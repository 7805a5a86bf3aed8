"""Partition construction with certificates, and degree-bounded refinement.

Given f with f_1(v)+...+f_p(v) >= d(v) everywhere, every connected
hypergraph either admits a partition into strictly f_i-degenerate classes
or is one of the non-partitionable pairs recognized by hardpair.is_hard.
The solver searches over reductions that shrink away one non-separating
vertex z and charge coordinate j by the ordinary multiplicities towards
z; a solved reduction extends by placing z into class j.  Branches whose
reduction is itself non-partitionable are pruned.  Should the search ever
exhaust without an answer on a non-hard input, an exhaustive assignment
sweep finishes the job and the event is counted (see fallback_count).
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .degeneracy import is_strictly_degenerate
from .hardpair import HardPairCertificate, VectorFunction, is_hard
from .hypergraph import Hypergraph
from .structure import components, separating_vertices

log = logging.getLogger(__name__)

_fallbacks = 0


def fallback_count() -> int:
    """How many times solve had to fall back to exhaustive assignment."""
    return _fallbacks


def reset_fallback_count() -> None:
    global _fallbacks
    _fallbacks = 0


@dataclass(frozen=True, eq=False)
class SolveResult:
    """Either a full partition or certificates for the stuck components."""

    partition: dict[str, int] | None
    certificates: dict[frozenset[str], HardPairCertificate] | None

    @property
    def partitionable(self) -> bool:
        return self.partition is not None


def reduce_pair(H: Hypergraph, f: VectorFunction, z: str, j: int) -> tuple[Hypergraph, VectorFunction]:
    """The reduction: shrink z away and lower coordinate j by the multiplicities."""
    H2 = H.shrink_away(z)
    values = {}
    for v in H2.vertices:
        vec = list(f[v])
        vec[j - 1] = max(0, vec[j - 1] - H.multiplicity(z, v))
        values[v] = tuple(vec)
    return H2, VectorFunction(f.p, values)


def solve(H: Hypergraph, f: VectorFunction) -> SolveResult:
    """Partition H into strictly f_i-degenerate classes, or certify failure."""
    if f.vertices != H.vertices:
        raise ValueError("vector function domain does not match the hypergraph")
    for v in sorted(H.vertices):
        if f.sum_at(v) < H.degree(v):
            raise ValueError(
                f"degree hypothesis violated at {v!r}: sum f_i = {f.sum_at(v)} < degree {H.degree(v)}"
            )
    assignment: dict[str, int] = {}
    certs: dict[frozenset[str], HardPairCertificate] = {}
    for comp in components(H):
        Hc = H.induced(comp)
        fc = f.restrict(comp)
        cert = is_hard(Hc, fc)
        if cert is not None:
            certs[comp] = cert
            continue
        part = _solve_connected(Hc, fc)
        assignment.update(part)
    if certs:
        return SolveResult(None, certs)
    if not verify_partition(H, f, assignment):
        raise AssertionError("internal error: solver produced an invalid partition")
    return SolveResult(assignment, None)


def _solve_connected(H: Hypergraph, f: VectorFunction) -> dict[str, int]:
    """Partition a connected component already known not to be hard."""
    global _fallbacks
    failed: set[tuple] = set()
    part = _search(H, f, failed)
    if part is None:
        _fallbacks += 1
        log.warning(
            "reduction search exhausted on a partitionable component (%d vertices); "
            "falling back to exhaustive assignment",
            H.order,
        )
        part = _exhaustive(H, f)
        if part is None:
            raise AssertionError("internal error: non-hard component with no partition")
    return part


def _search(H: Hypergraph, f: VectorFunction, failed: set[tuple]) -> dict[str, int] | None:
    if H.order == 1:
        (v,) = H.vertices
        for j, x in enumerate(f[v], 1):
            if x > 0:
                return {v: j}
        return None
    key = f.key()
    if key in failed:
        return None
    sep = separating_vertices(H)
    zs = sorted(
        (z for z in H.vertices if z not in sep),
        key=lambda z: (0 if f.sum_at(z) > H.degree(z) else 1, z),
    )
    for z in zs:
        coords = sorted(
            (j for j, x in enumerate(f[z], 1) if x > 0),
            key=lambda j: (-f[z][j - 1], j),
        )
        for j in coords:
            H2, f2 = reduce_pair(H, f, z, j)
            if is_hard(H2, f2) is not None:
                continue
            sub = _search(H2, f2, failed)
            if sub is not None:
                sub[z] = j
                return sub
    failed.add(key)
    return None


def _exhaustive(H: Hypergraph, f: VectorFunction) -> dict[str, int] | None:
    vs = sorted(H.vertices)
    for choice in itertools.product(range(1, f.p + 1), repeat=len(vs)):
        part = dict(zip(vs, choice))
        if verify_partition(H, f, part):
            return part
    return None


def verify_partition(H: Hypergraph, f: VectorFunction, P: dict[str, int]) -> bool:
    """True iff P is total on V(H) and class i is strictly f_i-degenerate."""
    if set(P) != set(H.vertices):
        return False
    if any(not 1 <= i <= f.p for i in P.values()):
        return False
    for i in range(1, f.p + 1):
        X = frozenset(v for v, c in P.items() if c == i)
        if not is_strictly_degenerate(H.induced(X), {v: f[v][i - 1] for v in X}):
            return False
    return True


def partition_weight(H: Hypergraph, f: VectorFunction, P: dict[str, int]) -> int:
    """W = sum over classes of (edge count minus sum of f_i on the class)."""
    W = 0
    for i in range(1, f.p + 1):
        X = frozenset(v for v, c in P.items() if c == i)
        Hi = H.induced(X)
        W += Hi.size - sum(f[v][i - 1] for v in X)
    return W


def enforce_degree_bounds(
    H: Hypergraph,
    f: VectorFunction,
    P: dict[str, int],
    trace: list[int] | None = None,
) -> dict[str, int]:
    """Shift vertices until every v in class i has d_{H_i}(v) <= f_i(v).

    Each move takes a violating vertex to a class where its degree is
    below the bound (one exists because sum f_i >= d); the weight
    partition_weight strictly drops every move, so this terminates.  If
    trace is a list, the weight after each move is appended to it.
    """
    if not verify_partition(H, f, P):
        raise ValueError("enforce_degree_bounds expects a valid partition")
    for v in sorted(H.vertices):
        if f.sum_at(v) < H.degree(v):
            raise ValueError(f"degree hypothesis violated at {v!r}")
    P = dict(P)
    while True:
        move = _find_violation(H, f, P)
        if move is None:
            return P
        v, j = move
        P[v] = j
        if trace is not None:
            trace.append(partition_weight(H, f, P))


def _find_violation(H: Hypergraph, f: VectorFunction, P: dict[str, int]) -> tuple[str, int] | None:
    classes = {i: frozenset(v for v, c in P.items() if c == i) for i in range(1, f.p + 1)}
    for v in sorted(P):
        i = P[v]
        if _class_degree(H, classes[i], v) <= f[v][i - 1]:
            continue
        for j in range(1, f.p + 1):
            if j != i and _class_degree(H, classes[j] | {v}, v) < f[v][j - 1]:
                return v, j
        raise AssertionError("internal error: no target class despite degree hypothesis")
    return None


def _class_degree(H: Hypergraph, X: frozenset[str], v: str) -> int:
    """Degree of v in the subhypergraph induced by X plus v."""
    Y = X | {v}
    return sum(1 for e in H.edges_at(v) if H.incidence(e) <= Y)
