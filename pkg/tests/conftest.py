"""Shared corpora for the test suite.

The "sweep" fixture drives several tests: a seeded sample of small
connected multihypergraphs, each paired with vector functions that match
the degrees pointwise, together with the recognizer/solver/oracle
verdicts computed once per session.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import pytest

import degenpart as dp

SWEEP_SEED = 20260823
SWEEP_INSTANCES = 2000
FS_PER_INSTANCE = 6  # per p, when full enumeration is too large
F_CAP = 3


def compositions(d: int, p: int, cap: int):
    """All ways to write d as p ordered non-negative parts, each <= cap."""
    if p == 1:
        if d <= cap:
            yield (d,)
        return
    for x in range(min(d, cap) + 1):
        for rest in compositions(d - x, p - 1, cap):
            yield (x,) + rest


def degree_matched_fs(H: dp.Hypergraph, p: int, rng: random.Random, limit: int):
    """Vector functions with sum f_i(v) = d(v), entries <= F_CAP."""
    vs = sorted(H.vertices)
    per_vertex = [list(compositions(H.degree(v), p, F_CAP)) for v in vs]
    if any(not opts for opts in per_vertex):
        return
    total = 1
    for opts in per_vertex:
        total *= len(opts)
    if total <= limit:
        for combo in itertools.product(*per_vertex):
            yield dp.VectorFunction(p, dict(zip(vs, combo)))
    else:
        for _ in range(limit):
            yield dp.VectorFunction(p, {v: rng.choice(opts) for v, opts in zip(vs, per_vertex)})


@dataclass
class SweepRecord:
    H: dp.Hypergraph
    f: dp.VectorFunction
    hard: bool  # is_hard verdict
    oracle_partitionable: bool
    partition: dict[str, int] | None  # solve's partition when partitionable


@dataclass
class Sweep:
    records: list[SweepRecord]
    instances: int
    fallbacks: int  # solve fallback activations during the sweep


@pytest.fixture(scope="session")
def sweep() -> Sweep:
    rng = random.Random(SWEEP_SEED)
    dp.reset_fallback_count()
    records: list[SweepRecord] = []
    for _ in range(SWEEP_INSTANCES):
        n = rng.randint(2, 5)
        m = rng.randint(1, 8)
        H = dp.random_hypergraph(
            n, m, max_arity=3, max_mult=2, seed=rng.randrange(2**32), connected=True
        )
        for p in (2, 3):
            for f in degree_matched_fs(H, p, rng, FS_PER_INSTANCE):
                hard = dp.is_hard(H, f) is not None
                verdict = dp.brute_partitionable(H, f)
                res = dp.solve(H, f)
                records.append(
                    SweepRecord(H, f, hard, verdict.partitionable, res.partition)
                )
    return Sweep(records, SWEEP_INSTANCES, dp.fallback_count())


def layered_wheel_instance() -> dp.Hypergraph:
    """11-vertex hypergraph with maximum degree 6: a centre joined to an
    inner 4-cycle layer, an outer layer, two pendant-side vertices, and
    three hyperedges covering the shaded regions."""
    verts = ["v1", "v2", "v3", "w1", "w2", "w3", "w4", "u1", "u2", "u3", "u4"]
    pairs = [
        ("v1", "w1"), ("v1", "w2"), ("v1", "w3"), ("v1", "w4"),
        ("v2", "u1"), ("v2", "u2"), ("v2", "u3"),
        ("v3", "u1"), ("v3", "u3"), ("v3", "u4"),
        ("u1", "u4"), ("u1", "w1"), ("u1", "w2"),
        ("u2", "u3"), ("u2", "w2"), ("u2", "w3"),
        ("u3", "w3"), ("u3", "w4"),
        ("u4", "w4"), ("u4", "w1"),
    ]
    edges: dict[str, tuple[str, ...]] = {f"e{i}": ab for i, ab in enumerate(pairs, 1)}
    edges["h1"] = ("v2", "u2", "u1")
    edges["h2"] = ("v3", "u4", "u3")
    edges["h3"] = ("v1", "w1", "w2", "w3", "w4")
    return dp.Hypergraph(verts, edges)


def petersen() -> dp.Hypergraph:
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    edges = {f"e{k}": ab for k, ab in enumerate(outer + inner + spokes, 1)}
    verts = [v for ab in edges.values() for v in ab]
    return dp.Hypergraph(set(verts), edges)
