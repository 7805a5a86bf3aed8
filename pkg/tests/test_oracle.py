import pytest

import degenpart as dp
from degenpart.hardpair import VectorFunction
from degenpart.hypergraph import Hypergraph


class TestBruteDegenerate:
    def test_small_examples(self):
        C5 = dp.cycle(5)
        assert not dp.brute_strictly_degenerate(C5, {v: 2 for v in C5.vertices})
        assert dp.brute_strictly_degenerate(C5, {v: 3 for v in C5.vertices})
        P = dp.path(4)
        assert dp.brute_strictly_degenerate(P, {v: 2 for v in P.vertices})

    def test_hyperedges_count_only_when_fully_inside(self):
        H = Hypergraph("abc", {"x": "abc"})
        # with uniform level 1 the full set is stuck; one slack vertex frees it
        assert not dp.brute_strictly_degenerate(H, {"a": 1, "b": 1, "c": 1})
        assert dp.brute_strictly_degenerate(H, {"a": 2, "b": 1, "c": 1})
        assert not dp.brute_strictly_degenerate(H, {"a": 2, "b": 1, "c": 0})

    def test_guard(self):
        H = dp.random_hypergraph(13, 3, seed=0)
        with pytest.raises(ValueError, match="guard"):
            dp.brute_strictly_degenerate(H, {v: 1 for v in H.vertices})


class TestBrutePartitionable:
    def test_even_cycle(self):
        H = dp.cycle(4)
        v = dp.brute_partitionable(H, VectorFunction.constant(H.vertices, (1, 1)))
        assert v.partitionable
        assert set(v.witness) == H.vertices and set(v.witness.values()) <= {1, 2}

    def test_odd_cycle(self):
        H = dp.cycle(5)
        v = dp.brute_partitionable(H, VectorFunction.constant(H.vertices, (1, 1)))
        assert not v.partitionable and v.witness is None

    def test_witness_verifies(self):
        for seed in range(10):
            H = dp.random_hypergraph(5, 6, seed=seed, connected=True)
            f = VectorFunction.constant(H.vertices, (2, 1))
            v = dp.brute_partitionable(H, f)
            if v.partitionable:
                assert dp.verify_partition(H, f, v.witness)

    def test_guard(self):
        H = dp.random_hypergraph(11, 3, seed=0)
        with pytest.raises(ValueError, match="guard"):
            dp.brute_partitionable(H, VectorFunction.constant(H.vertices, (1, 1)))
