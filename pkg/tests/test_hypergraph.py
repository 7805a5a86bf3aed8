import random

import pytest

import degenpart as dp
from degenpart.hypergraph import Hypergraph


def triple_edge():
    return Hypergraph("abc", {"x": "abc"})


class TestConstruction:
    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            Hypergraph("ab", {"e": ("a", "a")})

    def test_arity_one_rejected(self):
        with pytest.raises(ValueError, match="arity"):
            Hypergraph("ab", {"e": ("a",)})

    def test_unknown_vertex_rejected(self):
        with pytest.raises(ValueError, match="unknown"):
            Hypergraph("ab", {"e": ("a", "c")})

    def test_equality_and_hash(self):
        H1 = Hypergraph("ab", {"e": "ab"})
        H2 = Hypergraph(["b", "a"], {"e": ("b", "a")})
        assert H1 == H2
        assert hash(H1) == hash(H2)


class TestDegrees:
    def test_complete_graph_degree(self):
        K4 = dp.complete_uniform(4, 2)
        assert all(K4.degree(v) == 3 for v in K4.vertices)

    def test_twofold_triangle_degree(self):
        H = dp.t_fold(dp.complete_uniform(3, 2), 2)
        assert all(H.degree(v) == 4 for v in H.vertices)

    def test_hyperedge_degree(self):
        assert triple_edge().degree("a") == 1

    def test_multiplicity_counts_only_ordinary_edges(self):
        assert triple_edge().multiplicity("a", "b") == 0

    def test_multiplicity_triple_cycle(self):
        H = dp.t_fold(dp.cycle(5), 3)
        assert H.multiplicity("v1", "v2") == 3
        assert H.multiplicity("v1", "v3") == 0

    def test_multiplicity_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            dp.cycle(4).multiplicity("v1", "v1")


class TestOperators:
    def test_induced_identity(self):
        H = dp.random_hypergraph(5, 6, seed=1)
        assert H.induced(H.vertices) == H

    def test_induced_drops_partial_hyperedge(self):
        H = triple_edge().induced("ab")
        assert H.size == 0 and H.order == 2

    def test_induced_complete(self):
        K3 = dp.complete_uniform(4, 2).induced({"v1", "v2", "v3"})
        assert K3.size == 3

    def test_shrink_truncates_hyperedge(self):
        H = triple_edge().shrink("ab")
        assert H.edges() == {"x": frozenset("ab")}

    def test_shrink_identity(self):
        H = dp.random_hypergraph(5, 6, seed=2)
        assert H.shrink(H.vertices) == H

    def test_shrink_commutes(self):
        H = dp.random_hypergraph(6, 8, seed=3)
        for u, v in [("v1", "v2"), ("v3", "v5")]:
            assert H.shrink_away(u).shrink_away(v) == H.shrink_away(v).shrink_away(u)

    def test_graph_shrink_equals_delete(self):
        G = dp.random_hypergraph(6, 8, max_arity=2, seed=4)
        assert G.shrink_away("v1") == G.delete("v1")

    def test_cycle_shrink_vertex(self):
        P = dp.cycle(4).shrink_away("v4")
        assert P.order == 3 and P.size == 2

    def test_degree_law_fuzz(self):
        # d_{H / v}(u) = d_H(u) - mu(u, v), over many seeded instances
        checks = 0
        for seed in range(40):
            H = dp.random_hypergraph(6, 8, seed=seed)
            for v in sorted(H.vertices):
                Hv = H.shrink_away(v)
                for u in sorted(Hv.vertices):
                    assert Hv.degree(u) == H.degree(u) - H.multiplicity(u, v)
                    checks += 1
        assert checks >= 1000

    def test_underlying_simple(self):
        S = dp.t_fold(dp.cycle(5), 3).underlying_simple()
        assert sorted(S.edges().values(), key=sorted) == sorted(
            dp.cycle(5).edges().values(), key=sorted
        )
        H = dp.random_hypergraph(5, 5, seed=5)
        assert H.underlying_simple().underlying_simple() == H.underlying_simple()


class TestMerge:
    def test_two_edges_make_path(self):
        H1 = Hypergraph("ab", {"e1": "ab"})
        H2 = Hypergraph("cd", {"e2": "cd"})
        H = dp.merge(H1, "b", H2, "c", "m")
        assert H.order == 3 and H.size == 2
        assert H.degree("m") == 2

    def test_order_size_law(self):
        H1 = dp.cycle(4)
        H2 = dp.complete_uniform(3, 3)
        H2 = Hypergraph(
            {f"x{v}" for v in H2.vertices},
            {f"x{e}": {f"x{v}" for v in m} for e, m in H2.edges().items()},
        )
        H = dp.merge(H1, "v1", H2, "xv1", "m")
        assert H.order == H1.order + H2.order - 1
        assert H.size == H1.size + H2.size

    def test_shared_vertices_rejected(self):
        with pytest.raises(ValueError):
            dp.merge(dp.cycle(3), "v1", dp.cycle(4), "v1", "m")

    def test_edge_multisets_recoverable(self):
        H1 = Hypergraph("ab", {"e1": "ab"})
        H2 = Hypergraph("cd", {"e2": "cd"})
        H = dp.merge(H1, "b", H2, "c", "m")
        back1 = {e: m for e, m in H.edges().items() if e in H1.edge_ids}
        assert back1 == {"e1": frozenset(("a", "m"))}


class TestGenerators:
    def test_complete_uniform_single_edge(self):
        for n in (2, 3, 5):
            assert dp.complete_uniform(n, n).size == 1

    def test_complete_uniform_bad_params(self):
        with pytest.raises(ValueError):
            dp.complete_uniform(3, 4)

    def test_t_fold_multiplicity(self):
        H = dp.t_fold(dp.cycle(5), 3)
        assert all(H.multiplicity(*sorted(m)) == 3 for m in dp.cycle(5).edges().values())

    def test_random_reproducible(self):
        a = dp.random_hypergraph(6, 8, seed=42, connected=True)
        b = dp.random_hypergraph(6, 8, seed=42, connected=True)
        assert a == b and a.edge_ids == b.edge_ids

    def test_random_connected(self):
        for seed in range(20):
            H = dp.random_hypergraph(6, 3, seed=seed, connected=True)
            assert dp.is_connected(H)

    def test_random_respects_mult_cap(self):
        rng = random.Random(0)
        for _ in range(10):
            H = dp.random_hypergraph(4, 10, max_mult=2, seed=rng.randrange(10**6))
            for u in sorted(H.vertices):
                for v in sorted(H.vertices):
                    if u < v:
                        assert H.multiplicity(u, v) <= 2


class TestShapeDetection:
    def test_complete_parameters(self):
        assert dp.t_fold_complete_parameters(dp.complete_uniform(4, 2)) == (1, 4)
        assert dp.t_fold_complete_parameters(dp.t_fold(dp.complete_uniform(3, 2), 2)) == (2, 3)
        assert dp.t_fold_complete_parameters(dp.cycle(4)) is None
        assert dp.t_fold_complete_parameters(dp.complete_uniform(3, 3)) is None

    def test_cycle_parameters(self):
        assert dp.t_fold_cycle_parameters(dp.cycle(5)) == (1, 5)
        assert dp.t_fold_cycle_parameters(dp.t_fold(dp.cycle(7), 2)) == (2, 7)
        assert dp.t_fold_cycle_parameters(dp.complete_uniform(4, 2)) is None
        assert dp.t_fold_cycle_parameters(dp.cycle(3)) == (1, 3)

    def test_is_graph(self):
        assert dp.is_graph(dp.cycle(4))
        assert not dp.is_graph(triple_edge())
