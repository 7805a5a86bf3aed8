"""Coloring corollaries of the partition solver.

Run: python3 demos/coloring_applications.py
"""

import degenpart as dp


def petersen():
    outer = [(f"o{i}", f"o{(i + 1) % 5}") for i in range(5)]
    inner = [(f"i{i}", f"i{(i + 2) % 5}") for i in range(5)]
    spokes = [(f"o{i}", f"i{i}") for i in range(5)]
    edges = {f"e{k}": ab for k, ab in enumerate(outer + inner + spokes, 1)}
    return dp.Hypergraph({v for ab in edges.values() for v in ab}, edges)


def main():
    # split the Petersen graph into an independent set and a subgraph of
    # maximum degree <= 2 that is strictly 2-degenerate
    H = petersen()
    P = dp.degree_constrained_partition(H, (1, 2))
    for i in (1, 2):
        X = frozenset(v for v, c in P.items() if c == i)
        Hi = H.induced(X)
        print(f"class {i}: {sorted(X)} (col={dp.col(Hi)}, max degree={Hi.max_degree()})")

    # list coloring: identical 2-lists fail on odd cycles, succeed on even
    for n in (5, 6):
        C = dp.cycle(n)
        res = dp.list_color(C, {v: {1, 2} for v in C.vertices})
        print(f"C{n} with lists {{1,2}}: {'colorable' if res.colorable else 'certificate'}")

    # chromatic vs list-chromatic number
    for label, G in (("C5", dp.cycle(5)), ("K4", dp.complete_uniform(4, 2))):
        chi, chil = dp.chi_and_chi_list(G)
        print(f"{label}: chi={chi}, chi_list={chil}, col={dp.col(G)}")

    # point-partition numbers of K5: 3 classes at level 2, 3 at level 1
    K5 = dp.complete_uniform(5, 2)
    print(f"K5: alpha_2={dp.point_partition_number(K5, 2)}, "
          f"alpha_1={dp.point_partition_number(K5, 1)}")


if __name__ == "__main__":
    main()
