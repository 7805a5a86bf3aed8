"""Partition a few small instances and inspect what comes back.

Run: python3 demos/partition_basics.py
"""

import degenpart as dp
from degenpart.instancefile import emit_certificates, emit_partition


def show(H, f, label):
    print(f"== {label} ==")
    res = dp.solve(H, f)
    if res.partitionable:
        print(emit_partition(res.partition, f.p), end="")
        assert dp.verify_partition(H, f, res.partition)
    else:
        print(emit_certificates(res.certificates), end="")
    print()


def main():
    # even cycle, one forest-like class per coordinate: partitionable
    H = dp.cycle(6)
    show(H, dp.VectorFunction.constant(H.vertices, (1, 1)), "C6 with f = (1,1)")

    # odd cycle with the same budget: the classic hard pair
    H = dp.cycle(5)
    show(H, dp.VectorFunction.constant(H.vertices, (1, 1)), "C5 with f = (1,1)")

    # a hypergraph: one big edge glued to a triangle
    H = dp.Hypergraph("abcxy", {"h": "abc", "e1": "cx", "e2": "xy", "e3": "yc"})
    f = dp.VectorFunction.from_degrees(H, 1, 2)
    show(H, f, "hyperedge + triangle, degrees on coordinate 1")


if __name__ == "__main__":
    main()
