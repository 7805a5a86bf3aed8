"""Generate hard pairs, certify them, and watch a one-unit budget increase
make each of them solvable.

Run: python3 demos/hard_pair_gallery.py
"""

import random

import degenpart as dp
from degenpart.instancefile import emit_certificate, emit_instance


def main():
    for seed in (1, 7, 21):
        p = random.Random(seed).randint(2, 3)
        H, f = dp.make_hard(dp.random_hard_plan(seed, max_blocks=3, p=p), p, seed=seed)
        print(f"== seed {seed}: {H.order} vertices, {H.size} edges, p = {p} ==")
        print(emit_instance(H, f), end="")

        cert = dp.is_hard(H, f)
        assert cert is not None and dp.verify_certificate(H, f, cert)
        print(emit_certificate(cert), end="")

        # raise one coordinate somewhere: the pair stops being hard
        v = sorted(H.vertices)[0]
        vec = list(f[v])
        vec[0] += 1
        g = f.with_value(v, tuple(vec))
        res = dp.solve(H, g)
        assert res.partitionable
        print(f"after f[{v}] += e1: partitionable\n")


if __name__ == "__main__":
    main()
