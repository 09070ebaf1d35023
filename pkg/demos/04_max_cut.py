"""Recursive bipartitioning max cut driven by the ratio sweep.

Each level commits the sweep witness's (L, R) and recurses on the zero
entries; the recursive bipartition is merged in whichever orientation cuts
more.  Bipartite inputs end at value exactly 1; near-bipartite inputs lose
at most an O(log n * log(1/eta)) * eta fraction where 1 - eta is the
optimum.
"""

from bipratio import GameParams, brute_maxcut, cut_value, recursive_bipart
from bipratio.generators import complete, planted_bipartite

# Perfectly bipartite: upper levels always find zero-ratio witnesses.
G, meta = planted_bipartite(24, p_cross=0.35, p_noise=0.0, seed=4)
res = recursive_bipart(G, GameParams(seed=4))
print(f"bipartite n=24: cut value {res.value} across {len(res.trace)} level(s)")
assert res.value == 1

# Noisy planted bipartition: compare against the exhaustive optimum.
G, meta = planted_bipartite(14, p_cross=0.5, p_noise=0.15, seed=8)
opt, _ = brute_maxcut(G)
res = recursive_bipart(G, GameParams(seed=8))
print(f"noisy n=14: noise fraction {meta['noise_fraction']:.3f}, "
      f"optimum {opt} = {float(opt):.3f}, recursive cut {res.value} "
      f"= {float(res.value):.3f}")
for depth, lvl in enumerate(res.trace):
    print(f"  level {depth}: |L|={len(lvl.L)} |R|={len(lvl.R)} "
          f"|Z|={len(lvl.Z)} witness ratio {lvl.beta}")
assert cut_value(G, res.S) == res.value

# The triangle cannot be fully cut; the optimum 2/3 is reachable.
k3 = complete(3)
res = recursive_bipart(k3, GameParams(seed=1))
print("triangle: cut value", res.value, "| optimum", brute_maxcut(k3)[0])
