"""Walk through the exact ratio machinery on a few tiny graphs.

The bipartiteness ratio of a sign vector x weighs the edges its support
fails to cut against the vertex weight it activates.  A ratio of zero means
the support splits perfectly in two with no edge to the rest; the minimum
over all nonzero sign vectors is zero exactly for bipartite graphs.
"""

from fractions import Fraction

from bipratio import (
    WeightedGraph,
    aux_cut_ratio,
    brute_beta,
    build_auxiliary_graph,
    evaluate_beta,
    tripartition,
)
from bipratio.generators import complete, cycle

k3 = complete(3)
print("triangle, degree weights b =", k3.b)
for x in [(1, -1, -1), (1, 0, 0), (1, 1, 1), (1, -1, 0)]:
    L, R, Z = tripartition(x)
    print(f"  x={x}  (L={sorted(L)}, R={sorted(R)}, Z={sorted(Z)})"
          f"  ratio = {evaluate_beta(k3, x)}")

beta, argmin = brute_beta(k3)
print("exhaustive minimum:", beta, "attained by", argmin)
assert beta == Fraction(1, 3)

c4 = cycle(4)
print("\n4-cycle: alternating signs give ratio",
      evaluate_beta(c4, (1, -1, 1, -1)), "(bipartite, so the minimum is 0)")

# The doubled graph turns the ratio into a plain cut ratio: the plus copies
# of L together with the minus copies of R cut exactly the ratio's numerator
# and carry exactly its denominator.
aux = build_auxiliary_graph(k3)
print("\ndoubled triangle has", aux.n_aux, "vertices and",
      len(aux.aux_edges), "edges")
for L, R in [({0}, set()), ({0}, {1, 2}), ({0, 1}, set())]:
    x = tuple(1 if i in L else -1 if i in R else 0 for i in range(3))
    lhs = evaluate_beta(k3, x)
    rhs = aux_cut_ratio(aux, L, R)
    print(f"  L={sorted(L)} R={sorted(R)}: ratio {lhs} == doubled cut {rhs}")
    assert lhs == rhs

# Weighted, vertex-weighted example: the denominator uses b, not degrees.
G = WeightedGraph(2, ((0, 1, 5),), b=(1, 1))
print("\nsingle weighted edge, b=(1,1): ratio of (+,0) =",
      evaluate_beta(G, (1, 0)), "and of (+,-) =", evaluate_beta(G, (1, -1)))
