"""Flow side of the machinery: networks over the doubled graph, blocking-flow
max-flow, consistent minimum cuts, path decomposition and demand graphs.

A selection network for disjoint (L, R) wires a super source into the plus
copies of L and the minus copies of R (arc capacity b there), the mirror
copies into a super sink, and keeps every doubled-graph edge as an undirected
middle edge of capacity w(e) * k, where the integer k is the reciprocal of
the ratio guess being tested.  A feasible flow is *saturating* when it meets
the full source capacity b(A); the selection is then called well-linked at
ratio 1/k.  When the maximum flow falls short, the residual cut can always be
reduced to a *consistent* one (at most one copy of each vertex on the source
side) of equal value, and that cut reads off a sign vector whose ratio is
strictly below 1/k.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptySelectionError,
    MalformedPathError,
    SaturatingFlowError,
)
from .graph import AuxiliaryGraph, SignVector, evaluate_beta


class FlowNetwork:
    """Integer-capacity s-t network stored as paired residual arcs.

    Arc a and arc a ^ 1 are each other's reverses.  A directed arc is a pair
    with reverse capacity 0; an undirected edge is a pair whose two residual
    capacities both start at the edge capacity, so the two directions share
    one capacity (net flow in [-c, +c]).

    Middle arcs carry a (base edge id, copy) tag so that path decompositions
    can account congestion per doubled-graph edge.  A network is built once,
    solved once.
    """

    def __init__(self, n_nodes: int, source: int, sink: int, n_base: int = 0):
        self.n_nodes = n_nodes
        self.source = source
        self.sink = sink
        self.n_base = n_base
        self.aux: AuxiliaryGraph | None = None
        self.k: int | None = None
        self.head: list[int] = []
        self.cap: list[int] = []
        self.cap0: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n_nodes)]
        self.source_arcs: list[int] = []
        self.sink_arcs: list[int] = []
        self.middle_arcs: list[int] = []
        self.middle_tag: dict[int, tuple[int, int]] = {}
        self.A: frozenset[int] = frozenset()
        self.B: frozenset[int] = frozenset()
        self.b_A = 0
        self.solved = False

    def _add_pair(self, u: int, v: int, cap_uv: int, cap_vu: int) -> int:
        a = len(self.head)
        self.head.append(v)
        self.cap.append(cap_uv)
        self.cap0.append(cap_uv)
        self.adj[u].append(a)
        self.head.append(u)
        self.cap.append(cap_vu)
        self.cap0.append(cap_vu)
        self.adj[v].append(a + 1)
        return a

    def add_source_arc(self, node: int, cap: int) -> int:
        a = self._add_pair(self.source, node, cap, 0)
        self.source_arcs.append(a)
        self.b_A += cap
        return a

    def add_sink_arc(self, node: int, cap: int) -> int:
        a = self._add_pair(node, self.sink, cap, 0)
        self.sink_arcs.append(a)
        return a

    def add_middle_edge(self, u: int, v: int, cap: int, tag: tuple[int, int] | None = None) -> int:
        a = self._add_pair(u, v, cap, cap)
        self.middle_arcs.append(a)
        if tag is not None:
            self.middle_tag[a] = tag
        return a

    def tail(self, arc: int) -> int:
        return self.head[arc ^ 1]


def build_network(aux: AuxiliaryGraph, L: Iterable[int], R: Iterable[int], k: int) -> FlowNetwork:
    """Selection network for disjoint (L, R) at congestion parameter k >= 1.

    Source side A is the plus copies of L plus the minus copies of R; sink
    side B mirrors it.  Source/sink arcs carry the vertex weights, middle
    edges carry w(e) * k.
    """
    L = frozenset(L)
    R = frozenset(R)
    if L & R:
        raise ValueError("L and R must be disjoint")
    if not (L or R):
        raise EmptySelectionError("L and R are both empty")
    if k < 1 or int(k) != k:
        raise ValueError(f"k must be a positive integer, got {k}")
    G = aux.base
    n = G.n
    net = FlowNetwork(2 * n + 2, source=2 * n, sink=2 * n + 1, n_base=n)
    A, B = set(), set()
    for i in sorted(L):
        net.add_source_arc(i, G.b[i])
        A.add(i)
    for i in sorted(R):
        net.add_source_arc(n + i, G.b[i])
        A.add(n + i)
    for i in sorted(L):
        net.add_sink_arc(n + i, G.b[i])
        B.add(n + i)
    for i in sorted(R):
        net.add_sink_arc(i, G.b[i])
        B.add(i)
    for idx, (a, bnode, w, e) in enumerate(aux.aux_edges):
        net.add_middle_edge(a, bnode, w * k, tag=(e, idx % 2))
    net.A = frozenset(A)
    net.B = frozenset(B)
    net.aux = aux
    net.k = int(k)
    return net


@dataclass
class FlowAssignment:
    """An integral feasible flow, read out of the solved network residuals."""

    network: FlowNetwork
    value: int

    def arc_flow(self, arc: int) -> int:
        """Net flow in the stored direction of ``arc`` (negative = reverse)."""
        return self.network.cap0[arc] - self.network.cap[arc]

    def max_conservation_violation(self) -> int:
        """Largest absolute flow imbalance over non-terminal nodes (audit)."""
        net = self.network
        balance = [0] * net.n_nodes
        for a in range(0, len(net.head), 2):
            f = self.arc_flow(a)
            balance[net.tail(a)] -= f
            balance[net.head[a]] += f
        worst = 0
        for node in range(net.n_nodes):
            if node in (net.source, net.sink):
                continue
            worst = max(worst, abs(balance[node]))
        return worst


def _bfs_levels(net: FlowNetwork) -> list[int]:
    level = [-1] * net.n_nodes
    level[net.source] = 0
    q = deque([net.source])
    while q:
        u = q.popleft()
        for a in net.adj[u]:
            v = net.head[a]
            if net.cap[a] > 0 and level[v] < 0:
                level[v] = level[u] + 1
                q.append(v)
    return level


def max_flow(net: FlowNetwork) -> FlowAssignment:
    """Maximum integral source-sink flow via blocking flows on level graphs.

    The solve mutates the network residuals in place (one solve per network)
    and audits itself: the residual source-side cut must have capacity equal
    to the flow value.
    """
    if net.solved:
        raise RuntimeError("network already solved; build a fresh one")
    head, cap = net.head, net.cap
    s, t = net.source, net.sink
    total = 0
    while True:
        level = _bfs_levels(net)
        if level[t] < 0:
            break
        it = [0] * net.n_nodes
        path: list[int] = []
        u = s
        while True:
            if u == t:
                aug = min(cap[a] for a in path)
                total += aug
                for a in path:
                    cap[a] -= aug
                    cap[a ^ 1] += aug
                for idx, a in enumerate(path):
                    if cap[a] == 0:
                        u = net.tail(a)
                        del path[idx:]
                        break
                continue
            advanced = False
            while it[u] < len(net.adj[u]):
                a = net.adj[u][it[u]]
                v = head[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    path.append(a)
                    u = v
                    advanced = True
                    break
                it[u] += 1
            if not advanced:
                if u == s:
                    break
                level[u] = -1
                a = path.pop()
                u = net.tail(a)
                it[u] += 1
    net.solved = True
    X = residual_reachable(net)
    if cut_capacity(net, X) != total:
        raise AssertionError("max-flow/min-cut audit failed")
    return FlowAssignment(net, total)


def residual_reachable(net: FlowNetwork) -> frozenset[int]:
    """Nodes reachable from the source along positive residual capacity."""
    seen = {net.source}
    q = deque([net.source])
    while q:
        u = q.popleft()
        for a in net.adj[u]:
            v = net.head[a]
            if net.cap[a] > 0 and v not in seen:
                seen.add(v)
                q.append(v)
    return frozenset(seen)


def cut_capacity(net: FlowNetwork, X: Iterable[int]) -> int:
    """Capacity of the cut (X, complement); X must contain the source only."""
    X = set(X)
    if net.source not in X or net.sink in X:
        raise ValueError("X must contain the source and not the sink")
    total = 0
    for a in range(len(net.head)):
        if net.cap0[a] > 0 and net.tail(a) in X and net.head[a] not in X:
            total += net.cap0[a]
    return total


def is_saturating(net: FlowNetwork, flow: FlowAssignment) -> bool:
    """True when the flow meets the full source capacity b(A)."""
    return flow.value == net.b_A


def consistent_min_cut(net: FlowNetwork, flow: FlowAssignment) -> SignVector:
    """Sign vector read from the consistency-reduced residual minimum cut.

    Requires a maximum flow that does not saturate.  Takes the source-side
    residual cut, drops both copies of every vertex present twice, and maps
    the surviving plus copies to +1 and minus copies to -1.  Dropping copies
    never increases the cut value, so the reduced cut is still minimum and
    the resulting vector has ratio strictly below 1/k; both facts are
    enforced here.
    """
    if is_saturating(net, flow):
        raise SaturatingFlowError("flow saturates; no cut below b(A) exists")
    X = residual_reachable(net)
    n = net.n_base
    x = [0] * n
    for i in range(n):
        in_plus = i in X
        in_minus = (n + i) in X
        if in_plus and in_minus:
            continue
        if in_plus:
            x[i] = 1
        elif in_minus:
            x[i] = -1
    if not any(x):
        raise AssertionError("consistency reduction emptied a non-saturating cut")
    reduced = {net.source}
    reduced.update(i for i in range(n) if x[i] == 1)
    reduced.update(n + i for i in range(n) if x[i] == -1)
    if cut_capacity(net, reduced) != flow.value:
        raise AssertionError("consistency reduction changed the cut value")
    if net.aux is not None and net.k is not None:
        beta = evaluate_beta(net.aux.base, tuple(x))
        if beta * net.k >= 1:
            raise AssertionError("reduced cut does not beat the ratio guess")
    return tuple(x)


@dataclass(frozen=True)
class FlowPath:
    """One source-to-sink path with an integral multiplicity.

    ``nodes`` lists the doubled-graph nodes in order, terminals excluded, so
    nodes[0] is the entry vertex (source side) and nodes[-1] the exit vertex
    (sink side).  ``middle`` lists the traversed middle edges as
    (base edge id, copy) tags.
    """

    nodes: tuple[int, ...]
    units: int
    middle: tuple[tuple[int, int], ...]


def _positive_flows(net: FlowNetwork) -> dict[int, int]:
    flows: dict[int, int] = {}
    for a in range(0, len(net.head), 2):
        f = net.cap0[a] - net.cap[a]
        if f > 0:
            flows[a] = f
        elif f < 0:
            flows[a ^ 1] = -f
    return flows


def _find_cycle(net: FlowNetwork, flows: dict[int, int]) -> list[int] | None:
    out: dict[int, list[int]] = {}
    for a in sorted(flows):
        out.setdefault(net.tail(a), []).append(a)
    color = {}
    for start in sorted(out):
        if color.get(start):
            continue
        stack = [(start, 0)]
        trail: list[int] = []
        color[start] = 1
        while stack:
            node, idx = stack[-1]
            arcs = out.get(node, ())
            if idx >= len(arcs):
                color[node] = 2
                stack.pop()
                if trail:
                    trail.pop()
                continue
            stack[-1] = (node, idx + 1)
            a = arcs[idx]
            if a not in flows:
                continue
            v = net.head[a]
            c = color.get(v, 0)
            if c == 1:
                cycle = [a]
                for arc in reversed(trail):
                    if net.tail(cycle[-1]) == v:
                        break
                    cycle.append(arc)
                cycle.reverse()
                return cycle
            if c == 0:
                color[v] = 1
                trail.append(a)
                stack.append((v, 0))
    return None


def _cancel_cycles(net: FlowNetwork, flows: dict[int, int]) -> None:
    # Flow cycles carry no source-sink value; strip them so the remaining
    # flow graph is acyclic and walks from the source must reach the sink.
    while True:
        cycle = _find_cycle(net, flows)
        if cycle is None:
            return
        c = min(flows[a] for a in cycle)
        for a in cycle:
            flows[a] -= c
            if flows[a] == 0:
                del flows[a]


def decompose_flow(net: FlowNetwork, flow: FlowAssignment) -> list[FlowPath]:
    """Split a feasible flow into source-to-sink paths with multiplicities.

    Cycles are cancelled first; paths are then peeled greedily, always
    leaving a node along its first-added arc that still carries flow, and
    each peel subtracts the path bottleneck.  Multiplicities sum to the flow
    value and the number of distinct paths is at most the number of
    flow-carrying arcs.
    """
    flows = _positive_flows(net)
    _cancel_cycles(net, flows)
    out: dict[int, list[int]] = {}
    for a in sorted(flows):
        out.setdefault(net.tail(a), []).append(a)
    paths: list[FlowPath] = []
    remaining = flow.value
    while remaining > 0:
        u = net.source
        arcs: list[int] = []
        while u != net.sink:
            nxt = None
            for a in out.get(u, ()):
                if flows.get(a, 0) > 0:
                    nxt = a
                    break
            if nxt is None:
                raise AssertionError("flow walk stalled before the sink")
            arcs.append(nxt)
            u = net.head[nxt]
        units = min(flows[a] for a in arcs)
        for a in arcs:
            flows[a] -= units
            if flows[a] == 0:
                del flows[a]
        nodes = tuple(net.head[a] for a in arcs[:-1])
        middle = []
        for a in arcs[1:-1]:
            tag = net.middle_tag.get(a)
            if tag is None:
                tag = net.middle_tag.get(a ^ 1)
            if tag is not None:
                middle.append(tag)
        paths.append(FlowPath(nodes, units, tuple(middle)))
        remaining -= units
    if flows:
        raise AssertionError("leftover flow after path extraction")
    return paths


class DemandMultigraph:
    """Multiset of vertex pairs recording flow-path endpoints.

    Self-loops (a path entering the plus copy and leaving the minus copy of
    one vertex) are allowed and count twice toward the degree.  The usage
    ledger maps a base edge id to the flow units routed through each of its
    two doubled copies.
    """

    def __init__(self, n: int, pairs: dict[tuple[int, int], int] | None = None,
                 usage: dict[tuple[int, int], int] | None = None):
        self.n = n
        self.pairs: dict[tuple[int, int], int] = dict(pairs or {})
        self.usage: dict[tuple[int, int], int] = dict(usage or {})

    def degree(self, i: int) -> int:
        d = 0
        for (a, b), c in self.pairs.items():
            if a == i:
                d += c
            if b == i:
                d += c
        return d

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for (a, b), c in self.pairs.items():
            d[a] += c
            d[b] += c
        return d

    def total_multiplicity(self) -> int:
        return sum(self.pairs.values())

    def weighted_edges(self) -> Iterator[tuple[int, int, int]]:
        for (a, b) in sorted(self.pairs):
            yield a, b, self.pairs[(a, b)]

    def copy_usage(self, base_edge: int) -> tuple[int, int]:
        return (self.usage.get((base_edge, 0), 0), self.usage.get((base_edge, 1), 0))

    def merge(self, other: "DemandMultigraph") -> "DemandMultigraph":
        if other.n != self.n:
            raise ValueError("demand graphs live on different vertex sets")
        pairs = dict(self.pairs)
        for key, c in other.pairs.items():
            pairs[key] = pairs.get(key, 0) + c
        usage = dict(self.usage)
        for key, c in other.usage.items():
            usage[key] = usage.get(key, 0) + c
        return DemandMultigraph(self.n, pairs, usage)

    @staticmethod
    def union(graphs: Sequence["DemandMultigraph"], n: int | None = None) -> "DemandMultigraph":
        if not graphs:
            if n is None:
                raise ValueError("empty union needs an explicit vertex count")
            return DemandMultigraph(n)
        merged = graphs[0]
        for g in graphs[1:]:
            merged = merged.merge(g)
        return merged

    def __eq__(self, other) -> bool:
        return (isinstance(other, DemandMultigraph) and self.n == other.n
                and self.pairs == other.pairs and self.usage == other.usage)

    def __repr__(self) -> str:
        return f"DemandMultigraph(n={self.n}, pairs={self.pairs!r})"


def demand_graph(paths: Sequence[FlowPath], net: FlowNetwork) -> DemandMultigraph:
    """Demand graph of a path multiset: one parallel edge {i, j} per path unit
    entering at a copy of i and leaving at a copy of j, plus the per-copy
    usage ledger of every traversed middle edge."""
    n = net.n_base
    pairs: dict[tuple[int, int], int] = {}
    usage: dict[tuple[int, int], int] = {}
    for p in paths:
        if not p.nodes:
            raise MalformedPathError("path has no interior nodes")
        entry, exit_ = p.nodes[0], p.nodes[-1]
        if entry not in net.A or exit_ not in net.B:
            raise MalformedPathError(
                f"path endpoints ({entry}, {exit_}) are not a source/sink pair")
        i = entry if entry < n else entry - n
        j = exit_ if exit_ < n else exit_ - n
        key = (i, j) if i <= j else (j, i)
        pairs[key] = pairs.get(key, 0) + p.units
        for tag in p.middle:
            usage[tag] = usage.get(tag, 0) + p.units
    return DemandMultigraph(n, pairs, usage)
