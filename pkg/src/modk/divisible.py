"""k-divisible subgraphs: budgeted search, vertex splitting, regular subgraphs, and q(k)."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .colouring import is_ell_k_graph
from .errors import InvariantError
from .graph import Edge, Graph, edge_key


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(k: int) -> int:
    """Smallest prime >= k."""
    if k < 1:
        raise ValueError("k must be positive")
    q = max(k, 2)
    while not is_prime(q):
        q += 1
    return q


def divisor_prime(k: int) -> int:
    """The prime whose divisible subgraphs are split down to k-divisible ones."""
    return next_prime(3 * k // 2) if k % 2 == 0 else next_prime(k)


def density_bound(k: int, n: int) -> int:
    """Edge count above which an n-vertex graph must contain a k-divisible subgraph."""
    if k < 2:
        raise ValueError("k must be at least 2")
    return (divisor_prime(k) - 1) * n


def asymptotic_report(cap: int) -> List[dict]:
    """``q(k)`` against ``k + k**0.6`` for k = 2..cap; a record, not an assertion."""
    rows = []
    for k in range(2, cap + 1):
        q = next_prime(k)
        rows.append({"k": k, "q": q, "limit": k + k ** 0.6, "holds": q <= k + k ** 0.6})
    return rows


# --- search -------------------------------------------------------------------

class Status(str, Enum):
    FOUND = "Found"
    ABSENT = "CertifiedAbsent"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class DivisibleOutcome:
    status: Status
    witness: Tuple[Edge, ...] = ()
    nodes_explored: int = 0
    route: str = "search"

    def to_dict(self, g: Optional[Graph] = None) -> dict:
        name = (lambda v: g.labels[v]) if g is not None else (lambda v: v)
        return {
            "status": self.status.value,
            "route": self.route,
            "nodes_explored": self.nodes_explored,
            "witness": [[name(u), name(v)] for u, v in self.witness],
        }


def find_cycle(g: Graph) -> Optional[List[Edge]]:
    """Edges of some cycle, or None for a forest.

    Union-find over edges in sorted order; the first edge joining two already
    connected vertices closes the cycle, completed by the forest path between
    its ends.
    """
    parent = list(range(g.vertex_count))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    forest: Dict[int, List[int]] = {v: [] for v in range(g.vertex_count)}
    for u, v in g.edges:
        ru, rv = root(u), root(v)
        if ru != rv:
            parent[ru] = rv
            forest[u].append(v)
            forest[v].append(u)
            continue
        prev = {u: None}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == v:
                break
            for w in forest[x]:
                if w not in prev:
                    prev[w] = x
                    stack.append(w)
        cyc = [edge_key(u, v)]
        x = v
        while prev[x] is not None:
            cyc.append(edge_key(x, prev[x]))
            x = prev[x]
        return sorted(cyc)
    return None


def core_edges(g: Graph, k: int) -> List[Edge]:
    """Edges of the k-core: the only place a non-empty k-divisible subgraph can live."""
    deg = [g.degree(v) for v in range(g.vertex_count)]
    alive = [True] * g.vertex_count
    stack = [v for v in range(g.vertex_count) if deg[v] < k]
    for v in stack:
        alive[v] = False
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < k:
                    alive[w] = False
                    stack.append(w)
    return [(u, v) for u, v in g.edges if alive[u] and alive[v]]


def _search(g: Graph, edges: Sequence[Edge], k: int, exact: bool, budget: int):
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    status, chosen, nodes = kernels.subgraph_search(eu, ev, g.vertex_count, k, exact, budget)
    witness = tuple(e for e, c in zip(edges, chosen) if c)
    return int(status), witness, int(nodes)


def find_divisible(g: Graph, k: int, budget: int) -> DivisibleOutcome:
    """Look for a non-empty subgraph with every degree divisible by k.

    Forests never have one. For k = 2 any cycle is one. Otherwise the search
    runs on the k-core and is exhaustive unless ``budget`` nodes run out.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        if g.edge_count == 0:
            return DivisibleOutcome(Status.ABSENT, route="edgeless")
        return _checked(g, DivisibleOutcome(Status.FOUND, g.edges[:1], 0, "single-edge"), k)
    cyc = find_cycle(g)
    if cyc is None:
        return DivisibleOutcome(Status.ABSENT, route="forest")
    if k == 2:
        return _checked(g, DivisibleOutcome(Status.FOUND, tuple(cyc), 0, "cycle"), k)
    edges = core_edges(g, k)
    if not edges:
        return DivisibleOutcome(Status.ABSENT, route="core")
    status, witness, nodes = _search(g, edges, k, False, budget)
    if status == kernels.FOUND:
        return _checked(g, DivisibleOutcome(Status.FOUND, witness, nodes), k)
    if status == kernels.EXHAUSTED:
        return DivisibleOutcome(Status.ABSENT, (), nodes)
    return DivisibleOutcome(Status.BUDGET_EXHAUSTED, (), nodes)


def _checked(g: Graph, out: DivisibleOutcome, k: int) -> DivisibleOutcome:
    if not out.witness or not is_ell_k_graph(g, out.witness, 0, k):
        raise InvariantError(f"witness from route {out.route!r} is not {k}-divisible")
    return out


# --- splitting and regular subgraphs ------------------------------------------

@dataclass(frozen=True)
class SplitMap:
    """``split_graph`` vertex ``s`` stands for original vertex ``forward[s]``."""

    forward: Tuple[int, ...]
    split_graph: Graph

    def merge(self, edges) -> Tuple[Edge, ...]:
        return tuple(sorted(edge_key(self.forward[a], self.forward[b]) for a, b in edges))


def split_to_regular(g: Graph, q: int) -> SplitMap:
    """Split each vertex of degree l*q into l vertices of degree q.

    Neighbours are grouped q at a time in ascending id order. Vertices of
    degree 0 disappear.
    """
    if q < 1:
        raise ValueError("q must be positive")
    for v in range(g.vertex_count):
        if g.degree(v) % q:
            raise ValueError(f"vertex {v} has degree {g.degree(v)}, not a multiple of {q}")
    forward = []
    first = {}
    group = {}  # (v, neighbour) -> split id of v's copy holding that edge
    for v in range(g.vertex_count):
        first[v] = len(forward)
        for j, w in enumerate(sorted(g.adjacency[v])):
            group[v, w] = first[v] + j // q
        forward.extend([v] * (g.degree(v) // q))
    edges = [(group[u, v], group[v, u]) for u, v in g.edges]
    labels = []
    for s, v in enumerate(forward):
        labels.append(f"{g.labels[v]}#{s - first[v]}")
    split = Graph.from_edges(len(forward), edges, labels)
    if any(split.degree(s) != q for s in range(split.vertex_count)):
        raise InvariantError("split graph is not regular")
    return SplitMap(tuple(forward), split)


def find_regular_subgraph(g: Graph, k: int, budget: int) -> DivisibleOutcome:
    """Non-empty edge set in which every touched vertex has degree exactly k.

    ``g`` must be regular. When the degree r and k satisfy the known existence
    conditions (r odd and k odd below r, or r odd and 2 <= k <= 2r/3) a full
    search cannot fail, so only ``BudgetExhausted`` can come back empty.
    """
    degs = {g.degree(v) for v in range(g.vertex_count)}
    if len(degs) > 1:
        raise ValueError("graph is not regular")
    if k < 1:
        raise ValueError("k must be positive")
    status, witness, nodes = _search(g, list(g.edges), k, True, budget)
    if status == kernels.FOUND:
        return DivisibleOutcome(Status.FOUND, witness, nodes, "regular")
    if status == kernels.EXHAUSTED:
        return DivisibleOutcome(Status.ABSENT, (), nodes, "regular")
    return DivisibleOutcome(Status.BUDGET_EXHAUSTED, (), nodes, "regular")


def regular_subgraph_guaranteed(r: int, k: int) -> bool:
    if k == r:
        return r > 0
    if r % 2 == 0:
        return False
    if k % 2:
        return 0 < k < r
    return 2 <= k and 3 * k <= 2 * r


def find_divisible_via_regular(g: Graph, k: int, budget: int) -> DivisibleOutcome:
    """k-divisible subgraph through a q-divisible one, with q the divisor prime.

    Find a q-divisible subgraph, split it into a q-regular graph, take a
    k-regular subgraph there, and merge the copies back. When the graph has no
    q-divisible subgraph at all, fall back to the direct search for k.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    q = divisor_prime(k)
    stage1 = find_divisible(g, q, budget)
    if stage1.status is Status.BUDGET_EXHAUSTED:
        return stage1
    if stage1.status is Status.ABSENT:
        direct = find_divisible(g, k, budget)
        return DivisibleOutcome(direct.status, direct.witness,
                                stage1.nodes_explored + direct.nodes_explored, "direct:" + direct.route)
    split = split_to_regular(g.edge_subgraph(stage1.witness), q)
    stage3 = find_regular_subgraph(split.split_graph, k, budget)
    nodes = stage1.nodes_explored + stage3.nodes_explored
    if stage3.status is not Status.FOUND:
        if stage3.status is Status.ABSENT and regular_subgraph_guaranteed(q, k):
            raise InvariantError(f"{q}-regular graph without a {k}-regular subgraph")
        return DivisibleOutcome(stage3.status, (), nodes, "regular")
    return _checked(g, DivisibleOutcome(Status.FOUND, split.merge(stage3.witness), nodes, "regular"), k)
