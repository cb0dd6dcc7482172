"""Growing a maximal subgraph whose degrees are all 1 mod k."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

from .colouring import is_ell_k_graph
from .divisible import DivisibleOutcome, Status, find_divisible
from .errors import InvariantError
from .graph import Edge, Graph, edge_key


class Maximality(str, Enum):
    CERTIFIED = "CertifiedMaximal"
    BEST_EFFORT = "BestEffort"


@dataclass(frozen=True)
class OnemodSubgraph:
    edges: Tuple[Edge, ...]
    support: frozenset
    status: Maximality
    final_check: DivisibleOutcome
    rounds: int


def grow_onemod(g: Graph, k: int, divisible_budget: int) -> OnemodSubgraph:
    """Close the empty subgraph under three augmentations, round-robin.

    R1  an unused edge between two vertices outside the support;
    R2  k unused edges from a support vertex to vertices outside the support
        (smallest neighbour ids), when at least k such edges exist;
    R3  a k-divisible subgraph of the unused edges inside the support.

    Each keeps every support degree at 1 mod k. Maximality is certified when
    the last R3 search proves there is nothing left to add.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.vertex_count
    chosen = set()
    hdeg = [0] * n

    def add(batch):
        for u, v in batch:
            e = edge_key(u, v)
            if e in chosen:
                raise InvariantError(f"edge {e} added twice")
            chosen.add(e)
            hdeg[u] += 1
            hdeg[v] += 1
        for u, v in batch:
            if (hdeg[u] - 1) % k or (hdeg[v] - 1) % k:
                raise InvariantError("augmentation broke the 1 mod k degrees")

    rounds = 0
    while True:
        rounds += 1
        size_before = len(chosen)
        for u, v in g.edges:
            if hdeg[u] == 0 and hdeg[v] == 0:
                add([(u, v)])
        for u in range(n):
            while hdeg[u]:
                cross = sorted(w for w in g.adjacency[u] if hdeg[w] == 0)
                if len(cross) < k:
                    break
                add([(u, w) for w in cross[:k]])
        inside = [e for e in g.edges if e not in chosen and hdeg[e[0]] and hdeg[e[1]]]
        last = find_divisible(Graph.from_edges(n, inside), k, divisible_budget)
        if last.status is Status.FOUND:
            add(last.witness)
        if len(chosen) == size_before:
            break
        if rounds > g.edge_count + 1:
            raise InvariantError("augmentation did not terminate")
    edges = tuple(sorted(chosen))
    if not is_ell_k_graph(g, edges, 1, k):
        raise InvariantError("final subgraph is not 1 mod k")
    status = Maximality.CERTIFIED if last.status is Status.ABSENT else Maximality.BEST_EFFORT
    support = frozenset(v for v in range(n) if hdeg[v])
    return OnemodSubgraph(edges, support, status, last, rounds)


@dataclass(frozen=True)
class MaximalityReport:
    outside_independent: bool
    cross_degree_ok: bool
    inside_divisible: DivisibleOutcome

    @property
    def all_hold(self) -> bool:
        return (self.outside_independent and self.cross_degree_ok
                and self.inside_divisible.status is Status.ABSENT)


def check_maximality_properties(g: Graph, edges: Iterable[Edge], k: int, budget: int) -> MaximalityReport:
    """Evaluate the three closure properties of ``edges`` from scratch.

    On the leftover graph (all edges not in ``edges``): vertices outside the
    support are independent; each support vertex has at most k - 1 leftover
    neighbours outside the support; the leftover edges inside the support hold
    no k-divisible subgraph.
    """
    h = {edge_key(u, v) for u, v in edges}
    for e in h:
        if not g.has_edge(*e):
            raise ValueError(f"edge {e} is not in the graph")
    support = {x for e in h for x in e}
    rest = [e for e in g.edges if e not in h]
    outside_independent = not any(u not in support and v not in support for u, v in rest)
    cross = {}
    for u, v in rest:
        if (u in support) != (v in support):
            s = u if u in support else v
            cross[s] = cross.get(s, 0) + 1
    cross_ok = all(c <= k - 1 for c in cross.values())
    inside = [e for e in rest if e[0] in support and e[1] in support]
    outcome = find_divisible(Graph.from_edges(g.vertex_count, inside), k, budget)
    return MaximalityReport(outside_independent, cross_ok, outcome)
