"""Edge colourings, the mod-k validity check, and the exact chromatic-index oracle."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Mapping, Optional

import numpy as np

from . import kernels
from .graph import Edge, Graph, edge_key


@dataclass(frozen=True)
class EdgeColouring:
    """Colour ids ``1..palette_size`` on edges ``(u, v)`` with ``u < v``."""

    palette_size: int
    assignment: Mapping[Edge, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.palette_size < 0:
            raise ValueError("palette_size must be non-negative")
        for e, c in self.assignment.items():
            if e[0] >= e[1]:
                raise ValueError(f"edge {e} is not normalised as (u, v) with u < v")
            if not 1 <= c <= self.palette_size:
                raise ValueError(f"colour {c} on {e} outside palette 1..{self.palette_size}")

    @property
    def colours_used(self) -> int:
        return len(set(self.assignment.values()))

    def classes(self) -> Dict[int, List[Edge]]:
        out = defaultdict(list)
        for e, c in sorted(self.assignment.items()):
            out[c].append(e)
        return dict(out)

    def colour_of(self, u: int, v: int) -> int:
        return self.assignment[edge_key(u, v)]


@dataclass(frozen=True, order=True)
class Violation:
    colour: int
    vertex: int
    degree_in_class: int


class ColouringMismatch(ValueError):
    """The colouring does not cover exactly the edges of the graph."""


def _residue_ok(degree: int, ell: int, k: int) -> bool:
    return (degree - ell) % k == 0


def verify(g: Graph, c: EdgeColouring, k: int) -> List[Violation]:
    """Every (colour, vertex) whose non-zero class degree is not 1 mod k, sorted."""
    if k < 1:
        raise ValueError("k must be positive")
    coloured = set(c.assignment)
    extra = sorted(coloured.difference(g.edges))
    if extra:
        raise ColouringMismatch(f"coloured edge {extra[0]} is not in the graph")
    missing = [e for e in g.edges if e not in coloured]
    if missing:
        raise ColouringMismatch(f"edge {missing[0]} is uncoloured")
    deg = Counter()
    for (u, v), col in c.assignment.items():
        deg[col, u] += 1
        deg[col, v] += 1
    return sorted(Violation(col, v, d) for (col, v), d in deg.items() if not _residue_ok(d, 1, k))


def is_ell_k_graph(g: Graph, edges: Iterable[Edge], ell: int, k: int) -> bool:
    """True iff every vertex touched by ``edges`` has degree = ell (mod k) in them.

    With ``ell == 0`` this is the k-divisibility test.
    """
    deg = Counter()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise ValueError(f"edge {u}-{v} is not in the graph")
        deg[u] += 1
        deg[v] += 1
    return all(_residue_ok(d, ell, k) for d in deg.values())


# --- exact oracle -------------------------------------------------------------

class ExactStatus(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND_ONLY = "LowerBoundOnly"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class ExactResult:
    """Outcome of :func:`exact_chi`.

    ``EXACT``: ``value`` colours suffice (``witness``) and every smaller palette
    was refuted. ``LOWER_BOUND_ONLY``: every palette below ``value`` was refuted
    but ``value`` itself was not settled (palette cap or budget).
    ``BUDGET_EXHAUSTED``: not even the first palette was settled.
    """

    status: ExactStatus
    value: Optional[int]
    witness: Optional[EdgeColouring]
    nodes: int


def search_order(g: Graph) -> List[Edge]:
    # edges of high-degree vertices first so those vertices close early
    rank = sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))
    pos = {v: i for i, v in enumerate(rank)}
    return sorted(g.edges, key=lambda e: tuple(sorted((pos[e[0]], pos[e[1]]))))


def exact_chi(g: Graph, k: int, max_colours: int, node_budget: int) -> ExactResult:
    """Mod-k chromatic index by exhaustive backtracking, for small graphs.

    Palettes ``1, 2, ...`` are tried in turn; ``node_budget`` bounds the total
    number of assignments across all palettes.
    """
    if max_colours < 1:
        raise ValueError("max_colours must be at least 1")
    if k < 1:
        raise ValueError("k must be positive")
    if g.edge_count == 0:
        return ExactResult(ExactStatus.EXACT, 0, EdgeColouring(0, {}), 0)
    edges = search_order(g)
    eu = np.array([e[0] for e in edges], dtype=np.int64)
    ev = np.array([e[1] for e in edges], dtype=np.int64)
    nodes = 0
    for ncol in range(1, max_colours + 1):
        status, colour, used = kernels.colour_search(eu, ev, g.vertex_count, k, ncol, node_budget - nodes)
        nodes += int(used)
        if status == kernels.FOUND:
            witness = EdgeColouring(ncol, {e: int(c) for e, c in zip(edges, colour)})
            return ExactResult(ExactStatus.EXACT, ncol, witness, nodes)
        if status == kernels.OUT_OF_BUDGET:
            if ncol == 1:
                return ExactResult(ExactStatus.BUDGET_EXHAUSTED, None, None, nodes)
            return ExactResult(ExactStatus.LOWER_BOUND_ONLY, ncol, None, nodes)
    return ExactResult(ExactStatus.LOWER_BOUND_ONLY, max_colours + 1, None, nodes)


# --- JSON ---------------------------------------------------------------------

def colouring_to_dict(g: Graph, c: EdgeColouring, k: int, seed=None, certificate=None) -> dict:
    out = {
        "k": k,
        "palette_size": c.palette_size,
        "edges": [{"u": g.labels[u], "v": g.labels[v], "colour": col}
                  for (u, v), col in sorted(c.assignment.items())],
    }
    if seed is not None:
        out["seed"] = seed
    if certificate is not None:
        out["certificate"] = certificate
    return out


def colouring_from_dict(g: Graph, data: Mapping) -> EdgeColouring:
    try:
        assignment = {}
        for item in data["edges"]:
            u, v = g.index_of(str(item["u"])), g.index_of(str(item["v"]))
            assignment[edge_key(u, v)] = int(item["colour"])
        return EdgeColouring(int(data["palette_size"]), assignment)
    except KeyError as exc:
        raise ValueError(f"colouring refers to unknown key or label {exc}") from None
