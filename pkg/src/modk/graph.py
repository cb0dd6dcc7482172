"""Simple undirected graphs: representation, text formats, degeneracy, generators."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .errors import ParseError

Edge = Tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph on the dense vertex ids ``0..vertex_count-1``.

    ``labels[v]`` is the external name of vertex ``v``; it defaults to ``str(v)``.
    """

    vertex_count: int
    adjacency: Tuple[frozenset, ...]
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        if len(self.adjacency) != n:
            raise ValueError("adjacency must have one entry per vertex")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v) for v in range(n)))
        elif len(self.labels) != n:
            raise ValueError("labels must have one entry per vertex")
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for w in nbrs:
                if not 0 <= w < n or u not in self.adjacency[w]:
                    raise ValueError(f"adjacency is not symmetric at {u}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels: Sequence[str] = ()) -> "Graph":
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj), tuple(labels))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count == other.vertex_count
                and self.adjacency == other.adjacency
                and self.labels == other.labels)

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return tuple(sorted((u, w) for u, nbrs in enumerate(self.adjacency) for w in nbrs if u < w))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.vertex_count)

    def neighbours(self, v: int) -> frozenset:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def index_of(self, label: str) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertex set and labels, keeping only ``edges`` (which must exist in self)."""
        edges = list(edges)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise ValueError(f"edge {u}-{v} is not in the graph")
        return Graph.from_edges(self.vertex_count, edges, self.labels)

    def without_edges(self, edges: Iterable[Edge]) -> "Graph":
        drop = {edge_key(u, v) for u, v in edges}
        return Graph.from_edges(self.vertex_count, (e for e in self.edges if e not in drop), self.labels)

    def csr(self):
        """``(indptr, indices)`` int64 arrays with sorted neighbour lists."""
        indptr = np.zeros(self.vertex_count + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(self.degrees())
        indices = np.fromiter((w for nbrs in self.adjacency for w in sorted(nbrs)),
                              dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices


# --- text formats -------------------------------------------------------------

def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse edge-list or DIMACS text.

    Edge-list lines hold two whitespace-separated labels; a line with a single
    label declares an isolated vertex; ``#`` starts a comment. Labels map to ids
    in order of first appearance. Duplicate edges collapse to one.
    """
    if format == "edgelist":
        return _parse_edgelist(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def _parse_edgelist(text):
    ids = {}
    labels = []
    edges = set()

    def vid(label):
        if label not in ids:
            ids[label] = len(labels)
            labels.append(label)
        return ids[label]

    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            vid(tokens[0])
        elif len(tokens) == 2:
            a, b = tokens
            if a == b:
                raise ParseError(f"self-loop on {a!r}", lineno)
            edges.add(edge_key(vid(a), vid(b)))
        else:
            raise ParseError(f"expected 'u v', got {len(tokens)} tokens", lineno)
    return Graph.from_edges(len(labels), edges, labels)


def _parse_dimacs(text):
    n = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        try:
            if kind == "p":
                if n is not None:
                    raise ParseError("repeated 'p' line", lineno)
                if len(tokens) != 4:
                    raise ParseError("expected 'p edge <n> <m>'", lineno)
                n = int(tokens[2])
                if n < 0:
                    raise ParseError("negative vertex count", lineno)
            elif kind == "e":
                if n is None:
                    raise ParseError("'e' line before 'p' line", lineno)
                if len(tokens) != 3:
                    raise ParseError("expected 'e <u> <v>'", lineno)
                u, v = int(tokens[1]), int(tokens[2])
                if not (1 <= u <= n and 1 <= v <= n):
                    raise ParseError(f"vertex out of range 1..{n}", lineno)
                if u == v:
                    raise ParseError(f"self-loop on {u}", lineno)
                edges.add(edge_key(u - 1, v - 1))
            else:
                raise ParseError(f"unknown line type {kind!r}", lineno)
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"not an integer: {exc}", lineno) from None
    if n is None:
        raise ParseError("missing 'p' line")
    return Graph.from_edges(n, edges, [str(i) for i in range(1, n + 1)])


def serialize(g: Graph, format: str = "edgelist") -> str:
    """Deterministic text for ``g``; edges in id order, isolated vertices last."""
    if format == "edgelist":
        lines = [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges]
        lines += [g.labels[v] for v in range(g.vertex_count) if not g.adjacency[v]]
    elif format == "dimacs":
        lines = [f"p edge {g.vertex_count} {g.edge_count}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return "".join(line + "\n" for line in lines)


# --- degeneracy ---------------------------------------------------------------

@dataclass(frozen=True)
class DegeneracyOrder:
    """``order[i]`` has at most ``degeneracy`` neighbours among ``order[:i]``."""

    order: Tuple[int, ...]
    degeneracy: int

    @cached_property
    def position(self):
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos


def degeneracy_order(g: Graph) -> DegeneracyOrder:
    if g.vertex_count == 0:
        return DegeneracyOrder((), 0)
    removal, degeneracy = kernels.peel_order(*g.csr())
    return DegeneracyOrder(tuple(int(v) for v in removal[::-1]), int(degeneracy))


def back_degrees(g: Graph, order: Sequence[int]):
    seen = set()
    out = []
    for v in order:
        out.append(len(g.adjacency[v] & seen))
        seen.add(v)
    return out


# --- generators ---------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph.from_edges(n, ())


def star(m: int) -> Graph:
    """K_{1,m}; the centre is vertex 0."""
    return Graph.from_edges(m + 1, ((0, i) for i in range(1, m + 1)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_multipartite(*parts: int) -> Graph:
    owner = [p for p, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v]))


def complete_tripartite(a: int, b: int, c: int) -> Graph:
    return complete_multipartite(a, b, c)


def perfect_matching(n: int) -> Graph:
    if n % 2:
        raise ValueError("a perfect matching needs an even vertex count")
    return Graph.from_edges(n, ((i, i + 1) for i in range(0, n, 2)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) drawn with numpy's PCG64 seeded by ``seed``.

    Pairs ``u < v`` are visited in row-major order, one uniform draw each.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n, 1)
    keep = rng.random(us.shape[0]) < p
    return Graph.from_edges(n, zip(us[keep].tolist(), vs[keep].tolist()))


FAMILIES = {
    "star": (star, (int,)),
    "complete": (complete, (int,)),
    "cycle": (cycle, (int,)),
    "path": (path, (int,)),
    "empty": (empty, (int,)),
    "matching": (perfect_matching, (int,)),
    "tripartite": (complete_tripartite, (int, int, int)),
    "petersen": (petersen, ()),
    "gnp": (gnp, (int, float)),
}

_SPEC = re.compile(r"^\s*([a-z]+)\s*(?:[:(]\s*([^)]*?)\s*\)?)?\s*$")


def generate(spec: str, seed: Optional[int] = None) -> Graph:
    """Build a graph from a family spec such as ``star:3``, ``tripartite(1,2,2)``
    or ``gnp:20,0.3`` (gnp takes its seed from ``seed``, default 0)."""
    m = _SPEC.match(spec)
    if not m or m.group(1) not in FAMILIES:
        raise ValueError(f"unknown generator spec {spec!r}; families: {', '.join(FAMILIES)}")
    fn, types = FAMILIES[m.group(1)]
    raw = [t for t in re.split(r"[,\s]+", m.group(2) or "") if t]
    if len(raw) != len(types):
        raise ValueError(f"{m.group(1)} takes {len(types)} parameter(s), got {len(raw)}")
    args = [t(x) for t, x in zip(types, raw)]
    if fn is gnp:
        args.append(0 if seed is None else seed)
    if any(isinstance(x, int) and x < 0 for x in args):
        raise ValueError("generator parameters must be non-negative")
    return fn(*args)
