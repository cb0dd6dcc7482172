"""Shared brute-force oracles and strategies.

The oracles here never call into the package's search code; they enumerate.
"""
import itertools
from collections import Counter

import pytest
from hypothesis import settings, strategies as st

from modk.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


def record_acceptance(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
                            + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=0, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, keep) if b])


def class_degrees(assignment):
    deg = Counter()
    for (u, v), c in assignment.items():
        deg[c, u] += 1
        deg[c, v] += 1
    return deg


def naive_valid(g, assignment, k):
    if set(assignment) != set(g.edges):
        return False
    return all((d - 1) % k == 0 for d in class_degrees(assignment).values())


def brute_chi(g, k, max_colours=8):
    """Smallest palette admitting a valid colouring, by full enumeration."""
    edges = list(g.edges)
    if not edges:
        return 0
    for c in range(1, max_colours + 1):
        for combo in itertools.product(range(1, c + 1), repeat=len(edges)):
            if naive_valid(g, dict(zip(edges, combo)), k):
                return c
    return None


def brute_degeneracy(g):
    best = None
    for perm in itertools.permutations(range(g.vertex_count)):
        seen, worst = set(), 0
        for v in perm:
            worst = max(worst, len(g.adjacency[v] & seen))
            seen.add(v)
        best = worst if best is None else min(best, worst)
    return best or 0


def edge_subsets(edges, nonempty=True):
    for r in range(1 if nonempty else 0, len(edges) + 1):
        yield from itertools.combinations(edges, r)


def degree_counter(edges):
    deg = Counter()
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def brute_has_divisible(g, k):
    return any(all(d % k == 0 for d in degree_counter(s).values()) for s in edge_subsets(g.edges))


def brute_regular_subgraphs(g, k):
    return [s for s in edge_subsets(g.edges) if all(d == k for d in degree_counter(s).values())]


def brute_max_matching(adjacency):
    """Maximum matching size by trying every injective partial assignment."""
    xs = sorted(adjacency)
    best = 0
    for r in range(len(xs), 0, -1):
        for subset in itertools.combinations(xs, r):
            for choice in itertools.product(*(sorted(adjacency[x]) for x in subset)):
                if len(set(choice)) == r:
                    return r
    return best


@pytest.fixture
def k3():
    from modk.graph import complete
    return complete(3)
