"""Integer search kernels.

Every function here takes flat int64 arrays so it can be compiled by numba;
see :mod:`modk._numba_utils` for the uncompiled fallback. Status codes are
shared by the search kernels:

    1   a solution was found
    0   the search space was exhausted without a solution
   -1   the node budget ran out first
"""
import numpy as np

from ._numba_utils import njit

FOUND = 1
EXHAUSTED = 0
OUT_OF_BUDGET = -1


@njit
def peel_order(indptr, indices):
    """Repeated minimum-degree removal, smallest id first on ties.

    Returns ``(removal_order, degeneracy)``; the degeneracy is the largest
    degree seen at removal time.
    """
    n = indptr.shape[0] - 1
    deg = (indptr[1:] - indptr[:-1]).astype(np.int64)
    removed = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    big = n + 1
    degeneracy = 0
    for step in range(n):
        best = int(np.argmin(np.where(removed, big, deg)))
        order[step] = best
        removed[best] = True
        if deg[best] > degeneracy:
            degeneracy = deg[best]
        for j in range(indptr[best], indptr[best + 1]):
            w = indices[j]
            if not removed[w]:
                deg[w] -= 1
    return order, degeneracy


@njit
def _class_deficit(cdeg, x, k, ncol):
    # edges still needed at x so that every non-empty class has degree = 1 mod k
    need = 0
    for c in range(1, ncol + 1):
        d = cdeg[x, c]
        if d > 0:
            need += ((1 - d) % k + k) % k
    return need


@njit
def colour_search(eu, ev, n, k, ncol, budget):
    """Backtracking search for a mod-k colouring with at most ``ncol`` colours.

    Edges are assigned in the given order. An edge may open colour ``c + 1``
    only when colours ``1..c`` are already in use. A partial assignment is
    cut when some endpoint needs more edges to fix its class residues than it
    has uncoloured edges left.

    Returns ``(status, colour, nodes)`` where ``colour[i]`` is in ``1..ncol``.
    """
    m = eu.shape[0]
    colour = np.zeros(m, dtype=np.int64)
    cdeg = np.zeros((n, ncol + 1), dtype=np.int64)
    rem = np.zeros(n, dtype=np.int64)
    for i in range(m):
        rem[eu[i]] += 1
        rem[ev[i]] += 1
    opened = np.zeros(m + 1, dtype=np.int64)
    nodes = 0
    i = 0
    while i >= 0:
        if i == m:
            return FOUND, colour, nodes
        u = eu[i]
        v = ev[i]
        c = colour[i]
        if c > 0:
            cdeg[u, c] -= 1
            cdeg[v, c] -= 1
            rem[u] += 1
            rem[v] += 1
        limit = opened[i] + 1
        if limit > ncol:
            limit = ncol
        c += 1
        placed = False
        while c <= limit:
            nodes += 1
            if nodes > budget:
                return OUT_OF_BUDGET, colour, nodes
            cdeg[u, c] += 1
            cdeg[v, c] += 1
            rem[u] -= 1
            rem[v] -= 1
            if (_class_deficit(cdeg, u, k, ncol) <= rem[u]
                    and _class_deficit(cdeg, v, k, ncol) <= rem[v]):
                colour[i] = c
                opened[i + 1] = opened[i] if opened[i] >= c else c
                placed = True
                break
            cdeg[u, c] -= 1
            cdeg[v, c] -= 1
            rem[u] += 1
            rem[v] += 1
            c += 1
        if placed:
            i += 1
        else:
            colour[i] = 0
            i -= 1
    return EXHAUSTED, colour, nodes


@njit
def _degree_ok(c, r, k, exact):
    # can a vertex with current degree c and r undecided edges still finish?
    if exact:
        if c > k:
            return False
        return c == 0 or c + r >= k
    short = c % k
    return short == 0 or k - short <= r


@njit
def subgraph_search(eu, ev, n, k, exact, budget):
    """Find a non-empty edge subset with constrained degrees.

    With ``exact`` false every vertex degree in the subset must be 0 mod k
    (a k-divisible subgraph); with ``exact`` true every degree must be 0 or
    exactly k (a k-regular subgraph on its support). Edges are tried
    include-first in the given order.

    Returns ``(status, chosen, nodes)`` with ``chosen[i] == 1`` for edges in
    the subset.
    """
    m = eu.shape[0]
    choice = np.zeros(m, dtype=np.int64)
    deg = np.zeros(n, dtype=np.int64)
    rem = np.zeros(n, dtype=np.int64)
    for i in range(m):
        rem[eu[i]] += 1
        rem[ev[i]] += 1
    count = 0
    nodes = 0
    i = 0
    while i >= 0:
        if i == m:
            if count > 0:
                chosen = np.zeros(m, dtype=np.int64)
                for j in range(m):
                    if choice[j] == 1:
                        chosen[j] = 1
                return FOUND, chosen, nodes
            i -= 1
            continue
        u = eu[i]
        v = ev[i]
        ch = choice[i]
        if ch == 0:
            rem[u] -= 1
            rem[v] -= 1
            nxt = 1
        elif ch == 1:
            deg[u] -= 1
            deg[v] -= 1
            count -= 1
            nxt = 2
        else:
            rem[u] += 1
            rem[v] += 1
            choice[i] = 0
            i -= 1
            continue
        advanced = False
        while nxt <= 2:
            nodes += 1
            if nodes > budget:
                return OUT_OF_BUDGET, np.zeros(m, dtype=np.int64), nodes
            if nxt == 1:
                deg[u] += 1
                deg[v] += 1
                count += 1
            if (_degree_ok(deg[u], rem[u], k, exact)
                    and _degree_ok(deg[v], rem[v], k, exact)):
                choice[i] = nxt
                advanced = True
                break
            if nxt == 1:
                deg[u] -= 1
                deg[v] -= 1
                count -= 1
            nxt += 1
        if advanced:
            i += 1
        else:
            rem[u] += 1
            rem[v] += 1
            choice[i] = 0
            i -= 1
    return EXHAUSTED, np.zeros(m, dtype=np.int64), nodes

