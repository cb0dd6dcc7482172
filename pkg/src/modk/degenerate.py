"""Mod-k colouring of degenerate graphs, one vertex at a time along a degeneracy order."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Dict, Mapping, Optional, Sequence

from .colouring import EdgeColouring
from .errors import InvariantError
from .graph import Edge, Graph, degeneracy_order, edge_key
from .starcover import StarCoverInstance, StarKind, carve, palette_size

__all__ = ["palette_size", "operative_d", "default_a", "PaletteState",
           "colour_degenerate", "step_invariant_check"]


def operative_d(degeneracy: int) -> int:
    """The palette parameter d for a graph of the given degeneracy (d + 1 = degeneracy)."""
    return max(degeneracy - 1, 0)


def default_a(d: int) -> int:
    return max(1, isqrt(d))


@dataclass
class PaletteState:
    """Mutable bookkeeping of a run: the order, the step reached, and colours seen per vertex."""

    palette_size: int
    order: Sequence[int]
    used: Dict[int, set]
    step: int = 0


def step_invariant_check(state: PaletteState, g: Graph, partial: Mapping[Edge, int], k: int, i: int) -> bool:
    """Check the invariant that holds at the start of step ``i`` (0-based).

    Exactly the edges touching ``order[:i]`` are coloured; at those vertices
    every colour class has degree 1 mod k; at every later vertex the coloured
    edges carry distinct colours, matching ``state.used``.
    """
    done = set(state.order[:i])
    expected = {e for e in g.edges if e[0] in done or e[1] in done}
    if set(partial) != expected:
        return False
    per_vertex: Dict[int, Dict[int, int]] = {}
    for (u, v), c in partial.items():
        for x in (u, v):
            slot = per_vertex.setdefault(x, {})
            slot[c] = slot.get(c, 0) + 1
    for x, counts in per_vertex.items():
        if x in done:
            if any((deg - 1) % k for deg in counts.values()):
                return False
        elif any(deg > 1 for deg in counts.values()):
            return False
    for x in state.order[i:]:
        if set(per_vertex.get(x, {})) != set(state.used.get(x, ())):
            return False
    return True


def colour_degenerate(g: Graph, k: int, a: Optional[int] = None, first_colour: int = 1,
                      check_invariant: bool = False) -> EdgeColouring:
    """Colour ``g`` with at most ``palette_size(d, k, a)`` colours, d + 1 = degeneracy.

    Colours are ``first_colour .. first_colour + palette - 1``. At each vertex
    the edges to later neighbours are coloured by a star cover: colours already
    at the vertex get a multiple of k new edges, other colours 1 mod k, and a
    neighbour only takes a colour it does not carry yet.
    """
    if k < 1:
        raise ValueError("k must be positive")
    order = degeneracy_order(g)
    d = operative_d(order.degeneracy)
    if a is None:
        a = default_a(d)
    if a < 1:
        raise ValueError("a must be positive")
    size = palette_size(d, k, a)
    palette = range(first_colour, first_colour + size)
    pos = order.position
    state = PaletteState(size, order.order, {v: set() for v in range(g.vertex_count)})
    assignment: Dict[Edge, int] = {}

    for i, v in enumerate(order.order):
        state.step = i
        if check_invariant and not step_invariant_check(state, g, assignment, k, i):
            raise InvariantError(f"colouring invariant broken before step {i}")
        later = sorted(w for w in g.adjacency[v] if pos[w] > i)
        if not later:
            continue
        held = state.used[v]
        inst = StarCoverInstance(
            held=tuple(sorted(held)),
            fresh=tuple(c for c in palette if c not in held),
            targets=tuple(later),
            available={x: frozenset(c for c in palette if c not in state.used[x]) for x in later},
            k=k, d=d, a=a,
        )
        problems = inst.feasibility_problems()
        if problems:
            raise InvariantError(f"step {i} at vertex {v}: " + "; ".join(problems))
        held_before = set(inst.held)
        for star in carve(inst).stars:
            if (star.kind is StarKind.ZERO) != (star.centre in held_before):
                raise InvariantError(f"star kind mismatch at colour {star.centre}")
            for x in star.leaves:
                assignment[edge_key(v, x)] = star.centre
                state.used[x].add(star.centre)
            held.add(star.centre)
    if check_invariant and not step_invariant_check(state, g, assignment, k, len(order.order)):
        raise InvariantError("colouring invariant broken at the end")
    top = first_colour + size - 1 if size else 0
    return EdgeColouring(top, assignment)
