"""End-to-end colouring: maximal 1 mod k class, then the degenerate remainder."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import List, Optional, Tuple

from .colouring import EdgeColouring, verify
from .degenerate import colour_degenerate, default_a, operative_d, palette_size
from .divisible import divisor_prime
from .errors import InvariantError
from .graph import Graph, degeneracy_order
from .onemod import Maximality, grow_onemod

DEFAULT_DIVISIBLE_BUDGET = 200_000


def theoretical_degeneracy(k: int) -> int:
    """Degeneracy guaranteed for the leftover graph once the first class is maximal."""
    return 2 * divisor_prime(k) + k - 3


def theorem_bound(k: int) -> int:
    """Closed-form colour bound for every graph: one class plus the degenerate palette."""
    if k < 2:
        raise ValueError("k must be at least 2")
    d = theoretical_degeneracy(k) - 1
    return 1 + palette_size(d, k, default_a(d))


def bound_trend(cap: int) -> List[dict]:
    """theorem_bound(k) / k for k = 2..cap (the linear constant is 7 for odd k, 9 for even)."""
    return [{"k": k, "bound": theorem_bound(k), "ratio": theorem_bound(k) / k} for k in range(2, cap + 1)]


@dataclass(frozen=True)
class BoundCertificate:
    k: int
    parity: str
    theoretical_degeneracy: int
    measured_degeneracy: int
    palette_bound: int
    theorem_bound: int
    colours_used: int
    maximality: str
    a: int

    def to_dict(self) -> dict:
        return asdict(self)


def colour_graph(g: Graph, k: int, divisible_budget: int = DEFAULT_DIVISIBLE_BUDGET,
                 a: Optional[int] = None) -> Tuple[EdgeColouring, BoundCertificate]:
    """Colour ``g`` and certify the number of colours.

    Colour 1 goes to a maximal 1 mod k subgraph H; the rest of the graph is
    coloured with colours 2, 3, ... by :func:`colour_degenerate`. The palette
    bound always follows from the measured degeneracy of the rest; when H is
    certified maximal the measured degeneracy is also checked against the
    theoretical one.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        colouring = EdgeColouring(1, {e: 1 for e in g.edges})
        cert = BoundCertificate(1, "odd", 0, 0, 1, 1, colouring.colours_used, Maximality.CERTIFIED.value, 1)
        return colouring, cert

    h = grow_onemod(g, k, divisible_budget)
    rest = g.without_edges(h.edges)
    measured = degeneracy_order(rest).degeneracy
    d = operative_d(measured)
    a_used = default_a(d) if a is None else a
    rest_colouring = colour_degenerate(rest, k, a_used, first_colour=2)

    assignment = dict(rest_colouring.assignment)
    for e in h.edges:
        assignment[e] = 1
    total = max(rest_colouring.palette_size, 1)
    colouring = EdgeColouring(total, assignment)

    cert = BoundCertificate(
        k=k,
        parity="odd" if k % 2 else "even",
        theoretical_degeneracy=theoretical_degeneracy(k),
        measured_degeneracy=measured,
        palette_bound=1 + palette_size(d, k, a_used),
        theorem_bound=theorem_bound(k),
        colours_used=colouring.colours_used,
        maximality=h.status.value,
        a=a_used,
    )
    bad = verify(g, colouring, k)
    if bad:
        raise InvariantError(f"pipeline produced an invalid colouring: {bad[0]}")
    if cert.colours_used > cert.palette_bound:
        raise InvariantError("colours used exceed the certified palette bound")
    if h.status is Maximality.CERTIFIED and measured > cert.theoretical_degeneracy:
        raise InvariantError("leftover degeneracy exceeds the theoretical bound")
    return colouring, cert
