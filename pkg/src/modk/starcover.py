"""Covering a set of targets by 0-mod-k and 1-mod-k stars centred on colours.

At each step of the degenerate colouring, the uncoloured neighbours of the
current vertex ("targets") must be split among colours so that a colour
already present at the vertex ("held") receives a multiple of k new edges
and any other colour ("fresh") receives 1 mod k of them. A target may only
go to a colour it does not already carry ("available").
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from math import ceil
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from .errors import InvariantError


def palette_size(d: int, k: int, a: int) -> int:
    """Number of colours the degenerate colouring needs: 2d + k + a + ceil(d/a) + 1."""
    if d < 0 or k < 1 or a < 1:
        raise ValueError("need d >= 0, k >= 1, a >= 1")
    return 2 * d + k + a + ceil(d / a) + 1


class StarKind(str, Enum):
    ZERO = "zero_k"
    ONE = "one_k"


@dataclass(frozen=True)
class Star:
    centre: int
    leaves: Tuple[int, ...]
    kind: StarKind


@dataclass(frozen=True)
class StarCoverInstance:
    held: Tuple[int, ...]
    fresh: Tuple[int, ...]
    targets: Tuple[int, ...]
    available: Mapping[int, frozenset]
    k: int
    d: int
    a: int

    @property
    def palette(self) -> Tuple[int, ...]:
        return tuple(sorted(self.held + self.fresh))

    def feasibility_problems(self) -> List[str]:
        """Reasons the covering guarantee does not apply; empty when it does."""
        problems = []
        held, fresh = set(self.held), set(self.fresh)
        if held & fresh:
            problems.append("held and fresh colours overlap")
        if len(held) > self.d + 1:
            problems.append(f"{len(held)} held colours exceed d + 1 = {self.d + 1}")
        want = palette_size(self.d, self.k, self.a)
        if len(held) + len(fresh) != want:
            problems.append(f"palette has {len(held) + len(fresh)} colours, expected {want}")
        palette = held | fresh
        floor = len(palette) - self.d
        for x in self.targets:
            avail = self.available.get(x, frozenset())
            if not avail <= palette:
                problems.append(f"target {x} lists colours outside the palette")
            elif len(avail) < floor:
                problems.append(f"target {x} has {len(avail)} available colours, needs {floor}")
        return problems


# --- matching -----------------------------------------------------------------

class HallPreconditionError(ValueError):
    def __init__(self, message, vertex):
        self.vertex = vertex
        super().__init__(message)


def hall_matching(adjacency: Mapping[Hashable, Iterable[Hashable]], k: int) -> Dict[Hashable, Hashable]:
    """Matching covering every key of ``adjacency`` (the X side).

    Requires every X vertex to have at least ``k`` neighbours and every
    neighbour (B side) to be adjacent to at most ``k`` X vertices; Hall's
    condition then holds. Built by BFS augmenting paths, X and B visited in
    sorted order. Returns ``{x: b}``.
    """
    nbrs = {x: sorted(set(bs)) for x, bs in adjacency.items()}
    load = {}
    for x in sorted(nbrs):
        if len(nbrs[x]) < k:
            raise HallPreconditionError(f"X vertex {x!r} has degree {len(nbrs[x])} < {k}", x)
        for b in nbrs[x]:
            load[b] = load.get(b, 0) + 1
    for b in sorted(load):
        if load[b] > k:
            raise HallPreconditionError(f"B vertex {b!r} has degree {load[b]} > {k}", b)

    match_x, match_b = {}, {}
    for root in sorted(nbrs):
        parent = {}  # b -> x it was reached from
        queue = deque([root])
        end = None
        while queue and end is None:
            x = queue.popleft()
            for b in nbrs[x]:
                if b in parent:
                    continue
                parent[b] = x
                if b not in match_b:
                    end = b
                    break
                queue.append(match_b[b])
        if end is None:
            raise InvariantError(f"no augmenting path for {root!r} although Hall's condition holds")
        b = end
        while b is not None:
            x = parent[b]
            prev = match_x.get(x)
            match_x[x], match_b[b] = b, x
            b = prev
    return match_x


def maximum_matching_size(adjacency: Mapping[Hashable, Iterable[Hashable]]) -> int:
    """Plain exhaustive maximum matching; only for tiny graphs."""
    xs = sorted(adjacency)
    nbrs = [sorted(set(adjacency[x])) for x in xs]

    def best(i, used):
        if i == len(xs):
            return 0
        top = best(i + 1, used)
        for b in nbrs[i]:
            if b not in used:
                top = max(top, 1 + best(i + 1, used | {b}))
                if top == len(xs) - i:
                    break
        return top

    return best(0, frozenset())


# --- covering -----------------------------------------------------------------

@dataclass(frozen=True)
class CoverTrace:
    """Stars plus the per-phase quantities the covering argument bounds."""

    stars: Tuple[Star, ...]
    extended: Tuple[int, ...]       # held colours plus the fresh ones promoted with them
    uncovered_after_phase1: int
    phase1_leftover: Dict[int, int]  # uncovered available targets per extended centre
    phase2_stars: int
    reserve: int                     # fresh colours left for the final matching


def _largest_size(count: int, residue: int, k: int, minimum: int) -> int:
    # largest s <= count with s = residue (mod k) and s >= minimum; 0 if none
    s = count - ((count - residue) % k)
    return s if s >= minimum else 0


def carve(inst: StarCoverInstance) -> CoverTrace:
    """Three-phase star covering with the phase bounds checked as it runs.

    1. Promote the smallest fresh colours so held + promoted has d + a colours.
       Each held colour takes its largest multiple-of-k set of uncovered
       available targets; each promoted colour its largest set of size
       1 mod k and at least k + 1.
    2. The remaining fresh colours do the same as promoted ones.
    3. Colours unused by phase 2 are matched to the leftover targets, one
       target each.
    Centres go in ascending colour id, leaves in ascending target id.
    """
    problems = inst.feasibility_problems()
    if problems:
        raise ValueError("infeasible star-cover instance: " + "; ".join(problems))
    k, d, a = inst.k, inst.d, inst.a
    held = sorted(inst.held)
    fresh = sorted(inst.fresh)
    promoted = fresh[:d + a - len(held)]
    rest = fresh[d + a - len(held):]
    extended = held + promoted
    uncovered = set(inst.targets)
    stars = []

    def leaves_of(colour):
        return sorted(x for x in uncovered if colour in inst.available[x])

    def take(centre, residue, minimum, kind):
        pool = leaves_of(centre)
        size = _largest_size(len(pool), residue, k, minimum)
        if size == 0:
            return False
        chosen = tuple(pool[:size])
        uncovered.difference_update(chosen)
        stars.append(Star(centre, chosen, kind))
        return True

    # phase 1; counts only shrink, so one pass is already a fixpoint
    used = set()
    progress = True
    while progress:
        progress = False
        for colour in held:
            if colour not in used and take(colour, 0, k, StarKind.ZERO):
                used.add(colour)
                progress = True
        for colour in promoted:
            if colour not in used and take(colour, 1, k + 1, StarKind.ONE):
                used.add(colour)
                progress = True
    leftover = {c: len(leaves_of(c)) for c in extended}
    x1 = len(uncovered)
    for c, left in leftover.items():
        if left > k:
            raise InvariantError(f"phase 1 left {left} > k targets available to colour {c}")
    if a * x1 > k * (d + a):
        raise InvariantError(f"phase 1 left {x1} targets, above k + dk/a")

    # phase 2
    before = len(stars)
    for colour in rest:
        if take(colour, 1, k + 1, StarKind.ONE):
            used.add(colour)
    t2 = len(stars) - before
    if a * t2 > a + d:
        raise InvariantError(f"phase 2 used {t2} stars, above 1 + d/a")

    # phase 3
    reserve = [c for c in rest if c not in used]
    if len(reserve) < d + k:
        raise InvariantError(f"only {len(reserve)} reserve colours, need d + k = {d + k}")
    reserve_set = set(reserve)
    bip = {x: inst.available[x] & reserve_set for x in sorted(uncovered)}
    for x, b in sorted(hall_matching(bip, k).items()):
        stars.append(Star(b, (x,), StarKind.ONE))
    return CoverTrace(tuple(stars), tuple(extended), x1, leftover, t2, len(reserve))


def cover_with_stars(inst: StarCoverInstance) -> List[Star]:
    return list(carve(inst).stars)


def check_cover(inst: StarCoverInstance, stars: Iterable[Star]) -> List[str]:
    """Independent validity check of a star list against an instance."""
    errors = []
    held, fresh = set(inst.held), set(inst.fresh)
    seen_leaves, seen_centres = set(), set()
    for s in stars:
        n = len(s.leaves)
        if n == 0:
            errors.append(f"star at {s.centre} has no leaves")
        if s.centre in seen_centres:
            errors.append(f"centre {s.centre} used twice")
        seen_centres.add(s.centre)
        if s.kind is StarKind.ZERO and not (s.centre in held and n % inst.k == 0):
            errors.append(f"zero_k star at {s.centre} with {n} leaves")
        if s.kind is StarKind.ONE and not (s.centre in fresh and n % inst.k == 1 % inst.k):
            errors.append(f"one_k star at {s.centre} with {n} leaves")
        for x in s.leaves:
            if x in seen_leaves:
                errors.append(f"target {x} covered twice")
            seen_leaves.add(x)
            if s.centre not in inst.available.get(x, ()):
                errors.append(f"colour {s.centre} not available at {x}")
    if seen_leaves != set(inst.targets):
        errors.append("leaves do not partition the targets")
    return errors


# --- tightness ----------------------------------------------------------------

def make_tightness_instance(k: int, d: int, x_count: int) -> StarCoverInstance:
    """An instance with a palette of 2d + k - 1 colours that has no covering.

    Held colours are ``1..d+1``; the first ``d`` fresh colours are blocked at
    every target; every target sees all other colours.
    """
    if k < 2 or d < 1:
        raise ValueError("need k >= 2 and d >= 1")
    if x_count < k - 1 or x_count % k != k - 1:
        raise ValueError(f"x_count must be >= {k - 1} and = k - 1 (mod k)")
    held = tuple(range(1, d + 2))
    fresh = tuple(range(d + 2, 2 * d + k))
    blocked = set(fresh[:d])
    open_colours = frozenset(held + tuple(c for c in fresh if c not in blocked))
    targets = tuple(range(x_count))
    return StarCoverInstance(held, fresh, targets, {x: open_colours for x in targets}, k, d, 1)


class RefuteStatus(str, Enum):
    NO_COVERING = "NoCoveringExists"
    FOUND = "CoveringFound"
    BUDGET_EXHAUSTED = "BudgetExhausted"


@dataclass(frozen=True)
class RefuteResult:
    status: RefuteStatus
    stars: Optional[Tuple[Star, ...]]
    nodes: int


def refute_covering(inst: StarCoverInstance, budget: int) -> RefuteResult:
    """Exhaustively search every assignment of targets to star centres."""
    k = inst.k
    held = set(inst.held)
    targets = sorted(inst.targets)
    options = [sorted(inst.available.get(x, ())) for x in targets]
    count: Dict[int, int] = {}
    pick: List[int] = []
    nodes = 0

    def deficit(c):
        want = 0 if c in held else 1 % k
        return (want - count[c]) % k

    def search(i):
        nonlocal nodes
        if i == len(targets):
            return all(deficit(c) == 0 for c in count)
        left = len(targets) - i - 1
        for c in options[i]:
            nodes += 1
            if nodes > budget:
                raise _OutOfBudget
            count[c] = count.get(c, 0) + 1
            pick.append(c)
            if sum(deficit(u) for u in count) <= left and search(i + 1):
                return True
            pick.pop()
            count[c] -= 1
            if count[c] == 0:
                del count[c]
        return False

    try:
        found = search(0)
    except _OutOfBudget:
        return RefuteResult(RefuteStatus.BUDGET_EXHAUSTED, None, nodes)
    if not found:
        return RefuteResult(RefuteStatus.NO_COVERING, None, nodes)
    groups: Dict[int, List[int]] = {}
    for x, c in zip(targets, pick):
        groups.setdefault(c, []).append(x)
    stars = tuple(Star(c, tuple(xs), StarKind.ZERO if c in held else StarKind.ONE)
                  for c, xs in sorted(groups.items()))
    return RefuteResult(RefuteStatus.FOUND, stars, nodes)


class _OutOfBudget(Exception):
    pass


def random_instance(rng: np.random.Generator, k: int, d: int, a: int, x_count: int) -> StarCoverInstance:
    """A random instance meeting the covering hypotheses.

    Palette ``1..palette_size(d, k, a)``; a random set of at most d + 1 held
    colours; each target blocks a random set of at most d colours.
    """
    size = palette_size(d, k, a)
    palette = np.arange(1, size + 1)
    n_held = int(rng.integers(0, d + 2))
    held = tuple(sorted(int(c) for c in rng.choice(palette, n_held, replace=False)))
    fresh = tuple(int(c) for c in palette if int(c) not in held)
    available = {}
    for x in range(x_count):
        n_block = int(rng.integers(0, d + 1))
        blocked = set(int(c) for c in rng.choice(palette, n_block, replace=False))
        available[x] = frozenset(int(c) for c in palette if int(c) not in blocked)
    return StarCoverInstance(held, fresh, tuple(range(x_count)), available, k, d, a)
