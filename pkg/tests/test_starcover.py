import itertools

import numpy as np
import pytest

from modk.starcover import (HallPreconditionError, RefuteStatus, Star, StarCoverInstance, StarKind,
                            carve, check_cover, cover_with_stars, hall_matching,
                            make_tightness_instance, maximum_matching_size, palette_size,
                            random_instance, refute_covering)

from conftest import brute_max_matching


def full_instance(k, d, a, held, x_count):
    size = palette_size(d, k, a)
    palette = tuple(range(1, size + 1))
    held = tuple(held)
    fresh = tuple(c for c in palette if c not in held)
    targets = tuple(range(x_count))
    return StarCoverInstance(held, fresh, targets, {x: frozenset(palette) for x in targets}, k, d, a)


def is_matching_covering(adjacency, m):
    return (set(m) == set(adjacency) and len(set(m.values())) == len(m)
            and all(b in adjacency[x] for x, b in m.items()))


# --- matching -----------------------------------------------------------------

def test_hall_small():
    adj = {"x1": ["b1", "b2"], "x2": ["b2", "b3"]}
    m = hall_matching(adj, 2)
    assert is_matching_covering(adj, m)
    assert m == {"x1": "b1", "x2": "b2"}


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_hall_complete_bipartite(k):
    adj = {x: list(range(k)) for x in range(k)}
    assert is_matching_covering(adj, hall_matching(adj, k))


def test_hall_rejects_overloaded_b():
    adj = {0: ["b", "c"], 1: ["b", "c"], 2: ["b", "c"]}
    with pytest.raises(HallPreconditionError) as exc:
        hall_matching(adj, 2)
    assert exc.value.vertex == "b"


def test_hall_rejects_low_degree_x():
    with pytest.raises(HallPreconditionError) as exc:
        hall_matching({0: ["b"], 1: ["b", "c"]}, 2)
    assert exc.value.vertex == 0


def test_hall_needs_augmenting_paths():
    # greedy in sorted order would strand x2 without re-routing x0 and x1
    adj = {0: ["a", "b"], 1: ["a", "c"], 2: ["b", "c"]}
    assert is_matching_covering(adj, hall_matching(adj, 2))


def test_module_max_matching_against_enumeration():
    rng = np.random.default_rng(0)
    for _ in range(200):
        adj = {x: [b for b in range(4) if rng.random() < 0.5] for x in range(4)}
        assert maximum_matching_size(adj) == brute_max_matching(adj)


# --- covering -----------------------------------------------------------------

def test_cover_example_single_zero_star():
    inst = full_instance(2, 1, 1, [1], 2)
    assert len(inst.held) + len(inst.fresh) == 7
    stars = cover_with_stars(inst)
    assert stars == [Star(1, (0, 1), StarKind.ZERO)]
    assert check_cover(inst, stars) == []


def test_cover_empty_targets():
    assert cover_with_stars(full_instance(3, 2, 1, [1, 2], 0)) == []


@pytest.mark.parametrize("k, d, a", [(2, 1, 1), (3, 2, 1), (4, 3, 2)])
def test_cover_single_target_is_trivial_one_star(k, d, a):
    inst = full_instance(k, d, a, [1], 1)
    stars = cover_with_stars(inst)
    assert len(stars) == 1
    assert stars[0].kind is StarKind.ONE and len(stars[0].leaves) == 1
    assert stars[0].centre in inst.fresh


def test_cover_rejects_infeasible():
    inst = full_instance(2, 1, 1, [1, 2, 3], 2)  # three held colours > d + 1
    with pytest.raises(ValueError):
        cover_with_stars(inst)
    tight = make_tightness_instance(2, 1, 1)
    with pytest.raises(ValueError):
        cover_with_stars(tight)


def test_cover_uses_promoted_and_fresh_stars():
    # k = 2: three targets can only be a 1_k star of size 3 or a mix
    inst = full_instance(2, 2, 1, [], 3)
    stars = cover_with_stars(inst)
    assert check_cover(inst, stars) == []
    assert stars[0].kind is StarKind.ONE and len(stars[0].leaves) == 3


@pytest.mark.parametrize("seed", range(20))
def test_random_instances_cover(seed):
    rng = np.random.default_rng(seed)
    for _ in range(25):
        k = int(rng.integers(2, 6))
        d = int(rng.integers(0, 7))
        a = int(rng.integers(1, max(d, 1) + 1))
        inst = random_instance(rng, k, d, a, int(rng.integers(0, 40)))
        assert inst.feasibility_problems() == []
        tr = carve(inst)
        assert check_cover(inst, tr.stars) == []
        assert tr.uncovered_after_phase1 * a <= k * (d + a)
        assert tr.phase2_stars * a <= a + d
        assert tr.reserve >= d + k
        assert all(left <= k for left in tr.phase1_leftover.values())


def test_cover_deterministic():
    rng = np.random.default_rng(5)
    inst = random_instance(rng, 3, 4, 2, 25)
    assert cover_with_stars(inst) == cover_with_stars(inst)


# --- tightness ----------------------------------------------------------------

def test_tightness_shapes():
    inst = make_tightness_instance(2, 1, 1)
    assert (len(inst.held), len(inst.fresh)) == (2, 1)
    assert inst.available[0] == frozenset(inst.held)

    inst = make_tightness_instance(3, 1, 2)
    assert (len(inst.held), len(inst.fresh)) == (2, 2)
    assert len(inst.available[0] - set(inst.held)) == 1

    inst = make_tightness_instance(2, 2, 3)
    assert (len(inst.held), len(inst.fresh)) == (3, 2)
    assert len(inst.available[0] - set(inst.held)) == 0


def test_tightness_rejects_bad_count():
    with pytest.raises(ValueError):
        make_tightness_instance(3, 1, 3)


@pytest.mark.parametrize("k, d, x", [(2, 1, 1), (3, 2, 2), (2, 2, 3), (3, 1, 5)])
def test_refute_tightness(k, d, x):
    assert refute_covering(make_tightness_instance(k, d, x), 10**6).status is RefuteStatus.NO_COVERING


def test_refute_finds_covering_on_feasible_instance():
    inst = full_instance(2, 1, 1, [1], 2)
    res = refute_covering(inst, 10**5)
    assert res.status is RefuteStatus.FOUND
    assert check_cover(inst, res.stars) == []


def test_refute_budget():
    inst = full_instance(3, 3, 1, [1, 2], 8)
    assert refute_covering(inst, 3).status is RefuteStatus.BUDGET_EXHAUSTED


def brute_cover_exists(inst):
    # every map of targets to available colours, checked by residue counts alone
    held = set(inst.held)
    options = [sorted(inst.available[x]) for x in inst.targets]
    for pick in itertools.product(*options):
        counts = {}
        for c in pick:
            counts[c] = counts.get(c, 0) + 1
        if all(n % inst.k == (0 if c in held else 1 % inst.k) for c, n in counts.items()):
            return True
    return False


@pytest.mark.parametrize("seed", range(6))
def test_refute_agrees_with_brute_force(seed):
    rng = np.random.default_rng(100 + seed)
    for _ in range(10):
        k = int(rng.integers(2, 4))
        palette = list(range(1, int(rng.integers(2, 6)) + 1))
        held = tuple(c for c in palette if rng.random() < 0.5)
        fresh = tuple(c for c in palette if c not in held)
        xs = tuple(range(int(rng.integers(1, 5))))
        avail = {x: frozenset(c for c in palette if rng.random() < 0.6) for x in xs}
        inst = StarCoverInstance(held, fresh, xs, avail, k, 1, 1)
        res = refute_covering(inst, 10**6)
        assert (res.status is RefuteStatus.FOUND) == brute_cover_exists(inst)
