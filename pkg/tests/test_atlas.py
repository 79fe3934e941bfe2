import math
import random
from itertools import product

import numpy as np
import pytest

import oracles
from yangbaxter import atlas, fixtures
from yangbaxter.solution import validate

# counts from the brute-force oracle in oracles.nondegenerate_bruteforce
K2 = 4
K3 = 66


def tables(s):
    return (s.sigma, s.gamma)


def test_enumeration_counts():
    assert len(list(atlas.enumerate_nondegenerate(1))) == 1
    assert len(list(atlas.enumerate_nondegenerate(2))) == K2
    assert len(list(atlas.enumerate_nondegenerate(3))) == K3


@pytest.mark.parametrize("n", [2, 3])
def test_enumeration_equals_oracle(n):
    got = [tables(s) for s in atlas.enumerate_nondegenerate(n)]
    assert got == oracles.nondegenerate_bruteforce(n)


def test_enumeration_deterministic():
    a = [tables(s) for s in atlas.enumerate_nondegenerate(3)]
    b = [tables(s) for s in atlas.enumerate_nondegenerate(3)]
    assert a == b


def test_enumeration_range():
    with pytest.raises(atlas.CampaignRangeError):
        list(atlas.enumerate_nondegenerate(4))
    with pytest.raises(atlas.CampaignRangeError):
        list(atlas.enumerate_nondegenerate(0))


def test_gamma_bijective_counts():
    assert sum(1 for _ in atlas.enumerate_gamma_bijective(1)) == 1
    assert sum(1 for _ in atlas.enumerate_gamma_bijective(2)) == 64 == 16 * 4
    assert atlas.count_gamma_bijective(3) == 19683 * 216
    assert sum(len(b[0]) for b in atlas.gamma_bijective_batches(3)) == 19683 * 216
    for s in atlas.enumerate_gamma_bijective(2):
        assert all(sorted(row) == [0, 1] for row in s.gamma)


def test_canonical_label():
    f = fixtures.flip(2)
    assert atlas.canonical_label(f).canonical.sigma == f.sigma
    rng = random.Random(0)
    for name in ("skew_lattice", "sym3_conj", "constant3"):
        s = fixtures.example(name)
        perm = list(range(s.n))
        rng.shuffle(perm)
        t = fixtures.relabel(s, perm)
        assert atlas.canonical_label(s).canonical == atlas.canonical_label(t).canonical


def test_canonical_label_separates_isomorphism_classes_n2():
    sols = []
    tabs = [np.array(t).reshape(2, 2).tolist() for t in product(range(2), repeat=4)]
    for sig, gam in product(tabs, repeat=2):
        s = validate(2, sig, gam)
        if oracles.braid_holds(2, oracles.r_of(s.sigma, s.gamma)):
            sols.append(s)
    for s, t in product(sols, repeat=2):
        iso = oracles.isomorphic(2, oracles.r_of(s.sigma, s.gamma), oracles.r_of(t.sigma, t.gamma))
        same = atlas.canonical_label(s).canonical == atlas.canonical_label(t).canonical
        assert iso == same


def test_orbit_size():
    assert atlas.canonical_label(fixtures.flip(3)).orbit_size == 1
    cls = atlas.canonical_label(fixtures.skew_lattice())
    assert cls.orbit_size * len([p for p in __import__("itertools").permutations(range(3))
                                 if fixtures.relabel(fixtures.skew_lattice(), p) == fixtures.skew_lattice()]) == 6


def test_canonical_guard():
    big = fixtures.flip(7)
    with pytest.raises(atlas.CampaignRangeError):
        atlas.canonical_label(big)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_main_irr(n):
    rep = atlas.campaign_main_irr(n)
    assert rep.violations == []
    assert rep.counts["solutions"] == [1, K2, K3][n - 1]
    assert rep.counts["candidates"] == math.factorial(n) ** (2 * n)


@pytest.mark.parametrize("n", [1, 2])
def test_rump_small(n):
    rep = atlas.campaign_rump(n)
    assert rep.violations == []
    assert rep.counts["candidates"] == [1, 64][n - 1]


def test_rump_jobs_merge_deterministically():
    a = atlas.campaign_rump(2, jobs=1)
    b = atlas.campaign_rump(2, jobs=2)
    assert a.counts == b.counts and a.violations == b.violations


def test_cocycle_campaign_n2():
    rep = atlas.campaign_cocycle(2, 4)
    assert rep.violations == []
    assert rep.counts["candidates"] == 256
    fx = rep.parameters["fixtures"]
    assert fx["constant2"] == {"pi": "injective, not surjective", "pi_prime": "bijective"}
    assert fx["skew_lattice"] == {"pi": "neither injective nor surjective",
                                  "pi_prime": "neither injective nor surjective"}
    assert rep.counts.get("bijective_left_not_right", 0) == 0


def test_free_abelian_campaign():
    for n in (1, 2, 3):
        rep = atlas.campaign_free_abelian(n, 4)
        assert rep.violations == []


def test_pruned_n4_contains_known_solutions():
    found = {atlas.canonical_label(s).canonical for s in atlas.enumerate_nondegenerate(4, pruned=True)
             if s.sigma == ((0, 1, 2, 3),) * 4}
    assert atlas.canonical_label(fixtures.flip(4)).canonical in found


def test_report_roundtrip():
    rep = atlas.campaign_main_irr(2)
    assert atlas.CampaignReport.from_dict(rep.as_dict()) == rep


def test_isomorphism_class_counts_match_oracle():
    for n in (2, 3):
        reps = []
        for sig, gam in oracles.nondegenerate_bruteforce(n):
            r = oracles.r_of(sig, gam)
            if not any(oracles.isomorphic(n, r, q) for q in reps):
                reps.append(r)
        labels = {atlas.canonical_label(s).canonical for s in atlas.enumerate_nondegenerate(n)}
        assert len(labels) == len(reps)
