from itertools import product

import numpy as np
import pytest

import oracles
from yangbaxter import fixtures
from yangbaxter.solution import (
    FiniteSolution,
    SolutionError,
    braid_holds_batch,
    check_braid_direct,
    derived_left,
    dual,
    fixed_pairs,
    h_inverse_candidate,
    h_map,
    properties,
    recheck,
    rump_batch,
    rump_conditions,
    validate,
    ybe_conditions,
)


def r_oracle(s):
    return oracles.r_of(s.sigma, s.gamma)


# --- validate ---

def test_singleton_is_valid():
    s = validate(1, [[0]], [[0]])
    assert check_braid_direct(s)
    assert all(properties(s).as_dict()[k] for k in ("is_ybe", "left_nondegenerate", "involutive"))


def test_table_pair_from_constant_example_is_valid():
    s = validate(2, [[0, 0], [1, 1]], [[0, 0], [1, 1]])
    assert s.n == 2


def test_entry_out_of_range():
    with pytest.raises(SolutionError, match="entry out of range"):
        validate(2, [[0, 2], [1, 1]], [[0, 0], [1, 1]])


def test_zero_and_mismatch_rejected():
    with pytest.raises(SolutionError, match="positive"):
        validate(0, [], [])
    with pytest.raises(SolutionError, match="dimension mismatch"):
        validate(2, [[0, 1]], [[0, 0], [1, 1]])


# --- ybe ---

def test_flip_and_skew_lattice_satisfy_components():
    assert ybe_conditions(fixtures.flip(3)) == (True, True, True)
    assert ybe_conditions(fixtures.skew_lattice()) == (True, True, True)


def test_small_counterexample_table():
    s = validate(2, [[1, 0], [0, 0]], [[0, 1], [1, 0]])
    assert not oracles.braid_holds(2, r_oracle(s))
    assert not all(ybe_conditions(s))
    assert not check_braid_direct(s)


def test_constant_examples_braid():
    assert check_braid_direct(fixtures.constant(2))
    assert check_braid_direct(fixtures.constant_dual(2))


def test_components_agree_with_oracle_on_random_tables():
    rng = np.random.default_rng(0)
    for _ in range(10_000):
        sig = rng.integers(0, 3, size=(3, 3)).tolist()
        gam = rng.integers(0, 3, size=(3, 3)).tolist()
        s = validate(3, sig, gam)
        truth = oracles.braid_holds(3, r_oracle(s))
        assert all(ybe_conditions(s)) == truth == check_braid_direct(s)


def test_components_agree_exhaustively_n2():
    tables = [np.array(t).reshape(2, 2).tolist() for t in product(range(2), repeat=4)]
    for sig, gam in product(tables, repeat=2):
        s = validate(2, sig, gam)
        assert all(ybe_conditions(s)) == oracles.braid_holds(2, r_oracle(s))


def test_batch_braid_matches_scalar():
    rng = np.random.default_rng(1)
    sig = rng.integers(0, 3, size=(500, 3, 3))
    gam = rng.integers(0, 3, size=(500, 3, 3))
    batch = braid_holds_batch(sig, gam)
    for i in range(500):
        assert batch[i] == oracles.braid_holds(3, oracles.r_of(sig[i].tolist(), gam[i].tolist()))


# --- properties ---

@pytest.mark.parametrize("name", fixtures.example_names())
def test_fixture_flags(name):
    d = properties(fixtures.example(name)).as_dict()
    for key, value in fixtures.EXPECTED_FLAGS[name].items():
        assert d[key] == value, key


def test_counterexample_rechecks():
    rng = np.random.default_rng(2)
    seen = 0
    for _ in range(300):
        s = validate(3, rng.integers(0, 3, (3, 3)).tolist(), rng.integers(0, 3, (3, 3)).tolist())
        rep = properties(s)
        assert rep.is_ybe == (rep.ybe1 and rep.ybe2 and rep.ybe3)
        if rep.failed_check is not None:
            seen += 1
            assert not recheck(s, rep.failed_check, rep.counterexample)
    assert seen > 0


def test_skew_lattice_flags_from_tables():
    rep = properties(fixtures.skew_lattice())
    assert not rep.left_nondegenerate and not rep.irretractable_sigma


# --- transforms ---

def test_derived_left():
    f = fixtures.flip(3)
    assert derived_left(f) == f
    s = fixtures.sym3_conjugation()
    d = derived_left(s)
    assert check_braid_direct(d)
    for x, y in product(range(6), repeat=2):
        assert d.sigma[x][y] == y
        # gamma'_y(x) = y x y^-1 with gamma = id
        assert d.gamma[y][x] == oracles.sym3_product([y, x, oracles.sym3_inverse(y)])
    with pytest.raises(SolutionError):
        derived_left(fixtures.constant(2))


def test_dual():
    c = fixtures.constant(2)
    assert dual(c).r(0, 1) == (1, 1)
    assert dual(c).sigma == fixtures.constant_dual(2).sigma
    assert dual(c).gamma == fixtures.constant_dual(2).gamma
    f = fixtures.flip(3)
    assert dual(f) == f
    sk = fixtures.skew_lattice()
    assert check_braid_direct(dual(sk))
    assert dual(dual(sk)) == sk


def test_dual_preserves_solutions_exhaustive_n2():
    tables = [np.array(t).reshape(2, 2).tolist() for t in product(range(2), repeat=4)]
    for sig, gam in product(tables, repeat=2):
        s = validate(2, sig, gam)
        assert check_braid_direct(s) == check_braid_direct(dual(s))


def test_rump_examples():
    assert rump_conditions(fixtures.flip(3)) == (True, True, True)
    assert rump_conditions(fixtures.sym3_conjugation()) == (True, True, True)
    with pytest.raises(SolutionError):
        rump_conditions(fixtures.skew_lattice())


def test_rump_random_failures():
    rng = np.random.default_rng(3)
    perms = [list(p) for p in __import__("itertools").permutations(range(3))]
    failures = 0
    for _ in range(2000):
        sig = rng.integers(0, 3, (3, 3)).tolist()
        gam = [perms[i] for i in rng.integers(0, 6, 3)]
        s = validate(3, sig, gam)
        truth = oracles.braid_holds(3, r_oracle(s))
        assert all(rump_conditions(s)) == truth
        failures += not truth
    assert failures > 0


def test_rump_batch_matches_scalar():
    rng = np.random.default_rng(4)
    perms = np.array(list(__import__("itertools").permutations(range(3))))
    sig = rng.integers(0, 3, (300, 3, 3))
    gam = perms[rng.integers(0, 6, (300, 3))]
    batch = rump_batch(sig, gam)
    for i in range(300):
        s = validate(3, sig[i].tolist(), gam[i].tolist())
        assert tuple(batch[i]) == rump_conditions(s)


def test_h_map():
    assert h_map(fixtures.flip(3)).is_identity()
    s = fixtures.sym3_conjugation()
    assert h_map(s).is_identity() and h_inverse_candidate(s).is_identity()
    with pytest.raises(SolutionError):
        h_map(fixtures.constant(2))


def test_fixed_pairs():
    assert fixed_pairs(fixtures.flip(2)) == [(0, 0), (1, 1)]
    assert fixed_pairs(fixtures.constant(2)) == [(0, 0), (1, 1)]
    s = fixtures.sym3_conjugation()
    expected = [(a, b) for a, b in product(range(6), repeat=2)
                if oracles.sym3_product([a, b, oracles.sym3_inverse(a)]) == a and a == b]
    assert fixed_pairs(s) == expected == [(a, a) for a in range(6)]


def test_frozen_and_hashable():
    s = FiniteSolution(1, ((0,),), ((0,),))
    assert hash(s) == hash(FiniteSolution(1, ((0,),), ((0,),), name="other"))
