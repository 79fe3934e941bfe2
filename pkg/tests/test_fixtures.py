from itertools import product

import pytest

import oracles
from yangbaxter import fixtures
from yangbaxter.solution import check_braid_direct


@pytest.mark.parametrize("name", fixtures.example_names())
def test_every_fixture_is_a_solution(name):
    s = fixtures.example(name)
    assert check_braid_direct(s)
    assert oracles.braid_holds(s.n, oracles.r_of(s.sigma, s.gamma))


def test_sym3_labeling_matches_permutations():
    for a, b in product(range(6), repeat=2):
        assert fixtures.sym3_mul(a, b) == oracles.sym3_compose(a, b)
    for a in range(6):
        assert fixtures.sym3_inv(a) == oracles.sym3_inverse(a)


def test_sym3_conjugation_formula():
    s = fixtures.sym3_conjugation()
    for a, b in product(range(6), repeat=2):
        assert s.r(a, b) == (oracles.sym3_product([a, b, oracles.sym3_inverse(a)]), a)


def test_skew_lattice_formula():
    s = fixtures.skew_lattice()
    assert s.sigma == ((0, 0, 0), (0, 1, 2), (0, 1, 2))
    # gamma_y(x) = y join x
    assert s.gamma == ((0, 1, 2), (1, 1, 1), (2, 2, 2))


def test_nat_truncated():
    s = fixtures.nat_truncated(4)
    xi = [0, 0, 1, 2, 3]
    assert all(s.r(x, y) == (xi[y], xi[x]) for x, y in product(range(5), repeat=2))


def test_unknown_example():
    with pytest.raises(KeyError, match="unknown example"):
        fixtures.example("nope")


def test_relabel_is_isomorphic():
    s = fixtures.skew_lattice()
    t = fixtures.relabel(s, (2, 0, 1))
    assert oracles.isomorphic(3, oracles.r_of(s.sigma, s.gamma), oracles.r_of(t.sigma, t.gamma))
    assert check_braid_direct(t)
