from itertools import product

import pytest

import oracles
from yangbaxter import fixtures
from yangbaxter.actions import (
    bijectivity_report,
    f_semidirect,
    lambda_M,
    lambda_prime,
    lambda_prime_inverse,
    pi,
    pi_injective_at,
    pi_inverse,
    pi_prime,
    pi_prime_recursive,
    pi_recursive,
    pi_surjective_at,
    r_M_check,
    r_M_identities,
    rho_M,
    rho_prime,
    semidirect_multiply,
)
from yangbaxter.sampling import word_tuples
from yangbaxter.solution import SolutionError, left_nondegenerate
from yangbaxter.transformation import Transformation
from yangbaxter.words import Kind, quotient

SMALL = ["flip3", "constant2", "constant_dual2", "skew_lattice", "nat_trunc_4", "identity_map"]


def words_upto(n, d):
    return [w for k in range(d + 1) for w in product(range(n), repeat=k)]


# --- lambda and rho ---

def test_lambda_examples():
    s = fixtures.constant(2)
    assert lambda_M(s, (), (1, 0)) == (1, 0)
    assert lambda_M(s, (0,), (1, 1)) == (0, 0)
    f = fixtures.flip(3)
    assert all(lambda_M(f, a, b) == b for a, b in product(words_upto(3, 2), repeat=2))


def test_rho_examples():
    s = fixtures.sym3_conjugation()
    assert rho_M(s, (), (3, 1)) == (3, 1)
    assert all(rho_M(s, (b,), (a,)) == (a,) for a, b in product(range(6), repeat=2))
    f = fixtures.flip(3)
    assert all(rho_M(f, a, b) == b for a, b in product(words_upto(3, 2), repeat=2))


@pytest.mark.parametrize("name", SMALL + ["sym3_conj"])
def test_lambda_rho_match_recursions(name):
    s = fixtures.example(name)
    r = oracles.r_of(s.sigma, s.gamma)
    for a, b in word_tuples(s.n, 2, 5, seed=0, count=400, exhaustive=False):
        assert lambda_M(s, a, b) == oracles.lam(r, a, b)
        assert rho_M(s, a, b) == oracles.rho(r, a, b)


@pytest.mark.parametrize("name", SMALL)
def test_well_defined_on_classes(name):
    s = fixtures.example(name)
    q = quotient("M", s, 3)
    words = words_upto(s.n, 2)
    nf = {w: q.normal_form(w) for w in words}
    for a, b in product(words, repeat=2):
        assert q.equal(lambda_M(s, a, b), lambda_M(s, nf[a], nf[b]))
        assert q.equal(rho_M(s, a, b), rho_M(s, nf[a], nf[b]))


@pytest.mark.parametrize("name", SMALL)
def test_lambda_multiplicative_rho_antimultiplicative(name):
    s = fixtures.example(name)
    for a, b, c in word_tuples(s.n, 3, 4, exhaustive=True)[::3]:
        assert lambda_M(s, a + b, c) == lambda_M(s, a, lambda_M(s, b, c))
        assert rho_M(s, a + b, c) == rho_M(s, b, rho_M(s, a, c))


def test_r_M_trivial_and_skew_exhaustive():
    s = fixtures.skew_lattice()
    q = quotient("M", s, 6)
    assert r_M_check(s, q, (), (), ())
    words = words_upto(3, 2)
    for a, b, c in product(words, repeat=3):
        assert r_M_check(s, q, a, b, c)


def test_r_M_sym3_random():
    s = fixtures.sym3_conjugation()
    q = quotient("M", s, 6)
    for a, b, c in word_tuples(6, 3, 6, seed=5, count=100, exhaustive=False):
        assert all(r_M_identities(s, q, a, b, c).values())


def test_wrong_composition_order_breaks_product_identity():
    # reading lambda_{x1...xm} with x1 acting first must fail somewhere
    s = fixtures.sym3_conjugation()
    q = quotient("M", s, 4)

    def lam_wrong(a, b):
        for x in a:
            b = lambda_M(s, (x,), b)
        return b

    bad = any(not q.equal(a + b, lam_wrong(a, b) + rho_M(s, b, a))
              for a, b in product(words_upto(6, 2), repeat=2) if len(a) + len(b) <= 4)
    assert bad


# --- lambda' and rho' ---

def test_lambda_prime_examples():
    s = fixtures.skew_lattice()
    assert lambda_prime(s, (), (2, 1)) == (2, 1)
    assert lambda_prime(s, (1,), (0, 2)) == (0, 2)
    assert lambda_prime(s, (0,), (1, 2)) == (0, 0)


def test_rho_prime_examples():
    s = fixtures.skew_lattice()
    assert rho_prime(s, (), (2, 1)) == (2, 1)
    assert rho_prime(s, (1,), (0,)) == (1,)
    c = fixtures.constant(2)
    # gamma_y(x) = x: every gamma_y is the identity
    assert all(rho_prime(c, (x,), (y,)) == (y,) for x, y in product(range(2), repeat=2))


def test_lambda_prime_is_homomorphism_rho_prime_anti():
    s = fixtures.sym3_conjugation()
    for a, b, w in word_tuples(6, 3, 4, seed=1, count=300, exhaustive=False):
        assert lambda_prime(s, a + b, w) == lambda_prime(s, a, lambda_prime(s, b, w))
        assert rho_prime(s, a + b, w) == rho_prime(s, b, rho_prime(s, a, w))


def test_lambda_prime_inverse():
    s = fixtures.sym3_conjugation()
    qA = quotient("A", s, 4)
    for a, w in word_tuples(6, 2, 4, seed=2, count=300, exhaustive=False):
        assert qA.equal(lambda_prime(s, a, lambda_prime_inverse(s, a, w)), w)
    with pytest.raises(SolutionError):
        lambda_prime_inverse(fixtures.constant(2), (0,), (1,))


# --- cocycles ---

def test_pi_examples():
    s = fixtures.skew_lattice()
    qA = quotient("A", s, 2)
    assert qA.equal(pi(s, (1, 0)), (0, 0))
    assert pi(fixtures.constant(2), (1, 0)) == (1, 1)
    assert pi(s, ()) == ()


def test_pi_prime_examples():
    s = fixtures.skew_lattice()
    qAp = quotient("Ap", s, 2)
    assert qAp.equal(pi_prime(s, (1, 0)), (1, 1))
    assert pi_prime(s, ()) == ()


@pytest.mark.parametrize("name", SMALL + ["sym3_conj"])
def test_closed_forms_match_recursions(name):
    s = fixtures.example(name)
    for (w,) in word_tuples(s.n, 1, 5, seed=3, count=300, exhaustive=False):
        assert pi(s, w) == pi_recursive(s, w)
        assert pi_prime(s, w) == pi_prime_recursive(s, w)
        assert len(pi(s, w)) == len(w)
    assert all(pi(s, (x,)) == (x,) == pi_prime(s, (x,)) for x in range(s.n))


@pytest.mark.parametrize("name", SMALL + ["sym3_conj"])
def test_cocycle_identities(name):
    s = fixtures.example(name)
    qA, qAp = quotient("A", s, 4), quotient("Ap", s, 4)
    for a, b in word_tuples(s.n, 2, 4, seed=4, count=300):
        assert qA.equal(pi(s, a + b), pi(s, a) + lambda_prime(s, a, pi(s, b)))
        assert qAp.equal(pi_prime(s, a + b), rho_prime(s, b, pi_prime(s, a)) + pi_prime(s, b))


def test_pi_inverse():
    s = fixtures.sym3_conjugation()
    for (w,) in word_tuples(6, 1, 5, seed=6, count=200, exhaustive=False):
        assert pi(s, pi_inverse(s, w)) == w
    with pytest.raises(SolutionError):
        pi_inverse(fixtures.constant(2), (0,))


def test_semidirect_examples():
    s = fixtures.skew_lattice()
    qA = quotient("A", s, 4)
    e = f_semidirect(s, (), qA)
    assert e.add_part == () and e.act_part.is_identity()
    f = f_semidirect(s, (1, 0), qA)
    assert f.add_part == qA.normal_form((0, 0)) and f.act_part == Transformation((0, 0, 0))
    sym = fixtures.sym3_conjugation()
    act = f_semidirect(sym, (4,)).act_part
    assert all(act(b) == oracles.sym3_product([4, b, oracles.sym3_inverse(4)]) for b in range(6))


@pytest.mark.parametrize("name", ["skew_lattice", "constant2", "sym3_conj"])
def test_semidirect_homomorphism(name):
    s = fixtures.example(name)
    qA = quotient("A", s, 4)
    for u, v in word_tuples(s.n, 2, 4, seed=7, count=200):
        lhs = f_semidirect(s, u + v, qA)
        rhs = semidirect_multiply(qA, f_semidirect(s, u, qA), f_semidirect(s, v, qA))
        assert lhs == rhs


# --- injectivity / surjectivity ---

def test_constant_cocycle_facts():
    s = fixtures.constant(2)
    qs = {k: quotient(k, s, 4) for k in Kind}
    sur = pi_surjective_at(s, qs[Kind.M], qs[Kind.A], 2)
    assert not sur.holds and sur.witness == (0, 1)
    assert all(pi_injective_at(s, qs[Kind.M], qs[Kind.A], d).holds for d in range(5))


def test_flip_surjective():
    s = fixtures.flip(3)
    qM, qA = quotient("M", s, 3), quotient("A", s, 3)
    assert all(pi_surjective_at(s, qM, qA, d).holds for d in range(4))


def test_skew_lattice_witnesses():
    s = fixtures.skew_lattice()
    qM, qA, qAp = quotient("M", s, 2), quotient("A", s, 2), quotient("Ap", s, 2)
    inj = pi_injective_at(s, qM, qA, 2)
    assert not inj.holds
    assert {qM.class_of(w) for w in inj.witness} == {qM.class_of((1, 0)), qM.class_of((0, 0))}
    sur = pi_surjective_at(s, qM, qA, 2)
    assert not sur.holds and sur.witness == (0, 1)
    inj2 = pi_injective_at(s, qM, qAp, 2, prime=True)
    assert {qM.class_of(w) for w in inj2.witness} == {qM.class_of((1, 0)), qM.class_of((1, 1))}


def test_bijectivity_reports():
    sym = bijectivity_report(fixtures.sym3_conjugation(), 3)
    assert sym.bijective_through(False) and sym.bijective_through(True) and sym.consistent
    c = bijectivity_report(fixtures.constant(2), 4)
    assert all(r.injective for r in c.pi) and not any(r.surjective for r in c.pi[2:])
    assert c.bijective_through(True) and c.consistent


def test_left_nondegenerate_implies_bijective_pi():
    for name in fixtures.example_names():
        s = fixtures.example(name)
        if left_nondegenerate(s) and s.n <= 3:
            assert bijectivity_report(s, 4).bijective_through(False)
