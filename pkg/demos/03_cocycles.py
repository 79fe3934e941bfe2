"""The 1-cocycles pi: M -> A and pi': M -> A', degree by degree.

Run: python demos/03_cocycles.py
"""

# %%
from yangbaxter import bijectivity_report, fixtures, lambda_M, pi, pi_prime, rho_M
from yangbaxter.atlas import cocycle_class
from yangbaxter.words import quotient

sk = fixtures.skew_lattice()
print("pi(1 0) =", pi(sk, (1, 0)), "  pi'(1 0) =", pi_prime(sk, (1, 0)))

# %% Where injectivity and surjectivity fail
rep = bijectivity_report(sk, 3)
for row in rep.pi:
    print(f"d={row.degree} injective={row.injective} surjective={row.surjective}",
          row.injective_witness, row.surjective_witness)

# %% Summary for a few examples
for name in ("constant2", "constant_dual2", "skew_lattice", "sym3_conj", "nat_trunc_4"):
    r = bijectivity_report(fixtures.example(name), 4)
    print(f"{name:15s} pi: {cocycle_class(r):35s} pi': {cocycle_class(r, prime=True)}")

# %% The extended solution on M: a b = lambda_a(b) rho_b(a)
s = fixtures.sym3_conjugation()
qM = quotient("M", s, 5)
a, b = (1, 4), (2, 5, 3)
print(qM.equal(a + b, lambda_M(s, a, b) + rho_M(s, b, a)))
