"""Word problems in M(X,r), A(X,r) and A'(X,r) up to a fixed degree.

All defining relations have length two on both sides, so the classes of
words of length d can be found by closing X^d under single rewrites.

Run: python demos/02_structure_monoids.py
"""

# %%
from yangbaxter import fixtures, quotient, relations

sk = fixtures.skew_lattice()
for kind in ("M", "A", "Ap"):
    print(kind, relations(kind, sk))

# %% Classes, normal forms and growth
qM = quotient("M", sk, 4)
print("degree-2 classes of M:", qM.classes(2))
print("normal form of 2 1:", qM.normal_form((2, 1)))
print("growth of M:", qM.growth())

# %% Free and free abelian cases
print("identity map, M:", quotient("M", fixtures.identity_map(2), 5).growth())
print("flip on 3 points, A:", quotient("A", fixtures.flip(3), 5).growth())

# %% Sym3: a left factor makes two cubes equal, although the cubes differ
q = quotient("M", fixtures.sym3_conjugation(), 4)
print("(1,2)(1,2,3)^3 == (1,2)(1,3,2)^3:", q.equal((1, 4, 4, 4), (1, 5, 5, 5)))
print("(1,2,3)^3 == (1,3,2)^3:", q.equal((4, 4, 4), (5, 5, 5)))
print("growth:", q.growth())
