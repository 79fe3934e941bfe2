"""Checking a candidate map r(x, y) = (sigma_x(y), gamma_y(x)) on a small set.

Run: python demos/01_checking_solutions.py
"""

# %% Build a solution from a formula and inspect it
from yangbaxter import fixtures, from_map, properties
from yangbaxter.solution import check_braid_direct, dual, fixed_pairs, h_map, rump_conditions

# The conjugation solution on Sym3, r(a, b) = (a b a^-1, a).
s = fixtures.sym3_conjugation()
print("labels:", dict(enumerate(fixtures.SYM3_NAMES)))
print(properties(s))

# %% Any Python callable on pairs can be turned into tables
twist = from_map(3, lambda x, y: ((y + 1) % 3, (x - 1) % 3))
print("twist is a solution:", check_braid_direct(twist))

# A broken one, and the first failing triple
bad = from_map(2, lambda x, y: (x ^ y, x))
rep = properties(bad)
print("bad:", rep.is_ybe, rep.failed_check, rep.counterexample)

# %% Rump's operations give an alternative test when every gamma_y is bijective
print("R1, R2, R3 for Sym3:", rump_conditions(s))

# %% The dual swaps the roles of sigma and gamma
c = fixtures.constant(2)
print("constant r(0,1) =", c.r(0, 1), " dual r(0,1) =", dual(c).r(0, 1))

# %% The map h and fixed pairs of an irretractable solution
print("h =", h_map(s).image)
print("fixed pairs:", fixed_pairs(s))
