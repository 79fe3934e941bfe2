"""The left cancellative quotient of (M, +) inside a degree window, and the
solution it carries.

Run: python demos/04_cancellative_quotient.py
"""

# %%
from itertools import product

from yangbaxter import QuotientMonoid, eta_window, fixtures, r_bar
from yangbaxter.cancellative import (
    c_of,
    congruence_checks,
    injective_solution,
    is_left_cancellative_within,
)

s = fixtures.sym3_conjugation()
ew = eta_window(s, max_degree=4, witness_bound=1)
print(ew)
for m in ew.merges[:8]:
    print(m)

# %% Properties of the window
qm = QuotientMonoid(ew)
print("left cancellative in window:", is_left_cancellative_within(qm))
print("X embeds:", injective_solution(s, ew))
print("congruence checks:", congruence_checks(ew).ok)

# %% c(a, b) with a + b = b + c, and the induced solution on letters
print("c(4, 1) =", c_of(qm, (4,), (1,)))
same = all(r_bar(qm, (a,), (b,)) == tuple((v,) for v in s.r(a, b)) for a, b in product(range(6), repeat=2))
print("r-bar restricted to letters equals r:", same)
