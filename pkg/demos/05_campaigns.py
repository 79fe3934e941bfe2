"""Exhaustive checks over every small solution.

The Rump campaign at n = 3 walks 4.25 million candidates and takes about a
minute on one core; pass --full to include it.

Run: python demos/05_campaigns.py [--full]
"""

# %%
import sys

from yangbaxter import atlas

for n in (1, 2, 3):
    print(f"n={n}: {sum(1 for _ in atlas.enumerate_nondegenerate(n))} non-degenerate solutions")

# %% Irretractable => bijective, with the map h
rep = atlas.campaign_main_irr(3)
print(rep.counts, "violations:", len(rep.violations))

# %% pi bijective <=> left non-degenerate, over every map pair at n = 2
rep = atlas.campaign_cocycle(2, 4)
print(rep.counts, rep.parameters["fixtures"])

# %% Growth of A for involutive solutions
print(atlas.campaign_free_abelian(3, 5).counts)

# %% Isomorphism classes at n = 3
classes = {atlas.canonical_label(s).canonical for s in atlas.enumerate_nondegenerate(3)}
print(len(classes), "isomorphism classes of non-degenerate solutions on 3 points")

# %%
if "--full" in sys.argv:
    print(atlas.campaign_rump(3))
else:
    print(atlas.campaign_rump(2).counts)
