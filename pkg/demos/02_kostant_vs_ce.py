"""Kostant's theorem against a brute-force Chevalley-Eilenberg computation.

Run with ``python3 demos/02_kostant_vs_ce.py``.
"""
# %%
from tff import build_root_datum, weight_from_fundamental
from tff.nilcoh import graded_dimensions, kostant_decomposition
from tff.oracle import ce_cohomology, compare_with_kostant

a2 = build_root_datum("A", 2)

# %% [markdown]
# H^*(n, E) for the Borel of SL3 with the adjoint representation E = V(1,1).
# Kostant predicts one line per Weyl element, in degree l(w), of weight w.lambda.

# %%
lam = weight_from_fundamental(a2, (1, 1))
for m in kostant_decomposition(a2, (), lam):
    print(f"degree {m.degree}: weight {m.highest_weight.coords}")
print("Kostant dimensions:", graded_dimensions(a2, (), lam))

# %% [markdown]
# The oracle builds sl3 as matrices, the nilradical n as strictly upper
# triangular matrices, and computes the cohomology of Hom(Lambda^* n, E)
# weight block by weight block with exact rational rank.

# %%
report = ce_cohomology(a2, (), (1, 1))
print("CE dimensions:     ", report.dimensions)
print(compare_with_kostant(a2, (), (1, 1), report))
print(report.to_csv())

# %% [markdown]
# A maximal parabolic: the Levi GL2 acts on each cohomology group, and the
# Kostant representatives W^1_P are the three minimal coset representatives.

# %%
report = ce_cohomology(a2, (1,), (1, 1))
print(report.dimensions, compare_with_kostant(a2, (1,), (1, 1), report))
