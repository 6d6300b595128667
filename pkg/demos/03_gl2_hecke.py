"""The GL2 Hecke correspondence diag(p, 1): fixed points and Lefschetz number.

Run with ``python3 demos/03_gl2_hecke.py``.
"""
# %%
from tff.lefschetz import lefschetz_number, stratum_breakdown, validate_dataset
from tff.oracle import build_gl2_dataset, count_elliptic_classes, reduced_forms
from tff.oracle.forms import elliptic_traces

# %% [markdown]
# Interior fixed points are GL2(Z)-classes of integral matrices with
# determinant p and elliptic trace t (t^2 < 4p).  These are counted by
# reduced binary quadratic forms of discriminant t^2 - 4p.

# %%
p = 5
for t in elliptic_traces(p):
    d = t * t - 4 * p
    print(f"t = {t:>2}  D = {d:>4}  forms {reduced_forms(d)}  classes {count_elliptic_classes(p, t)}")

# %% [markdown]
# With trivial coefficients and chi_c = 1 at every fixed point, each interior
# class contributes 1 and the two boundary cosets diag(p,1), diag(1,p)
# contribute through the Kostant sum.

# %%
ds = build_gl2_dataset(3, lambda label: 1)
print(validate_dataset(ds))
for levi, value in stratum_breakdown(ds):
    print(f"P = {sorted(levi)}: {value}")
print("L =", lefschetz_number(ds))
