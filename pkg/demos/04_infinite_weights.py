"""Weight profiles nu = +infinity and -infinity, closed form against finite proxy.

Run with ``python3 demos/04_infinite_weights.py``.
"""
# %%
from importlib.resources import files

from tff.dataset import load_dataset
from tff.lefschetz import infinite_weight_value, lefschetz_number, proxy_lefschetz
from tff.nilcoh import WeightProfile, proxy_profile

# %% [markdown]
# The shipped C2 fixture evaluated at the middle weight and at both
# infinite profiles.  At +/- infinity the gate keeps only the classes whose
# normal directions all expand (resp. all contract).

# %%
ds = load_dataset(files("tff") / "data" / "c2_middle.json")
print("middle:", lefschetz_number(ds))
for kind in ("plus-inf", "minus-inf"):
    d = ds.with_nu(WeightProfile.parse(kind))
    print(kind, "closed form:", infinite_weight_value(d))
    print(kind, "finite proxy", proxy_profile(d.root_datum, d.lambda_weight, d.nu), ":", proxy_lefschetz(d))
