"""Quadrants and sign chambers for Sp4.

Run with ``python3 demos/01_sp4_quadrants.py``.  Cells are separated by
``# %%`` so the file also opens as a notebook in editors that understand it.
"""
# %%
from collections import Counter
from fractions import Fraction

from tff import build_root_datum, generate_weyl_group, weight_from_fundamental
from tff.lefschetz import classify_roots
from tff.nilcoh import MIDDLE_PROFILE, kostant_decomposition
from tff.weyl import inverse

c2 = build_root_datum("C", 2)


def word(w):
    return "".join(f"s{i}" for i in w.word) or "e"

print(c2.name, "Cartan matrix", c2.cartan)
print("positive roots (root basis):", c2.positive_roots)

# %% [markdown]
# For the Borel (I = empty) and lambda = 0 every Weyl element gives a
# one-dimensional Kostant module of weight w.0 = w(rho) - rho.  At the middle
# weight nu = -rho, I_nu(w) records the simple roots on which that weight
# lies strictly below nu.

# %%
lam = weight_from_fundamental(c2, (0, 0))
for m in kostant_decomposition(c2, (), lam, MIDDLE_PROFILE):
    coords = ", ".join(str(c) for c in m.highest_weight.coords)
    print(f"{word(m.w):>8}  degree {m.degree}  w.0 = ({coords})  I_nu = {sorted(m.quadrant)}")
print(Counter(frozenset(m.quadrant) for m in kostant_decomposition(c2, (), lam, MIDDLE_PROFILE)))

# %% [markdown]
# The dual picture: a regular torus element in the chamber of w has
# alpha(a) = 2^<alpha, w rho^vee>.  Classifying simple roots as expanding
# (alpha(a) < 1), contracting (alpha(a) > 1) or neutral gives the set
# Delta_P^+ of expanding roots for each chamber.

# %%
chambers = Counter()
for w in generate_weyl_group(c2):
    winv = inverse(c2, w)
    a = {i: Fraction(2) ** int(sum(winv.apply(u))) for i, u in ((1, (1, 0)), (2, (0, 1)))}
    plus, minus, zero = classify_roots(c2, (), a)
    chambers[plus] += 1
    print(f"{word(w):>8}  alpha(a) = {a[1]}, {a[2]}  expanding {sorted(plus)}")
print(chambers)
