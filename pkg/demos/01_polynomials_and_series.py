# %% [markdown]
# # Exact polynomials and truncated q-series
#
# Everything in `qpartitions` is exact. Coefficients are Python integers, so
# nothing overflows and nothing rounds. Polynomials live in the color variables
# `a1, a2, ...`, the overline markers `z1, z2, ...` and the part counter `y`.

# %%
from qpartitions import MultiPoly, QSeries, a, parse_poly, z
from qpartitions.qseries import equal_upto, poch_finite, poch_infinite, unit_inv

p = (1 + a(1)) * (1 + a(1) * z(1))
print(p)
print(parse_poly("a1^2*z1 + a1*z1 + a1 + 1") == p)

# %% [markdown]
# Terms print in one fixed order, so equal polynomials always give equal text.
# Substitution binds symbols, given by name or as `Symbol`, to integers.

# %%
print(p.substitute({"z1": 1}))
print(p.substitute({"a1": -1}))
print(p.substitute({"a1": 2, "z1": 3}))

# %% [markdown]
# ## Series
#
# A `QSeries` keeps the coefficients of q^0 .. q^(T-1). Here is the finite
# product (-a q; q)_3 = (1 + a q)(1 + a q^2)(1 + a q^3):

# %%
T = 10
f = poch_finite(a(1), 1, 1, 3, T)
for n in range(T):
    if f[n]:
        print(f"q^{n}: {f[n]}")

# %% [markdown]
# Infinite products are cut at the order. Since (q;q)_inf has constant term 1
# it is a unit, and its inverse counts ordinary partitions.

# %%
euler = poch_infinite(-1, 1, 1, 16)
partitions = unit_inv(euler)
print(", ".join(str(partitions[n]) for n in range(16)))
print(bool(equal_upto(euler * partitions, QSeries.one(16), 16)))

# %% [markdown]
# A failed comparison reports the first exponent where the sides differ:

# %%
wrong = partitions + QSeries.monomial(MultiPoly(1), 7, 16)
print(equal_upto(partitions, wrong, 16))
