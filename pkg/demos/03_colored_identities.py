# %% [markdown]
# # Colored partitions: strict parts and overpartitions
#
# With r colors, the product side of the strict identity is
# prod_j (-a_j q; q)_inf. The sum side runs over the size N of the Durfee
# square, so only N with N^2 < T contribute below q^T.

# %%
from qpartitions import IdentitySpec, build, identities as ids
from qpartitions.harness import run_verify
from qpartitions.qseries import equal_upto

for r, T in [(1, 40), (2, 30), (3, 20)]:
    report = run_verify(IdentitySpec("alladi", r, T))
    print(r, T, report.status, f"{report.terms_built} outer terms, {report.elapsed:.2f}s")

# %%
lhs, rhs = ids.build_alladi(2, 6)
for n in range(6):
    print(f"q^{n}: {lhs[n]}")

# %% [markdown]
# Overpartitions may overline the last copy of each (size, color) run. The
# marker z_j counts overlined parts of color j.

# %%
lhs, rhs = build(IdentitySpec("overpartition_cft", 2, 20))
print(equal_upto(lhs, rhs, 20))
print("q^2:", lhs[2])

# %% [markdown]
# The same machinery also counts parts: in the y-refined form every monomial
# has y-degree equal to its total a-degree.

# %%
lhs, rhs = ids.build_alladi_y(2, 24)
print(bool(equal_upto(lhs, rhs, 24)))
print("q^4:", lhs[4])
