# %% [markdown]
# # Classical identities
#
# Sylvester's refinement of Euler's theorem, the pentagonal number theorem and
# the two theta quotients. Each builder returns both sides truncated at `T`.

# %%
from qpartitions import identities as ids
from qpartitions.qseries import equal_upto

T = 60
lhs, rhs = ids.build_sylvester(T)
print(equal_upto(lhs, rhs, T))
print("q^5:", lhs[5])

# %% [markdown]
# The coefficient a + 2a^2 at q^5 says: one strict partition of 5 with one
# part (5) and two with two parts (4+1, 3+2).
#
# Setting a = -1 gives Euler's product. Its coefficients are 0 or +-1 and sit
# on the generalized pentagonal numbers k(3k-1)/2.

# %%
T = 40
lhs, rhs = ids.build_pentagonal(T)
print(bool(equal_upto(lhs, rhs, T)))
print(", ".join(f"q^{n}: {rhs[n]}" for n in range(T) if rhs[n]))

# %%
for build in (ids.build_theta_gauss, ids.build_theta_jacobi):
    lhs, rhs = build(50)
    nonzero = ", ".join(f"q^{n}: {rhs[n]}" for n in range(50) if rhs[n])
    print(build.__name__, bool(equal_upto(lhs, rhs, 50)))
    print("  ", nonzero)
