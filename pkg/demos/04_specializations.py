# %% [markdown]
# # Specializations of the overpartition identity
#
# Substituting into both sides of one identity gives another identity. Here we
# check that the substituted sides agree with builders written independently.

# %%
from qpartitions import identities as ids
from qpartitions.identities import strict_limit_series

T = 30
over = ids.build_overpartition_cft(2, T)
cauchy = ids.build_cauchy_multi(2, T)
zero = {"z1": 0, "z2": 0}
print("z = 0:", over.lhs.substitute(zero) == cauchy.lhs, over.rhs.substitute(zero) == cauchy.rhs)

# %%
one_color = ids.build_overpartition_cft(1, T)
dk = ids.build_dousse_kim(T)
print("z = 1:", one_color.lhs.substitute({"z1": 1}) == dk.lhs)
gauss = ids.build_theta_gauss(T)
print("then a = -1:", dk.rhs.substitute({"a1": -1}) == gauss.rhs)

# %% [markdown]
# The q -> q^2 variant counts partitions whose even parts are distinct. With a = -1
# and z = 1 it collapses to the triangular-number theta series.

# %%
ped = ids.build_ped(1, T)
jacobi = ids.build_theta_jacobi(T)
print("ped:", ped.lhs.substitute({"a1": -1, "z1": 1}) == jacobi.lhs)

# %% [markdown]
# Letting z_j -> infinity after a_j -> a_j / z_j keeps only the partitions in
# which every part is overlined, which is the strict identity again.

# %%
plain = ids.build_alladi(2, 20)
over = ids.build_overpartition_cft(2, 20)
print("strict limit:", strict_limit_series(over.lhs) == plain.lhs, strict_limit_series(over.rhs) == plain.rhs)
