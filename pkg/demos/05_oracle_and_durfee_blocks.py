# %% [markdown]
# # Brute force and the Durfee square
#
# The oracle lists every partition and sums its monomials, with no series
# arithmetic. It should agree with the product side.

# %%
from qpartitions import combinatorics as comb
from qpartitions import identities as ids
from qpartitions.harness import run_oracle

report = run_oracle("over", 1, 10)
print(report.ok, report.counts)
for p in comb.enum_over(2, 2):
    print(p, p.monomial())

# %% [markdown]
# ## Blocks I-IV
#
# Block I is the N x N Durfee square. Block II holds what sticks out to the
# right of its rows, Block III the parts of size N below it, and Block IV the
# rest.

# %%
p = comb.parse_partition("3[1],2[2],2[1],1[2]")
d = comb.durfee_decompose(p)
print(d.describe())
print(comb.recompose(d) == p)

# %%
over = comb.parse_partition("2[2]~,2[1],1[2]~,1[1],1[1]~")
print(comb.durfee_decompose(over).describe())

# %% [markdown]
# Grouping partitions by N reproduces each summand of the sum side on its own.

# %%
term = ids.overpartition_n_term(2, 2, 9)
for n in range(4, 9):
    print(n, comb.durfee_stratified_poly("over", 2, n, 2) == term[n])

# %%
for r in comb.verify_over_lemmas(3, 12):
    print(r.lemma, r.parts, r.passed)
