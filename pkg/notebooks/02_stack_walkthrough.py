# %% [markdown]
# # How the stack resolves chained intervals
#
# Three interesting intervals in a row share two symbols pairwise, so no
# border can be fixed until the scan reaches a neighbour that shares at most
# one symbol. This collection shows the stack filling and then emptying.

# %%
from optbwt import (
    StringCollection,
    build_bwt,
    build_sap,
    count_runs,
    optimize,
    reduce_sap,
    tuples_from_sap,
)

coll = StringCollection.of("TGA", "CACAA", "AGAGT", "TAA", "CGAGT", "CCA", "TA")
bwt, sa = build_bwt(coll)
sap = build_sap(coll, sa)
red = reduce_sap(bwt, sap)
print("BWT     ", bwt.decode())
print("SAP     ", sap.to_str())
print("reduced ", red.to_str())

# %%
for t in tuples_from_sap(bwt, sap):
    print(t)

# %% [markdown]
# The first three tuples are (A,T), (A,C,G,T) and (C,T). The fourth is the
# single symbol C, which shares only C with the top of the stack. So the top
# must end in C, the middle interval must end in T (the smallest shared
# symbol that is not C), and the first must end in A.

# %%
out = optimize(bwt, sap)
print(out.decode(), count_runs(bwt).r, "->", count_runs(out).r)
assert optimize(bwt, red) == out
