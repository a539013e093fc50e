# %% [markdown]
# # Five BWTs of the same five strings
#
# The multidollar BWT of a collection depends on the order in which the
# strings are given. Here we build it for the input order, lexicographic
# order and colex order, then rewrite the input-order BWT twice: once by
# grouping characters inside each SAP-interval, once with the run-minimal
# rewrite.

# %%
from optbwt import StringCollection, build_bwt, build_sap, count_runs, intervals, variants

coll = StringCollection.of("TCGA", "GGAA", "TCCT", "TTCT", "GCCT")
bwt, sa = build_bwt(coll)
sap = build_sap(coll, sa)

# %% [markdown]
# Sorted suffixes next to the SAP bit and the BWT character. A set bit means
# the suffix equals the one above it once the end markers are dropped.

# %%
for (suffix, bit, c) in zip(sa.suffixes(coll), sap.to_str(), bwt.decode()):
    print(f"{suffix.decode() + '$':>7}  {bit}  {c}")

# %%
for iv in intervals(bwt, sap):
    if iv.interesting:
        print(iv, bwt[iv.begin:iv.end].decode())

# %% [markdown]
# Only the characters inside interesting intervals can move. The rewrite
# keeps every interval's content and only changes where runs meet.

# %%
for name, b in variants(coll).items():
    print(f"{name:>6}  {b.decode()}  r={count_runs(b).r}")
