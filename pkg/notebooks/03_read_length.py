# %% [markdown]
# # Run counts against read length at fixed coverage
#
# Reads are sliced out of a random reference at random positions. Longer
# reads at the same coverage mean fewer reads, fewer shared suffixes and
# fewer characters that reordering can move, so the gap between the input
# order and the optimum shrinks.

# %%
import time

from optbwt import compare, random_reference, sample_reads

reference = random_reference(100_000, seed=7)

# %%
print(f"{'len':>4} {'reads':>7} {'n':>9} " + " ".join(f"{v:>8}" for v in ("input", "dolE", "colex", "sap", "opt")))
for length in (50, 75, 100, 125, 150):
    reads = sample_reads(reference, length, coverage=10, seed=length)
    t0 = time.perf_counter()
    report = compare(reads)
    runs = report.runs()
    print(f"{length:>4} {reads.k:>7} {reads.total_len:>9} "
          + " ".join(f"{runs[v]:>8}" for v in ("input", "dolE", "colex", "sap", "opt"))
          + f"   input/opt {float(report.factor('input')):.2f}  ({time.perf_counter() - t0:.1f} s)")
