"""The greedy procedure lands between dc and dac; the size of a digraph caps psi."""

from diachromatic import dichromatic_number, diachromatic_number, greedy_coloring
from diachromatic.families import matching_coloring, oriented_matching, random_digraph
from diachromatic.solver import size_bound

for seed in range(5):
    d = random_digraph(7, 0.3, seed)
    g = greedy_coloring(d)
    lo, hi = dichromatic_number(d).value, diachromatic_number(d).value
    print(f"seed {seed}: m={d.m:2d} dc={lo} greedy={g.k} dac={hi}")
    assert lo <= g.k <= hi and g.acyclic and g.complete

# Oriented matchings meet the size bound exactly, and the coloring is explicit.
print()
for m in (1, 2, 3, 6, 12, 20):
    cert = matching_coloring(m)
    print(f"matching of size {m:2d}: k={cert.k} bound={size_bound(m)} complete={cert.complete}")
    if m <= 6:
        assert diachromatic_number(oriented_matching(m)).value == cert.k
