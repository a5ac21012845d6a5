"""Tournaments: small discordant pieces, and a coloring built out of them."""

from math import log2

from diachromatic.families import (
    discordant_partition_coloring,
    discordant_subtournament,
    random_tournament,
    transitive_coloring,
    circulant_coloring,
    CirculantSpec,
)

print("explicit colorings with ceil(n/2) colors")
print("  TT7:", transitive_coloring(7).coloring.colors)
print("  C7 :", circulant_coloring(CirculantSpec(3, [1, 2, 3])).coloring.colors)
print()

for n in (10, 50, 200):
    t = random_tournament(n, seed=1)
    piece = discordant_subtournament(t)
    bound = 2 * log2((2 * n + 2) / 3)
    print(f"n={n}: anchor {piece.anchor_arc} score {piece.anchor_score}, "
          f"discordant set of size {len(piece.vertices)} (bound {bound:.2f})")
    cert = discordant_partition_coloring(t)
    print(f"       partition coloring: {cert.k} colors, complete={cert.complete} acyclic={cert.acyclic}, "
          f"guaranteed at least {n / bound:.2f}")
