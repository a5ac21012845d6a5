"""Collapsing a digraph one identification at a time, down to a complete symmetric digraph."""

from diachromatic import dichromatic_number
from diachromatic.dihom import elementary_image, image_with_dichromatic, interpolation_sequence
from diachromatic.digraph import Digraph, format_dgr
from diachromatic.families import transitive_tournament

t = transitive_tournament(7)
seq = interpolation_sequence(t)
print(f"TT7 collapses in {len(seq)} steps to the complete symmetric digraph on {seq.target.n} vertices")
for step, image in zip(seq.steps, seq.images[1:]):
    print(f"  identify {step.u_label} into {step.v_label}: n={image.n} dc={dichromatic_number(image).value}")

# every value between dc and dac shows up along the way
for level in range(1, seq.target.n + 1):
    image = image_with_dichromatic(t, level, seq)
    print(f"image with dc={level}: {image.n} vertices, {image.m} arcs")

# Identifying the two ends of a path creates a 2-cycle: dc goes up even
# though an optimal coloring already gives the two ends the same color.
path = Digraph(3, [(0, 1), (1, 2)])
print()
print(format_dgr(elementary_image(path, 0, 2)), end="")
