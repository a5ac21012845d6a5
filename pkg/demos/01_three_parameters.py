"""dc, dac and psi on a few small digraphs, with the colorings that witness them."""

from diachromatic import Digraph, diachromatic_number, dichromatic_number, pseudoachromatic_number
from diachromatic.families import complete_symmetric, oriented_matching, transitive_tournament

examples = {
    "directed triangle": Digraph(3, [(0, 1), (1, 2), (2, 0)]),
    "transitive tournament on 5": transitive_tournament(5),
    "oriented matching, 6 arcs": oriented_matching(6),
    "complete symmetric on 4": complete_symmetric(4),
}

for name, d in examples.items():
    print(f"{name}: n={d.n} m={d.m}")
    for label, solve in (("dc", dichromatic_number), ("dac", diachromatic_number), ("psi", pseudoachromatic_number)):
        res = solve(d)
        classes = [sorted(c) for c in res.certificate.coloring.classes()]
        print(f"  {label:>3} = {res.value}  classes {classes}")
    print()

# the three numbers always sit in this order
d = examples["transitive tournament on 5"]
assert dichromatic_number(d).value <= diachromatic_number(d).value <= pseudoachromatic_number(d).value
