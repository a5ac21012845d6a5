"""Running the law checker on a corpus, as the verify subcommand does."""

from diachromatic import laws

corpus = laws.parse_corpus("exhaustive:3") + laws.parse_corpus("random:5,60,7")
print(f"{len(corpus)} digraphs")
reports = laws.run_laws(["chain", "half_bound", "asymmetric_half", "dac_dc_gap", "nordhaus_gaddum"], corpus)
for r in reports:
    print(r.line())
    for v in r.violations[:1]:
        print(f"  e.g. {v.digraph} {v.values}")
