"""
A tour of the built-in families
===============================

Each family spec is a short string ``name:key=value,...``.  ``build`` turns
it into a digraph and ``expected_facts`` reports what is known about it in
closed form, which we then compare against a fresh spectral computation.
"""

from dswr.families import build, expected_facts
from dswr.spectral import profile

specs = [
    "cycle:g=5",
    "coclique:sizes=2/1/1",
    "chord:l=4",
    "lvl-odd:m=3,k=2",
    "lvl-even:m=2,k=3",
    "paley:n=7",
    "mate:1",
    "blowup-complement:base=mate:1,q=3",
]

for spec in specs:
    g = build(spec)
    facts = expected_facts(spec)
    p = profile(g)
    agrees = facts.hoffman is None or p.hoffman == facts.hoffman
    k = "-" if p.k is None else p.k
    print(f"{spec:38s} n={g.n:3d} k={k!s:4s} class={str(p.diag_class):16s} hoffman ok={agrees}")

# the graph text format round-trips through the CLI
print()
print(build("cycle:g=4").to_text(), end="")
print(build("cycle:g=4").to_text("edges"), end="")
