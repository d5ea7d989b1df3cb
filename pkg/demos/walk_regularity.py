"""
Deciding strong walk-regularity
===============================

A digraph is strongly l-walk-regular when A^l + (mu - lambda) A + (mu - nu) I
equals mu J.  There are two independent ways to decide it: compute A^l
directly, or reduce x^l modulo the Hoffman polynomial.  Both must agree.
"""

from dswr.families import build
from dswr.spectral import profile
from dswr.swr import (
    check_direct,
    check_divisibility,
    classify_mu0,
    detect_infinite_family,
    exponent_set,
    verify_parameter_identities,
)

g = build("blowup-complement:base=mate:1,q=3")
p = profile(g)
print("Hoffman polynomial (monic):", p.hoffman_monic)

direct = check_direct(g, 3)
witness = check_divisibility(p, 3)
print("direct route:      ", direct.params)
print("divisibility route:", witness.certificate().params, f"(e={witness.e}, f={witness.f})")

# only l = 3 works, at least up to 50
print("exponents up to 50:", exponent_set(g, 50, p).explicit)

rep = verify_parameter_identities(direct, p)
for name, ok in rep.checks:
    print(f"  {name:28s} {'ok' if ok else 'FAILED'}")

# an infinite family: the Lam-Van Lint digraph with A^3 = J - I
lvl = build("lvl-odd:m=3,k=2")
fam = detect_infinite_family(lvl)
print("\nLam-Van Lint:", fam.kind, "modulus", fam.modulus, "residues", fam.residues)
print("exponents up to 20:", exponent_set(lvl, 20).explicit)

# mu = 0 digraphs fall into a short list of shapes
for spec, l in (("cycle:g=5", 6), ("coclique:sizes=2/1/3", 4), ("chord:l=5", 5), ("chord:l=5,chords=2", 5)):
    print(f"{spec:22s} l={l}: {classify_mu0(build(spec), l).kind}")
