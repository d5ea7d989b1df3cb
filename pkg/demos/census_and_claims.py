"""
Census of small regular digraphs
================================

Regular digraphs on up to eight vertices are enumerated up to isomorphism.
The census then backs a set of named claims that are checked exhaustively.
"""

import time

from dswr.algebra import Poly
from dswr.census import EnumFilter, class_count, claim_names, enumerate_census, verify_claim

X = Poly.x()

# how many k-regular digraphs are there on n vertices?
for n in range(3, 7):
    print(n, [class_count(n, k) for k in range(1, n)])

# the four 2-regular digraphs on six vertices sharing one spectrum
target = (X - 2) * X ** 3 * (X + 1) ** 2
for rec in enumerate_census(EnumFilter(6, 2, True, target)):
    print(f"srd={rec.srd is not None!s:5s} walk-regular={rec.walk_regular!s:5s} "
          f"hoffman={rec.profile.hoffman_monic}  {rec.profile.diag_class}")

print()
for name in claim_names():
    t = time.perf_counter()
    params = None if name == "spectrum-census-6-2" else {"n_max": 5}
    rep = verify_claim(name, params)
    dt = time.perf_counter() - t
    print(f"{name:24s} {'pass' if rep.passed else 'FAIL'}  {dt:5.1f}s  {rep.counts}")
