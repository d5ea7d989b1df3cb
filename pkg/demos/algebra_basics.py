"""
Exact polynomials and matrices
==============================

Everything downstream rests on exact integer and rational arithmetic.  This
script builds a small matrix, computes its characteristic and minimal
polynomials, and counts real roots with a Sturm sequence.
"""

from dswr.algebra import IntMatrix, Poly, char_poly, min_poly, rational_roots, real_root_count, sturm_sequence, x_pow_mod

X = Poly.x()

# a 3x3 integer matrix with a repeated eigenvalue
a = IntMatrix.from_rows([[2, 1, 0], [0, 2, 0], [0, 0, 3]])
cp = char_poly(a)
mp = min_poly(a)
print("charpoly:", cp)
print("minpoly: ", mp)

# Cayley-Hamilton, checked exactly
print("p(A) == 0:", cp.eval_matrix(a) == IntMatrix.zeros(3))

# the minimal polynomial keeps the Jordan block, so its degree is 3 here
print("degree of minpoly:", mp.degree)

# real roots, with and without multiplicity
p = (X - 1) ** 2 * (X + 2) * (X ** 2 + 1)
print(p, "has", real_root_count(p), "distinct real roots,",
      real_root_count(p, with_multiplicity=True), "with multiplicity")
print("Sturm chain length:", len(sturm_sequence(p)))

# rational roots come with their multiplicities
print("rational roots:", dict(rational_roots(p)))

# x^n mod (x^2 - x - 1) is F(n) x + F(n-1), Fibonacci numbers
print("x^30 mod (x^2 - x - 1):", x_pow_mod(30, X ** 2 - X - 1))
