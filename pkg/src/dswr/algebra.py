"""Exact integer matrices and univariate polynomials over the rationals.

Everything here is exact: scalars are Python ``int`` and
:class:`fractions.Fraction`, never floats.  Matrices are small and dense
(n <= 64), polynomials are dense and stored lowest degree first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class DimensionError(ValueError):
    """Raised for incompatible matrix shapes."""


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def ones(cls, n: int, m: int | None = None) -> IntMatrix:
        m = n if m is None else m
        return cls(n, m, (1,) * (n * m))

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> IntMatrix:
        m = n if m is None else m
        return cls(n, m, (0,) * (n * m))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols)))

    def trace(self) -> int:
        return sum(self.diagonal())

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(list(zip(*self.to_rows()))) if self.rows else self

    def _check_same_shape(self, other: IntMatrix):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mat_mul(self, other)

    def kron(self, other: IntMatrix) -> IntMatrix:
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                orow = other.row(p)
                for a in self.row(i):
                    out.extend(a * b for b in orow)
        return IntMatrix(self.rows * other.rows, self.cols * other.cols, tuple(out))

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_rows()!r})"


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product ``a @ b``."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.entries[j::b.cols] for j in range(b.cols)] if b.cols else []
    out = []
    for i in range(a.rows):
        r = a.row(i)
        # skip zero entries: adjacency matrices are sparse-ish 0/1
        nz = [(x, t) for t, x in enumerate(r) if x]
        for col in bcols:
            out.append(sum(x * col[t] for x, t in nz))
    return IntMatrix(a.rows, b.cols, tuple(out))


def mat_pow(a: IntMatrix, e: int) -> IntMatrix:
    """``a**e`` by repeated squaring, with ``a**0 = I``."""
    if not a.is_square:
        raise DimensionError("matrix power needs a square matrix")
    if e < 0:
        raise ValueError("negative exponent")
    result = IntMatrix.identity(a.rows)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _frac(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``Poly([c0, c1, ..., cd])`` is ``c0 + c1 x + ... + cd x^d``.  Trailing
    zeros are stripped, so the zero polynomial has ``coeffs == ()`` and
    degree -1.  Integer polynomials are the ones where :meth:`is_integral`
    holds; there is no separate class for them.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # construction helpers
    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def monomial(cls, d: int, c: Scalar = 1) -> Poly:
        return cls([0] * d + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Poly:
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_monic(self) -> bool:
        return self.lead == 1

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def monic(self) -> Poly:
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self.lead
        return Poly(c / lc for c in self.coeffs)

    def primitive(self) -> Poly:
        """Integer polynomial with content 1 and positive leading coefficient."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Poly(v // g for v in ints)

    # arithmetic
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly | Scalar) -> Poly:
        other = other if isinstance(other, Poly) else Poly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly | Scalar) -> Poly:
        other = other if isinstance(other, Poly) else Poly([other])
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Poly:
        return Poly([other]) - self

    def __mul__(self, other: Poly | Scalar) -> Poly:
        if not isinstance(other, Poly):
            c = _frac(other)
            return Poly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        result = Poly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other: Poly):
        return poly_divrem(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return poly_divrem(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return poly_divrem(self, other)[1]

    def __call__(self, x):
        """Horner evaluation at a scalar."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def compose_linear(self, a: Scalar, b: Scalar) -> Poly:
        """Return ``p(a x + b)``."""
        lin = Poly([b, a])
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def eval_matrix(self, a: IntMatrix) -> IntMatrix:
        """Horner evaluation at an integer matrix; requires integer coefficients."""
        cs = self.int_coeffs()
        n = a.rows
        acc = IntMatrix.zeros(n)
        eye = IntMatrix.identity(n)
        for c in reversed(cs):
            acc = mat_mul(acc, a) + eye.scale(c)
        return acc

    def __repr__(self) -> str:
        return f"Poly({[str(c) if c.denominator != 1 else int(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = "" if mag == 1 else f"{mag}*"
                body += "x" if i == 1 else f"x^{i}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``f = q g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    lc = g.lead
    if len(r) - 1 < dg:
        return Poly(), Poly(r)
    q = [Fraction(0)] * (len(r) - dg)
    gc = g.coeffs
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if not c:
            continue
        c = c / lc
        q[i - dg] = c
        for j in range(dg + 1):
            r[i - dg + j] -= c * gc[j]
    return Poly(q), Poly(r[:dg])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, (a % b).primitive()
    return a.monic()


def x_pow_mod(e: int, m: Poly) -> Poly:
    """Remainder of ``x**e`` modulo ``m``; stays integral when ``m`` is monic integral."""
    if m.is_zero():
        raise ZeroDivisionError("modulus is zero")
    result = Poly([1]) % m
    base = Poly.x() % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result


def squarefree_part(f: Poly) -> Poly:
    """``f / gcd(f, f')`` made monic: one factor per distinct root."""
    if f.degree <= 0:
        return Poly([1])
    return (f // poly_gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``f = c * prod(g_i ** i)`` with squarefree, coprime ``g_i``."""
    if f.degree <= 0:
        return []
    out = []
    a0 = poly_gcd(f, f.derivative())
    b = f // a0
    c = f.derivative() // a0
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b // a
        c = d // a
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


# ---------------------------------------------------------------------------
# Root counting
# ---------------------------------------------------------------------------


def _scale_positive(p: Poly) -> Poly:
    """Divide out the content by a positive constant, keeping every sign."""
    if p.is_zero():
        return p
    prim = p.primitive()
    return prim if _sign(prim.lead) == _sign(p.lead) else -prim


def sturm_sequence(f: Poly) -> list[Poly]:
    """Sturm chain of ``f``; each term rescaled by a positive constant."""
    seq = [_scale_positive(f), _scale_positive(f.derivative())]
    while seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(_scale_positive(-r))
    return [p for p in seq if not p.is_zero()]


def _sign_changes(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def distinct_real_roots(f: Poly) -> int:
    """Number of distinct real roots, by a Sturm chain on ``f``."""
    if f.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if f.degree <= 0:
        return 0
    seq = sturm_sequence(squarefree_part(f))
    at_neg = _sign_changes(_sign(p.lead) * (-1) ** p.degree for p in seq)
    at_pos = _sign_changes(_sign(p.lead) for p in seq)
    return at_neg - at_pos


def real_root_count(f: Poly, with_multiplicity: bool = False) -> int:
    """Count real roots; optionally with multiplicity via squarefree decomposition."""
    if f.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if not with_multiplicity:
        return distinct_real_roots(f)
    return sum(i * distinct_real_roots(g) for g, i in squarefree_decomposition(f))


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    return small + large[::-1]


def rational_roots(f: Poly) -> dict[Fraction, int]:
    """All rational roots of ``f`` with multiplicities.

    Candidates ``p/q`` come from the rational root theorem applied to the
    squarefree part; multiplicities come from repeated deflation of ``f``.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    roots: dict[Fraction, int] = {}
    g = f.primitive()
    # zero roots
    z = 0
    while g.degree > 0 and g.coeffs[0] == 0:
        g = Poly(g.coeffs[1:])
        z += 1
    if z:
        roots[Fraction(0)] = z
    if g.degree <= 0:
        return roots
    s = squarefree_part(g).primitive()
    a0, an = int(s.coeffs[0]), int(s.lead)
    cands = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in sorted(cands):
        if s(r) != 0:
            continue
        lin = Poly([-r, 1])
        mult = 0
        while True:
            q_, rem = poly_divrem(g, lin)
            if not rem.is_zero():
                break
            g = q_
            mult += 1
        roots[r] = mult
    return dict(sorted(roots.items()))


# ---------------------------------------------------------------------------
# Characteristic and minimal polynomials
# ---------------------------------------------------------------------------


def char_poly(a: IntMatrix) -> Poly:
    """Monic characteristic polynomial ``det(xI - A)`` by Faddeev-LeVerrier.

    For integer ``A`` every intermediate matrix and coefficient stays
    integral, so the divisions below are exact integer divisions.
    """
    if not a.is_square:
        raise DimensionError("characteristic polynomial needs a square matrix")
    n = a.rows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = IntMatrix.zeros(n)
    eye = IntMatrix.identity(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m) + eye.scale(coeffs[n - k + 1])
        t = mat_mul(a, m).trace()
        if t % k:
            raise ArithmeticError("non-integral Faddeev-LeVerrier step")
        coeffs[n - k] = -t // k
    return Poly(coeffs)


def min_poly(a: IntMatrix) -> Poly:
    """Monic minimal polynomial from the first linear dependence among I, A, A^2, ...

    Powers are flattened to vectors of length n^2 and reduced against an
    echelon basis over the rationals.  The result has integer coefficients
    (it divides the characteristic polynomial, a monic integer polynomial).
    """
    if not a.is_square:
        raise DimensionError("minimal polynomial needs a square matrix")
    n = a.rows
    if n == 0:
        return Poly([1])
    basis: list[tuple[int, list[Fraction], list[Fraction]]] = []  # (pivot, vec, combo)
    power = IntMatrix.identity(n)
    for d in range(n + 1):
        vec = [Fraction(x) for x in power.entries]
        combo = [Fraction(0)] * d + [Fraction(1)]
        for piv, bvec, bcombo in basis:
            c = vec[piv]
            if c:
                vec = [v - c * b for v, b in zip(vec, bvec)]
                combo = [x - c * (bcombo[i] if i < len(bcombo) else 0) for i, x in enumerate(combo)]
        piv = next((i for i, v in enumerate(vec) if v), None)
        if piv is None:
            p = Poly(combo)
            if not p.is_integral():
                raise ArithmeticError("minimal polynomial came out non-integral")
            return p
        inv = 1 / vec[piv]
        vec = [v * inv for v in vec]
        combo = [x * inv for x in combo]
        # keep basis fully reduced at existing pivots
        new_basis = []
        for bpiv, bvec, bcombo in basis:
            c = bvec[piv]
            if c:
                bvec = [x - c * y for x, y in zip(bvec, vec)]
                width = max(len(bcombo), len(combo))
                bcombo = [
                    (bcombo[i] if i < len(bcombo) else 0) - c * (combo[i] if i < len(combo) else 0)
                    for i in range(width)
                ]
            new_basis.append((bpiv, bvec, bcombo))
        basis = new_basis + [(piv, vec, combo)]
        power = mat_mul(power, a)
    raise ArithmeticError("no dependence found among n+1 powers")  # Cayley-Hamilton forbids this
