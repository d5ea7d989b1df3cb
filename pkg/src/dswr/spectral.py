"""Spectral profile of a digraph: characteristic, minimal and Hoffman polynomials.

The Hoffman polynomial exists exactly for strongly connected regular
digraphs.  With minimal polynomial ``(x - k) * hbar(x)`` it equals
``n / hbar(k) * hbar(x)``; :func:`profile` checks ``h(A) == J`` before
returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .algebra import IntMatrix, Poly, char_poly, mat_mul, min_poly, poly_divrem, poly_gcd, real_root_count
from .digraph import Digraph, is_strongly_connected, regularity

SCHEMA = "swr/1"


class InvariantViolation(RuntimeError):
    """An internal algebraic identity failed; signals a bug, not bad input."""


@dataclass(frozen=True)
class DiagClass:
    """``Diagonalizable``, ``DTheta`` (one double root ``theta``), or ``Other``."""

    tag: str
    theta: int | None = None

    def __str__(self) -> str:
        return f"DTheta({self.theta})" if self.tag == "DTheta" else self.tag

    @classmethod
    def parse(cls, s: str) -> DiagClass:
        if s.startswith("DTheta(") and s.endswith(")"):
            return cls("DTheta", int(s[7:-1]))
        if s in ("Diagonalizable", "Other"):
            return cls(s)
        raise ValueError(f"unknown diagonalizability class {s!r}")


DIAGONALIZABLE = DiagClass("Diagonalizable")
OTHER = DiagClass("Other")


def diag_class(minpoly: Poly) -> DiagClass:
    """Classify by ``s = gcd(m, m')`` without factoring ``m``."""
    if minpoly.degree < 1 or not minpoly.is_monic():
        raise ValueError("expected a monic nonconstant minimal polynomial")
    s = poly_gcd(minpoly, minpoly.derivative())
    if s.degree == 0:
        return DIAGONALIZABLE
    if s.degree == 1:
        theta = -s.coeffs[0]
        if theta.denominator == 1:
            cube = Poly([-theta, 1]) ** 3
            if not (minpoly % cube).is_zero():
                return DiagClass("DTheta", int(theta))
    return OTHER


@dataclass(frozen=True)
class SrdParameters:
    n: int
    k: int
    t: int
    lam: int
    mu: int

    @property
    def nonexceptional(self) -> bool:
        return 0 < self.t < self.k

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.n, self.k, self.t, self.lam, self.mu)


@dataclass(frozen=True)
class SpectralProfile:
    n: int
    k: int | None
    regular: bool
    strongly_connected: bool
    charpoly: Poly
    minpoly: Poly
    hoffman: Poly | None
    diag_class: DiagClass

    @property
    def hoffman_monic(self) -> Poly | None:
        """``hbar(x)``, the monic integer polynomial with ``minpoly = (x-k) hbar``."""
        return None if self.hoffman is None else self.hoffman.monic()

    @property
    def hoffman_absent_reason(self) -> str | None:
        if self.hoffman is not None:
            return None
        if not self.regular:
            return "not regular"
        return "not strongly connected"

    @cached_property
    def distinct_eigenvalue_count(self) -> int:
        s = poly_gcd(self.minpoly, self.minpoly.derivative())
        return self.minpoly.degree - s.degree

    @property
    def all_real(self) -> bool:
        return real_root_count(self.charpoly, with_multiplicity=True) == self.n

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "profile",
            "n": self.n,
            "k": self.k,
            "regular": self.regular,
            "strongly_connected": self.strongly_connected,
            "charpoly": self.charpoly.int_coeffs(),
            "minpoly": self.minpoly.int_coeffs(),
            "hoffman": None if self.hoffman is None else poly_to_json(self.hoffman),
            "hoffman_monic": None if self.hoffman is None else self.hoffman_monic.int_coeffs(),
            "hoffman_absent_reason": self.hoffman_absent_reason,
            "diag_class": str(self.diag_class),
            "distinct_eigenvalues": self.distinct_eigenvalue_count,
            "all_eigenvalues_real": self.all_real,
        }


def poly_to_json(p: Poly) -> list:
    """Coefficients lowest first; integers as ints, other rationals as ``"p/q"``."""
    return [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in p.coeffs]


def poly_from_json(cs: list) -> Poly:
    return Poly(Fraction(c) if isinstance(c, str) else c for c in cs)


def hoffman_from_minpoly(minpoly: Poly, n: int, k: int) -> Poly:
    """``n / hbar(k) * hbar`` where ``minpoly = (x - k) hbar``."""
    hbar, rem = poly_divrem(minpoly, Poly([-k, 1]))
    if not rem.is_zero():
        raise InvariantViolation(f"degree {k} is not a root of the minimal polynomial")
    return hbar * Fraction(n, 1) * (1 / hbar(k))


def profile(g: Digraph) -> SpectralProfile:
    a = g.matrix
    reg = regularity(g)
    sc = is_strongly_connected(g)
    cp = char_poly(a)
    mp = min_poly(a)
    if not (cp % mp).is_zero():
        raise InvariantViolation("minimal polynomial does not divide the characteristic polynomial")
    hoff = None
    if reg.is_regular and sc:
        hoff = hoffman_from_minpoly(mp, g.n, reg.k)
        check_hoffman(a, hoff)
    dc = diag_class(mp) if mp.degree >= 1 else DIAGONALIZABLE
    return SpectralProfile(
        n=g.n,
        k=reg.k,
        regular=reg.is_regular,
        strongly_connected=sc,
        charpoly=cp,
        minpoly=mp,
        hoffman=hoff,
        diag_class=dc,
    )


def check_hoffman(a: IntMatrix, hoffman: Poly) -> None:
    """Raise unless ``hoffman(A) == J`` exactly."""
    hbar = hoffman.monic()
    scale = hoffman.lead  # hoffman = scale * hbar
    val = hbar.eval_matrix(a)
    # scale * val == J  <=>  num * val == den * J
    num, den = scale.numerator, scale.denominator
    if any(num * x != den for x in val.entries):
        raise InvariantViolation("Hoffman polynomial does not evaluate to J")


def is_walk_regular(g: Digraph, lmax: int = 2) -> bool:
    """``A^l`` has constant diagonal for every ``2 <= l <= max(lmax, n)``."""
    if lmax < 2:
        raise ValueError("lmax must be at least 2")
    a = g.matrix
    p = a
    for _ in range(2, max(lmax, g.n) + 1):
        p = mat_mul(p, a)
        if len(set(p.diagonal())) > 1:
            return False
    return True


def is_srd(g: Digraph) -> SrdParameters | None:
    """Parameters ``(n, k, t, lambda, mu)`` when ``A^2 = tI + lambda A + mu (J - I - A)``.

    Empty walk classes follow :func:`dswr.swr.check_direct`: with no
    non-adjacent pairs ``mu`` is taken equal to ``lambda``.
    """
    from .swr import check_direct

    reg = regularity(g)
    if not reg.is_regular:
        return None
    cert = check_direct(g, 2)
    if cert is None:
        return None
    return SrdParameters(g.n, reg.k, cert.nu, cert.lam, cert.mu)


def hoffman_real_root_report(p: SpectralProfile) -> tuple[int, int]:
    """Real roots of the Hoffman polynomial: ``(distinct, with multiplicity)``."""
    if p.hoffman is None:
        raise ValueError(f"no Hoffman polynomial ({p.hoffman_absent_reason})")
    return real_root_count(p.hoffman, False), real_root_count(p.hoffman, True)
