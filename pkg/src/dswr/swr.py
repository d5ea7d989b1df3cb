"""Deciding strong l-walk-regularity.

A digraph with adjacency matrix ``A`` is strongly l-walk-regular with
parameters ``(lam, mu, nu)`` when

    A^l + (mu - lam) A + (mu - nu) I = mu J,

i.e. ``A^l`` takes one value on edges, one on non-adjacent ordered pairs
and one on the diagonal.  Two independent procedures decide this:

* :func:`check_direct` reads the three walk classes off ``A^l``;
* :func:`check_divisibility` reduces ``x^l`` modulo the Hoffman polynomial
  (strongly connected regular digraphs only).

:func:`exponent_set` runs whichever applies and re-verifies each positive
answer with the other.

When a walk class is empty the missing parameter is filled in so the
identity above still holds: no edges gives ``lam = mu``, no non-adjacent
pairs (complete digraph) gives ``mu = lam``.  These are the values the
divisibility route produces as well.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .algebra import IntMatrix, Poly, mat_mul, mat_pow, rational_roots, real_root_count, x_pow_mod
from .digraph import Digraph, girth, is_strongly_connected, regularity, shortest_cycle
from .spectral import SCHEMA, InvariantViolation, SpectralProfile, is_srd, profile

DIRECT = "direct"
DIVISIBILITY = "hoffman-divisibility"

DEFAULT_LMAX = 50


class IdentityViolation(RuntimeError):
    """An eigenvalue identity implied by strong walk-regularity failed."""


class TheoremViolation(RuntimeError):
    """A digraph contradicts the mu = 0 classification."""


@dataclass(frozen=True)
class SwrCertificate:
    l: int
    lam: int
    mu: int
    nu: int
    methods: tuple[str, ...] = (DIRECT,)

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.lam, self.mu, self.nu)

    def holds_for(self, a: IntMatrix) -> bool:
        """Check the defining matrix identity from scratch."""
        n = a.rows
        lhs = mat_pow(a, self.l) + a.scale(self.mu - self.lam) + IntMatrix.identity(n).scale(self.mu - self.nu)
        return lhs == IntMatrix.ones(n).scale(self.mu)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "certificate",
            "l": self.l,
            "lambda": self.lam,
            "mu": self.mu,
            "nu": self.nu,
            "methods": list(self.methods),
        }


@dataclass(frozen=True)
class DivisibilityWitness:
    """``hoffman | x^l + e x + f`` together with the implied walk counts."""

    l: int
    e: int
    f: int
    mu: int

    @property
    def lam(self) -> int:
        return self.mu - self.e

    @property
    def nu(self) -> int:
        return self.mu - self.f

    def certificate(self) -> SwrCertificate:
        return SwrCertificate(self.l, self.lam, self.mu, self.nu, (DIVISIBILITY,))


def _check_exponent(l: int):
    if l <= 1:
        raise ValueError(f"walk length must exceed 1, got {l}")


def certificate_from_power(g: Digraph, l: int, power: IntMatrix) -> SwrCertificate | None:
    """Read ``(lam, mu, nu)`` off a precomputed ``A^l``."""
    n = g.n
    diag, on_edge, off_edge = set(), set(), set()
    for u in range(n):
        row = power.row(u)
        arow = g.adj[u]
        for v in range(n):
            if u == v:
                diag.add(row[v])
            elif arow[v]:
                on_edge.add(row[v])
            else:
                off_edge.add(row[v])
        if len(diag) > 1 or len(on_edge) > 1 or len(off_edge) > 1:
            return None
    nu = diag.pop() if diag else 0
    if on_edge and off_edge:
        lam, mu = on_edge.pop(), off_edge.pop()
    elif on_edge:
        lam = mu = on_edge.pop()
    elif off_edge:
        lam = mu = off_edge.pop()
    else:
        lam = mu = 0
    return SwrCertificate(l, lam, mu, nu, (DIRECT,))


def check_direct(g: Digraph, l: int) -> SwrCertificate | None:
    """Certificate by computing ``A^l``; valid for any digraph."""
    _check_exponent(l)
    return certificate_from_power(g, l, mat_pow(g.matrix, l))


def check_divisibility(p: SpectralProfile, l: int) -> DivisibilityWitness | None:
    """Witness from ``x^l mod hoffman`` having degree at most one."""
    _check_exponent(l)
    if p.hoffman is None:
        raise ValueError(f"no Hoffman polynomial: {p.hoffman_absent_reason}")
    r = x_pow_mod(l, p.hoffman_monic)
    if r.degree > 1:
        return None
    e, f = -r.coeff(1), -r.coeff(0)
    if e.denominator != 1 or f.denominator != 1:
        return None
    e, f = int(e), int(f)
    total = p.k ** l + e * p.k + f
    if total % p.n:
        return None
    mu = total // p.n
    if mu < 0 or mu - e < 0 or mu - f < 0:
        return None
    return DivisibilityWitness(l, e, f, mu)


@dataclass(frozen=True)
class PeriodicFamily:
    """Every ``l >= start`` with ``l mod modulus`` in ``residues`` is certified.

    ``kind`` records the algebraic reason: ``"srd"`` (``A^2`` in span{I, A, J}),
    ``"mu=lambda"`` (``A^m`` in span{I, J}) or ``"mu=nu"`` (``A^m`` in span{A, J}).
    """

    kind: str
    modulus: int
    residues: tuple[int, ...]
    start: int

    def contains(self, l: int) -> bool:
        return l >= self.start and l % self.modulus in self.residues

    @property
    def all_odd(self) -> bool:
        return self.kind == "mu=nu" and self.modulus == 2 and self.residues == (1,)

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "residues": list(self.residues), "periodic_kind": self.kind,
                "start": self.start}


@dataclass(frozen=True)
class ExponentSet:
    lmax: int
    certificates: tuple[SwrCertificate, ...]
    periodic: PeriodicFamily | None = None

    @property
    def explicit(self) -> tuple[int, ...]:
        return tuple(c.l for c in self.certificates)

    def __contains__(self, l: int) -> bool:
        return l in self.explicit

    def __len__(self) -> int:
        return len(self.certificates)

    def certificate(self, l: int) -> SwrCertificate | None:
        return next((c for c in self.certificates if c.l == l), None)

    def to_json(self) -> dict:
        out = {"schema": SCHEMA, "kind": "exponent_set", "lmax": self.lmax, "explicit": list(self.explicit)}
        if self.periodic is not None:
            out.update(self.periodic.to_json())
        out["certificates"] = [
            {"l": c.l, "lambda": c.lam, "mu": c.mu, "nu": c.nu, "methods": list(c.methods)}
            for c in self.certificates
        ]
        return out


def _scan(g: Digraph, lmax: int, p: SpectralProfile | None):
    """Yield ``(l, certificate or None)`` for ``l = 2..lmax``, cross-checked."""
    a = g.matrix
    power = mat_mul(a, a) if lmax >= 2 else None
    for l in range(2, lmax + 1):
        if l > 2:
            power = mat_mul(power, a)
        direct = certificate_from_power(g, l, power)
        if p is not None and p.hoffman is not None:
            w = check_divisibility(p, l)
            viaw = w.certificate() if w else None
            if (direct is None) != (viaw is None) or (direct and direct.params != viaw.params):
                raise InvariantViolation(
                    f"l={l}: direct {direct and direct.params} vs divisibility {viaw and viaw.params}"
                )
            if direct is not None:
                direct = SwrCertificate(l, direct.lam, direct.mu, direct.nu, (DIVISIBILITY, DIRECT))
        yield l, direct


def exponent_set(g: Digraph, lmax: int = DEFAULT_LMAX, p: SpectralProfile | None = None) -> ExponentSet:
    """All ``1 < l <= lmax`` with a certificate, plus any certified periodic family."""
    if lmax < 2:
        raise ValueError("lmax must be at least 2")
    if p is None:
        p = profile(g)
    certs = tuple(c for _, c in _scan(g, lmax, p) if c is not None)
    fam = _family_from_certificates(g, certs)
    if fam is not None:
        missing = [l for l in range(2, lmax + 1) if fam.contains(l) and l not in {c.l for c in certs}]
        if missing:
            raise InvariantViolation(f"periodic family {fam} misses certified exponents {missing}")
    return ExponentSet(lmax, certs, fam)


def _family_from_certificates(g: Digraph, certs) -> PeriodicFamily | None:
    if is_srd(g) is not None:
        return PeriodicFamily("srd", 1, (0,), 2)
    for c in certs:
        if c.mu == c.lam:
            m = c.l
            res = (0,) if m == 1 else tuple(sorted({0, 1 % m}))
            return PeriodicFamily("mu=lambda", m, res, m)
        if c.mu == c.nu:
            m = c.l
            return PeriodicFamily("mu=nu", m - 1, (1 % (m - 1),), m)
    return None


def detect_infinite_family(g: Digraph, lmax: int = DEFAULT_LMAX) -> PeriodicFamily | None:
    """Smallest algebraic certificate for infinitely many exponents, if any.

    Checks strong regularity first, then the smallest ``m <= lmax`` with
    ``A^m`` in span{I, J} or span{A, J}.  Nothing is extrapolated from a scan:
    each returned family follows from the single identity at ``m``.
    """
    if is_srd(g) is not None:
        return PeriodicFamily("srd", 1, (0,), 2)
    a = g.matrix
    power = a
    for m in range(2, lmax + 1):
        power = mat_mul(power, a)
        c = certificate_from_power(g, m, power)
        if c is None:
            continue
        fam = _family_from_certificates(g, [c])
        if fam is not None:
            return fam
    return None


def has_zero_pm_rho_spectrum(p: SpectralProfile) -> bool:
    """Eigenvalues besides ``k`` are exactly ``0, rho, -rho`` for a real ``rho > 0``, all simple."""
    h = p.hoffman_monic
    if h is None or h.degree != 3:
        return False
    return h.coeff(0) == 0 and h.coeff(2) == 0 and h.coeff(1) < 0


# ---------------------------------------------------------------------------
# Eigenvalue-side identities
# ---------------------------------------------------------------------------


@dataclass
class IdentityReport:
    l: int
    checks: list[tuple[str, bool]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    rational_eigenvalues: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def add(self, name: str, ok: bool):
        self.checks.append((name, ok))

    def to_json(self) -> dict:
        return {"l": self.l, "passed": self.passed, "checks": [{"name": n, "passed": ok} for n, ok in self.checks],
                "notes": self.notes, "rational_eigenvalues": self.rational_eigenvalues}


def verify_parameter_identities(cert: SwrCertificate, p: SpectralProfile) -> IdentityReport:
    """Check every eigenvalue condition a strongly l-walk-regular digraph must meet.

    Only rational eigenvalues enter the pairwise and triple identities.
    Raises :class:`IdentityViolation` if any check fails.
    """
    if p.hoffman is None:
        raise ValueError(f"identities need a Hoffman polynomial: {p.hoffman_absent_reason}")
    l, n, k = cert.l, p.n, p.k
    e, f = cert.mu - cert.lam, cert.mu - cert.nu
    rep = IdentityReport(l)
    trinomial = Poly.monomial(l) + Poly([f, e])
    rep.add("degree-equation", k ** l + e * k + f == cert.mu * n)
    rep.add("hoffman-divides-trinomial", (trinomial % p.hoffman_monic).is_zero())

    dc = p.diag_class
    if dc.tag == "Other":
        rep.add("diagonalizable-or-single-double-root", False)
    if dc.tag == "DTheta":
        th = dc.theta
        rep.add("theta-nonzero-not-degree", th != 0 and th != k)
        if e == 0 or l == 1:
            rep.add("theta-formula", False)
        else:
            theta = Fraction(-l * f, (l - 1) * e)
            rep.add("theta-formula", theta == th)
            rep.add("theta-power-identity", Fraction(f, l - 1) ** (l - 1) == Fraction(e, -l) ** l)
        rep.add("double-root-coefficients", e == -l * th ** (l - 1) and f == (l - 1) * th ** l)

    eigs = [int(r) for r in rational_roots(p.hoffman_monic) if r != k]
    rep.rational_eigenvalues = eigs
    if len(eigs) < 2:
        rep.notes.append("insufficient distinct eigenvalues")
    for t1, t2 in combinations(eigs, 2):
        rep.add(f"pair({t1},{t2})-lambda",
                Fraction(t2 ** l - t1 ** l, t1 - t2) == e)
        rep.add(f"pair({t1},{t2})-nu",
                Fraction(t2 * t1 ** l - t1 * t2 ** l, t1 - t2) == f)
    for t1, t2, t3 in combinations(eigs, 3):
        rep.add(f"triple({t1},{t2},{t3})",
                (t2 - t3) * t1 ** l + (t3 - t1) * t2 ** l + (t1 - t2) * t3 ** l == 0)
    if dc.tag == "DTheta":
        th = dc.theta
        for eta in eigs:
            rep.add(f"eta({eta})", l * th ** (l - 1) * (th - eta) == th ** l - eta ** l)
    if not rep.passed:
        bad = [name for name, ok in rep.checks if not ok]
        raise IdentityViolation(f"l={l}: failed {bad}")
    return rep


class Prediction(str, Enum):
    ALL_ODD = "all_odd"
    ONLY_THREE = "only_three"
    AT_MOST_ONE = "at_most_one"


def predict_four_real_eigenvalues(eigs, diagonalizable: bool = True) -> Prediction:
    """Exponent prediction for a diagonalizable digraph with four distinct rational eigenvalues.

    The largest value is taken as the degree ``k``; the others are sorted
    ``theta1 > theta2 > theta3``.  ``ALL_ODD``: ``theta2 = 0 = theta1 + theta3``.
    ``ONLY_THREE``: ``theta1 + theta2 + theta3 = 0`` otherwise (so l = 3 is
    the only exponent).  ``AT_MOST_ONE``: not 3-walk-regular, and at most
    one exponent overall.
    """
    vals = sorted({Fraction(x) for x in eigs}, reverse=True)
    if len(vals) != 4 or len(list(eigs)) != 4:
        raise ValueError("need exactly four distinct eigenvalues")
    if not diagonalizable:
        raise ValueError("prediction only covers diagonalizable digraphs")
    _, t1, t2, t3 = vals
    if t2 == 0 and t3 == -t1:
        return Prediction.ALL_ODD
    if t1 + t2 + t3 == 0:
        return Prediction.ONLY_THREE
    return Prediction.AT_MOST_ONE


# ---------------------------------------------------------------------------
# mu = 0 classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mu0Classification:
    kind: str  # DirectedCycle | CocliqueExtension | ExceptionalOneChord | ExceptionalTwoChords
    girth: int
    sizes: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "DirectedCycle":
            return f"DirectedCycle({self.girth})"
        if self.kind == "CocliqueExtension":
            return f"CocliqueExtension({self.girth}, {self.sizes})"
        return self.kind


def _nx(g: Digraph) -> nx.DiGraph:
    h = nx.DiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_isomorphic(g: Digraph, h: Digraph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return nx.is_isomorphic(_nx(g), _nx(h))


def _max_rotation(sizes):
    return max(tuple(sizes[i:] + sizes[:i]) for i in range(len(sizes)))


def classify_mu0(g: Digraph, l: int) -> Mu0Classification:
    """Match a strongly connected mu = 0 example to one of the known families.

    Candidates are generated from the structure of ``g`` and compared by
    isomorphism.  Also checks ``l = 0 or 1 (mod girth)``.
    """
    from . import families

    if not is_strongly_connected(g):
        raise ValueError("classification needs a strongly connected digraph")
    if g.is_complete():
        raise ValueError("complete digraphs are excluded")
    cert = check_direct(g, l)
    if cert is None or cert.mu != 0:
        raise ValueError(f"not strongly {l}-walk-regular with mu = 0")
    gg = girth(g)
    if l % gg not in (0, 1):
        raise TheoremViolation(f"l={l} is not 0 or 1 mod girth {gg}")
    if g.n == gg:
        if is_isomorphic(g, families.directed_cycle(gg)):
            return Mu0Classification("DirectedCycle", gg)
    cyc = shortest_cycle(g)
    classes = [set(g.out_neighbors(cyc[i - 1])) for i in range(len(cyc))]
    sizes = [len(c) for c in classes]
    if sum(sizes) == g.n and is_isomorphic(g, families.coclique_extension(sizes)):
        return Mu0Classification("CocliqueExtension", gg, _max_rotation(sizes))
    if g.n == l and l >= 3:
        if is_isomorphic(g, families.exceptional_chord(l, 1)):
            return Mu0Classification("ExceptionalOneChord", gg)
        if is_isomorphic(g, families.exceptional_chord(l, 2)):
            return Mu0Classification("ExceptionalTwoChords", gg)
    raise TheoremViolation(f"strongly {l}-walk-regular mu=0 digraph matches no known family")


# ---------------------------------------------------------------------------
# Nonreal spectra
# ---------------------------------------------------------------------------


def nonreal_spectrum_report(p: SpectralProfile, exps: ExponentSet, g: Digraph | None = None) -> dict:
    """Which alternative applies for a digraph with nonreal eigenvalues.

    ``(i)`` doubly regular tournament, ``(ii)`` every certificate has
    ``mu = lam`` or ``mu = nu``, ``(iii)`` four distinct eigenvalues
    ``k``, a conjugate pair of modulus ``rho`` and a real ``theta`` with
    ``0 < |theta| < rho``.  The shape test in (iii) uses floating point and
    is only reported, never used to decide anything.
    """
    nonreal = real_root_count(p.charpoly, with_multiplicity=True) < p.n
    out = {"has_nonreal_eigenvalue": nonreal, "case_i": False, "case_ii": False, "case_iii_shape": False}
    if not nonreal or p.hoffman is None:
        return out
    if g is not None:
        srd = is_srd(g)
        out["case_i"] = srd is not None and srd.t == 0
    out["case_ii"] = bool(exps.certificates) and all(c.mu in (c.lam, c.nu) for c in exps.certificates)
    h = p.hoffman_monic
    if h.degree == 3:
        import numpy as np

        roots = np.roots([float(c) for c in reversed(h.coeffs)])
        cplx = [r for r in roots if abs(r.imag) > 1e-9]
        real = [r.real for r in roots if abs(r.imag) <= 1e-9]
        if len(cplx) == 2 and len(real) == 1:
            rho = abs(cplx[0])
            theta = real[0]
            out["case_iii_shape"] = bool(0 < abs(theta) < rho <= p.k + 1e-9)
            out["rho"] = float(rho)
            out["theta"] = float(theta)
            out["phi"] = float(abs(cmath.phase(cplx[0])))
    return out
