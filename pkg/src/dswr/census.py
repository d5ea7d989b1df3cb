"""Exhaustive census of small regular digraphs, and claim verification on top of it.

Enumeration generates loopless 0/1 matrices with all row and column sums
``k`` row by row, pruning on partial column sums.  Vertex 0 gets out-row
``{n-k, ..., n-1}`` and a normalized in-set; everything is then reduced to
its canonical form and deduplicated.  Records come out sorted by canonical
key, which is the row-major adjacency bit string read as a binary number,
so the order is the lexicographic order of adjacency matrices.

Canonical forms are found by brute force over vertex permutations.  The
first row of a lexicographically minimal matrix is forced (a vertex of
least out-degree, its out-neighbours placed last), which cuts the search
by a factor of roughly ``n! / (n d! (n-1-d)!)``.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .algebra import Poly
from .digraph import Digraph, complement, girth, is_strongly_connected, regularity, reverse
from .spectral import (
    SCHEMA,
    DiagClass,
    SpectralProfile,
    SrdParameters,
    is_srd,
    is_walk_regular,
    profile,
)
from .swr import (
    ExponentSet,
    TheoremViolation,
    certificate_from_power,
    check_direct,
    check_divisibility,
    classify_mu0,
    exponent_set,
)

MAX_N = 8
OVERRIDE_MAX_N = 10


class CensusLimitError(ValueError):
    """Requested census size is outside the configured limits."""


def _check_size(n: int, allow_large: bool):
    limit = OVERRIDE_MAX_N if allow_large else MAX_N
    if n > limit:
        hint = "" if allow_large else f" (up to {OVERRIDE_MAX_N} with the override)"
        raise CensusLimitError(f"n={n} exceeds the census limit {limit}{hint}")


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

_WORD = 62  # bits per packed word; keeps int64 dot products exact


@lru_cache(maxsize=None)
def _offdiag(n: int) -> tuple[np.ndarray, np.ndarray]:
    i, j = np.nonzero(~np.eye(n, dtype=bool))
    return i, j


@lru_cache(maxsize=None)
def _slot_templates(n: int, d: int) -> np.ndarray:
    """Orders of slots: slot 0 is the pivot, slots ``1..n-1-d`` its
    non-neighbours, the rest its out-neighbours; all rearrangements."""
    non = range(1, n - d)
    nbr = range(n - d, n)
    rows = [(0, *p, *q) for p in itertools.permutations(non) for q in itertools.permutations(nbr)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


@lru_cache(maxsize=None)
def _weights(m: int) -> list[np.ndarray]:
    out = []
    for start in range(0, m, _WORD):
        w = min(_WORD, m - start)
        out.append((1 << np.arange(w - 1, -1, -1, dtype=np.int64)).astype(np.int64))
    return out


def _pack_min(bits: np.ndarray) -> tuple[int, np.ndarray]:
    """Lexicographic minimum over rows of a 0/1 array; returns (key, row index)."""
    m = bits.shape[1]
    alive = np.arange(bits.shape[0])
    key = 0
    for t, w in enumerate(_weights(m)):
        lo = t * _WORD
        vals = bits[alive, lo:lo + len(w)].astype(np.int64) @ w
        best = vals.min()
        alive = alive[vals == best]
        key = (key << len(w)) | int(best)
    return key, alive[0]


def canonical_key(g: Digraph, allow_large: bool = False) -> int:
    """Integer whose binary digits are the off-diagonal entries of the canonical matrix."""
    return _canonical(g, allow_large)[0]


def _canonical(g: Digraph, allow_large: bool = False) -> tuple[int, np.ndarray]:
    n = g.n
    _check_size(n, allow_large)
    if n <= 1:
        return 0, np.arange(n)
    a = np.array(g.adj, dtype=np.uint8)
    outdeg = a.sum(axis=1)
    d = int(outdeg.min())
    tmpl = _slot_templates(n, d)
    ii, jj = _offdiag(n)
    best_key, best_perm = None, None
    for v in np.flatnonzero(outdeg == d):
        nbrs = np.flatnonzero(a[v])
        non = np.array([u for u in range(n) if u != v and not a[v, u]], dtype=np.int64)
        slots = np.concatenate(([v], non, nbrs)).astype(np.int64)
        sigma = slots[tmpl]  # sigma[p, i] = old vertex placed at position i
        # chunk to keep memory bounded for large n
        step = max(1, 2_000_000 // (n * n))
        for s in range(0, len(sigma), step):
            sg = sigma[s:s + step]
            bits = a[sg[:, ii], sg[:, jj]]
            key, idx = _pack_min(bits)
            if best_key is None or key < best_key:
                best_key, best_perm = key, sg[idx]
    return best_key, best_perm


def digraph_from_key(n: int, key: int) -> Digraph:
    m = n * (n - 1)
    rows = [[0] * n for _ in range(n)]
    ii, jj = _offdiag(n)
    for t in range(m):
        if (key >> (m - 1 - t)) & 1:
            rows[ii[t]][jj[t]] = 1
    return Digraph.from_matrix(rows)


def canonical_form(g: Digraph, allow_large: bool = False) -> Digraph:
    """The lexicographically least adjacency matrix among all relabelings of ``g``."""
    return digraph_from_key(g.n, canonical_key(g, allow_large))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumFilter:
    n: int
    k: int
    require_strongly_connected: bool = False
    target_charpoly: Poly | None = None
    diag_class: DiagClass | None = None
    allow_large: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise CensusLimitError("need at least one vertex")
        if not 0 <= self.k < self.n:
            raise CensusLimitError(f"degree k={self.k} must satisfy 0 <= k < n={self.n}")
        _check_size(self.n, self.allow_large)


def _row_choices(n: int, k: int, i: int, with_zero: bool) -> list[tuple[int, ...]]:
    others = [j for j in range(1, n) if j != i]
    need = k - 1 if with_zero else k
    if need < 0 or need > len(others):
        return []
    return [((0,) if with_zero else ()) + c for c in itertools.combinations(others, need)]


def _in_sets(n: int, k: int) -> list[frozenset[int]]:
    """Normalized in-neighbourhoods of vertex 0, one per intersection size."""
    non = list(range(1, n - k))
    nbr = list(range(n - k, n))
    out = []
    for b in range(0, k + 1):
        a = k - b
        if a <= len(non):
            out.append(frozenset(non[len(non) - a:len(non)] + nbr[k - b:k]))
    return out


def _branches(n: int, k: int) -> list[tuple[frozenset[int], tuple[int, ...] | None]]:
    """Independent subtrees: (in-set of 0, row of vertex 1), or whole trees for tiny n."""
    out = []
    for s in _in_sets(n, k):
        if n < 3:
            out.append((s, None))
            continue
        for r in _row_choices(n, k, 1, 1 in s):
            out.append((s, r))
    return out


def _search_branch(args) -> list[int]:
    """Canonical keys of all completions of one branch."""
    n, k, in_set, row1, allow_large = args
    choices = [None] + [_row_choices(n, k, i, i in in_set) for i in range(1, n)]
    col = [0] * n
    rows: list = [None] * n
    first = tuple(range(n - k, n))
    keys = set()

    def place(i, r):
        for j in r:
            col[j] += 1
        rows[i] = r

    def unplace(i, r):
        for j in r:
            col[j] -= 1

    def feasible(i):
        # rows i+1..n-1 remain; column j cannot be covered by row j itself
        left = n - 1 - i
        for j in range(n):
            need = k - col[j]
            if need < 0 or need > left - (1 if j > i else 0):
                return False
        return True

    def rec(i):
        if i == n:
            adj = [[0] * n for _ in range(n)]
            for u in range(n):
                for v in rows[u]:
                    adj[u][v] = 1
            keys.add(canonical_key(Digraph.from_matrix(adj), allow_large))
            return
        for r in choices[i]:
            place(i, r)
            if feasible(i):
                rec(i + 1)
            unplace(i, r)

    place(0, first)
    if row1 is None:
        if feasible(0):
            rec(1)
    else:
        place(1, row1)
        if feasible(1):
            rec(2)
    return sorted(keys)


@lru_cache(maxsize=32)
def _class_keys(n: int, k: int, allow_large: bool = False, jobs: int = 1) -> tuple[int, ...]:
    if k == 0:
        return (0,)
    if 2 * k > n - 1:
        # complements of (n-1-k)-regular digraphs, recanonicalized
        base = _class_keys(n, n - 1 - k, allow_large, jobs)
        keys = {canonical_key(complement(digraph_from_key(n, b)), allow_large) for b in base}
        return tuple(sorted(keys))
    tasks = [(n, k, s, r, allow_large) for s, r in _branches(n, k)]
    keys: set[int] = set()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_search_branch, tasks):
                keys.update(part)
    else:
        for t in tasks:
            keys.update(_search_branch(t))
    return tuple(sorted(keys))


def enumerate_digraphs(flt: EnumFilter, jobs: int = 1) -> Iterator[Digraph]:
    """Canonical representatives of the ``k``-regular digraphs passing the filter."""
    for key in _class_keys(flt.n, flt.k, flt.allow_large, jobs):
        g = digraph_from_key(flt.n, key)
        if flt.require_strongly_connected and not is_strongly_connected(g):
            continue
        if flt.target_charpoly is not None or flt.diag_class is not None:
            p = profile(g)
            if flt.target_charpoly is not None and p.charpoly != flt.target_charpoly:
                continue
            if flt.diag_class is not None and p.diag_class != flt.diag_class:
                continue
        yield g


@dataclass(frozen=True)
class CensusRecord:
    digraph: Digraph
    profile: SpectralProfile
    exponents: ExponentSet
    walk_regular: bool
    srd: SrdParameters | None
    girth: int | None
    findings: dict = field(default_factory=dict)

    @property
    def key(self) -> int:
        return canonical_key(self.digraph)

    def to_json(self) -> dict:
        p = self.profile
        return {
            "schema": SCHEMA,
            "kind": "census_record",
            "n": p.n,
            "k": p.k,
            "graph": self.digraph.to_text(),
            "strongly_connected": p.strongly_connected,
            "charpoly": p.charpoly.int_coeffs(),
            "minpoly": p.minpoly.int_coeffs(),
            "hoffman_monic": None if p.hoffman is None else p.hoffman_monic.int_coeffs(),
            "diag_class": str(p.diag_class),
            "all_eigenvalues_real": p.all_real,
            "girth": self.girth,
            "walk_regular": self.walk_regular,
            "srd": None if self.srd is None else list(self.srd.as_tuple()),
            "exponents": self.exponents.to_json(),
            "findings": self.findings,
        }


def make_record(g: Digraph, lmax: int = 12) -> CensusRecord:
    p = profile(g)
    exps = exponent_set(g, lmax, p)
    findings = {}
    if exps.periodic is not None:
        findings["periodic"] = exps.periodic.to_json()
    return CensusRecord(
        digraph=g,
        profile=p,
        exponents=exps,
        walk_regular=is_walk_regular(g),
        srd=is_srd(g),
        girth=girth(g),
        findings=findings,
    )


def enumerate_census(flt: EnumFilter, lmax: int = 12, jobs: int = 1) -> Iterator[CensusRecord]:
    """Stream of census records in canonical-key order."""
    for g in enumerate_digraphs(flt, jobs):
        yield make_record(g, lmax)


def regular_digraphs(n_max: int, strongly_connected: bool = True, n_min: int = 1, jobs: int = 1) -> Iterator[Digraph]:
    """All regular digraphs with ``n_min <= n <= n_max`` across every degree."""
    for n in range(n_min, n_max + 1):
        for k in range(n):
            yield from enumerate_digraphs(EnumFilter(n, k, strongly_connected), jobs)


# ---------------------------------------------------------------------------
# All digraphs on very few vertices (no regularity assumed)
# ---------------------------------------------------------------------------


def _batch(n: int, codes: np.ndarray) -> np.ndarray:
    ii, jj = _offdiag(n)
    m = len(ii)
    bits = (codes[:, None] >> np.arange(m - 1, -1, -1, dtype=np.int64)) & 1
    a = np.zeros((len(codes), n, n), dtype=np.int64)
    a[:, ii, jj] = bits
    return a


@lru_cache(maxsize=16)
def scan_walk_regular_all(n: int, lmax: int, chunk: int = 1 << 15) -> dict[int, list[tuple[int, int, int, int]]]:
    """Every strongly connected digraph on ``n`` vertices that is strongly
    ``l``-walk-regular for some ``2 <= l <= lmax``.

    Works on all ``2^(n(n-1))`` labeled digraphs with int64 numpy powers
    (entries stay below ``(n-1)^lmax``), then keeps one canonical key per
    class.  Returns ``{key: [(l, lambda, mu, nu), ...]}`` after rechecking
    each hit exactly with :func:`check_direct`.
    """
    if n < 2 or n > 5:
        raise CensusLimitError("the all-digraph scan is limited to 2 <= n <= 5")
    if (n - 1) ** lmax >= 2 ** 62:
        raise CensusLimitError("walk counts would overflow int64")
    m = n * (n - 1)
    eye = np.eye(n, dtype=bool)
    hits: dict[int, set[int]] = {}
    for start in range(0, 1 << m, chunk):
        codes = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        a = _batch(n, codes)
        reach = a.astype(bool) | eye
        for _ in range(n):
            reach = reach | (np.matmul(reach.astype(np.int64), a) > 0)
        sc = reach.all(axis=(1, 2))
        a, codes = a[sc], codes[sc]
        if not len(codes):
            continue
        edge = a.astype(bool)
        non = ~edge & ~eye
        p = a.copy()
        found = np.zeros(len(codes), dtype=bool)
        for _ in range(2, lmax + 1):
            p = np.matmul(p, a)
            big = np.iinfo(np.int64).max
            ok = np.ones(len(codes), dtype=bool)
            for mask in (edge, non, np.broadcast_to(eye, edge.shape)):
                hi = np.where(mask, p, -1).max(axis=(1, 2))
                lo = np.where(mask, p, big).min(axis=(1, 2))
                ok &= (hi == -1) | (hi == lo)
            found |= ok
        for c in codes[found]:
            hits.setdefault(canonical_key(digraph_from_key(n, int(c))), set())
    out = {}
    for key in sorted(hits):
        g = digraph_from_key(n, key)
        certs = []
        for l in range(2, lmax + 1):
            c = check_direct(g, l)
            if c is not None:
                certs.append((l, c.lam, c.mu, c.nu))
        out[key] = certs
    return out


# ---------------------------------------------------------------------------
# Claims
# ---------------------------------------------------------------------------


class UnknownClaim(KeyError):
    pass


@dataclass
class ClaimReport:
    claim: str
    params: dict
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    discrepancies: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def violation(self, g: Digraph, why: str):
        self.violations.append({"graph": g.to_text(), "reason": why})

    def witness(self, g: Digraph, note: str):
        self.witnesses.append({"graph": g.to_text(), "note": note})

    def bump(self, name: str, by: int = 1):
        self.counts[name] = self.counts.get(name, 0) + by

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "claim_report",
            "claim": self.claim,
            "params": self.params,
            "passed": self.passed,
            "counts": dict(sorted(self.counts.items())),
            "violations": self.violations,
            "witnesses": self.witnesses,
            "discrepancies": self.discrepancies,
        }


_CLAIMS: dict = {}


def _claim(name: str, **defaults):
    def deco(fn):
        _CLAIMS[name] = (fn, defaults)
        return fn
    return deco


def claim_names() -> list[str]:
    return sorted(_CLAIMS)


def claim_defaults(name: str) -> dict:
    if name not in _CLAIMS:
        raise UnknownClaim(name)
    return dict(_CLAIMS[name][1])


def verify_claim(name: str, params: dict | None = None, jobs: int = 1) -> ClaimReport:
    if name not in _CLAIMS:
        raise UnknownClaim(f"unknown claim {name!r}; known: {', '.join(claim_names())}")
    fn, defaults = _CLAIMS[name]
    full = dict(defaults)
    for key, val in (params or {}).items():
        if key not in defaults:
            raise ValueError(f"claim {name} has no parameter {key!r}")
        full[key] = val
    rep = ClaimReport(name, full)
    fn(rep, jobs=jobs, **full)
    return rep


def _extra_digraphs(specs) -> list[tuple[str, Digraph]]:
    from .families import build

    return [(s, build(s)) for s in specs]


EXAMPLE_NONDIAG = (
    "blowup-complement:base=mate:1,q=3",
    "blowup-complement:base=mate:2,q=3",
    "blowup-complement:base=mate:3,q=3",
)


@_claim("spectrum-census-6-2")
def _spectrum_census(rep: ClaimReport, jobs: int = 1):
    x = Poly.x()
    target = (x - 2) * x ** 3 * (x + 1) ** 2
    recs = list(enumerate_census(EnumFilter(6, 2, True, target), lmax=2, jobs=jobs))
    hbar = x ** 2 * (x + 1)
    srd = [r for r in recs if r.srd is not None]
    mates = [r for r in recs if r.srd is None]
    good_mates = [r for r in mates if r.profile.hoffman_monic == hbar and r.profile.diag_class == DiagClass("DTheta", 0)]
    rep.counts.update(
        total_with_spectrum=len(recs),
        srd=len(srd),
        **{"hoffman_x^2(x+1)": len(good_mates)},
        walk_regular_among_mates=sum(r.walk_regular for r in mates),
    )
    keys = {r.key for r in mates}
    pairs = {tuple(sorted((r.key, canonical_key(reverse(r.digraph))))) for r in mates}
    rep.counts["reverse_pairs_among_mates"] = sum(1 for a, b in pairs if a != b and a in keys and b in keys)
    for r in srd:
        rep.witness(r.digraph, f"SRD {r.srd.as_tuple()}")
    for r in mates:
        rep.witness(r.digraph, f"hoffman {r.profile.hoffman_monic}, {r.profile.diag_class}, walk-regular={r.walk_regular}")
    if len(recs) != 4:
        rep.discrepancies.append(f"found {len(recs)} classes with this spectrum, expected 4")
    if [r.srd.as_tuple() for r in srd] != [(6, 2, 1, 0, 1)]:
        rep.violations.append({"reason": "expected exactly one SRD with parameters (6,2,1,0,1)"})
    if len(good_mates) != len(mates) or len(mates) != 3:
        rep.violations.append({"reason": "expected three non-SRD digraphs with hoffman x^2(x+1) in DTheta(0)"})
    if rep.counts["walk_regular_among_mates"] != 1:
        rep.violations.append({"reason": "expected exactly one walk-regular mate"})
    if rep.counts["reverse_pairs_among_mates"] != 1:
        rep.violations.append({"reason": "expected exactly one pair of mutually reverse mates"})


@_claim("even-l-implies-srd", n_max=6, lmax=10)
def _even_srd(rep: ClaimReport, n_max: int, lmax: int, jobs: int = 1):
    for g in regular_digraphs(n_max, True, jobs=jobs):
        p = profile(g)
        if not p.all_real:
            continue
        rep.bump("real_spectrum")
        srd = is_srd(g)
        for l in range(2, lmax + 1, 2):
            if check_direct(g, l) is None:
                continue
            rep.bump("even_exponent_hits")
            if srd is None:
                rep.violation(g, f"strongly {l}-walk-regular but not strongly regular")
        if srd is not None:
            rep.bump("srd")
            # converse: an SRD is strongly l-walk-regular for every l
            if any(check_direct(g, l) is None for l in range(2, lmax + 1)):
                rep.violation(g, "strongly regular but some exponent fails")


def _mu0_instances(n_max: int, lmax: int, nonregular_n_max: int, jobs: int = 1):
    """(digraph, l, certificate, regular) for strongly connected, noncomplete mu = 0 hits."""
    for g in regular_digraphs(n_max, True, n_min=2, jobs=jobs):
        if g.is_complete():
            continue
        a = g.matrix
        pw = a
        for l in range(2, lmax + 1):
            pw = pw @ a
            c = certificate_from_power(g, l, pw)
            if c is not None and c.mu == 0:
                yield g, l, c, True
    for n in range(2, nonregular_n_max + 1):
        for key, certs in scan_walk_regular_all(n, lmax).items():
            g = digraph_from_key(n, key)
            if regularity(g).is_regular or g.is_complete():
                continue  # regular ones are covered above
            for l, lam, mu, nu in certs:
                if mu == 0:
                    yield g, l, check_direct(g, l), False


@_claim("girth-congruence", n_max=7, lmax=8, nonregular_n_max=5)
def _girth_congruence(rep: ClaimReport, n_max: int, lmax: int, nonregular_n_max: int, jobs: int = 1):
    for g, l, c, regular in _mu0_instances(n_max, lmax, nonregular_n_max, jobs):
        rep.bump("mu0_certificates")
        rep.bump("regular" if regular else "nonregular")
        gg = girth(g)
        if l % gg not in (0, 1):
            rep.violation(g, f"l={l} with girth {gg}")
        elif g.n != gg and c.lam == 0:
            rep.violation(g, f"l={l}: not a cycle but lambda = 0")


@_claim("mu0-classification", n_max=7, lmax=8, nonregular_n_max=5)
def _mu0_classification(rep: ClaimReport, n_max: int, lmax: int, nonregular_n_max: int, jobs: int = 1):
    seen = set()
    for g, l, c, regular in _mu0_instances(n_max, lmax, nonregular_n_max, jobs):
        rep.bump("instances")
        try:
            cls = classify_mu0(g, l)
        except TheoremViolation as e:
            rep.violation(g, f"l={l}: {e}")
            continue
        rep.bump(cls.kind)
        tag = (g.n, canonical_key(g))
        if tag not in seen and cls.kind.startswith("Exceptional"):
            rep.witness(g, f"l={l}: {cls}")
        seen.add(tag)
    rep.counts["digraphs"] = len(seen)
    # positive mu forces regularity, so nonregular scan hits must all have mu = 0
    for n in range(2, nonregular_n_max + 1):
        for key, certs in scan_walk_regular_all(n, lmax).items():
            g = digraph_from_key(n, key)
            if not regularity(g).is_regular and any(mu > 0 for _, _, mu, _ in certs):
                rep.violation(g, "nonregular digraph with mu > 0")


@_claim("nondiag-real-exponents", n_max=7, lmax=50, extra=list(EXAMPLE_NONDIAG))
def _nondiag_real(rep: ClaimReport, n_max: int, lmax: int, extra: list, jobs: int = 1):
    cands = [("census", g) for g in regular_digraphs(n_max, True, jobs=jobs)] + _extra_digraphs(extra)
    for src, g in cands:
        p = profile(g)
        if not p.all_real or p.diag_class.tag == "Diagonalizable":
            continue
        rep.bump("nondiagonalizable_real")
        exps = exponent_set(g, lmax, p)
        ex = exps.explicit
        if ex:
            rep.bump("with_exponents")
            rep.witness(g, f"{src}: exponents {list(ex)}, {p.diag_class}")
        if len(ex) > 2 or any(l % 2 == 0 for l in ex):
            rep.violation(g, f"exponents {list(ex)}")
        if len(ex) == 2:
            rep.discrepancies.append(f"two exponents {list(ex)} for a nondiagonalizable real-spectrum digraph")


@_claim("oracle-equivalence", n_max=6, lmax=12)
def _oracle(rep: ClaimReport, n_max: int, lmax: int, jobs: int = 1):
    for g in regular_digraphs(n_max, False, n_min=2, jobs=jobs):
        p = profile(g)
        rep.bump("digraphs")
        for l in range(2, lmax + 1):
            d = check_direct(g, l)
            if p.hoffman is None:
                rep.bump("direct_only")
                if d is not None and d.mu > 0:
                    rep.violation(g, f"l={l}: mu > 0 without a Hoffman polynomial")
                continue
            w = check_divisibility(p, l)
            rep.bump("comparisons")
            dv = None if w is None else w.certificate().params
            if (d is None) != (w is None) or (d is not None and d.params != dv):
                rep.violation(g, f"l={l}: direct {None if d is None else d.params} vs divisibility {dv}")
            elif d is not None:
                rep.bump("agreeing_certificates")


@_claim("real-root-bound", n_max=6, lmax=12, extra=list(EXAMPLE_NONDIAG))
def _real_roots(rep: ClaimReport, n_max: int, lmax: int, extra: list, jobs: int = 1):
    cands = [("census", g) for g in regular_digraphs(n_max, True, n_min=2, jobs=jobs)] + _extra_digraphs(extra)
    for src, g in cands:
        p = profile(g)
        exps = exponent_set(g, lmax, p)
        if not exps.explicit or p.hoffman is None:
            continue
        rep.bump("witnesses")
        bound = check_real_root_bound(p, exps.explicit)
        if bound is not None:
            rep.violation(g, f"{src}: {bound}")


def check_real_root_bound(p: SpectralProfile, exponents) -> str | None:
    """``None`` if the Hoffman polynomial has at most 3 real roots (2 with an even exponent)."""
    from .algebra import real_root_count

    r = real_root_count(p.hoffman, with_multiplicity=True)
    limit = 2 if any(l % 2 == 0 for l in exponents) else 3
    if r > limit:
        return f"{r} real roots with multiplicity, exponents {list(exponents)}"
    return None


def class_count(n: int, k: int, strongly_connected: bool = False) -> int:
    return sum(1 for _ in enumerate_digraphs(EnumFilter(n, k, strongly_connected)))

