"""Generators for the digraph families, with the facts expected of each.

Family specs use a small text syntax, ``name:key=val,key=val``; a nested
base family goes in parentheses, e.g.
``blowup-complement:base=(lvl-odd:m=3,k=2),q=3``.  A base without commas
needs no parentheses (``blowup-complement:base=mate:1,q=3``).  A lone value
without ``key=`` sets the family's first parameter (``mate:1``,
``cycle:6``).

=====================  ==========================================  ===================
name                   parameters                                  vertices
=====================  ==========================================  ===================
``cycle``              ``g >= 2``                                  ``Z_g``, ``u -> u+1``
``coclique``           ``sizes=a/b/c`` (at least two parts)        classes in order
``chord``              ``l >= 3``, ``chords`` in {1, 2}            ``Z_l``
``lvl-odd``            ``m`` odd, ``k >= 1``                       ``Z_n``, n = k^m + 1
``lvl-even``           ``m`` even, ``k >= 2``                      ``Z_n``, n = k^m - 1
``srd6``               none                                        permutations of 0,1,2
``mate``               ``i`` in {1, 2, 3}                          0..5
``paley``              ``n`` prime, ``n = 3 mod 4``                ``Z_n``
``rook``               ``m >= 2``                                  ``(r, c)`` -> ``r*m + c``
``complete``           ``n >= 1``                                  0..n-1
``blowup``             ``base``, ``q >= 1``                        ``u*q + a``
``blowup-complement``  ``base``, ``q >= 1``                        ``u*q + a``
``line``               ``base``                                    edges of base, lex order
=====================  ==========================================  ===================

``srd6`` is the Cayley digraph of S_3 with connection set {(0 1), (0 1 2)};
``paley`` is the quadratic-residue tournament, a doubly regular
tournament; ``rook`` is the undirected m x m rook's graph, a strongly
regular graph with ``mu = lam + 1`` when ``m = 3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import prod

from .algebra import Poly, poly_gcd
from .digraph import Digraph, complement_blowup, from_edges, line_digraph, tensor_allones
from .spectral import DIAGONALIZABLE, DiagClass, SrdParameters


class FamilyError(ValueError):
    """Unknown family name or parameters outside the valid range."""


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[tuple[str, object], ...] = ()

    def get(self, key, default=None):
        return dict(self.params).get(key, default)

    def __str__(self) -> str:
        parts = []
        for key, val in self.params:
            if isinstance(val, FamilySpec):
                val = f"({val})"
            elif isinstance(val, tuple):
                val = "/".join(map(str, val))
            parts.append(f"{key}={val}")
        return self.name + (":" + ",".join(parts) if parts else "")


# ---------------------------------------------------------------------------
# Plain constructions
# ---------------------------------------------------------------------------


def directed_cycle(g: int) -> Digraph:
    if g < 2:
        raise FamilyError("directed cycle needs g >= 2")
    return from_edges(g, [(u, (u + 1) % g) for u in range(g)])


def coclique_extension(sizes) -> Digraph:
    sizes = list(sizes)
    if len(sizes) < 2 or min(sizes) < 1:
        raise FamilyError("coclique extension needs at least two nonempty classes")
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    n = sum(sizes)
    edges = []
    for i, s in enumerate(sizes):
        j = (i + 1) % len(sizes)
        for u in range(starts[i], starts[i] + s):
            for v in range(starts[j], starts[j] + sizes[j]):
                edges.append((u, v))
    return from_edges(n, edges)


def exceptional_chord(l: int, chords: int = 1) -> Digraph:
    """Directed l-cycle on Z_l plus chord 02, and also 13 when ``chords == 2``."""
    if l < 3:
        raise FamilyError("chord family needs l >= 3")
    if chords not in (1, 2):
        raise FamilyError("chords must be 1 or 2")
    edges = {(u, (u + 1) % l) for u in range(l)}
    edges.add((0, 2))
    if chords == 2:
        edges.add((1, 3 % l))
    edges.discard((0, 0))
    return from_edges(l, sorted(edges))


def lam_van_lint(m: int, k: int, odd: bool) -> Digraph:
    """``u -> v`` iff ``k u + v`` mod n lies in {1, ..., k}."""
    if k < 1:
        raise FamilyError("k must be positive")
    if odd:
        if m < 1 or m % 2 == 0:
            raise FamilyError("lvl-odd needs odd m")
        n = k ** m + 1
    else:
        if m < 2 or m % 2:
            raise FamilyError("lvl-even needs even m >= 2")
        if k < 2:
            raise FamilyError("lvl-even needs k >= 2")
        n = k ** m - 1
    rows = [[int(1 <= (k * u + v) % n <= k) for v in range(n)] for u in range(n)]
    if any(rows[u][u] for u in range(n)):
        raise FamilyError(f"m={m}, k={k} produces loops")
    return Digraph.from_matrix(rows)


def six_vertex_srd() -> Digraph:
    """Cayley digraph of S_3 for {(0 1), (0 1 2)}: strongly regular (6, 2, 1, 0, 1)."""
    elems = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(elems)}
    gens = [(1, 0, 2), (1, 2, 0)]

    def compose(p, s):  # right multiplication: (p*s)(i) = p(s(i))
        return tuple(p[s[i]] for i in range(3))

    edges = [(index[p], index[compose(p, s)]) for p in elems for s in gens]
    return from_edges(6, edges)


def _bidirected(pairs):
    return [e for u, v in pairs for e in ((u, v), (v, u))]


def cospectral_mate(i: int) -> Digraph:
    """The three 2-regular digraphs on six vertices cospectral with ``srd6``.

    Labels 1..6 from the construction are shifted to 0..5.
    """
    if i == 1:
        directed = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]
        bi = [(1, 3), (2, 5), (4, 6)]
    elif i in (2, 3):
        directed = [(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)]
        bi = [(2, 4), (3, 6), (5, 6)]
    else:
        raise FamilyError("mate index must be 1, 2 or 3")
    edges = [(u - 1, v - 1) for u, v in directed + _bidirected(bi)]
    if i == 3:
        edges = [(v, u) for u, v in edges]
    return from_edges(6, edges)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def paley_tournament(n: int) -> Digraph:
    if not _is_prime(n) or n % 4 != 3:
        raise FamilyError("Paley tournament needs a prime n = 3 mod 4")
    squares = {(x * x) % n for x in range(1, n)}
    return from_edges(n, [(u, v) for u in range(n) for v in range(n) if (v - u) % n in squares])


def rook_graph(m: int) -> Digraph:
    if m < 2:
        raise FamilyError("rook graph needs m >= 2")
    n = m * m
    edges = [
        (a, b) for a in range(n) for b in range(n)
        if a != b and (a // m == b // m or a % m == b % m)
    ]
    return from_edges(n, edges)


def complete_digraph(n: int) -> Digraph:
    if n < 1:
        raise FamilyError("complete digraph needs n >= 1")
    return from_edges(n, [(u, v) for u in range(n) for v in range(n) if u != v])


# ---------------------------------------------------------------------------
# Spec parsing and dispatch
# ---------------------------------------------------------------------------

_FIRST_PARAM = {
    "cycle": "g", "coclique": "sizes", "chord": "l", "lvl-odd": "m", "lvl-even": "m",
    "mate": "i", "paley": "n", "rook": "m", "complete": "n", "blowup": "base",
    "blowup-complement": "base", "line": "base", "srd6": None,
}
_SPEC_KEYS = {"base"}
_TUPLE_KEYS = {"sizes"}


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FamilyError(f"unbalanced parentheses in {s!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise FamilyError(f"unbalanced parentheses in {s!r}")
    parts.append("".join(cur))
    return parts


def parse_family(text: str) -> FamilySpec:
    """Parse ``name:key=val,...`` into a :class:`FamilySpec`."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    name, _, rest = text.partition(":")
    if name not in _FIRST_PARAM:
        raise FamilyError(f"unknown family {name!r}")
    tokens = _split_top(rest, ",") if rest else []
    params: list[tuple[str, object]] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if "=" in tok.split(":", 1)[0] or ("=" in tok and ":" not in tok):
            key, _, val = tok.partition("=")
        else:
            key, val = _FIRST_PARAM[name], tok
            if key is None:
                raise FamilyError(f"{name} takes no parameters")
        key = key.strip()
        if key in _SPEC_KEYS:
            params.append((key, parse_family(val)))
        elif key in _TUPLE_KEYS:
            try:
                params.append((key, tuple(int(x) for x in val.replace("-", "/").split("/"))))
            except ValueError:
                raise FamilyError(f"bad sizes {val!r}") from None
        else:
            try:
                params.append((key, int(val)))
            except ValueError:
                raise FamilyError(f"parameter {key} must be an integer, got {val!r}") from None
        i += 1
    return FamilySpec(name, tuple(params))


def _need(spec: FamilySpec, key: str):
    val = spec.get(key)
    if val is None:
        raise FamilyError(f"{spec.name} needs parameter {key!r}")
    return val


def build(spec: FamilySpec | str) -> Digraph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    name = spec.name
    known = {"cycle": {"g"}, "coclique": {"sizes", "g"}, "chord": {"l", "chords"}, "lvl-odd": {"m", "k"},
             "lvl-even": {"m", "k"}, "srd6": set(), "mate": {"i"}, "paley": {"n"}, "rook": {"m"},
             "complete": {"n"}, "blowup": {"base", "q"}, "blowup-complement": {"base", "q"}, "line": {"base"}}
    extra = {k for k, _ in spec.params} - known[name]
    if extra:
        raise FamilyError(f"{name} does not take {sorted(extra)}")
    if name == "cycle":
        return directed_cycle(_need(spec, "g"))
    if name == "coclique":
        sizes = _need(spec, "sizes")
        if spec.get("g") is not None and spec.get("g") != len(sizes):
            raise FamilyError("g must equal the number of sizes")
        return coclique_extension(sizes)
    if name == "chord":
        return exceptional_chord(_need(spec, "l"), spec.get("chords", 1))
    if name in ("lvl-odd", "lvl-even"):
        return lam_van_lint(_need(spec, "m"), _need(spec, "k"), odd=name == "lvl-odd")
    if name == "srd6":
        return six_vertex_srd()
    if name == "mate":
        return cospectral_mate(_need(spec, "i"))
    if name == "paley":
        return paley_tournament(_need(spec, "n"))
    if name == "rook":
        return rook_graph(_need(spec, "m"))
    if name == "complete":
        return complete_digraph(_need(spec, "n"))
    base = build(_need(spec, "base"))
    if name == "line":
        return line_digraph(base)
    q = spec.get("q", 1)
    if q < 1:
        raise FamilyError("q must be at least 1")
    if name == "blowup":
        return tensor_allones(base, q)
    return complement_blowup(base, q)


# ---------------------------------------------------------------------------
# Expected facts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExponentPattern:
    """Exponents ``l >= 2`` with ``l mod modulus`` in ``residues``, or an explicit finite set."""

    modulus: int | None = None
    residues: tuple[int, ...] = ()
    finite: tuple[int, ...] | None = None

    def members(self, lmax: int) -> tuple[int, ...]:
        if self.finite is not None:
            return tuple(l for l in self.finite if l <= lmax)
        return tuple(l for l in range(2, lmax + 1) if l % self.modulus in self.residues)


ALL = ExponentPattern(1, (0,))


@dataclass(frozen=True)
class Facts:
    n: int
    k: int | None
    hoffman: Poly | None = None
    minpoly: Poly | None = None
    diag_class: DiagClass | None = None
    exponents: ExponentPattern | None = None
    mu0_exponents: ExponentPattern | None = None
    srd: SrdParameters | None = None
    walk_regular: bool | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def summary(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "hoffman": None if self.hoffman is None else str(self.hoffman),
            "minpoly": None if self.minpoly is None else str(self.minpoly),
            "diag_class": None if self.diag_class is None else str(self.diag_class),
            "exponents": None if self.exponents is None else _pattern_str(self.exponents),
            "srd": None if self.srd is None else list(self.srd.as_tuple()),
            "walk_regular": self.walk_regular,
            "notes": list(self.notes),
        }


def _pattern_str(p: ExponentPattern) -> str:
    if p.finite is not None:
        return "{" + ",".join(map(str, p.finite)) + "}"
    if p.modulus == 1:
        return "all l >= 2"
    return f"l = {','.join(map(str, p.residues))} (mod {p.modulus})"


X = Poly.x()


def _hoffman(hbar: Poly, n: int, k: int) -> Poly:
    return hbar * Fraction(n) * (1 / hbar(k))


def _srd_hoffman(s: SrdParameters) -> Poly:
    # A^2 + (mu - lam) A + (mu - t) I = mu J, so h = (x^2 + (mu-lam) x + mu - t) / mu
    if s.mu == 0:
        raise FamilyError("srd with mu = 0 has no quadratic Hoffman polynomial")
    return Poly([s.mu - s.t, s.mu - s.lam, 1]) * Fraction(1, s.mu)


def _srd_of(spec: FamilySpec) -> SrdParameters | None:
    if spec.name == "srd6":
        return SrdParameters(6, 2, 1, 0, 1)
    if spec.name == "paley":
        n = spec.get("n")
        return SrdParameters(n, (n - 1) // 2, 0, (n - 3) // 4, (n + 1) // 4)
    if spec.name == "lvl-even" and spec.get("m") == 2 and spec.get("k") >= 3:
        k = spec.get("k")
        return SrdParameters(k * k - 1, k, 2, 1, 1)
    if spec.name == "rook":
        m = spec.get("m")
        return SrdParameters(m * m, 2 * (m - 1), 2 * (m - 1), m - 2, 2)
    return None


def expected_facts(spec: FamilySpec | str) -> Facts:
    """Golden facts for a family instance; fields are ``None`` where nothing is claimed."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    build(spec)  # validates parameters
    name = spec.name
    if name == "cycle":
        g = spec.get("g")
        hbar = Poly([1] * g)
        # g = 3 is also the doubly regular tournament on three vertices
        exps = ALL if g <= 3 else ExponentPattern(g, (0, 1))
        return Facts(g, 1, _hoffman(hbar, g, 1), X ** g - 1, DIAGONALIZABLE, exps,
                     ExponentPattern(g, (0, 1)) if g >= 3 else None, walk_regular=True)
    if name == "coclique":
        sizes = spec.get("sizes")
        g = len(sizes)
        n = sum(sizes)
        regular = len(set(sizes)) == 1
        lam = prod(sizes)
        mp = X ** (g + 1) - lam * X if lam > 1 else X ** g - 1
        k = sizes[0] if regular else None
        hoff = _hoffman(mp // (X - k), n, k) if regular else None
        exps = ExponentPattern(g, (1,))
        if g == 2 and regular:
            exps = ALL  # complete bipartite K_{a,a}
        return Facts(n, k, hoff, mp, DIAGONALIZABLE, exps, ExponentPattern(g, (1,)),
                     notes=(f"A^(g+1) = {lam} A",))
    if name == "chord":
        l, c = spec.get("l"), spec.get("chords", 1)
        return Facts(l, None, None, X ** l - c * X - 1, None, ExponentPattern(finite=(l,)),
                     ExponentPattern(finite=(l,)), notes=(f"certificate (lam, mu, nu) = ({c}, 0, 1)",))
    if name in ("lvl-odd", "lvl-even"):
        m, k = spec.get("m"), spec.get("k")
        odd = name == "lvl-odd"
        n = k ** m + 1 if odd else k ** m - 1
        hbar = X ** m + 1 if odd else X ** m - 1
        # k = 1 (odd) and k = 2, m = 2 (even) collapse to complete digraphs
        exact = (k >= 2 or m == 1) if odd else not (k == 2 and m == 2)
        if not exact:
            return Facts(n, k, notes=("degenerate parameters; A^m = J -/+ I still holds",))
        hoff = _hoffman(hbar, n, k)
        srd = _srd_of(spec)
        exps = ALL if srd is not None else ExponentPattern(m, (0, 1))
        return Facts(n, k, hoff, (X - k) * hbar, DIAGONALIZABLE, exps, srd=srd,
                     notes=("A^m = J - I" if odd else "A^m = J + I",))
    if name in ("srd6", "paley", "rook"):
        s = _srd_of(spec)
        return Facts(s.n, s.k, _srd_hoffman(s), None, DIAGONALIZABLE, ALL, srd=s, walk_regular=True)
    if name == "complete":
        n = spec.get("n")
        if n == 1:
            return Facts(1, 0, Poly([1]), X, DIAGONALIZABLE, ALL, srd=SrdParameters(1, 0, 0, 0, 0))
        return Facts(n, n - 1, X + 1, (X - (n - 1)) * (X + 1), DIAGONALIZABLE, ALL,
                     srd=SrdParameters(n, n - 1, n - 1, n - 2, n - 2), walk_regular=True)
    if name == "mate":
        i = spec.get("i")
        return Facts(6, 2, _hoffman(X ** 2 * (X + 1), 6, 2), (X - 2) * X ** 2 * (X + 1), DiagClass("DTheta", 0),
                     ExponentPattern(finite=()), walk_regular=(i == 1))
    return _composite_facts(spec)


def _composite_facts(spec: FamilySpec) -> Facts:
    base_spec = spec.get("base")
    base = expected_facts(base_spec)
    bg = build(base_spec)
    n0, k0 = bg.n, base.k
    q = spec.get("q", 1)
    base_hbar = None if base.hoffman is None else base.hoffman.monic()
    if spec.name == "line":
        m = bg.edge_count
        if base_hbar is None:
            return Facts(m, None)
        hbar = base_hbar if m == n0 or base_hbar(0) == 0 else base_hbar * X
        return Facts(m, k0, _hoffman(hbar, m, k0), None, None, _line_or_tensor_exponents(base),
                     notes=("spectrum of base plus extra zeros",))
    if spec.name == "blowup":
        n, k = n0 * q, None if k0 is None else k0 * q
        if base_hbar is None or q == 1:
            return Facts(n, k) if q > 1 else base
        # eigenvalues q*theta, plus 0
        scaled = base_hbar.compose_linear(Fraction(1, q), 0).monic()
        hbar = scaled if scaled(0) == 0 else scaled * X
        return Facts(n, k, _hoffman(hbar, n, k), None, None, _line_or_tensor_exponents(base))
    # blowup-complement: eigenvalues q n - 1 - q k, -1 - q theta, and -1
    n = n0 * q
    if base_hbar is None:
        return Facts(n, None)
    k = n - 1 - q * k0
    # theta -> -1 - q theta, i.e. hbar_new(x) ~ hbar((-1 - x)/q); Jordan blocks are kept
    mapped = base_hbar.compose_linear(Fraction(-1, q), Fraction(-1, q)).monic()
    hbar = mapped if q == 1 or mapped(-1) == 0 else mapped * (X + 1)
    hoff = _hoffman(hbar, n, k)
    s = poly_gcd(hbar * (X - k), (hbar * (X - k)).derivative())
    dc = DIAGONALIZABLE if s.degree == 0 else (DiagClass("DTheta", int(-s.coeffs[0])) if s.degree == 1 else None)
    exps = None
    notes = []
    if base_spec.name == "mate" and q == 3:
        exps = ExponentPattern(finite=(3,))
    elif base.srd is not None and q == 3 and base.srd.mu == base.srd.lam + 1 and base.srd.t > base.srd.mu:
        exps = ExponentPattern(finite=(3,))
    elif base_spec.name == "srd6" and q == 3:
        exps = ALL
    elif base_spec.name == "paley" and q == 3:
        notes.append("strongly 3-walk-regular; other exponents only scanned")
    return Facts(n, k, hoff, None, dc, exps, notes=tuple(notes))


def _line_or_tensor_exponents(base: Facts) -> ExponentPattern | None:
    """Base with ``A^m`` in span{I, J}: the product is strongly l-walk-regular for l = 1 mod m."""
    if base.srd is not None and base.srd.lam == base.srd.mu != base.srd.t:
        return ExponentPattern(2, (1,))
    e = base.exponents
    if e is not None and e.finite is None and e.modulus not in (None, 1) and e.residues == (0, 1):
        return ExponentPattern(e.modulus, (1,))
    return None
