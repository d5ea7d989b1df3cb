import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dswr import families
from dswr.algebra import Poly
from dswr.census import (
    CensusLimitError,
    EnumFilter,
    UnknownClaim,
    canonical_form,
    canonical_key,
    claim_names,
    digraph_from_key,
    enumerate_census,
    enumerate_digraphs,
    scan_walk_regular_all,
    verify_claim,
)
from dswr.digraph import Digraph, is_strongly_connected, regularity, relabel, reverse
from dswr.swr import check_direct, exponent_set

X = Poly.x()


def brute_canonical(g: Digraph) -> tuple:
    """Independent oracle: least row-major matrix over every permutation."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        rows = tuple(tuple(g.adj[perm[i]][perm[j]] for j in range(g.n)) for i in range(g.n))
        if best is None or rows < best:
            best = rows
    return best


def labeled_regular(n, k):
    rows_for = [[r for r in itertools.combinations(range(n), k) if i not in r] for i in range(n)]
    for rows in itertools.product(*rows_for):
        cols = [0] * n
        for r in rows:
            for j in r:
                cols[j] += 1
        if all(c == k for c in cols):
            adj = [[0] * n for _ in range(n)]
            for i, r in enumerate(rows):
                for j in r:
                    adj[i][j] = 1
            yield Digraph.from_matrix(adj)


def nx_class_count(graphs):
    reps = {}
    for g in graphs:
        h = nx.DiGraph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges())
        bucket = reps.setdefault(nx.weisfeiler_lehman_graph_hash(h), [])
        if not any(nx.is_isomorphic(h, o) for o in bucket):
            bucket.append(h)
    return sum(len(b) for b in reps.values())


@st.composite
def digraphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    return Digraph.from_matrix([[int(bits[u * n + v]) if u != v else 0 for v in range(n)] for u in range(n)])


# --- canonical forms --------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(digraphs(), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@settings(max_examples=40, deadline=None)
@given(digraphs(max_n=6))
def test_canonical_form_is_lexicographic_minimum(g):
    assert canonical_form(g).adj == brute_canonical(g)


def test_canonical_examples():
    m2, m3 = families.cospectral_mate(2), families.cospectral_mate(3)
    assert canonical_key(m2) != canonical_key(m3)
    c = families.directed_cycle(7)
    rot = relabel(c, [(u + 3) % 7 for u in range(7)])
    assert canonical_form(rot) == canonical_form(c)
    assert digraph_from_key(7, canonical_key(c)) == canonical_form(c)


def test_canonical_limits():
    with pytest.raises(CensusLimitError):
        canonical_form(families.directed_cycle(9))
    assert canonical_form(families.directed_cycle(9), allow_large=True).n == 9
    with pytest.raises(CensusLimitError):
        canonical_form(families.directed_cycle(11), allow_large=True)


# --- enumeration ---------------------------------------------------------------


def test_enumerate_examples():
    tri = list(enumerate_digraphs(EnumFilter(3, 1, True)))
    assert tri == [canonical_form(families.directed_cycle(3))]
    four = list(enumerate_digraphs(EnumFilter(4, 1)))
    assert len(four) == 2
    assert sum(is_strongly_connected(g) for g in four) == 1
    target = (X - 2) * X ** 3 * (X + 1) ** 2
    assert len(list(enumerate_digraphs(EnumFilter(6, 2, True, target)))) == 4


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(1, n)])
def test_class_counts_match_networkx_oracle(n, k):
    ours = len(list(enumerate_digraphs(EnumFilter(n, k))))
    assert ours == nx_class_count(labeled_regular(n, k))


def _partitions_min_part_2(n):
    def rec(m, smallest):
        if m == 0:
            return 1
        return sum(rec(m - p, p) for p in range(smallest, m + 1))
    return rec(n, 2)


@pytest.mark.parametrize("n", range(2, 9))
def test_one_regular_counts_are_cycle_types(n):
    # a 1-regular loopless digraph is a fixed-point-free permutation
    assert len(list(enumerate_digraphs(EnumFilter(n, 1)))) == _partitions_min_part_2(n)


def test_output_is_sorted_distinct_and_deterministic():
    a = [canonical_key(g) for g in enumerate_digraphs(EnumFilter(6, 2))]
    b = [canonical_key(g) for g in enumerate_digraphs(EnumFilter(6, 2))]
    assert a == b == sorted(set(a))
    for g in enumerate_digraphs(EnumFilter(6, 2)):
        assert canonical_form(g) == g


@pytest.mark.parametrize("n,k", [(5, 2), (6, 2), (6, 3), (7, 2)])
def test_reverse_and_complement_closure(n, k):
    from dswr.digraph import complement

    keys = {canonical_key(g) for g in enumerate_digraphs(EnumFilter(n, k))}
    other = {canonical_key(g) for g in enumerate_digraphs(EnumFilter(n, n - 1 - k))}
    for key in keys:
        g = digraph_from_key(n, key)
        assert canonical_key(reverse(g)) in keys
        assert canonical_key(complement(g)) in other
    assert len(keys) == len(other)


def test_parallel_matches_serial():
    from dswr.census import _class_keys, _search_branch, _branches

    serial = set()
    for s, r in _branches(6, 3):
        serial.update(_search_branch((6, 3, s, r, False)))
    assert tuple(sorted(serial)) == _class_keys(6, 3, False, 2)


def test_records_recompute():
    recs = list(enumerate_census(EnumFilter(5, 2, True), lmax=10))
    assert recs
    for r in recs:
        direct = tuple(l for l in range(2, 11) if check_direct(r.digraph, l) is not None)
        assert r.exponents.explicit == direct
        d = json.loads(json.dumps(r.to_json(), sort_keys=True))
        assert d["kind"] == "census_record" and d["schema"] == "swr/1"
        assert regularity(r.digraph).k == 2


def test_filter_limits():
    with pytest.raises(CensusLimitError):
        EnumFilter(9, 2)
    EnumFilter(9, 2, allow_large=True)
    with pytest.raises(CensusLimitError):
        EnumFilter(11, 2, allow_large=True)
    with pytest.raises(CensusLimitError):
        EnumFilter(4, 4)


def test_diag_class_filter():
    from dswr.spectral import DiagClass

    got = list(enumerate_digraphs(EnumFilter(6, 2, True, diag_class=DiagClass("DTheta", 0))))
    keys = {canonical_key(families.cospectral_mate(i)) for i in (1, 2, 3)}
    assert keys <= {canonical_key(g) for g in got}


# --- all-digraph scan ---------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_scan_matches_exact_brute_force(n):
    expected = {}
    m = n * (n - 1)
    for code in range(1 << m):
        g = digraph_from_key(n, code)
        if not is_strongly_connected(g):
            continue
        certs = [(l, *check_direct(g, l).params) for l in range(2, 9) if check_direct(g, l) is not None]
        if certs:
            expected[canonical_key(g)] = certs
    assert scan_walk_regular_all(n, 8) == expected


def test_scan_limits():
    with pytest.raises(CensusLimitError):
        scan_walk_regular_all(6, 8)


# --- claims ---------------------------------------------------------------------


def test_claims_registry():
    assert set(claim_names()) >= {
        "spectrum-census-6-2", "even-l-implies-srd", "girth-congruence",
        "mu0-classification", "nondiag-real-exponents",
    }
    with pytest.raises(UnknownClaim):
        verify_claim("no-such-claim")
    with pytest.raises(ValueError):
        verify_claim("even-l-implies-srd", {"bogus": 1})


def test_spectrum_claim_report():
    rep = verify_claim("spectrum-census-6-2")
    assert rep.passed
    assert rep.counts["total_with_spectrum"] == 4
    assert rep.counts["srd"] == 1
    assert rep.counts["hoffman_x^2(x+1)"] == 3
    assert rep.counts["walk_regular_among_mates"] == 1
    d = rep.to_json()
    assert d["kind"] == "claim_report" and d["passed"]
    assert all("graph" in w for w in d["witnesses"])


def test_even_claim_small():
    rep = verify_claim("even-l-implies-srd", {"n_max": 6, "lmax": 10})
    assert rep.passed and rep.counts["even_exponent_hits"] > 0


def test_mu0_claim_small():
    rep = verify_claim("mu0-classification", {"n_max": 6, "lmax": 8, "nonregular_n_max": 4})
    assert rep.passed
    assert rep.counts["DirectedCycle"] > 0 and rep.counts["CocliqueExtension"] > 0


def test_claim_reports_are_deterministic():
    a = json.dumps(verify_claim("oracle-equivalence", {"n_max": 5}).to_json(), sort_keys=True)
    b = json.dumps(verify_claim("oracle-equivalence", {"n_max": 5}).to_json(), sort_keys=True)
    assert a == b


def test_exponent_sets_in_census_are_reverse_symmetric():
    for g in enumerate_digraphs(EnumFilter(6, 2, True)):
        a, b = exponent_set(g, 12), exponent_set(reverse(g), 12)
        assert [c.params for c in a.certificates] == [c.params for c in b.certificates]


def test_spectrum_census_against_labeled_oracle():
    from dswr.algebra import char_poly

    target = (X - 2) * X ** 3 * (X + 1) ** 2
    hits = [g for g in labeled_regular(6, 2) if is_strongly_connected(g) and char_poly(g.matrix) == target]
    assert nx_class_count(hits) == 4
