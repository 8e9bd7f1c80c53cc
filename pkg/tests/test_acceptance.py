"""End-to-end acceptance battery: one test per headline guarantee.

Run with ``pytest -v`` to get a single pass/fail line per guarantee.
"""

import itertools

import pytest

from ballcomb.complexes import (
    CountVector,
    convert,
    f_vector,
    glue,
    h_from_certificate,
    induced,
    ridge_boundary,
    verify_shelling,
)
from ballcomb.construction import (
    build_bl_ball,
    construct_verified,
    construction_conditions,
    monomial_of_facet,
)
from ballcomb.homology import classify, hochster_beta_top, _component_count
from ballcomb.monomials import (
    compressed_ideal,
    divisors_one_step,
    is_m_vector,
    monomials_revlex,
    pseudo_power,
)
from ballcomb.obstruction import (
    FamilyParams,
    boundary_g,
    enumerate_splits,
    family_certificate,
    family_hvector,
    gconditions,
    peeva_bounds,
    skeleton_search,
    verdict,
)


def hv(*entries):
    return CountVector("h", len(entries) - 1, entries)


@pytest.fixture(scope="session")
def constructed_sweep():
    """Every h-vector with d <= 7 and entries <= 4 that passes the
    construction conditions, together with its verified ball."""
    results = []
    for d in range(1, 8):
        for tail in itertools.product(range(5), repeat=d):
            h = CountVector("h", d, (1,) + tail)
            ok, _ = construction_conditions(h)
            if ok:
                c, cert, topo = construct_verified(h)
                results.append((h, c, cert, topo))
    return results


def test_flagship_vector_betti_split_impossibility():
    h = hv(1, 4, 5, 7, 3, 2, 0)
    assert gconditions(h).all_pass
    assert peeva_bounds(h) == (1, 1)
    assert enumerate_splits(h) == []
    assert verdict(h).verdict == "impossible_betti_split"


def test_further_betti_split_impossibilities():
    for entries in [(1, 4, 6, 9, 4, 2, 0), (1, 5, 6, 8, 4, 3, 0)]:
        assert verdict(hv(*entries)).verdict == "impossible_betti_split", \
            entries


def test_skeleton_engine_degree_bound_and_recursion():
    h = hv(1, 4, 5, 7, 3, 2, 0)
    report = skeleton_search(h)
    assert report.verdict == "impossible_skeleton"
    # every absent-edge layout reaching the required h_3 forces a vertex
    # whose degree inside the complex is at most 5
    survivors = report.payload["survivors"]
    assert survivors and all(s["min_complex_degree"] <= 5
                             for s in survivors)
    # the facet-deletion recursion lands on the decremented vector, whose
    # length-3 boundary g prefix (1,1,2) is not an M-vector
    assert report.payload["decremented"] == (1, 3, 5, 7, 3, 2, 0)
    assert "length3_prefixes" in report.payload["decremented_reasons"]
    g = boundary_g(hv(1, 3, 5, 7, 3, 2, 0)).entries
    assert g[:3] == (1, 1, 2) and not is_m_vector(g[:3])[0]


def test_family_certificate_grid():
    for d in (6, 7):
        for x in range(5, 9):
            for y in range(2, x):
                p = FamilyParams(x, y, d)
                assert gconditions(family_hvector(p)).all_pass, (x, y, d)
                report = family_certificate(p)
                assert report.verdict == "impossible_family_certificate", \
                    (x, y, d)
                excess = report.payload["bound"] - report.payload["budget"]
                assert excess >= 1, (x, y, d)


def test_construction_soundness_sweep(constructed_sweep):
    assert len(constructed_sweep) == 498
    for h, c, cert, topo in constructed_sweep:
        recomputed = verify_shelling(cert.ordered_facets)
        assert recomputed.restrictions == cert.restrictions, h.entries
        assert h_from_certificate(cert).entries == h.entries, h.entries
        assert convert(f_vector(c), "h").entries == h.entries, h.entries
        assert topo.tag == "homology_ball", h.entries
        assert classify(topo.boundary_complex).tag == "homology_sphere", \
            h.entries


def test_compressed_ideal_ball_layer():
    seqs = []
    for length in (1, 2, 3, 4):
        for tail in itertools.product(range(7), repeat=length):
            seq = (1,) + tail
            if is_m_vector(seq)[0] and sum(seq) <= 60:
                seqs.append(seq)
    seqs = sorted(set(seqs), key=lambda s: (len(s), s))
    step = max(1, len(seqs) // 50)
    chosen = seqs[::step][:50]
    assert len(chosen) == 50
    for seq in chosen:
        ideal = compressed_ideal(seq)
        d = 2 * (len(seq) - 1) + 1
        ball, cert = build_bl_ball(ideal, d)
        recomputed = verify_shelling(cert.ordered_facets)
        assert recomputed.restrictions == cert.restrictions, seq
        for facet, r in zip(cert.ordered_facets, cert.restrictions):
            assert len(r) == len(monomial_of_facet(facet, "alpha", d)), seq
        want = tuple(seq) + (0,) * (d + 2 - len(seq))
        assert h_from_certificate(cert).entries == want, seq
        assert convert(f_vector(ball), "h").entries == want, seq


def test_hochster_peeva_consistency(constructed_sweep):
    for h, c, _, _ in constructed_sweep:
        beta = hochster_beta_top(c)
        lower, upper = peeva_bounds(h)
        assert lower <= beta <= upper, h.entries
        verts = set(c.vertices)
        disconnecting = any(
            _component_count(induced(c, verts - set(ridge))) > 1
            for facet in c.facets
            for ridge in itertools.combinations(facet, c.dim))
        assert (beta > 0) == disconnecting, h.entries


def test_gluing_arithmetic(constructed_sweep):
    candidates = [(h, c) for h, c, _, _ in constructed_sweep
                  if 3 <= h.d <= 5 and h.entries[1] > 0]
    by_d = {}
    for h, c in candidates:
        by_d.setdefault(h.d, []).append((h, c))
    pairs = []
    for d in sorted(by_d):
        pool = by_d[d]
        for i in range(0, len(pool) - 1, 2):
            pairs.append((pool[i], pool[i + 1]))
            if len(pairs) == 20:
                break
        if len(pairs) == 20:
            break
    assert len(pairs) == 20
    for (ha, a), (hb, b) in pairs:
        ra = min(ridge_boundary(a).facets)
        rb = min(ridge_boundary(b).facets)
        glued = glue(a, b, [(ra, rb, dict(zip(ra, rb)))])
        got = convert(f_vector(glued), "h").entries
        want = [1, ha.entries[1] + hb.entries[1] + 1]
        want += [ha.entries[i] + hb.entries[i]
                 for i in range(2, ha.d + 1)]
        assert got == tuple(want), (ha.entries, hb.entries)
    # a known six-ball h-vector that the sufficiency checker declines,
    # so the pairwise property above is the operative guarantee
    assert not construction_conditions(hv(1, 3, 6, 10, 5, 3, 0))[0]


def test_low_dimension_completeness():
    for d in (4, 5):
        for tail in itertools.product(range(6), repeat=d):
            h = CountVector("h", d, (1,) + tail)
            if not gconditions(h).all_pass:
                continue
            ok, reasons = construction_conditions(h)
            assert ok, (h.entries, reasons)
            _, _, topo = construct_verified(h)
            assert topo.tag == "homology_ball", h.entries


def test_m_vector_kernel():
    def brute_growth(l, i):
        nvars = l + 1
        segment = set(itertools.islice(monomials_revlex(i, nvars), l))
        candidates = {tuple(sorted(m + (v,)))
                      for m in segment for v in range(1, nvars + 1)}
        return len({c for c in candidates
                    if all(x in segment for x in divisors_one_step(c))})

    for i in range(1, 6):
        for l in range(1, 31):
            assert pseudo_power(l, i) == brute_growth(l, i), (l, i)

    def m_vectors(r, cap):
        def extend(prefix):
            k = len(prefix) - 1
            if k == r:
                yield tuple(prefix)
                return
            last = prefix[-1]
            top = 0 if last == 0 else (
                cap if k == 0 else min(cap, pseudo_power(last, k)))
            for nxt in range(top + 1):
                yield from extend(prefix + [nxt])
        yield from extend([1])

    for v in m_vectors(5, 6):
        b = list(itertools.accumulate(v))
        for k in range(1, len(v) - 1):
            assert b[k + 1] <= pseudo_power(b[k], k), v
