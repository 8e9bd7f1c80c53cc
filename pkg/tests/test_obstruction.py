import pytest

from ballcomb.complexes import CountVector, convert
from ballcomb.obstruction import (
    FamilyParams,
    betti_split_verdict,
    boundary_g,
    conjecture61_predicate,
    enumerate_splits,
    family_certificate,
    family_hvector,
    gconditions,
    peeva_bounds,
    skeleton_search,
    verdict,
    verified_conditions,
)


def hv(*entries):
    return CountVector("h", len(entries) - 1, entries)


def test_boundary_g():
    assert boundary_g(hv(1, 0, 0, 0)).entries == (1, 0)
    assert boundary_g(hv(1, 4, 5, 7, 3, 2, 0)).entries == (1, 2, 2, 0)
    assert boundary_g(hv(1, 3, 5, 7, 3, 2, 0)).entries == (1, 1, 2, 0)
    with pytest.raises(ValueError):
        boundary_g(hv(1, 2, 0, 1))


def test_gconditions():
    assert gconditions(hv(1, 4, 5, 7, 3, 2, 0)).all_pass
    report = gconditions(hv(1, 3, 5, 7, 3, 2, 0))
    k0 = report.vectors[0]
    assert k0[0] == 0 and k0[1][:3] == (1, 1, 2) and not k0[2]
    assert gconditions(hv(1, 0, 0, 0, 0)).all_pass
    # every recorded vector is reproducible from h by the formula
    h = hv(1, 3, 4, 2, 1, 0)
    d = 5
    e = h.entries
    for k, vec, _, _ in gconditions(h).vectors:
        m = (d + k - 1) // 2
        want = tuple(e[i] - (e[d + k - i] if d + k - i <= d else 0)
                     for i in range(m + 1))
        assert vec == want


def test_verified_conditions():
    assert verified_conditions(hv(1, 3, 2, 0))[0]
    # h_1 >= h_2 is necessary for balls; its violation must be caught
    ok, reasons = verified_conditions(hv(1, 2, 3, 0))
    assert not ok and "penultimate_step_down" in reasons
    ok, reasons = verified_conditions(hv(1, 2, 0, 1))
    assert not ok and "h_d_zero" in reasons
    ok, reasons = verified_conditions(hv(1, 1, 0, 2, 0, 0))
    assert not ok and "h_is_m_vector" in reasons
    ok, reasons = verified_conditions(hv(1, 3, 5, 7, 3, 2, 0))
    assert not ok and "length3_prefixes" in reasons


def test_peeva_bounds():
    assert peeva_bounds(hv(1, 4, 5, 7, 3, 2, 0)) == (1, 1)
    assert peeva_bounds(hv(1, 0, 0, 0, 0, 0, 0)) == (0, 0)
    lower, upper = peeva_bounds(hv(1, 4, 6, 9, 4, 2, 0))
    assert lower >= 1 and upper >= lower


def test_enumerate_splits():
    assert enumerate_splits(hv(1, 4, 5, 7, 3, 2, 0)) == []
    pairs = {(s.first.entries, s.second.entries)
             for s in enumerate_splits(hv(1, 2, 0, 0))}
    assert ((1, 1, 0, 0), (1, 0, 0, 0)) in pairs
    pairs = {(s.first.entries, s.second.entries)
             for s in enumerate_splits(hv(1, 1, 0, 0))}
    assert pairs == {((1, 0, 0, 0), (1, 0, 0, 0))}


def test_split_arithmetic_is_glue_arithmetic():
    # the split pairs invert the one-ridge gluing rule on h-vectors
    h = hv(1, 3, 1, 0, 0)
    for s in enumerate_splits(h):
        a, b = s.first.entries, s.second.entries
        assert a[1] + b[1] + 1 == h.entries[1]
        for i in range(2, 5):
            assert a[i] + b[i] == h.entries[i]


def test_betti_split_verdict():
    assert betti_split_verdict(hv(1, 4, 5, 7, 3, 2, 0)).verdict == \
        "impossible_betti_split"
    assert betti_split_verdict(hv(1, 5, 6, 8, 4, 3, 0)).verdict == \
        "impossible_betti_split"
    assert betti_split_verdict(hv(1, 4, 6, 9, 4, 2, 0)).verdict == \
        "impossible_betti_split"
    assert betti_split_verdict(hv(1, 1, 0, 0)).verdict == "unknown"


def test_skeleton_search():
    report = skeleton_search(hv(1, 4, 5, 7, 3, 2, 0))
    assert report.verdict == "impossible_skeleton"
    assert all(s["min_complex_degree"] <= 5
               for s in report.payload["survivors"])
    assert report.payload["decremented"] == (1, 3, 5, 7, 3, 2, 0)
    assert report.payload["decremented_reasons"]
    assert skeleton_search(hv(1, 0, 0, 0, 0, 0, 0)).verdict == "unknown"
    # a tight cap gives up rather than guessing
    assert skeleton_search(hv(1, 4, 5, 7, 3, 2, 0),
                           cap_absent_edges=3).verdict == "unknown"


def test_family_hvector():
    assert family_hvector(FamilyParams(5, 2, 6)).entries == \
        (1, 5, 10, 18, 8, 3, 0)
    assert family_hvector(FamilyParams(5, 4, 6)).entries == \
        (1, 5, 10, 18, 3, 1, 0)
    assert family_hvector(FamilyParams(6, 2, 7)).entries == \
        (1, 6, 15, 33, 33, 13, 4, 0)
    with pytest.raises(ValueError):
        FamilyParams(4, 2, 6)
    with pytest.raises(ValueError):
        FamilyParams(5, 1, 6)


def test_family_f_identities():
    for x in range(5, 11):
        for d in range(6, 10):
            p = FamilyParams(x, 2, d)
            f = convert(family_hvector(p), "f").entries
            assert f[1] == d + x
            from math import comb
            assert comb(d + x, 2) - f[2] == x
            assert comb(d + x, 3) - f[3] == \
                (x * x + (2 * d - 3) * x + 4) // 2


def test_family_certificate():
    r = family_certificate(FamilyParams(5, 2, 6))
    assert r.verdict == "impossible_family_certificate"
    assert r.payload["budget"] == 37 and r.payload["bound"] == 38
    assert r.payload["enumerated_min_absent_triangles"] >= 38
    assert family_certificate(FamilyParams(5, 3, 6)).verdict == \
        "impossible_family_certificate"
    assert family_certificate(FamilyParams(6, 2, 7)).verdict == \
        "impossible_family_certificate"


def test_conjecture61_predicate():
    assert conjecture61_predicate(hv(1, 1, 0, 0, 0, 0, 0)) == (True, 1)
    found, _ = conjecture61_predicate(hv(1, 4, 5, 7, 3, 2, 0))
    assert not found
    # regression value: the vertex-addition search on the glued example
    assert conjecture61_predicate(hv(1, 5, 7, 10, 5, 3, 0)) == (False, None)
    with pytest.raises(ValueError):
        conjecture61_predicate(hv(1, 1, 0))


def test_verdict_pipeline():
    assert verdict(hv(1, 4, 5, 7, 3, 2, 0)).verdict == "impossible_betti_split"
    assert verdict(hv(1, 2, 0, 1)).verdict == "bl_conditions_fail"
    out = verdict(hv(1, 2, 2, 1, 0))
    assert out.verdict == "constructible"
    assert out.payload["construction"]["classification"] == "homology_ball"


def test_verdict_mutual_exclusion():
    for entries in [(1, 4, 5, 7, 3, 2, 0), (1, 2, 2, 1, 0), (1, 2, 0, 1),
                    (1, 3, 3, 3, 1, 1, 0)]:
        out = verdict(hv(*entries))
        if out.verdict == "constructible":
            assert "construction" in out.payload
        else:
            assert "construction" not in out.payload
