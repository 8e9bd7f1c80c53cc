"""Necessary-condition battery and impossibility engines for h-vectors.

Three independent ways to rule out a candidate h-vector of a triangulated
ball are provided: the verified subset of the cone-condition battery, an
algebraic engine (graded Betti bounds of the lex ideal force a splitting
that the arithmetic of splittings cannot deliver), and a combinatorial
engine (counting the triangles a one-skeleton can possibly carry).  The
``verdict`` pipeline runs them in a fixed order and falls through to the
constructive existence check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

from .complexes import CountVector, convert
from .monomials import ek_graded_betti, is_m_vector, lex_ideal_from_hilbert


def _entries(h):
    if h.role != "h":
        raise ValueError("expected an h-vector")
    return list(h.entries)


def boundary_g(h):
    """The g-vector forced on the boundary sphere: g_i = h_i - h_{d-i}."""
    hv = _entries(h)
    d = h.d
    if hv[d] != 0:
        raise ValueError("a ball has h_d = 0")
    return CountVector("g", d, tuple(hv[i] - hv[d - i] for i in range(d // 2 + 1)))


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the cone-condition battery for one h-vector."""

    h: CountVector
    vectors: tuple          # per k: (k, vector, ok, first_failure)
    verified_flags: tuple   # (name, ok) pairs for the proven subset

    @property
    def all_pass(self):
        return all(ok for _, _, ok, _ in self.vectors)

    @property
    def verified_pass(self):
        return all(ok for _, ok in self.verified_flags)


def gconditions(h):
    """Evaluate, for k = 0..d+1, whether (h_0 - h_{d+k}, ...,
    h_m - h_{d+k-m}) with m = floor((d+k-1)/2) is an M-vector, treating
    h_i = 0 beyond index d; also record the subset that is known
    unconditionally (h an M-vector, h_d = 0, h_{d-2} >= h_{d-1}, and the
    length-3 prefix of every k-vector)."""
    hv = _entries(h)
    d = h.d

    def at(i):
        return hv[i] if 0 <= i <= d else 0

    vectors = []
    prefix_ok = True
    for k in range(d + 2):
        m = (d + k - 1) // 2
        vec = tuple(at(i) - at(d + k - i) for i in range(m + 1))
        ok, idx = is_m_vector(vec)
        vectors.append((k, vec, ok, idx))
        pok, _ = is_m_vector(vec[:3])
        prefix_ok = prefix_ok and pok
    m_ok, _ = is_m_vector(hv)
    flags = (
        ("h_is_m_vector", m_ok),
        ("h_d_zero", hv[d] == 0),
        ("penultimate_step_down", d < 2 or hv[d - 2] >= hv[d - 1]),
        ("length3_prefixes", prefix_ok),
    )
    return ConditionReport(h, tuple(vectors), flags)


def verified_conditions(h):
    """The provably necessary subset of the condition battery.

    Returns (ok, reasons).  For d <= 5 the full battery is known to be
    necessary and is therefore included.
    """
    report = gconditions(h)
    reasons = [name for name, ok in report.verified_flags if not ok]
    if h.d <= 5:
        reasons += ["cone_condition_k%d" % k
                    for k, _, ok, _ in report.vectors if not ok]
    return not reasons, reasons


def peeva_bounds(h):
    """Bounds on the top-corner Betti number of the face ring quotient:
    upper = beta_{n,n+1} of the quotient by the lex ideal with Hilbert
    function h, lower = upper - beta_{n-1,n+1}, floored at zero.  Both
    are computed in h_1 variables."""
    hv = _entries(h)
    n = hv[1] if len(hv) > 1 else 0
    if n == 0:
        return 0, 0
    basis = lex_ideal_from_hilbert(hv, n)
    upper = ek_graded_betti(basis, n, n + 1)
    lower = max(0, upper - ek_graded_betti(basis, n - 1, n + 1))
    return lower, upper


@dataclass(frozen=True)
class SplitCandidate:
    first: CountVector
    second: CountVector


def _component_passes(entries, d):
    ok, _ = is_m_vector(entries)
    if not ok:
        return False
    hv = CountVector("h", d, entries)
    ok, _ = verified_conditions(hv)
    if not ok:
        return False
    g = boundary_g(hv).entries
    ok, _ = is_m_vector(g[:3])
    return ok


def enumerate_splits(h, recursive=False):
    """All ways to write h as the join of two ball h-vectors along one
    shared ridge: h'_1 + h''_1 + 1 = h_1 and h'_i + h''_i = h_i for
    i >= 2, both components passing the verified conditions and the
    length-3 boundary prefix test.  With ``recursive`` every component
    that itself forces a split must admit one."""
    hv = _entries(h)
    d = h.d
    out = []
    if d < 1 or hv[0] != 1 or hv[1] < 1:
        return out
    ranges = [range(hv[i] + 1) for i in range(2, d + 1)]
    for h1a in range((hv[1] - 1) // 2, hv[1]):
        h1b = hv[1] - 1 - h1a
        for rest in itertools.product(*ranges):
            a = (1, h1a) + rest
            b = (1, h1b) + tuple(hv[i + 2] - rest[i] for i in range(d - 1))
            if a < b:
                continue
            if not (_component_passes(a, d) and _component_passes(b, d)):
                continue
            if recursive:
                good = True
                for part in (a, b):
                    lo, _ = peeva_bounds(CountVector("h", d, part))
                    if lo > 0 and not enumerate_splits(
                            CountVector("h", d, part), recursive=True):
                        good = False
                        break
                if not good:
                    continue
            out.append(SplitCandidate(CountVector("h", d, a),
                                      CountVector("h", d, b)))
    out.sort(key=lambda s: (s.first.entries, s.second.entries))
    return out


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str
    payload: dict = field(default_factory=dict)

    @property
    def decisive(self):
        return self.verdict != "unknown"


def betti_split_verdict(h, recursive=False):
    """Impossible when the Betti bounds force a splitting ridge but no
    admissible pair of component h-vectors exists."""
    lower, upper = peeva_bounds(h)
    splits = enumerate_splits(h, recursive=recursive)
    payload = {"peeva_lower": lower, "peeva_upper": upper,
               "split_count": len(splits)}
    if lower > 0 and not splits:
        return ObstructionReport("impossible_betti_split", payload)
    return ObstructionReport("unknown", payload)


# ---------------------------------------------------------------------------
# Absent-edge graphs
# ---------------------------------------------------------------------------

def _graph_classes(num_edges):
    """All graphs with the given number of edges and no isolated vertex,
    up to isomorphism, as frozensets of sorted vertex pairs."""
    import networkx as nx
    if num_edges == 0:
        return [frozenset()]
    reps = [[] for _ in range(num_edges + 1)]
    reps[1].append(nx.Graph([(0, 1)]))
    for a in range(1, num_edges):
        seen = []
        for g in reps[a]:
            nv = g.number_of_nodes()
            candidates = [(u, v) for u, v in
                          itertools.combinations(range(nv), 2)
                          if not g.has_edge(u, v)]
            candidates += [(u, nv) for u in range(nv)]
            candidates.append((nv, nv + 1))
            for u, v in candidates:
                g2 = g.copy()
                g2.add_edge(u, v)
                deg = tuple(sorted(d for _, d in g2.degree()))
                if not any(dg == deg and nx.is_isomorphic(g2, other)
                           for dg, other in seen):
                    seen.append((deg, g2))
        reps[a + 1] = [g for _, g in seen]
    out = []
    for g in reps[num_edges]:
        relabel = {v: i for i, v in enumerate(sorted(g.nodes()))}
        out.append(frozenset(tuple(sorted((relabel[u], relabel[v])))
                             for u, v in g.edges()))
    return sorted(out, key=lambda es: sorted(es))


def _absent_triangles(edges, n):
    """Triples of [n] containing at least one of the given absent edges;
    the graph vertices are 0..k-1 inside the n available vertices."""
    support = sorted({v for e in edges for v in e})
    inside = 0
    for triple in itertools.combinations(support, 3):
        pairs = itertools.combinations(triple, 2)
        if any(tuple(sorted(p)) in edges for p in pairs):
            inside += 1
    # each absent edge pairs with every vertex outside the support
    return inside + len(edges) * (n - len(support))


def skeleton_search(h, cap_absent_edges=7):
    """Rule an h-vector out by triangle counting on the one-skeleton.

    Enumerates the possible absent-edge graphs up to isomorphism and
    computes, for each, the h_3 of the complex with every possible
    triangle present.  Graphs falling short of h_3 are discarded; if a
    surviving graph keeps all complex degrees >= d nothing can be
    concluded.  Otherwise low-degree vertices force either a vertex in no
    facet (impossible) or the deletion of a lone facet, and the verdict
    follows from the conditions on the decremented h-vector."""
    hv = _entries(h)
    d = h.d
    if d < 3:
        return ObstructionReport("unknown", {"reason": "dimension too small"})
    if hv[1] == 0:
        # a simplex; the facet-deletion recursion needs more vertices than d
        return ObstructionReport("unknown", {"reason": "simplex"})
    f = convert(h, "f").entries
    n, f1 = f[1], f[2]
    absent = comb(n, 2) - f1
    if absent < 0:
        return ObstructionReport("unknown", {"reason": "no graph realizes f_1"})
    if absent > cap_absent_edges:
        return ObstructionReport(
            "unknown", {"reason": "absent-edge count %d above cap %d"
                        % (absent, cap_absent_edges)})
    h3 = hv[3] if d >= 3 else 0
    survivors = []
    for edges in _graph_classes(absent):
        support = {v for e in edges for v in e}
        if len(support) > n:
            continue
        max_deg = 0
        if edges:
            degs = {}
            for u, v in edges:
                degs[u] = degs.get(u, 0) + 1
                degs[v] = degs.get(v, 0) + 1
            max_deg = max(degs.values())
        min_complex_degree = n - 1 - max_deg
        triangles = comb(n, 3) - _absent_triangles(edges, n)
        h3_max = -comb(d, 3) + comb(d - 1, 2) * n - (d - 2) * f1 + triangles
        if h3_max < h3:
            continue
        survivors.append({"edges": sorted(edges),
                          "min_complex_degree": min_complex_degree,
                          "h3_max": h3_max})
    payload = {"absent_edges": absent, "h3_required": h3,
               "survivors": survivors}
    if any(s["min_complex_degree"] >= d for s in survivors):
        payload["reason"] = "a viable skeleton keeps all degrees >= d"
        return ObstructionReport("unknown", payload)
    degree_boundary = [s for s in survivors
                       if s["min_complex_degree"] == d - 1]
    if degree_boundary:
        decremented = CountVector("h", d, (1, hv[1] - 1) + tuple(hv[2:]))
        ok, reasons = verified_conditions(decremented)
        payload["decremented"] = decremented.entries
        payload["decremented_reasons"] = reasons
        if ok:
            payload["reason"] = "facet deletion yields an admissible vector"
            return ObstructionReport("unknown", payload)
    return ObstructionReport("impossible_skeleton", payload)


# ---------------------------------------------------------------------------
# The counterexample family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyParams:
    x: int
    y: int
    d: int

    def __post_init__(self):
        if not (self.x > 4 and 1 < self.y < self.x and self.d >= 6):
            raise ValueError("need x > 4, 1 < y < x and d >= 6")


def family_hvector(p):
    """The parametric h-vector (1, x, C(x,2), C(x+1,3)-2, ...,
    C(x,2)-(C(y,2)+1), x-y, 0) of length d+1."""
    x, y, d = p.x, p.y, p.d
    middle = [comb(x + 1, 3) - 2] * (d - 5)
    entries = [1, x, comb(x, 2)] + middle + \
        [comb(x, 2) - (comb(y, 2) + 1), x - y, 0]
    return CountVector("h", d, tuple(entries))


def family_certificate(p, enumerate_small=True):
    """Impossibility certificate for the family: the condition battery
    passes, yet every admissible absent-edge graph forces strictly more
    absent triangles than the f-vector allows."""
    h = family_hvector(p)
    x, y, d = p.x, p.y, p.d
    report = gconditions(h)
    f = convert(h, "f").entries
    budget = comb(d + x, 3) - f[3]
    assert 2 * budget == x * x + (2 * d - 3) * x + 4
    assert f[1] == d + x and comb(d + x, 2) - f[2] == x
    base = (x * x + (2 * d - 3) * x) // 2
    bound = base + min((k - 1) * (x - k) for k in range(2, x))
    payload = {"h": h.entries, "budget": budget, "bound": bound,
               "conditions_pass": report.all_pass}
    if enumerate_small and x <= 5:
        # every x-edge graph with maximum degree <= x-1 must exceed the
        # triangle budget outright
        n = d + x
        worst = None
        for edges in _graph_classes(x):
            degs = {}
            for u, v in edges:
                degs[u] = degs.get(u, 0) + 1
                degs[v] = degs.get(v, 0) + 1
            if max(degs.values()) > x - 1:
                continue
            t = _absent_triangles(edges, n)
            worst = t if worst is None else min(worst, t)
        payload["enumerated_min_absent_triangles"] = worst
        if worst is not None and worst <= budget:
            return ObstructionReport("unknown", payload)
    if report.all_pass and bound > budget:
        return ObstructionReport("impossible_family_certificate", payload)
    return ObstructionReport("unknown", payload)


def conjecture61_predicate(h, allow_zero=True):
    """Search for an integer m (from 0 by default, from 1 otherwise) such
    that lowering h_1 by m produces a vector meeting the construction's
    admissibility conditions.  Returns (found, witness)."""
    from .construction import construction_conditions
    hv = _entries(h)
    if h.d != 6:
        raise ValueError("defined for length-7 h-vectors")
    for m in range(0 if allow_zero else 1, hv[1] + 1):
        candidate = CountVector("h", 6, (1, hv[1] - m) + tuple(hv[2:]))
        ok, _ = construction_conditions(candidate)
        if ok:
            return True, m
    return False, None


def verdict(h, cap_absent_edges=7, recursive_splits=False):
    """Full decision pipeline for one h-vector; the first decisive stage
    wins and its evidence is attached."""
    from .construction import construct_verified, construction_conditions
    ok, reasons = verified_conditions(h)
    if not ok:
        return ObstructionReport("bl_conditions_fail", {"reasons": reasons})
    stages = {"gconditions_all_pass": gconditions(h).all_pass}
    betti = betti_split_verdict(h, recursive=recursive_splits)
    stages["betti"] = betti.payload
    if betti.decisive:
        return ObstructionReport(betti.verdict, stages)
    skel = skeleton_search(h, cap_absent_edges=cap_absent_edges)
    stages["skeleton"] = {k: v for k, v in skel.payload.items()
                          if k != "survivors"}
    if skel.decisive:
        return ObstructionReport(skel.verdict, stages)
    buildable, build_reasons = construction_conditions(h)
    if buildable:
        complex_, cert, topo = construct_verified(h)
        stages["construction"] = {
            "facets": sorted(complex_.facets),
            "order": list(cert.ordered_facets),
            "restrictions": list(cert.restrictions),
            "classification": topo.tag,
        }
        return ObstructionReport("constructible", stages)
    stages["construction_reasons"] = build_reasons
    return ObstructionReport("unknown", stages)
