"""Shellable-ball construction from an admissible h-vector.

The pipeline builds a simplicial d-ball B(J) from a compressed order
ideal J (facets in bijection with the monomials of J), passes to its
boundary sphere, removes a carefully selected sub-ball, and returns the
complementary ball, whose h-vector is the requested one.  Two independent
routes to the same facet set are provided: ``complement_ball`` (monomial
selection) and ``appendix_shelling`` (explicit shelling order with
predicted restriction faces); their agreement is checked end to end in
``construct_verified``.

Facets of B(J) for odd d are unions of (d+1)/2 vertex pairs {i_j, i_j+1}
with i_{j+1} > i_j + 1; the monomial with extended exponents
e_1 <= ... <= e_{(d+1)/2} maps to the facet with i_j = e_j + 2j - 1.
For even d the same facets are coned over an extra vertex 0.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .complexes import (CountVector, ShellingCertificate, SimplicialComplex,
                        convert, f_vector, verify_shelling)
from .homology import classify
from .monomials import (OrderIdeal, compressed_ideal, extended_rep,
                        is_m_vector, revlex_key)


def facet_of_monomial(m, mode, d, n=None):
    """Facet corresponding to a monomial.

    mode "alpha": facet of the d-ball built from an order ideal (d odd
    gives pairs with i_j = e_j + 2j - 1; d even additionally contains 0).
    mode "alpha_prime": boundary-sphere facet with i_j = e_j + 2j and the
    base vertex 1; defined for odd d.
    """
    if mode == "alpha":
        if d % 2 == 0:
            return (0,) + facet_of_monomial(m, "alpha", d - 1, n)
        pairs = (d + 1) // 2
        e = extended_rep(m, pairs)
        out = []
        for j in range(1, pairs + 1):
            i = e[j - 1] + 2 * j - 1
            out.extend((i, i + 1))
    elif mode == "alpha_prime":
        if d % 2 == 0:
            raise ValueError("alpha_prime is defined for odd d")
        pairs = (d - 1) // 2
        e = extended_rep(m, pairs)
        out = [1]
        for j in range(1, pairs + 1):
            i = e[j - 1] + 2 * j
            out.extend((i, i + 1))
    else:
        raise ValueError("unknown mode %r" % (mode,))
    if n is not None and out[-1] > n:
        raise ValueError("facet needs vertex %d but only %d available"
                         % (out[-1], n))
    return tuple(out)


def monomial_of_facet(facet, mode, d):
    """Inverse of facet_of_monomial."""
    facet = tuple(sorted(facet))
    if mode == "alpha" and d % 2 == 0:
        if facet[0] != 0:
            raise ValueError("even-d facet must contain 0")
        return monomial_of_facet(facet[1:], "alpha", d - 1)
    if mode == "alpha_prime":
        if facet[0] != 1:
            raise ValueError("facet must contain the base vertex 1")
        facet = facet[1:]
    exps = []
    for j in range(0, len(facet), 2):
        if facet[j + 1] != facet[j] + 1:
            raise ValueError("facet is not a union of adjacent pairs")
        j1 = j // 2 + 1
        base = 2 * j1 - 1 if mode == "alpha" else 2 * j1
        exps.append(facet[j] - base)
    if any(e < 0 for e in exps) or any(a > b for a, b in zip(exps, exps[1:])):
        raise ValueError("facet is not in the image of the correspondence")
    return tuple(e for e in exps if e > 0)


def kalai_restriction(m, d):
    """Restriction face of the facet of m in the shelling of the ball:
    the right endpoints of the displaced pairs."""
    pairs = (d + 1) // 2 if d % 2 else d // 2
    e = extended_rep(m, pairs)
    out = []
    for j in range(1, pairs + 1):
        if e[j - 1] > 0:
            i = e[j - 1] + 2 * j - 1
            out.append(i + 1)
    return tuple(out)


def _ideal_sorted(I):
    return sorted(I.monomials, key=lambda m: (len(m), revlex_key(m)))


def build_bl_ball(I, d, n=None):
    """The shellable ball B(I) of an order ideal together with its
    shelling certificate (facets ordered by degree then revlex; the
    restriction sizes equal the monomial degrees)."""
    if not isinstance(I, OrderIdeal):
        I = OrderIdeal(frozenset(I))
    order = _ideal_sorted(I)
    facets = [facet_of_monomial(m, "alpha", d, n) for m in order]
    restrictions = [kalai_restriction(m, d) for m in order]
    complex_ = SimplicialComplex(frozenset(facets))
    cert = ShellingCertificate(tuple(facets), tuple(restrictions))
    return complex_, cert


def _ridge_census(facets):
    counts = {}
    for facet in facets:
        for i in range(len(facet)):
            counts[facet[:i] + facet[i + 1:]] = \
                counts.get(facet[:i] + facet[i + 1:], 0) + 1
    return counts


def boundary_facet_test(m, I, d, n=None):
    """Whether the alpha_prime facet of m lies on the boundary of B(I):
    true exactly when the index-lowered monomial belongs to I."""
    if not isinstance(I, OrderIdeal):
        I = OrderIdeal(frozenset(I))
    lowered = tuple(sorted(v - 1 for v in m if v - 1 > 0))
    return lowered in I.monomials


class ConditionError(ValueError):
    """The h-vector fails the construction's admissibility conditions."""


def _require_h(h):
    if h.role != "h":
        raise ValueError("expected an h-vector")
    return list(h.entries)


def construction_conditions(h):
    """Check the three admissibility conditions, for either parity of d.

    Returns (ok, reasons).  With mid = floor(d/2) and c = floor((d-1)/2)
    the conditions are:
      1. (1, h_1-1, ..., h_{mid-1}-h_{mid-2}, max(h_mid-h_{mid-1}, 0))
         is an M-vector;
      2. (1, h_1-h_{d-1}, ..., h_c-h_{d-c}) is an M-vector;
      3. h_j >= h_{j+1} for j from floor((d+1)/2) to d-1;
    together with h_0 = 1, h_d = 0 and nonnegative entries.
    """
    hv = _require_h(h)
    d = h.d
    reasons = []
    if d < 1:
        return False, ["need d >= 1"]
    if hv[d] != 0:
        reasons.append("h_d must be 0")
    if any(x < 0 for x in hv):
        reasons.append("negative entry")
    if reasons:
        return False, reasons
    if all(x == 0 for x in hv[1:]):
        return True, []  # the simplex
    mid = d // 2
    c = (d - 1) // 2
    g = [1] + [hv[i] - hv[i - 1] for i in range(1, mid)] \
        + ([max(hv[mid] - hv[mid - 1], 0)] if mid >= 1 else [])
    ok, idx = is_m_vector(g)
    if not ok:
        reasons.append("growth vector %s fails at index %s" % (tuple(g), idx))
    G = [1] + [hv[i] - hv[d - i] for i in range(1, c + 1)]
    ok, idx = is_m_vector(G)
    if not ok:
        reasons.append("boundary-difference vector %s fails at index %s"
                       % (tuple(G), idx))
    start = (d + 1) // 2
    for j in range(start, d):
        if hv[j] < hv[j + 1]:
            reasons.append("tail not weakly decreasing at index %d" % (j + 1))
            break
    return not reasons, reasons


@dataclass
class SelectionState:
    """Data shared by the two construction routes for one h-vector."""

    h: CountVector
    d: int
    D: int                      # odd ball parameter; D = d-1 when d is even
    coned: bool                 # true when the extra vertex 0 is used
    g: tuple                    # degree sequence of the source ideal
    ideal: OrderIdeal           # compressed ideal J with degree sequence g
    G: tuple                    # target sizes of the selected sets
    negative: bool              # middle entry drops below its predecessor
    M: list = field(default_factory=list)        # selected monomials by degree
    S: list = field(default_factory=list)        # candidate pools with tags
    E: tuple = ()               # extra top-degree monomials (negative case)


def select_type_sets(h):
    """Choose, degree by degree, the monomials whose alpha_prime facets
    form the sub-ball to be removed from the boundary sphere.

    S_{k+1} pools Y1-multiples of the previous selection (type one) with
    index-raised degree-(k+1) ideal members (type two); the revlex-first
    G_{k+1} of the pool are selected.  In the negative case the revlex
    first E monomials of the top selection are recorded separately.
    """
    ok, reasons = construction_conditions(h)
    if not ok:
        raise ConditionError("; ".join(reasons))
    hv = _require_h(h)
    d = h.d
    D = d if d % 2 else d - 1
    coned = d % 2 == 0
    mid = d // 2
    c = (d - 1) // 2
    negative = mid >= 1 and hv[mid] < hv[mid - 1]
    g = [1] + [hv[i] - hv[i - 1] for i in range(1, mid)] \
        + ([max(hv[mid] - hv[mid - 1], 0)] if mid >= 1 else [])
    G = [1] + [hv[i] - hv[d - i] for i in range(1, c + 1)]
    if negative and not coned:
        # the altered top target: one more index-lowered difference
        G[c] = hv[c - 1] - hv[d - c]
    ideal = compressed_ideal(g)
    state = SelectionState(h=h, d=d, D=D, coned=coned, g=tuple(g),
                           ideal=ideal, G=tuple(G), negative=negative)
    state.M.append({()})
    state.S.append({"type_one": set(), "type_two": {()}})
    for k in range(1, len(G)):
        type_one = {tuple(sorted((1,) + m)) for m in state.M[k - 1]}
        type_two = {tuple(v + 1 for v in m) for m in ideal.graded(k)}
        pool = sorted(type_one | type_two, key=revlex_key)
        if len(pool) < G[k]:
            raise RuntimeError("candidate pool of degree %d too small" % k)
        state.M.append(set(pool[:G[k]]))
        state.S.append({"type_one": type_one, "type_two": type_two})
    if negative:
        count = hv[mid - 1] - hv[mid]
        top = sorted(state.M[-1], key=revlex_key)
        if len(top) < count:
            raise RuntimeError("not enough top-degree selections")
        state.E = tuple(top[:count])
    # the union of the selections must be closed downward in the
    # componentwise partial order on padded exponent vectors
    chosen = {m for level in state.M for m in level}
    pad = max(len(m) for m in chosen) if chosen else 0
    for m in chosen:
        em = extended_rep(m, pad)
        for other in _partial_downset(em):
            if other not in chosen:
                raise RuntimeError("selection is not an initial segment")
    return state


def _partial_downset(em):
    for combo in itertools.product(*(range(e + 1) for e in em)):
        if all(a <= b for a, b in zip(combo, combo[1:])):
            yield tuple(v for v in combo if v)


def gamma_facet(m, D):
    """Boundary facet obtained from a fully shifted top-degree monomial by
    trading the base vertex 1 for the vertex 2."""
    f = set(facet_of_monomial(m, "alpha_prime", D))
    f.discard(1)
    f.add(2)
    return tuple(sorted(f))


def _removed_boundary_facets(state):
    """alpha_prime facets of the selected monomials (plus the gamma facets
    in the negative case): the sub-ball removed from the boundary sphere."""
    D = state.D
    removed = set()
    for level in state.M:
        for m in level:
            removed.add(facet_of_monomial(m, "alpha_prime", D))
    for m in state.E:
        removed.add(gamma_facet(m, D))
    return removed


def _simplex_target(h):
    """The facet of the one-facet ball when every entry past h_0 is 0."""
    hv = _require_h(h)
    if h.d >= 1 and all(x == 0 for x in hv[1:]):
        return tuple(range(1, h.d + 1))
    return None


def complement_ball(h, state=None):
    """The ball with h-vector h, as the closure of the boundary sphere of
    B(J) minus the selected sub-ball (coned over 0 when d is even, with
    the facets of B(J) themselves joining the complex)."""
    simplex = _simplex_target(h)
    if simplex is not None:
        return SimplicialComplex(frozenset({simplex}))
    if state is None:
        state = select_type_sets(h)
    ball, _ = build_bl_ball(state.ideal, state.D)
    census = _ridge_census(ball.facets)
    boundary = {f for f, cnt in census.items() if cnt == 1}
    removed = _removed_boundary_facets(state)
    if not removed <= boundary:
        raise RuntimeError("selected sub-ball leaves the boundary sphere")
    kept = boundary - removed
    if state.coned:
        facets = set(ball.facets) | {(0,) + f for f in sorted(kept)}
    else:
        facets = kept
    return SimplicialComplex(frozenset(facets))


# ---------------------------------------------------------------------------
# Explicit shelling order
# ---------------------------------------------------------------------------

def _left_and_blocks(facet):
    """Split a sorted facet into its initial run 1..l and the maximal
    contiguous blocks after it."""
    p = sorted(facet)
    l = 0
    while l < len(p) and p[l] == l + 1:
        l += 1
    blocks = []
    for v in p[l:]:
        if blocks and blocks[-1][-1] == v - 1:
            blocks[-1].append(v)
        else:
            blocks.append([v])
    return l, blocks


def _order_first_half(f, g):
    """Comparator for the first-half facets: larger initial run first;
    then block by block, earlier start first, odd length before even,
    shorter odd (or longer even) first, ties among identical odd blocks
    broken by the largest vertex in exactly one of the facets."""
    lf, bf = _left_and_blocks(f)
    lg, bg = _left_and_blocks(g)
    if lf != lg:
        return -1 if lf > lg else 1
    for kf, kg in itertools.zip_longest(bf, bg):
        if kf is None or kg is None:
            return 1 if kf is None else -1
        if kf[0] != kg[0]:
            return -1 if kf[0] < kg[0] else 1
        odd_f, odd_g = len(kf) % 2, len(kg) % 2
        if odd_f != odd_g:
            return -1 if odd_f else 1
        if len(kf) != len(kg):
            if odd_f:
                return -1 if len(kf) < len(kg) else 1
            return -1 if len(kf) > len(kg) else 1
        if odd_f:
            e = max(set(f) ^ set(g))
            return -1 if e in f else 1
    return 0


def _positional_restriction(facet):
    """Every second vertex after the initial run 1..l."""
    p = sorted(facet)
    l = 0
    while l < len(p) and p[l] == l + 1:
        l += 1
    return tuple(p[l + 1::2])


def _shifted_pair_lefts(m, D):
    pairs = (D + 1) // 2
    e = extended_rep(m, pairs)
    return [e[j - 1] + 2 * j - 1 for j in range(1, pairs + 1) if e[j - 1] > 0]


def _first_half(state, boundary):
    """Facets of the leading ball in the boundary sphere: drop an odd
    vertex of the initial run (not 1 in the negative case) or the left
    end of a shifted pair, keeping only boundary ridges."""
    D = state.D
    faces = set()
    for m in state.ideal.monomials:
        facet = facet_of_monomial(m, "alpha", D)
        s = len(m)
        run = D + 1 - 2 * s
        candidates = [v for v in range(1, run + 1, 2)
                      if not (state.negative and v == 1)]
        candidates += _shifted_pair_lefts(m, D)
        fs = set(facet)
        for v in candidates:
            face = tuple(sorted(fs - {v}))
            if face in boundary:
                faces.add(face)
    return sorted(faces, key=functools.cmp_to_key(_order_first_half))


def _second_half(state):
    """The A_k facets: drop an even initial-run vertex k (or the vertex 1
    in the negative case) from the facet of m; for each k keep the target
    number of facets, taking monomials in descending revlex order."""
    D = state.D
    hv = list(state.h.entries)
    shift = 1 if state.coned else 0
    by_monomial = sorted(state.ideal.monomials, key=revlex_key, reverse=True)
    ks = ([1] if state.negative else []) + \
        list(range(2, D + 2, 2))
    chosen = {}
    for k in ks:
        eligible = [m for m in by_monomial if k <= D + 1 - 2 * len(m)]
        pos = (D - 1) // 2 + k // 2 + shift
        count = hv[pos] if pos <= state.d else 0
        if count > len(eligible):
            raise RuntimeError("not enough facets available for k=%d" % k)
        for m in eligible[:count]:
            chosen.setdefault(m, []).append(k)
    out = []
    for m in by_monomial:
        facet = facet_of_monomial(m, "alpha", D)
        s = len(m)
        lefts = _shifted_pair_lefts(m, D)
        for k in sorted(chosen.get(m, ())):
            face = tuple(sorted(set(facet) - {k}))
            r = tuple(sorted(set(range(1, k)) |
                             {2 * i + 1 for i in range(max(1, k // 2),
                                                       (D - 1) // 2 - s + 1)} |
                             set(lefts)))
            out.append((face, r))
    return out


def appendix_shelling(h, state=None):
    """Explicit shelling certificate for the complementary ball, with the
    restriction face of every facet predicted in closed form."""
    simplex = _simplex_target(h)
    if simplex is not None:
        return verify_shelling([simplex])
    if state is None:
        state = select_type_sets(h)
    ball, ball_cert = build_bl_ball(state.ideal, state.D)
    census = _ridge_census(ball.facets)
    boundary = {f for f, cnt in census.items() if cnt == 1}
    ordered = []
    restrictions = []
    if state.coned:
        for facet, r in zip(ball_cert.ordered_facets, ball_cert.restrictions):
            ordered.append(facet)
            restrictions.append(r)
    prefix = (0,) if state.coned else ()
    for face in _first_half(state, boundary):
        ordered.append(prefix + face)
        restrictions.append(prefix + _positional_restriction(face))
    for face, r in _second_half(state):
        ordered.append(prefix + face)
        restrictions.append(prefix + r)
    cert = verify_shelling(ordered)
    if cert.restrictions != tuple(restrictions):
        raise RuntimeError("predicted restriction faces disagree with the "
                           "shelling checker")
    return cert


def construct_verified(h):
    """Build the ball for h twice (facet selection and explicit shelling),
    check that both routes agree, that the certified h-vector matches, and
    that the result is a homology ball with sphere boundary."""
    state = None if _simplex_target(h) is not None else select_type_sets(h)
    complex_ = complement_ball(h, state)
    cert = appendix_shelling(h, state)
    if frozenset(cert.ordered_facets) != complex_.facets:
        raise RuntimeError("the two construction routes disagree")
    from .complexes import h_from_certificate
    hv = h_from_certificate(cert)
    if hv.entries != h.entries:
        raise RuntimeError("certificate h-vector %s differs from target %s"
                           % (hv.entries, h.entries))
    if convert(f_vector(complex_), "h").entries != h.entries:
        raise RuntimeError("face-count h-vector differs from target")
    topo = classify(complex_)
    if topo.tag != "homology_ball":
        raise RuntimeError("construction output is not a homology ball "
                           "(got %s)" % topo.tag)
    return complex_, cert, topo
