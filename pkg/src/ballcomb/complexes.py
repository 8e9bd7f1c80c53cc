"""Pure simplicial complexes with exact f/h/g-vector calculus.

Faces are strictly increasing tuples of nonnegative integer vertex labels;
the empty tuple is the empty face.  A complex is stored as the antichain of
its facets and the downward closure is computed on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb


def make_face(vertices):
    face = tuple(sorted(vertices))
    if any(face[i] == face[i + 1] for i in range(len(face) - 1)):
        raise ValueError("repeated vertex in face %r" % (vertices,))
    if face and face[0] < 0:
        raise ValueError("negative vertex label in %r" % (vertices,))
    return face


def _is_antichain(facets):
    facets = sorted(facets, key=len)
    for i, f in enumerate(facets):
        fs = set(f)
        for g in facets[i + 1:]:
            if len(g) > len(f) and fs <= set(g):
                return False
    return True


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its facet antichain.

    ``frozenset({()})`` is the complex consisting of the empty face alone
    and ``frozenset()`` is the void complex.
    """

    facets: frozenset

    def __post_init__(self):
        object.__setattr__(self, "facets", frozenset(make_face(f) for f in self.facets))
        if not _is_antichain(self.facets):
            raise ValueError("facet set is not an antichain")

    @property
    def dim(self):
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self):
        return len({len(f) for f in self.facets}) <= 1

    @property
    def vertices(self):
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def vertex_count(self):
        return len(self.vertices)

    def faces_by_dimension(self):
        """Downward closure grouped by cardinality: levels[i] holds the
        faces with i vertices (dimension i-1), starting with {()}."""
        if not self.facets:
            return []
        levels = [set() for _ in range(self.dim + 2)]
        for facet in self.facets:
            for k in range(len(facet) + 1):
                levels[k].update(itertools.combinations(facet, k))
        return levels

    def faces(self):
        return {f for level in self.faces_by_dimension() for f in level}

    def has_face(self, face):
        face = set(face)
        return any(face <= set(f) for f in self.facets)


def simplex_boundary(vertices):
    """The boundary sphere of the simplex on the given vertices."""
    vs = make_face(vertices)
    return SimplicialComplex(frozenset(itertools.combinations(vs, len(vs) - 1)))


@dataclass(frozen=True)
class CountVector:
    """An f-, h- or g-vector with its complex dimension d-1 recorded as d."""

    role: str
    d: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.role not in ("f", "h", "g"):
            raise ValueError("role must be f, h or g")
        if self.role in ("f", "h") and len(self.entries) != self.d + 1:
            raise ValueError("%s-vector for d=%d needs %d entries, got %d"
                             % (self.role, self.d, self.d + 1, len(self.entries)))
        if self.role == "f":
            if self.entries[0] != 1:
                raise ValueError("f-vector must start with 1 (the empty face)")
            if any(x < 0 for x in self.entries):
                raise ValueError("f-vector entries must be nonnegative")
        if self.role == "h" and self.entries[0] != 1:
            raise ValueError("h-vector must start with 1")


def f_vector(c):
    levels = c.faces_by_dimension()
    d = c.dim + 1
    return CountVector("f", d, tuple(len(level) for level in levels))


def _expand(coeffs, binom_sign, d):
    """Coefficients of sum_i coeffs[i] * x^i * (1 + binom_sign*x)^(d-i)."""
    out = [0] * (d + 1)
    for i, a in enumerate(coeffs):
        if a == 0:
            continue
        for k in range(d - i + 1):
            out[i + k] += a * (binom_sign ** k) * comb(d - i, k)
    return tuple(out)


def convert(v, target_role):
    """Exact conversion between f- and h-vectors of the same complex.

    Both directions expand the defining polynomial identity
    sum_i h_i x^i = sum_i f_{i-1} x^i (1-x)^(d-i) over the integers.
    """
    if target_role == v.role:
        return v
    if v.role == "f" and target_role == "h":
        return CountVector("h", v.d, _expand(v.entries, -1, v.d))
    if v.role == "h" and target_role == "f":
        return CountVector("f", v.d, _expand(v.entries, +1, v.d))
    raise ValueError("cannot convert %s to %s" % (v.role, target_role))


def g_of_h(h):
    if h.role != "h":
        raise ValueError("expected an h-vector")
    e = h.entries
    return CountVector("g", h.d, (1,) + tuple(e[i] - e[i - 1] for i in range(1, len(e))))


def _maximal(faces):
    faces = sorted(set(faces), key=len, reverse=True)
    kept = []
    for f in faces:
        fs = set(f)
        if not any(fs <= set(g) for g in kept):
            kept.append(f)
    return frozenset(kept)


def link(c, face):
    face = make_face(face)
    if not c.has_face(face):
        raise ValueError("face %r not in complex" % (face,))
    fs = set(face)
    rests = [tuple(v for v in g if v not in fs)
             for g in c.facets if fs <= set(g)]
    return SimplicialComplex(_maximal(rests))


def induced(c, W):
    W = set(W)
    rests = [tuple(v for v in g if v in W) for g in c.facets]
    return SimplicialComplex(_maximal(rests) if rests else frozenset({()}))


def ridge_boundary(c):
    """The complex generated by codimension-one faces lying in exactly
    one facet."""
    if not c.is_pure:
        raise ValueError("ridge boundary requires a pure complex")
    counts = {}
    for facet in c.facets:
        for ridge in itertools.combinations(facet, len(facet) - 1):
            counts[ridge] = counts.get(ridge, 0) + 1
    free = [r for r, n in counts.items() if n == 1]
    return SimplicialComplex(frozenset(free))


def cone(c, k, apexes=None):
    """Cone over c taken k times; apex labels default to fresh integers."""
    if apexes is None:
        base = max(c.vertices, default=-1) + 1
        apexes = tuple(range(base, base + k))
    else:
        apexes = tuple(apexes)
        if len(apexes) != k or set(apexes) & set(c.vertices):
            raise ValueError("need %d fresh apex labels" % k)
    return SimplicialComplex(frozenset(f + apexes for f in c.facets))


def glue(a, b, pairs):
    """Identify boundary ridges of two complexes (or of one complex with
    itself when ``b is a``) and return the union complex.

    ``pairs`` is a sequence of (face_of_a, face_of_b, bijection) triples
    where the bijection maps vertices of the first face onto the second.
    The identified faces must be ridges of the respective boundaries.
    """
    self_glue = b is a
    bd_a = ridge_boundary(a)
    bd_b = bd_a if self_glue else ridge_boundary(b)

    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    side_b = 0 if self_glue else 1
    for fa, fb, bij in pairs:
        fa, fb = make_face(fa), make_face(fb)
        if fa not in bd_a.facets:
            raise ValueError("face %r is not a boundary ridge" % (fa,))
        if fb not in bd_b.facets:
            raise ValueError("face %r is not a boundary ridge" % (fb,))
        if set(bij) != set(fa) or {bij[v] for v in fa} != set(fb):
            raise ValueError("bijection does not match the face pair")
        for v in fa:
            union((0, v), (side_b, bij[v]))

    labels = {}

    def label(x):
        root = find(x)
        if root not in labels:
            labels[root] = len(labels)
        return labels[root]

    new_facets = set()
    sources = [(0, a)] if self_glue else [(0, a), (1, b)]
    for side, cx in sources:
        for facet in cx.facets:
            image = tuple(sorted(label((side, v)) for v in facet))
            if len(set(image)) != len(facet):
                raise ValueError("identification collapses facet %r" % (facet,))
            new_facets.add(image)
    return SimplicialComplex(frozenset(new_facets))


class NotAShellingError(ValueError):
    def __init__(self, step, message):
        super().__init__("step %d: %s" % (step, message))
        self.step = step


@dataclass(frozen=True)
class ShellingCertificate:
    """A facet order together with its minimal-new-face restrictions."""

    ordered_facets: tuple
    restrictions: tuple

    @property
    def d(self):
        return len(self.ordered_facets[0])


def verify_shelling(ordered_facets):
    """Check that a facet sequence is a shelling order.

    At step j the candidate restriction is r = {v in F_j : F_j minus v
    lies in the union of the earlier facets}; the step is valid exactly
    when no earlier facet contains r, making the new faces the interval
    [r, F_j].  Raises NotAShellingError at the first bad step.
    """
    ordered = [make_face(f) for f in ordered_facets]
    if not ordered:
        raise ValueError("empty facet sequence")
    if len({len(f) for f in ordered}) != 1:
        raise ValueError("facets must share cardinality")
    restrictions = []
    earlier = []
    for j, facet in enumerate(ordered):
        fs = set(facet)
        r = tuple(v for v in facet
                  if any(fs - {v} <= e for e in earlier))
        if any(set(r) <= e for e in earlier):
            raise NotAShellingError(j + 1, "minimal new face is not unique "
                                    "(candidate %r already present)" % (r,))
        restrictions.append(r)
        earlier.append(fs)
    return ShellingCertificate(tuple(ordered), tuple(restrictions))


def h_from_certificate(cert):
    """Histogram of restriction-face sizes, which is the h-vector."""
    d = cert.d
    entries = [0] * (d + 1)
    for r in cert.restrictions:
        entries[len(r)] += 1
    return CountVector("h", d, tuple(entries))
