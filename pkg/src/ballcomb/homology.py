"""Integer reduced simplicial homology and homology-manifold classification.

Chain groups are indexed by face dimension, including the empty face in
degree -1, so all homology is reduced.  Ranks and torsion come from an
exact sparse Smith normal form over arbitrary-precision integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import SimplicialComplex, induced, link, ridge_boundary


def boundary_matrix(c, i):
    """Matrix of the boundary map from i-faces to (i-1)-faces as a dict
    mapping (row, col) to +-1; row/column order follows the sorted face
    lists.  i = 0 gives the augmentation onto the empty face."""
    levels = c.faces_by_dimension()
    rows = sorted(levels[i]) if i < len(levels) else []
    cols = sorted(levels[i + 1]) if i + 1 < len(levels) else []
    row_index = {f: k for k, f in enumerate(rows)}
    entries = {}
    for j, face in enumerate(cols):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            entries[(row_index[sub], j)] = (-1) ** pos
    return entries, len(rows), len(cols)


def smith_normal_form(entries, nrows=None, ncols=None):
    """Invariant factors and rank of an integer matrix.

    ``entries`` maps (row, col) to a nonzero integer (zeros are ignored).
    Pivots of absolute value one are preferred, chosen to minimize fill;
    otherwise the smallest remaining entry is reduced until it divides its
    row and column.  Divisibility of the diagonal is restored at the end.
    """
    vals = {}
    rows = {}
    cols = {}
    for (r, c), v in entries.items():
        if v:
            vals[(r, c)] = v
            rows.setdefault(r, set()).add(c)
            cols.setdefault(c, set()).add(r)

    def set_entry(r, c, v):
        if v:
            vals[(r, c)] = v
            rows.setdefault(r, set()).add(c)
            cols.setdefault(c, set()).add(r)
        else:
            if (r, c) in vals:
                del vals[(r, c)]
                rows[r].discard(c)
                cols[c].discard(r)

    def add_row(src, dst, mult):
        for c in list(rows.get(src, ())):
            set_entry(dst, c, vals.get((dst, c), 0) + mult * vals[(src, c)])

    def add_col(src, dst, mult):
        for r in list(cols.get(src, ())):
            set_entry(r, dst, vals.get((r, dst), 0) + mult * vals[(r, src)])

    diagonal = []
    while vals:
        unit = None
        best_fill = None
        smallest = None
        small_mag = None
        for (r, c), v in vals.items():
            mag = abs(v)
            if mag == 1:
                fill = (len(rows[r]) - 1) * (len(cols[c]) - 1)
                if best_fill is None or fill < best_fill:
                    unit, best_fill = (r, c), fill
                    if fill == 0:
                        break
            elif small_mag is None or mag < small_mag:
                smallest, small_mag = (r, c), mag
        r, c = unit if unit is not None else smallest
        pivot = vals[(r, c)]
        if unit is None:
            # Reduce the pivot row and column until the pivot divides them.
            reduced = False
            for r2 in list(cols[c]):
                if r2 != r and vals[(r2, c)] % pivot:
                    add_row(r, r2, -(vals[(r2, c)] // pivot))
                    reduced = True
            for c2 in list(rows[r]):
                if c2 != c and vals[(r, c2)] % pivot:
                    add_col(c, c2, -(vals[(r, c2)] // pivot))
                    reduced = True
            if reduced:
                continue
        for r2 in list(cols[c]):
            if r2 != r:
                add_row(r, r2, -(vals[(r2, c)] // pivot))
        for c2 in list(rows[r]):
            if c2 != c:
                add_col(c, c2, -(vals[(r, c2)] // pivot))
        set_entry(r, c, 0)
        diagonal.append(abs(pivot))

    # Restore the divisibility chain d_1 | d_2 | ...
    from math import gcd
    changed = True
    while changed:
        changed = False
        for i in range(len(diagonal) - 1):
            a, b = diagonal[i], diagonal[i + 1]
            if b % a:
                g = gcd(a, b)
                diagonal[i], diagonal[i + 1] = g, a * b // g
                changed = True
    diagonal.sort()
    return tuple(diagonal), len(diagonal)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology by degree: pairs[k] = (free rank, torsion factors)
    for degree k-1, so pairs[0] describes degree -1."""

    pairs: tuple

    def rank(self, degree):
        idx = degree + 1
        if 0 <= idx < len(self.pairs):
            return self.pairs[idx][0]
        return 0

    def torsion(self, degree):
        idx = degree + 1
        if 0 <= idx < len(self.pairs):
            return self.pairs[idx][1]
        return ()

    @property
    def is_acyclic(self):
        return all(r == 0 and not t for r, t in self.pairs)

    def is_sphere(self, top):
        return all((r, tuple(t)) == ((1, ()) if k - 1 == top else (0, ()))
                   for k, (r, t) in enumerate(self.pairs)) and self.rank(top) == 1


_HOMOLOGY_MEMO = {}


def _canonical_facets(c):
    relabel = {v: i for i, v in enumerate(c.vertices)}
    return tuple(sorted(tuple(relabel[v] for v in f) for f in c.facets))


def reduced_homology(c):
    """Reduced integer homology of a complex, degrees -1 through dim."""
    key = _canonical_facets(c)
    cached = _HOMOLOGY_MEMO.get(key)
    if cached is not None:
        return cached
    profile = _reduced_homology_uncached(c)
    _HOMOLOGY_MEMO[key] = profile
    return profile


def _reduced_homology_uncached(c):
    if not c.facets:
        return HomologyProfile(())
    dim = c.dim
    if dim >= 0:
        common = set(c.vertices)
        for f in c.facets:
            common &= set(f)
            if not common:
                break
        if common:  # a cone is acyclic
            return HomologyProfile(tuple((0, ()) for _ in range(dim + 2)))
    levels = c.faces_by_dimension()
    counts = [len(level) for level in levels]
    ranks = [0] * (dim + 3)  # ranks[k] = rank of the boundary map out of level k
    torsions = [()] * (dim + 2)
    for k in range(dim + 1):
        # the map from level k+1 into level k
        entries, _, _ = boundary_matrix(c, k)
        factors, rank = smith_normal_form(entries)
        ranks[k + 1] = rank
        torsions[k] = tuple(x for x in factors if x > 1)
    pairs = []
    for k in range(dim + 2):
        free = counts[k] - ranks[k] - ranks[k + 1]
        pairs.append((free, torsions[k]))
    profile = HomologyProfile(tuple(pairs))
    euler = sum((-1) ** k * n for k, n in enumerate(counts, start=-1))
    assert sum((-1) ** (k - 1) * p[0] for k, p in enumerate(pairs)) == euler
    return profile


@dataclass(frozen=True)
class TopologicalClass:
    tag: str
    boundary_complex: object = None


def classify(c):
    """Decide homology ball / sphere / manifold-with-boundary by checking
    the links of all nonempty faces against the expected sphere or ball
    homology profiles of the complementary dimension."""
    if c.facets == frozenset({()}):
        # the empty complex is the (-1)-sphere: the point's boundary
        return TopologicalClass("homology_sphere")
    if not c.is_pure or not c.facets or c.dim < 0:
        return TopologicalClass("other")
    dim = c.dim
    if dim == 0:
        n = len(c.facets)
        if n == 1:
            return TopologicalClass("homology_ball",
                                    SimplicialComplex(frozenset({()})))
        if n == 2:
            return TopologicalClass("homology_sphere")
        return TopologicalClass("other")
    boundary_faces = []
    for face in sorted(c.faces() - {()}):
        lk = link(c, face)
        top = dim - len(face)
        profile = reduced_homology(lk)
        if profile.is_sphere(top):
            continue
        if profile.is_acyclic:
            boundary_faces.append(face)
        else:
            return TopologicalClass("other")
    global_profile = reduced_homology(c)
    if not boundary_faces:
        if global_profile.is_sphere(dim):
            return TopologicalClass("homology_sphere")
        return TopologicalClass("other")
    if global_profile.is_acyclic:
        boundary = SimplicialComplex(
            frozenset(f for f in boundary_faces
                      if not any(set(f) < set(g) for g in boundary_faces)))
        if boundary == ridge_boundary(c):
            if classify(boundary).tag == "homology_sphere":
                return TopologicalClass("homology_ball", boundary)
    return TopologicalClass("homology_manifold_with_boundary")


def _component_count(c):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for facet in c.facets:
        if facet:
            root = find(facet[0])
            for v in facet[1:]:
                parent[find(v)] = root
    return len({find(v) for v in parent})


def hochster_beta_top(c, full_sum=False):
    """Top graded Betti number of the face ring: the sum over vertex sets
    W of size n-d+1 of one less than the component count of the induced
    subcomplex.  Only W whose complement is a ridge can contribute, so the
    default sums over ridge complements; full_sum checks every W."""
    if not c.is_pure:
        raise ValueError("requires a pure complex")
    d = c.dim + 1
    verts = set(c.vertices)
    if full_sum:
        witnesses = itertools.combinations(sorted(verts), len(verts) - d + 1)
        total = 0
        for W in witnesses:
            comps = _component_count(induced(c, set(W)))
            total += max(0, comps - 1)
        return total
    total = 0
    seen = set()
    for facet in c.facets:
        for ridge in itertools.combinations(facet, d - 1):
            if ridge in seen:
                continue
            seen.add(ridge)
            comps = _component_count(induced(c, verts - set(ridge)))
            total += max(0, comps - 1)
    return total
