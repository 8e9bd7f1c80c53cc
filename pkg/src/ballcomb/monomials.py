"""Monomial orders, order ideals, and Macaulay-type growth arithmetic.

A monomial in variables Y1, Y2, ... is represented as a sorted tuple of
variable indices, one entry per factor.  For example ``(1, 1, 3)`` stands
for Y1^2 * Y3 and the empty tuple stands for the monomial 1.  The degree
of a monomial is the length of its tuple.

Three orders are used throughout:

* ``lex``:    same-degree monomials compare by their index tuples, so
              Y1^2 < Y1 Y2 < Y1 Y3 < ... < Y2^2 < ...
* ``revlex``: same-degree monomials compare lexicographically on the
              *reversed* index tuple, so Y1^2 < Y1 Y2 < Y2^2 < Y1 Y3 < ...
* ``partial``: componentwise comparison of front-zero-padded index
              tuples of a common length; incomparable pairs exist.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

Monomial = tuple  # sorted tuple of positive variable indices


def degree(m):
    return len(m)


def max_index(m):
    """Largest variable index appearing in a monomial (0 for the unit)."""
    return m[-1] if m else 0


def extended_rep(m, c):
    """Index tuple padded with leading zeros to length c."""
    if len(m) > c:
        raise ValueError("monomial degree %d exceeds padding length %d" % (len(m), c))
    return (0,) * (c - len(m)) + tuple(m)


def lex_key(m):
    """Sort key realizing the lexicographic order within a degree."""
    return tuple(m)


def revlex_key(m):
    """Sort key realizing the reverse-lexicographic order within a degree."""
    return tuple(reversed(m))


def compare(m1, m2, order):
    """Compare two monomials; returns 'lt', 'gt', 'eq' or 'incomparable'.

    For the total orders 'lex' and 'revlex' the monomials must have equal
    degree.  For 'partial', both are padded to a common length and compared
    componentwise.
    """
    m1, m2 = tuple(m1), tuple(m2)
    if order in ("lex", "revlex"):
        if len(m1) != len(m2):
            raise ValueError("total orders compare equal-degree monomials only")
        key = lex_key if order == "lex" else revlex_key
        a, b = key(m1), key(m2)
        return "eq" if a == b else ("lt" if a < b else "gt")
    if order == "partial":
        c = max(len(m1), len(m2))
        a, b = extended_rep(m1, c), extended_rep(m2, c)
        if a == b:
            return "eq"
        if all(x <= y for x, y in zip(a, b)):
            return "lt"
        if all(x >= y for x, y in zip(a, b)):
            return "gt"
        return "incomparable"
    raise ValueError("unknown order %r" % (order,))


def monomials_lex(deg, nvars):
    """All degree-``deg`` monomials in ``nvars`` variables, lex-ascending."""
    return itertools.combinations_with_replacement(range(1, nvars + 1), deg)


def monomials_revlex(deg, nvars):
    """All degree-``deg`` monomials in ``nvars`` variables, revlex-ascending."""
    if deg == 0:
        yield ()
        return
    for top in range(1, nvars + 1):
        for rest in monomials_revlex(deg - 1, top):
            yield rest + (top,)


def divisors_one_step(m):
    """Degree-(d-1) divisors of m, without duplicates."""
    seen = set()
    for i in range(len(m)):
        d = m[:i] + m[i + 1:]
        if d not in seen:
            seen.add(d)
            yield d


def canonical_rep(l, i):
    """Greedy descending binomial expansion of l with lower indices i, i-1, ...

    Returns a list of (n_j, j) pairs with l == sum(comb(n_j, j)) and
    n_i > n_{i-1} > ... > n_j >= j >= 1.
    """
    if l < 1 or i < 1:
        raise ValueError("need l >= 1 and i >= 1")
    terms = []
    while l > 0 and i >= 1:
        n = i
        while comb(n + 1, i) <= l:
            n += 1
        terms.append((n, i))
        l -= comb(n, i)
        i -= 1
    return terms


def pseudo_power(l, i):
    """The bound l^<i> on the next entry of an M-vector after l in degree i."""
    if l == 0:
        return 0
    return sum(comb(n + 1, j + 1) for n, j in canonical_rep(l, i))


def is_m_vector(v):
    """Whether v is the degree sequence of an order ideal of monomials.

    Returns (ok, first_failure_index); the index is None on success.
    Requires v_0 = 1, nonnegative entries, zeroes only followed by zeroes,
    and v_{i+1} <= v_i^<i> for every i.
    """
    v = list(v)
    if not v:
        return False, 0
    if v[0] != 1:
        return False, 0
    for i, x in enumerate(v):
        if x < 0:
            return False, i
    for i in range(len(v) - 1):
        if v[i] == 0:
            if v[i + 1] != 0:
                return False, i + 1
        elif i >= 1 and v[i + 1] > pseudo_power(v[i], i):
            return False, i + 1
    return True, None


@dataclass(frozen=True)
class OrderIdeal:
    """A finite divisor-closed set of monomials."""

    monomials: frozenset

    def __post_init__(self):
        if () not in self.monomials:
            raise ValueError("an order ideal contains the unit monomial")
        for m in self.monomials:
            for d in divisors_one_step(m):
                if d not in self.monomials:
                    raise ValueError("not divisor-closed: %r misses %r" % (m, d))

    @property
    def degree_sequence(self):
        top = max(len(m) for m in self.monomials)
        seq = [0] * (top + 1)
        for m in self.monomials:
            seq[len(m)] += 1
        return tuple(seq)

    def graded(self, deg):
        return {m for m in self.monomials if len(m) == deg}


def compressed_ideal(seq):
    """The order ideal whose degree-j part is the first seq_j monomials in
    revlex order, over seq_1 variables."""
    ok, idx = is_m_vector(seq)
    if not ok:
        raise ValueError("not an M-vector (first failure at index %s)" % idx)
    seq = list(seq)
    nvars = seq[1] if len(seq) > 1 else 0
    members = set()
    for j, count in enumerate(seq):
        members.update(itertools.islice(monomials_revlex(j, nvars), count))
    return OrderIdeal(frozenset(members))


@dataclass(frozen=True)
class LexIdealBasis:
    """Minimal generators of a lex-segment monomial ideal."""

    generators: frozenset
    nvars: int


def lex_ideal_from_hilbert(h, nvars):
    """Minimal generators of the lex ideal whose quotient has Hilbert
    function h over ``nvars`` variables.

    In each degree i the ideal spans the lex-first
    (dim of the degree-i monomial space) - h_i monomials.
    """
    ok, idx = is_m_vector(h)
    if not ok:
        raise ValueError("not an M-vector (first failure at index %s)" % idx)
    h = list(h)
    if len(h) > 1 and h[1] > nvars:
        raise ValueError("h_1 exceeds the variable count")
    gens = set()
    prev_span = set()
    i = 1
    while True:
        hi = h[i] if i < len(h) else 0
        dim = comb(nvars + i - 1, i)
        span = set(itertools.islice(monomials_lex(i, nvars), dim - hi))
        shifted = {tuple(sorted(m + (v,)))
                   for m in prev_span for v in range(1, nvars + 1)}
        if not shifted <= span:
            raise ValueError("Hilbert function not realizable by a lex ideal")
        gens.update(span - shifted)
        if hi == 0:
            break
        prev_span = span
        i += 1
    return LexIdealBasis(frozenset(gens), nvars)


def ek_graded_betti(basis, i, j):
    """Graded Betti number beta_{i,j} of the quotient ring by a lex ideal.

    Uses the closed formula for stable monomial ideals: the ideal's
    beta_{i,j} accumulates comb(max_index(u) - 1, i) over minimal
    generators u of degree j - i, and the quotient's numbers are the
    ideal's shifted by one homological index.
    """
    if i == 0:
        return 1 if j == 0 else 0
    ii = i - 1
    return sum(comb(max_index(u) - 1, ii)
               for u in basis.generators if len(u) == j - ii)
