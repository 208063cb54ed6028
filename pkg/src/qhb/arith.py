"""Exact arithmetic helpers.

Negative continued fractions, the I-invariant of a rational number,
modular inverses, Euclidean step counts, and numerical semigroups on
two coprime generators.  Everything here is exact integer / Fraction
arithmetic; no floats anywhere.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from math import gcd


def neg_cf_expand(r):
    """Negative continued fraction expansion [a_1, ..., a_n]^- of r > 1.

    r = a_1 - 1/(a_2 - 1/(... - 1/a_n)) with every a_i >= 2.  The
    expansion with all terms >= 2 is unique.  Accepts an int or Fraction.
    """
    r = Fraction(r)
    if r <= 1:
        raise ValueError("neg_cf_expand needs r > 1, got %s" % r)
    p, q = r.numerator, r.denominator
    terms = []
    while q > 0:
        a = -((-p) // q)  # ceil(p/q)
        terms.append(a)
        p, q = q, a * q - p
    return terms


def neg_cf_eval(terms):
    """Evaluate [a_1, ..., a_n]^- as a Fraction.

    Raises ZeroDivisionError if a tail evaluates to 0 (malformed input);
    canonical expansions (all terms >= 2) never do.
    """
    if not terms:
        raise ValueError("empty expansion")
    x = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        x = a - 1 / x
    return x


def i_function(r):
    """I(r) = sum (a_i - 3) over the canonical expansion of r > 1."""
    return sum(a - 3 for a in neg_cf_expand(r))


def blow_down_reduce(terms):
    """Reduce a continued fraction string by blowing down (-1)-terms.

    Each term equal to 1 is removed and its neighbours are decremented;
    this preserves the plumbed 3-manifold the string describes.  Repeats
    until every term is >= 2 (canonical) or the string is empty.  Input
    with a term <= 0 at any stage is rejected.
    """
    t = list(terms)
    while True:
        if any(a <= 0 for a in t):
            raise ValueError("non-positive term during reduction: %s" % t)
        try:
            i = t.index(1)
        except ValueError:
            return t
        if i > 0:
            t[i - 1] -= 1
        if i + 1 < len(t):
            t[i + 1] -= 1
        del t[i]


def riemenschneider_dual(r):
    """Expansion of p/(p-q) for r = p/q, the dual string of r = p/q.

    The dual string describes the same lens space with reversed
    orientation parameter: chains for p/q and p/(p-q) are point-dual.
    """
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    if not p > q > 0:
        raise ValueError("need p > q > 0")
    return neg_cf_expand(Fraction(p, p - q))


def mod_inverse(a, n):
    """Inverse of a mod n in the range (0, n).  n >= 1; gcd(a, n) == 1."""
    if n < 1:
        raise ValueError("modulus must be >= 1")
    if n == 1:
        return 0
    if gcd(a, n) != 1:
        raise ValueError("%d not invertible mod %d" % (a, n))
    return pow(a, -1, n)


def euclid_steps(p, q):
    """Number of division steps in the Euclidean algorithm on (p, q).

    Counts divisions performed until the remainder hits 0, starting
    from p > q >= 1.
    """
    if not p > q >= 1:
        raise ValueError("need p > q >= 1")
    steps = 0
    while q:
        p, q = q, p % q
        steps += 1
    return steps


class Semigroup:
    """Numerical semigroup generated by two coprime integers p, q >= 2.

    Supports membership, the i-th smallest element (1-based, so the
    first element is 0), the gap set, and counting gaps >= a threshold.
    """

    def __init__(self, p, q):
        if p < 2 or q < 2 or gcd(p, q) != 1:
            raise ValueError("generators must be coprime and >= 2")
        self.p = p
        self.q = q
        self.frobenius = p * q - p - q
        hit = [False] * (self.frobenius + 2)
        hit[0] = True
        for x in range(1, len(hit)):
            if x >= p and hit[x - p]:
                hit[x] = True
            elif x >= q and hit[x - q]:
                hit[x] = True
        self._elements = [x for x, h in enumerate(hit) if h]
        self.gaps = [x for x, h in enumerate(hit) if not h]
        # sanity: gap count is (p-1)(q-1)/2
        assert 2 * len(self.gaps) == (p - 1) * (q - 1)

    def contains(self, x):
        if x < 0:
            return False
        if x > self.frobenius:
            return True
        return x in self._element_set

    @property
    def _element_set(self):
        if not hasattr(self, "_eset"):
            self._eset = set(self._elements)
        return self._eset

    def gamma_element(self, i):
        """The i-th smallest element, 1-based: gamma_element(1) == 0."""
        if i < 1:
            raise ValueError("index is 1-based")
        if i <= len(self._elements):
            return self._elements[i - 1]
        # the sieve ends at frobenius + 1; everything after is consecutive
        return self.frobenius + 1 + (i - len(self._elements))

    def gap_count_from(self, j):
        """Number of gaps >= j."""
        return len(self.gaps) - bisect_left(self.gaps, max(j, 0))

    def gaps_desc(self):
        """Gaps in decreasing order: g_1 > g_2 > ..."""
        return list(reversed(self.gaps))

    def __repr__(self):
        return "Semigroup(%d, %d)" % (self.p, self.q)
