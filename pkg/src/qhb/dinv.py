"""Correction terms (d-invariants) of lens spaces, surgeries, and
plumbing boundaries.  All values are exact Fractions.

Lens convention: L(p, q) here is the space with d-recursion

    d(L(p,q), i) = 1/4 - (p + q - 2i - 1)^2 / (4pq) - d(L(q, p mod q), i mod q)

with d(L(1, .), .) = 0 and spin-c labels i in [0, p + q).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import itertools

from .plumbing import determinant, invert_matrix


@lru_cache(maxsize=1 << 18)
def d_lens(p, q, i):
    """d(L(p,q), i) for p >= 1, 0 <= q < p coprime, 0 <= i < p + q."""
    if p < 1:
        raise ValueError("need p >= 1")
    if p == 1:
        return Fraction(0)
    if not (0 < q < p) or gcd(p, q) != 1:
        raise ValueError("need 0 < q < p coprime, got (%d, %d)" % (p, q))
    if not 0 <= i < p + q:
        raise ValueError("label %d out of range [0, %d)" % (i, p + q))
    return (Fraction(1, 4) - Fraction((p + q - 2 * i - 1) ** 2, 4 * p * q)
            - d_lens(q, p % q, i % q))


def d_lens_table(p, q):
    """[d(L(p,q), i) for i in range(p)], built iteratively (no memo).

    Equivalent to d_lens on labels 0..p-1 but with bounded memory, for
    bulk sweeps.
    """
    if p == 1:
        return [Fraction(0)]
    if not (0 < q < p) or gcd(p, q) != 1:
        raise ValueError("need 0 < q < p coprime")
    scaled, den = _d_lens_scaled(p, q)
    return [Fraction(v, den) for v in scaled]


def _d_lens_scaled(p, q):
    """(values, den) with d(L(p,q), i) = values[i] / den, integer
    arithmetic throughout (much faster than Fractions for bulk tables)."""
    chain = [(p, q)]
    while chain[-1][1] > 1:
        a, b = chain[-1]
        chain.append((b, a % b))
    D = 4
    for P, Q in chain:
        D *= P * Q
    prev = [0]
    for P, Q in reversed(chain):
        quarter = D // 4
        scale = D // (4 * P * Q)
        prev = [quarter - (P + Q - 2 * i - 1) ** 2 * scale - prev[i % Q]
                for i in range(P)]
    return prev, D


def d_unknot_integral(n, i):
    """d of n-surgery on the unknot, n >= 1, label 0 <= i < n.

    Closed form (n - 2i)^2 / (4n) - 1/4; equals -d(L(n, 1), i).
    """
    if n < 1 or not 0 <= i < n:
        raise ValueError("need n >= 1 and 0 <= i < n")
    return Fraction((n - 2 * i) ** 2, 4 * n) - Fraction(1, 4)


def d_lens_q2_closed(m, h):
    """d(L(m^2, m^2 - 2), i_h) at i_h = (m^2 + 1)/2 - hm, in closed form.

    For odd m >= 3 and -(m-1)/2 <= h <= (m-1)/2 the value is
    (h^2 - 1)/2 for h odd and h^2/2 for h even; these are exactly the
    labels where the d-invariant is an integer.  Under the recursion
    convention of d_lens the pairing is shifted: the closed form equals
    d_lens(m^2, m^2 - 2, i_h - 2), uniformly in m and h.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError("need odd m >= 3")
    if not -(m - 1) // 2 <= h <= (m - 1) // 2:
        raise ValueError("h out of range")
    if h % 2:
        return Fraction(h * h - 1, 2)
    return Fraction(h * h, 2)


def d_lens_q3_closed(m, h):
    """The integral d-value of L(m^2, m^2 - 3) at label
    i_h = m(m-3)/2 + 1 - hm, in closed form, for m coprime to 3.

    For -(m+1)/2 <= h <= (m-3)/2 the value is h(h+3)/3 when 3 | h and
    (h+1)(h+2)/3 otherwise.  Under the recursion convention of d_lens
    the value equals -d_lens(m^2, 3, i_h), uniformly in m and h (the
    reversed-parameter lens with a global sign flip).
    """
    if m < 2 or m % 3 == 0:
        raise ValueError("need m >= 2 coprime to 3")
    if not -(m + 1) // 2 <= h <= (m - 3) // 2:
        raise ValueError("h out of range")
    if h % 3 == 0:
        return Fraction(h * (h + 3), 3)
    return Fraction((h + 1) * (h + 2), 3)


def d_surgery(p, q, i, vseq, convention="lens-recursion"):
    """d of p/q-surgery on a knot with V-sequence vseq, label i.

    d(S^3_{p/q}(K), i) = -2 max(V_{floor(i/q)}, V_{ceil((p-i)/q)})
                         + d(S^3_{p/q}(unknot), i).

    The unknot term is taken as -d(L(p, q'), i) with q' = q mod p under
    the default "lens-recursion" convention.  Two alternative printed
    pairings are exposed for cross-checking small denominators:

      "printed-q2" (q = 2):  unknot term  d(L(p, p-2), i+2)
      "printed-q3" (q = 3):  unknot term -d(L(p, 3), i+2)

    Labels i run over [0, p).
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError("need coprime p >= 1, q >= 1")
    if not 0 <= i < p:
        raise ValueError("label out of range")
    vterm = -2 * max(vseq[i // q], vseq[-((i - p) // q)])
    if convention == "lens-recursion":
        base = -d_lens(p, q % p, i) if p > 1 else Fraction(0)
    elif convention == "printed-q2":
        if q != 2:
            raise ValueError("printed-q2 needs q = 2")
        base = d_lens(p, p - 2, i + 2)
    elif convention == "printed-q3":
        if q != 3:
            raise ValueError("printed-q3 needs q = 3")
        base = -d_lens(p, 3, (i + 2) % (p + 3))
    else:
        raise ValueError("unknown convention %r" % convention)
    return vterm + base


def integral_labels(p, q):
    """Labels of L(p, q) with integer d-invariant when p is a square.

    Returns (is_square, m, labels): for p = m^2 there are exactly m such
    labels; for non-square p the label list is empty.
    """
    m = isqrt(p)
    if m * m != p:
        return False, None, []
    scaled, den = _d_lens_scaled(p, q)
    labels = [i for i, v in enumerate(scaled) if v % den == 0]
    return True, m, labels


def _chain_boundary_d(weights):
    """Sorted d-multiset for the boundary of a negative definite linear
    chain, all weights <= -2.

    Works per spin-c class: with x = M^{-1}c the classes are the cosets
    x0 + 2s M^{-1}e_1 + 2Z^n of solutions of "Mx characteristic", and
    d = (n - min E)/4 where E(x) = x^T(-M)x.  The minimisation is a
    left-to-right DP whose state is the last coordinate, scaled by
    p = |det M| so every state is an integer; states are pruned by the
    bound E_tail >= -t^2, valid since all chain weights are <= -2.
    """
    a = [-w for w in weights]
    n = len(a)
    p = determinant([[a[i] if i == j else (-1 if abs(i - j) == 1 else 0)
                      for j in range(n)] for i in range(n)])
    # y* = p M^{-1}w and g = p M^{-1}e_1, both integral (adjugate columns);
    # the first entry of g is a product of off-diagonal 1's, so the class
    # s -> x0 + 2s M^{-1}e_1 really walks through all p cosets.
    def solve_tridiag(rhs):
        diag = [Fraction(-a[i]) for i in range(n)]
        vec = [Fraction(r) for r in rhs]
        for i in range(1, n):
            f = Fraction(1) / diag[i - 1]
            diag[i] -= f
            vec[i] -= f * vec[i - 1]
        xs = [Fraction(0)] * n
        xs[-1] = vec[-1] / diag[-1]
        for i in range(n - 2, -1, -1):
            xs[i] = (vec[i] - xs[i + 1]) / diag[i]
        return xs

    def scale(xs):
        out = []
        for x in xs:
            y = x * p
            assert y.denominator == 1
            out.append(y.numerator)
        return out

    ystar = scale(solve_tridiag(weights))
    g = scale(solve_tridiag([1] + [0] * (n - 1)))

    def energy(ys):
        return (sum(a[i] * ys[i] * ys[i] for i in range(n))
                - 2 * sum(ys[i] * ys[i + 1] for i in range(n - 1)))

    values = []
    two_p = 2 * p
    for s in range(p):
        base = [(ystar[i] + 2 * s * g[i]) % two_p for i in range(n)]
        rep = [b if b <= p else b - two_p for b in base]
        bound = energy(rep)
        # f maps last coordinate t to the least prefix energy; a state
        # survives only if f(t) - t^2 <= bound, since the tail energy
        # from t onwards is at least -t^2
        lim = isqrt(bound // (a[0] - 1)) if bound >= 0 else -1
        f = {}
        for k in range((-lim - base[0]) // two_p,
                       (lim - base[0]) // two_p + 2):
            t = base[0] + two_p * k
            val = a[0] * t * t
            if val - t * t <= bound:
                f[t] = val
        for i in range(1, n):
            ai, bi = a[i], base[i]
            nf = {}
            for t, val in f.items():
                disc = t * t + (ai - 1) * (bound - val)
                if disc < 0:
                    continue
                root = isqrt(disc)
                lo, hi = (t - root - 1), (t + root + 1)
                for k in range((lo - bi) // two_p, (hi - bi) // two_p + 2):
                    tn = bi + two_p * k
                    vn = val + ai * tn * tn - 2 * t * tn
                    if vn - tn * tn > bound:
                        continue
                    if tn not in nf or vn < nf[tn]:
                        nf[tn] = vn
            f = nf
        best = min(f.values()) if f else bound
        values.append(Fraction(n * p * p - best, 4 * p * p))
    return sorted(values)


def d_plumbing_boundary(graph):
    """Sorted multiset of d-invariants of the boundary of a negative
    definite plumbing forest.

    Characteristic covectors c with |c_v| <= |m_v|, c_v = m_v mod 2 are
    enumerated; spin-c classes are the orbits of c -> c + 2Mx, and
    d = max (c M^{-1} c^T + n) / 4 over each orbit.  Linear chains with
    all weights <= -2 take a per-class DP fast path instead, which
    handles long chains far beyond the reach of box enumeration.
    """
    M = graph.intersection_matrix()
    n = len(M)
    if n == 0:
        raise ValueError("empty graph")
    if graph.definiteness() != "negative":
        raise ValueError("graph must be negative definite")
    if graph.is_linear() and all(w <= -2 for w in graph.chain_weights()):
        return _chain_boundary_d(graph.chain_weights())
    Minv = invert_matrix(M)
    weights = graph.weights

    ranges = []
    for w in weights:
        lo, hi = w, -w
        ranges.append(range(lo, hi + 1, 2))

    def quad(c):
        # c M^{-1} c^T
        return sum(c[i] * Minv[i][j] * c[j] for i in range(n)
                   for j in range(n))

    reps = {}  # class key -> running max of cM^{-1}c
    for c in itertools.product(*ranges):
        # class key: M^{-1} c mod 2 reduced -- two covectors are
        # equivalent iff M^{-1}(c - c')/2 is integral, i.e. the
        # fractional parts of M^{-1} c / 2 agree.
        v = [sum(Minv[i][j] * c[j] for j in range(n)) for i in range(n)]
        key = tuple((x / 2) % 1 for x in v)
        val = sum(v[i] * c[i] for i in range(n))
        if key not in reps or val > reps[key]:
            reps[key] = val
    det = abs(determinant(M))
    if len(reps) != det:
        raise ArithmeticError("spin-c class count %d != |det| %d"
                              % (len(reps), det))
    return sorted(Fraction(val + n, 4) for val in reps.values())
