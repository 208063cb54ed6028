"""Obstruction predicates for surgeries bounding rational homology balls,
and an aggregating verdict.

Each predicate answers pass/fail/not-applicable with a short certificate
string; rhb_verdict runs all applicable ones against a knot and slope,
consults the list of surgeries known to bound (which no computable
criterion here certifies), and reports an overall verdict:

    Obstructed    -- some applicable predicate fails
    NotObstructed -- nothing fails (NOT a proof of bounding)
    KnownBounds   -- in the known-bounding list, nothing fails
    Inconsistent  -- known-bounding but a predicate fails, or the two
                     denominator-3 conventions disagree
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .arith import Semigroup, i_function, neg_cf_expand
from .dinv import d_lens, d_surgery, integral_labels
from .knots import KnotModel, owens_strle_m
from .lattice import NotEmbeddable, embed_lattice, two_chain_obstruction
from .plumbing import LensConnectedSum, PlumbingGraph, torus_surgery_graph

PASS, FAIL, NA = "pass", "fail", "not-applicable"


@dataclass(frozen=True)
class Verdict:
    name: str
    result: str
    certificate: str = ""


@dataclass(frozen=True)
class ObstructionReport:
    knot: str
    slope: Fraction
    verdicts: tuple
    overall: str
    citation: str = ""

    def to_json(self):
        slope = ("%d" % self.slope if self.slope.denominator == 1
                 else "%d/%d" % (self.slope.numerator, self.slope.denominator))
        return json.dumps({
            "knot": self.knot,
            "slope": slope,
            "overall": (self.overall if not self.citation
                        else "%s(%s)" % (self.overall, self.citation)),
            "verdicts": [{"name": v.name, "result": v.result,
                          "certificate": v.certificate}
                         for v in self.verdicts],
        })


# ---------------------------------------------------------------------------
# individual predicates

def square_test(p):
    """A p/q-surgery bounding a rational ball needs p a perfect square."""
    m = isqrt(p)
    if m * m == p:
        return PASS, "m=%d" % m
    return FAIL, "%d is not a square" % p


def integral_V_test(m, V):
    """Vanishing of d at the m integral labels of m^2-surgery.

    Requires V_{m(m-2k-1)/2} = k(k+1)/2 for k = 0..floor((m-1)/2).
    """
    for k in range((m - 1) // 2 + 1):
        idx = m * (m - 2 * k - 1) // 2
        want = k * (k + 1) // 2
        if V[idx] != want:
            return FAIL, "V_%d = %d, need %d (k=%d)" % (idx, V[idx], want, k)
    return PASS, "all %d labels vanish" % ((m - 1) // 2 + 1)


def mvsnu_window(nu):
    """Admissible m for integral m^2-surgery: 0 <= m(m-1)/2 - nu < m.

    Integer form of 1 + sqrt(1+8 nu) <= 2m < 3 + sqrt(9+8 nu).  At most
    two values; when two, they are consecutive and 1+8 nu is a square.
    """
    if nu < 0:
        raise ValueError("nu >= 0 required")
    out = []
    m = max(1, isqrt(2 * nu))
    while m * (m - 1) // 2 - nu < m:
        if m * (m - 1) // 2 - nu >= 0:
            out.append(m)
        m += 1
    return out


def pq_window(nu, q):
    """Admissible m for p = m^2, slope m^2/q.

    nu > 0: (2 nu - 1) q < m^2 and 2m - q - 2 < sqrt(q^2 + 8 q nu + 8);
    nu = 0: m <= q + 1.  All comparisons by integer squaring.
    """
    if nu == 0:
        return list(range(1, q + 2))
    out = []
    m = 1
    while True:
        lhs = 2 * m - q - 2
        if lhs >= 0 and lhs * lhs >= q * q + 8 * q * nu + 8:
            break
        if m * m > (2 * nu - 1) * q:
            out.append(m)
        m += 1
    return out


def ipq_negative_test(p, q, nu):
    """I(p/q) < 0 forces nu+ = 0; fails when nu > 0 despite I < 0."""
    if not 0 < q < p:
        return NA, "needs p/q > 1"
    i = i_function(Fraction(p, q))
    if i < 0 and nu > 0:
        return FAIL, "I(%d/%d) = %d < 0 but nu+ = %d > 0" % (p, q, i, nu)
    return PASS, "I(%d/%d) = %d" % (p, q, i)


def half_window(nu):
    """Admissible odd m for m^2/2-surgery.

    Derived from vanishing/non-vanishing of the first two integral
    d-values of the half-surgery in the recursion labeling: with
    i_h = (m^2 + 1)/2 - hm, requires nu <= floor(i_1 / 2) and, for
    m >= 5, nu > floor(i_2 / 2); m = 1 forces nu = 0.
    """
    out = []
    if nu == 0:
        out.append(1)
    m = 3
    while True:
        i2_half = ((m * m + 1) // 2 - 2 * m) // 2
        if m >= 5 and i2_half >= nu:
            break
        i1_half = ((m * m + 1) // 2 - m) // 2
        if i1_half >= nu and (m == 3 or nu > i2_half):
            out.append(m)
        m += 2
    return out


def half_V_test(m, V):
    """Vanishing of d at the integral labels of m^2/2-surgery.

    Evaluated directly through the surgery formula in the recursion
    labeling: all m labels with integer d must have d = 0.
    """
    if m % 2 == 0:
        return NA, "m must be odd for denominator 2"
    p = m * m
    _, _, labels = integral_labels(p, 2)
    for i in labels:
        d = d_surgery(p, 2, i, V)
        if d != 0:
            return FAIL, "d(label %d) = %s != 0" % (i, d)
    return PASS, "d vanishes at %d integral labels" % len(labels)


def third_window(nu):
    """Admissible m for m^2/3-surgery: integer form of
    (3 + sqrt(1+24 nu))/2 <= m < (5 + sqrt(25+24 nu))/2; m in {1,2}
    forces nu = 0."""
    out = []
    if nu == 0:
        out.extend([1, 2])
    m = 3
    while 2 * m < 5 or (2 * m - 5) * (2 * m - 5) < 25 + 24 * nu:
        if 2 * m >= 3 and (2 * m - 3) * (2 * m - 3) >= 1 + 24 * nu:
            if m % 3 != 0 and m not in out:
                out.append(m)
        m += 1
    return out


def third_V_test(m, V):
    """Printed identities for m^2/3-surgery at labels i_h <= m^2/2.

    For i_h = m(m-3)/2 + 1 - hm in [0, m^2/2]:
    V at floor(i_h/3) must equal h(h+3)/6 when 3 | h, else (h+1)(h+2)/6.
    Non-integer required values fail outright.
    """
    if m % 3 == 0:
        return NA, "m must be coprime to 3"
    for h in range(-(m + 1) // 2, (m - 3) // 2 + 1):
        i = m * (m - 3) // 2 + 1 - h * m
        if not 0 <= 2 * i <= m * m:
            continue
        num = h * (h + 3) if h % 3 == 0 else (h + 1) * (h + 2)
        if num % 6 != 0:
            return FAIL, "required V at h=%d is %d/6, not an integer" % (h, num)
        if V[i // 3] != num // 6:
            return FAIL, "V_%d = %d, need %d (h=%d)" % (i // 3, V[i // 3],
                                                        num // 6, h)
    return PASS, "printed identities hold"


def third_example_test(m, V):
    """The alternate denominator-3 convention (label shifted by 2).

    Checks d = 0 through the surgery formula with the shifted unknot
    term, at surgery labels i <= p/2 pairing with the integral lens
    labels.  Disagreement with third_V_test flags the convention
    ambiguity; see d_surgery's convention tags.
    """
    if m % 3 == 0:
        return NA, "m must be coprime to 3"
    p = m * m
    _, _, labels = integral_labels(p, 3)
    for ell in labels:
        i = (ell - 2) % p
        if 2 * i > p:
            continue
        d = d_surgery(p, 3, i, V, convention="printed-q3")
        if d != 0:
            return FAIL, "d(label %d) = %s != 0" % (i, d)
    return PASS, "shifted-label d-values vanish"


def thin_test(tau, m):
    """Realizable (m, signature) pairs for integral m^2-surgery on a
    thin knot, with signature = -2 tau."""
    sigma = -2 * tau
    if m == 1:
        ok = sigma >= 0
    elif m == 2:
        ok = sigma >= -2
    elif m == 3:
        ok = sigma in (-2, -4)
    elif m == 4:
        ok = sigma in (-6, -8)
    elif m == 5:
        ok = sigma == -12
    else:
        ok = False
    if ok:
        return PASS, "(m, sigma) = (%d, %d) admissible" % (m, sigma)
    return FAIL, "(m, sigma) = (%d, %d) not realizable" % (m, sigma)


def torus_9q_test(p, q, n):
    """No positive integral surgery on T(p,q) with p > 9q bounds."""
    if q >= 2 and p > 9 * q:
        return FAIL, "p = %d > 9q = %d" % (p, 9 * q)
    return PASS, "p <= 9q"


def gamma_inequality_test(p, q, m, strict_upper=False, j_range=None):
    """Semigroup gap-count window for integral m^2-surgery on T(p,q).

    With 2 eps = 2 nu + 2 - (m-1)(m-2), requires for j in j_range
    (default 0..m-3):
        Gamma((j+1)(j+2)/2)     <= jm + eps
        Gamma((j+1)(j+2)/2 + 1) >= jm + eps   (strict > if strict_upper)
    where Gamma(i) is the i-th smallest semigroup element of <p,q>.
    Not applicable when eps <= 0.
    """
    sg = Semigroup(p, q)
    nu = (p - 1) * (q - 1) // 2
    two_eps = 2 * nu + 2 - (m - 1) * (m - 2)
    if two_eps <= 0:
        return NA, "eps <= 0"
    if j_range is None:
        j_range = range(0, max(m - 2, 0))
    for j in j_range:
        idx = (j + 1) * (j + 2) // 2
        lo = sg.gamma_element(idx)
        hi = sg.gamma_element(idx + 1)
        # compare against jm + eps with 2 eps possibly odd
        if 2 * lo > 2 * j * m + two_eps:
            return FAIL, "Gamma(%d) = %d > jm+eps (j=%d)" % (idx, lo, j)
        if strict_upper:
            bad = 2 * hi <= 2 * j * m + two_eps
        else:
            bad = 2 * hi < 2 * j * m + two_eps
        if bad:
            return FAIL, "Gamma(%d) = %d < jm+eps (j=%d)" % (idx + 1, hi, j)
    return PASS, "gap window holds for j < %d" % max(m - 2, 0)


def qgem_test(p, q):
    """When the surgered manifold must itself bound as a lens space
    (nu+ = 0 route), p = m^2 requires q >= m - 1."""
    m = isqrt(p)
    if m * m != p:
        return NA, "p not a square"
    if q < m - 1:
        return FAIL, "q = %d < m - 1 = %d" % (q, m - 1)
    return PASS, "q >= m - 1"


def owens_strle_test(p, q, r):
    """Positive r-surgery on T(p,q) bounding rational ball needs
    r >= m(T(p,q))."""
    if r <= 0:
        return NA, "needs r > 0"
    bound = owens_strle_m(p, q)
    if r < bound:
        return FAIL, "r = %s < m(K) = %s" % (r, bound)
    return PASS, "r >= m(K) = %s" % bound


def lens_i_range_test(n, qt):
    """Lens space L(n, qt) bounding a rational ball needs
    -3 <= I(n/qt) <= 1."""
    i = i_function(Fraction(n, qt))
    if -3 <= i <= 1:
        return PASS, "I = %d in [-3, 1]" % i
    return FAIL, "I(%d/%d) = %d outside [-3, 1]" % (n, qt, i)


# ---------------------------------------------------------------------------
# known-bounding list

FDB_LMHN = "Fernandez de Bobadilla-Luengo-Melle Hernandez-Nemethi"


def known_bounds_citation(knot, slope):
    """Citation string if (knot, slope) is known to bound a rational
    homology ball, else None."""
    slope = Fraction(slope)
    if knot.kind == "torus":
        p, q = knot.p, knot.q
        if slope.denominator == 1:
            n = slope.numerator
            if p == q + 1 and n == q * q:
                return "complementary-fibre reduction to S^3"
            if p == q + 1 and n == (q + 1) ** 2:
                return FDB_LMHN + " (rational cuspidal curves)"
            if q >= 2 and p in (4 * q - 1, 4 * q + 1) and n == 4 * q * q:
                return "Lisca (cobordism to L(4,1))"
            if (p, q, n) in ((5, 2, 9), (5, 3, 16), (13, 2, 25)):
                return "Lisca (lens space)"
            if (p, q, n) in ((9, 4, 36), (25, 4, 100)):
                return "Lisca (connected sum of lens spaces)"
            if (p, q, n) in ((17, 3, 49), (22, 3, 64), (43, 6, 256)):
                return FDB_LMHN
        if (p, q) == (3, 2):
            if slope == Fraction(9, 2):
                return "Mathieu (9/2 ~ reversed 9-surgery)"
            if slope == Fraction(25, 3):
                return "Casson-Harer"
            d = slope.denominator
            if d >= 2 and slope == Fraction((d + 1) ** 2, d):
                if d == 4:
                    return "Lisca (L(25,14))"
                return "Park-Shin-Stipsicz" if d >= 5 else \
                    "denominator-3 vanishing + Lisca"
    if knot.kind == "thin" and knot.tau == -1 and slope == 1:
        return "Fintushel-Stern"
    return None


def canonical_lens(n, q):
    """Orbit representative of L(n, q) under q -> n - q and inversion."""
    if n == 1:
        return (1, 0)
    q %= n
    orbit = {q, n - q, pow(q, -1, n), n - pow(q, -1, n)}
    return (n, min(orbit))


# ---------------------------------------------------------------------------
# the aggregate verdict

def rhb_verdict(knot, slope, run_lattice=True):
    """Full obstruction report for slope-surgery on knot."""
    slope = Fraction(slope)
    p, q = slope.numerator, slope.denominator
    V = knot.v_sequence()
    nu = V.nu_plus
    verdicts = []

    res, cert = square_test(p)
    verdicts.append(Verdict("square_test", res, cert))
    m = isqrt(p)
    is_square = m * m == p

    if knot.kind == "torus" and slope > 0:
        verdicts.append(Verdict("owens_strle_test",
                                *owens_strle_test(knot.p, knot.q, slope)))
    else:
        verdicts.append(Verdict("owens_strle_test", NA, "torus knots, r > 0"))

    if knot.kind == "torus" and q == 1 and p > 0:
        verdicts.append(Verdict("torus_9q_test",
                                *torus_9q_test(knot.p, knot.q, p)))
    else:
        verdicts.append(Verdict("torus_9q_test", NA, "integral torus only"))

    if p > q:
        verdicts.append(Verdict("ipq_negative_test",
                                *ipq_negative_test(p, q, nu)))
    else:
        verdicts.append(Verdict("ipq_negative_test", NA, "needs p > q"))

    if is_square and q == 1:
        if m in mvsnu_window(nu):
            verdicts.append(Verdict("mvsnu_window", PASS,
                                    "m = %d admissible for nu = %d" % (m, nu)))
        else:
            verdicts.append(Verdict("mvsnu_window", FAIL,
                                    "m = %d not in %s" % (m, mvsnu_window(nu))))
    else:
        verdicts.append(Verdict("mvsnu_window", NA, "integral square only"))

    if is_square and q > 1:
        if m in pq_window(nu, q):
            verdicts.append(Verdict("pq_window", PASS, "m = %d admissible" % m))
        else:
            verdicts.append(Verdict("pq_window", FAIL,
                                    "m = %d outside window" % m))
    else:
        verdicts.append(Verdict("pq_window", NA, "rational square only"))

    if is_square and q == 1:
        verdicts.append(Verdict("integral_V_test", *integral_V_test(m, V)))
    else:
        verdicts.append(Verdict("integral_V_test", NA, "integral square only"))

    if is_square and q == 2:
        if m in half_window(nu):
            verdicts.append(Verdict("half_window", PASS, "m admissible"))
        else:
            verdicts.append(Verdict("half_window", FAIL,
                                    "m = %d not in %s" % (m, half_window(nu))))
        verdicts.append(Verdict("half_V_test", *half_V_test(m, V)))
    else:
        verdicts.append(Verdict("half_window", NA, "denominator 2 only"))
        verdicts.append(Verdict("half_V_test", NA, "denominator 2 only"))

    if is_square and q == 3:
        if m in third_window(nu):
            verdicts.append(Verdict("third_window", PASS, "m admissible"))
        else:
            verdicts.append(Verdict("third_window", FAIL,
                                    "m = %d not in %s" % (m, third_window(nu))))
        verdicts.append(Verdict("third_V_test", *third_V_test(m, V)))
        verdicts.append(Verdict("third_example_test", *third_example_test(m, V)))
    else:
        verdicts.append(Verdict("third_window", NA, "denominator 3 only"))
        verdicts.append(Verdict("third_V_test", NA, "denominator 3 only"))
        verdicts.append(Verdict("third_example_test", NA,
                                "denominator 3 only"))

    if knot.kind == "thin" and is_square and q == 1:
        verdicts.append(Verdict("thin_test", *thin_test(knot.tau, m)))
    else:
        verdicts.append(Verdict("thin_test", NA, "integral thin only"))

    if nu == 0 and is_square:
        verdicts.append(Verdict("qgem_test", *qgem_test(p, q)))
    else:
        verdicts.append(Verdict("qgem_test", NA, "nu+ = 0 route only"))

    if (knot.kind == "torus" and q == 1 and is_square
            and m in mvsnu_window(nu)):
        verdicts.append(Verdict("gamma_inequality_test",
                                *gamma_inequality_test(knot.p, knot.q, m)))
    else:
        verdicts.append(Verdict("gamma_inequality_test", NA,
                                "integral torus square in window"))

    # lens-space surgeries: Lisca's I-range criterion
    if (knot.kind == "torus" and q == 1
            and p in (knot.p * knot.q - 1, knot.p * knot.q + 1)):
        qt = knot.q * knot.q % p
        verdicts.append(Verdict("lens_i_range_test", *lens_i_range_test(p, qt)))
    else:
        verdicts.append(Verdict("lens_i_range_test", NA,
                                "lens-space surgeries only"))

    # Donaldson embedding of the canonical definite plumbing.  Skipped
    # when an earlier predicate already obstructs, and for surgeries on
    # the known-bounding list (where an embedding witness exists but
    # its search can be large).
    citation = known_bounds_citation(knot, slope)
    core_failed = any(v.result == FAIL for v in verdicts)
    graphs = []
    if run_lattice and not core_failed and citation is None \
            and knot.kind == "torus":
        pq = knot.p * knot.q
        if q == 1 and p in (pq - 1, pq + 1):
            # lens-space surgery: both orientations bound a definite
            # linear plumbing, and both lattices must embed
            qt = knot.q * knot.q % p
            for top in (Fraction(p, qt), Fraction(p, p - qt)):
                graphs.append(PlumbingGraph.linear(neg_cf_expand(top)))
        elif not (pq - 1 <= slope <= pq + 1):
            g = torus_surgery_graph(knot.p, knot.q, slope)
            kind = g.definiteness()
            if kind == "positive":
                graphs.append(g)
            elif kind == "negative":
                graphs.append(g.negate())
            else:
                graphs = None
                verdicts.append(Verdict("lattice_embedding", NA,
                                        "plumbing not definite (%s)" % kind))
    else:
        graphs = None
        if core_failed:
            why = "skipped: already obstructed"
        elif citation is not None:
            why = "skipped: known bounding"
        else:
            why = "not applicable"
        verdicts.append(Verdict("lattice_embedding", NA, why))
    if graphs is not None:
        if not graphs:
            verdicts.append(Verdict("lattice_embedding", NA,
                                    "definite plumbing unavailable"))
        else:
            notes = []
            for gpos in graphs:
                tc, removed = two_chain_obstruction(gpos)
                if tc == "obstructed":
                    notes = ["2-chain obstruction, removed %s"
                             % (list(removed),)]
                    verdicts.append(Verdict("lattice_embedding", FAIL,
                                            notes[0]))
                    break
                out = embed_lattice(gpos, sign=1)
                if isinstance(out, NotEmbeddable):
                    verdicts.append(Verdict(
                        "lattice_embedding", FAIL,
                        "no embedding (%d nodes searched)" % out.nodes))
                    break
                notes.append("embedding found (%d nodes)" % out.nodes)
            else:
                verdicts.append(Verdict("lattice_embedding", PASS,
                                        "; ".join(notes)))

    failed = any(v.result == FAIL for v in verdicts)

    by_name = {v.name: v.result for v in verdicts}
    convention_clash = (by_name.get("third_V_test") == PASS
                        and by_name.get("third_example_test") == FAIL
                        and q == 3)

    if citation is not None:
        overall = "Inconsistent" if failed else "KnownBounds"
    elif convention_clash:
        overall = "Inconsistent"
    elif failed:
        overall = "Obstructed"
    else:
        overall = "NotObstructed"
    return ObstructionReport(knot=knot.label(), slope=slope,
                             verdicts=tuple(verdicts), overall=overall,
                             citation=citation or "")
