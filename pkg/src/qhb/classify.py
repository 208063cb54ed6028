"""Search driver: which integral surgeries on torus knots T(kq+-1, q)
can bound rational homology balls, and certification of the survivors.

For each (p, q) the square-slope candidates are the n = m^2 admitted by
the nu-window; each candidate gets a full obstruction report, and
survivors are cross-certified as actually bounding (fibre reduction to
S^3 or a bounding lens space, or the known-bounding list).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .knots import KnotModel
from .obstruct import (canonical_lens, known_bounds_citation, mvsnu_window,
                       rhb_verdict)
from .plumbing import (LensConnectedSum, determinant, join_reduce,
                       seifert_to_graph, torus_surgery_seifert)


@dataclass(frozen=True)
class SearchSpace:
    """Integral-slope search over p = kq + sign for ranges of (k, q)."""

    q_lo: int
    q_hi: int
    k_lo: int
    k_hi: int
    signs: tuple = (1, -1)

    def pairs(self):
        for q in range(self.q_lo, self.q_hi + 1):
            for k in range(self.k_lo, self.k_hi + 1):
                for sign in self.signs:
                    p = k * q + sign
                    if p > q >= 2:
                        yield p, q, sign


@dataclass(frozen=True)
class Certificate:
    kind: str
    detail: str


LENS_CITATIONS = {
    (1, 0): "S^3",
    (4, 1): "Lisca (L(4,1))",
    (9, 2): "Lisca (L(9,4))",
    (16, 7): "Lisca (L(16,9))",
    (25, 4): "Lisca (L(25,4))",
    (25, 9): "Lisca (L(25,14))",
}


def bounding_lens(n, qt):
    """Citation if the lens space L(n, qt) is known to bound a rational
    homology ball; None otherwise (not a completeness claim).

    The whitelist is a curated set of citations, stored as canonical
    orbit representatives; membership is orientation-insensitive since
    both orientations of a space bound whenever one does.
    """
    return LENS_CITATIONS.get(canonical_lens(n, qt))


def lens_parameters(seifert):
    """(order, q) of the lens space bounded by star-shaped data with at
    most two exceptional fibres."""
    s = seifert.normalize()
    if len(s.fibres) > 2:
        raise ValueError("more than two exceptional fibres")
    g = seifert_to_graph(s)
    ws = g.chain_weights()
    n = abs(determinant([[ws[i] if i == j else
                          (1 if abs(i - j) == 1 else 0)
                          for j in range(len(ws))] for i in range(len(ws))]))
    if n <= 1:
        return 1, 0
    sub = ws[1:]
    qt = abs(determinant([[sub[i] if i == j else
                           (1 if abs(i - j) == 1 else 0)
                           for j in range(len(sub))] for i in range(len(sub))]))
    return n, qt % n


def certify_bounds(p, q, n):
    """Certificate that n-surgery on T(p, q) bounds a rational homology
    ball, or None when no certification applies (not an obstruction)."""
    surg = torus_surgery_seifert(p, q, Fraction(n))
    if isinstance(surg, LensConnectedSum):
        cites = []
        for a, b in surg.summands:
            cite = bounding_lens(a, b % a if a > 1 else 0)
            if cite is None:
                break
            cites.append("L(%d,%d): %s" % (a, b, cite))
        else:
            return Certificate("connected-sum", "; ".join(cites))
    else:
        red = join_reduce(surg)
        if len(red.fibres) <= 2:
            order, qt = lens_parameters(red)
            if order == 1:
                return Certificate("join-reduction", "QH-cobordant to S^3")
            cite = bounding_lens(order, qt)
            if cite is not None:
                return Certificate(
                    "join-reduction",
                    "QH-cobordant to L(%d,%d); %s" % (order, qt, cite))
    cite = known_bounds_citation(KnotModel.torus(p, q), Fraction(n))
    if cite is not None:
        return Certificate("known-bounding", cite)
    return None


def candidates_for(p, q):
    """Square integral slopes admitted by the nu-window for T(p, q)."""
    nu = (p - 1) * (q - 1) // 2
    return [m * m for m in mvsnu_window(nu)]


def sweep_unit(p, q):
    """All (triple, report, certificate) for one torus knot."""
    knot = KnotModel.torus(p, q)
    out = []
    for n in candidates_for(p, q):
        report = rhb_verdict(knot, Fraction(n))
        cert = None
        if report.overall in ("NotObstructed", "KnownBounds"):
            cert = certify_bounds(p, q, n)
        out.append(((p, q, n), report, cert))
    return out


def classify_sweep(space, threads=None):
    """Reports for every candidate in the search space, in (q, k, n)
    order.  threads > 1 distributes knots over a process pool; the
    output is identical for any worker count."""
    pairs = sorted(set((p, q) for p, q, _ in space.pairs()))
    if threads is None:
        threads = int(os.environ.get("QHB_THREADS", "0")) or os.cpu_count()
    if threads > 1 and len(pairs) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_unit_star, pairs))
    else:
        chunks = [sweep_unit(p, q) for p, q in pairs]
    results = [item for chunk in chunks for item in chunk]
    results.sort(key=lambda t: (t[0][1], t[0][0], t[0][2]))
    return results


def _unit_star(pair):
    return sweep_unit(*pair)


def survivors(results):
    """Triples not killed by any obstruction."""
    return [(t, rep, cert) for t, rep, cert in results
            if rep.overall in ("NotObstructed", "KnownBounds")]


def results_csv(results):
    """CSV text: p,q,n,overall,reason."""
    lines = ["p,q,n,overall,reason"]
    for (p, q, n), rep, cert in results:
        if rep.overall == "Obstructed":
            fails = [v.name for v in rep.verdicts if v.result == "fail"]
            reason = "|".join(fails)
        elif cert is not None:
            reason = "%s: %s" % (cert.kind, cert.detail)
        else:
            reason = rep.citation or "uncertified"
        reason = reason.replace(",", ";")
        lines.append("%d,%d,%d,%s,%s" % (p, q, n, rep.overall, reason))
    return "\n".join(lines) + "\n"


def results_jsonl(results):
    """JSON-lines text, one report per line."""
    import json
    lines = []
    for (p, q, n), rep, cert in results:
        data = json.loads(rep.to_json())
        data["triple"] = [p, q, n]
        if cert is not None:
            data["certificate"] = {"kind": cert.kind, "detail": cert.detail}
        lines.append(json.dumps(data))
    return "\n".join(lines) + "\n"
