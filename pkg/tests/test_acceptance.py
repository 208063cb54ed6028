"""Acceptance gate: one printed pass/fail line per criterion.

Run with `pytest -v -s tests/test_acceptance.py` to see every line; a
failing criterion also carries its message in the assertion.
"""

import itertools
import random
import sys
import time
from fractions import Fraction
from math import gcd, isqrt

from qhb.arith import neg_cf_expand
from qhb.classify import SearchSpace, classify_sweep, survivors
from qhb.dinv import (d_lens, d_lens_q2_closed, d_lens_q3_closed,
                      d_lens_table, d_plumbing_boundary, integral_labels)
from qhb.knots import KnotModel, owens_strle_m, v_torus
from qhb.lattice import (EmbeddingWitness, NotEmbeddable, embed_lattice,
                         two_chain_obstruction)
from qhb.obstruct import mvsnu_window, rhb_verdict, thin_test
from qhb.plumbing import PlumbingGraph, torus_surgery_graph

from test_lattice import naive_embed


def _report(num, label, ok, note=""):
    line = "criterion %2d (%s): %s" % (num, label, "PASS" if ok else "FAIL")
    if note:
        line += " -- " + note
    print(line, file=sys.stderr)
    assert ok, line


def test_criterion_01_lens_goldens():
    t0 = time.perf_counter()
    values = [d_lens(25, 3, i) for i in (1, 6, 11, 16, 21)]
    dt = time.perf_counter() - t0
    ok = values == [Fraction(-2), 0, 0, 0, 0] and d_lens(25, 3, 6) == 0 \
        and dt < 1.0
    _report(1, "lens recursion goldens", ok, "%.3fs" % dt)


def test_criterion_02_closed_forms():
    t0 = time.perf_counter()
    ok = True
    for m in range(3, 100, 2):
        p = m * m
        tab = d_lens_table(p, p - 2)
        for h in range(-(m - 1) // 2, (m - 1) // 2 + 1):
            ih = (p + 1) // 2 - h * m
            ok = ok and d_lens_q2_closed(m, h) == tab[ih - 2]
    for m in range(2, 101):
        if m % 3 == 0:
            continue
        p = m * m
        for h in range(-(m + 1) // 2, (m - 3) // 2 + 1):
            ih = m * (m - 3) // 2 + 1 - h * m
            ok = ok and d_lens_q3_closed(m, h) == -d_lens(p, 3, ih)
    dt = time.perf_counter() - t0
    ok = ok and dt < 30.0
    _report(2, "integral-d closed forms", ok, "%.1fs" % dt)


def test_criterion_03_integral_label_structure():
    t0 = time.perf_counter()
    ok = True
    for m in range(2, 51):
        p = m * m
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            is_sq, mm, labels = integral_labels(p, q)
            good = (is_sq and mm == m and len(labels) == m
                    and all(labels[i + 1] - labels[i] == m
                            for i in range(m - 1))
                    and all((2 * i + 1 - q) % m == 0 for i in labels))
            if not good:
                ok = False
    dt = time.perf_counter() - t0
    _report(3, "integral-label structure", ok, "%.1fs" % dt)


def test_criterion_04_torus_v_sequences():
    ok = v_torus(5, 2)[1] == 1
    for p in range(2, 51):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            V = v_torus(p, q)
            nu = (p - 1) * (q - 1) // 2
            vals = [V[j] for j in range(nu + 1)]
            ok = ok and V.nu_plus == nu \
                and all(0 <= a - b <= 1 for a, b in zip(vals, vals[1:]))
    for p in range(2, 41):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            members = {a * p + b * q
                       for a in range(q + 1) for b in range(p + 1)}
            gaps = [g for g in range(p * q) if g not in members]
            nu = (p - 1) * (q - 1) // 2
            V = v_torus(p, q)
            ok = ok and all(V[j] == len([g for g in gaps if g >= j + nu])
                            for j in range(nu + 2))
    _report(4, "torus V-sequences", ok)


def test_criterion_05_square_window():
    t0 = time.perf_counter()
    ok = True
    for nu in range(0, 1000001):
        w = mvsnu_window(nu)
        if len(w) > 2:
            ok = False
        elif len(w) == 2:
            r = 2 * w[0] - 1
            if w[1] != w[0] + 1 or r * r != 1 + 8 * nu:
                ok = False
    dt = time.perf_counter() - t0
    ok = ok and dt < 10.0
    _report(5, "admissible-square window", ok, "%.1fs" % dt)


def test_criterion_06_thin_table():
    expected = set()
    for sigma in range(-20, 5, 2):
        if sigma >= 0:
            expected.add((sigma, 1))
        if sigma >= -2:
            expected.add((sigma, 2))
        if sigma in (-2, -4):
            expected.add((sigma, 3))
        if sigma in (-6, -8):
            expected.add((sigma, 4))
        if sigma == -12:
            expected.add((sigma, 5))
    got = {(sigma, m)
           for sigma in range(-20, 5, 2) for m in range(1, 11)
           if thin_test(-sigma // 2, m)[0] == "pass"}
    _report(6, "thin-knot admissible table", got == expected)


def test_criterion_07_sweep_matches_classification():
    t0 = time.perf_counter()
    expected = set()
    for q in range(2, 13):
        expected.add((q + 1, q, q * q))
        expected.add((q + 1, q, (q + 1) * (q + 1)))
        expected.add((4 * q + 1, q, 4 * q * q))
        expected.add((4 * q - 1, q, 4 * q * q))
    expected |= {(5, 2, 9), (5, 3, 16), (13, 2, 25), (9, 4, 36),
                 (25, 4, 100), (17, 3, 49), (22, 3, 64), (43, 6, 256)}
    assert len(expected) == 52

    results = classify_sweep(SearchSpace(2, 12, 1, 9))
    dt = time.perf_counter() - t0
    surv = survivors(results)
    surv_set = {t for t, _, _ in surv}

    missing = expected - surv_set
    uncertified = [t for t, rep, cert in surv
                   if t in expected and cert is None]
    bad_obstructed = [t for t, rep, _ in results
                      if rep.overall == "Obstructed"
                      and not any(v.result == "fail" and v.certificate
                                  for v in rep.verdicts)]
    extras = sorted(surv_set - expected)

    ok = (not missing and not uncertified and not bad_obstructed
          and not extras and dt < 600.0)
    note = "%.1fs" % dt
    if extras:
        note += ("; survivors exceed the expected classification by %s. "
                 "These lens-space surgeries pass every implemented "
                 "obstruction: both orientations of each boundary carry "
                 "an embeddable linear lattice, and -S^3_25(T(8,3)) = "
                 "L(25,14) provably bounds (Lisca), so the expected "
                 "survivor list appears incomplete.  Analysis in the "
                 "decisions ledger." % extras)
    _report(7, "classification sweep", ok, note)


def test_criterion_08_lattice_embedder():
    t0 = time.perf_counter()
    ok = isinstance(embed_lattice(PlumbingGraph.linear([3, 2, 5])),
                    NotEmbeddable)
    star = torus_surgery_graph(21, 4, Fraction(64))
    ok = ok and isinstance(embed_lattice(star), NotEmbeddable)
    out = embed_lattice(PlumbingGraph.linear([9, 2, 2]))
    ok = ok and isinstance(out, EmbeddingWitness)

    # corpus: exhaustive in rank <= 3, sampled in rank 4-5, fixed
    # representatives in rank 6 (where the unpruned oracle gets slow)
    rng = random.Random(2026)
    corpus = [list(c) for c in itertools.product(range(2, 10), repeat=2)]
    corpus += [list(c) for c in itertools.product(range(2, 10), repeat=3)]
    corpus += [[rng.randrange(2, 10) for _ in range(k)]
               for k in (4, 4, 5) for _ in range(12)]
    corpus += [[2] * 6, [3, 2, 2, 2, 2, 2], [9, 2, 2, 2, 2, 2]]
    checked = 0
    for ws in corpus:
        g = PlumbingGraph.linear(ws)
        if g.definiteness() != "positive":
            continue
        fast = embed_lattice(g)
        ok = ok and (isinstance(fast, EmbeddingWitness)
                     == (naive_embed(g) is not None))
        checked += 1
    dt = time.perf_counter() - t0
    ok = ok and dt < 300.0
    _report(8, "lattice embedder", ok,
            "%.1fs, %d corpus lattices" % (dt, checked))


def test_criterion_09_owens_strle():
    ok = True
    for q in range(2, 10):
        ok = ok and owens_strle_m(q + 1, q) == q * q
        for k in range(1, 10):
            ok = ok and owens_strle_m(k * q + 1, q) == k * q * q
    _report(9, "Owens-Strle invariant", ok)


def test_criterion_10_chain_boundary_oracle():
    t0 = time.perf_counter()
    ok = True
    for p in range(2, 61):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            chain = [-a for a in neg_cf_expand(Fraction(p, p - q))]
            got = d_plumbing_boundary(PlumbingGraph.linear(chain))
            want = sorted(-v for v in d_lens_table(p, q))
            if got != want:
                ok = False
    dt = time.perf_counter() - t0
    _report(10, "chain-boundary oracle", ok, "%.1fs" % dt)


def test_criterion_11_property_suite():
    ok = True
    # conjugation symmetry of the lens recursion
    for q in range(2, 101):
        for r in range(1, q):
            if gcd(q, r) != 1:
                continue
            tab = [d_lens(q, r, j) for j in range(q + r)]
            ok = ok and all(tab[j] == tab[q + r - 1 - j]
                            for j in range(q + r))
            # the d-bound: 4|d| <= q - 1, equality only for r = 1, q - 1
            peak = max(4 * abs(v) for v in tab[:q])
            ok = ok and peak <= q - 1
            if peak == q - 1 and r not in (1, q - 1):
                ok = False
    # 2-chain obstruction is sound on a corpus of definite chains
    rng = random.Random(11)
    for _ in range(60):
        ws = [rng.randrange(2, 8) for _ in range(rng.randrange(3, 7))]
        g = PlumbingGraph.linear(ws)
        if g.definiteness() != "positive":
            continue
        if two_chain_obstruction(g)[0] == "obstructed":
            ok = ok and isinstance(embed_lattice(g), NotEmbeddable)
    # known-bounding surgeries are never reported Obstructed
    cases = [(KnotModel.torus(3, 2), Fraction((q + 1) ** 2, q))
             for q in range(2, 13)]
    cases += [(KnotModel.torus(3, 2), Fraction(16, 3)),
              (KnotModel.torus(3, 2), Fraction(25, 3)),
              (KnotModel.torus(3, 2), Fraction(9, 2)),
              (KnotModel.torus(5, 2), Fraction(9)),
              (KnotModel.thin(-1), Fraction(1))]
    for q in range(2, 13):
        cases.append((KnotModel.torus(q + 1, q), Fraction(q * q)))
        cases.append((KnotModel.torus(q + 1, q), Fraction((q + 1) ** 2)))
    for knot, slope in cases:
        ok = ok and rhb_verdict(knot, slope).overall != "Obstructed"
    _report(11, "property suite", ok)
