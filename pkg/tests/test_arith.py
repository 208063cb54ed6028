import random
from fractions import Fraction

import pytest

from qhb.arith import (Semigroup, blow_down_reduce, euclid_steps, i_function,
                       mod_inverse, neg_cf_eval, neg_cf_expand,
                       riemenschneider_dual)


def test_expand_golden():
    assert neg_cf_expand(Fraction(7, 5)) == [2, 2, 3]
    assert neg_cf_expand(Fraction(2, 1)) == [2]
    assert neg_cf_expand(Fraction(25, 3)) == [9, 2, 2]


def test_expand_eval_round_trip():
    rng = random.Random(0)
    for _ in range(300):
        q = rng.randrange(1, 200)
        p = q + rng.randrange(1, 400)
        r = Fraction(p, q)
        terms = neg_cf_expand(r)
        assert all(t >= 2 for t in terms)
        assert neg_cf_eval(terms) == r


def test_expand_domain():
    with pytest.raises(ValueError):
        neg_cf_expand(Fraction(1, 1))
    with pytest.raises(ValueError):
        neg_cf_expand(Fraction(1, 2))


def test_i_function():
    # I(r) = sum (a_i - 3) over the expansion
    assert i_function(Fraction(25, 3)) == (9 - 3) + (2 - 3) + (2 - 3)
    assert i_function(Fraction(7, 5)) == -2
    assert i_function(Fraction(2, 1)) == -1


def test_blow_down_golden():
    assert blow_down_reduce([1, 3, 2]) == [2, 2]
    assert blow_down_reduce([1, 2, 3]) == [2]
    assert blow_down_reduce([2, 2]) == [2, 2]


def _riemenschneider_oracle(terms):
    # staircase of points: row i has terms[i]-1 dots, each new row starts
    # under the last dot of the previous one; the dual reads columns
    cols = []
    col = 0
    for i, a in enumerate(terms):
        width = a - 1 if i == 0 else a - 1
        for j in range(width):
            if col == len(cols):
                cols.append(0)
            cols[col] += 1
            if j < width - 1:
                col += 1
        # next row starts under the current column
    return [c + 1 for c in cols]


def test_riemenschneider_dual():
    rng = random.Random(1)
    for _ in range(200):
        q = rng.randrange(1, 60)
        p = q + rng.randrange(1, 120)
        from math import gcd
        if gcd(p, q) != 1:
            continue
        r = Fraction(p, q)
        dual = riemenschneider_dual(r)
        assert dual == _riemenschneider_oracle(neg_cf_expand(r))
        # duality: the dual expands p/(p-q)
        assert neg_cf_eval(dual) == Fraction(p, p - q)


def test_mod_inverse():
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(5, 1) == 0
    for n in range(2, 40):
        for a in range(1, n):
            from math import gcd
            if gcd(a, n) == 1:
                assert a * mod_inverse(a, n) % n == 1


def test_euclid_steps():
    def oracle(p, q):
        steps = 0
        while q:
            p, q = q, p % q
            steps += 1
        return steps
    from math import gcd
    for p in range(2, 50):
        for q in range(1, p):
            if gcd(p, q) == 1:
                assert euclid_steps(p, q) == oracle(p, q)


def test_semigroup_gaps():
    s = Semigroup(3, 5)
    # gaps of <3,5> are 1, 2, 4, 7
    assert s.gaps_desc() == [7, 4, 2, 1]
    assert s.contains(8) and not s.contains(7)
    assert s.gap_count_from(0) == 4
    assert s.gap_count_from(5) == 1
    assert s.gap_count_from(8) == 0
    # negative thresholds count everything
    assert s.gap_count_from(-3) == 4


def test_semigroup_oracle():
    from math import gcd
    for p in range(2, 15):
        for q in range(p + 1, 20):
            if gcd(p, q) != 1:
                continue
            s = Semigroup(p, q)
            members = set()
            for a in range(q + 1):
                for b in range(p + 1):
                    members.add(a * p + b * q)
            frob = p * q - p - q
            gaps = [g for g in range(frob + 1) if g not in members]
            assert s.gaps_desc() == sorted(gaps, reverse=True)
            for j in range(-2, frob + 3):
                assert s.gap_count_from(j) == len([g for g in gaps if g >= j])


def test_semigroup_gamma():
    s = Semigroup(4, 3)
    # elements in increasing order: 0, 3, 4, 6, 7, 8, 9, ...
    assert [s.gamma_element(i) for i in range(1, 8)] == [0, 3, 4, 6, 7, 8, 9]
