from math import gcd

import pytest

from qhb.knots import (KnotModel, VSequence, owens_strle_m, parse_torus,
                       v_thin, v_torus)


def test_vsequence_validation():
    v = VSequence((3, 2, 1, 1, 0, 0))
    assert tuple(v) == (3, 2, 1, 1)
    assert v.nu_plus == 4
    assert v[0] == 3 and v[6] == 0
    with pytest.raises(ValueError):
        VSequence((1, 2))       # increasing
    with pytest.raises(ValueError):
        VSequence((3, 1))       # drops by more than one
    with pytest.raises(ValueError):
        VSequence((1, -1))


def test_v_torus_golden():
    assert tuple(v_torus(3, 2)) == (1,)
    assert tuple(v_torus(5, 2)) == (1, 1)
    assert v_torus(5, 2)[1] == 1


def test_v_torus_oracle():
    # V_j counts semigroup gaps >= j + nu
    for p in range(2, 41):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            nu = (p - 1) * (q - 1) // 2
            members = set()
            for a in range(q + 1):
                for b in range(p + 1):
                    members.add(a * p + b * q)
            gaps = [g for g in range(p * q) if g not in members]
            V = v_torus(p, q)
            assert V.nu_plus == nu
            for j in range(nu + 2):
                assert V[j] == len([g for g in gaps if g >= j + nu])


def test_v_torus_step_property():
    for p in range(2, 51):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            V = v_torus(p, q)
            assert V.nu_plus == (p - 1) * (q - 1) // 2
            vals = [V[j] for j in range(V.nu_plus + 1)]
            assert all(0 <= a - b <= 1 for a, b in zip(vals, vals[1:]))


def test_v_thin():
    assert tuple(v_thin(0)) == ()
    assert tuple(v_thin(-3)) == ()
    assert tuple(v_thin(1)) == (1,)
    # V_i = max(ceil((tau - i)/2), 0)
    for tau in range(1, 12):
        V = v_thin(tau)
        assert V.nu_plus == tau
        for i in range(tau + 2):
            assert V[i] == max(-((i - tau) // 2), 0)


def test_knot_model():
    k = KnotModel.torus(5, 2)
    assert k.kind == "torus" and (k.p, k.q) == (5, 2)
    assert tuple(k.v_sequence()) == (1, 1)
    t = KnotModel.thin(-1)
    assert t.v_sequence().nu_plus == 0
    e = KnotModel.explicit((2, 1, 1))
    assert tuple(e.v_sequence()) == (2, 1, 1)
    parsed = parse_torus("5,2")
    assert (parsed.p, parsed.q) == (5, 2)
    with pytest.raises(ValueError):
        parse_torus("4,2")
    with pytest.raises(ValueError):
        KnotModel.torus(4, 2)


def test_owens_strle_golden():
    from fractions import Fraction
    assert owens_strle_m(5, 2) == 10 - Fraction(2, 1)
    assert owens_strle_m(3, 2) == 6 - Fraction(2, 1)


def test_owens_strle_families():
    from fractions import Fraction
    for q in range(2, 10):
        for k in range(1, 10):
            p = k * q + 1
            # floor of the invariant is the sharp integral bound
            assert k * q * q <= owens_strle_m(p, q) < k * q * q + 1
        assert q * q <= owens_strle_m(q + 1, q) < q * q + 1
