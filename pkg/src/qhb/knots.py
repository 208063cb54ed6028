"""Knot-level input data for the surgery obstructions.

A knot enters the computation only through its sequence of non-negative
V-invariants V_0 >= V_1 >= ... >= 0 (eventually zero, dropping by at
most 1 per step).  Torus knots get the exact semigroup formula, thin
knots the closed form in tau, and arbitrary sequences can be supplied
directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import Semigroup, euclid_steps, mod_inverse


class VSequence:
    """A V-invariant sequence: finitely many values, then zeros.

    Validates V_i >= 0, non-increasing, and V_i - V_{i+1} <= 1.
    Indexing past the stored values returns 0.
    """

    def __init__(self, values):
        vals = [int(v) for v in values]
        # strip trailing zeros to a canonical form
        while vals and vals[-1] == 0:
            vals.pop()
        for i, v in enumerate(vals):
            if v < 0:
                raise ValueError("V_%d = %d < 0" % (i, v))
            nxt = vals[i + 1] if i + 1 < len(vals) else 0
            if not 0 <= v - nxt <= 1:
                raise ValueError(
                    "V_%d = %d, V_%d = %d: must drop by 0 or 1" % (i, v, i + 1, nxt))
        self.values = tuple(vals)

    def __getitem__(self, i):
        if i < 0:
            raise IndexError("V-sequence index must be >= 0")
        return self.values[i] if i < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def nu_plus(self):
        """Smallest i with V_i = 0."""
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, VSequence) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "VSequence(%s)" % (list(self.values),)


def v_torus(p, q):
    """V-sequence of the positive torus knot T(p,q), p > q >= 2 coprime.

    V_j counts semigroup gaps of <p, q> that are >= j + nu, where
    nu = (p-1)(q-1)/2 is the Seifert genus.
    """
    if not (p > q >= 2) or gcd(p, q) != 1:
        raise ValueError("need coprime p > q >= 2")
    sg = Semigroup(p, q)
    nu = (p - 1) * (q - 1) // 2
    vals = []
    j = 0
    while True:
        v = sg.gap_count_from(j + nu)
        vals.append(v)
        if v == 0:
            break
        j += 1
    return VSequence(vals)


def v_thin(tau):
    """V-sequence of a Floer-thin knot with tau invariant tau.

    V_i = max(ceil((tau - i)/2), 0).
    """
    vals = []
    i = 0
    while True:
        v = max(-((i - tau) // 2), 0)
        vals.append(v)
        if v == 0:
            break
        i += 1
    return VSequence(vals)


@dataclass(frozen=True)
class KnotModel:
    """A knot presented by whatever determines its V-sequence.

    kind is "torus" (params p, q), "thin" (params tau, signature), or
    "explicit" (params V-sequence).  signature is optional extra data
    used only by the thin-knot obstruction.
    """

    kind: str
    p: int = 0
    q: int = 0
    tau: int = 0
    signature: int | None = None
    explicit_v: VSequence | None = field(default=None, compare=True)

    @staticmethod
    def torus(p, q):
        if not (p > q >= 2) or gcd(p, q) != 1:
            raise ValueError("need coprime p > q >= 2")
        return KnotModel(kind="torus", p=p, q=q)

    @staticmethod
    def thin(tau, signature=None):
        return KnotModel(kind="thin", tau=tau, signature=signature)

    @staticmethod
    def explicit(values):
        return KnotModel(kind="explicit", explicit_v=VSequence(values))

    def v_sequence(self):
        if self.kind == "torus":
            return v_torus(self.p, self.q)
        if self.kind == "thin":
            return v_thin(self.tau)
        if self.kind == "explicit":
            return self.explicit_v
        raise ValueError("unknown knot kind %r" % self.kind)

    @property
    def nu_plus(self):
        return self.v_sequence().nu_plus

    def label(self):
        if self.kind == "torus":
            return "T(%d,%d)" % (self.p, self.q)
        if self.kind == "thin":
            return "thin(tau=%d)" % self.tau
        return "explicit%s" % (list(self.explicit_v.values),)


def parse_torus(text):
    """Parse "p,q" into a torus KnotModel."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("expected 'p,q', got %r" % text)
    return KnotModel.torus(int(parts[0]), int(parts[1]))


def owens_strle_m(p, q):
    """The minimal excluded slope bound m(T(p,q)) for positive slopes.

    For r >= m(K), positive r-surgery cannot bound a rational ball with
    certain sharpness data; for torus knots the value depends on the
    parity of the Euclidean algorithm length on (p, q):

        even number of steps: pq - q/p*   (p* = inverse of p mod q)
        odd  number of steps: pq - p/q*   (q* = inverse of q mod p)

    Returned as a Fraction-compatible exact rational.
    """
    from fractions import Fraction
    if not (p > q >= 2) or gcd(p, q) != 1:
        raise ValueError("need coprime p > q >= 2")
    if euclid_steps(p, q) % 2 == 0:
        pstar = mod_inverse(p, q)
        return p * q - Fraction(q, pstar)
    qstar = mod_inverse(q, p)
    return p * q - Fraction(p, qstar)
