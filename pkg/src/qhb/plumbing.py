"""Plumbing forests and star-shaped (Seifert) presentations.

A plumbing graph is a forest of weighted vertices; its intersection
matrix has the weights on the diagonal and 1 for each edge.  Seifert
data Y(b; a_1/b_1, ..., a_k/b_k) normalizes to 0 < b_i < a_i and
expands to a star-shaped plumbing via negative continued fractions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import mod_inverse, neg_cf_eval, neg_cf_expand


# ---------------------------------------------------------------------------
# exact symmetric linear algebra

def determinant(M):
    """Determinant of an integer matrix, exactly (fraction-free Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inertia(M):
    """(n_plus, n_minus, n_zero) for a symmetric rational matrix."""
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    pos = neg = zero = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if A[i][i] != 0), None)
        if piv is not None:
            d = A[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in active if i != piv]
            for i in rest:
                f = A[i][piv] / d
                if f:
                    for j in rest:
                        A[i][j] -= f * A[piv][j]
            active = rest
            continue
        # all active diagonal entries are zero
        off = next(((i, j) for i in active for j in active
                    if j > i and A[i][j] != 0), None)
        if off is None:
            zero += len(active)
            break
        i0, j0 = off
        a = A[i0][j0]
        pos += 1
        neg += 1
        rest = [i for i in active if i not in (i0, j0)]
        for i in rest:
            ci, cj = A[i][i0], A[i][j0]
            if ci or cj:
                for j in rest:
                    A[i][j] -= (ci * A[j0][j] + cj * A[i0][j]) / a
        active = rest
    return pos, neg, zero


def invert_matrix(M):
    """Exact inverse of an integer matrix as Fractions (Gauss-Jordan)."""
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] + [Fraction(int(i == j))
         for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        d = A[col][col]
        A[col] = [x / d for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


# ---------------------------------------------------------------------------
# plumbing graphs

@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted forest: vertices as (id, weight), edges as id pairs."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        ids = [v for v, _ in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        idset = set(ids)
        seen = set()
        for a, b in self.edges:
            if a not in idset or b not in idset or a == b:
                raise ValueError("bad edge (%s, %s)" % (a, b))
            key = frozenset((a, b))
            if key in seen:
                raise ValueError("duplicate edge (%s, %s)" % (a, b))
            seen.add(key)
        # forest check: union-find over edges
        parent = {v: v for v in ids}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("graph has a cycle")
            parent[ra] = rb

    @staticmethod
    def make(weights, edges=()):
        """Build from a weight list (ids 0..n-1) and index-pair edges."""
        verts = tuple((i, int(w)) for i, w in enumerate(weights))
        return PlumbingGraph(verts, tuple((int(a), int(b)) for a, b in edges))

    @staticmethod
    def linear(weights):
        """A linear chain with the given weights, in order."""
        n = len(weights)
        return PlumbingGraph.make(weights, [(i, i + 1) for i in range(n - 1)])

    @property
    def ids(self):
        return [v for v, _ in self.vertices]

    @property
    def weights(self):
        return [w for _, w in self.vertices]

    def weight_of(self, vid):
        for v, w in self.vertices:
            if v == vid:
                return w
        raise KeyError(vid)

    def adjacency(self):
        adj = {v: set() for v in self.ids}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def intersection_matrix(self):
        index = {v: i for i, v in enumerate(self.ids)}
        n = len(index)
        M = [[0] * n for _ in range(n)]
        for i, (_, w) in enumerate(self.vertices):
            M[i][i] = w
        for a, b in self.edges:
            M[index[a]][index[b]] = 1
            M[index[b]][index[a]] = 1
        return M

    def negate(self):
        return PlumbingGraph(tuple((v, -w) for v, w in self.vertices),
                             self.edges)

    def is_linear(self):
        adj = self.adjacency()
        return all(len(nb) <= 2 for nb in adj.values()) and self.is_connected()

    def is_connected(self):
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.ids[0]}
        stack = [self.ids[0]]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.vertices)

    def chain_weights(self):
        """Weights of a linear chain, read end to end."""
        if not self.is_linear():
            raise ValueError("not a linear chain")
        if len(self.vertices) == 1:
            return [self.weights[0]]
        adj = self.adjacency()
        start = min(v for v in self.ids if len(adj[v]) == 1)
        order = [start]
        prev = None
        while len(order) < len(self.vertices):
            nxt = next(nb for nb in adj[order[-1]] if nb != prev)
            prev = order[-1]
            order.append(nxt)
        return [self.weight_of(v) for v in order]

    def definiteness(self):
        """'positive', 'negative', 'degenerate', or 'indefinite'."""
        pos, negv, zero = inertia(self.intersection_matrix())
        if zero:
            return "degenerate"
        if negv == 0:
            return "positive"
        if pos == 0:
            return "negative"
        return "indefinite"

    def to_json(self):
        return json.dumps({
            "vertices": [{"id": v, "weight": w} for v, w in self.vertices],
            "edges": [[a, b] for a, b in self.edges],
        })

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        verts = tuple((int(v["id"]), int(v["weight"]))
                      for v in data["vertices"])
        edges = tuple((int(a), int(b)) for a, b in data["edges"])
        return PlumbingGraph(verts, edges)


def linear_dual(graph):
    """Dual of a linear chain: same lens space, reversed orientation data.

    A chain with weights [a_1..a_n] (all >= 2 in absolute value, same
    sign) dualizes to the chain of the complementary fraction
    p/(p - q) where p/q = [|a_1|..|a_n|]^-, keeping the sign.
    """
    ws = graph.chain_weights()
    if all(w >= 2 for w in ws):
        sign = 1
    elif all(w <= -2 for w in ws):
        sign = -1
    else:
        raise ValueError("chain weights must all be >= 2 or all <= -2")
    r = neg_cf_eval([abs(w) for w in ws])
    p, q = r.numerator, r.denominator
    dual = neg_cf_expand(Fraction(p, p - q))
    return PlumbingGraph.linear([sign * a for a in dual])


# ---------------------------------------------------------------------------
# Seifert data

@dataclass(frozen=True)
class SeifertData:
    """Y(b; a_1/b_1, ..., a_k/b_k): central weight b, exceptional fibres.

    Fibres are stored as (alpha, beta) pairs with alpha > 1 and
    gcd(alpha, beta) = 1; beta may be any integer coprime to alpha
    (unnormalized form), normalize() brings them to 0 < beta < alpha.
    """

    b: int
    fibres: tuple

    def __post_init__(self):
        for a, bt in self.fibres:
            if a <= 1:
                raise ValueError("fibre multiplicity must be > 1, got %d" % a)
            if gcd(a, bt) != 1:
                raise ValueError("fibre (%d, %d) not coprime" % (a, bt))

    @staticmethod
    def make(b, fibres):
        return SeifertData(int(b), tuple((int(a), int(bt))
                                         for a, bt in fibres))

    def e_invariant(self):
        """b - sum beta_i/alpha_i: orientation-ordering invariant."""
        return self.b - sum(Fraction(bt, a) for a, bt in self.fibres)

    def normalize(self):
        """Roll every fibre into 0 < beta < alpha, adjusting b.

        Replacing beta by beta - alpha while dropping b by 1 preserves
        the Seifert manifold; e_invariant() is unchanged.
        """
        b = self.b
        fib = []
        for a, bt in self.fibres:
            r = bt % a
            b -= (bt - r) // a
            fib.append((a, r))
        return SeifertData(b, tuple(fib))

    def reverse_orientation(self):
        return SeifertData(-self.b, tuple((a, -bt) for a, bt in self.fibres))

    def to_json(self):
        return json.dumps({
            "b": self.b,
            "fibres": [[str(a), str(bt)] for a, bt in self.fibres],
        })

    @staticmethod
    def from_json(text):
        data = json.loads(text)
        return SeifertData.make(data["b"], [(int(a), int(bt))
                                            for a, bt in data["fibres"]])


def seifert_to_graph(seifert):
    """Star-shaped plumbing for normalized Seifert data.

    Central vertex weighted b, one leg per fibre carrying the negative
    continued fraction string of alpha/beta.
    """
    s = seifert.normalize()
    weights = [s.b]
    edges = []
    for a, bt in s.fibres:
        leg = neg_cf_expand(Fraction(a, bt))
        prev = 0
        for w in leg:
            weights.append(w)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    return PlumbingGraph.make(weights, edges)


def join_reduce(seifert):
    """Cancel complementary fibre pairs: beta_h/alpha_h + beta_k/alpha_k = 1.

    Each cancelled pair also drops the central weight by 1; the boundary
    3-manifold is preserved.  Input is normalized first.
    """
    s = seifert.normalize()
    b = s.b
    fib = list(s.fibres)
    changed = True
    while changed:
        changed = False
        for h in range(len(fib)):
            for k in range(h + 1, len(fib)):
                ah, bh = fib[h]
                ak, bk = fib[k]
                if Fraction(bh, ah) + Fraction(bk, ak) == 1:
                    del fib[k]
                    del fib[h]
                    b -= 1
                    changed = True
                    break
            if changed:
                break
    return SeifertData(b, tuple(fib))


@dataclass(frozen=True)
class LensConnectedSum:
    """An oriented connected sum of lens spaces L(p_1,q_1) # ...

    orientation -1 means the summands carry the reversed orientation
    relative to the standard lens convention used elsewhere here.
    """

    summands: tuple
    orientation: int = 1


def torus_surgery_seifert(p, q, r):
    """Seifert presentation of r-surgery on the torus knot T(p, q).

    For r != pq the result is Y(2; p/q*, q/p*, (pq-r)/(pq-r-1)) with
    q* = inverse of q mod p in (0, p), p* = inverse of p mod q.  At the
    reducible slope r = pq it is the connected sum of two lens spaces
    instead, returned as a LensConnectedSum.
    """
    if not (p > q >= 2) or gcd(p, q) != 1:
        raise ValueError("need coprime p > q >= 2")
    r = Fraction(r)
    if r == p * q:
        return LensConnectedSum(((p, q), (q, p % q)), orientation=-1)
    if r == p * q - 1 or r == p * q + 1:
        n = int(r)
        return LensConnectedSum(((n, q * q % n),), orientation=-1)
    qstar = mod_inverse(q, p)
    pstar = mod_inverse(p, q)
    f3 = (p * q - r) / (p * q - r - 1)
    return SeifertData.make(2, [(p, qstar), (q, pstar),
                                (f3.numerator, f3.denominator)])


def torus_surgery_graph(p, q, r):
    """Plumbing graph of r-surgery on T(p, q) away from pq-1 <= r <= pq+1.

    Those three slopes give a lens space or a reducible manifold, which
    have their own chain descriptions; everywhere else the normalized
    Seifert presentation is star-shaped with three legs.
    """
    r = Fraction(r)
    if p * q - 1 <= r <= p * q + 1:
        raise ValueError("slope within 1 of pq: use the lens/reducible form")
    return seifert_to_graph(torus_surgery_seifert(p, q, r))
