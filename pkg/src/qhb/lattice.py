"""Embedding of plumbing lattices into the standard diagonal lattice.

A positive definite Gram matrix G of rank n embeds if there are vectors
c_1..c_n in Z^n with <c_i, c_j> = G_ij.  By Donaldson's theorem the
boundary of a definite plumbing that also bounds a rational homology
ball forces such an embedding, so NotEmbeddable is an obstruction.

The search is a straight backtrack over vertices with three prunings:
per-coordinate bounds |c_j| <= sqrt(remaining norm), a Cauchy-Schwarz
bound on unfinished inner products, and hyperoctahedral symmetry
reduction (coordinates not yet used by earlier vectors are forced into
a canonical non-negative, non-increasing block).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class EmbeddingWitness:
    """vectors[i] realizes vertex i (in graph vertex order); verified."""

    vectors: tuple
    sign: int
    nodes: int


@dataclass(frozen=True)
class NotEmbeddable:
    """Exhausted search certificate; nodes = search tree size."""

    nodes: int


def _gram_of(vectors):
    return [[sum(a * b for a, b in zip(u, v)) for v in vectors]
            for u in vectors]


def embed_lattice(graph, sign=1):
    """Embed the intersection lattice of graph into (Z^n, sign * I).

    sign=+1 expects a positive definite graph, sign=-1 a negative
    definite one (the search itself always runs positively).  Returns
    an EmbeddingWitness or NotEmbeddable; raises ValueError for
    indefinite or degenerate input.
    """
    M = graph.intersection_matrix()
    n = len(M)
    G = [[sign * M[i][j] for j in range(n)] for i in range(n)]
    if any(G[i][i] <= 0 for i in range(n)):
        raise ValueError("diagonal not positive under sign %+d" % sign)
    if graph.definiteness() not in ("positive", "negative"):
        raise ValueError("graph must be definite")

    # vertex order: heaviest first, then prefer vertices adjacent to
    # already-ordered ones (keeps constraints dense early on)
    order = []
    remaining = set(range(n))
    adj = [[j for j in range(n) if j != i and G[i][j] != 0]
           for i in range(n)]
    while remaining:
        frontier = {j for i in order for j in adj[i]} & remaining
        pool = frontier if frontier else remaining
        nxt = max(pool, key=lambda i: (G[i][i], -i))
        order.append(nxt)
        remaining.discard(nxt)

    vectors = [None] * n  # in `order` positions
    nodes = 0

    def candidates(w, constraints, touched):
        """All c in Z^n with |c|^2 = w, given inner-product constraints
        against earlier vectors (supported on the first `touched`
        coordinates), untouched block canonical."""
        out = []
        c = [0] * n
        # suffix square sums of each constraint vector over [j, touched)
        suf = []
        for vec, _ in constraints:
            s = [0] * (touched + 1)
            for j in range(touched - 1, -1, -1):
                s[j] = s[j + 1] + vec[j] * vec[j]
            suf.append(s)

        def rec(j, rem, dots, prev_untouched):
            nonlocal nodes
            nodes += 1
            if j == n:
                if rem == 0 and all(d == t for (_, t), d
                                    in zip(constraints, dots)):
                    out.append(tuple(c))
                return
            if j >= touched:
                # constraints are fully determined now
                if any(d != t for (_, t), d in zip(constraints, dots)):
                    return
                # canonical: non-negative, non-increasing
                hi = min(isqrt(rem), prev_untouched)
                for v in range(hi, -1, -1):
                    if rem - v * v > (n - j - 1) * v * v:
                        break  # later coords are <= v: cannot absorb rem
                    c[j] = v
                    rec(j + 1, rem - v * v, dots, v)
                c[j] = 0
                return
            b = isqrt(rem)
            for v in range(-b, b + 1):
                c[j] = v
                rem2 = rem - v * v
                ok = True
                for ci, ((vec, tgt), d) in enumerate(zip(constraints, dots)):
                    nd = d + v * vec[j]
                    gap = tgt - nd
                    # Cauchy-Schwarz over coords [j+1, touched) plus the
                    # untouched block (where constraint entries vanish)
                    if gap * gap > rem2 * suf[ci][j + 1]:
                        ok = False
                        break
                if ok:
                    new_dots = [d + v * vec[j] for (vec, _), d
                                in zip(constraints, dots)]
                    rec(j + 1, rem2, new_dots, 10 ** 9)
            c[j] = 0

        rec(0, w, [0] * len(constraints), 10 ** 9)
        return out

    def search(k, touched):
        if k == len(order):
            return True
        vi = order[k]
        cons = [(vectors[order[t]], G[vi][order[t]]) for t in range(k)]
        for cand in candidates(G[vi][vi], cons, touched):
            vectors[vi] = cand
            t2 = touched
            for j in range(n - 1, touched - 1, -1):
                if cand[j] != 0:
                    t2 = j + 1
                    break
            if search(k + 1, t2):
                return True
            vectors[vi] = None
        return False

    if search(0, 0):
        vecs = tuple(vectors)
        assert _gram_of(vecs) == G, "witness verification failed"
        return EmbeddingWitness(vectors=vecs, sign=sign, nodes=nodes)
    return NotEmbeddable(nodes=nodes)


def two_chain_obstruction(graph, max_removed=3):
    """Fast non-embeddability test for positive definite graphs.

    If removing k vertices leaves h > k components, each a chain of
    weight-2 vertices with length != 3 and at most one of length 1,
    the lattice cannot embed.  Returns ("obstructed", removed-ids) or
    ("inconclusive", None).
    """
    from itertools import combinations

    ids = graph.ids
    adj = graph.adjacency()
    weight = dict(graph.vertices)

    def components(removed):
        left = [v for v in ids if v not in removed]
        seen = set()
        comps = []
        for s in left:
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                for nb in adj[stack.pop()]:
                    if nb not in removed and nb not in seen:
                        seen.add(nb)
                        comp.append(nb)
                        stack.append(nb)
            comps.append(comp)
        return comps

    for k in range(0, min(max_removed, len(ids)) + 1):
        for removed in combinations(ids, k):
            rset = set(removed)
            comps = components(rset)
            if len(comps) <= k:
                continue
            ones = 0
            good = True
            for comp in comps:
                if any(weight[v] != 2 for v in comp):
                    good = False
                    break
                deg = [len([nb for nb in adj[v] if nb in comp])
                       for v in comp]
                if any(d > 2 for d in deg):
                    good = False
                    break
                if len(comp) == 3:
                    good = False
                    break
                if len(comp) == 1:
                    ones += 1
            if good and ones <= 1:
                return "obstructed", removed
    return "inconclusive", None
