import itertools
import random
from math import isqrt

from qhb.lattice import (EmbeddingWitness, NotEmbeddable, embed_lattice,
                         two_chain_obstruction)
from qhb.plumbing import PlumbingGraph


def naive_embed(graph):
    """Exhaustive embedding search with no pruning beyond the Gram
    constraints themselves; independent oracle for embed_lattice."""
    M = graph.intersection_matrix()
    n = len(M)
    top = isqrt(max(M[i][i] for i in range(n)))

    def vectors(norm):
        out = []
        for v in itertools.product(range(-top, top + 1), repeat=n):
            if sum(x * x for x in v) == norm:
                out.append(v)
        return out

    pools = [vectors(M[i][i]) for i in range(n)]

    def rec(chosen):
        i = len(chosen)
        if i == n:
            return list(chosen)
        for v in pools[i]:
            if all(sum(a * b for a, b in zip(v, chosen[j])) == M[i][j]
                   for j in range(i)):
                got = rec(chosen + [v])
                if got:
                    return got
        return None

    return rec([])


def test_golden_chains():
    assert isinstance(embed_lattice(PlumbingGraph.linear([3, 2, 5])),
                      NotEmbeddable)
    out = embed_lattice(PlumbingGraph.linear([9, 2, 2]))
    assert isinstance(out, EmbeddingWitness)
    out2 = embed_lattice(PlumbingGraph.linear([3, 5, 2]))
    assert isinstance(out2, EmbeddingWitness)


def test_witness_is_verified_gram():
    g = PlumbingGraph.make([2, 2, 2, 2], [(0, 1), (0, 2), (0, 3)])
    out = embed_lattice(g)
    assert isinstance(out, EmbeddingWitness)
    M = g.intersection_matrix()
    V = out.vectors
    for i in range(4):
        for j in range(4):
            assert sum(a * b for a, b in zip(V[i], V[j])) == M[i][j]


def test_e8_not_embeddable():
    ws = [2] * 8
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    assert isinstance(embed_lattice(PlumbingGraph.make(ws, edges)),
                      NotEmbeddable)


def test_negative_sign_convention():
    g = PlumbingGraph.linear([-9, -2, -2])
    out = embed_lattice(g, sign=-1)
    assert isinstance(out, EmbeddingWitness)


def test_oracle_equivalence_small_chains():
    rng = random.Random(5)
    corpus = [list(c) for c in itertools.product((2, 3, 4, 5), repeat=3)]
    corpus += [[rng.randrange(2, 10) for _ in range(4)] for _ in range(25)]
    for ws in corpus:
        g = PlumbingGraph.linear(ws)
        if g.definiteness() != "positive":
            continue
        fast = embed_lattice(g)
        slow = naive_embed(g)
        assert isinstance(fast, EmbeddingWitness) == (slow is not None), ws


def test_two_chain_implies_not_embeddable():
    rng = random.Random(6)
    checked = 0
    while checked < 12:
        k = rng.randrange(3, 7)
        ws = [rng.randrange(2, 8) for _ in range(k)]
        g = PlumbingGraph.linear(ws)
        if g.definiteness() != "positive":
            continue
        verdict, _ = two_chain_obstruction(g)
        if verdict == "obstructed":
            assert isinstance(embed_lattice(g), NotEmbeddable), ws
            checked += 1
        else:
            checked += 1
