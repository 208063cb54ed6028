from qhb.classify import (SearchSpace, candidates_for, certify_bounds,
                          classify_sweep, results_csv, results_jsonl,
                          survivors, sweep_unit)


def test_search_space_pairs():
    sp = SearchSpace(2, 3, 1, 2)
    pairs = set(sp.pairs())
    assert (3, 2, 1) in pairs
    assert (3, 2, -1) in pairs
    # p = q is excluded (k = 1, sign = -1, q = 2 gives p = 1 < q)
    assert all(p > q for p, q, _ in pairs)


def test_candidates_for():
    # trefoil: nu = 1, window {2, 3}, slopes 4 and 9
    assert candidates_for(3, 2) == [4, 9]
    assert candidates_for(5, 2) == [9]


def test_certify_bounds_goldens():
    c = certify_bounds(3, 2, 4)
    assert c is not None
    c = certify_bounds(3, 2, 9)
    assert c is not None
    c = certify_bounds(5, 2, 9)
    assert c is not None and c.kind == "connected-sum"
    assert "L(9,4)" in c.detail
    c = certify_bounds(13, 2, 25)
    assert c is not None
    # a random non-bounding slope has no certificate
    assert certify_bounds(5, 2, 11) is None


def test_q2_sweep_survivor_list():
    sp = SearchSpace(2, 2, 1, 6)
    results = classify_sweep(sp, threads=1)
    surv = {t for t, _, _ in survivors(results)}
    assert surv == {(3, 2, 4), (3, 2, 9), (5, 2, 9), (7, 2, 16),
                    (9, 2, 16), (13, 2, 25)}


def test_determinism_across_threads():
    sp = SearchSpace(2, 3, 1, 4)
    one = classify_sweep(sp, threads=1)
    two = classify_sweep(sp, threads=3)
    assert results_csv(one) == results_csv(two)


def test_csv_and_jsonl():
    results = sweep_unit(5, 2)
    csv = results_csv(results)
    lines = csv.strip().split("\n")
    assert lines[0] == "p,q,n,overall,reason"
    assert lines[1].startswith("5,2,9,")
    # reasons are comma-free so every row has exactly five fields
    assert all(line.count(",") == 4 for line in lines)
    jl = results_jsonl(results)
    import json
    rec = json.loads(jl.strip().split("\n")[0])
    assert rec["triple"] == [5, 2, 9]
    assert "overall" in rec
