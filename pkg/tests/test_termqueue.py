import random

import pytest

from gbengine import QueueConfig, ReducerQueue, Ring, all_queue_configs
from gbengine.poly import poly_from_exps
from gbengine.termqueue import Geobucket, MaxHeap, MaxTourTree

from _util import random_poly


def test_config_validation():
    with pytest.raises(ValueError):
        QueueConfig(backend="heap", hashed=True, dedup=True)
    with pytest.raises(ValueError):
        QueueConfig(backend="stack")
    assert len(all_queue_configs()) == 18   # 3 backends x 6 legal flag sets


def _e(k, c=1):
    return (k, c, None)


@pytest.mark.parametrize("make", [MaxHeap, Geobucket, MaxTourTree])
def test_backend_replace_top_examples(make):
    q = make()
    for k in (8, 5, 3, 1):
        q.push(_e(k))
    q.replace_top(_e(2))
    assert q.peek()[0] == 5
    q.replace_top(_e(5))
    assert q.peek()[0] == 5
    with pytest.raises(ValueError):
        q.replace_top(_e(99))


@pytest.mark.parametrize("make", [MaxHeap, Geobucket, MaxTourTree])
def test_backend_random_vs_sorted(make):
    rng = random.Random(3)
    for _ in range(50):
        q = make()
        vals = [rng.randrange(100) for _ in range(rng.randrange(1, 40))]
        for v in vals:
            q.push(_e(v))
        q.audit()
        got = []
        while True:
            e = q.pop()
            if e is None:
                break
            got.append(e[0])
        assert got == sorted(vals, reverse=True)


@pytest.mark.parametrize("make", [MaxHeap, Geobucket, MaxTourTree])
def test_backend_replace_top_equals_pop_push(make):
    rng = random.Random(5)
    for _ in range(200):
        vals = [rng.randrange(50) for _ in range(rng.randrange(2, 20))]
        a, b = make(), make()
        for v in vals:
            a.push(_e(v))
            b.push(_e(v))
        new = rng.randrange(min(max(vals), 50))
        a.replace_top(_e(new))
        b.pop()
        b.push(_e(new))
        out_a, out_b = [], []
        while (e := a.pop()) is not None:
            out_a.append(e[0])
        while (e := b.pop()) is not None:
            out_b.append(e[0])
        assert out_a == out_b


def test_geobucket_capacity_contract():
    rng = random.Random(7)
    q = Geobucket()
    for _ in range(500):
        q.push(_e(rng.randrange(1000)))
        q.audit()
    while q.pop() is not None:
        q.audit()


def test_tourtree_interior_invariant():
    rng = random.Random(9)
    q = MaxTourTree()
    for _ in range(300):
        q.push(_e(rng.randrange(100)))
        q.audit()
    for _ in range(150):
        q.pop()
        q.audit()


def _ring():
    return Ring(101, 3)


def test_push_product_logical_content():
    r = _ring()
    g = poly_from_exps(r, [(1, (2, 0, 0)), (100, (0, 1, 0))])   # x^2 - y
    x = r.mono((1, 0, 0))
    for cfg in all_queue_configs():
        q = ReducerQueue(r, cfg)
        q.push_product(1, x, g)
        pops = []
        while (t := q.pop_max()) is not None:
            pops.append((t[0], t[1].exps))
        assert pops == [(1, (3, 0, 0)), (100, (1, 1, 0))], cfg.label()


def test_pop_skips_cancelled_terms():
    r = _ring()
    x2 = poly_from_exps(r, [(1, (2, 0, 0))])
    y = poly_from_exps(r, [(1, (0, 1, 0))])
    for cfg in all_queue_configs():
        q = ReducerQueue(r, cfg)
        q.push_product(3, r.one, x2)
        q.push_product(98, r.one, x2)
        q.push_product(1, r.one, y)
        t = q.pop_max()
        assert t[1].exps == (0, 1, 0) and t[0] == 1, cfg.label()
        assert q.pop_max() is None


def test_compressed_single_entry_advances():
    r = _ring()
    g = poly_from_exps(r, [(1, (2, 0, 0)), (100, (0, 1, 0))])
    cfg = QueueConfig(backend="heap", hashed=False, compressed=True)
    q = ReducerQueue(r, cfg)
    q.push_product(1, r.mono((1, 0, 0)), g)
    assert len(q.backend) == 1
    t = q.pop_max()
    assert t[1].exps == (3, 0, 0)
    assert len(q.backend) == 1        # advanced in place via replace-top
    t = q.pop_max()
    assert (t[0], t[1].exps) == (100, (1, 1, 0))


def _run_script(r, cfg, script):
    q = ReducerQueue(r, cfg)
    out = []
    for op in script:
        if op[0] == "push":
            _, coeff, mono, poly, start = op
            q.push_product(coeff, mono, poly, start)
        else:
            t = q.pop_max()
            out.append(None if t is None else (t[0], t[1].exps))
    while (t := q.pop_max()) is not None:
        out.append((t[0], t[1].exps))
    return out


def _oracle(r, script):
    # sort-and-fold reference: accumulate all pushed terms, fold mod p,
    # emit in decreasing order interleaved with the pops
    p = r.char
    pending = {}
    out = []

    def pop_one():
        while pending:
            k = max(pending)
            c, exps = pending.pop(k)
            if c % p:
                return (c % p, exps)
        return None

    for op in script:
        if op[0] == "push":
            _, coeff, mono, poly, start = op
            for c, m in poly.terms[start:]:
                mm = r.mono_mul(mono, m)
                got = pending.get(mm.key)
                pending[mm.key] = ((got[0] + coeff * c) % p if got else
                                   coeff * c % p, mm.exps)
        else:
            out.append(pop_one())
    while (t := pop_one()) is not None:
        out.append(t)
    return out


def make_script(r, rng, n_ops=30):
    script = []
    polys = [random_poly(r, rng, max_terms=5, max_exp=4) for _ in range(6)]
    polys = [g for g in polys if g]
    for _ in range(n_ops):
        if rng.random() < 0.65:
            g = rng.choice(polys)
            start = rng.randrange(len(g))
            script.append(("push", rng.randrange(1, r.char),
                           rng.choice(polys).lead_mono, g, start))
        else:
            script.append(("pop",))
    return script


def test_black_box_equivalence_all_configs():
    rng = random.Random(13)
    r = _ring()
    configs = all_queue_configs()
    for _ in range(60):
        script = make_script(r, rng)
        expected = _oracle(r, script)
        for cfg in configs:
            assert _run_script(r, cfg, script) == expected, cfg.label()


def test_dedup_merges_like_terms():
    r = _ring()
    g = poly_from_exps(r, [(1, (1, 0, 0))])
    cfg = QueueConfig(backend="geobucket", hashed=False, dedup=True)
    q = ReducerQueue(r, cfg)
    for _ in range(8):
        q.push_product(1, r.one, g)
    # geobucket merges fold like plain terms, so fewer than 8 entries remain
    assert len(q.backend) < 8
    assert q.pop_max() == (8, g.lead_mono)
