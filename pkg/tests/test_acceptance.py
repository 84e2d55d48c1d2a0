"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import itertools
import json
import random
import time

import pytest

from posetcat.catalog import pseudocircle, pseudocircle_inclusion, pseudocircle_squared
from posetcat.covers import (homotopic_distance, homotopic_distance_direct, liftcat_op,
                             ls_category_space, tc_via_distance, topological_complexity)
from posetcat.harness import SuiteConfig, run_suite
from posetcat.harness.generators import GeneratorConfig, gen_inclusion, gen_map, gen_space
from posetcat.homotopy import is_homotopic, is_nullhomotopic
from posetcat.maps import identity, point_inclusion, product_map
from posetcat.space import enumerate_opens, is_normal, product, subspace
from posetcat.verify import CertificateError, verify_fence, verify_result
from posetcat.whitehead import liftcat_wg

pytestmark = pytest.mark.slow

TC_S_GOLDEN = 3


@pytest.fixture
def announce(capsys):
    def say(n, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance] criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
    return say


def _roundtrip(doc):
    return json.loads(json.dumps(doc))


def _reverify(res):
    return verify_result(_roundtrip(res.to_json()))


def test_1_pseudocircle_category(announce):
    S = pseudocircle()
    t0 = time.perf_counter()
    res = ls_category_space(S)
    dt = time.perf_counter() - t0
    parts = {frozenset(p.points) for p in res.certificate.parts}
    want = {frozenset({"b1", "b2", "a1"}), frozenset({"b1", "b2", "a2"})}
    ok = res.number == 1 and parts == want and _reverify(res) and dt < 1.0
    announce(1, ok, f"cat(S)={res.value}, cover={sorted(map(sorted, parts))}, {dt:.3f}s")
    assert ok


def test_2_pseudocircle_square(announce):
    S = pseudocircle()
    P = pseudocircle_squared()
    t0 = time.perf_counter()
    res = ls_category_space(P)
    # upper bound: the four products U_i x U_j are open, nullhomotopic and cover
    quads = [product_map(pseudocircle_inclusion(i), pseudocircle_inclusion(j))
             for i in (1, 2) for j in (1, 2)]
    upper = all(is_nullhomotopic(q).homotopic for q in quads)
    cover = set()
    for q in quads:
        img = {q.codomain.points[v] for v in q.values}
        cover |= img
        upper &= P.is_open(P.mask_of(img))
    upper &= cover == set(P.points)
    # lower bound: brute force over every open, then every <= 3 maximal ones
    adm = [o.members for o in enumerate_opens(P) if o.members and
           is_nullhomotopic(subspace(P, P.labels_of(o.members))[1]).homotopic]
    maximal = [V for V in adm if not any(V != W and V & ~W == 0 for W in adm)]
    refuted = not any(
        (lambda m: m == P.full)(sum_or(combo))
        for k in (1, 2, 3) for combo in itertools.combinations(maximal, k))
    dt = time.perf_counter() - t0
    ok = res.number == 3 and upper and refuted and _reverify(res) and dt <= 300
    announce(2, ok, f"cat(SxS)={res.value}, 4-part upper bound {upper}, "
                    f"{len(maximal)} maximal admissible opens, <=3-part covers refuted {refuted}, "
                    f"{dt:.1f}s")
    assert ok


def sum_or(masks):
    acc = 0
    for m in masks:
        acc |= m
    return acc


def test_3_normality_regression(announce):
    S = pseudocircle()
    normal = is_normal(S)[0]
    c = ls_category_space(S).number
    cc = ls_category_space(product(S, S)).number
    ok = (not normal) and c == 1 and cc == 3 and cc > c + c
    announce(3, ok, f"is_normal(S)={normal}, cat(SxS)={cc} > cat(S)+cat(S)={c + c}")
    assert ok


def test_4_op_vs_whitehead(announce):
    rng = random.Random(2024)
    t0 = time.perf_counter()
    n = normal_n = violations = 0
    while n < 300:
        cfg = GeneratorConfig(max_points=5, edge_density=rng.choice((0.25, 0.45, 0.65)))
        X, Y = gen_space(cfg, rng), gen_space(cfg, rng)
        f, iota = gen_map(X, Y, cfg, rng), gen_inclusion(Y, rng)
        op, wg = liftcat_op(f, iota).number, liftcat_wg(f, iota).number
        normal = is_normal(X)[0]
        n += 1
        normal_n += normal
        if not (op <= wg and (not normal or op == wg)):
            violations += 1
    dt = time.perf_counter() - t0
    ok = n >= 200 and violations == 0 and dt <= 600
    announce(4, ok, f"{n} instances ({normal_n} normal), {violations} violations, {dt:.1f}s")
    assert ok


def test_5_oracle_agreement(announce):
    rng = random.Random(7)
    pairs = mism = 0
    while pairs < 320:
        cfg = GeneratorConfig(max_points=5, edge_density=rng.choice((0.25, 0.45, 0.65)))
        X, Y = gen_space(cfg, rng), gen_space(cfg, rng)
        f, g = gen_map(X, Y, cfg, rng), gen_map(X, Y, cfg, rng)
        pairs += 1
        mism += homotopic_distance(f, g).number != homotopic_distance_direct(f, g).number
    spaces = tc_mism = 0
    while spaces < 60:
        Y = gen_space(GeneratorConfig(max_points=5, edge_density=rng.choice((0.3, 0.5))), rng)
        spaces += 1
        tc_mism += topological_complexity(Y).number != tc_via_distance(Y).number
    ok = pairs >= 300 and spaces >= 50 and mism == 0 and tc_mism == 0
    announce(5, ok, f"D vs D_direct: {pairs} pairs, {mism} mismatches; "
                    f"TC vs D(pr1,pr2): {spaces} spaces, {tc_mism} mismatches")
    assert ok


def test_6_property_suite(announce):
    t0 = time.perf_counter()
    rep = run_suite(SuiteConfig(seed=0, instances=100, max_points=5))
    dt = time.perf_counter() - t0
    failures = sum(len(p.failures) for p in rep.properties)
    total, over = rep.total_instances, rep.total_budget_exceeded
    short = [p.id for p in rep.properties if p.instances_run < 100]
    ok = failures == 0 and over < 0.05 * total and dt <= 900 and not short
    announce(6, ok, f"{len(rep.properties)} properties, {total} instances, {failures} failures, "
                    f"{over} budget-exceeded, {dt:.1f}s")
    if not ok:
        print(rep.table())
    assert ok


def test_7_tc_pseudocircle(announce):
    S = pseudocircle()
    res = topological_complexity(S)
    v = res.number
    ok = 1 <= v <= 3 and v == TC_S_GOLDEN and _reverify(res)
    announce(7, ok, f"TC(S)={v} (golden {TC_S_GOLDEN}), bounds [1, 3]")
    assert ok


def test_8_certificate_reverification(announce):
    rng = random.Random(99)
    emitted = verified = 0

    def check(thunk):
        nonlocal emitted, verified
        emitted += 1
        try:
            verified += bool(thunk())
        except CertificateError:
            pass

    S = pseudocircle()
    for res in (ls_category_space(S), topological_complexity(S), tc_via_distance(S),
                liftcat_op(identity(S), point_inclusion(S, "b1"))):
        check(lambda res=res: _reverify(res))
    for _ in range(150):
        pointed = rng.random() < 0.3
        cfg = GeneratorConfig(max_points=5, edge_density=rng.choice((0.25, 0.45, 0.65)),
                              pointed=pointed)
        X, Y, A = gen_space(cfg, rng), gen_space(cfg, rng), gen_space(cfg, rng)
        f, g = gen_map(X, Y, cfg, rng, pointed), gen_map(X, Y, cfg, rng, pointed)
        iota = gen_map(A, Y, cfg, rng, pointed)
        for res in (liftcat_op(f, iota, pointed), homotopic_distance(f, g, pointed),
                    homotopic_distance_direct(f, g), liftcat_wg(f, gen_inclusion(Y, rng))):
            if res.certificate is not None:
                check(lambda res=res: _reverify(res))
        v = is_homotopic(f, g, pointed)
        if v.homotopic:
            check(lambda v=v: verify_fence(f.to_json(), g.to_json(),
                                           _roundtrip(v.certificate.to_json()), pointed))
    ok = emitted > 0 and verified == emitted
    announce(8, ok, f"{verified}/{emitted} certificates re-validated by the independent checker")
    assert ok
