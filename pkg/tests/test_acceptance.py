"""Acceptance criteria 1-9, all exact.

Each test records one ``criterion N: PASS|FAIL`` line; the lines are printed
in the pytest terminal summary, or directly when run as a script.
"""
from __future__ import annotations

import random
import sys
import time
from itertools import product


from schubrest.core_index import GrassIndex, complement, grass_indices, grass_partitions, length, partition_leq, pi
from schubrest.laurent import LaurentPolynomial as L
from schubrest.laurent import ratio
from schubrest.path_models import graphs_isomorphic_via_bijections, ladder_graph, swap_by_chain, twisted_chain_target
from schubrest.restriction import (
    consistency_lowest_degree,
    positivity_audit,
    restrict_h,
    restrict_k,
    restrict_k_via_nsum,
    union_class_oracle,
    weighted_terms,
)
from schubrest.tableaux import SetValuedTableau, enumerate_ssvt, enumerate_ssyt, is_semistandard, n_coefficient

RESULTS: dict[int, str] = {}
SWEEP = [(2, 4), (2, 5), (3, 6)]
BOUND = 20


def record(num: int, ok: bool, detail: str, seconds: float, limit: float) -> None:
    in_time = seconds < limit
    status = "PASS" if ok and in_time else "FAIL"
    RESULTS[num] = f"criterion {num}: {status} ({detail}; {seconds:.2f}s, limit {limit:g}s)"


def sweep_pairs():
    for d, n in SWEEP:
        idx = list(grass_indices(d, n))
        for a in idx:
            for b in idx:
                yield a, b


# 1 ---------------------------------------------------------------------------


def _reference_formulas(b2: int = 4, a2: int = 2):
    """The two expected formulas for Gr(3,6), alpha={1,3,5}, beta={2,5,6}.

    (b2, a2) is the middle factor of the 12/2 term, given as t4/t2 - 1."""
    km = lambda b, a: ratio(6, b, a) - 1  # noqa: E731
    t = lambda i: L.variable(6, i)  # noqa: E731
    k = -(km(6, 1) * km(6, 3) * km(5, 1) + km(6, 1) * km(b2, a2) * km(5, 1) + km(6, 1) * km(6, 3) * km(b2, a2) * km(5, 1))
    h = (t(6) - t(1)) * (t(6) - t(3)) * (t(5) - t(1)) + (t(6) - t(1)) * (t(b2) - t(a2)) * (t(5) - t(1))
    return k, h


def test_criterion_1_golden_example():
    t0 = time.perf_counter()
    a, b = GrassIndex(3, 6, (1, 3, 5)), GrassIndex(3, 6, (2, 5, 6))
    k, h = restrict_k(a, b), restrict_h(a, b)
    ref_k, ref_h = _reference_formulas()
    ok_k, ok_h = k == ref_k, h == ref_h
    # diagnostic only: does swapping that single factor for the weight-map value t5/t4 close the gap?
    alt_k, alt_h = _reference_formulas(5, 4)
    near = k == alt_k and h == alt_h
    dt = time.perf_counter() - t0
    detail = f"K matches reference: {ok_k}, H matches reference: {ok_h}"
    if not (ok_k and ok_h):
        detail += f"; equal once the reference t4/t2 is read as t5/t4: {near}"
    record(1, ok_k and ok_h, detail, dt, 1)
    assert ok_k, f"restrict_k = {k.to_text()}\n reference = {ref_k.to_text()}"
    assert ok_h, f"restrict_h = {h.to_text()}\n reference = {ref_h.to_text()}"
    assert dt < 1


# 2 ---------------------------------------------------------------------------

REFERENCE_SSVT = [
    "11/2", "12/2", "11/3", "12/3", "22/3", "{1,2}2/3",
    "1{1,2}/2", "1{1,2}/3", "11/{2,3}", "12/{2,3}", "1{1,2}/{2,3}",
]


def test_criterion_2_ssvt_count():
    t0 = time.perf_counter()
    got = enumerate_ssvt((2, 1), (4, 4, 2, 1))
    expected = sorted((SetValuedTableau.parse(x) for x in REFERENCE_SSVT), key=SetValuedTableau.sort_key)
    ok = len(got) == 11 and got == expected
    dt = time.perf_counter() - t0
    record(2, ok, f"{len(got)} tableaux, list match {got == expected}", dt, 1)
    assert ok and dt < 1


# 3 ---------------------------------------------------------------------------


def test_criterion_3_model_triad():
    t0 = time.perf_counter()
    lam, mu = (2, 1), (4, 4, 3, 3, 1)
    sizes = {m: (len(g.nodes), len(g.edges)) for m in ("ssyt", "paths", "subsets") for g in [ladder_graph(m, lam, mu)]}
    iso = graphs_isomorphic_via_bijections(lam, mu)
    ok = all(s == (8, 10) for s in sizes.values()) and iso
    dt = time.perf_counter() - t0
    record(3, ok, f"sizes {sizes}, isomorphic {iso}", dt, 1)
    assert ok and dt < 1


# 4 ---------------------------------------------------------------------------


def test_criterion_4_oracle_sweep():
    t0 = time.perf_counter()
    checked = skipped = 0
    bad = []
    for a, b in sweep_pairs():
        ssyt = enumerate_ssyt(pi(a), pi(b))
        if len(ssyt) > BOUND:
            skipped += 1
            continue
        checked += 1
        k = restrict_k(a, b)
        if not (k == union_class_oracle(ssyt, b, BOUND) == restrict_k_via_nsum(a, b)):
            bad.append((a, b))
    dt = time.perf_counter() - t0
    record(4, not bad, f"{checked} pairs checked, {skipped} over bound, {len(bad)} mismatches", dt, 60)
    assert not bad and dt < 60


# 5 ---------------------------------------------------------------------------


def test_criterion_5_lowest_degree():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for n in range(2, 8):
        for d in range(1, n):
            idx = list(grass_indices(d, n))
            for a, b in product(idx, idx):
                checked += 1
                if not consistency_lowest_degree(a, b):
                    bad.append((a, b))
    dt = time.perf_counter() - t0
    record(5, not bad, f"{checked} pairs with n <= 7, {len(bad)} failures", dt, 120)
    assert not bad and dt < 120


# 6 ---------------------------------------------------------------------------


def random_non_semistandard(rng: random.Random, max_entries: int = 8) -> SetValuedTableau:
    shapes = [p for k in range(1, max_entries + 1) for p in _partitions(k)]
    while True:
        shape = rng.choice(shapes)
        nb = sum(shape)
        budget = max_entries - nb
        cells = []
        for _ in range(nb):
            extra = rng.randint(0, min(2, budget))
            budget -= extra
            cells.append(tuple(sorted(rng.sample(range(1, 6), 1 + extra))))
        it = iter(cells)
        s = SetValuedTableau(tuple(tuple(next(it) for _ in range(k)) for k in shape))
        if not is_semistandard(s):
            return s


def _partitions(k: int, cap: int | None = None):
    if k == 0:
        yield ()
        return
    cap = k if cap is None else cap
    for first in range(min(k, cap), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def test_criterion_6_n_three_way():
    t0 = time.perf_counter()
    pool: set[SetValuedTableau] = set()
    for a, b in sweep_pairs():
        if len(enumerate_ssyt(pi(a), pi(b))) <= BOUND:
            pool.update(enumerate_ssvt(pi(a), pi(b)))
    bad = []
    for s in sorted(pool, key=SetValuedTableau.sort_key):
        vals = [n_coefficient(s, strat) for strat in ("definition", "inclusion_exclusion", "closed")]
        if len(set(vals)) != 1 or vals[0] != (-1) ** (s.total_entries + s.num_boxes):
            bad.append((s.label(), vals))
    rng = random.Random(20261014)
    for _ in range(500):
        s = random_non_semistandard(rng)
        vals = [n_coefficient(s, strat) for strat in ("definition", "inclusion_exclusion", "closed")]
        if vals != [0, 0, 0]:
            bad.append((s.label(), vals))
    dt = time.perf_counter() - t0
    record(6, not bad, f"{len(pool)} SSVT + 500 random non-semistandard, {len(bad)} disagreements", dt, 60)
    assert not bad and dt < 60


# 7 ---------------------------------------------------------------------------


def test_criterion_7_twisted_chains():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for n in range(2, 9):
        for d in range(1, min(n, 5)):
            parts = list(grass_partitions(d, n))
            for mu in parts:
                for lam in parts:
                    if not partition_leq(lam, mu):
                        continue
                    checked += 1
                    try:
                        twisted_chain_target(lam, mu, d, n)
                    except AssertionError as exc:
                        bad.append(str(exc))
    instance = twisted_chain_target((4, 2, 2, 1, 1), (4, 4, 3, 3, 1), 5, 9)
    inst_ok = instance == {(2, 2)} and swap_by_chain(instance, (4, 4, 3, 3, 1), 5, 9) == (2, 3, 5, 6, 9)
    dt = time.perf_counter() - t0
    record(7, not bad and inst_ok, f"{checked} shape pairs, {len(bad)} failures, instance {sorted(instance)}", dt, 30)
    assert not bad and inst_ok and dt < 30


# 8 ---------------------------------------------------------------------------


def test_criterion_8_positivity():
    t0 = time.perf_counter()
    factors = violations = 0
    for a, b in sweep_pairs():
        report = positivity_audit(a, b)
        factors += report.factor_count
        violations += len(report.violations)
        for t in weighted_terms(a, b, "H"):
            violations += sum(1 for x, y in t.factors if not y > x)
    dt = time.perf_counter() - t0
    record(8, violations == 0, f"{factors} factors audited, {violations} violations", dt, 60)
    assert violations == 0


# 9 ---------------------------------------------------------------------------


def test_criterion_9_degenerate():
    t0 = time.perf_counter()
    bad = []
    for d, n in SWEEP + [(1, 3), (4, 7)]:
        ident = GrassIndex(d, n, tuple(range(1, d + 1)))
        idx = list(grass_indices(d, n))
        for a, b in product(idx, idx):
            k, h = restrict_k(a, b), restrict_h(a, b)
            leq = partition_leq(pi(a), pi(b))
            if k.is_zero() == leq or h.is_zero() == leq:
                bad.append(("vanishing", a, b))
            if a == ident and not (k == 1 and h == 1):
                bad.append(("identity", a, b))
            if a == b:
                lam, mu = pi(a), pi(b)
                if len(enumerate_ssvt(lam, mu)) != 1 or len(enumerate_ssyt(lam, mu)) != 1:
                    bad.append(("unique tableau", a, b))
                comp = complement(b)
                ek, eh = L.one(n), L.one(n)
                for i, j in mu.boxes():
                    ek = ek * (ratio(n, b(d + 1 - i), comp[j - 1]) - 1)
                    eh = eh * (L.variable(n, b(d + 1 - i)) - L.variable(n, comp[j - 1]))
                if k != (-1) ** length(a) * ek or h != eh:
                    bad.append(("diagonal product", a, b))
    dt = time.perf_counter() - t0
    record(9, not bad, f"{len(bad)} violations", dt, 60)
    assert not bad


def summary_lines() -> list[str]:
    return [RESULTS[k] for k in sorted(RESULTS)]


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(": PASS" in line for line in summary_lines()) else 1)
