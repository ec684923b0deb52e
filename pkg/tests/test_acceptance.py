"""Acceptance suite: each test checks one numbered criterion at its stated
tolerance and prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.

Criterion 2 is expected to FAIL on one sub-check: the printed reference
table for the degree-Kirchhoff index contains an outright misprint at
n = 11 (308316.00, where formula and brute-force oracle both give
308346), which exceeds the stated 0.05 tolerance.  The failure is kept
honest here; the verifier records the same row as a mismatch finding.
"""

import time
from fractions import Fraction

import pytest

from chaindex import build_crossed_chain
from chaindex import bench, formulas, oracles
from chaindex import spectral as sp
from chaindex import verify as vf
from chaindex.linalg import det_bareiss


def _report(ok: bool, number: int, detail: str) -> None:
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="module")
def chains():
    return {n: build_crossed_chain(n) for n in range(1, 9)}


@pytest.fixture(scope="module")
def full_report():
    return vf.run_verification(1, 8)


def test_criterion_1_kirchhoff(chains):
    start = time.perf_counter()
    exact_ok = all(
        formulas.kirchhoff_closed(n) == oracles.kirchhoff_index(chains[n])
        for n in range(1, 7)
    )
    table_gaps = {
        n: abs(formulas.kirchhoff_closed(n) - Fraction(printed))
        for n, printed in formulas.TABLE_KF.items()
    }
    table_ok = all(gap <= Fraction(1, 20) for gap in table_gaps.values())
    elapsed = time.perf_counter() - start
    ok = exact_ok and table_ok and elapsed < 60
    _report(ok, 1, f"closed form == oracle for n=1..6, table within 0.05, {elapsed:.1f}s")
    assert exact_ok, "closed form disagrees with oracle"
    assert table_ok, f"table gaps: {table_gaps}"
    assert elapsed < 60


def test_criterion_2_degree_kirchhoff(chains):
    exact_ok = all(
        formulas.degree_kirchhoff_closed(n) == oracles.degree_kirchhoff_index(chains[n])
        for n in range(1, 7)
    )
    table_gaps = {
        n: abs(formulas.degree_kirchhoff_closed(n) - Fraction(printed))
        for n, printed in formulas.TABLE_KF_STAR.items()
    }
    offenders = {n: float(g) for n, g in table_gaps.items() if g > Fraction(1, 20)}
    table_ok = not offenders
    _report(exact_ok and table_ok, 2,
            f"closed form == oracle for n=1..6; table rows beyond 0.05: {offenders or 'none'}")
    assert exact_ok, "closed form disagrees with oracle"
    assert table_ok, (
        f"printed table rows beyond 0.05: {offenders}; the n=11 row is a misprint "
        "in the source (oracle and formula agree on 308346)"
    )


def test_criterion_3_spanning_trees(chains):
    exact_ok = all(
        formulas.spanning_trees_closed(n) == oracles.spanning_tree_count(chains[n])
        for n in range(1, 5)
    )
    verbatim_ok = all(
        str(formulas.spanning_trees_closed(n)) == printed
        for n, printed in formulas.TABLE_TREES.items()
    )
    _report(exact_ok and verbatim_ok, 3,
            "tree counts match oracle n=1..4 and all eight printed integers verbatim")
    assert exact_ok and verbatim_ok


def test_criterion_4_factorization():
    results = {n: sp.factorization_holds(n) for n in range(1, 5)}
    ok = all(lap and norm for lap, norm in results.values())
    _report(ok, 4, f"polynomial identity for both families, n=1..4: {results}")
    assert ok


def test_criterion_5_tail_coefficients():
    ok = True
    for n in range(1, 7):
        blocks = sp.mirror_blocks(n)
        closed = sp.lap_tail_coeffs_closed(n)
        ok &= sp.tail_coeffs(blocks.lap_sum.char_poly()) == closed

        # minor-sum definitions, computed by dense fraction-free determinants
        m = 4 * n + 1
        dense = [[0] * m for _ in range(m)]
        for i, d in enumerate(blocks.lap_sum.diag):
            dense[i][i] = int(d)
        for i in range(m - 1):
            dense[i][i + 1] = dense[i + 1][i] = -2

        def principal_minor(drop):
            keep = [k for k in range(m) if k not in drop]
            return det_bareiss([[dense[i][j] for j in keep] for i in keep])

        ok &= closed.linear == sum(principal_minor({i}) for i in range(m))
        ok &= closed.quadratic == sum(
            principal_minor({i, j}) for i in range(m) for j in range(i + 1, m)
        )
        ok &= sp.tail_coeffs(blocks.norm_sum.char_poly()) == sp.norm_tail_coeffs_closed(n)
    _report(ok, 5, "trailing coefficients match char polys and minor sums, n=1..6")
    assert ok


def test_criterion_6_interior_minors_and_class_sums():
    blocks = sp.mirror_blocks(6)
    cases_seen = set()
    minor_ok = True
    for i in range(1, 26):
        for j in range(i + 1, 26):
            cases_seen.add((i % 4, j % 4))
            if blocks.norm_sum.interior_det(i, j) != sp.interior_det_closed(i, j):
                minor_ok = False
    coverage_ok = len(cases_seen) == 16
    sums_ok = all(
        sp.deleted_pair_class_sum(n, p, q) == sp.deleted_pair_class_sum_closed(n, p, q)
        for n in range(1, 7) for p in range(4) for q in range(4)
    )
    ok = minor_ok and coverage_ok and sums_ok
    _report(ok, 6, f"all 300 interior minors at n=6 ({len(cases_seen)}/16 cases) "
                   "and all 16 class sums for n=1..6")
    assert ok


def test_criterion_7_minor_sequences():
    ok = True
    for n in range(1, 7):
        leading, trailing, interior = sp.lap_minor_sequences(n)
        ok &= leading == [2**i for i in range(4 * n + 1)]
        ok &= trailing == leading
        ok &= interior == [(i + 1) * 2**i for i in range(4 * n)]
        x_cont, y_cont = sp.norm_minor_sequences(n)
        x_rec, y_rec = sp.norm_minor_recurrences(n)
        ok &= x_cont == x_rec == [sp.norm_leading_closed(i) for i in range(4 * n + 1)]
        ok &= y_cont == y_rec == [sp.norm_trailing_closed(i) for i in range(4 * n + 1)]
    _report(ok, 7, "minor sequences: recurrences == closed forms == continuants, n=1..6")
    assert ok


def test_criterion_8_distance_adjudication(chains, full_report):
    # comparisons present in the report, with explicit statuses
    by_key = {(r.claim_id, r.n): r for r in full_report.records}
    recorded = all(
        (claim, n) in by_key
        for claim in ("wiener.claim-vs-oracle", "gutman.claim-vs-oracle")
        for n in range(1, 9)
    )
    statuses_valid = all(
        by_key[(claim, n)].status in vf.STATUSES
        for claim in ("wiener.claim-vs-oracle", "gutman.claim-vs-oracle")
        for n in range(1, 9)
    )
    # the oracle itself must be internally consistent
    consistent = True
    for n in range(1, 9):
        g = chains[n]
        index = {v: k for k, v in enumerate(g.vertices)}
        size = g.vertex_count
        dist = [[0] * size for _ in range(size)]
        for v in g.vertices:
            row = dist[index[v]]
            for w, d in g.distances_from(v).items():
                row[index[w]] = d
        for a in range(size):
            for b in range(a + 1, size):
                if dist[a][b] != dist[b][a]:
                    consistent = False
        for a in range(size):
            da = dist[a]
            for b in range(size):
                dab = da[b]
                db = dist[b]
                for c in range(size):
                    if da[c] > dab + db[c]:
                        consistent = False
    ok = recorded and statuses_valid and consistent
    findings = {
        n: (by_key[("wiener.claim-vs-oracle", n)].claimed,
            by_key[("wiener.claim-vs-oracle", n)].computed)
        for n in (1, 8)
    }
    _report(ok, 8, f"distance claims recorded for n=1..8 (e.g. wiener {findings}); "
                   "BFS symmetric and metric")
    assert recorded and statuses_valid
    assert consistent


def test_criterion_9_limit_ratios(chains):
    quarter = Fraction(1, 4)
    w8 = oracles.wiener_index(chains[8])
    gut8 = oracles.gutman_index(chains[8])
    r_kf_8, r_kfstar_8 = formulas.limit_ratios(8, wiener=w8, gutman=gut8)
    near_ok = (abs(r_kf_8 - quarter) < Fraction(5, 100)
               and abs(r_kfstar_8 - quarter) < Fraction(5, 100))
    r_kf_far, r_kfstar_far = formulas.limit_ratios(1000)
    far_ok = (abs(r_kf_far - quarter) < Fraction(1, 100)
              and abs(r_kfstar_far - quarter) < Fraction(1, 100))
    ok = near_ok and far_ok
    _report(ok, 9, f"n=8 oracle ratios ({float(r_kf_8):.4f}, {float(r_kfstar_8):.4f}) "
                   f"within 0.05; n=1000 ({float(r_kf_far):.4f}, {float(r_kfstar_far):.4f}) "
                   "within 0.01")
    assert ok


def test_criterion_10_performance():
    closed_rows = bench.run_bench([1000], oracle_limit=0)
    closed_fast = closed_rows[0].closed_seconds < 0.010
    oracle_rows = bench.run_bench([20], oracle_limit=24)
    oracle_row = oracle_rows[0]
    oracle_fast = oracle_row.oracle_seconds < 120
    flags_ok = oracle_row.exact_match is True
    ok = closed_fast and oracle_fast and flags_ok
    _report(ok, 10, f"closed form at n=1000: {closed_rows[0].closed_seconds * 1000:.2f} ms; "
                    f"full oracle at n=20: {oracle_row.oracle_seconds:.1f} s; "
                    f"exact-equality flag: {oracle_row.exact_match}")
    assert closed_fast, "closed-form evaluation exceeded 10 ms"
    assert oracle_fast, "oracle bundle exceeded 120 s"
    assert flags_ok
