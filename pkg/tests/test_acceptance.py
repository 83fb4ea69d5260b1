"""Acceptance suite: one checked, printed pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as
they are produced; without ``-s`` they still appear for failing
criteria. All comparisons are exact (tolerance 0).
"""
import time
from fractions import Fraction

from radiomesh import (
    CellIndexing,
    ProductParams,
    all_pairs_distances,
    build_construction_labeling,
    build_mesh,
    build_path,
    build_product_graph,
    build_star,
    exact_rn,
    permutation_oracle,
    validate,
)
from radiomesh import formulas as F
from radiomesh.claims import (
    Verdict,
    VerifyConfig,
    diameter_claim,
    distance_claims,
    run_verification,
)


def _report(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  [{detail}]" if detail else ""
    print(f"ACCEPTANCE {number} {name}: {status}{suffix}")
    assert ok, f"criterion {number} ({name}) failed {detail}"


def test_criterion_1_diameter_law():
    start = time.monotonic()
    ok = True
    for m in (2, 3, 4, 5):
        for n in (2, 3):
            dm = all_pairs_distances(build_product_graph(ProductParams(m, n)).graph)
            ok = ok and dm.diameter == 2 * m
        # single-leaf star: diameter drops to 2m - 1 and the harness
        # flags it as a Mismatch verdict
        params = ProductParams(m, 1)
        dm = all_pairs_distances(build_product_graph(params).graph)
        ok = ok and dm.diameter == 2 * m - 1
        ok = ok and diameter_claim(params, dm).verdict is Verdict.MISMATCH
    elapsed = time.monotonic() - start
    _report(1, "diameter law", ok and elapsed < 5.0, f"{elapsed:.1f}s")


def test_criterion_2_oracle_equivalence():
    start = time.monotonic()
    instances = (
        [build_path(m) for m in range(1, 10)]
        + [build_star(n) for n in range(1, 9)]
        + [build_mesh(2), build_product_graph(ProductParams(2, 1)).graph]
    )
    ok = True
    for g in instances:
        assert g.num_vertices <= 9
        ok = ok and exact_rn(g).value == permutation_oracle(g).value
    elapsed = time.monotonic() - start
    _report(2, "oracle equivalence", ok and elapsed < 60.0, f"{len(instances)} graphs, {elapsed:.1f}s")


def test_criterion_3_known_small_values():
    values = {
        "P2": permutation_oracle(build_path(2)).value,
        "P3": permutation_oracle(build_path(3)).value,
    }
    star = {n: permutation_oracle(build_star(n)).value for n in (1, 2, 3, 4)}
    ok = values["P2"] == 1 and values["P3"] == 3
    ok = ok and all(star[n] == n + 1 for n in (2, 3, 4))
    # the n + 1 formula starts at n = 2: a one-leaf star is a single
    # edge, so its radio number is 1, matching the P2 value above
    ok = ok and star[1] == 1 == values["P2"]
    _report(
        3,
        "known small values",
        ok,
        f"rn(P2)={values['P2']} rn(P3)={values['P3']} stars={star} "
        "(single-leaf star equals P2, n+1 applies from n=2)",
    )


def test_criterion_4_formula_determinism():
    ok = F.thm6_even_bound(ProductParams(2, 1)) == 16
    ok = ok and F.thm6_even_bound(ProductParams(4, 5)) == 264
    ok = ok and F.thm18_odd_bound(ProductParams(5, 5)) == 549
    ok = ok and F.thm18_odd_bound(ProductParams(3, 1)) == 49
    for m in range(2, 11, 2):
        for n in range(1, 7):
            params = ProductParams(m, n)
            ok = ok and F.thm6_even_bound(params) == Fraction(m * m, 2) * F.cor5_pair_bound(params)
    for m in range(3, 10, 2):
        for n in range(2, 7):
            params = ProductParams(m, n)
            ok = ok and F.cor13_span_f3(params) == F.span_f1(params) + F.span_f2(params)
    _report(4, "formula determinism", ok)


def test_criterion_5_worked_example_adjudication():
    config = VerifyConfig(even_m=(2,), odd_m=(), ns=(1,), exact_vertex_limit=8)
    rows = {r.claim_id: r for r in run_verification(config)}
    ex31 = rows["Ex3.1.Value"]
    ex32 = rows["Ex3.2.Value"]
    ok = ex31.verdict is Verdict.MISMATCH and ex32.verdict is Verdict.MISMATCH
    ok = ok and ex31.expected == 304 and ex31.observed == 264
    ok = ok and ex32.expected == 648 and ex32.observed == 549
    _report(
        5,
        "worked-example adjudication",
        ok,
        "Ex3.1 304 vs 264, Ex3.2 648 vs 549, both preserved",
    )


def test_criterion_6_construction_validity():
    start = time.monotonic()
    ok = True
    details = []
    for m, n in [(2, 2), (4, 2), (6, 2), (3, 2), (5, 2), (5, 4)]:
        params = ProductParams(m, n)
        pg = build_product_graph(params)
        dm = all_pairs_distances(pg.graph)
        built = build_construction_labeling(params, product=pg, dm=dm)
        ok = ok and validate(pg.graph, dm, built.greedy).valid
        bound = F.combined_bound(params)
        details.append(f"({m},{n}) span={built.greedy_span} bound={bound}")
    elapsed = time.monotonic() - start
    _report(6, "construction validity", ok and elapsed < 120.0, "; ".join(details))


def test_criterion_7_distance_case_adjudication():
    ok = True
    first_pass = []
    for m in (2, 4, 6, 3, 5):
        params = ProductParams(m, 2)
        dm = all_pairs_distances(build_product_graph(params).graph)
        for scheme in CellIndexing:
            rows = distance_claims(params, scheme, dm)
            for row in rows:
                # BFS always answers, so every instance gets a grounded verdict
                ok = ok and row.observed is not None
                ok = ok and row.verdict in (Verdict.MATCH, Verdict.MISMATCH)
            first_pass.extend(rows)
    # deterministic across runs
    second_pass = []
    for m in (2, 4, 6, 3, 5):
        params = ProductParams(m, 2)
        dm = all_pairs_distances(build_product_graph(params).graph)
        for scheme in CellIndexing:
            second_pass.extend(distance_claims(params, scheme, dm))
    ok = ok and first_pass == second_pass
    matches = sum(r.verdict is Verdict.MATCH for r in first_pass)
    _report(
        7,
        "distance-case adjudication",
        ok,
        f"{len(first_pass)} case instances, {matches} match / {len(first_pass) - matches} mismatch",
    )


def test_criterion_8_exact_bound_sanity_at_desk_scale():
    start = time.monotonic()
    assert F.thm6_even_bound(ProductParams(2, 2)) == 22
    config = VerifyConfig(even_m=(2,), odd_m=(), ns=(2,), exact_vertex_limit=12)
    rows = {r.claim_id: r for r in run_verification(config)}
    row = rows["Thm6.Bound"]
    elapsed = time.monotonic() - start
    # an exact observed value proves the 12-vertex search finished in
    # budget; the verdict itself may fall either way
    ok = row.expected == 22 and row.observed is not None and elapsed < 60.0
    _report(
        8,
        "exact-bound sanity at desk scale",
        ok,
        f"exact rn={row.observed} vs bound 22 -> {row.verdict.value}, {elapsed:.1f}s",
    )


def test_criterion_9_vertex_count_comparison():
    rows5 = F.vertex_count_comparison(range(2, 7), 5)
    by_m = {row.m: row for row in rows5}
    ok = by_m[4].product_vertices == 96 and by_m[5].product_vertices == 150
    ok = ok and all(row.ratio == row.m for row in rows5)
    _report(9, "vertex-count comparison", ok, "96 at (4,5); 150 at (5,5); ratio = m")
