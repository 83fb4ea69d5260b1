from fractions import Fraction

import pytest

from radiomesh import InvalidParameterError, ParityError, ProductParams
from radiomesh import formulas as F


def P(m, n):
    return ProductParams(m, n)


def test_diam_formula():
    assert F.diam_formula(P(4, 5)) == 8
    assert F.diam_formula(P(2, 2)) == 4
    assert F.diam_formula(P(5, 4)) == 10


def test_diam_formula_rejects_single_leaf():
    with pytest.raises(InvalidParameterError, match="2m - 1"):
        F.diam_formula(P(4, 1))


@pytest.mark.parametrize(
    "params,expected",
    [(P(2, 1), 8), (P(6, 4), 39), (P(4, 5), 33)],
)
def test_cor5_pair_bound(params, expected):
    assert F.cor5_pair_bound(params) == expected


def test_cor5_pair_bound_parity():
    with pytest.raises(ParityError):
        F.cor5_pair_bound(P(3, 2))


@pytest.mark.parametrize(
    "params,expected",
    [(P(2, 1), 16), (P(4, 5), 264), (P(2, 2), 22)],
)
def test_thm6_even_bound(params, expected):
    assert F.thm6_even_bound(params) == expected


def test_thm6_equals_pair_count_times_pair_bound():
    for m in range(2, 11, 2):
        for n in range(1, 7):
            params = P(m, n)
            assert F.thm6_even_bound(params) == Fraction(m * m, 2) * F.cor5_pair_bound(params)


@pytest.mark.parametrize(
    "params,expected",
    [(P(3, 2), 9), (P(5, 5), 36), (P(5, 4), 29)],
)
def test_cor8_pair_bound(params, expected):
    assert F.cor8_pair_bound(params) == expected


def test_thm9_both_forms():
    values = F.thm9_gstar_bound(P(5, 5))
    assert values.statement == Fraction(115, 2)
    assert values.statement.denominator == 2  # non-integral, surfaced as-is
    assert values.closing == 370
    assert F.thm9_gstar_bound(P(3, 1)).statement == Fraction(9, 2)


def test_thm9_statement_and_closing_genuinely_differ():
    for m in (3, 5, 7):
        for n in (1, 2, 5):
            values = F.thm9_gstar_bound(P(m, n))
            assert values.closing - values.statement == Fraction(2 * m**3 * n, 4)


def test_path_span_components():
    assert F.cor13_span_f3(P(5, 5)) == 75
    assert F.span_f1(P(5, 5)) == 39
    assert F.span_f2(P(5, 5)) == 36
    assert F.span_f4(P(3, 2)) == 4


def test_f3_splits_into_f1_plus_f2():
    for m in range(3, 10, 2):
        for n in range(2, 7):
            params = P(m, n)
            assert F.cor13_span_f3(params) == F.span_f1(params) + F.span_f2(params)


def test_f2_needs_two_leaves():
    with pytest.raises(InvalidParameterError):
        F.span_f2(P(5, 1))


@pytest.mark.parametrize(
    "params,expected",
    [(P(5, 5), 90), (P(3, 2), 28), (P(3, 1), 19)],
)
def test_thm14_bound(params, expected):
    assert F.thm14_bound(params) == expected


@pytest.mark.parametrize(
    "params,expected",
    [(P(5, 5), 80), (P(5, 4), 66), (P(7, 2), 94)],
)
def test_thm16_bound(params, expected):
    assert F.thm16_bound(params) == expected


def test_thm16_degenerate_flag():
    assert F.thm16_degenerate(P(3, 2))
    assert not F.thm16_degenerate(P(5, 2))


@pytest.mark.parametrize(
    "params,expected",
    [(P(5, 5), 179), (P(3, 2), 40), (P(5, 1), 63)],
)
def test_thm17_bound(params, expected):
    assert F.thm17_bound(params) == expected


def test_thm17_proof_line_is_cubic_and_differs():
    params = P(5, 2)
    assert F.thm17_proof_line_value(params) != F.thm17_bound(params)
    # the cubic literal at (5, 2): (750 - 100 + 35 + 6 + 3)/2
    assert F.thm17_proof_line_value(params) == Fraction(694, 2)


@pytest.mark.parametrize(
    "params,expected",
    [(P(5, 5), 549), (P(3, 1), 49), (P(3, 2), 70)],
)
def test_thm18_odd_bound(params, expected):
    assert F.thm18_odd_bound(params) == expected


@pytest.mark.parametrize(
    "params,expected",
    [(P(4, 5), 264), (P(5, 5), 549), (P(2, 1), 16)],
)
def test_combined_bound_dispatch(params, expected):
    assert F.combined_bound(params) == expected


def test_combined_bound_matches_parity_evaluators():
    for m in range(2, 8):
        for n in range(1, 5):
            params = P(m, n)
            direct = (
                Fraction(F.thm6_even_bound(params))
                if m % 2 == 0
                else F.thm18_odd_bound(params)
            )
            assert F.combined_bound(params) == direct


def test_even_pair_distance_cases():
    assert F.even_pair_distance(4, True, True).predicted == 2
    assert F.even_pair_distance(4, True, False).predicted == 3
    assert F.even_pair_distance(6, False, False).predicted == 6
    assert F.even_pair_distance(6, True, True).predicted == 3
    with pytest.raises(ParityError):
        F.even_pair_distance(5, True, True)


def test_odd_pair_distance_literal_vs_operative():
    both = F.odd_pair_distance(5, True, True)
    assert both.predicted == Fraction(3, 2) and not both.integral
    assert both.operative == 2
    one = F.odd_pair_distance(5, True, False)
    assert one.predicted == Fraction(7, 2) and one.operative == 3
    neither = F.odd_pair_distance(5, False, False)
    assert neither.predicted == neither.operative == 4
    with pytest.raises(ParityError):
        F.odd_pair_distance(4, True, True)


def test_phase3_label_targets_are_just_values():
    assert F.phase3_label_case_center(5) == Fraction(9, 2)
    assert F.phase3_label_case_other(5) == 12


def test_vertex_count_comparison():
    rows = F.vertex_count_comparison(range(2, 7), 5)
    by_m = {row.m: row for row in rows}
    assert by_m[4].product_vertices == 96
    assert by_m[4].star_path_vertices == 24
    assert all(row.ratio == row.m for row in rows)
    with pytest.raises(InvalidParameterError):
        F.vertex_count_comparison([1], 5)


def test_bounds_table_contents():
    even_rows = {row.bound_id for row in F.bounds_table(P(4, 2))}
    assert F.BoundId.THM6_EVEN_BOUND in even_rows
    assert F.BoundId.COR8_PAIR_BOUND not in even_rows

    odd_rows = F.bounds_table(P(5, 5))
    by_id = {row.bound_id: row for row in odd_rows}
    assert by_id[F.BoundId.THM9_GSTAR].value == Fraction(115, 2)
    assert not by_id[F.BoundId.THM9_GSTAR].integral

    csv = F.bounds_table_csv(odd_rows)
    assert csv.splitlines()[0] == "bound_id,m,n,value_num,value_den,integral"
    assert "Thm9GStar,5,5,115,2,false" in csv
