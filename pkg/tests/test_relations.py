import pytest
from hypothesis import given, strategies as st

from coeffkit import relations as rel
from coeffkit.errors import CoefficientOverflowError, DomainError, PositionError
from coeffkit.models import PatternSpec, RelationQuery, UniqueRow
from coeffkit.oracle import expand_power_sum, unique_row_oracle


@pytest.mark.parametrize("l, r, expected", [(2, 7, 1), (3, 5, 5), (4, 3, 5), (4, 1, 1)])
def test_row_width(l, r, expected):
    assert rel.row_width(l, r) == expected


@pytest.mark.parametrize("l, r", [(1, 3), (5, 3), (3, 0)])
def test_row_width_domain(l, r):
    with pytest.raises(DomainError):
        rel.row_width(l, r)


def test_g2():
    assert rel.g2(1) == 1
    assert rel.g2(2) == 2
    assert rel.g2(10**6) == 10**6
    with pytest.raises(DomainError):
        rel.g2(0)


@pytest.mark.parametrize("n, expected", [(3, 6), (1, 1), (5, 15)])
def test_g3_edge(n, expected):
    assert rel.g3_edge(n) == expected


@pytest.mark.parametrize("n, k, expected", [
    (3, 2, 7),
    (5, 3, 19),
    (4, 1, 10),
    # brute-force enumeration: x^9 in (x^6 + ... + 1)^3
    (7, 4, 37),
])
def test_g3(n, k, expected):
    assert rel.g3(n, k) == expected


def test_g3_fixture_matches_brute_force(brute):
    assert brute(6, 3, 9) == rel.g3(7, 4)


@pytest.mark.parametrize("n, expected", [(2, 4), (3, 10), (4, 20)])
def test_g4_edge(n, expected):
    assert rel.g4_edge(n) == expected


@pytest.mark.parametrize("n, k, expected", [(3, 2, 16), (4, 4, 44), (2, 2, 6), (5, 3, 68)])
def test_g4(n, k, expected):
    assert rel.g4(n, k) == expected


def test_g4_fixture_matches_brute_force(brute):
    assert brute(4, 4, 6) == rel.g4(5, 3) == 68


@pytest.mark.parametrize("fn", [rel.g3, rel.g4, rel.g4_as_printed])
@pytest.mark.parametrize("n, k", [(3, 0), (3, 4), (0, 1)])
def test_position_errors(fn, n, k):
    with pytest.raises(DomainError):
        fn(n, k)


def test_position_error_is_domain_error():
    with pytest.raises(PositionError):
        rel.g3(2, 3)


def test_g4_as_printed_erratum():
    assert rel.g4_as_printed(2, 2) == 2
    assert rel.g4(2, 2) == 6
    assert unique_row_oracle(4, 2).values[1] == 6


@given(st.integers(1, 2000), st.data())
def test_as_printed_is_short_by_the_edge(n, data):
    k = data.draw(st.integers(1, n))
    assert rel.g4(n, k) - rel.g4_as_printed(n, k) == rel.g4_edge(n)


@pytest.mark.parametrize("l, r, k, expected", [(4, 3, 4, 16), (3, 1, 1, 1), (4, 4, 6, 31)])
def test_unique_value(l, r, k, expected):
    assert rel.unique_value(RelationQuery(l, r, k)) == expected


def test_relation_query_rejects_bad_position():
    with pytest.raises(PositionError):
        RelationQuery(4, 3, 6)
    with pytest.raises(PositionError):
        RelationQuery(2, 5, 2)


@pytest.mark.parametrize("l, r, expected", [
    (3, 4, [10, 12, 12, 10]),
    (4, 2, [4, 6, 4]),
    (2, 3, [3]),
])
def test_unique_row_closed(l, r, expected):
    row = rel.unique_row_closed(l, r)
    assert isinstance(row, UniqueRow)
    assert list(row) == expected


def test_unique_row_as_printed_only_breaks_interior():
    assert list(rel.unique_row_as_printed(1)) == [1]
    assert list(rel.unique_row_as_printed(2)) == [4, 2, 4]


@pytest.mark.parametrize("l", [2, 3, 4])
@pytest.mark.parametrize("r", [1, 2, 5, 17, 64])
def test_rows_positive_and_palindromic(l, r):
    row = rel.unique_row_closed(l, r)
    assert row.is_palindrome()
    assert all(v > 0 for v in row)


def test_edges_strictly_increasing():
    g3 = [rel.g3_edge(n) for n in range(1, 2001)]
    g4 = [rel.g4_edge(n) for n in range(1, 2001)]
    assert all(a < b for a, b in zip(g3, g3[1:]))
    assert all(a < b for a, b in zip(g4, g4[1:]))


def test_example_one_closed_route():
    assert rel.expansion_closed(PatternSpec(n=2, l=3)) == [1, 3, 6, 7, 6, 3, 1]


@pytest.mark.parametrize("l", [2, 3, 4])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 8, 25])
def test_expansion_closed_matches_oracle(n, l):
    spec = PatternSpec(n, l)
    assert rel.expansion_closed(spec) == expand_power_sum(spec)


def test_coefficient_closed_rejects():
    with pytest.raises(DomainError):
        rel.coefficient_closed(PatternSpec(2, 5), 1)
    with pytest.raises(DomainError):
        rel.coefficient_closed(PatternSpec(2, 3), 7)


G4_EDGE_MAX_N = 3_329_020


def test_g4_edge_overflow_boundary():
    assert rel.g4_edge(G4_EDGE_MAX_N) == G4_EDGE_MAX_N * (G4_EDGE_MAX_N + 1) * (G4_EDGE_MAX_N + 2) // 6
    with pytest.raises(CoefficientOverflowError):
        rel.g4_edge(G4_EDGE_MAX_N + 1)


def test_overflow_names_query():
    with pytest.raises(CoefficientOverflowError) as info:
        rel.unique_value(RelationQuery(4, G4_EDGE_MAX_N + 1, 1))
    assert info.value.context == {"l": 4, "r": G4_EDGE_MAX_N + 1, "k": 1}
    assert f"r={G4_EDGE_MAX_N + 1}" in str(info.value)


def test_g3_overflow():
    with pytest.raises(CoefficientOverflowError):
        rel.g3(2**33, 2**32)
