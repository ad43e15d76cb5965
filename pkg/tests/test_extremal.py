import pytest
from hypothesis import given, strategies as st

from posetao import extremal as ex


def lambda_by_recursion(limit):
    # plain-python recurrence, independent of the numpy table
    lam = [0, 1]
    for a in range(2, limit + 1):
        lam.append(max(lam[f] + lam[a - f] + a - f for f in range((a + 1) // 2, a)))
    return lam


def test_lambda_examples():
    assert ex.lambda_closed(8) == 20
    assert ex.lambda_closed(0) == 0
    assert [ex.lambda_closed(a) for a in (3, 5, 6, 7)] == [5, 10, 13, 16]
    assert ex.lambda_rec(2) == 3 and ex.lambda_rec(4) == 8


def test_lambda_first_values():
    assert [ex.lambda_closed(a) for a in range(1, 9)] == [1, 3, 5, 8, 10, 13, 16, 20]


def test_lambda_against_plain_recurrence():
    lam = lambda_by_recursion(600)
    assert all(ex.lambda_closed(a) == lam[a] == ex.lambda_rec(a) for a in range(601))


def test_lambda_powers_of_two():
    for k in range(0, 13):
        assert ex.lambda_closed(1 << k) * 2 == (1 << k) * (k + 2)


def test_argmax_properties():
    r6 = ex.lambda_argmax_properties(6)
    assert r6.values[3] == r6.values[4] == 13 > r6.values[5]
    r8 = ex.lambda_argmax_properties(8)
    assert r8.strict_for_power_of_two
    assert all(r8.values[f] < 20 for f in (5, 6, 7))
    assert ex.lambda_argmax_properties(2).ok
    for a in range(2, 300):
        assert ex.lambda_argmax_properties(a).ok


def test_lambda_h_examples():
    assert ex.lambda_h(4, 2) == 6
    assert ex.lambda_h(4, 1) == 4
    assert ex.lambda_h(6, 2) == 9
    assert ex.lambda_h(2, 0) == 0
    assert ex.lambda_h(2, 1) == 2
    for a in range(1, 65):
        assert ex.lambda_h(a, a) == ex.lambda_closed(a)


def test_lambda_h_unknown_region():
    assert ex.lambda_h(7, 3) is None
    assert ex.lambda_h(8, 2) is None
    assert ex.lambda_h(9, 1) is None


def test_lambda_h_never_exceeds_upper_bound():
    for a in range(1, 200):
        for h in range(0, a + 1):
            v = ex.lambda_h(a, h)
            if v is not None:
                assert v <= ex.lambda_h_upper(a, h)


def test_x_examples():
    assert ex.x_closed(1) == 1
    assert ex.x_closed(2) == 3
    assert ex.x_closed(3) == 7
    assert ex.x_closed(4) == 11
    assert ex.x_closed(8) == 31
    assert [ex.x_closed(a) for a in range(1, 9)] == [1, 3, 7, 11, 15, 20, 25, 31]


def test_x_powers_of_two():
    for k in range(1, 13):
        assert ex.x_closed(1 << k) == (k + 1) * (1 << k) - 1


def test_x_via_max_examples():
    assert ex.x_via_max(4) == 11
    assert ex.x_via_max(8) == 31
    assert ex.x_via_max(2) == 3
    for a in range(2, 513, 2):
        assert ex.x_via_max(a) == ex.x_closed(a)


def test_x_via_max_odd_is_unspecified():
    with pytest.raises(ex.Unspecified):
        ex.x_via_max(7)
    # h = 1 is covered by 2h >= a; h = 1 for a = 3 is not
    assert ex.x_via_max(3, {(3, 1): 3}) == 7


def test_ao_tn_examples():
    b = ex.ao_tn_bounds(12)
    assert (b.k, b.lo, b.hi, b.predicted) == (3, 5, 8, 5)
    assert not b.exact
    assert ex.ao_tn_bounds(3).predicted == 2
    b = ex.ao_tn_bounds(31)
    assert (b.k, b.lo, b.hi, b.predicted, b.exact) == (3, 5, 8, 8, True)


def test_ao_tn_at_one_element():
    # X(1) = 1 sits outside the bracket's range of validity
    b = ex.ao_tn_bounds(1)
    assert (b.k, b.lo, b.hi, b.predicted) == (1, 2, 2, 1)
    assert not b.consistent


def test_ao_tn_bracket_consistent_beyond_one():
    for n in range(2, 3000):
        assert ex.ao_tn_bounds(n).consistent


def test_asymptotic_ratio_envelope():
    ratios = [ex.asymptotic_check(1 << k) for k in range(6, 14)]
    assert all(1.0 < r < 1.5 for r in ratios)


def test_extremal_table():
    table = ex.ExtremalTable.build(64, oracle={(7, 3): 12})
    assert table.check() == []
    assert table.lam_h[(4, 1)] == (4, "closed-form")
    assert table.lam_h[(7, 3)] == (12, "oracle")
    assert (8, 2) not in table.lam_h


def test_input_guards():
    with pytest.raises(ValueError):
        ex.lambda_closed(-1)
    with pytest.raises(ValueError):
        ex.lambda_closed(ex.A_MAX + 1)
    with pytest.raises(ValueError):
        ex.x_closed(0)


@given(st.integers(1, 5000))
def test_x_is_twice_lambda_identity(a):
    if a >= 2:
        assert ex.x_closed(a) == ex.x_from_lambda(a)
    assert ex.lambda_closed(a + 1) > ex.lambda_closed(a)
    assert ex.x_closed(a + 1) > ex.x_closed(a)
